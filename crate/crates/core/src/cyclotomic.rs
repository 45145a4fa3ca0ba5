//! Exact arithmetic in ℤ[ξ_p] and ℚ(ξ_p), ξ_p a primitive p-th root of unity.
//!
//! Elements are stored on the power basis {ξ^j : 0 ≤ j ≤ p−2}; the relation
//! 1 + ξ + ⋯ + ξ^{p−1} = 0 eliminates ξ^{p−1}. On this basis equality is
//! coefficientwise and "is an integer" is a zero test on coefficients 1..p−2.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// An element of ℤ[ξ_p] in the reduced power basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u64) -> Self {
        CycInt {
            p,
            coeffs: vec![BigInt::zero(); (p - 1) as usize],
        }
    }

    pub fn from_int<T: Into<BigInt>>(p: u64, value: T) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = value.into();
        out
    }

    /// ξ^j, j taken mod p.
    pub fn root(p: u64, j: u64) -> Self {
        let mut raw = vec![BigInt::zero(); p as usize];
        raw[(j % p) as usize] = BigInt::one();
        Self::from_raw(p, raw)
    }

    /// Collapse a length-p exponent vector via ξ^{p−1} = −(1 + ξ + ⋯ + ξ^{p−2}).
    fn from_raw(p: u64, mut raw: Vec<BigInt>) -> Self {
        debug_assert_eq!(raw.len(), p as usize);
        let top = raw.pop().unwrap();
        if !top.is_zero() {
            for c in raw.iter_mut() {
                *c -= &top;
            }
        }
        CycInt { p, coeffs: raw }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn set_coeff(&mut self, e: usize, value: BigInt) {
        self.coeffs[e] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_p(&self, other: &CycInt) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_p(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check_p(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_p(other)?;
        let p = self.p as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[(i + j) % p] += a * b;
            }
        }
        Ok(Self::from_raw(self.p, raw))
    }

    pub fn mul_int(&self, k: &BigInt) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul_i64(&self, k: i64) -> CycInt {
        self.mul_int(&BigInt::from(k))
    }

    /// Multiply by ξ^j (an exponent rotation).
    pub fn mul_root(&self, j: u64) -> CycInt {
        let p = self.p as usize;
        let j = (j % self.p) as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(e + j) % p] += c;
            }
        }
        Self::from_raw(self.p, raw)
    }

    /// σ_s(ξ) = ξ^s for a nonzero residue s.
    pub fn galois(&self, s: u64) -> Result<CycInt> {
        if s % self.p == 0 {
            return Err(Error::BadGaloisIndex(s));
        }
        let p = self.p as usize;
        let s = (s % self.p) as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[e * s % p] += c;
            }
        }
        Ok(Self::from_raw(self.p, raw))
    }

    /// Complex conjugation, σ_{p−1}.
    pub fn conjugate(&self) -> CycInt {
        self.galois(self.p - 1).expect("p-1 is a nonzero residue")
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// The rational integer m when the element equals m·ξ^0.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Decompose as ε·scale·ξ^j with ε ∈ {+1,−1}; `None` unless exactly one
    /// such pair exists (unique whenever scale ≠ 0, since ℤ[ξ_p] is a domain).
    pub fn match_scaled_root(&self, scale: &CycInt) -> Option<(i64, u64)> {
        if scale.is_zero() {
            return None;
        }
        let mut found = None;
        for j in 0..self.p {
            let candidate = scale.mul_root(j);
            let sign = if *self == candidate {
                1
            } else if *self == candidate.neg() {
                -1
            } else {
                continue;
            };
            if found.is_some() {
                return None;
            }
            found = Some((sign, j));
        }
        found
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{e}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Gauss sum Σ_{y∈𝔽_p*} η(y)·ξ^y = √p*, squaring to η(−1)·p.
pub fn gauss_sum(field: &PrimeField) -> CycInt {
    let p = field.p();
    let mut acc = CycInt::zero(p);
    for y in 1..p {
        let eta = field.quadratic_character(y).unwrap();
        acc = acc
            .add(&CycInt::root(p, y).mul_i64(eta))
            .expect("same modulus");
    }
    acc
}

/// An element of ℚ(ξ_p): a CycInt numerator over a positive integer
/// denominator, reduced by the gcd of all numerator coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycRat {
    num: CycInt,
    den: BigUint,
}

impl CycRat {
    pub fn new(num: CycInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() {
            (num.neg(), (-den).to_biguint().unwrap())
        } else {
            (num, den.to_biguint().unwrap())
        };
        let mut out = CycRat { num, den };
        out.reduce();
        out
    }

    pub fn from_cyc(num: CycInt) -> Self {
        CycRat {
            num,
            den: BigUint::one(),
        }
    }

    pub fn from_int<T: Into<BigInt>>(p: u64, value: T) -> Self {
        Self::from_cyc(CycInt::from_int(p, value))
    }

    pub fn zero(p: u64) -> Self {
        Self::from_cyc(CycInt::zero(p))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = BigUint::one();
            return;
        }
        let mut g = self.den.clone();
        for c in self.num.coeffs() {
            g = g.gcd(&c.magnitude());
            if g.is_one() {
                return;
            }
        }
        let gi = BigInt::from(g.clone());
        self.num.coeffs = self.num.coeffs.iter().map(|c| c / &gi).collect();
        self.den /= g;
    }

    pub fn p(&self) -> u64 {
        self.num.p()
    }

    pub fn num(&self) -> &CycInt {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &CycRat) -> Result<CycRat> {
        let lden = BigInt::from(self.den.clone());
        let rden = BigInt::from(other.den.clone());
        let num = self.num.mul_int(&rden).add(&other.num.mul_int(&lden))?;
        Ok(CycRat::new(num, &lden * &rden))
    }

    pub fn sub(&self, other: &CycRat) -> Result<CycRat> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycRat {
        CycRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &CycRat) -> Result<CycRat> {
        let num = self.num.mul(&other.num)?;
        Ok(CycRat::new(num, BigInt::from(&self.den * &other.den)))
    }

    pub fn mul_ratio(&self, num: i64, den: i64) -> CycRat {
        assert!(den != 0);
        CycRat::new(
            self.num.mul_i64(num),
            BigInt::from(self.den.clone()) * BigInt::from(den),
        )
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real()
    }

    /// The exact cyclotomic integer, if the denominator has cleared.
    pub fn as_cyc_int(&self) -> Option<CycInt> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// The exact rational integer, if this is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_integer()
    }

    /// Rational value as (numerator, denominator) when in ℚ.
    pub fn as_rational(&self) -> Option<(BigInt, BigUint)> {
        self.num.as_integer().map(|n| (n, self.den.clone()))
    }

    /// Sign test for rational values; `None` when not rational.
    pub fn is_nonnegative_rational(&self) -> Option<bool> {
        self.as_rational().map(|(n, _)| !n.is_negative())
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(p: u64, coeffs: &[i64]) -> CycInt {
        let mut out = CycInt::zero(p);
        for (i, &c) in coeffs.iter().enumerate() {
            out.coeffs[i] = BigInt::from(c);
        }
        out
    }

    #[test]
    fn root_power_wraps() {
        let p = 5;
        let x = CycInt::root(p, 1);
        let x4 = CycInt::root(p, 4);
        assert_eq!(x.mul(&x4).unwrap(), CycInt::from_int(p, 1));
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        for p in [3u64, 5, 7] {
            let mut acc = CycInt::zero(p);
            for j in 0..p {
                acc = acc.add(&CycInt::root(p, j)).unwrap();
            }
            assert!(acc.is_zero());
        }
        // ξ + ξ^2 + ξ^3 + ξ^4 = −1 at p = 5.
        let mut acc = CycInt::zero(5);
        for j in 1..5 {
            acc = acc.add(&CycInt::root(5, j)).unwrap();
        }
        assert_eq!(acc.as_integer().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn gauss_sum_squares_to_p_star() {
        for p in [3u64, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            let g = gauss_sum(&f);
            let sq = g.mul(&g).unwrap();
            assert_eq!(
                sq.as_integer().unwrap(),
                BigInt::from(f.eta_minus_one() * p as i64)
            );
            // Real exactly when p ≡ 1 (mod 4).
            assert_eq!(g.is_real(), p % 4 == 1);
            // σ_s(√p*) = η(s)·√p*.
            for s in 1..p {
                let eta = f.quadratic_character(s).unwrap();
                assert_eq!(g.galois(s).unwrap(), g.mul_i64(eta));
            }
            // conj(√p*) = η(−1)·√p*.
            assert_eq!(g.conjugate(), g.mul_i64(f.eta_minus_one()));
        }
    }

    #[test]
    fn galois_on_roots() {
        let p = 7;
        for s in 1..p {
            for b in 0..p {
                assert_eq!(
                    CycInt::root(p, b).galois(s).unwrap(),
                    CycInt::root(p, s * b % p)
                );
            }
        }
        assert!(CycInt::root(p, 1).galois(0).is_err());
        assert!(CycInt::root(5, 1).add(&CycInt::root(7, 1)).is_err());
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(CycInt::zero(5).as_integer().unwrap(), BigInt::zero());
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(gauss_sum(&f5).as_integer(), None);
        assert_eq!(cyc(5, &[7, 0, 0, 0]).as_integer().unwrap(), BigInt::from(7));
        assert_eq!(cyc(5, &[7, 1, 0, 0]).as_integer(), None);
    }

    #[test]
    fn conjugate_basics() {
        let p = 7;
        // conj(ξ) = ξ^{p−1}; ξ + ξ^{p−1} is real.
        assert_eq!(CycInt::root(p, 1).conjugate(), CycInt::root(p, p - 1));
        let real = CycInt::root(p, 1).add(&CycInt::root(p, p - 1)).unwrap();
        assert!(real.is_real());
        assert!(!CycInt::root(p, 1).is_real());
        assert!(CycInt::from_int(p, -3).is_real());
    }

    #[test]
    fn scaled_root_matching() {
        let p = 5;
        let scale = CycInt::from_int(p, 25);
        assert_eq!(
            scale.mul_root(3).match_scaled_root(&scale),
            Some((1, 3))
        );
        let f5 = PrimeField::new(5).unwrap();
        let gs = gauss_sum(&f5).mul_int(&BigInt::from(5));
        assert_eq!(
            gs.mul_root(2).neg().match_scaled_root(&gs),
            Some((-1, 2))
        );
        // 25ξ + 25ξ² is not of the form ±25·ξ^j.
        let bad = cyc(5, &[0, 25, 25, 0]);
        assert_eq!(bad.match_scaled_root(&scale), None);
        assert_eq!(scale.match_scaled_root(&CycInt::zero(p)), None);
    }

    #[test]
    fn cycrat_reduction_and_ops() {
        let p = 5;
        let half = CycRat::new(CycInt::from_int(p, 2), BigInt::from(4));
        assert_eq!(half.den(), &BigUint::from(2u32));
        let one = half.add(&half).unwrap();
        assert_eq!(one.as_integer().unwrap(), BigInt::one());
        let third = CycRat::new(CycInt::from_int(p, 1), BigInt::from(3));
        let prod = third.mul(&CycRat::from_int(p, 6)).unwrap();
        assert_eq!(prod.as_integer().unwrap(), BigInt::from(2));
        // Negative denominators normalize.
        let neg = CycRat::new(CycInt::from_int(p, 1), BigInt::from(-2));
        assert_eq!(neg.as_rational().unwrap().0, BigInt::from(-1));
    }

    fn arb_cyc(p: u64) -> impl Strategy<Value = CycInt> {
        proptest::collection::vec(-50i64..50, (p - 1) as usize)
            .prop_map(move |v| cyc(p, &v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyc(7), b in arb_cyc(7), c in arb_cyc(7)) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&ab_c, &a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        }

        #[test]
        fn galois_composes(a in arb_cyc(11), s in 1u64..11, t in 1u64..11) {
            let lhs = a.galois(s).unwrap().galois(t).unwrap();
            let rhs = a.galois(s * t % 11).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn norm_is_nonnegative(a in arb_cyc(5)) {
            let n = a.mul(&a.conjugate()).unwrap();
            if let Some(v) = n.as_integer() {
                prop_assert!(!v.is_negative());
            }
        }

        #[test]
        fn match_round_trip(j in 0u64..7, sign in prop::bool::ANY, a in arb_cyc(7)) {
            prop_assume!(!a.is_zero());
            let eps = if sign { 1 } else { -1 };
            let v = a.mul_root(j).mul_i64(eps);
            prop_assert_eq!(v.match_scaled_root(&a), Some((eps, j)));
        }
    }
}
