//! Closed-form evaluators for the character-sum identities and parameter
//! formulas of the source constructions, used as independent oracles against
//! the brute-force pipeline. Everything is exact: values live in ℚ(ξ_p) and
//! integrality is itself an assertion.

pub mod params;
pub mod tables;

use num_bigint::BigInt;

use crate::analysis::Analysis;
use crate::cyclotomic::{gauss_sum, CycInt, CycRat};
use crate::error::{Error, Result};
use crate::field::{PointSpace, PrimeField, Subspace};
use crate::walsh::{cell_char_counts, ExpCounts, SignSetInfo};

/// p^e as an exact rational, e possibly negative.
pub fn p_pow(p: u64, e: i64) -> CycRat {
    if e >= 0 {
        CycRat::from_int(p, BigInt::from(p).pow(e as u32))
    } else {
        CycRat::new(CycInt::from_int(p, 1), BigInt::from(p).pow((-e) as u32))
    }
}

fn rat(v: CycInt) -> CycRat {
    CycRat::from_cyc(v)
}

fn int(p: u64, v: i64) -> CycRat {
    CycRat::from_int(p, v)
}

/// K^{(m)}(i, j) = Σ_{c∈𝔽_p*} ξ^{c^{1−m} j − c i}, gcd(m−1, p−1) = 1.
pub fn k_sum(field: &PrimeField, m: u64, i: u64, j: u64) -> Result<CycInt> {
    twisted_sum(field, m, i, j, false)
}

/// S^{(m)}(i, j) = Σ_{c∈𝔽_p*} η(c) ξ^{c^{1−m} j − c i}.
pub fn s_sum(field: &PrimeField, m: u64, i: u64, j: u64) -> Result<CycInt> {
    twisted_sum(field, m, i, j, true)
}

fn twisted_sum(field: &PrimeField, m: u64, i: u64, j: u64, weighted: bool) -> Result<CycInt> {
    let p = field.p();
    if m == 0 || num_integer::gcd(m as i64 - 1, p as i64 - 1) != 1 {
        return Err(Error::BadParams {
            what: "twisted exponential sum".into(),
            reason: format!("m = {m} must satisfy gcd(m-1, p-1) = 1"),
        });
    }
    // c^{1−m} with the exponent reduced mod p−1 on the unit group.
    let e = (1i64 - m as i64).rem_euclid(p as i64 - 1) as u64;
    let mut acc = CycInt::zero(p);
    for c in 1..p {
        let phase = field.sub(field.mul(field.pow(c, e), j), field.mul(c, i));
        let term = CycInt::root(p, phase);
        let term = if weighted {
            term.mul_i64(field.quadratic_character(c)?)
        } else {
            term
        };
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// The six closed clauses for K^{(m)} and S^{(m)}, each the stated value.
pub mod lemma9 {
    use super::*;

    /// K(0,0) = p−1; K(i,0) = K(0,j) = −1 for i, j ≠ 0.
    pub fn k_edge(field: &PrimeField, i: u64, j: u64) -> Option<BigInt> {
        let p = field.p();
        match (i % p, j % p) {
            (0, 0) => Some(BigInt::from(p - 1)),
            (_, 0) | (0, _) => Some(BigInt::from(-1)),
            _ => None,
        }
    }

    /// Σ_{i∈SQ} K(i,j) and Σ_{i∈NSQ} K(i,j).
    pub fn k_half_sums(field: &PrimeField, j: u64) -> (CycRat, CycRat) {
        let p = field.p();
        if j % p == 0 {
            let v = int(p, -((p as i64 - 1))).mul_ratio(1, 2);
            (v.clone(), v)
        } else {
            let eta = field.quadratic_character(j).unwrap();
            (
                int(p, eta * p as i64 + 1).mul_ratio(1, 2),
                int(p, -eta * p as i64 + 1).mul_ratio(1, 2),
            )
        }
    }

    /// Σ_{i∈𝔽_p*} K(i,j).
    pub fn k_full_sum(field: &PrimeField, j: u64) -> BigInt {
        if j % field.p() == 0 {
            BigInt::from(-(field.p() as i64 - 1))
        } else {
            BigInt::from(1)
        }
    }

    /// S(0,0) = 0; S(i,0) = η(−i)√p*; S(0,j) = η(j)√p*.
    pub fn s_edge(field: &PrimeField, i: u64, j: u64) -> Option<CycInt> {
        let p = field.p();
        let g = gauss_sum(field);
        match (i % p, j % p) {
            (0, 0) => Some(CycInt::zero(p)),
            (i, 0) if i != 0 => {
                Some(g.mul_i64(field.quadratic_character(field.neg(i)).unwrap()))
            }
            (0, j) => Some(g.mul_i64(field.quadratic_character(j).unwrap())),
            _ => None,
        }
    }

    /// Σ_{i∈SQ} S(i,j) and Σ_{i∈NSQ} S(i,j).
    pub fn s_half_sums(field: &PrimeField, j: u64) -> (CycRat, CycRat) {
        let p = field.p();
        let g = rat(gauss_sum(field));
        let em1 = field.eta_minus_one();
        if j % p == 0 {
            let v = g.mul_ratio(em1 * (p as i64 - 1), 2);
            (v.clone(), v.neg())
        } else {
            let etaj = field.quadratic_character(j).unwrap();
            (
                g.mul_ratio(-em1 - etaj, 2),
                g.mul_ratio(em1 - etaj, 2),
            )
        }
    }

    /// Σ_{i∈𝔽_p*} S(i,j).
    pub fn s_full_sum(field: &PrimeField, j: u64) -> CycInt {
        let p = field.p();
        if j % p == 0 {
            CycInt::zero(p)
        } else {
            gauss_sum(field).mul_i64(-field.quadratic_character(j).unwrap())
        }
    }
}

/// Closed S_0/S_1(f*, y): the split of 𝒲_f(y) across B_±(f*).
pub fn lemma2_s0_s1(
    field: &PrimeField,
    n: usize,
    eps_y: i64,
    fstar_y: u64,
) -> (CycRat, CycRat) {
    let p = field.p();
    let root = CycInt::root(p, fstar_y);
    if n % 2 == 0 {
        let scale = rat(root).mul(&p_pow(p, n as i64 / 2)).unwrap();
        (
            scale.mul_ratio(eps_y + 1, 2),
            scale.mul_ratio(eps_y - 1, 2),
        )
    } else {
        let scale = rat(gauss_sum(field).mul(&root).unwrap())
            .mul(&p_pow(p, (n as i64 - 1) / 2))
            .unwrap();
        let em1 = field.eta_minus_one();
        (
            scale.mul_ratio(eps_y + em1, 2),
            scale.mul_ratio(eps_y - em1, 2),
        )
    }
}

/// Value distribution |N_j(f)| of a bent function with f*(0) = j0.
pub fn lemma3_distribution(
    field: &PrimeField,
    n: usize,
    type_sign: i64,
    j0: u64,
) -> Vec<BigInt> {
    let p = field.p();
    let s = BigInt::from(type_sign);
    let mut out = Vec::with_capacity(p as usize);
    if n % 2 == 0 {
        let base = BigInt::from(p).pow(n as u32 - 1);
        let big = BigInt::from(p).pow(n as u32 / 2);
        let small = BigInt::from(p).pow(n as u32 / 2 - 1);
        for j in 0..p {
            if j == j0 % p {
                out.push(&base + &s * (&big - &small));
            } else {
                out.push(&base - &s * &small);
            }
        }
    } else {
        let base = BigInt::from(p).pow(n as u32 - 1);
        let half = BigInt::from(p).pow((n as u32 - 1) / 2);
        for j in 0..p {
            if j == j0 % p {
                out.push(base.clone());
            } else {
                let delta = field.sub(j, j0);
                let eta = field.quadratic_character(delta).unwrap();
                out.push(&base + &s * BigInt::from(eta) * &half);
            }
        }
    }
    out
}

/// Which of the six cardinality blocks applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma4Case {
    EvenN,
    OddP1Mod4,
    OddP3Mod4,
}

impl Lemma4Case {
    pub fn of(p: u64, n: usize) -> Lemma4Case {
        if n % 2 == 0 {
            Lemma4Case::EvenN
        } else if p % 4 == 1 {
            Lemma4Case::OddP1Mod4
        } else {
            Lemma4Case::OddP3Mod4
        }
    }
}

/// |c_j(f)| and |d_j(f)| given k = |B_+(f*)| and whether 0 ∈ B_+(f).
pub fn lemma4_cd_sizes(
    field: &PrimeField,
    n: usize,
    k: u64,
    zero_in_bplus: bool,
    case: Lemma4Case,
) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let p = field.p();
    if k % p != 0 {
        return Err(Error::BadParams {
            what: "lemma4_cd_sizes".into(),
            reason: format!("k = {k} must be a multiple of p"),
        });
    }
    if matches!(case, Lemma4Case::EvenN) != (n % 2 == 0) {
        return Err(Error::BadParams {
            what: "lemma4_cd_sizes".into(),
            reason: "case selector does not match the parity of n".into(),
        });
    }
    let kp = BigInt::from(k / p);
    let pn1 = BigInt::from(p).pow(n as u32 - 1);
    let mut c = Vec::with_capacity(p as usize);
    let mut d = Vec::with_capacity(p as usize);
    match case {
        Lemma4Case::EvenN => {
            let small = BigInt::from(p).pow(n as u32 / 2 - 1);
            let spread = BigInt::from(p - 1) * &small;
            if zero_in_bplus {
                c.push(&kp + &spread);
                d.push(&pn1 - &kp);
                for _ in 1..p {
                    c.push(&kp - &small);
                    d.push(&pn1 - &kp);
                }
            } else {
                c.push(kp.clone());
                d.push(&pn1 - &spread - &kp);
                for _ in 1..p {
                    c.push(kp.clone());
                    d.push(&pn1 + &small - &kp);
                }
            }
        }
        Lemma4Case::OddP1Mod4 | Lemma4Case::OddP3Mod4 => {
            let half = BigInt::from(p).pow((n as u32 - 1) / 2);
            c.push(kp.clone());
            d.push(&pn1 - &kp);
            for j in 1..p {
                let eta = BigInt::from(field.quadratic_character(j).unwrap());
                match (case, zero_in_bplus) {
                    (Lemma4Case::OddP1Mod4, true) => {
                        c.push(&kp + &eta * &half);
                        d.push(&pn1 - &kp);
                    }
                    (Lemma4Case::OddP1Mod4, false) => {
                        c.push(kp.clone());
                        d.push(&pn1 - &eta * &half - &kp);
                    }
                    (Lemma4Case::OddP3Mod4, true) => {
                        c.push(kp.clone());
                        d.push(&pn1 + &eta * &half - &kp);
                    }
                    (Lemma4Case::OddP3Mod4, false) => {
                        c.push(&kp - &eta * &half);
                        d.push(&pn1 - &kp);
                    }
                    (Lemma4Case::EvenN, _) => unreachable!(),
                }
            }
        }
    }
    Ok((c, d))
}

/// How χ_α(B) is evaluated: by the subspace formula when B is one, else by a
/// cached direct transform.
enum ChiSignSet {
    Empty,
    Subspace { perp: Subspace, dim: usize },
    Direct(ExpCounts),
}

impl ChiSignSet {
    fn new(space: &PointSpace, info: &SignSetInfo) -> ChiSignSet {
        if info.indices.is_empty() {
            return ChiSignSet::Empty;
        }
        match &info.subspace {
            Some(sub) => ChiSignSet::Subspace {
                perp: sub.orthogonal_complement(),
                dim: sub.dim(),
            },
            None => ChiSignSet::Direct(cell_char_counts(space, &info.indices)),
        }
    }

    fn eval(&self, space: &PointSpace, alpha: usize) -> CycInt {
        let p = space.p();
        match self {
            ChiSignSet::Empty => CycInt::zero(p),
            ChiSignSet::Subspace { perp, dim } => {
                if perp.contains(&space.vec(alpha)) {
                    CycInt::from_int(p, BigInt::from(p).pow(*dim as u32))
                } else {
                    CycInt::zero(p)
                }
            }
            ChiSignSet::Direct(counts) => counts.cyc(alpha),
        }
    }
}

/// Evaluator for the per-α closed character-sum formulas of a 𝒟ℬℱ function.
pub struct ChiOracle<'a> {
    analysis: &'a Analysis,
    field: PrimeField,
    t: u64,
    chi_bplus_dual: ChiSignSet,
    chi_bminus_dual: ChiSignSet,
}

impl<'a> ChiOracle<'a> {
    pub fn new(analysis: &'a Analysis) -> Result<ChiOracle<'a>> {
        let t = analysis
            .t()
            .ok_or_else(|| Error::BadParams {
                what: "ChiOracle".into(),
                reason: "function is not in the DBF class".into(),
            })?
            .h;
        let space = analysis.f.space();
        let signs_dual = analysis.signs_dual()?;
        Ok(ChiOracle {
            analysis,
            field: *space.field(),
            t,
            chi_bplus_dual: ChiSignSet::new(space, &signs_dual.0),
            chi_bminus_dual: ChiSignSet::new(space, &signs_dual.1),
        })
    }

    fn p(&self) -> u64 {
        self.field.p()
    }

    fn n(&self) -> usize {
        self.analysis.n()
    }

    fn eps(&self, alpha: usize) -> i64 {
        self.analysis.report.eps()[alpha]
    }

    fn fstar(&self, alpha: usize) -> u64 {
        self.analysis.report.dual().value(alpha)
    }

    /// χ_α(B_+(f*)) via the subspace formula when available.
    pub fn chi_bplus_dual(&self, alpha: usize) -> CycInt {
        self.chi_bplus_dual.eval(self.analysis.f.space(), alpha)
    }

    /// χ_α(B_−(f*)).
    pub fn chi_bminus_dual(&self, alpha: usize) -> CycInt {
        self.chi_bminus_dual.eval(self.analysis.f.space(), alpha)
    }

    fn delta0(&self, alpha: usize) -> i64 {
        (alpha == 0) as i64
    }

    /// Closed χ_α(c_i(f)) and χ_α(d_i(f)).
    pub fn chi_cd(&self, alpha: usize, i: u64) -> Result<(CycRat, CycRat)> {
        let p = self.p();
        let n = self.n() as i64;
        let eps = self.eps(alpha);
        let chi_plus = rat(self.chi_bplus_dual(alpha)).mul(&p_pow(p, -1)).unwrap();
        let chi_minus = rat(self.chi_bminus_dual(alpha)).mul(&p_pow(p, -1)).unwrap();
        if n % 2 == 0 {
            let k = rat(k_sum(&self.field, self.t, i, self.fstar(alpha))?)
                .mul(&p_pow(p, n / 2 - 1))
                .unwrap();
            let c = k.mul_ratio(1 + eps, 2).add(&chi_plus)?;
            let d = k.mul_ratio(eps - 1, 2).add(&chi_minus)?;
            Ok((c, d))
        } else {
            let s = rat(gauss_sum(&self.field)
                .mul(&s_sum(&self.field, self.t, i, self.fstar(alpha))?)?)
            .mul(&p_pow(p, (n - 3) / 2))
            .unwrap();
            let em1 = self.field.eta_minus_one();
            let c = s.mul_ratio(eps + em1, 2).add(&chi_plus)?;
            let d = s.mul_ratio(eps - em1, 2).add(&chi_minus)?;
            Ok((c, d))
        }
    }

    /// Closed χ_α(N_i(f)).
    pub fn chi_n(&self, alpha: usize, i: u64) -> Result<CycRat> {
        let p = self.p();
        let n = self.n() as i64;
        let eps = self.eps(alpha);
        let delta = p_pow(p, n - 1).mul_ratio(self.delta0(alpha), 1);
        if n % 2 == 0 {
            let k = rat(k_sum(&self.field, self.t, i, self.fstar(alpha))?)
                .mul(&p_pow(p, n / 2 - 1))
                .unwrap();
            k.mul_ratio(eps, 1).add(&delta)
        } else {
            let s = rat(gauss_sum(&self.field)
                .mul(&s_sum(&self.field, self.t, i, self.fstar(alpha))?)?)
            .mul(&p_pow(p, (n - 3) / 2))
            .unwrap();
            s.mul_ratio(eps, 1).add(&delta)
        }
    }

    /// Closed χ_α(∪_{i∈SQ} c_i), χ_α(∪_{i∈NSQ} c_i), and the d analogues.
    pub fn chi_cd_half_unions(&self, alpha: usize) -> Result<[CycRat; 4]> {
        let p = self.p();
        let n = self.n() as i64;
        let eps = self.eps(alpha);
        let fstar = self.fstar(alpha);
        let chi_plus = rat(self.chi_bplus_dual(alpha));
        let chi_minus = rat(self.chi_bminus_dual(alpha));
        let pm1 = p as i64 - 1;
        if n % 2 == 0 {
            let lead = p_pow(p, n / 2 - 1);
            let make = |chi: &CycRat, sign_factor: i64, eta_sign: i64| -> Result<CycRat> {
                if fstar == 0 {
                    // (p−1)/2 · (p^{-1}·χ − sign_factor/2 · p^{n/2−1})
                    let inner = chi
                        .mul(&p_pow(p, -1))?
                        .sub(&lead.mul_ratio(sign_factor, 2))?;
                    Ok(inner.mul_ratio(pm1, 2))
                } else {
                    let etaf = self.field.quadratic_character(fstar).unwrap();
                    let head = lead.mul_ratio(sign_factor * (eta_sign * etaf * p as i64 + 1), 4);
                    head.add(&chi.mul_ratio(pm1, 2 * p as i64))
                }
            };
            Ok([
                make(&chi_plus, 1 + eps, 1)?,
                make(&chi_plus, 1 + eps, -1)?,
                make(&chi_minus, eps - 1, 1)?,
                make(&chi_minus, eps - 1, -1)?,
            ])
        } else {
            let em1 = self.field.eta_minus_one();
            let pstar = em1 * p as i64;
            let lead_half = p_pow(p, (n - 1) / 2);
            let lead_odd = p_pow(p, (n - 3) / 2).mul_ratio(pstar, 1);
            let make = |chi: &CycRat, sf: i64, nsq_branch: bool| -> Result<CycRat> {
                if fstar == 0 {
                    let sign = if nsq_branch { -1 } else { 1 };
                    let inner = chi
                        .mul(&p_pow(p, -1))?
                        .add(&lead_half.mul_ratio(sign * sf, 2))?;
                    Ok(inner.mul_ratio(pm1, 2))
                } else {
                    let etaf = self.field.quadratic_character(fstar).unwrap();
                    let head = if nsq_branch {
                        lead_odd.mul_ratio(sf * (em1 - etaf), 4)
                    } else {
                        lead_odd.mul_ratio(-sf * (etaf + em1), 4)
                    };
                    head.add(&chi.mul_ratio(pm1, 2 * p as i64))
                }
            };
            Ok([
                make(&chi_plus, eps + em1, false)?,
                make(&chi_plus, eps + em1, true)?,
                make(&chi_minus, eps - em1, false)?,
                make(&chi_minus, eps - em1, true)?,
            ])
        }
    }

    /// Closed χ_α(∪_{i∈𝔽_p*} c_i) and χ_α(∪_{i∈𝔽_p*} d_i).
    pub fn chi_cd_full_unions(&self, alpha: usize) -> Result<(CycRat, CycRat)> {
        let p = self.p();
        let n = self.n() as i64;
        let eps = self.eps(alpha);
        let fstar = self.fstar(alpha);
        let chi_plus = rat(self.chi_bplus_dual(alpha));
        let chi_minus = rat(self.chi_bminus_dual(alpha));
        let pm1 = p as i64 - 1;
        if n % 2 == 0 {
            let lead = p_pow(p, n / 2 - 1);
            let make = |chi: &CycRat, sf: i64| -> Result<CycRat> {
                if fstar == 0 {
                    Ok(chi
                        .mul(&p_pow(p, -1))?
                        .sub(&lead.mul_ratio(sf, 2))?
                        .mul_ratio(pm1, 1))
                } else {
                    lead.mul_ratio(sf, 2).add(&chi.mul_ratio(pm1, p as i64))
                }
            };
            Ok((make(&chi_plus, eps + 1)?, make(&chi_minus, eps - 1)?))
        } else {
            let em1 = self.field.eta_minus_one();
            let pstar = em1 * p as i64;
            let lead = p_pow(p, (n - 3) / 2).mul_ratio(pstar, 1);
            let make = |chi: &CycRat, sf: i64| -> Result<CycRat> {
                if fstar == 0 {
                    Ok(chi.mul_ratio(pm1, p as i64))
                } else {
                    let etaf = self.field.quadratic_character(fstar).unwrap();
                    lead.mul_ratio(-sf * etaf, 2)
                        .add(&chi.mul_ratio(pm1, p as i64))
                }
            };
            Ok((make(&chi_plus, eps + em1)?, make(&chi_minus, eps - em1)?))
        }
    }

    /// Closed χ_α(∪_{i∈SQ} N_i) and χ_α(∪_{i∈NSQ} N_i).
    pub fn chi_n_half_unions(&self, alpha: usize) -> Result<(CycRat, CycRat)> {
        let p = self.p();
        let n = self.n() as i64;
        let eps = self.eps(alpha);
        let fstar = self.fstar(alpha);
        let delta = p_pow(p, n - 1).mul_ratio(self.delta0(alpha), 1);
        let pm1 = p as i64 - 1;
        if n % 2 == 0 {
            let lead = p_pow(p, n / 2 - 1);
            if fstar == 0 {
                let v = delta.sub(&lead.mul_ratio(eps, 1))?.mul_ratio(pm1, 2);
                Ok((v.clone(), v))
            } else {
                let etaf = self.field.quadratic_character(fstar).unwrap();
                let tail = delta.mul_ratio(pm1, 2);
                Ok((
                    lead.mul_ratio(eps * (etaf * p as i64 + 1), 2).add(&tail)?,
                    lead.mul_ratio(eps * (-etaf * p as i64 + 1), 2).add(&tail)?,
                ))
            }
        } else {
            let em1 = self.field.eta_minus_one();
            let pstar = em1 * p as i64;
            let lead_half = p_pow(p, (n - 1) / 2);
            let lead_odd = p_pow(p, (n - 3) / 2).mul_ratio(pstar, 1);
            if fstar == 0 {
                Ok((
                    delta.add(&lead_half.mul_ratio(eps, 1))?.mul_ratio(pm1, 2),
                    delta.sub(&lead_half.mul_ratio(eps, 1))?.mul_ratio(pm1, 2),
                ))
            } else {
                let etaf = self.field.quadratic_character(fstar).unwrap();
                let tail = delta.mul_ratio(pm1, 2);
                Ok((
                    lead_odd.mul_ratio(-eps * (etaf + em1), 2).add(&tail)?,
                    lead_odd.mul_ratio(eps * (em1 - etaf), 2).add(&tail)?,
                ))
            }
        }
    }

    /// Closed χ_α(∪_{i∈𝔽_p*} N_i).
    pub fn chi_n_full_union(&self, alpha: usize) -> Result<CycRat> {
        let p = self.p();
        let n = self.n() as i64;
        let eps = self.eps(alpha);
        let fstar = self.fstar(alpha);
        let delta = p_pow(p, n - 1).mul_ratio(self.delta0(alpha), 1);
        let pm1 = p as i64 - 1;
        if n % 2 == 0 {
            let lead = p_pow(p, n / 2 - 1);
            if fstar == 0 {
                Ok(delta.sub(&lead.mul_ratio(eps, 1))?.mul_ratio(pm1, 1))
            } else {
                lead.mul_ratio(eps, 1).add(&delta.mul_ratio(pm1, 1))
            }
        } else {
            let em1 = self.field.eta_minus_one();
            let pstar = em1 * p as i64;
            if fstar == 0 {
                Ok(delta.mul_ratio(pm1, 1))
            } else {
                let etaf = self.field.quadratic_character(fstar).unwrap();
                p_pow(p, (n - 3) / 2)
                    .mul_ratio(-eps * etaf * pstar, 1)
                    .add(&delta.mul_ratio(pm1, 1))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::walsh::classify_with_dual;

    #[test]
    fn lemma9_closed_values_match_direct_sums() {
        for p in [3u64, 5, 7, 11] {
            let field = PrimeField::new(p).unwrap();
            for m in [2u64, 3] {
                if num_integer::gcd(m as i64 - 1, p as i64 - 1) != 1 {
                    continue;
                }
                for j in 0..p {
                    let mut k_sq = CycRat::zero(p);
                    let mut k_nsq = CycRat::zero(p);
                    let mut k_all = CycRat::zero(p);
                    let mut s_sq = CycRat::zero(p);
                    let mut s_nsq = CycRat::zero(p);
                    let mut s_all = CycRat::zero(p);
                    for i in 0..p {
                        let k = k_sum(&field, m, i, j).unwrap();
                        let s = s_sum(&field, m, i, j).unwrap();
                        if let Some(expect) = lemma9::k_edge(&field, i, j) {
                            assert_eq!(k.as_integer().unwrap(), expect, "K edge p={p} i={i} j={j}");
                        }
                        if let Some(expect) = lemma9::s_edge(&field, i, j) {
                            assert_eq!(s, expect, "S edge p={p} i={i} j={j}");
                        }
                        if i != 0 {
                            let eta = field.quadratic_character(i).unwrap();
                            if eta == 1 {
                                k_sq = k_sq.add(&rat(k.clone())).unwrap();
                                s_sq = s_sq.add(&rat(s.clone())).unwrap();
                            } else {
                                k_nsq = k_nsq.add(&rat(k.clone())).unwrap();
                                s_nsq = s_nsq.add(&rat(s.clone())).unwrap();
                            }
                            k_all = k_all.add(&rat(k)).unwrap();
                            s_all = s_all.add(&rat(s)).unwrap();
                        }
                    }
                    let (ek_sq, ek_nsq) = lemma9::k_half_sums(&field, j);
                    assert_eq!(k_sq, ek_sq, "K SQ sum p={p} m={m} j={j}");
                    assert_eq!(k_nsq, ek_nsq, "K NSQ sum p={p} m={m} j={j}");
                    assert_eq!(
                        k_all.as_integer().unwrap(),
                        lemma9::k_full_sum(&field, j),
                        "K full sum"
                    );
                    let (es_sq, es_nsq) = lemma9::s_half_sums(&field, j);
                    assert_eq!(s_sq, es_sq, "S SQ sum p={p} m={m} j={j}");
                    assert_eq!(s_nsq, es_nsq, "S NSQ sum p={p} m={m} j={j}");
                    assert_eq!(
                        s_all.as_cyc_int().unwrap(),
                        lemma9::s_full_sum(&field, j),
                        "S full sum"
                    );
                }
            }
        }
    }

    #[test]
    fn lemma3_matches_actual_counts() {
        let field = PrimeField::new(5).unwrap();
        // (p=5, n=4, Type +, j0=0): |N_0| = 145, |N_j| = 120.
        let counts = lemma3_distribution(&field, 4, 1, 0);
        assert_eq!(counts[0], BigInt::from(145));
        for j in 1..5 {
            assert_eq!(counts[j], BigInt::from(120));
        }
        let total: BigInt = counts.iter().sum();
        assert_eq!(total, BigInt::from(625));
        // Cross-check on the Type (+) catalog function.
        let f = catalog::find("ex1-f5n4").unwrap().function().unwrap();
        let (report, _) = classify_with_dual(&f);
        let j0 = report.dual().value(0);
        let expect = lemma3_distribution(&field, 4, report.bent().unwrap().type_sign, j0);
        let actual = f.level_sets();
        for j in 0..5 {
            assert_eq!(BigInt::from(actual[j].len()), expect[j], "j = {j}");
        }
        // Odd n: |N_{j0}| = p^{n-1}.
        let g = catalog::find("ex4-f5n3").unwrap().function().unwrap();
        let (rg, _) = classify_with_dual(&g);
        let j0 = rg.dual().value(0);
        let expect = lemma3_distribution(&field, 3, rg.bent().unwrap().type_sign, j0);
        assert_eq!(expect[j0 as usize], BigInt::from(25));
        let actual = g.level_sets();
        for j in 0..5 {
            assert_eq!(BigInt::from(actual[j].len()), expect[j]);
        }
    }

    #[test]
    fn lemma4_blocks_sum_to_pn() {
        let field = PrimeField::new(5).unwrap();
        // Example-1 parameters: k = 125, even n, 0 ∈ B_+.
        let (c, d) = lemma4_cd_sizes(&field, 4, 125, true, Lemma4Case::EvenN).unwrap();
        assert_eq!(c[0], BigInt::from(45));
        for j in 1..5 {
            assert_eq!(c[j], BigInt::from(20));
        }
        let total: BigInt = c.iter().chain(d.iter()).sum();
        assert_eq!(total, BigInt::from(625));
        assert!(lemma4_cd_sizes(&field, 4, 123, true, Lemma4Case::EvenN).is_err());
        assert!(lemma4_cd_sizes(&field, 3, 25, true, Lemma4Case::EvenN).is_err());
    }

    #[test]
    fn p_pow_handles_negative_exponents() {
        let half = p_pow(5, -2);
        let v = half.mul(&CycRat::from_int(5, 50)).unwrap();
        assert_eq!(v.as_integer().unwrap(), BigInt::from(2));
    }

    #[test]
    fn chi_oracle_matches_direct_sums() {
        for name in ["ex1-f5n4", "ex4-f5n3", "ex-f7n3-minus"] {
            let f = catalog::find(name).unwrap().function().unwrap();
            let a = crate::analysis::Analysis::new(&f).unwrap();
            let oracle = ChiOracle::new(&a).unwrap();
            let space = a.f.space();
            let p = space.p();
            let level = a.level().unwrap();
            let (sq, nsq) = space.field().sq_nsq_ordered();
            let tables_c: Vec<_> = level
                .c
                .iter()
                .map(|cell| cell_char_counts(space, cell))
                .collect();
            let tables_d: Vec<_> = level
                .d
                .iter()
                .map(|cell| cell_char_counts(space, cell))
                .collect();
            let tables_n: Vec<_> = level
                .n
                .iter()
                .map(|cell| cell_char_counts(space, cell))
                .collect();
            let sum_over = |tables: &[ExpCounts], js: &[u64], alpha: usize| -> CycInt {
                let mut acc = CycInt::zero(p);
                for &j in js {
                    acc = acc.add(&tables[j as usize].cyc(alpha)).unwrap();
                }
                acc
            };
            let units: Vec<u64> = (1..p).collect();
            for alpha in 0..space.len() {
                for i in 0..p {
                    let (c_closed, d_closed) = oracle.chi_cd(alpha, i).unwrap();
                    assert_eq!(
                        c_closed.as_cyc_int().unwrap(),
                        tables_c[i as usize].cyc(alpha),
                        "{name}: chi_c at alpha={alpha} i={i}"
                    );
                    assert_eq!(
                        d_closed.as_cyc_int().unwrap(),
                        tables_d[i as usize].cyc(alpha),
                        "{name}: chi_d at alpha={alpha} i={i}"
                    );
                    let n_closed = oracle.chi_n(alpha, i).unwrap();
                    assert_eq!(
                        n_closed.as_cyc_int().unwrap(),
                        tables_n[i as usize].cyc(alpha),
                        "{name}: chi_N at alpha={alpha} i={i}"
                    );
                }
                let [csq, cnsq, dsq, dnsq] = oracle.chi_cd_half_unions(alpha).unwrap();
                assert_eq!(csq.as_cyc_int().unwrap(), sum_over(&tables_c, &sq, alpha));
                assert_eq!(cnsq.as_cyc_int().unwrap(), sum_over(&tables_c, &nsq, alpha));
                assert_eq!(dsq.as_cyc_int().unwrap(), sum_over(&tables_d, &sq, alpha));
                assert_eq!(dnsq.as_cyc_int().unwrap(), sum_over(&tables_d, &nsq, alpha));
                let (cu, du) = oracle.chi_cd_full_unions(alpha).unwrap();
                assert_eq!(cu.as_cyc_int().unwrap(), sum_over(&tables_c, &units, alpha));
                assert_eq!(du.as_cyc_int().unwrap(), sum_over(&tables_d, &units, alpha));
                let (nsq_sum, nnsq_sum) = oracle.chi_n_half_unions(alpha).unwrap();
                assert_eq!(nsq_sum.as_cyc_int().unwrap(), sum_over(&tables_n, &sq, alpha));
                assert_eq!(nnsq_sum.as_cyc_int().unwrap(), sum_over(&tables_n, &nsq, alpha));
                let nu = oracle.chi_n_full_union(alpha).unwrap();
                assert_eq!(nu.as_cyc_int().unwrap(), sum_over(&tables_n, &units, alpha));
            }
        }
    }

    #[test]
    fn lemma2_closed_split_matches_direct() {
        for name in ["ex1-f5n4", "ex4-f5n3", "ex-f7n3-minus"] {
            let f = catalog::find(name).unwrap().function().unwrap();
            let (report, dual_report) = classify_with_dual(&f);
            let dual_report = dual_report.unwrap();
            let (s0, s1) = crate::walsh::s0_s1_tables(&f, &dual_report);
            let field = *f.space().field();
            for y in 0..f.space().len() {
                let (e0, e1) = lemma2_s0_s1(
                    &field,
                    f.n(),
                    report.eps()[y],
                    report.dual().value(y),
                );
                assert_eq!(e0.as_cyc_int().unwrap(), s0.cyc(y), "{name} S0 at {y}");
                assert_eq!(e1.as_cyc_int().unwrap(), s1.cyc(y), "{name} S1 at {y}");
            }
        }
    }
}
