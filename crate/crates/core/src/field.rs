//! Arithmetic in 𝔽_p and the vector space 𝔽_p^n.
//!
//! Residues are kept as least nonnegative representatives in `u64`. Points of
//! 𝔽_p^n are interchangeably coordinate vectors (`FVec`) and indices into the
//! fixed enumeration order: base-p digits, coordinate 1 least significant.

use crate::error::{Error, Result};

/// Default cap on p^n for full-space enumeration.
pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

/// Coordinate vector over 𝔽_p, entries reduced mod p.
pub type FVec = Vec<u64>;

/// The prime field 𝔽_p, p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a % self.p) * (b % self.p) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Quadratic character η(a) ∈ {+1, −1}; undefined at 0.
    pub fn quadratic_character(&self, a: u64) -> Result<i64> {
        if a % self.p == 0 {
            return Err(Error::CharacterAtZero);
        }
        // Euler's criterion.
        if self.pow(a, (self.p - 1) / 2) == 1 {
            Ok(1)
        } else {
            Ok(-1)
        }
    }

    /// η(−1), the sign of p* = η(−1)·p.
    pub fn eta_minus_one(&self) -> i64 {
        if self.p % 4 == 1 {
            1
        } else {
            -1
        }
    }

    /// The squares and nonsquares of 𝔽_p*, each sorted ascending.
    pub fn sq_nsq_ordered(&self) -> (Vec<u64>, Vec<u64>) {
        let mut sq = Vec::with_capacity((self.p as usize - 1) / 2);
        let mut nsq = Vec::with_capacity((self.p as usize - 1) / 2);
        for a in 1..self.p {
            if self.quadratic_character(a).unwrap() == 1 {
                sq.push(a);
            } else {
                nsq.push(a);
            }
        }
        (sq, nsq)
    }
}

/// Ordinary inner product Σ x_i y_i mod p.
pub fn dot(field: &PrimeField, x: &[u64], y: &[u64]) -> Result<u64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let mut acc = 0u64;
    for (a, b) in x.iter().zip(y) {
        acc = field.add(acc, field.mul(*a, *b));
    }
    Ok(acc)
}

/// The enumerated space 𝔽_p^n with its index ↔ vector bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointSpace {
    field: PrimeField,
    n: usize,
    size: u64,
}

impl PointSpace {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        Self::with_budget(p, n, DEFAULT_MAX_POINTS)
    }

    pub fn with_budget(p: u64, n: usize, max_points: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let mut size: u128 = 1;
        for _ in 0..n {
            size *= p as u128;
            if size > max_points as u128 {
                return Err(Error::BudgetExceeded {
                    requested: size,
                    budget: max_points,
                });
            }
        }
        Ok(PointSpace {
            field,
            n,
            size: size as u64,
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.size as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vector for an index: base-p digits, coordinate 1 least significant.
    pub fn vec(&self, idx: usize) -> FVec {
        debug_assert!(idx < self.len());
        let p = self.p();
        let mut rem = idx as u64;
        let mut coords = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            coords.push(rem % p);
            rem /= p;
        }
        coords
    }

    pub fn idx(&self, coords: &[u64]) -> usize {
        debug_assert_eq!(coords.len(), self.n);
        let p = self.p();
        let mut acc = 0u64;
        for &c in coords.iter().rev() {
            acc = acc * p + c % p;
        }
        acc as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = FVec> + '_ {
        (0..self.len()).map(|i| self.vec(i))
    }

    /// Index of x + y.
    pub fn add_idx(&self, x: usize, y: usize) -> usize {
        let p = self.p();
        let mut acc = 0u64;
        let (mut xr, mut yr) = (x as u64, y as u64);
        let mut place = 1u64;
        for _ in 0..self.n {
            let digit = (xr % p + yr % p) % p;
            acc += digit * place;
            place *= p;
            xr /= p;
            yr /= p;
        }
        acc as usize
    }

    /// Index of −x.
    pub fn neg_idx(&self, x: usize) -> usize {
        let p = self.p();
        let mut acc = 0u64;
        let mut xr = x as u64;
        let mut place = 1u64;
        for _ in 0..self.n {
            let digit = (p - xr % p) % p;
            acc += digit * place;
            place *= p;
            xr /= p;
        }
        acc as usize
    }

    /// Index of a·x for a scalar a.
    pub fn scale_idx(&self, a: u64, x: usize) -> usize {
        let p = self.p();
        let a = a % p;
        let mut acc = 0u64;
        let mut xr = x as u64;
        let mut place = 1u64;
        for _ in 0..self.n {
            acc += (xr % p * a) % p * place;
            place *= p;
            xr /= p;
        }
        acc as usize
    }

    /// Index of x − y.
    pub fn sub_idx(&self, x: usize, y: usize) -> usize {
        self.add_idx(x, self.neg_idx(y))
    }
}

/// A subspace of 𝔽_p^n held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    n: usize,
    basis: Vec<FVec>,
}

impl Subspace {
    /// Row reduce the given vectors into an RREF basis.
    pub fn span(field: PrimeField, n: usize, vectors: &[FVec]) -> Result<Self> {
        for v in vectors {
            if v.len() != n {
                return Err(Error::LengthMismatch(v.len(), n));
            }
        }
        let mut rows: Vec<FVec> = vectors
            .iter()
            .map(|v| v.iter().map(|&c| c % field.p()).collect())
            .collect();
        let mut basis: Vec<FVec> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        for col in 0..n {
            let Some(pos) = rows.iter().position(|r| r[col] != 0) else {
                continue;
            };
            let mut pivot = rows.swap_remove(pos);
            let inv = field.inv(pivot[col]);
            for c in pivot.iter_mut() {
                *c = field.mul(*c, inv);
            }
            for r in rows.iter_mut() {
                let factor = r[col];
                if factor != 0 {
                    for (rc, pc) in r.iter_mut().zip(&pivot) {
                        *rc = field.sub(*rc, field.mul(factor, *pc));
                    }
                }
            }
            for (b, &bcol) in basis.iter_mut().zip(&pivot_cols) {
                let factor = b[col];
                if factor != 0 {
                    let _ = bcol;
                    for (bc, pc) in b.iter_mut().zip(&pivot) {
                        *bc = field.sub(*bc, field.mul(factor, *pc));
                    }
                }
            }
            pivot_cols.push(col);
            basis.push(pivot);
            rows.retain(|r| r.iter().any(|&c| c != 0));
            if rows.is_empty() {
                break;
            }
        }
        Ok(Subspace { field, n, basis })
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Subspace {
            field,
            n,
            basis: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, n: usize) -> Self {
        let mut basis = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![0u64; n];
            e[i] = 1;
            basis.push(e);
        }
        Subspace { field, n, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[FVec] {
        &self.basis
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut rem: FVec = v.iter().map(|&c| c % self.field.p()).collect();
        for row in &self.basis {
            let col = row.iter().position(|&c| c == 1).unwrap();
            let factor = rem[col];
            if factor != 0 {
                for (rc, pc) in rem.iter_mut().zip(row) {
                    *rc = self.field.sub(*rc, self.field.mul(factor, *pc));
                }
            }
        }
        rem.iter().all(|&c| c == 0)
    }

    /// {x : x·y = 0 for all y in the subspace}.
    pub fn orthogonal_complement(&self) -> Subspace {
        // Null space of the basis matrix, re-reduced to RREF.
        let k = self.dim();
        let n = self.n;
        if k == 0 {
            return Subspace::full(self.field, n);
        }
        // The basis is already in RREF; pivot columns are the leading 1s.
        let pivot_cols: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|&c| c == 1).unwrap())
            .collect();
        let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        let mut generators = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in self.basis.iter().zip(&pivot_cols) {
                v[pc] = self.field.neg(row[fc]);
            }
            generators.push(v);
        }
        Subspace::span(self.field, n, &generators).expect("null-space rows have length n")
    }

    /// Non-degenerate w.r.t. the ordinary inner product: V ∩ V⊥ = {0},
    /// tested as rank(Gram matrix of the basis) = dim.
    pub fn is_non_degenerate(&self) -> bool {
        let k = self.dim();
        if k == 0 {
            return true;
        }
        let mut gram = vec![vec![0u64; k]; k];
        for i in 0..k {
            for j in 0..k {
                gram[i][j] = dot(&self.field, &self.basis[i], &self.basis[j]).unwrap();
            }
        }
        rank(&self.field, gram) == k
    }
}

/// Rank of a matrix over 𝔽_p (destructive Gaussian elimination).
fn rank(field: &PrimeField, mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    for col in 0..cols {
        let Some(pos) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pos);
        let inv = field.inv(rows[rank][col]);
        for c in col..cols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..cols {
                    let sub = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], sub);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Span of a set of point indices, returned as a subspace.
pub fn span_of_indices(space: &PointSpace, indices: &[u32]) -> Subspace {
    let vectors: Vec<FVec> = indices.iter().map(|&i| space.vec(i as usize)).collect();
    Subspace::span(*space.field(), space.n(), &vectors).expect("index vectors share length n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn quadratic_character_small_primes() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.quadratic_character(1).unwrap(), 1);
        assert_eq!(f5.quadratic_character(2).unwrap(), -1);
        assert_eq!(f5.quadratic_character(4).unwrap(), 1);
        assert!(f5.quadratic_character(0).is_err());
        // η(−1) = −1 at p = 7, so p* = −7.
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.quadratic_character(7 - 1).unwrap(), -1);
        assert_eq!(f7.eta_minus_one(), -1);
    }

    #[test]
    fn rejects_non_odd_primes() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn sq_nsq_ordering() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.sq_nsq_ordered(), (vec![1, 4], vec![2, 3]));
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.sq_nsq_ordered(), (vec![1, 2, 4], vec![3, 5, 6]));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.sq_nsq_ordered(), (vec![1], vec![2]));
    }

    #[test]
    fn eta_multiplicative_and_balanced() {
        for p in [3u64, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            let mut total = 0i64;
            for a in 1..p {
                total += f.quadratic_character(a).unwrap();
                for b in 1..p {
                    let lhs = f.quadratic_character(f.mul(a, b)).unwrap();
                    let rhs = f.quadratic_character(a).unwrap() * f.quadratic_character(b).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            assert_eq!(total, 0, "sum of eta over F_{p}* must vanish");
        }
    }

    #[test]
    fn dot_products() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(dot(&f5, &[1, 0], &[0, 1]).unwrap(), 0);
        assert_eq!(dot(&f5, &[2, 3], &[3, 1]).unwrap(), 4);
        assert_eq!(dot(&f5, &[2, 3], &[0, 0]).unwrap(), 0);
        assert!(dot(&f5, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn enumerate_small_spaces() {
        let s = PointSpace::new(3, 1).unwrap();
        let pts: Vec<FVec> = s.iter().collect();
        assert_eq!(pts, vec![vec![0], vec![1], vec![2]]);
        let s = PointSpace::new(5, 4).unwrap();
        assert_eq!(s.len(), 625);
        assert!(PointSpace::with_budget(5, 11, DEFAULT_MAX_POINTS).is_err());
    }

    #[test]
    fn index_round_trip_exhaustive() {
        let s = PointSpace::new(5, 3).unwrap();
        for i in 0..s.len() {
            assert_eq!(s.idx(&s.vec(i)), i);
        }
    }

    #[test]
    fn index_arithmetic_matches_vectors() {
        let s = PointSpace::new(7, 2).unwrap();
        let f = *s.field();
        for x in 0..s.len() {
            for y in 0..s.len() {
                let vx = s.vec(x);
                let vy = s.vec(y);
                let sum: FVec = vx.iter().zip(&vy).map(|(a, b)| f.add(*a, *b)).collect();
                assert_eq!(s.add_idx(x, y), s.idx(&sum));
            }
            let neg: FVec = s.vec(x).iter().map(|&a| f.neg(a)).collect();
            assert_eq!(s.neg_idx(x), s.idx(&neg));
            for a in 0..7 {
                let scaled: FVec = s.vec(x).iter().map(|&c| f.mul(a, c)).collect();
                assert_eq!(s.scale_idx(a, x), s.idx(&scaled));
            }
        }
    }

    #[test]
    fn span_dependent_rows() {
        let f5 = PrimeField::new(5).unwrap();
        let v = Subspace::span(f5, 2, &[vec![1, 0], vec![2, 0]]).unwrap();
        assert_eq!(v.dim(), 1);
        let empty = Subspace::span(f5, 3, &[]).unwrap();
        assert_eq!(empty.dim(), 0);
    }

    #[test]
    fn example_subspace_f5_4() {
        // F_5^2 x {0} x F_5 inside F_5^4.
        let f5 = PrimeField::new(5).unwrap();
        let gens = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
            vec![2, 3, 0, 4],
        ];
        let v = Subspace::span(f5, 4, &gens).unwrap();
        assert_eq!(v.dim(), 3);
        assert!(v.is_non_degenerate());
        let c = v.orthogonal_complement();
        assert_eq!(c.dim(), 1);
        for b in v.basis() {
            for w in c.basis() {
                assert_eq!(dot(&f5, b, w).unwrap(), 0);
            }
        }
    }

    #[test]
    fn self_orthogonal_line_is_degenerate() {
        // (1,2)·(1,2) = 5 ≡ 0 over F_5.
        let f5 = PrimeField::new(5).unwrap();
        let v = Subspace::span(f5, 2, &[vec![1, 2]]).unwrap();
        assert!(!v.is_non_degenerate());
        assert!(Subspace::full(f5, 2).is_non_degenerate());
        assert!(Subspace::zero(f5, 2).is_non_degenerate());
    }

    proptest! {
        #[test]
        fn complement_involution(seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = [3u64, 5, 7][rng.gen_range(0..3)];
            let n = rng.gen_range(1..5usize);
            let f = PrimeField::new(p).unwrap();
            let k = rng.gen_range(0..=n);
            let gens: Vec<FVec> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                .collect();
            let v = Subspace::span(f, n, &gens).unwrap();
            let c = v.orthogonal_complement();
            prop_assert_eq!(v.dim() + c.dim(), n);
            prop_assert_eq!(&c.orthogonal_complement(), &v);
        }
    }
}
