//! Closed-form first/second eigenmatrices for the schemes induced by the
//! U-families, parameterized by (p, n, r, h, t). Entries are indexed exactly
//! as printed in the source tables (1-based i, j with offsets like j−3), and
//! every S-sum entry is expanded to an exact element of ℤ[ξ_p] through
//! √p*·p^{(n−3)/2} — the √−1 factors of the p ≡ 3 (mod 4) tables cancel into
//! the Gauss sum via √−1·√p = √p*.

use num_bigint::BigInt;

use crate::cyclotomic::{gauss_sum, CycInt};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::partition::Family;

use super::{k_sum, s_sum};

/// Parameters a table is instantiated at.
#[derive(Debug, Clone, Copy)]
pub struct TableParams {
    pub p: u64,
    pub n: usize,
    pub r: usize,
    pub h: u64,
    pub t: u64,
}

pub type Matrix = Vec<Vec<CycInt>>;

struct Tb {
    field: PrimeField,
    p: i64,
    n: i64,
    r: i64,
    gauss: CycInt,
    sq: Vec<u64>,
    nsq: Vec<u64>,
}

impl Tb {
    fn new(params: &TableParams) -> Result<Tb> {
        let field = PrimeField::new(params.p)?;
        let (sq, nsq) = field.sq_nsq_ordered();
        Ok(Tb {
            field,
            p: params.p as i64,
            n: params.n as i64,
            r: params.r as i64,
            gauss: gauss_sum(&field),
            sq,
            nsq,
        })
    }

    fn int(&self, v: BigInt) -> CycInt {
        CycInt::from_int(self.field.p(), v)
    }

    /// p^e for a nonnegative integer exponent.
    fn pp(&self, e: i64) -> BigInt {
        assert!(e >= 0, "table exponent must be nonnegative, got {e}");
        BigInt::from(self.p).pow(e as u32)
    }

    fn eta(&self, v: i64) -> i64 {
        self.field
            .quadratic_character(v.rem_euclid(self.p) as u64)
            .expect("eta argument must be nonzero")
    }

    fn res(&self, v: i64) -> u64 {
        v.rem_euclid(self.p) as u64
    }

    /// ±p^{n/2−1}·K^{(m)}(a, b), the even-n spectral entry.
    fn k_ent(&self, sign: i64, m: u64, a: i64, b: i64) -> Result<CycInt> {
        let k = k_sum(&self.field, m, self.res(a), self.res(b))?;
        Ok(k.mul_int(&(BigInt::from(sign) * self.pp(self.n / 2 - 1))))
    }

    /// [±√−1]·p^{(n−2)/2}·S^{(m)}(a, b) = ±√p*·p^{(n−3)/2}·S^{(m)}(a, b).
    fn s_ent(&self, sign: i64, m: u64, a: i64, b: i64) -> Result<CycInt> {
        let s = s_sum(&self.field, m, self.res(a), self.res(b))?;
        let scaled = self.gauss.mul(&s)?;
        Ok(scaled.mul_int(&(BigInt::from(sign) * self.pp((self.n - 3) / 2))))
    }

    /// The k-th smallest square s_k (1-based).
    fn s_k(&self, k: i64) -> i64 {
        self.sq[(k - 1) as usize] as i64
    }

    /// The k-th smallest nonsquare n_k (1-based).
    fn n_k(&self, k: i64) -> i64 {
        self.nsq[(k - 1) as usize] as i64
    }
}

fn build<F>(d1: usize, mut entry: F) -> Result<Matrix>
where
    F: FnMut(i64, i64) -> Result<CycInt>,
{
    let mut out = Vec::with_capacity(d1);
    for i in 1..=d1 as i64 {
        let mut row = Vec::with_capacity(d1);
        for j in 1..=d1 as i64 {
            row.push(entry(i, j)?);
        }
        out.push(row);
    }
    Ok(out)
}

fn from_bigint_rows(tb: &Tb, rows: Vec<Vec<BigInt>>) -> Matrix {
    rows.into_iter()
        .map(|row| row.into_iter().map(|v| tb.int(v)).collect())
        .collect()
}

/// Tables 1/2: the scheme induced by U1; m = t gives P, m = h gives Q.
fn u1_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    build(2 * p as usize + 2, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => {
                if i <= p + 2 {
                    tb.int(tb.pp(n - r) - 1)
                } else {
                    tb.int(BigInt::from(-1))
                }
            }
            3 => match i {
                1 | 2 => tb.int(tb.pp(r - 1) - tb.pp(n - r) + (p - 1) * tb.pp(n / 2 - 1)),
                3 => tb.int((p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r)),
                i if (4..=p + 2).contains(&i) => tb.int(-tb.pp(n / 2 - 1) - tb.pp(n - r)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (4..=p + 2).contains(&j) => match i {
                1 | 2 => tb.int(tb.pp(r - 1) - tb.pp(n / 2 - 1)),
                3 => tb.int(-tb.pp(n / 2 - 1)),
                i if (4..=p + 2).contains(&i) => tb.k_ent(1, m, j - 3, i - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 3 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(r - 1)),
                i if i == p + 3 => tb.int(-(p - 1) * tb.pp(n / 2 - 1)),
                i if i > p + 3 => tb.int(tb.pp(n / 2 - 1)),
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(r - 1)),
                i if i == p + 3 => tb.int(tb.pp(n / 2 - 1)),
                i if i > p + 3 => tb.k_ent(-1, m, j - p - 3, i - p - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Tables 3/4: U2.
fn u2_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    build(2 * p as usize + 1, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(n / 2)),
                2 => tb.int((p - 1) * tb.pp(n / 2 - 1)),
                i if (3..=p + 1).contains(&i) => tb.int(-tb.pp(n / 2 - 1)),
                i if i == p + 2 => tb.int(-tb.pp(n / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (3..=p + 1).contains(&j) => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(n / 2)),
                2 => tb.int(-tb.pp(n / 2 - 1)),
                i if (3..=p + 1).contains(&i) => tb.k_ent(1, m, j - 2, i - 2)?,
                i if i == p + 2 => tb.int(-tb.pp(n / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 2 => match i {
                1 => tb.int(tb.pp(n / 2 - 1) - 1),
                i if i == p + 2 || i > p + 2 => tb.int(tb.pp(n / 2 - 1) - 1),
                _ => tb.int(BigInt::from(-1)),
            },
            _ => match i {
                1 => tb.int(tb.pp(n / 2) + tb.pp(n / 2 - 1)),
                i if i == p + 2 => tb.int(tb.pp(n / 2 - 1) + tb.pp(n / 2)),
                i if i > p + 2 => tb.k_ent(-1, m, j - p - 2, i - p - 2)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Tables 5/6: U3.
fn u3_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    build(2 * p as usize + 2, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int((p - 1) * tb.pp(n / 2 - 1)),
                i if (3..=p + 1).contains(&i) => tb.int(-tb.pp(n / 2 - 1)),
                i if i == p + 2 => tb.int(-tb.pp(r - 1)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (3..=p + 1).contains(&j) => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(n / 2 - 1)),
                i if (3..=p + 1).contains(&i) => tb.k_ent(1, m, j - 2, i - 2)?,
                i if i == p + 2 => tb.int(-tb.pp(r - 1)),
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 2 => match i {
                2 => tb.int(BigInt::from(-1)),
                i if (3..=p + 1).contains(&i) => tb.int(BigInt::from(-1)),
                _ => tb.int(tb.pp(n - r) - 1),
            },
            j if j == p + 3 => match i {
                1 => tb.int(tb.pp(r - 1) - tb.pp(n - r) - (p - 1) * tb.pp(n / 2 - 1)),
                i if i == p + 2 => {
                    tb.int(tb.pp(r - 1) - tb.pp(n - r) - (p - 1) * tb.pp(n / 2 - 1))
                }
                i if i == p + 3 => tb.int(-tb.pp(n - r) - (p - 1) * tb.pp(n / 2 - 1)),
                i if i > p + 3 => tb.int(tb.pp(n / 2 - 1) - tb.pp(n - r)),
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(tb.pp(r - 1) + tb.pp(n / 2 - 1)),
                i if i == p + 2 => tb.int(tb.pp(n / 2 - 1) + tb.pp(r - 1)),
                i if i == p + 3 => tb.int(tb.pp(n / 2 - 1)),
                i if i > p + 3 => tb.k_ent(-1, m, j - p - 3, i - p - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Table 7: U4, P = Q.
fn u4_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let a: BigInt = (tb.pp(r - 1) - tb.pp(n / 2 - 1)) * (p - 1) / 2;
    let b: BigInt = (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) + (p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            a.clone(),
            a.clone(),
            tb.pp(n - 1) - tb.pp(r - 1),
            b.clone(),
            b.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) + (p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            a.clone(),
            a.clone(),
            -tb.pp(r - 1),
            -tb.pp(r - 1) * (p - 1) / 2,
            -tb.pp(r - 1) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            (p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            -tb.pp(n / 2 - 1) * (p - 1) / 2,
            -tb.pp(n / 2 - 1) * (p - 1) / 2,
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n / 2 - 1) - tb.pp(n - r),
            tb.pp(n / 2 - 1) * (p + 1) / 2,
            tb.pp(n / 2 - 1) * (-p + 1) / 2,
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n / 2 - 1) - tb.pp(n - r),
            tb.pp(n / 2 - 1) * (-p + 1) / 2,
            tb.pp(n / 2 - 1) * (p + 1) / 2,
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            -(p - 1) * tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1) * (p - 1) / 2,
            tb.pp(n / 2 - 1) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n / 2 - 1),
            -tb.pp(n / 2 - 1) * (p + 1) / 2,
            tb.pp(n / 2 - 1) * (p - 1) / 2,
        ],
        vec![
            one,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero,
            tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1) * (p - 1) / 2,
            -tb.pp(n / 2 - 1) * (p + 1) / 2,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 8: U5, P = Q.
fn u5_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            (p - 1) * tb.pp(n / 2 - 1) + tb.pp(r - 1) - tb.pp(n - r),
            (p - 1) * (tb.pp(r - 1) - tb.pp(n / 2 - 1)),
            tb.pp(n - 1) - tb.pp(r - 1),
            (p - 1) * (tb.pp(n - 1) - tb.pp(r - 1)),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            (p - 1) * tb.pp(n / 2 - 1) + tb.pp(r - 1) - tb.pp(n - r),
            (p - 1) * (tb.pp(r - 1) - tb.pp(n / 2 - 1)),
            -tb.pp(r - 1),
            -(p - 1) * tb.pp(r - 1),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            (p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            -(p - 1) * tb.pp(n / 2 - 1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n / 2 - 1) - tb.pp(n - r),
            tb.pp(n / 2 - 1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            -(p - 1) * tb.pp(n / 2 - 1),
            (p - 1) * tb.pp(n / 2 - 1),
        ],
        vec![
            one,
            BigInt::from(-1),
            zero.clone(),
            zero,
            tb.pp(n / 2 - 1),
            -tb.pp(n / 2 - 1),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 9: U6, P = Q.
fn u6_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let big: BigInt = (tb.pp(n - 1) - tb.pp(n / 2)) * (p - 1) / 2;
    let mix: BigInt = (tb.pp(n / 2) + tb.pp(n / 2 - 1)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp(n / 2),
            big.clone(),
            big,
            tb.pp(n / 2 - 1) - 1,
            mix.clone(),
            mix.clone(),
        ],
        vec![
            one.clone(),
            (p - 1) * tb.pp(n / 2 - 1),
            -tb.pp(n / 2 - 1) * (p - 1) / 2,
            -tb.pp(n / 2 - 1) * (p - 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1) * (p + 1) / 2,
            tb.pp(n / 2 - 1) * (-p + 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1) * (-p + 1) / 2,
            tb.pp(n / 2 - 1) * (p + 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2),
            -tb.pp(n / 2) * (p - 1) / 2,
            -tb.pp(n / 2) * (p - 1) / 2,
            tb.pp(n / 2 - 1) - 1,
            (tb.pp(n / 2 - 1) + tb.pp(n / 2)) * (p - 1) / 2,
            (tb.pp(n / 2 - 1) + tb.pp(n / 2)) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n / 2 - 1) - 1,
            -tb.pp(n / 2 - 1) * (p + 1) / 2,
            tb.pp(n / 2 - 1) * (p - 1) / 2,
        ],
        vec![
            one,
            zero.clone(),
            zero.clone(),
            zero,
            tb.pp(n / 2 - 1) - 1,
            tb.pp(n / 2 - 1) * (p - 1) / 2,
            -tb.pp(n / 2 - 1) * (p + 1) / 2,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 10: U7, P = Q.
fn u7_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp(n / 2),
            (p - 1) * (tb.pp(n - 1) - tb.pp(n / 2)),
            tb.pp(n / 2 - 1) - 1,
            (p - 1) * (tb.pp(n / 2) + tb.pp(n / 2 - 1)),
        ],
        vec![
            one.clone(),
            (p - 1) * tb.pp(n / 2 - 1),
            -(p - 1) * tb.pp(n / 2 - 1),
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1),
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2),
            -(p - 1) * tb.pp(n / 2),
            tb.pp(n / 2 - 1) - 1,
            (p - 1) * (tb.pp(n / 2 - 1) + tb.pp(n / 2)),
        ],
        vec![
            one,
            zero.clone(),
            zero,
            tb.pp(n / 2 - 1) - 1,
            -tb.pp(n / 2 - 1),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 11: U8, P = Q.
fn u8_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let big: BigInt = (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2;
    let mix: BigInt = (tb.pp(r - 1) + tb.pp(n / 2 - 1)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp(r - 1),
            big.clone(),
            big,
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - (p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            mix.clone(),
            mix.clone(),
        ],
        vec![
            one.clone(),
            (p - 1) * tb.pp(n / 2 - 1),
            -tb.pp(n / 2 - 1) * (p - 1) / 2,
            -tb.pp(n / 2 - 1) * (p - 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1) * (p + 1) / 2,
            tb.pp(n / 2 - 1) * (-p + 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1) * (-p + 1) / 2,
            tb.pp(n / 2 - 1) * (p + 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(r - 1),
            -tb.pp(r - 1) * (p - 1) / 2,
            -tb.pp(r - 1) * (p - 1) / 2,
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - (p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            (tb.pp(n / 2 - 1) + tb.pp(r - 1)) * (p - 1) / 2,
            (tb.pp(n / 2 - 1) + tb.pp(r - 1)) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            -(p - 1) * tb.pp(n / 2 - 1) - tb.pp(n - r),
            tb.pp(n / 2 - 1) * (p - 1) / 2,
            tb.pp(n / 2 - 1) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            tb.pp(n / 2 - 1) - tb.pp(n - r),
            -tb.pp(n / 2 - 1) * (p + 1) / 2,
            tb.pp(n / 2 - 1) * (p - 1) / 2,
        ],
        vec![
            one,
            zero.clone(),
            zero.clone(),
            zero,
            tb.pp(n - r) - 1,
            tb.pp(n / 2 - 1) - tb.pp(n - r),
            tb.pp(n / 2 - 1) * (p - 1) / 2,
            -tb.pp(n / 2 - 1) * (p + 1) / 2,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 12: U9, P = Q.
fn u9_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp(r - 1),
            (p - 1) * (tb.pp(n - 1) - tb.pp(r - 1)),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r) - (p - 1) * tb.pp(n / 2 - 1),
            (p - 1) * (tb.pp(r - 1) + tb.pp(n / 2 - 1)),
        ],
        vec![
            one.clone(),
            (p - 1) * tb.pp(n / 2 - 1),
            -(p - 1) * tb.pp(n / 2 - 1),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(n / 2 - 1),
            tb.pp(n / 2 - 1),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(r - 1),
            -(p - 1) * tb.pp(r - 1),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r) - (p - 1) * tb.pp(n / 2 - 1),
            (p - 1) * (tb.pp(n / 2 - 1) + tb.pp(r - 1)),
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n - r) - tb.pp(n / 2) + tb.pp(n / 2 - 1),
            (p - 1) * tb.pp(n / 2 - 1),
        ],
        vec![
            one,
            zero.clone(),
            zero,
            tb.pp(n - r) - 1,
            tb.pp(n / 2 - 1) - tb.pp(n - r),
            -tb.pp(n / 2 - 1),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Tables 13/14: U10 (p ≡ 1 mod 4, odd n, r = (n+1)/2).
fn u10_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let c_hi = (p + 3) / 2;
    let d0 = (p + 5) / 2;
    build(((3 * p + 3) / 2) as usize, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => {
                if i <= c_hi {
                    tb.int(tb.pp((n - 1) / 2) - 1)
                } else {
                    tb.int(BigInt::from(-1))
                }
            }
            j if (3..=c_hi).contains(&j) => match i {
                1 | 2 => tb.int(2 * tb.pp((n - 1) / 2)),
                i if (3..=c_hi).contains(&i) => tb.s_ent(1, m, tb.s_k(j - 2), tb.s_k(i - 2))?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == d0 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                2 => tb.int(-tb.pp((n - 1) / 2)),
                i if i > d0 => tb.int(-tb.eta(i - d0) * tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                2 => tb.int(-tb.pp((n - 1) / 2)),
                i if i == d0 => tb.int(-tb.eta(j - d0) * tb.pp((n - 1) / 2)),
                i if i > d0 => tb.s_ent(-1, m, j - d0, i - d0)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Table 15: P of U11 (p ≡ 3 mod 4, odd n, r = (n+1)/2); also Table 24.
fn u11_p_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let c_hi = (p + 3) / 2;
    let d0 = (p + 5) / 2;
    build(((3 * p + 3) / 2) as usize, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp((n - 1) / 2) - 1),
                i if i >= p + 2 => tb.int(tb.pp((n - 1) / 2) - 1),
                _ => tb.int(BigInt::from(-1)),
            },
            j if (3..=c_hi).contains(&j) => match i {
                1 => tb.int(2 * tb.pp((n - 1) / 2)),
                i if i == p + 2 => tb.int(2 * tb.pp((n - 1) / 2)),
                i if i >= p + 3 => tb.s_ent(-1, m, tb.n_k(j - 2), tb.s_k(i - p - 2))?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == d0 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                i if (3..=p + 1).contains(&i) => tb.int(-tb.eta(i - 2) * tb.pp((n - 1) / 2)),
                i if i == p + 2 => tb.int(-tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                2 => tb.int(tb.eta(j - d0) * tb.pp((n - 1) / 2)),
                i if (3..=p + 1).contains(&i) => tb.s_ent(1, m, j - d0, i - 2)?,
                i if i == p + 2 => tb.int(-tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Table 16: Q of U11; also Table 23 (P of U15).
fn u11_q_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let c_hi = (p + 3) / 2;
    let d0 = (p + 5) / 2;
    build(((3 * p + 3) / 2) as usize, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                2 => tb.int(-tb.pp((n - 1) / 2)),
                i if i >= (p + 7) / 2 => tb.int(tb.eta(i - d0) * tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (3..=p + 1).contains(&j) => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                2 => tb.int(-tb.pp((n - 1) / 2)),
                i if i == d0 => tb.int(-tb.eta(j - 2) * tb.pp((n - 1) / 2)),
                i if i >= (p + 7) / 2 => tb.s_ent(-1, m, j - 2, i - d0)?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 2 => match i {
                1 | 2 => tb.int(tb.pp((n - 1) / 2) - 1),
                i if (3..=c_hi).contains(&i) => tb.int(tb.pp((n - 1) / 2) - 1),
                _ => tb.int(BigInt::from(-1)),
            },
            _ => match i {
                1 | 2 => tb.int(2 * tb.pp((n - 1) / 2)),
                i if (3..=c_hi).contains(&i) => {
                    tb.s_ent(1, m, tb.s_k(j - p - 2), tb.n_k(i - 2))?
                }
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Tables 17/18: U12 (p ≡ 1 mod 4, odd n, r > (n+1)/2).
fn u12_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    build(2 * p as usize + 2, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => {
                if i <= p + 2 {
                    tb.int(tb.pp(n - r) - 1)
                } else {
                    tb.int(BigInt::from(-1))
                }
            }
            3 => match i {
                1 | 2 => tb.int(tb.pp(r - 1) - tb.pp(n - r)),
                3 => tb.int(-tb.pp(n - r)),
                i if (4..=p + 2).contains(&i) => {
                    tb.int(tb.eta(i - 3) * tb.pp((n - 1) / 2) - tb.pp(n - r))
                }
                _ => tb.int(BigInt::from(0)),
            },
            j if (4..=p + 2).contains(&j) => match i {
                1 | 2 => tb.int(tb.eta(j - 3) * tb.pp((n - 1) / 2) + tb.pp(r - 1)),
                3 => tb.int(tb.eta(j - 3) * tb.pp((n - 1) / 2)),
                i if (4..=p + 2).contains(&i) => tb.s_ent(1, m, j - 3, i - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 3 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(r - 1)),
                i if i > p + 3 => tb.int(-tb.eta(i - p - 3) * tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(r - 1)),
                i if i == p + 3 => tb.int(-tb.eta(j - p - 3) * tb.pp((n - 1) / 2)),
                i if i > p + 3 => tb.s_ent(-1, m, j - p - 3, i - p - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Table 19: P of U13 (p ≡ 3 mod 4, odd n, r > (n+1)/2); also Table 28.
fn u13_p_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    build(2 * p as usize + 2, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - r) - 1),
                i if i >= p + 2 => tb.int(tb.pp(n - r) - 1),
                _ => tb.int(BigInt::from(-1)),
            },
            3 => match i {
                1 => tb.int(tb.pp(r - 1) - tb.pp(n - r)),
                i if i == p + 2 => tb.int(tb.pp(r - 1) - tb.pp(n - r)),
                i if i == p + 3 => tb.int(-tb.pp(n - r)),
                i if i > p + 3 => {
                    tb.int(-tb.pp(n - r) + tb.eta(i - p - 3) * tb.pp((n - 1) / 2))
                }
                _ => tb.int(BigInt::from(0)),
            },
            j if (4..=p + 2).contains(&j) => match i {
                1 => tb.int(-tb.eta(j - 3) * tb.pp((n - 1) / 2) + tb.pp(r - 1)),
                i if i == p + 2 => tb.int(-tb.eta(j - 3) * tb.pp((n - 1) / 2) + tb.pp(r - 1)),
                i if i == p + 3 => tb.int(-tb.eta(j - 3) * tb.pp((n - 1) / 2)),
                i if i > p + 3 => tb.s_ent(-1, m, j - 3, i - p - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 3 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                i if (3..=p + 1).contains(&i) => tb.int(-tb.eta(i - 2) * tb.pp((n - 1) / 2)),
                i if i == p + 2 => tb.int(-tb.pp(r - 1)),
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(tb.eta(j - p - 3) * tb.pp((n - 1) / 2)),
                i if (3..=p + 1).contains(&i) => tb.s_ent(1, m, j - p - 3, i - 2)?,
                i if i == p + 2 => tb.int(-tb.pp(r - 1)),
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Table 20: Q of U13; also Table 27 (P of U17).
fn u13_q_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    build(2 * p as usize + 2, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(r - 1)),
                i if i > p + 3 => tb.int(tb.eta(i - p - 3) * tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (3..=p + 1).contains(&j) => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(-tb.pp(r - 1)),
                i if i == p + 3 => tb.int(-tb.eta(j - 2) * tb.pp((n - 1) / 2)),
                i if i > p + 3 => tb.s_ent(-1, m, j - 2, i - p - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 2 => match i {
                i if i >= p + 3 => tb.int(BigInt::from(-1)),
                _ => tb.int(tb.pp(n - r) - 1),
            },
            j if j == p + 3 => match i {
                1 | 2 => tb.int(tb.pp(r - 1) - tb.pp(n - r)),
                3 => tb.int(-tb.pp(n - r)),
                i if (4..=p + 2).contains(&i) => {
                    tb.int(-tb.eta(i - 3) * tb.pp((n - 1) / 2) - tb.pp(n - r))
                }
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 | 2 => tb.int(tb.eta(j - p - 3) * tb.pp((n - 1) / 2) + tb.pp(r - 1)),
                3 => tb.int(tb.eta(j - p - 3) * tb.pp((n - 1) / 2)),
                i if (4..=p + 2).contains(&i) => tb.s_ent(1, m, j - p - 3, i - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Tables 21/22: U14 (p ≡ 1 mod 4, odd n, r = (n+1)/2).
fn u14_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    build(((3 * p + 3) / 2) as usize, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                i if (3..=p + 1).contains(&i) => tb.int(tb.eta(i - 2) * tb.pp((n - 1) / 2)),
                i if i == p + 2 => tb.int(-tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (3..=p + 1).contains(&j) => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp((n - 1) / 2)),
                2 => tb.int(tb.eta(j - 2) * tb.pp((n - 1) / 2)),
                i if (3..=p + 1).contains(&i) => tb.s_ent(1, m, j - 2, i - 2)?,
                i if i == p + 2 => tb.int(-tb.pp((n - 1) / 2)),
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 2 => match i {
                1 => tb.int(tb.pp((n - 1) / 2) - 1),
                i if i >= p + 2 => tb.int(tb.pp((n - 1) / 2) - 1),
                _ => tb.int(BigInt::from(-1)),
            },
            _ => match i {
                1 => tb.int(2 * tb.pp((n - 1) / 2)),
                i if i == p + 2 => tb.int(2 * tb.pp((n - 1) / 2)),
                i if i > p + 2 => tb.s_ent(-1, m, tb.n_k(j - p - 2), tb.n_k(i - p - 2))?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Tables 25/26: U16 (p ≡ 1 mod 4, odd n, r > (n+1)/2).
fn u16_shape(tb: &Tb, m: u64) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    build(2 * p as usize + 2, |i, j| {
        let v = match j {
            1 => tb.int(BigInt::from(1)),
            2 => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                i if (3..=p + 1).contains(&i) => tb.int(tb.eta(i - 2) * tb.pp((n - 1) / 2)),
                i if i == p + 2 => tb.int(-tb.pp(r - 1)),
                _ => tb.int(BigInt::from(0)),
            },
            j if (3..=p + 1).contains(&j) => match i {
                1 => tb.int(tb.pp(n - 1) - tb.pp(r - 1)),
                2 => tb.int(tb.eta(j - 2) * tb.pp((n - 1) / 2)),
                i if (3..=p + 1).contains(&i) => tb.s_ent(1, m, j - 2, i - 2)?,
                i if i == p + 2 => tb.int(-tb.pp(r - 1)),
                _ => tb.int(BigInt::from(0)),
            },
            j if j == p + 2 => match i {
                2 => tb.int(BigInt::from(-1)),
                i if (3..=p + 1).contains(&i) => tb.int(BigInt::from(-1)),
                _ => tb.int(tb.pp(n - r) - 1),
            },
            j if j == p + 3 => match i {
                1 => tb.int(tb.pp(r - 1) - tb.pp(n - r)),
                i if i == p + 2 => tb.int(tb.pp(r - 1) - tb.pp(n - r)),
                i if i == p + 3 => tb.int(-tb.pp(n - r)),
                i if i > p + 3 => {
                    tb.int(-tb.eta(i - p - 3) * tb.pp((n - 1) / 2) - tb.pp(n - r))
                }
                _ => tb.int(BigInt::from(0)),
            },
            _ => match i {
                1 => tb.int(-tb.eta(j - p - 3) * tb.pp((n - 1) / 2) + tb.pp(r - 1)),
                i if i == p + 2 => {
                    tb.int(-tb.eta(j - p - 3) * tb.pp((n - 1) / 2) + tb.pp(r - 1))
                }
                i if i == p + 3 => tb.int(-tb.eta(j - p - 3) * tb.pp((n - 1) / 2)),
                i if i > p + 3 => tb.s_ent(-1, m, j - p - 3, i - p - 3)?,
                _ => tb.int(BigInt::from(0)),
            },
        };
        Ok(v)
    })
}

/// Table 29: U18, P = Q.
fn u18_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let big: BigInt = (tb.pp(n - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
            tb.pp(n - 1) - tb.pp((n - 1) / 2),
            big.clone(),
            big,
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2) - 1,
            -tb.pp((n - 1) / 2),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            tb.pp((n - 1) / 2),
            zero.clone(),
        ],
        vec![
            one,
            BigInt::from(-1),
            zero.clone(),
            tb.pp((n - 1) / 2),
            zero,
            -tb.pp((n - 1) / 2),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 30: P of U19 (p ≡ 3 mod 4, odd n, r = (n+1)/2); Q of U23.
fn u19_p_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let big: BigInt = (tb.pp(n - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
            tb.pp(n - 1) - tb.pp((n - 1) / 2),
            big.clone(),
            big,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one,
            tb.pp((n - 1) / 2) - 1,
            -tb.pp((n - 1) / 2),
            zero.clone(),
            zero.clone(),
            zero,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 31: Q of U19; P of U23.
fn u19_q_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let big: BigInt = (tb.pp(n - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp((n - 1) / 2),
            big.clone(),
            big,
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            -tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2) - 1,
            -tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            zero.clone(),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one,
            -tb.pp((n - 1) / 2),
            tb.pp((n - 1) / 2),
            zero.clone(),
            BigInt::from(-1),
            zero,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 32: U20, P = Q.
fn u20_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            (tb.pp(r - 1) + tb.pp((n - 1) / 2)) * (p - 1) / 2,
            (tb.pp(r - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2,
            tb.pp(n - 1) - tb.pp(r - 1),
            (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2,
            (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            (tb.pp(r - 1) + tb.pp((n - 1) / 2)) * (p - 1) / 2,
            (tb.pp(r - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2,
            -tb.pp(r - 1),
            -tb.pp(r - 1) * (p - 1) / 2,
            -tb.pp(r - 1) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n - r),
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp((n - 1) / 2) - tb.pp(n - r),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            -tb.pp((n - 1) / 2) - tb.pp(n - r),
            zero.clone(),
            tb.pp((n - 1) / 2),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            tb.pp((n - 1) / 2),
            zero.clone(),
        ],
        vec![
            one,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2),
            zero,
            -tb.pp((n - 1) / 2),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 33: P of U21 (p ≡ 3 mod 4, odd n, r > (n+1)/2); Q of U25.
fn u21_p_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            (tb.pp(r - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2,
            (tb.pp(r - 1) + tb.pp((n - 1) / 2)) * (p - 1) / 2,
            tb.pp(n - 1) - tb.pp(r - 1),
            (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2,
            (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            (tb.pp(r - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2,
            (tb.pp(r - 1) + tb.pp((n - 1) / 2)) * (p - 1) / 2,
            -tb.pp(r - 1),
            -tb.pp(r - 1) * (p - 1) / 2,
            -tb.pp(r - 1) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n - r),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp(n - r) - 1,
            tb.pp((n - 1) / 2) - tb.pp(n - r),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one,
            tb.pp(n - r) - 1,
            -tb.pp((n - 1) / 2) - tb.pp(n - r),
            tb.pp((n - 1) / 2),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 34: Q of U21; P of U25.
fn u21_q_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let big: BigInt = (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2;
    let plus: BigInt = (tb.pp(r - 1) + tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let minus: BigInt = (tb.pp(r - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp(r - 1),
            big.clone(),
            big,
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            plus.clone(),
            minus.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(r - 1),
            -tb.pp(r - 1) * (p - 1) / 2,
            -tb.pp(r - 1) * (p - 1) / 2,
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            plus,
            minus,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n - r),
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            -tb.pp((n - 1) / 2) - tb.pp(n - r),
            zero.clone(),
            tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            tb.pp((n - 1) / 2) - tb.pp(n - r),
            -tb.pp((n - 1) / 2),
            zero.clone(),
        ],
        vec![
            one.clone(),
            zero.clone(),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2),
            zero.clone(),
            -tb.pp((n - 1) / 2),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one,
            -tb.pp((n - 1) / 2),
            tb.pp((n - 1) / 2),
            zero.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero,
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 35: U22, P = Q.
fn u22_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n) = (tb.p, tb.n);
    let big: BigInt = (tb.pp(n - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp((n - 1) / 2),
            big.clone(),
            big,
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
        ],
        vec![
            one.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            tb.pp((n - 1) / 2),
            BigInt::from(-1),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) - 1,
            (p - 1) * tb.pp((n - 1) / 2),
        ],
        vec![
            one,
            zero.clone(),
            zero.clone(),
            zero,
            tb.pp((n - 1) / 2) - 1,
            -tb.pp((n - 1) / 2),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

/// Table 36: U24, P = Q.
fn u24_shape(tb: &Tb) -> Result<Matrix> {
    let (p, n, r) = (tb.p, tb.n, tb.r);
    let big: BigInt = (tb.pp(n - 1) - tb.pp(r - 1)) * (p - 1) / 2;
    let minus: BigInt = (tb.pp(r - 1) - tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let plus: BigInt = (tb.pp(r - 1) + tb.pp((n - 1) / 2)) * (p - 1) / 2;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let rows = vec![
        vec![
            one.clone(),
            tb.pp(n - 1) - tb.pp(r - 1),
            big.clone(),
            big,
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            minus.clone(),
            plus.clone(),
        ],
        vec![
            one.clone(),
            zero.clone(),
            tb.pp((n - 1) / 2) * (p - 1) / 2,
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tb.pp((n - 1) / 2),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp((n - 1) / 2),
            zero.clone(),
            tb.pp((n - 1) / 2),
            BigInt::from(-1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            -tb.pp(r - 1),
            -tb.pp(r - 1) * (p - 1) / 2,
            -tb.pp(r - 1) * (p - 1) / 2,
            tb.pp(n - r) - 1,
            tb.pp(r - 1) - tb.pp(n - r),
            minus,
            plus,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            -tb.pp(n - r),
            -tb.pp((n - 1) / 2) * (p - 1) / 2,
            tb.pp((n - 1) / 2) * (p - 1) / 2,
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            -tb.pp((n - 1) / 2) - tb.pp(n - r),
            tb.pp((n - 1) / 2),
            zero.clone(),
        ],
        vec![
            one,
            zero.clone(),
            zero.clone(),
            zero.clone(),
            tb.pp(n - r) - 1,
            tb.pp((n - 1) / 2) - tb.pp(n - r),
            zero,
            -tb.pp((n - 1) / 2),
        ],
    ];
    Ok(from_bigint_rows(tb, rows))
}

fn check_gcds(params: &TableParams) -> Result<()> {
    for (label, m) in [("h", params.h), ("t", params.t)] {
        if m == 0 || num_integer::gcd(m as i64 - 1, params.p as i64 - 1) != 1 {
            return Err(Error::BadParams {
                what: "table parameters".into(),
                reason: format!("{label} = {m} must satisfy gcd({label}-1, p-1) = 1"),
            });
        }
    }
    Ok(())
}

/// Guard check mirroring the partition builder: parity, p mod 4 and the
/// r-range of the generating construction.
fn check_family_params(family: Family, params: &TableParams) -> Result<()> {
    check_gcds(params)?;
    let Family::Uk(k) = family else {
        return Err(Error::BadParams {
            what: "table parameters".into(),
            reason: format!("no closed-form tables for family {family}"),
        });
    };
    let n = params.n;
    let r = params.r;
    let even = n % 2 == 0;
    let (lo, hi, needs_even): (usize, usize, bool) = match k {
        1 | 4 | 5 => (n / 2 + 1, n.saturating_sub(1), true),
        2 | 6 | 7 => (n / 2 + 1, n / 2 + 1, true),
        3 | 8 | 9 => (n / 2 + 2, n.saturating_sub(1), true),
        10..=25 => {
            let mid = n.div_ceil(2);
            let tight = matches!(k, 10 | 11 | 14 | 15 | 18 | 19 | 22 | 23);
            if tight {
                (mid, mid, false)
            } else {
                (mid + 1, n.saturating_sub(1), false)
            }
        }
        _ => unreachable!(),
    };
    if needs_even != even || (needs_even && n < 4) || (!needs_even && n < 3) {
        return Err(Error::BadParams {
            what: "table parameters".into(),
            reason: format!(
                "family {family} needs {} n",
                if needs_even { "even" } else { "odd" }
            ),
        });
    }
    if !needs_even {
        let wants_p1 = matches!(k, 10 | 12 | 14 | 16 | 18 | 20 | 22 | 24);
        if wants_p1 != (params.p % 4 == 1) {
            return Err(Error::BadParams {
                what: "table parameters".into(),
                reason: format!(
                    "family {family} needs p = {} (mod 4)",
                    if wants_p1 { 1 } else { 3 }
                ),
            });
        }
    }
    if r < lo || r > hi {
        return Err(Error::BadParams {
            what: "table parameters".into(),
            reason: format!("family {family} needs {lo} <= r <= {hi}, got {r}"),
        });
    }
    Ok(())
}

/// The (first, second) eigenmatrix table ids published for a family. The
/// p ≡ 3 (mod 4) cross-identifications give U23 and U25 the swapped tables
/// of U19 and U21.
pub fn family_tables(family: Family) -> Result<(u8, u8)> {
    let ids = match family {
        Family::Uk(1) => (1, 2),
        Family::Uk(2) => (3, 4),
        Family::Uk(3) => (5, 6),
        Family::Uk(4) => (7, 7),
        Family::Uk(5) => (8, 8),
        Family::Uk(6) => (9, 9),
        Family::Uk(7) => (10, 10),
        Family::Uk(8) => (11, 11),
        Family::Uk(9) => (12, 12),
        Family::Uk(10) => (13, 14),
        Family::Uk(11) => (15, 16),
        Family::Uk(12) => (17, 18),
        Family::Uk(13) => (19, 20),
        Family::Uk(14) => (21, 22),
        Family::Uk(15) => (23, 24),
        Family::Uk(16) => (25, 26),
        Family::Uk(17) => (27, 28),
        Family::Uk(18) => (29, 29),
        Family::Uk(19) => (30, 31),
        Family::Uk(20) => (32, 32),
        Family::Uk(21) => (33, 34),
        Family::Uk(22) => (35, 35),
        Family::Uk(23) => (31, 30),
        Family::Uk(24) => (36, 36),
        Family::Uk(25) => (34, 33),
        other => {
            return Err(Error::BadParams {
                what: "family_tables".into(),
                reason: format!("no closed-form tables for family {other}"),
            })
        }
    };
    Ok(ids)
}

/// The family whose parameters govern a given table id.
pub fn table_family(table_id: u8) -> Result<Family> {
    let k = match table_id {
        1 | 2 => 1,
        3 | 4 => 2,
        5 | 6 => 3,
        7 => 4,
        8 => 5,
        9 => 6,
        10 => 7,
        11 => 8,
        12 => 9,
        13 | 14 => 10,
        15 | 16 => 11,
        17 | 18 => 12,
        19 | 20 => 13,
        21 | 22 => 14,
        23 | 24 => 15,
        25 | 26 => 16,
        27 | 28 => 17,
        29 => 18,
        30 | 31 => 19,
        32 => 20,
        33 | 34 => 21,
        35 => 22,
        36 => 24,
        other => {
            return Err(Error::BadParams {
                what: "table id".into(),
                reason: format!("table {other} does not exist"),
            })
        }
    };
    Ok(Family::Uk(k))
}

/// Evaluate a published table at concrete parameters.
pub fn table_eigenmatrix(table_id: u8, params: &TableParams) -> Result<Matrix> {
    check_family_params(table_family(table_id)?, params)?;
    let tb = Tb::new(params)?;
    let (h, t) = (params.h, params.t);
    match table_id {
        1 => u1_shape(&tb, t),
        2 => u1_shape(&tb, h),
        3 => u2_shape(&tb, t),
        4 => u2_shape(&tb, h),
        5 => u3_shape(&tb, t),
        6 => u3_shape(&tb, h),
        7 => u4_shape(&tb),
        8 => u5_shape(&tb),
        9 => u6_shape(&tb),
        10 => u7_shape(&tb),
        11 => u8_shape(&tb),
        12 => u9_shape(&tb),
        13 => u10_shape(&tb, t),
        14 => u10_shape(&tb, h),
        15 => u11_p_shape(&tb, t),
        16 => u11_q_shape(&tb, h),
        17 => u12_shape(&tb, t),
        18 => u12_shape(&tb, h),
        19 => u13_p_shape(&tb, t),
        20 => u13_q_shape(&tb, h),
        21 => u14_shape(&tb, t),
        22 => u14_shape(&tb, h),
        23 => u11_q_shape(&tb, t),
        24 => u11_p_shape(&tb, h),
        25 => u16_shape(&tb, t),
        26 => u16_shape(&tb, h),
        27 => u13_q_shape(&tb, t),
        28 => u13_p_shape(&tb, h),
        29 => u18_shape(&tb),
        30 => u19_p_shape(&tb),
        31 => u19_q_shape(&tb),
        32 => u20_shape(&tb),
        33 => u21_p_shape(&tb),
        34 => u21_q_shape(&tb),
        35 => u22_shape(&tb),
        36 => u24_shape(&tb),
        _ => unreachable!("validated by table_family"),
    }
}

/// Closed-form (P, Q) pair for a family at the given parameters.
pub fn family_eigenmatrices(family: Family, params: &TableParams) -> Result<(Matrix, Matrix)> {
    let (pid, qid) = family_tables(family)?;
    Ok((
        table_eigenmatrix(pid, params)?,
        table_eigenmatrix(qid, params)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_zero_lists_cell_sizes_for_u1() {
        let params = TableParams {
            p: 5,
            n: 4,
            r: 3,
            h: 2,
            t: 2,
        };
        let m = table_eigenmatrix(1, &params).unwrap();
        assert_eq!(m.len(), 12);
        let sizes: Vec<String> = m[0].iter().map(|e| e.to_string()).collect();
        assert_eq!(
            sizes,
            vec!["1", "4", "40", "20", "20", "20", "20", "100", "100", "100", "100", "100"]
        );
    }

    #[test]
    fn guards_reject_bad_parameters() {
        let params = TableParams {
            p: 5,
            n: 4,
            r: 4,
            h: 2,
            t: 2,
        };
        assert!(table_eigenmatrix(3, &params).is_err()); // U2 needs r = n/2+1
        let params = TableParams {
            p: 7,
            n: 3,
            r: 2,
            h: 2,
            t: 2,
        };
        assert!(table_eigenmatrix(13, &params).is_err()); // U10 needs p = 1 mod 4
        assert!(table_eigenmatrix(15, &params).is_ok());
        let params = TableParams {
            p: 5,
            n: 4,
            r: 3,
            h: 3,
            t: 2,
        };
        assert!(table_eigenmatrix(1, &params).is_err()); // gcd(h-1, p-1) != 1
    }

    #[test]
    fn table_ids_cover_every_family() {
        for k in 1..=25u8 {
            let (pid, qid) = family_tables(Family::Uk(k)).unwrap();
            assert!((1..=36).contains(&pid));
            assert!((1..=36).contains(&qid));
        }
        assert!(family_tables(Family::P).is_err());
    }
}
