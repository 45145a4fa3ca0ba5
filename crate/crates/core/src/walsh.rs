//! Exact Walsh spectra, bentness classification, dual extraction, sign sets
//! and level sets.
//!
//! Character sums over 𝔽_p^n are carried as integer count vectors indexed by
//! ξ-exponent (the group ring ℤ[ℤ/p]); a full transform is n size-p passes of
//! vector rotations, all in machine integers. Conversion into ℤ[ξ_p] happens
//! once at the end, so nothing ever leaves exact arithmetic.

use num_bigint::BigInt;

use crate::cyclotomic::{gauss_sum, CycInt};
use crate::error::{Error, Result};
use crate::field::{PointSpace, Subspace};
use crate::function::{detect_scaling_exponent, PFunction, ScalingExponent};

/// Per-point count vectors over ξ-exponents: entry `x*p + e` counts ξ^e at x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpCounts {
    p: u64,
    data: Vec<i64>,
}

impl ExpCounts {
    fn zeroed(space: &PointSpace) -> Self {
        ExpCounts {
            p: space.p(),
            data: vec![0; space.len() * space.p() as usize],
        }
    }

    pub fn counts(&self, idx: usize) -> &[i64] {
        let p = self.p as usize;
        &self.data[idx * p..(idx + 1) * p]
    }

    /// The ℤ[ξ_p] value at a point: exponent p−1 eliminated by the minimal
    /// polynomial, so coefficient e becomes counts[e] − counts[p−1].
    pub fn cyc(&self, idx: usize) -> CycInt {
        let v = self.counts(idx);
        let p = self.p as usize;
        let mut out = CycInt::zero(self.p);
        for e in 0..p - 1 {
            out.set_coeff(e, BigInt::from(v[e] - v[p - 1]));
        }
        out
    }

    /// Reduced-basis coefficients as machine integers, for cheap grouping.
    pub fn reduced(&self, idx: usize) -> Vec<i64> {
        let v = self.counts(idx);
        let p = self.p as usize;
        (0..p - 1).map(|e| v[e] - v[p - 1]).collect()
    }
}

/// Transform T[α] = Σ_x t[x]·ξ^{sign·α·x} of a count table, in place of t.
fn transform(space: &PointSpace, mut t: ExpCounts, sign: i64) -> ExpCounts {
    let p = space.p() as usize;
    let n = space.n();
    let npoints = space.len();
    let mut line = vec![0i64; p * p];
    let mut stride = 1usize;
    for _ in 0..n {
        let block = stride * p;
        let mut start = 0;
        while start < npoints {
            for offset in 0..stride {
                let base = start + offset;
                // Gather the p points along this coordinate line.
                for j in 0..p {
                    let src = (base + j * stride) * p;
                    line[j * p..j * p + p].copy_from_slice(&t.data[src..src + p]);
                }
                // out[a] = Σ_j rot(line[j], sign·a·j mod p)
                for a in 0..p {
                    let dst = (base + a * stride) * p;
                    let out = &mut t.data[dst..dst + p];
                    out.fill(0);
                    for j in 0..p {
                        let rot = (sign * (a * j) as i64).rem_euclid(p as i64) as usize;
                        let src = &line[j * p..j * p + p];
                        for e in 0..p {
                            out[(e + rot) % p] += src[e];
                        }
                    }
                }
            }
            start += block;
        }
        stride = block;
    }
    t
}

/// T[α] = Σ_x ξ^{phase(x) + sign·α·x}, with `None` phases excluding x.
pub fn char_transform<F>(space: &PointSpace, sign: i64, phase: F) -> ExpCounts
where
    F: Fn(usize) -> Option<u64>,
{
    let p = space.p() as usize;
    let mut t = ExpCounts::zeroed(space);
    for x in 0..space.len() {
        if let Some(e) = phase(x) {
            t.data[x * p + (e as usize % p)] = 1;
        }
    }
    transform(space, t, sign)
}

/// The Walsh spectrum 𝒲_f(α) = Σ_x ξ^{f(x) − α·x} for every α, as counts.
pub fn walsh_counts(f: &PFunction) -> ExpCounts {
    char_transform(f.space(), -1, |x| Some(f.value(x)))
}

/// The Walsh spectrum as cyclotomic integers.
pub fn walsh_transform(f: &PFunction) -> Vec<CycInt> {
    let counts = walsh_counts(f);
    (0..f.space().len()).map(|i| counts.cyc(i)).collect()
}

/// χ_α(cell) = Σ_{x∈cell} ξ^{α·x} for every α.
pub fn cell_char_counts(space: &PointSpace, cell: &[u32]) -> ExpCounts {
    let p = space.p() as usize;
    let mut t = ExpCounts::zeroed(space);
    for &x in cell {
        t.data[x as usize * p] = 1;
    }
    transform(space, t, 1)
}

/// Brute-force Walsh value by the defining double loop; the oracle for the
/// fast transform on small spaces.
pub fn walsh_brute_force(f: &PFunction, alpha: usize) -> CycInt {
    let space = f.space();
    let field = space.field();
    let p = space.p();
    let alpha_vec = space.vec(alpha);
    let mut acc = CycInt::zero(p);
    for x in 0..space.len() {
        let xv = space.vec(x);
        let phase = field.sub(f.value(x), crate::field::dot(field, &alpha_vec, &xv).unwrap());
        acc = acc.add(&CycInt::root(p, phase)).unwrap();
    }
    acc
}

/// Bentness classes, most specific label wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BentClass {
    NotBent,
    Regular,
    WeaklyRegular,
    NonWeaklyRegular,
}

impl BentClass {
    pub fn is_bent(&self) -> bool {
        !matches!(self, BentClass::NotBent)
    }

    /// Constant ε: regular spectra are weakly regular too.
    pub fn is_weakly_regular(&self) -> bool {
        matches!(self, BentClass::Regular | BentClass::WeaklyRegular)
    }

    pub fn label(&self) -> &'static str {
        match self {
            BentClass::NotBent => "not bent",
            BentClass::Regular => "regular",
            BentClass::WeaklyRegular => "weakly regular",
            BentClass::NonWeaklyRegular => "non-weakly regular",
        }
    }
}

/// Everything extracted from a bent spectrum.
#[derive(Debug, Clone)]
pub struct BentData {
    /// ε_α = +1 iff α ∈ B_+(f), per the μ·p^{n/2}·ξ^{f*(α)} normalization.
    pub eps: Vec<i64>,
    /// The dual function f*.
    pub dual: PFunction,
    /// p^n mod 4, which fixes μ (1 ↦ μ = 1, 3 ↦ μ = √−1).
    pub mu_case: u8,
    /// ε_0: +1 for Type (+), −1 for Type (−).
    pub type_sign: i64,
    /// λ for weakly regular spectra ("1", "-1", "i", "-i"); None otherwise.
    pub lambda: Option<&'static str>,
}

/// Spectrum plus classification of one function.
#[derive(Debug, Clone)]
pub struct WalshReport {
    f: PFunction,
    counts: ExpCounts,
    class: BentClass,
    bent: Option<BentData>,
    dual_bent: Option<bool>,
}

impl WalshReport {
    pub fn f(&self) -> &PFunction {
        &self.f
    }

    pub fn class(&self) -> BentClass {
        self.class
    }

    pub fn walsh(&self, alpha: usize) -> CycInt {
        self.counts.cyc(alpha)
    }

    pub fn walsh_counts(&self) -> &ExpCounts {
        &self.counts
    }

    pub fn bent(&self) -> Option<&BentData> {
        self.bent.as_ref()
    }

    /// ε table; only for bent spectra.
    pub fn eps(&self) -> &[i64] {
        &self.bent.as_ref().expect("not bent").eps
    }

    pub fn dual(&self) -> &PFunction {
        &self.bent.as_ref().expect("not bent").dual
    }

    pub fn dual_bent(&self) -> Option<bool> {
        self.dual_bent
    }

    /// Index sets B_+(f) and B_−(f).
    pub fn sign_sets(&self) -> (Vec<u32>, Vec<u32>) {
        let data = self.bent.as_ref().expect("not bent");
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (i, &e) in data.eps.iter().enumerate() {
            if e == 1 {
                plus.push(i as u32);
            } else {
                minus.push(i as u32);
            }
        }
        (plus, minus)
    }
}

/// The exact bent scale: p^{n/2} for even n, √p*·p^{(n−1)/2} for odd n.
pub fn bent_scale(space: &PointSpace) -> CycInt {
    let p = space.p();
    let n = space.n();
    if n % 2 == 0 {
        CycInt::from_int(p, BigInt::from(p).pow(n as u32 / 2))
    } else {
        gauss_sum(space.field()).mul_int(&BigInt::from(p).pow((n as u32 - 1) / 2))
    }
}

/// Classify a spectrum without touching the dual's spectrum.
fn classify_spectrum(f: &PFunction) -> WalshReport {
    let space = *f.space();
    let counts = walsh_counts(f);
    let scale = bent_scale(&space);
    let mut eps = Vec::with_capacity(space.len());
    let mut dual_table = Vec::with_capacity(space.len());
    let mut all_bent = true;
    for alpha in 0..space.len() {
        match counts.cyc(alpha).match_scaled_root(&scale) {
            Some((sign, j)) => {
                eps.push(sign);
                dual_table.push(j as u8);
            }
            None => {
                all_bent = false;
                break;
            }
        }
    }
    if !all_bent {
        return WalshReport {
            f: f.clone(),
            counts,
            class: BentClass::NotBent,
            bent: None,
            dual_bent: None,
        };
    }
    // p^n mod 4: 1 unless p ≡ 3 (mod 4) with n odd.
    let mu_case: u8 = if space.p() % 4 == 3 && space.n() % 2 == 1 {
        3
    } else {
        1
    };
    let type_sign = eps[0];
    let constant = eps.iter().all(|&e| e == type_sign);
    let class = if constant {
        if type_sign == 1 && mu_case == 1 {
            BentClass::Regular
        } else {
            BentClass::WeaklyRegular
        }
    } else {
        BentClass::NonWeaklyRegular
    };
    let lambda = constant.then(|| match (mu_case, type_sign) {
        (1, 1) => "1",
        (1, _) => "-1",
        (_, 1) => "i",
        (_, _) => "-i",
    });
    let dual = PFunction::from_table(space, dual_table).expect("dual values are residues");
    WalshReport {
        f: f.clone(),
        counts,
        class,
        bent: Some(BentData {
            eps,
            dual,
            mu_case,
            type_sign,
            lambda,
        }),
        dual_bent: None,
    }
}

/// Classify f; when bent, also classify the dual spectrum to settle
/// dual-bentness. Returns the report for f and, when bent, the dual's report.
pub fn classify_with_dual(f: &PFunction) -> (WalshReport, Option<WalshReport>) {
    let mut report = classify_spectrum(f);
    let Some(data) = &report.bent else {
        return (report, None);
    };
    let mut dual_report = classify_spectrum(&data.dual);
    report.dual_bent = Some(dual_report.class.is_bent());
    dual_report.dual_bent = dual_report.bent.as_ref().map(|d| {
        // f** = f(−x) = f(x) on the classes handled here; cheap to settle
        // exactly by checking the bi-dual table against f itself.
        d.dual == report.f || classify_spectrum(&d.dual).class.is_bent()
    });
    (report, Some(dual_report))
}

/// Classify a p-ary function.
pub fn classify(f: &PFunction) -> WalshReport {
    classify_with_dual(f).0
}

/// Exact inverse-transform identity: ξ^{f(α)} = p^{-n} Σ_x 𝒲_f(x) ξ^{α·x}.
pub fn inverse_walsh_check(report: &WalshReport) -> bool {
    let space = report.f.space();
    let p = space.p();
    let inv = transform(space, report.counts.clone(), 1);
    let pn = BigInt::from(p).pow(space.n() as u32);
    for alpha in 0..space.len() {
        let lhs = inv.cyc(alpha);
        let rhs = CycInt::root(p, report.f.value(alpha)).mul_int(&pn);
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// A sign set (B_+ or B_−) with its subspace structure, when it has one.
#[derive(Debug, Clone)]
pub struct SignSetInfo {
    pub indices: Vec<u32>,
    pub is_subspace: bool,
    pub subspace: Option<Subspace>,
    pub dim: Option<usize>,
    pub non_degenerate: Option<bool>,
}

fn sign_set_info(space: &PointSpace, indices: Vec<u32>) -> SignSetInfo {
    if indices.is_empty() {
        return SignSetInfo {
            indices,
            is_subspace: false,
            subspace: None,
            dim: None,
            non_degenerate: None,
        };
    }
    let span = crate::field::span_of_indices(space, &indices);
    let spanned = (space.p() as u128).pow(span.dim() as u32);
    let is_subspace = spanned == indices.len() as u128;
    if is_subspace {
        let dim = span.dim();
        let non_degenerate = span.is_non_degenerate();
        SignSetInfo {
            indices,
            is_subspace: true,
            dim: Some(dim),
            non_degenerate: Some(non_degenerate),
            subspace: Some(span),
        }
    } else {
        SignSetInfo {
            indices,
            is_subspace: false,
            subspace: None,
            dim: None,
            non_degenerate: None,
        }
    }
}

/// Subspace structure of B_+(f) and B_−(f).
pub fn bplus_subspace_report(report: &WalshReport) -> Result<(SignSetInfo, SignSetInfo)> {
    if !report.class.is_bent() {
        return Err(Error::NotBent);
    }
    let (plus, minus) = report.sign_sets();
    let space = report.f.space();
    Ok((sign_set_info(space, plus), sign_set_info(space, minus)))
}

/// N_j, c_j, d_j level sets of f, split by B_±(f*) membership.
#[derive(Debug, Clone)]
pub struct LevelSets {
    /// N_j(f) = f^{-1}(j).
    pub n: Vec<Vec<u32>>,
    /// c_j(f) = {x ∈ B_+(f*) : f(x) = j}.
    pub c: Vec<Vec<u32>>,
    /// d_j(f) = {x ∈ B_−(f*) : f(x) = j}.
    pub d: Vec<Vec<u32>>,
    /// B_+(f).
    pub bplus: Vec<u32>,
    /// B_−(f).
    pub bminus: Vec<u32>,
}

/// Level sets of `report`'s function; the c/d split needs the dual's signs.
pub fn level_sets(report: &WalshReport, dual_report: &WalshReport) -> Result<LevelSets> {
    if !report.class.is_bent() {
        return Err(Error::NotBent);
    }
    if !dual_report.class.is_bent() {
        return Err(Error::NonDualBent);
    }
    let f = &report.f;
    let p = f.p() as usize;
    let dual_eps = dual_report.eps();
    let mut n = vec![Vec::new(); p];
    let mut c = vec![Vec::new(); p];
    let mut d = vec![Vec::new(); p];
    for x in 0..f.space().len() {
        let j = f.value(x) as usize;
        n[j].push(x as u32);
        if dual_eps[x] == 1 {
            c[j].push(x as u32);
        } else {
            d[j].push(x as u32);
        }
    }
    let (bplus, bminus) = report.sign_sets();
    Ok(LevelSets {
        n,
        c,
        d,
        bplus,
        bminus,
    })
}

/// S_0(f*, y) and S_1(f*, y) by direct summation over B_±(f*), for all y.
pub fn s0_s1_tables(f: &PFunction, dual_report: &WalshReport) -> (ExpCounts, ExpCounts) {
    let space = f.space();
    let eps = dual_report.eps();
    let s0 = char_transform(space, 1, |x| (eps[x] == 1).then(|| f.value(x)));
    let s1 = char_transform(space, 1, |x| (eps[x] == -1).then(|| f.value(x)));
    (s0, s1)
}

/// Membership in the dual-bent class with f(0) = 0 and homogeneous scaling.
#[derive(Debug, Clone)]
pub enum DbfStatus {
    InDbf {
        h: ScalingExponent,
        t: ScalingExponent,
    },
    NotInDbf {
        reason: String,
    },
}

impl DbfStatus {
    pub fn is_in(&self) -> bool {
        matches!(self, DbfStatus::InDbf { .. })
    }
}

/// Decide 𝒟ℬℱ membership given the two classification reports.
pub fn dbf_membership(report: &WalshReport, dual_report: Option<&WalshReport>) -> Result<DbfStatus> {
    let f = &report.f;
    if f.value(0) != 0 {
        return Ok(DbfStatus::NotInDbf {
            reason: "f(0) != 0".into(),
        });
    }
    let Some(h) = detect_scaling_exponent(f) else {
        return Ok(DbfStatus::NotInDbf {
            reason: "no admissible scaling exponent h".into(),
        });
    };
    if !report.class.is_bent() {
        return Ok(DbfStatus::NotInDbf {
            reason: "f is not bent".into(),
        });
    }
    let Some(dual_report) = dual_report else {
        return Err(Error::Internal("bent report without dual report".into()));
    };
    if !dual_report.class.is_bent() {
        return Ok(DbfStatus::NotInDbf {
            reason: "dual is not bent".into(),
        });
    }
    let dual = report.dual();
    if dual.value(0) != 0 {
        return Err(Error::Internal(
            "dual of a DBF candidate must vanish at 0".into(),
        ));
    }
    let Some(t) = detect_scaling_exponent(dual) else {
        return Err(Error::Internal(
            "dual of a DBF candidate must admit a scaling exponent".into(),
        ));
    };
    // Lemma-level sanity: ε is constant on punctured lines.
    let space = f.space();
    let eps = report.eps();
    for x in 1..space.len() {
        for a in 2..f.p() {
            if eps[space.scale_idx(a, x)] != eps[x] {
                return Err(Error::Internal(format!(
                    "eps not constant on the line through point {x}"
                )));
            }
        }
    }
    Ok(DbfStatus::InDbf { h, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::function::{parse_function, tabulate};

    fn func(expr: &str, p: u64, n: usize) -> PFunction {
        tabulate(&parse_function(expr).unwrap(), p, n).unwrap()
    }

    #[test]
    fn walsh_of_zero_and_constants() {
        let f = func("0", 5, 2);
        let w = walsh_transform(&f);
        assert_eq!(w[0].as_integer().unwrap(), BigInt::from(25));
        for alpha in 1..25 {
            assert!(w[alpha].is_zero());
        }
        let g = func("3", 5, 2);
        let w = walsh_transform(&g);
        assert_eq!(w[0], CycInt::root(5, 3).mul_i64(25));
        for alpha in 1..25 {
            assert!(w[alpha].is_zero());
        }
    }

    #[test]
    fn fast_transform_matches_brute_force() {
        for (expr, p, n) in [
            ("x1^2 + x2^2 + x3^2", 5, 3),
            ("x1*x2 + 2*x2 + 1", 5, 2),
            ("x1^2*x3^4 + x1^2 + x2*x3", 5, 3),
            ("2*x1^2 + x2", 3, 4),
        ] {
            let f = func(expr, p, n);
            let w = walsh_transform(&f);
            for alpha in 0..f.space().len() {
                assert_eq!(w[alpha], walsh_brute_force(&f, alpha), "{expr} at {alpha}");
            }
        }
    }

    #[test]
    fn quadratic_is_bent_with_flat_spectrum() {
        let f = func("x1^2 + x2^2 + x3^2", 5, 3);
        let w = walsh_transform(&f);
        for alpha in 0..125 {
            let norm = w[alpha].mul(&w[alpha].conjugate()).unwrap();
            assert_eq!(norm.as_integer().unwrap(), BigInt::from(125));
        }
        let (report, dual) = classify_with_dual(&f);
        assert!(report.class().is_weakly_regular());
        assert_eq!(report.dual_bent(), Some(true));
        assert!(dual.unwrap().class().is_bent());
    }

    #[test]
    fn linear_function_is_not_bent() {
        let f = func("x1", 5, 2);
        let report = classify(&f);
        assert_eq!(report.class(), BentClass::NotBent);
        assert!(report.bent().is_none());
    }

    #[test]
    fn example1_classification() {
        let entry = catalog::find("ex1-f5n4").unwrap();
        let f = entry.function().unwrap();
        let (report, _) = classify_with_dual(&f);
        assert_eq!(report.class(), BentClass::NonWeaklyRegular);
        let data = report.bent().unwrap();
        assert_eq!(data.type_sign, 1);
        assert_eq!(report.dual_bent(), Some(true));
        // Stated dual polynomial reproduces the extracted dual table.
        let stated = entry.dual_function().unwrap().unwrap();
        assert_eq!(report.dual(), &stated);
        // B_+(f) = F_5^2 × {0} × F_5: a non-degenerate 3-dimensional subspace.
        let (plus, _minus) = bplus_subspace_report(&report).unwrap();
        assert!(plus.is_subspace);
        assert_eq!(plus.dim, Some(3));
        assert_eq!(plus.non_degenerate, Some(true));
        let sub = plus.subspace.unwrap();
        for idx in &plus.indices {
            let v = f.space().vec(*idx as usize);
            assert_eq!(v[2], 0, "B_+(f) vectors have third coordinate 0");
            assert!(sub.contains(&v));
        }
    }

    #[test]
    fn weakly_regular_sign_sets_degenerate() {
        let f = func("x1^2 + x2^2 + x3^2 + x4^2", 5, 4);
        let report = classify(&f);
        assert!(report.class().is_weakly_regular());
        let (plus, minus) = bplus_subspace_report(&report).unwrap();
        let (full, empty) = if plus.indices.len() == 625 {
            (plus, minus)
        } else {
            (minus, plus)
        };
        assert!(full.is_subspace);
        assert_eq!(full.dim, Some(4));
        assert!(empty.indices.is_empty());
        assert!(!empty.is_subspace);
    }

    #[test]
    fn inverse_walsh_holds_and_detects_corruption() {
        let f = func("x1^2*x3^4 + x1^2 + x2*x3", 5, 3);
        let mut report = classify(&f);
        assert!(inverse_walsh_check(&report));
        // Perturb one spectrum entry.
        report.counts.data[17] += 1;
        assert!(!inverse_walsh_check(&report));
    }

    #[test]
    fn level_set_counts_match_lemma3() {
        // Weakly regular odd-n control: |N_{j0}| = p^{n-1} at j0 = f*(0).
        let f = func("x1^2 + x2^2 + x3^2", 5, 3);
        let (report, dual_report) = classify_with_dual(&f);
        let ls = level_sets(&report, dual_report.as_ref().unwrap()).unwrap();
        let j0 = report.dual().value(0) as usize;
        assert_eq!(ls.n[j0].len(), 25);
        let total: usize = ls.c.iter().chain(&ls.d).map(Vec::len).sum();
        assert_eq!(total, 125);
    }

    #[test]
    fn example1_level_sets_match_lemma4() {
        let f = catalog::find("ex1-f5n4").unwrap().function().unwrap();
        let (report, dual_report) = classify_with_dual(&f);
        let dual_report = dual_report.unwrap();
        let ls = level_sets(&report, &dual_report).unwrap();
        // k = |B_+(f*)| = 125; 0 ∈ B_+(f): |c_0| = k/p + (p−1)p^{n/2−1} = 45.
        let k: usize = dual_report.eps().iter().filter(|&&e| e == 1).count();
        assert_eq!(k, 125);
        assert_eq!(ls.c[0].len(), 45);
        for j in 1..5 {
            assert_eq!(ls.c[j].len(), 20);
            assert_eq!(ls.d[j].len(), 100);
        }
        assert_eq!(ls.d[0].len(), 100);
        assert_eq!(ls.bplus.len() + ls.bminus.len(), 625);
    }

    #[test]
    fn dbf_membership_on_catalog() {
        let f = catalog::find("ex1-f5n4").unwrap().function().unwrap();
        let (report, dual_report) = classify_with_dual(&f);
        let status = dbf_membership(&report, dual_report.as_ref()).unwrap();
        match status {
            DbfStatus::InDbf { h, t } => {
                assert_eq!(h.h, 2);
                assert_eq!(t.h, 2);
            }
            DbfStatus::NotInDbf { reason } => panic!("expected DBF membership: {reason}"),
        }
        // f(0) ≠ 0 rejects immediately.
        let g = func("x1^2 + 1", 5, 2);
        let (rg, dg) = classify_with_dual(&g);
        assert!(matches!(
            dbf_membership(&rg, dg.as_ref()).unwrap(),
            DbfStatus::NotInDbf { .. }
        ));
    }

    #[test]
    fn s0_s1_split_the_walsh_value() {
        // S_0(f*,y) + S_1(f*,y) = 𝒲_f(y) for DBF functions.
        let f = catalog::find("ex4-f5n3").unwrap().function().unwrap();
        let (report, dual_report) = classify_with_dual(&f);
        let dual_report = dual_report.unwrap();
        let (s0, s1) = s0_s1_tables(&f, &dual_report);
        for y in 0..f.space().len() {
            let total = s0.cyc(y).add(&s1.cyc(y)).unwrap();
            assert_eq!(total, report.walsh(y));
        }
    }
}
