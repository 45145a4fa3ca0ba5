//! Cross-checks between the brute-force scheme pipeline and the closed-form
//! evaluators: eigenmatrix tables and the U1..U9 parameter lists.

use std::fmt;

use crate::analysis::Analysis;
use crate::closed_forms::params::closed_intersection_krein;
use crate::closed_forms::tables::{family_eigenmatrices, family_tables, TableParams};
use crate::cyclotomic::CycRat;
use crate::error::{Error, Result};
use crate::partition::{build_family, Family};
use crate::scheme::{verify_scheme, SchemeReport};

/// One comparison outcome; mismatches carry the first differing entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    Match,
    Mismatch {
        location: String,
        expected: String,
        actual: String,
    },
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        matches!(self, CheckResult::Match)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckResult::Match => write!(f, "ok"),
            CheckResult::Mismatch {
                location,
                expected,
                actual,
            } => write!(f, "mismatch at {location}: closed {expected} vs exact {actual}"),
        }
    }
}

/// Everything checked for one (function, family) pair.
#[derive(Debug)]
pub struct FamilyCheck {
    pub family: Family,
    pub classes: usize,
    pub aligned: bool,
    /// Closed-form first/second eigenmatrix comparisons (U families only).
    pub table_p: Option<(u8, CheckResult)>,
    pub table_q: Option<(u8, CheckResult)>,
    /// Closed-form parameter tensors (U1..U9 only).
    pub closed_p: Option<CheckResult>,
    pub closed_q: Option<CheckResult>,
    pub report: SchemeReport,
}

impl FamilyCheck {
    pub fn all_ok(&self) -> bool {
        self.table_p.as_ref().map_or(true, |(_, c)| c.ok())
            && self.table_q.as_ref().map_or(true, |(_, c)| c.ok())
            && self.closed_p.as_ref().map_or(true, CheckResult::ok)
            && self.closed_q.as_ref().map_or(true, CheckResult::ok)
    }
}

fn table_params(analysis: &Analysis, family: Family) -> Result<TableParams> {
    let h = analysis
        .h()
        .ok_or_else(|| Error::BadParams {
            what: "table comparison".into(),
            reason: "function has no scaling exponent h".into(),
        })?
        .h;
    let t = analysis.t().expect("t exists whenever h does").h;
    // The subspace dimension of whichever sign pair the family uses; all
    // four subspace sign sets share it when the guards hold.
    let r = [&analysis.signs()?.0, &analysis.signs()?.1]
        .iter()
        .find_map(|s| s.dim)
        .or_else(|| {
            [&analysis.signs_dual().ok()?.0, &analysis.signs_dual().ok()?.1]
                .iter()
                .find_map(|s| s.dim)
        })
        .ok_or_else(|| Error::BadParams {
            what: "table comparison".into(),
            reason: "no subspace sign set".into(),
        })?;
    let _ = family;
    Ok(TableParams {
        p: analysis.p(),
        n: analysis.n(),
        r,
        h,
        t,
    })
}

fn compare_matrices(
    closed: &[Vec<crate::cyclotomic::CycInt>],
    exact: &[Vec<crate::cyclotomic::CycInt>],
) -> CheckResult {
    if closed.len() != exact.len() {
        return CheckResult::Mismatch {
            location: "dimension".into(),
            expected: closed.len().to_string(),
            actual: exact.len().to_string(),
        };
    }
    for (i, (crow, erow)) in closed.iter().zip(exact).enumerate() {
        for (j, (c, e)) in crow.iter().zip(erow).enumerate() {
            if c != e {
                return CheckResult::Mismatch {
                    // 1-based, matching the published table indexing.
                    location: format!("({}, {})", i + 1, j + 1),
                    expected: c.to_string(),
                    actual: e.to_string(),
                };
            }
        }
    }
    CheckResult::Match
}

fn compare_p_tensors(
    closed: &[Vec<Vec<num_bigint::BigInt>>],
    exact: &[Vec<Vec<num_bigint::BigInt>>],
) -> CheckResult {
    for (w, wc) in closed.iter().enumerate() {
        for (u, uc) in wc.iter().enumerate() {
            for (v, c) in uc.iter().enumerate() {
                if *c != exact[w][u][v] {
                    return CheckResult::Mismatch {
                        location: format!("p^{w}_{{{u},{v}}}"),
                        expected: c.to_string(),
                        actual: exact[w][u][v].to_string(),
                    };
                }
            }
        }
    }
    CheckResult::Match
}

fn compare_q_tensors(closed: &[Vec<Vec<CycRat>>], exact: &[Vec<Vec<CycRat>>]) -> CheckResult {
    for (w, wc) in closed.iter().enumerate() {
        for (u, uc) in wc.iter().enumerate() {
            for (v, c) in uc.iter().enumerate() {
                if *c != exact[w][u][v] {
                    return CheckResult::Mismatch {
                        location: format!("q^{w}_{{{u},{v}}}"),
                        expected: c.to_string(),
                        actual: exact[w][u][v].to_string(),
                    };
                }
            }
        }
    }
    CheckResult::Match
}

/// Build a family, verify the scheme it induces, and compare it against the
/// applicable closed forms.
pub fn check_family(analysis: &Analysis, family: Family) -> Result<FamilyCheck> {
    let partition = build_family(family, analysis)?;
    let report = verify_scheme(&partition, Some(analysis))?;
    let mut check = FamilyCheck {
        family,
        classes: report.d(),
        aligned: report.aligned(),
        table_p: None,
        table_q: None,
        closed_p: None,
        closed_q: None,
        report,
    };
    if matches!(family, Family::Uk(_)) {
        let params = table_params(analysis, family)?;
        let (pid, qid) = family_tables(family)?;
        let (closed_p, closed_q) = family_eigenmatrices(family, &params)?;
        check.table_p = Some((pid, compare_matrices(&closed_p, check.report.p_matrix())));
        check.table_q = Some((qid, compare_matrices(&closed_q, check.report.q_matrix())));
        if matches!(family, Family::Uk(1..=9)) {
            let tensors = closed_intersection_krein(family, &params)?;
            check.closed_p = Some(compare_p_tensors(&tensors.p_num, check.report.p_num()));
            check.closed_q = Some(compare_q_tensors(&tensors.q_num, check.report.q_num()));
        }
    }
    Ok(check)
}

/// The families the source constructions claim for each catalog example.
pub fn claimed_families(name: &str) -> &'static [Family] {
    match name {
        "ex1-f5n4" => &[Family::Uk(1), Family::Uk(4), Family::Uk(5)],
        "ex2-f5n4-minus" => &[Family::Uk(2), Family::Uk(6), Family::Uk(7)],
        "ex3-f5n6-minus" => &[Family::Uk(3), Family::Uk(8), Family::Uk(9)],
        "ex4-f5n3" => &[Family::Uk(10), Family::Uk(18)],
        "ex5-f5n5" => &[Family::Uk(12), Family::Uk(20)],
        "ex6-f5n3-minus" => &[Family::Uk(14), Family::Uk(22)],
        "ex7-f5n5-minus" => &[Family::Uk(16), Family::Uk(24)],
        "ex-f7n3-minus" => &[Family::Uk(11), Family::Uk(19)],
        "ex-f7n5-minus" => &[Family::Uk(13), Family::Uk(21)],
        "ex-f7n3-plus" => &[Family::Uk(15), Family::Uk(23)],
        "ex-f7n5-plus" => &[Family::Uk(17), Family::Uk(25)],
        "wr-quad-f5n4" => &[Family::U, Family::V],
        "wr-quad-f5n3" | "wr-quad-f7n3" => &[Family::U],
        _ => &[],
    }
}

/// Class counts claimed for each (example, family) pair.
pub fn claimed_classes(family: Family, p: u64) -> Option<usize> {
    let p = p as usize;
    Some(match family {
        Family::Uk(1) | Family::Uk(3) | Family::Uk(12) | Family::Uk(13) | Family::Uk(16)
        | Family::Uk(17) => 2 * p + 1,
        Family::Uk(2) => 2 * p,
        Family::Uk(10) | Family::Uk(11) | Family::Uk(14) | Family::Uk(15) => (3 * p + 1) / 2,
        Family::Uk(4) | Family::Uk(8) | Family::Uk(20) | Family::Uk(21) | Family::Uk(24)
        | Family::Uk(25) => 7,
        Family::Uk(5) | Family::Uk(9) | Family::Uk(18) | Family::Uk(19) | Family::Uk(22)
        | Family::Uk(23) => 5,
        Family::Uk(6) => 6,
        Family::Uk(7) => 4,
        Family::U => 3,
        Family::V => 2,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn u1_on_example1_matches_tables_and_lists() {
        let f = catalog::find("ex1-f5n4").unwrap().function().unwrap();
        let a = Analysis::new(&f).unwrap();
        let check = check_family(&a, Family::Uk(1)).unwrap();
        assert_eq!(check.classes, 11);
        assert!(check.aligned);
        let (pid, p_res) = check.table_p.as_ref().unwrap();
        assert_eq!(*pid, 1);
        assert!(p_res.ok(), "table 1: {p_res}");
        let (qid, q_res) = check.table_q.as_ref().unwrap();
        assert_eq!(*qid, 2);
        assert!(q_res.ok(), "table 2: {q_res}");
        let cp = check.closed_p.as_ref().unwrap();
        assert!(cp.ok(), "closed p-tensor: {cp}");
        let cq = check.closed_q.as_ref().unwrap();
        assert!(cq.ok(), "closed q-tensor: {cq}");
    }
}
