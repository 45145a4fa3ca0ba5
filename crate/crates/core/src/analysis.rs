//! One-stop analysis of a p-ary function: classification of f and f*, level
//! sets in both directions, sign-set subspace structure, and the scaling
//! exponents h and t. This is the input every partition family consumes.

use crate::error::{Error, Result};
use crate::function::{PFunction, ScalingExponent};
use crate::walsh::{
    bplus_subspace_report, classify_with_dual, dbf_membership, level_sets, DbfStatus, LevelSets,
    SignSetInfo, WalshReport,
};

/// Classification and combinatorial data for f and, when bent, its dual.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub f: PFunction,
    pub report: WalshReport,
    pub dual_report: Option<WalshReport>,
    /// N_j/c_j/d_j of f (c/d split by B_±(f*)); needs a bent dual.
    pub level: Option<LevelSets>,
    /// N_j/c_j/d_j of f* (c/d split by B_±(f** ) = B_±(f)).
    pub level_dual: Option<LevelSets>,
    /// Subspace structure of B_+(f), B_−(f).
    pub signs: Option<(SignSetInfo, SignSetInfo)>,
    /// Subspace structure of B_+(f*), B_−(f*).
    pub signs_dual: Option<(SignSetInfo, SignSetInfo)>,
    pub dbf: DbfStatus,
}

impl Analysis {
    pub fn new(f: &PFunction) -> Result<Analysis> {
        let (report, dual_report) = classify_with_dual(f);
        let dbf = dbf_membership(&report, dual_report.as_ref())?;
        let mut level = None;
        let mut level_dual = None;
        let mut signs = None;
        let mut signs_dual = None;
        if report.class().is_bent() {
            signs = Some(bplus_subspace_report(&report)?);
            let dual_report = dual_report
                .as_ref()
                .ok_or_else(|| Error::Internal("bent report without dual report".into()))?;
            if dual_report.class().is_bent() {
                level = Some(level_sets(&report, dual_report)?);
                level_dual = Some(level_sets(dual_report, &report)?);
                signs_dual = Some(bplus_subspace_report(dual_report)?);
            }
        }
        Ok(Analysis {
            f: f.clone(),
            report,
            dual_report,
            level,
            level_dual,
            signs,
            signs_dual,
            dbf,
        })
    }

    pub fn p(&self) -> u64 {
        self.f.p()
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn is_bent(&self) -> bool {
        self.report.class().is_bent()
    }

    pub fn is_dual_bent(&self) -> bool {
        self.report.dual_bent() == Some(true)
    }

    /// The scaling exponent h of f, when f ∈ 𝒟ℬℱ.
    pub fn h(&self) -> Option<&ScalingExponent> {
        match &self.dbf {
            DbfStatus::InDbf { h, .. } => Some(h),
            DbfStatus::NotInDbf { .. } => None,
        }
    }

    /// The scaling exponent t of f*, when f ∈ 𝒟ℬℱ.
    pub fn t(&self) -> Option<&ScalingExponent> {
        match &self.dbf {
            DbfStatus::InDbf { t, .. } => Some(t),
            DbfStatus::NotInDbf { .. } => None,
        }
    }

    pub fn level(&self) -> Result<&LevelSets> {
        self.level.as_ref().ok_or(Error::NonDualBent)
    }

    pub fn level_dual(&self) -> Result<&LevelSets> {
        self.level_dual.as_ref().ok_or(Error::NonDualBent)
    }

    pub fn signs(&self) -> Result<&(SignSetInfo, SignSetInfo)> {
        self.signs.as_ref().ok_or(Error::NotBent)
    }

    pub fn signs_dual(&self) -> Result<&(SignSetInfo, SignSetInfo)> {
        self.signs_dual.as_ref().ok_or(Error::NonDualBent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::walsh::BentClass;

    #[test]
    fn analysis_of_example1() {
        let f = catalog::find("ex1-f5n4").unwrap().function().unwrap();
        let a = Analysis::new(&f).unwrap();
        assert_eq!(a.report.class(), BentClass::NonWeaklyRegular);
        assert!(a.is_dual_bent());
        assert!(a.dbf.is_in());
        assert_eq!(a.h().unwrap().h, 2);
        assert_eq!(a.t().unwrap().h, 2);
        let (plus, _) = a.signs().unwrap();
        assert_eq!(plus.dim, Some(3));
        let (plus_dual, _) = a.signs_dual().unwrap();
        assert_eq!(plus_dual.dim, Some(3));
        assert_eq!(plus_dual.non_degenerate, Some(true));
    }

    #[test]
    fn cross_level_sets_are_consistent() {
        // |c_j(f)| = |c_j(f*)| for p^n ≡ 1 (mod 4) when |B_+(f)| = |B_+(f*)|.
        let f = catalog::find("ex1-f5n4").unwrap().function().unwrap();
        let a = Analysis::new(&f).unwrap();
        let level = a.level().unwrap();
        let level_dual = a.level_dual().unwrap();
        for j in 0..5 {
            assert_eq!(level.c[j].len(), level_dual.c[j].len());
            assert_eq!(level.d[j].len(), level_dual.d[j].len());
        }
    }
}
