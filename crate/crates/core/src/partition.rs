//! Partition families built from a classified dual-bent function: the
//! twenty-five U-families, their P/D/T relatives and the coarse U/V split,
//! each with the applicability guards of its source construction.

use std::fmt;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::field::{PointSpace, Subspace};
use crate::walsh::{LevelSets, SignSetInfo};

/// Which partition family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// U_k for k = 1..=25.
    Uk(u8),
    P,
    D,
    T,
    U,
    V,
}

impl Family {
    pub fn parse(text: &str) -> Option<Family> {
        match text {
            "P" => Some(Family::P),
            "D" => Some(Family::D),
            "T" => Some(Family::T),
            "U" => Some(Family::U),
            "V" => Some(Family::V),
            _ => {
                let k: u8 = text.strip_prefix('U')?.parse().ok()?;
                (1..=25).contains(&k).then_some(Family::Uk(k))
            }
        }
    }

    /// All families, in a fixed order.
    pub fn all() -> Vec<Family> {
        let mut out: Vec<Family> = (1..=25).map(Family::Uk).collect();
        out.extend([Family::P, Family::D, Family::T, Family::U, Family::V]);
        out
    }

    /// The family whose pattern describes this one's dual partition, built
    /// from f*. Identity except for the p ≡ 3 (mod 4) pairs.
    pub fn dual_family(self) -> Family {
        match self {
            Family::Uk(11) => Family::Uk(15),
            Family::Uk(15) => Family::Uk(11),
            Family::Uk(13) => Family::Uk(17),
            Family::Uk(17) => Family::Uk(13),
            Family::Uk(19) => Family::Uk(23),
            Family::Uk(23) => Family::Uk(19),
            Family::Uk(21) => Family::Uk(25),
            Family::Uk(25) => Family::Uk(21),
            other => other,
        }
    }

    /// The finer family this one fuses, if it is a fusion.
    pub fn fusion_base(self) -> Option<Family> {
        match self {
            Family::Uk(4) | Family::Uk(5) => Some(Family::Uk(1)),
            Family::Uk(6) | Family::Uk(7) => Some(Family::Uk(2)),
            Family::Uk(8) | Family::Uk(9) => Some(Family::Uk(3)),
            Family::Uk(18) => Some(Family::Uk(10)),
            Family::Uk(19) => Some(Family::Uk(11)),
            Family::Uk(20) => Some(Family::Uk(12)),
            Family::Uk(21) => Some(Family::Uk(13)),
            Family::Uk(22) => Some(Family::Uk(14)),
            Family::Uk(23) => Some(Family::Uk(15)),
            Family::Uk(24) => Some(Family::Uk(16)),
            Family::Uk(25) => Some(Family::Uk(17)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Uk(k) => write!(f, "U{k}"),
            Family::P => write!(f, "P"),
            Family::D => write!(f, "D"),
            Family::T => write!(f, "T"),
            Family::U => write!(f, "U"),
            Family::V => write!(f, "V"),
        }
    }
}

/// An ordered partition of 𝔽_p^n into labelled cells, cell 0 = {0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    space: PointSpace,
    cells: Vec<Vec<u32>>,
    labels: Vec<String>,
    family: Option<Family>,
}

impl Partition {
    pub fn new(
        space: PointSpace,
        cells: Vec<Vec<u32>>,
        labels: Vec<String>,
        family: Option<Family>,
    ) -> Result<Partition> {
        let partition = Partition {
            space,
            cells,
            labels,
            family,
        };
        partition.validate()?;
        Ok(partition)
    }

    fn validate(&self) -> Result<()> {
        if self.cells.len() != self.labels.len() {
            return Err(Error::Internal("cells/labels length mismatch".into()));
        }
        if self.cells.first().map(Vec::as_slice) != Some(&[0u32]) {
            return Err(Error::Internal("cell 0 must be {0}".into()));
        }
        let mut seen = vec![false; self.space.len()];
        for cell in &self.cells {
            if cell.is_empty() {
                return Err(Error::Internal("empty cell".into()));
            }
            for &x in cell {
                let x = x as usize;
                if x >= seen.len() || seen[x] {
                    return Err(Error::Internal("cells overlap or leave the space".into()));
                }
                seen[x] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Internal("cells do not cover the space".into()));
        }
        Ok(())
    }

    pub fn space(&self) -> &PointSpace {
        &self.space
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    /// Number of classes d (= cells − 1).
    pub fn classes(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Cell index containing each point.
    pub fn membership(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.space.len()];
        for (i, cell) in self.cells.iter().enumerate() {
            for &x in cell {
                out[x as usize] = i as u32;
            }
        }
        out
    }

    /// Every cell closed under negation.
    pub fn is_symmetric(&self) -> bool {
        let membership = self.membership();
        (0..self.space.len())
            .all(|x| membership[x] == membership[self.space.neg_idx(x)])
    }

    /// Text export: one `cell <i> "<label>": idx...` line per cell.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for (i, (cell, label)) in self.cells.iter().zip(&self.labels).enumerate() {
            out.push_str(&format!("cell {i} \"{label}\":"));
            for &x in cell {
                out.push_str(&format!(" {x}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn export_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.space.p(),
            "n": self.space.n(),
            "cells": self.cells.iter().zip(&self.labels).map(|(cell, label)| {
                serde_json::json!({ "label": label, "points": cell })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Which function's data a family is built from: the function itself or its
/// dual (the latter realizes the dual partitions named in the constructions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Primal,
    Dual,
}

struct BuildCtx<'a> {
    analysis: &'a Analysis,
    space: PointSpace,
    level: &'a LevelSets,
    plus: &'a SignSetInfo,
    minus: &'a SignSetInfo,
    sq: Vec<u64>,
    nsq: Vec<u64>,
}

impl<'a> BuildCtx<'a> {
    fn new(analysis: &'a Analysis, side: Side) -> Result<Self> {
        let (level, signs) = match side {
            Side::Primal => (analysis.level()?, analysis.signs()?),
            Side::Dual => (analysis.level_dual()?, analysis.signs_dual()?),
        };
        let (sq, nsq) = analysis.f.space().field().sq_nsq_ordered();
        Ok(BuildCtx {
            analysis,
            space: *analysis.f.space(),
            level,
            plus: &signs.0,
            minus: &signs.1,
            sq,
            nsq,
        })
    }

    fn c(&self, j: u64) -> &[u32] {
        &self.level.c[j as usize]
    }

    fn d(&self, j: u64) -> &[u32] {
        &self.level.d[j as usize]
    }

    fn union_c(&self, js: &[u64]) -> Vec<u32> {
        union_cells(js.iter().map(|&j| self.c(j)))
    }

    fn union_d(&self, js: &[u64]) -> Vec<u32> {
        union_cells(js.iter().map(|&j| self.d(j)))
    }

    fn fstar_units(&self) -> Vec<u64> {
        (1..self.space.p()).collect()
    }
}

fn union_cells<'a>(parts: impl Iterator<Item = &'a [u32]>) -> Vec<u32> {
    let mut out: Vec<u32> = parts.flatten().copied().collect();
    out.sort_unstable();
    out
}

fn difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len());
    let mut it = b.iter().peekable();
    for &x in a {
        while it.peek().is_some_and(|&&y| y < x) {
            it.next();
        }
        if it.peek() == Some(&&x) {
            continue;
        }
        out.push(x);
    }
    out
}

/// Enumerate a subspace as a sorted index set.
pub fn subspace_indices(space: &PointSpace, subspace: &Subspace) -> Vec<u32> {
    let p = space.p();
    let basis_idx: Vec<usize> = subspace
        .basis()
        .iter()
        .map(|row| space.idx(row))
        .collect();
    let mut out = vec![0u32];
    for &b in &basis_idx {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for a in 0..p {
            let shifted = space.scale_idx(a, b);
            for &x in &out {
                next.push(space.add_idx(x as usize, shifted) as u32);
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

fn inapplicable(family: Family, reason: impl Into<String>) -> Error {
    Error::Inapplicable {
        family: family.to_string(),
        reason: reason.into(),
    }
}

/// Sign-set pair cases of the subspace hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairCase {
    /// B_+(f) and B_+(f*).
    PlusPlus,
    /// B_−(f) and B_−(f*).
    MinusMinus,
    /// B_−(f) and B_+(f*).
    MinusPlus,
    /// B_+(f) and B_−(f*).
    PlusMinus,
}

/// Check the non-weakly-regular 𝒟ℬℱ + subspace-pair hypotheses and return r.
fn subspace_pair_r(
    analysis: &Analysis,
    side: Side,
    family: Family,
    case: PairCase,
) -> Result<usize> {
    if !analysis.report.class().is_bent() {
        return Err(inapplicable(family, "f is not bent"));
    }
    if analysis.report.class().is_weakly_regular() {
        return Err(inapplicable(family, "f not non-weakly regular"));
    }
    if !analysis.dbf.is_in() {
        return Err(inapplicable(family, "f not in the DBF class"));
    }
    let signs = analysis.signs()?;
    let signs_dual = analysis.signs_dual()?;
    // On the dual side the roles of f and f* swap (B_±(f**) = B_±(f)).
    let (primal, dual) = match side {
        Side::Primal => (signs, signs_dual),
        Side::Dual => (signs_dual, signs),
    };
    let (first, second, what) = match case {
        PairCase::PlusPlus => (&primal.0, &dual.0, "B+(f) and B+(f*)"),
        PairCase::MinusMinus => (&primal.1, &dual.1, "B-(f) and B-(f*)"),
        PairCase::MinusPlus => (&primal.1, &dual.0, "B-(f) and B+(f*)"),
        PairCase::PlusMinus => (&primal.0, &dual.1, "B+(f) and B-(f*)"),
    };
    for info in [first, second] {
        if !info.is_subspace {
            return Err(inapplicable(family, format!("{what} must be subspaces")));
        }
        if info.non_degenerate != Some(true) {
            return Err(inapplicable(
                family,
                format!("{what} must be non-degenerate"),
            ));
        }
    }
    if first.dim != second.dim {
        return Err(inapplicable(
            family,
            format!("{what} must share one dimension r"),
        ));
    }
    Ok(first.dim.unwrap())
}

/// Perp of the stated sign set of f (f* on the dual side), as an index set.
fn perp_indices(ctx: &BuildCtx, plus_side: bool) -> Vec<u32> {
    let info = if plus_side { ctx.plus } else { ctx.minus };
    let sub = info
        .subspace
        .as_ref()
        .expect("guards establish the subspace");
    subspace_indices(&ctx.space, &sub.orthogonal_complement())
}

struct CellList {
    cells: Vec<Vec<u32>>,
    labels: Vec<String>,
}

impl CellList {
    fn new() -> Self {
        CellList {
            cells: vec![vec![0u32]],
            labels: vec!["{0}".into()],
        }
    }

    fn push(&mut self, label: impl Into<String>, cell: Vec<u32>) {
        self.cells.push(cell);
        self.labels.push(label.into());
    }

    /// Push, erroring when the construction mandates a nonempty cell.
    fn push_required(
        &mut self,
        family: Family,
        label: impl Into<String>,
        cell: Vec<u32>,
    ) -> Result<()> {
        let label = label.into();
        if cell.is_empty() {
            return Err(Error::EmptyCell {
                family: family.to_string(),
                label,
            });
        }
        self.push(label, cell);
        Ok(())
    }

    /// Push only when nonempty (the P/D/T/U/V "nonempty sets" convention).
    fn push_optional(&mut self, label: impl Into<String>, cell: Vec<u32>) {
        if !cell.is_empty() {
            self.push(label, cell);
        }
    }

    fn finish(self, space: PointSpace, family: Family) -> Result<Partition> {
        Partition::new(space, self.cells, self.labels, Some(family))
    }
}

fn side_tag(side: Side) -> &'static str {
    match side {
        Side::Primal => "f",
        Side::Dual => "f*",
    }
}

/// Build a family from the analysis of f. `side` selects whether the cells
/// come from f (the construction itself) or from f* (its dual partition).
pub fn build_family_on(family: Family, analysis: &Analysis, side: Side) -> Result<Partition> {
    let Family::Uk(k) = family else {
        return build_pdtuv_on(family, analysis, side);
    };
    let p = analysis.p();
    let n = analysis.n();
    let even = n % 2 == 0;
    let p1mod4 = p % 4 == 1;
    let half_plus = n / 2 + 1; // n even
    let odd_mid = n.div_ceil(2); // (n+1)/2 for odd n

    // Guards: parity, p mod 4, sign-set pair, and the r-range.
    let (case, r_lo, r_hi, needs_even): (PairCase, usize, usize, bool) = match k {
        1 | 4 | 5 => (PairCase::PlusPlus, half_plus, n - 1, true),
        2 | 6 | 7 => (PairCase::MinusMinus, half_plus, half_plus, true),
        3 | 8 | 9 => (PairCase::MinusMinus, half_plus + 1, n - 1, true),
        10 | 18 => (PairCase::PlusPlus, odd_mid, odd_mid, false),
        12 | 20 => (PairCase::PlusPlus, odd_mid + 1, n - 1, false),
        11 | 19 => (PairCase::MinusPlus, odd_mid, odd_mid, false),
        13 | 21 => (PairCase::MinusPlus, odd_mid + 1, n - 1, false),
        14 | 22 => (PairCase::MinusMinus, odd_mid, odd_mid, false),
        16 | 24 => (PairCase::MinusMinus, odd_mid + 1, n - 1, false),
        15 | 23 => (PairCase::PlusMinus, odd_mid, odd_mid, false),
        17 | 25 => (PairCase::PlusMinus, odd_mid + 1, n - 1, false),
        _ => unreachable!("family index validated at parse time"),
    };
    if needs_even {
        if !even || n < 4 {
            return Err(inapplicable(family, "requires even n >= 4"));
        }
    } else {
        if even || n < 3 {
            return Err(inapplicable(family, "requires odd n >= 3"));
        }
        let wants_p1 = matches!(k, 10 | 12 | 14 | 16 | 18 | 20 | 22 | 24);
        if wants_p1 != p1mod4 {
            return Err(inapplicable(
                family,
                if wants_p1 {
                    "requires p = 1 (mod 4)"
                } else {
                    "requires p = 3 (mod 4)"
                },
            ));
        }
    }
    // The dual side swaps the sign-set pair exactly for the p = 3 (mod 4)
    // cross cases, matching `Family::dual_family`.
    let r = subspace_pair_r(analysis, side, family, case)?;
    if r < r_lo || r > r_hi {
        return Err(inapplicable(
            family,
            format!("requires {r_lo} <= r <= {r_hi}, got r = {r}"),
        ));
    }

    let ctx = BuildCtx::new(analysis, side)?;
    let tag = side_tag(side);
    let mut list = CellList::new();
    let units = ctx.fstar_units();
    // Which of B_+/B_− of the cell-side function carries the perp set; the
    // BuildCtx side swap already mirrors f ↔ f*.
    let perp_plus_side = match k {
        1 | 4 | 5 | 12 | 20 | 17 | 25 => true,
        3 | 8 | 9 | 13 | 21 | 16 | 24 => false,
        _ => true, // unused
    };
    let perp_label_sign = if perp_plus_side { "+" } else { "-" };
    let perp = |ctx: &BuildCtx| perp_indices(ctx, perp_plus_side);

    match k {
        1 | 12 | 13 => {
            let perp = perp(&ctx);
            list.push_required(
                family,
                format!("B{perp_label_sign}({tag})^perp\\{{0}}"),
                difference(&perp, &[0]),
            )?;
            list.push_required(
                family,
                format!("c0({tag})\\B{perp_label_sign}^perp"),
                difference(ctx.c(0), &perp),
            )?;
            for j in 1..p {
                list.push_required(family, format!("c{j}({tag})"), ctx.c(j).to_vec())?;
            }
            for j in 0..p {
                list.push_required(family, format!("d{j}({tag})"), ctx.d(j).to_vec())?;
            }
        }
        2 => {
            for j in 0..p {
                list.push_required(family, format!("c{j}({tag})"), ctx.c(j).to_vec())?;
            }
            list.push_required(family, format!("d0({tag})\\{{0}}"), difference(ctx.d(0), &[0]))?;
            for j in 1..p {
                list.push_required(family, format!("d{j}({tag})"), ctx.d(j).to_vec())?;
            }
        }
        3 => {
            let perp = perp(&ctx);
            for j in 0..p {
                list.push_required(family, format!("c{j}({tag})"), ctx.c(j).to_vec())?;
            }
            list.push_required(
                family,
                format!("B-({tag})^perp\\{{0}}"),
                difference(&perp, &[0]),
            )?;
            list.push_required(
                family,
                format!("d0({tag})\\B-^perp"),
                difference(ctx.d(0), &perp),
            )?;
            for j in 1..p {
                list.push_required(family, format!("d{j}({tag})"), ctx.d(j).to_vec())?;
            }
        }
        4 | 5 | 20 | 21 => {
            let perp = perp(&ctx);
            list.push_required(
                family,
                format!("B{perp_label_sign}({tag})^perp\\{{0}}"),
                difference(&perp, &[0]),
            )?;
            list.push_required(
                family,
                format!("c0({tag})\\B{perp_label_sign}^perp"),
                difference(ctx.c(0), &perp),
            )?;
            if matches!(k, 4 | 20 | 21) {
                list.push_required(family, format!("c_SQ({tag})"), ctx.union_c(&ctx.sq))?;
                list.push_required(family, format!("c_NSQ({tag})"), ctx.union_c(&ctx.nsq))?;
            } else {
                list.push_required(family, format!("c_F*({tag})"), ctx.union_c(&units))?;
            }
            list.push_required(family, format!("d0({tag})"), ctx.d(0).to_vec())?;
            if matches!(k, 4 | 20 | 21) {
                list.push_required(family, format!("d_SQ({tag})"), ctx.union_d(&ctx.sq))?;
                list.push_required(family, format!("d_NSQ({tag})"), ctx.union_d(&ctx.nsq))?;
            } else {
                list.push_required(family, format!("d_F*({tag})"), ctx.union_d(&units))?;
            }
        }
        6 | 7 => {
            list.push_required(family, format!("c0({tag})"), ctx.c(0).to_vec())?;
            if k == 6 {
                list.push_required(family, format!("c_SQ({tag})"), ctx.union_c(&ctx.sq))?;
                list.push_required(family, format!("c_NSQ({tag})"), ctx.union_c(&ctx.nsq))?;
            } else {
                list.push_required(family, format!("c_F*({tag})"), ctx.union_c(&units))?;
            }
            list.push_required(family, format!("d0({tag})\\{{0}}"), difference(ctx.d(0), &[0]))?;
            if k == 6 {
                list.push_required(family, format!("d_SQ({tag})"), ctx.union_d(&ctx.sq))?;
                list.push_required(family, format!("d_NSQ({tag})"), ctx.union_d(&ctx.nsq))?;
            } else {
                list.push_required(family, format!("d_F*({tag})"), ctx.union_d(&units))?;
            }
        }
        8 | 9 | 24 | 25 => {
            let perp = perp(&ctx);
            list.push_required(family, format!("c0({tag})"), ctx.c(0).to_vec())?;
            if matches!(k, 8 | 24 | 25) {
                list.push_required(family, format!("c_SQ({tag})"), ctx.union_c(&ctx.sq))?;
                list.push_required(family, format!("c_NSQ({tag})"), ctx.union_c(&ctx.nsq))?;
            } else {
                list.push_required(family, format!("c_F*({tag})"), ctx.union_c(&units))?;
            }
            list.push_required(
                family,
                format!("B{perp_label_sign}({tag})^perp\\{{0}}"),
                difference(&perp, &[0]),
            )?;
            list.push_required(
                family,
                format!("d0({tag})\\B{perp_label_sign}^perp"),
                difference(ctx.d(0), &perp),
            )?;
            if matches!(k, 8 | 24 | 25) {
                list.push_required(family, format!("d_SQ({tag})"), ctx.union_d(&ctx.sq))?;
                list.push_required(family, format!("d_NSQ({tag})"), ctx.union_d(&ctx.nsq))?;
            } else {
                list.push_required(family, format!("d_F*({tag})"), ctx.union_d(&units))?;
            }
        }
        10 | 11 => {
            // Nonzero c-cells survive only on squares (k=10) / nonsquares (k=11).
            let kept = if k == 10 { &ctx.sq } else { &ctx.nsq };
            let dropped = if k == 10 { &ctx.nsq } else { &ctx.sq };
            for &j in dropped {
                if !ctx.c(j).is_empty() {
                    return Err(inapplicable(
                        family,
                        format!("expected empty cell c{j} is nonempty"),
                    ));
                }
            }
            list.push_required(family, format!("c0({tag})\\{{0}}"), difference(ctx.c(0), &[0]))?;
            for &j in kept {
                list.push_required(family, format!("c{j}({tag})"), ctx.c(j).to_vec())?;
            }
            for j in 0..p {
                list.push_required(family, format!("d{j}({tag})"), ctx.d(j).to_vec())?;
            }
        }
        14 | 15 => {
            let kept = if k == 14 { &ctx.nsq } else { &ctx.sq };
            let dropped = if k == 14 { &ctx.sq } else { &ctx.nsq };
            for &j in dropped {
                if !ctx.d(j).is_empty() {
                    return Err(inapplicable(
                        family,
                        format!("expected empty cell d{j} is nonempty"),
                    ));
                }
            }
            for j in 0..p {
                list.push_required(family, format!("c{j}({tag})"), ctx.c(j).to_vec())?;
            }
            list.push_required(family, format!("d0({tag})\\{{0}}"), difference(ctx.d(0), &[0]))?;
            for &j in kept {
                list.push_required(family, format!("d{j}({tag})"), ctx.d(j).to_vec())?;
            }
        }
        16 | 17 => {
            let perp = perp(&ctx);
            for j in 0..p {
                list.push_required(family, format!("c{j}({tag})"), ctx.c(j).to_vec())?;
            }
            list.push_required(
                family,
                format!("B{perp_label_sign}({tag})^perp\\{{0}}"),
                difference(&perp, &[0]),
            )?;
            list.push_required(
                family,
                format!("d0({tag})\\B{perp_label_sign}^perp"),
                difference(ctx.d(0), &perp),
            )?;
            for j in 1..p {
                list.push_required(family, format!("d{j}({tag})"), ctx.d(j).to_vec())?;
            }
        }
        18 | 19 => {
            let kept_c = if k == 18 { &ctx.sq } else { &ctx.nsq };
            list.push_required(family, format!("c0({tag})\\{{0}}"), difference(ctx.c(0), &[0]))?;
            let label = if k == 18 { "c_SQ" } else { "c_NSQ" };
            list.push_required(family, format!("{label}({tag})"), ctx.union_c(kept_c))?;
            list.push_required(family, format!("d0({tag})"), ctx.d(0).to_vec())?;
            list.push_required(family, format!("d_SQ({tag})"), ctx.union_d(&ctx.sq))?;
            list.push_required(family, format!("d_NSQ({tag})"), ctx.union_d(&ctx.nsq))?;
        }
        22 | 23 => {
            let kept_d = if k == 22 { &ctx.nsq } else { &ctx.sq };
            list.push_required(family, format!("c0({tag})"), ctx.c(0).to_vec())?;
            list.push_required(family, format!("c_SQ({tag})"), ctx.union_c(&ctx.sq))?;
            list.push_required(family, format!("c_NSQ({tag})"), ctx.union_c(&ctx.nsq))?;
            list.push_required(family, format!("d0({tag})\\{{0}}"), difference(ctx.d(0), &[0]))?;
            let label = if k == 22 { "d_NSQ" } else { "d_SQ" };
            list.push_required(family, format!("{label}({tag})"), ctx.union_d(kept_d))?;
        }
        _ => unreachable!(),
    }
    list.finish(ctx.space, family)
}

fn build_pdtuv_on(family: Family, analysis: &Analysis, side: Side) -> Result<Partition> {
    let p = analysis.p();
    let tag = side_tag(side);
    let (sq, nsq) = analysis.f.space().field().sq_nsq_ordered();
    let units: Vec<u64> = (1..p).collect();
    let mut list = CellList::new();
    match family {
        Family::U | Family::V => {
            if !analysis.is_bent() {
                return Err(inapplicable(family, "f is not bent"));
            }
            let level = match side {
                Side::Primal => analysis.f.level_sets(),
                Side::Dual => analysis.report.dual().level_sets(),
            };
            let n0 = &level[0];
            list.push_optional(format!("N0({tag})\\{{0}}"), difference(n0, &[0]));
            if family == Family::U {
                list.push_optional(
                    format!("N_SQ({tag})"),
                    union_cells(sq.iter().map(|&j| level[j as usize].as_slice())),
                );
                list.push_optional(
                    format!("N_NSQ({tag})"),
                    union_cells(nsq.iter().map(|&j| level[j as usize].as_slice())),
                );
            } else {
                list.push_optional(
                    format!("N_F*({tag})"),
                    union_cells(units.iter().map(|&j| level[j as usize].as_slice())),
                );
            }
        }
        Family::P | Family::D | Family::T => {
            if !analysis.is_dual_bent() {
                return Err(inapplicable(family, "f is not dual-bent"));
            }
            let ctx = BuildCtx::new(analysis, side)?;
            list.push_optional(format!("c0({tag})\\{{0}}"), difference(ctx.c(0), &[0]));
            match family {
                Family::P => {
                    for j in 1..p {
                        list.push_optional(format!("c{j}({tag})"), ctx.c(j).to_vec());
                    }
                }
                Family::D => {
                    list.push_optional(format!("c_SQ({tag})"), ctx.union_c(&sq));
                    list.push_optional(format!("c_NSQ({tag})"), ctx.union_c(&nsq));
                }
                _ => {
                    list.push_optional(format!("c_F*({tag})"), ctx.union_c(&units));
                }
            }
            list.push_optional(format!("d0({tag})\\{{0}}"), difference(ctx.d(0), &[0]));
            match family {
                Family::P => {
                    for j in 1..p {
                        list.push_optional(format!("d{j}({tag})"), ctx.d(j).to_vec());
                    }
                }
                Family::D => {
                    list.push_optional(format!("d_SQ({tag})"), ctx.union_d(&sq));
                    list.push_optional(format!("d_NSQ({tag})"), ctx.union_d(&nsq));
                }
                _ => {
                    list.push_optional(format!("d_F*({tag})"), ctx.union_d(&units));
                }
            }
        }
        Family::Uk(_) => unreachable!(),
    }
    list.finish(*analysis.f.space(), family)
}

/// Build a partition family from f's analysis.
pub fn build_family(family: Family, analysis: &Analysis) -> Result<Partition> {
    build_family_on(family, analysis, Side::Primal)
}

/// The coarse U and V partitions over the level sets of f.
pub fn build_uv(analysis: &Analysis) -> Result<(Partition, Partition)> {
    Ok((
        build_family(Family::U, analysis)?,
        build_family(Family::V, analysis)?,
    ))
}

/// Fuse a base partition into a coarser family by the published recipes;
/// cells of the result are exact unions of base cells.
pub fn build_fusions(base: &Partition, target: Family) -> Result<Partition> {
    let Some(base_family) = base.family() else {
        return Err(Error::FusionMismatch {
            base: "unlabelled".into(),
            target: target.to_string(),
        });
    };
    if base_family == target {
        return Ok(base.clone());
    }
    if target.fusion_base() != Some(base_family) {
        return Err(Error::FusionMismatch {
            base: base_family.to_string(),
            target: target.to_string(),
        });
    }
    let p = base.space().p() as usize;
    let (sq, nsq) = base.space().field().sq_nsq_ordered();
    let sq: Vec<usize> = sq.iter().map(|&x| x as usize).collect();
    let nsq: Vec<usize> = nsq.iter().map(|&x| x as usize).collect();
    let all: Vec<usize> = (1..p).collect();
    let offset = |base_idx: usize, js: &[usize]| -> Vec<usize> {
        js.iter().map(|&j| base_idx + j).collect()
    };
    // Groups of base-cell indices, in target cell order.
    let (groups, labels): (Vec<Vec<usize>>, Vec<&str>) = match (base_family, target) {
        (Family::Uk(1), Family::Uk(4))
        | (Family::Uk(12), Family::Uk(20))
        | (Family::Uk(13), Family::Uk(21)) => (
            vec![
                vec![0],
                vec![1],
                vec![2],
                offset(2, &sq),
                offset(2, &nsq),
                vec![p + 2],
                offset(p + 2, &sq),
                offset(p + 2, &nsq),
            ],
            vec!["{0}", "perp", "c0'", "c_SQ", "c_NSQ", "d0", "d_SQ", "d_NSQ"],
        ),
        (Family::Uk(1), Family::Uk(5)) => (
            vec![
                vec![0],
                vec![1],
                vec![2],
                offset(2, &all),
                vec![p + 2],
                offset(p + 2, &all),
            ],
            vec!["{0}", "perp", "c0'", "c_F*", "d0", "d_F*"],
        ),
        (Family::Uk(2), Family::Uk(6)) => (
            vec![
                vec![0],
                vec![1],
                offset(1, &sq),
                offset(1, &nsq),
                vec![p + 1],
                offset(p + 1, &sq),
                offset(p + 1, &nsq),
            ],
            vec!["{0}", "c0", "c_SQ", "c_NSQ", "d0'", "d_SQ", "d_NSQ"],
        ),
        (Family::Uk(2), Family::Uk(7)) => (
            vec![
                vec![0],
                vec![1],
                offset(1, &all),
                vec![p + 1],
                offset(p + 1, &all),
            ],
            vec!["{0}", "c0", "c_F*", "d0'", "d_F*"],
        ),
        (Family::Uk(3), Family::Uk(8)) => (
            vec![
                vec![0],
                vec![1],
                offset(1, &sq),
                offset(1, &nsq),
                vec![p + 1],
                vec![p + 2],
                offset(p + 2, &sq),
                offset(p + 2, &nsq),
            ],
            vec!["{0}", "c0", "c_SQ", "c_NSQ", "perp", "d0'", "d_SQ", "d_NSQ"],
        ),
        (Family::Uk(3), Family::Uk(9)) => (
            vec![
                vec![0],
                vec![1],
                offset(1, &all),
                vec![p + 1],
                vec![p + 2],
                offset(p + 2, &all),
            ],
            vec!["{0}", "c0", "c_F*", "perp", "d0'", "d_F*"],
        ),
        (Family::Uk(10), Family::Uk(18)) | (Family::Uk(11), Family::Uk(19)) => {
            let half = (p - 1) / 2;
            let d0 = 2 + half;
            (
                vec![
                    vec![0],
                    vec![1],
                    (2..2 + half).collect(),
                    vec![d0],
                    offset(d0, &sq),
                    offset(d0, &nsq),
                ],
                vec!["{0}", "c0'", "c_merged", "d0", "d_SQ", "d_NSQ"],
            )
        }
        (Family::Uk(14), Family::Uk(22)) | (Family::Uk(15), Family::Uk(23)) => {
            let half = (p - 1) / 2;
            (
                vec![
                    vec![0],
                    vec![1],
                    offset(1, &sq),
                    offset(1, &nsq),
                    vec![p + 1],
                    (p + 2..p + 2 + half).collect(),
                ],
                vec!["{0}", "c0", "c_SQ", "c_NSQ", "d0'", "d_merged"],
            )
        }
        (Family::Uk(16), Family::Uk(24)) | (Family::Uk(17), Family::Uk(25)) => (
            vec![
                vec![0],
                vec![1],
                offset(1, &sq),
                offset(1, &nsq),
                vec![p + 1],
                vec![p + 2],
                offset(p + 2, &sq),
                offset(p + 2, &nsq),
            ],
            vec!["{0}", "c0", "c_SQ", "c_NSQ", "perp", "d0'", "d_SQ", "d_NSQ"],
        ),
        _ => {
            return Err(Error::FusionMismatch {
                base: base_family.to_string(),
                target: target.to_string(),
            })
        }
    };
    let mut cells = Vec::with_capacity(groups.len());
    for group in &groups {
        cells.push(union_cells(
            group.iter().map(|&i| base.cells()[i].as_slice()),
        ));
    }
    Partition::new(
        *base.space(),
        cells,
        labels.into_iter().map(String::from).collect(),
        Some(target),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn analysis(name: &str) -> Analysis {
        let f = catalog::find(name).unwrap().function().unwrap();
        Analysis::new(&f).unwrap()
    }

    #[test]
    fn u1_on_example1_has_twelve_cells() {
        let a = analysis("ex1-f5n4");
        let u1 = build_family(Family::Uk(1), &a).unwrap();
        assert_eq!(u1.classes(), 11);
        assert_eq!(u1.sizes(), vec![1, 4, 40, 20, 20, 20, 20, 100, 100, 100, 100, 100]);
        assert!(u1.is_symmetric());
    }

    #[test]
    fn u2_on_example2_has_eleven_cells() {
        let a = analysis("ex2-f5n4-minus");
        let u2 = build_family(Family::Uk(2), &a).unwrap();
        assert_eq!(u2.classes(), 10);
        assert!(u2.is_symmetric());
        // 11-cell U1 does not apply: B_+ sets are not the subspaces here.
        assert!(matches!(
            build_family(Family::Uk(1), &a),
            Err(Error::Inapplicable { .. })
        ));
    }

    #[test]
    fn guards_reject_weakly_regular_controls() {
        let a = analysis("wr-quad-f5n4");
        let err = build_family(Family::Uk(1), &a).unwrap_err();
        match err {
            Error::Inapplicable { reason, .. } => {
                assert!(reason.contains("non-weakly regular"), "{reason}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn fusions_match_direct_construction() {
        let cases: &[(&str, u8, &[u8])] = &[
            ("ex1-f5n4", 1, &[4, 5]),
            ("ex2-f5n4-minus", 2, &[6, 7]),
            ("ex3-f5n6-minus", 3, &[8, 9]),
            ("ex4-f5n3", 10, &[18]),
            ("ex-f7n3-minus", 11, &[19]),
            ("ex5-f5n5", 12, &[20]),
            ("ex-f7n5-minus", 13, &[21]),
            ("ex6-f5n3-minus", 14, &[22]),
            ("ex-f7n3-plus", 15, &[23]),
            ("ex7-f5n5-minus", 16, &[24]),
            ("ex-f7n5-plus", 17, &[25]),
        ];
        for &(name, base_k, targets) in cases {
            let a = analysis(name);
            let base = build_family(Family::Uk(base_k), &a).unwrap();
            for &t in targets {
                let fused = build_fusions(&base, Family::Uk(t)).unwrap();
                let direct = build_family(Family::Uk(t), &a).unwrap();
                assert_eq!(fused.cells(), direct.cells(), "{name} U{base_k}->U{t}");
            }
            // Identity fusion leaves the base unchanged.
            let same = build_fusions(&base, Family::Uk(base_k)).unwrap();
            assert_eq!(same.cells(), base.cells());
        }
    }

    #[test]
    fn expected_class_counts_across_catalog() {
        let expect: &[(&str, u8, usize)] = &[
            ("ex1-f5n4", 1, 11),
            ("ex1-f5n4", 4, 7),
            ("ex1-f5n4", 5, 5),
            ("ex2-f5n4-minus", 2, 10),
            ("ex2-f5n4-minus", 6, 6),
            ("ex2-f5n4-minus", 7, 4),
            ("ex3-f5n6-minus", 3, 11),
            ("ex3-f5n6-minus", 8, 7),
            ("ex3-f5n6-minus", 9, 5),
            ("ex4-f5n3", 10, 8),
            ("ex4-f5n3", 18, 5),
            ("ex5-f5n5", 12, 11),
            ("ex5-f5n5", 20, 7),
            ("ex6-f5n3-minus", 14, 8),
            ("ex6-f5n3-minus", 22, 5),
            ("ex7-f5n5-minus", 16, 11),
            ("ex7-f5n5-minus", 24, 7),
            ("ex-f7n3-minus", 11, 11),
            ("ex-f7n3-minus", 19, 5),
            ("ex-f7n5-minus", 13, 15),
            ("ex-f7n5-minus", 21, 7),
            ("ex-f7n3-plus", 15, 11),
            ("ex-f7n3-plus", 23, 5),
            ("ex-f7n5-plus", 17, 15),
            ("ex-f7n5-plus", 25, 7),
        ];
        for &(name, k, classes) in expect {
            let a = analysis(name);
            let part = build_family(Family::Uk(k), &a).unwrap();
            assert_eq!(part.classes(), classes, "{name} U{k}");
            assert!(part.is_symmetric(), "{name} U{k} symmetric cells");
            // The dual-side partition exists under the same guards.
            let dual = build_family_on(Family::Uk(k).dual_family(), &a, Side::Dual).unwrap();
            assert_eq!(dual.classes(), classes, "{name} dual of U{k}");
        }
    }

    #[test]
    fn uv_on_weakly_regular_and_nwr() {
        let a = analysis("wr-quad-f5n4");
        let (u, v) = build_uv(&a).unwrap();
        assert_eq!(u.cells().len(), 4);
        assert_eq!(v.cells().len(), 3);
        let a = analysis("ex1-f5n4");
        let (u, v) = build_uv(&a).unwrap();
        assert_eq!(u.cells().len(), 4);
        assert_eq!(v.cells().len(), 3);
    }

    #[test]
    fn pdt_coincide_with_u_families_at_the_boundary() {
        // At r = n/2+1 in the B_- case, P/D/T equal U2/U6/U7 as cell sets.
        let a = analysis("ex2-f5n4-minus");
        for (fam, k) in [(Family::P, 2u8), (Family::D, 6), (Family::T, 7)] {
            let pdt = build_family(fam, &a).unwrap();
            let uk = build_family(Family::Uk(k), &a).unwrap();
            assert_eq!(pdt.cells(), uk.cells(), "{fam} vs U{k}");
        }
    }

    #[test]
    fn export_round_trips_shape() {
        let a = analysis("ex4-f5n3");
        let part = build_family(Family::Uk(10), &a).unwrap();
        let text = part.export_text();
        assert!(text.starts_with("cell 0 \"{0}\": 0\n"));
        let json = part.export_json();
        assert_eq!(json["p"], 5);
        assert_eq!(json["cells"].as_array().unwrap().len(), 9);
    }
}
