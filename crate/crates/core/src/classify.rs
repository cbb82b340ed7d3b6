//! Enumeration of Calabi-Yau complete intersections and comparison with the
//! published tables.
//!
//! A candidate on `G/P` of dimension `n` is a multiset of nonzero g-dominant
//! highest weights `λ` with `Σ dim V^P_λ = dim G/P − n` and
//! `Σ det V^P_λ = det(g/p)`.
//!
//! Search bound: for a Levi of semisimple rank at most one and a connected
//! diagram, a nonzero dominant `λ` has `det V^P_λ` with non-negative
//! coordinates whose sum is at least `max_i λ_i`. With torus Levi the
//! determinant is `λ` itself. With Levi node `u`,
//! `det = (λ_u + 1) λ − λ_u(λ_u + 1)/2 · α_u`; every crossed coordinate is
//! at least `(λ_u + 1) λ_c`, and the coordinate at a crossed neighbour of
//! `u` gains at least `λ_u(λ_u + 1)/2 ≥ λ_u`. Hence every coordinate of
//! every summand is at most the coordinate sum of the anticanonical weight,
//! and each summand uses up a nonzero part of it.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::invariants::{compute_invariants, validate_candidate, InvariantRecord};
use crate::parabolic::{G2Parabolic, ParabolicData};
use crate::reference::{reference_table_for_dim, ReferenceTable};
use crate::reps::render_grouped;
use crate::weight::Weight;

/// One classification row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableRow {
    pub parabolic: String,
    /// Canonical order: irrep dimension descending, then weight ascending.
    pub summands: Vec<Weight>,
    pub dims: Vec<u64>,
    pub split: bool,
}

impl TableRow {
    pub fn new(p: &ParabolicData, summands: &[Weight]) -> Result<Self> {
        let mut s = summands.to_vec();
        p.canonical_order(&mut s);
        let dims = s.iter().map(|w| p.irrep_dim(w)).collect::<Result<Vec<_>>>()?;
        Ok(TableRow { parabolic: p.label().to_string(), split: dims.iter().all(|&d| d == 1), summands: s, dims })
    }

    pub fn rank(&self) -> u64 {
        self.dims.iter().sum()
    }

    pub fn render_bundle(&self) -> String {
        render_grouped(self.summands.clone())
    }

    fn sort_key(&self) -> Vec<(Reverse<u64>, &Weight)> {
        self.dims.iter().map(|&d| Reverse(d)).zip(self.summands.iter()).collect()
    }

    /// `(parabolic, sorted summands)`, independent of display order.
    pub fn identity(&self) -> (String, Vec<Weight>) {
        let mut s = self.summands.clone();
        s.sort();
        (self.parabolic.clone(), s)
    }
}

impl std::fmt::Display for TableRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.parabolic, self.render_bundle())
    }
}

/// Dimensions of zero loci the enumeration supports on `p`.
pub fn dim_range(p: &ParabolicData) -> std::ops::RangeInclusive<usize> {
    2..=p.dim().saturating_sub(1)
}

/// All Calabi-Yau candidates of dimension `dim_x` on `p`, canonically sorted.
pub fn enumerate_candidates(p: &ParabolicData, dim_x: usize, exec: Execution) -> Result<Vec<TableRow>> {
    let range = dim_range(p);
    if !range.contains(&dim_x) {
        return Err(Error::DimensionOutOfRange { dim: dim_x, lo: *range.start(), hi: *range.end() });
    }
    let target_rank = (p.dim() - dim_x) as u64;
    let anticanonical = p.anticanonical();
    let bound = anticanonical.coord_sum();

    // nonzero dominant weights in the box whose string fits the targets
    let mut pool: Vec<(Weight, u64, Weight)> = Vec::new();
    for lam in weight_box(p.rank(), bound) {
        if lam.is_zero() {
            continue;
        }
        let dim = p.irrep_dim(&lam)?;
        let det = p.irrep_det(&lam)?;
        if dim <= target_rank && det.is_dominant() && det.le_componentwise(anticanonical) {
            debug_assert!(!det.is_zero());
            pool.push((lam, dim, det));
        }
    }

    let starts: Vec<usize> = (0..pool.len()).collect();
    let found: Vec<Vec<Vec<usize>>> = exec.map(&starts, |&first| {
        let mut out = Vec::new();
        let (_, dim, det) = &pool[first];
        if *dim <= target_rank && det.le_componentwise(anticanonical) {
            let mut chosen = vec![first];
            extend(&pool, first, target_rank - dim, &(anticanonical - det), &mut chosen, &mut out);
        }
        out
    });

    let mut rows = Vec::new();
    for choice in found.into_iter().flatten() {
        let summands: Vec<Weight> = choice.iter().map(|&k| pool[k].0.clone()).collect();
        rows.push(TableRow::new(p, &summands)?);
    }
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    rows.dedup();
    Ok(rows)
}

fn extend(
    pool: &[(Weight, u64, Weight)],
    from: usize,
    rank_left: u64,
    det_left: &Weight,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if rank_left == 0 || det_left.is_zero() {
        if rank_left == 0 && det_left.is_zero() {
            out.push(chosen.clone());
        }
        return;
    }
    for k in from..pool.len() {
        let (_, dim, det) = &pool[k];
        if *dim <= rank_left && det.le_componentwise(det_left) {
            chosen.push(k);
            extend(pool, k, rank_left - dim, &(det_left - det), chosen, out);
            chosen.pop();
        }
    }
}

/// All weights with coordinates in `0..=bound`.
fn weight_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![Weight::zero(0)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| (0..=bound).map(move |c| Weight::new(w.coords().iter().copied().chain([c]))))
            .collect();
    }
    out
}

/// Candidates of dimension `dim_x` over the given G2 parabolics (those
/// where the dimension is in range), in `P1, P2, B` order.
pub fn classify(dim_x: usize, parabolics: &[G2Parabolic], exec: Execution) -> Result<Vec<TableRow>> {
    let mut ps = parabolics.to_vec();
    ps.sort();
    ps.dedup();
    let mut rows = Vec::new();
    for p in ps {
        let pd = p.data();
        if dim_range(&pd).contains(&dim_x) {
            rows.extend(enumerate_candidates(&pd, dim_x, exec)?);
        }
    }
    Ok(rows)
}

/// Invariant records for a list of rows, computed row-parallel.
pub fn table_invariants(rows: &[TableRow], exec: Execution) -> Result<Vec<InvariantRecord>> {
    exec.try_map(rows, |row| {
        let p: G2Parabolic = row.parabolic.parse()?;
        let c = validate_candidate(&p.data(), &row.summands)?;
        compute_invariants(&c, Execution::Sequential)
    })
}

/// The unique non-split threefold on each G2-Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub witnesses: Vec<TableRow>,
}

/// For `P1` and `P2`, exactly one threefold candidate is not a sum of
/// line bundles.
pub fn verify_theorem(exec: Execution) -> Result<TheoremReport> {
    let mut witnesses = Vec::new();
    for p in G2Parabolic::MAXIMAL {
        let nonsplit: Vec<TableRow> =
            enumerate_candidates(&p.data(), 3, exec)?.into_iter().filter(|r| !r.split).collect();
        if nonsplit.len() != 1 {
            return Err(Error::TheoremViolated {
                parabolic: p.label().to_string(),
                count: nonsplit.len(),
                candidates: nonsplit.iter().map(ToString::to_string).collect(),
            });
        }
        witnesses.extend(nonsplit);
    }
    Ok(TheoremReport { witnesses })
}

/// Enumerated rows versus the published table of the same dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDiff {
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub matched: Vec<TableRow>,
    pub missing: Vec<TableRow>,
    pub extra: Vec<TableRow>,
    /// Full invariants of every extra row.
    pub extra_invariants: Vec<InvariantRecord>,
}

impl TableDiff {
    /// 0 when identical, 2 when only extra rows exist, 1 when a published row
    /// is missing.
    pub fn exit_code(&self) -> i32 {
        if !self.missing.is_empty() {
            1
        } else if !self.extra.is_empty() {
            2
        } else {
            0
        }
    }

    pub fn ensure_complete(&self) -> Result<()> {
        if self.missing.is_empty() {
            Ok(())
        } else {
            Err(Error::MissingReferenceRow(self.missing.iter().map(ToString::to_string).collect()))
        }
    }
}

/// Rows of the published table for `dim_x`, restricted to `parabolics`.
pub fn reference_rows(dim_x: usize, parabolics: &[G2Parabolic]) -> Result<Vec<TableRow>> {
    let table: ReferenceTable =
        reference_table_for_dim(dim_x).ok_or(Error::DimensionOutOfRange { dim: dim_x, lo: 2, hi: 5 })?;
    table
        .rows
        .iter()
        .filter(|r| parabolics.contains(&r.parabolic))
        .map(|r| TableRow::new(&r.parabolic.data(), &r.summands))
        .collect()
}

pub fn diff_against_reference(dim_x: usize, parabolics: &[G2Parabolic], exec: Execution) -> Result<TableDiff> {
    let computed = classify(dim_x, parabolics, exec)?;
    let published = reference_rows(dim_x, parabolics)?;
    let published_ids: BTreeMap<_, _> = published.iter().map(|r| (r.identity(), r)).collect();
    let computed_ids: BTreeMap<_, _> = computed.iter().map(|r| (r.identity(), r)).collect();

    let matched = computed.iter().filter(|r| published_ids.contains_key(&r.identity())).cloned().collect();
    let extra: Vec<TableRow> =
        computed.iter().filter(|r| !published_ids.contains_key(&r.identity())).cloned().collect();
    let missing = published.iter().filter(|r| !computed_ids.contains_key(&r.identity())).cloned().collect();
    let extra_invariants = table_invariants(&extra, exec)?;
    Ok(TableDiff { dim_x, matched, missing, extra, extra_invariants })
}

/// `| No. | P | E |` table; the parabolic is printed on the first row of
/// each group only.
pub fn render_markdown(rows: &[TableRow]) -> String {
    let mut out = String::from("| No. | P | E |\n|---|---|---|\n");
    let mut last: Option<&str> = None;
    for (k, row) in rows.iter().enumerate() {
        let p = if last == Some(row.parabolic.as_str()) { "" } else { row.parabolic.as_str() };
        out.push_str(&format!("| {} | {} | {} |\n", k + 1, p, row.render_bundle()));
        last = Some(&row.parabolic);
    }
    out
}

pub fn render_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let mut last: Option<&str> = None;
    for (k, row) in rows.iter().enumerate() {
        let p = if last == Some(row.parabolic.as_str()) { "" } else { row.parabolic.as_str() };
        out.push_str(&format!("{:>3}  {:<3} {}\n", k + 1, p, row.render_bundle()));
        last = Some(&row.parabolic);
    }
    out
}
