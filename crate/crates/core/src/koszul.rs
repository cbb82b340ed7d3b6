//! Cohomology of bundles restricted to the zero locus `X` of a general
//! section of `E`, via the Koszul resolution
//! `0 → Λ^r E^∨ → ⋯ → E^∨ → O_F → O_X → 0` tensored with `W`.
//!
//! The E1 page `E1(k, q) = H^q(F, Λ^k E^∨ ⊗ W)` converges to
//! `H^{q−k}(X, W|_X)`. A differential `d_s` runs from `(k, q)` to
//! `(k − s, q − s + 1)`, so it raises the total degree by one. The
//! differentials themselves are not computed; instead the possible ranks
//! are bounded by which positions can interact, and the abutment must
//! vanish outside `0..=dim X`. [`RankChain`] turns this into exact
//! per-degree bounds, and a degree is reported as determined only when
//! every consistent assignment gives the same value.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chain::{Bounds, ChainNode, RankChain};
use crate::cohomology::{sign, GModule};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::parabolic::ParabolicData;
use crate::reps::RepSum;
use crate::weight::Weight;

/// Which E1 entries may be joined by a differential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DifferentialModel {
    /// Only entries at positions `(k, q) → (k − s, q − s + 1)`, `s ≥ 1`.
    #[default]
    Positional,
    /// Any pair of entries in adjacent total degrees.
    Unrestricted,
}

/// A bundle `E` cutting out `X` and a coefficient bundle `W` on `F = G/P`.
#[derive(Debug, Clone)]
pub struct KoszulInput {
    parabolic: ParabolicData,
    bundle: RepSum,
    coefficients: RepSum,
    exec: Execution,
    model: DifferentialModel,
}

/// Checks that `E` is a globally generated bundle without trivial summands
/// whose zero locus has non-negative expected dimension.
pub(crate) fn check_bundle(p: &ParabolicData, bundle: &RepSum) -> Result<()> {
    p.validate(bundle)?;
    if bundle.contains_trivial() {
        return Err(Error::TrivialSummand);
    }
    if let Some((lam, _)) = bundle.iter().find(|(lam, _)| !lam.is_dominant()) {
        return Err(Error::NotGloballyGenerated(lam.clone()));
    }
    let rank = p.rank_of(bundle);
    if rank > p.dim() as u64 {
        return Err(Error::RankTooLarge { rank, bound: p.dim() as u64 });
    }
    Ok(())
}

impl KoszulInput {
    pub fn new(parabolic: ParabolicData, bundle: RepSum, coefficients: RepSum) -> Result<Self> {
        check_bundle(&parabolic, &bundle)?;
        parabolic.validate(&coefficients)?;
        Ok(KoszulInput {
            parabolic,
            bundle,
            coefficients,
            exec: Execution::default(),
            model: DifferentialModel::default(),
        })
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_model(mut self, model: DifferentialModel) -> Self {
        self.model = model;
        self
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    pub fn bundle(&self) -> &RepSum {
        &self.bundle
    }

    pub fn coefficients(&self) -> &RepSum {
        &self.coefficients
    }

    pub fn rank(&self) -> usize {
        self.parabolic.rank_of(&self.bundle) as usize
    }

    /// `dim X = dim F − rank E`.
    pub fn dim_x(&self) -> usize {
        self.parabolic.dim() - self.rank()
    }

    /// `Λ^k E^∨ ⊗ W` for `k = 0..=rank E`.
    pub fn koszul_terms(&self) -> Vec<RepSum> {
        let p = &self.parabolic;
        let dual = p.dual(&self.bundle);
        let ks: Vec<usize> = (0..=self.rank()).collect();
        self.exec.map(&ks, |&k| {
            let ext = p.exterior_power(&dual, k).expect("k <= rank");
            p.tensor(&ext, &self.coefficients)
        })
    }

    pub fn e1_page(&self) -> Result<E1Page> {
        let p = &self.parabolic;
        let terms = self.koszul_terms();
        let columns = self.exec.try_map(&terms, |t| p.bundle_cohomology(t))?;
        let mut entries = BTreeMap::new();
        for (k, col) in columns.into_iter().enumerate() {
            for (q, m) in col.degrees {
                if !m.is_zero() {
                    entries.insert((k, q), m);
                }
            }
        }
        Ok(E1Page { rank: self.rank(), dim_f: p.dim(), entries })
    }

    /// `Σ_k (−1)^k χ(F, Λ^k E^∨ ⊗ W)`, summed column by column.
    pub fn koszul_euler(&self) -> Result<i64> {
        let p = &self.parabolic;
        let terms = self.koszul_terms();
        let chis = self.exec.try_map(&terms, |t| p.euler_char(t))?;
        Ok(chis.iter().enumerate().map(|(k, c)| sign(k) * c).sum())
    }

    /// `H^n(X, W|_X)` for `n = 0..=dim X`.
    pub fn restricted_cohomology(&self) -> Result<RestrictedCohomology> {
        self.e1_page()?.abutment(self.dim_x(), self.model)
    }
}

/// `E1(k, q) = H^q(F, Λ^k E^∨ ⊗ W)`; zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E1Page {
    pub rank: usize,
    pub dim_f: usize,
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<(usize, usize), GModule>,
}

mod entry_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        k: usize,
        q: usize,
        irreps: Vec<(Weight, u64)>,
        dim: u64,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, usize), GModule>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(&(k, q), g)| Entry {
                k,
                q,
                irreps: g.irreps.iter().map(|(w, &c)| (w.clone(), c)).collect(),
                dim: g.dim,
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<(usize, usize), GModule>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        Ok(v.into_iter()
            .map(|e| ((e.k, e.q), GModule { irreps: e.irreps.into_iter().collect(), dim: e.dim }))
            .collect())
    }
}

fn can_interact(src: (usize, usize), tgt: (usize, usize)) -> bool {
    let ((k, q), (k2, q2)) = (src, tgt);
    k2 < k && q2 as i64 == q as i64 - (k - k2) as i64 + 1
}

impl E1Page {
    pub fn total_degree(k: usize, q: usize) -> i64 {
        q as i64 - k as i64
    }

    pub fn dim(&self, k: usize, q: usize) -> u64 {
        self.entries.get(&(k, q)).map_or(0, |m| m.dim)
    }

    /// `Σ (−1)^{q−k} dim E1(k, q)`.
    pub fn euler(&self) -> i64 {
        self.entries.iter().map(|(&(k, q), m)| sign(k + q) * m.dim as i64).sum()
    }

    /// Total E1 dimension in each total degree.
    pub fn by_total_degree(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&(k, q), m) in &self.entries {
            *out.entry(Self::total_degree(k, q)).or_insert(0) += m.dim;
        }
        out
    }

    /// Rank bound for all differentials from total degree `n` to `n + 1`.
    fn cap(&self, n: i64, model: DifferentialModel) -> u64 {
        let in_degree = |d: i64| self.entries.iter().filter(move |(&(k, q), _)| Self::total_degree(k, q) == d);
        let (src, tgt): (u64, u64) = match model {
            DifferentialModel::Unrestricted => (
                in_degree(n).map(|(_, m)| m.dim).sum(),
                in_degree(n + 1).map(|(_, m)| m.dim).sum(),
            ),
            DifferentialModel::Positional => (
                in_degree(n)
                    .filter(|(&s, _)| in_degree(n + 1).any(|(&t, _)| can_interact(s, t)))
                    .map(|(_, m)| m.dim)
                    .sum(),
                in_degree(n + 1)
                    .filter(|(&t, _)| in_degree(n).any(|(&s, _)| can_interact(s, t)))
                    .map(|(_, m)| m.dim)
                    .sum(),
            ),
        };
        src.min(tgt)
    }

    /// Bounds on `H^n(X, W|_X)`, `n = 0..=dim_x`, from the constraint that
    /// the abutment vanishes outside that range.
    pub fn abutment(&self, dim_x: usize, model: DifferentialModel) -> Result<RestrictedCohomology> {
        let by_degree = self.by_total_degree();
        let lo = by_degree.keys().next().copied().unwrap_or(0).min(0);
        let hi = by_degree.keys().next_back().copied().unwrap_or(0).max(dim_x as i64);
        let nodes: Vec<ChainNode> = (lo..=hi)
            .map(|n| {
                let e = by_degree.get(&n).copied().unwrap_or(0);
                let allowed = (0..=dim_x as i64).contains(&n);
                ChainNode::page(e, 0, if allowed { None } else { Some(0) })
            })
            .collect();
        let caps: Vec<u64> = (lo..hi).map(|n| self.cap(n, model)).collect();
        let bounds = RankChain::new(nodes, caps).solve()?;
        let degrees = (0..=dim_x).map(|n| bounds[(n as i64 - lo) as usize]).collect();
        Ok(RestrictedCohomology { degrees, euler: self.euler() })
    }

    /// `(k, q)` grid of dimensions, one row per `q` from the top.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("q\\k");
        for k in 0..=self.rank {
            out.push_str(&format!("\t{k}"));
        }
        out.push('\n');
        for q in (0..=self.dim_f).rev() {
            out.push_str(&q.to_string());
            for k in 0..=self.rank {
                out.push_str(&format!("\t{}", self.dim(k, q)));
            }
            out.push('\n');
        }
        out
    }
}

/// Bounds on `h^n(X, W|_X)` for `n = 0..=dim X` and the exact Euler number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedCohomology {
    pub degrees: Vec<Bounds>,
    pub euler: i64,
}

impl RestrictedCohomology {
    pub fn is_determined(&self) -> bool {
        self.degrees.iter().all(Bounds::is_determined)
    }

    pub fn value(&self, n: usize) -> Option<i64> {
        self.degrees.get(n).and_then(Bounds::value)
    }
}

impl ParabolicData {
    /// `χ(O_X(i)) = Σ_k (−1)^k χ(F, Λ^k E^∨ ⊗ L^i)` with `L` the ample
    /// generator of `Pic F`. Negative `i` is allowed.
    pub fn hilbert_value(&self, bundle: &RepSum, i: i64) -> Result<i64> {
        let line = i * &self.picard_generator()?;
        KoszulInput::new(self.clone(), bundle.clone(), RepSum::irrep(line))?
            .with_execution(Execution::Sequential)
            .koszul_euler()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::G2Parabolic::{self, B, P1, P2};

    fn w(a: i64, b: i64) -> Weight {
        Weight::new([a, b])
    }

    fn rep(ws: &[(i64, i64)]) -> RepSum {
        ws.iter().map(|&(a, b)| w(a, b)).collect()
    }

    fn structure_sheaf(p: G2Parabolic, e: &[(i64, i64)]) -> KoszulInput {
        KoszulInput::new(p.data(), rep(e), RepSum::trivial(2)).unwrap()
    }

    #[test]
    fn terms() {
        let t = structure_sheaf(P1, &[(1, 1)]).koszul_terms();
        assert_eq!(t, vec![rep(&[(0, 0)]), rep(&[(-2, 1)]), rep(&[(-3, 0)])]);
        let t = structure_sheaf(P1, &[(1, 0), (2, 0)]).koszul_terms();
        assert_eq!(t, vec![rep(&[(0, 0)]), rep(&[(-1, 0), (-2, 0)]), rep(&[(-3, 0)])]);
        let input = KoszulInput::new(P2.data(), rep(&[(1, 1)]), rep(&[(0, 3)])).unwrap();
        assert_eq!(input.koszul_terms()[0], rep(&[(0, 3)]));
    }

    #[test]
    fn input_validation() {
        let bad = |e: &[(i64, i64)]| KoszulInput::new(P1.data(), rep(e), RepSum::trivial(2)).unwrap_err();
        assert_eq!(bad(&[(1, 1), (0, 0)]), Error::TrivialSummand);
        assert_eq!(bad(&[(-1, 3)]), Error::NotGloballyGenerated(w(-1, 3)));
        assert_eq!(bad(&[(0, 6)]), Error::RankTooLarge { rank: 7, bound: 5 });
    }

    #[test]
    fn e1_pages_of_the_nonsplit_threefolds() {
        for p in [P1, P2] {
            let page = structure_sheaf(p, &[(1, 1)]).e1_page().unwrap();
            let positions: Vec<_> = page.entries.keys().copied().collect();
            assert_eq!(positions, vec![(0, 0), (2, 5)], "{p}");
            assert_eq!((page.dim(0, 0), page.dim(2, 5)), (1, 1));
        }
        // the dual term over P2 is V_(1,-4), whose cohomology vanishes
        assert_eq!(P2.data().dual(&rep(&[(1, 1)])), rep(&[(1, -4)]));
        assert!(P2.data().bundle_cohomology(&rep(&[(1, -4)])).unwrap().is_zero());
    }

    #[test]
    fn structure_sheaf_cohomology() {
        let h = structure_sheaf(P1, &[(1, 1)]).restricted_cohomology().unwrap();
        assert_eq!(h.degrees, vec![Bounds::exact(1), Bounds::exact(0), Bounds::exact(0), Bounds::exact(1)]);
        assert_eq!(h.euler, 0);
        let h = structure_sheaf(P1, &[(1, 0), (1, 0), (1, 0)]).restricted_cohomology().unwrap();
        assert_eq!(h.degrees, vec![Bounds::exact(1), Bounds::exact(0), Bounds::exact(1)]);
        assert_eq!(h.euler, 2);
    }

    #[test]
    fn conormal_cohomology_needs_the_vanishing_constraint() {
        // E1 has V_(1,1) in total degree 3 and V_(0,0) in total degree 4;
        // H^4 on a threefold vanishes, so the (2,5) → (1,5) differential
        // has rank one.
        let p = P1.data();
        let e = rep(&[(1, 1)]);
        let input = KoszulInput::new(p.clone(), e.clone(), p.dual(&e)).unwrap();
        let page = input.e1_page().unwrap();
        assert_eq!(page.by_total_degree(), BTreeMap::from([(3, 64), (4, 1)]));
        let h = input.restricted_cohomology().unwrap();
        assert_eq!(h.degrees[3], Bounds::exact(63));
        assert!(h.is_determined());
    }

    #[test]
    fn positional_rule() {
        assert!(can_interact((2, 5), (1, 5)));
        assert!(can_interact((2, 5), (0, 4)));
        assert!(!can_interact((1, 4), (1, 5)));
        assert!(!can_interact((0, 1), (1, 3)));
    }

    #[test]
    fn hilbert_values() {
        let p1 = P1.data();
        assert_eq!(p1.hilbert_value(&rep(&[(1, 1)]), 0).unwrap(), 0);
        assert_eq!(p1.hilbert_value(&rep(&[(1, 1)]), 1).unwrap(), 14);
        assert_eq!(P2.data().hilbert_value(&rep(&[(1, 1)]), 1).unwrap(), 7);
        assert!(matches!(B.data().hilbert_value(&rep(&[(2, 2)]), 1), Err(Error::NotMaximalParabolic(_))));
    }

    #[test]
    fn text_grid() {
        let page = structure_sheaf(P1, &[(1, 1)]).e1_page().unwrap();
        let text = page.render_text();
        assert!(text.starts_with("q\\k\t0\t1\t2\n5\t0\t0\t1\n"));
        assert!(text.ends_with("0\t1\t0\t0\n"));
    }
}
