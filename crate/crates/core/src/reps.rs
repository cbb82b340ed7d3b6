//! Representations of a parabolic `P` through its Levi factor.
//!
//! Every Levi factor handled here has semisimple rank at most one, so the
//! irreducible representation with highest weight `λ` has as weights the
//! single string `λ, λ − α_u, …, λ − λ_u α_u` along the uncrossed simple
//! root `α_u` (or just `{λ}` for a torus). A [`RepSum`] is a formal sum of
//! such irreducibles and models every bundle in the crate.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::weight::Weight;

/// Weights with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiset(BTreeMap<Weight, u64>);

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.0.entry(w).or_insert(0) += mult;
        }
    }

    /// Removes `mult` copies of `w`; `false` (and no change) if not present.
    pub fn remove(&mut self, w: &Weight, mult: u64) -> bool {
        match self.0.get_mut(w) {
            Some(m) if *m > mult => {
                *m -= mult;
                true
            }
            Some(m) if *m == mult => {
                self.0.remove(w);
                true
            }
            _ => false,
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    /// Total number of weights counted with multiplicity.
    pub fn cardinality(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, u64> {
        self.0.iter()
    }

    /// Sum of all weights with multiplicity.
    pub fn sum(&self, rank: usize) -> Weight {
        let mut acc = Weight::zero(rank);
        for (w, &m) in &self.0 {
            acc += &(m as i64 * w);
        }
        acc
    }

    pub fn negated(&self) -> Self {
        WeightMultiset(self.0.iter().map(|(w, &m)| (-w, m)).collect())
    }

    /// Pointwise sums `{a + b}` over all pairs, with multiplicities multiplied.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut out = WeightMultiset::new();
        for (a, &ma) in &self.0 {
            for (b, &mb) in &other.0 {
                out.insert(a + b, ma * mb);
            }
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &m) in &other.0 {
            out.insert(w.clone(), m);
        }
        out
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for w in iter {
            out.insert(w, 1);
        }
        out
    }
}

impl FromIterator<(Weight, u64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for (w, m) in iter {
            out.insert(w, m);
        }
        out
    }
}

/// A formal sum `⊕ m_λ V^P_λ` keyed by highest weight.
///
/// A `RepSum` does not record its parabolic; every operation takes the
/// [`ParabolicData`] explicitly and expects highest weights that are
/// p-dominant for it (see [`ParabolicData::validate`]).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepSum(BTreeMap<Weight, u64>);

impl RepSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn irrep(lam: Weight) -> Self {
        RepSum(BTreeMap::from([(lam, 1)]))
    }

    /// The trivial representation `V_(0,…,0)`.
    pub fn trivial(rank: usize) -> Self {
        Self::irrep(Weight::zero(rank))
    }

    pub fn add(&mut self, lam: Weight, mult: u64) {
        if mult > 0 {
            *self.0.entry(lam).or_insert(0) += mult;
        }
    }

    pub fn direct_sum(&self, other: &RepSum) -> RepSum {
        let mut out = self.clone();
        for (w, &m) in &other.0 {
            out.add(w.clone(), m);
        }
        out
    }

    pub fn multiplicity(&self, lam: &Weight) -> u64 {
        self.0.get(lam).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, u64> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn summand_count(&self) -> u64 {
        self.0.values().sum()
    }

    /// Highest weights listed with multiplicity, in weight order.
    pub fn summands(&self) -> Vec<Weight> {
        self.0.iter().flat_map(|(w, &m)| std::iter::repeat_n(w.clone(), m as usize)).collect()
    }

    pub fn contains_trivial(&self) -> bool {
        self.0.keys().any(Weight::is_zero)
    }
}

impl FromIterator<Weight> for RepSum {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut out = RepSum::zero();
        for w in iter {
            out.add(w, 1);
        }
        out
    }
}

impl FromIterator<(Weight, u64)> for RepSum {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut out = RepSum::zero();
        for (w, m) in iter {
            out.add(w, m);
        }
        out
    }
}

impl fmt::Display for RepSum {
    /// Weight order; use [`ParabolicData::render`] for the canonical table order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_grouped(self.summands()))
    }
}

/// Joins summands already in display order, grouping equal neighbours as
/// `(a,b)^{⊕m}`.
pub fn render_grouped(summands: Vec<Weight>) -> String {
    if summands.is_empty() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < summands.len() {
        let mut j = i;
        while j < summands.len() && summands[j] == summands[i] {
            j += 1;
        }
        let m = j - i;
        parts.push(if m == 1 {
            summands[i].to_string()
        } else {
            format!("{}^{{⊕{m}}}", summands[i])
        });
        i = j;
    }
    parts.join(" ⊕ ")
}

impl ParabolicData {
    fn levi_node(&self) -> Option<usize> {
        self.uncrossed().first().copied()
    }

    fn string_of(&self, lam: &Weight) -> Vec<Weight> {
        match self.levi_node() {
            None => vec![lam.clone()],
            Some(u) => {
                let alpha = self.root_system().simple_root(u);
                (0..=lam[u]).map(|j| lam - &(j * alpha)).collect()
            }
        }
    }

    fn check_p_dominant(&self, lam: &Weight) -> Result<()> {
        if lam.rank() != self.rank() {
            return Err(Error::Parse(format!("weight {lam} has rank {}, expected {}", lam.rank(), self.rank())));
        }
        if self.is_p_dominant(lam) {
            Ok(())
        } else {
            Err(Error::NotPDominant(lam.clone()))
        }
    }

    /// Checks that every highest weight of `r` is p-dominant of the right rank.
    pub fn validate(&self, r: &RepSum) -> Result<()> {
        r.iter().try_for_each(|(lam, _)| self.check_p_dominant(lam))
    }

    /// `Δ(V^P_λ)`, the weight string of the irreducible with highest weight `λ`.
    pub fn irrep_weights(&self, lam: &Weight) -> Result<WeightMultiset> {
        self.check_p_dominant(lam)?;
        Ok(self.string_of(lam).into_iter().collect())
    }

    /// `dim V^P_λ`.
    pub fn irrep_dim(&self, lam: &Weight) -> Result<u64> {
        self.check_p_dominant(lam)?;
        Ok(self.levi_node().map_or(1, |u| lam[u] as u64 + 1))
    }

    /// `det V^P_λ`, the sum of the weight string.
    pub fn irrep_det(&self, lam: &Weight) -> Result<Weight> {
        Ok(self.irrep_weights(lam)?.sum(self.rank()))
    }

    /// `Δ(V)` for the whole sum.
    ///
    /// Panics if a highest weight is not p-dominant.
    pub fn weights(&self, r: &RepSum) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (lam, &m) in r.iter() {
            assert!(self.is_p_dominant(lam), "{lam} is not p-dominant for {}", self.label());
            for w in self.string_of(lam) {
                out.insert(w, m);
            }
        }
        out
    }

    /// `rank E_V = dim V`.
    pub fn rank_of(&self, r: &RepSum) -> u64 {
        r.iter().map(|(lam, &m)| m * self.irrep_dim(lam).expect("p-dominant")).sum()
    }

    /// Weight of `det V`.
    pub fn det_of(&self, r: &RepSum) -> Weight {
        self.weights(r).sum(self.rank())
    }

    /// Splits a character into irreducibles by repeatedly removing the
    /// string of a highest weight: the weight maximizing `λ_u` (ties broken
    /// lexicographically), which no other weight can dominate.
    pub fn decompose(&self, m: &WeightMultiset) -> Result<RepSum> {
        let mut rest = m.clone();
        let mut out = RepSum::zero();
        while !rest.is_empty() {
            let top = match self.levi_node() {
                None => rest.iter().next_back().map(|(w, _)| w.clone()),
                Some(u) => rest.iter().map(|(w, _)| w).max_by(|a, b| a[u].cmp(&b[u]).then_with(|| a.cmp(b))).cloned(),
            }
            .expect("nonempty");
            if !self.is_p_dominant(&top) {
                return Err(Error::NotARepresentation(top));
            }
            let mult = rest.multiplicity(&top);
            for w in self.string_of(&top) {
                if !rest.remove(&w, mult) {
                    return Err(Error::NotARepresentation(w));
                }
            }
            out.add(top, mult);
        }
        Ok(out)
    }

    /// `V^∨`.
    pub fn dual(&self, r: &RepSum) -> RepSum {
        self.decompose(&self.weights(r).negated()).expect("dual of a representation")
    }

    /// `A ⊗ B`.
    pub fn tensor(&self, a: &RepSum, b: &RepSum) -> RepSum {
        self.decompose(&self.weights(a).convolve(&self.weights(b))).expect("tensor of representations")
    }

    /// Weights of `Λ^k V`: all `k`-element sub-multiset sums, accumulated
    /// one weight at a time as for elementary symmetric polynomials.
    pub fn exterior_weights(&self, r: &RepSum, k: usize) -> Result<WeightMultiset> {
        let n = self.rank_of(r);
        if k as u64 > n {
            return Err(Error::OutOfRange { k, rank: n });
        }
        let mut layers: Vec<WeightMultiset> = vec![WeightMultiset::new(); k + 1];
        layers[0].insert(Weight::zero(self.rank()), 1);
        for (w, &m) in self.weights(r).iter() {
            for _ in 0..m {
                for j in (1..=k).rev() {
                    if layers[j - 1].is_empty() {
                        continue;
                    }
                    let shifted: Vec<(Weight, u64)> =
                        layers[j - 1].iter().map(|(x, &c)| (x + w, c)).collect();
                    for (x, c) in shifted {
                        layers[j].insert(x, c);
                    }
                }
            }
        }
        Ok(layers.swap_remove(k))
    }

    /// `Λ^k V`.
    pub fn exterior_power(&self, r: &RepSum, k: usize) -> Result<RepSum> {
        let weights = self.exterior_weights(r, k)?;
        Ok(self.decompose(&weights).expect("exterior power of a representation"))
    }

    /// Sorts summands for display: irrep dimension descending, then
    /// highest weight ascending.
    pub fn canonical_order(&self, summands: &mut [Weight]) {
        summands.sort_by(|a, b| {
            let (da, db) = (self.irrep_dim(a).unwrap_or(0), self.irrep_dim(b).unwrap_or(0));
            db.cmp(&da).then_with(|| a.cmp(b))
        });
    }

    /// Table notation, e.g. `(0,1)^{⊕2} ⊕ (2,0)`.
    pub fn render(&self, r: &RepSum) -> String {
        let mut s = r.summands();
        self.canonical_order(&mut s);
        render_grouped(s)
    }
}
