//! Bounds for dimensions along a chain of linear maps with unknown ranks.
//!
//! Nodes `0..m` are joined by maps `f_j : node j → node j+1` of unknown rank
//! `ρ_j ∈ [0, cap_j]`. Each node carries a value
//! `v_j = base_j + sign_j · (ρ_{j−1} + ρ_j)` constrained to `[lo_j, hi_j]`:
//!
//! * a spectral sequence collapsing along total degree has
//!   `h^n = e_n − ρ_{n−1} − ρ_n` (sign −1), and
//! * a long exact sequence has `dim V_j = ρ_{j−1} + ρ_j` (sign +1, base 0).
//!
//! [`RankChain::solve`] returns, for every node, the exact minimum and maximum
//! of `v_j` over all rank assignments satisfying every constraint. The chain
//! structure makes this a forward/backward reachability sweep over
//! intervals of ranks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainNode {
    pub base: i64,
    pub sign: i64,
    pub lo: i64,
    pub hi: Option<i64>,
}

impl ChainNode {
    /// `h = e − ρ_in − ρ_out`, required to lie in `[lo, hi]`.
    pub fn page(e: u64, lo: i64, hi: Option<i64>) -> Self {
        ChainNode { base: e as i64, sign: -1, lo, hi }
    }

    /// `dim = ρ_in + ρ_out`, required to lie in `[lo, hi]`.
    pub fn exact(lo: i64, hi: Option<i64>) -> Self {
        ChainNode { base: 0, sign: 1, lo, hi }
    }
}

/// Inclusive value range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub lo: i64,
    pub hi: i64,
}

impl Bounds {
    pub fn exact(v: i64) -> Self {
        Bounds { lo: v, hi: v }
    }

    pub fn is_determined(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<i64> {
        self.is_determined().then_some(self.lo)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankChain {
    pub nodes: Vec<ChainNode>,
    /// `caps[j]` bounds the rank of the map `j → j+1`; length `nodes.len() − 1`.
    pub caps: Vec<u64>,
}

impl RankChain {
    pub fn new(nodes: Vec<ChainNode>, caps: Vec<u64>) -> Self {
        assert_eq!(caps.len() + 1, nodes.len().max(1), "one cap per edge");
        RankChain { nodes, caps }
    }

    fn cap(&self, j: usize) -> i64 {
        self.caps.get(j).map_or(0, |&c| c as i64)
    }

    /// Per-node value bounds, or [`Error::Inconsistent`] if no rank
    /// assignment meets every constraint.
    ///
    /// Node `j` restricts `ρ_{j−1} + ρ_j` to an interval, so every set of
    /// feasible ranks met by the sweep is an interval too.
    pub fn solve(&self) -> Result<Vec<Bounds>> {
        let m = self.nodes.len();
        if m == 0 {
            return Ok(Vec::new());
        }
        let inconsistent = || Error::Inconsistent(format!("{:?}", self.nodes));
        // forward[j]: values of ρ_j extending an assignment valid on nodes 0..=j
        let mut forward: Vec<Span> = Vec::with_capacity(m);
        let mut prev = Span(0, 0);
        for (j, node) in self.nodes.iter().enumerate() {
            let cur = node.sum_range().minus(prev).meet(Span(0, self.cap(j))).ok_or_else(inconsistent)?;
            forward.push(cur);
            prev = cur;
        }
        if !forward[m - 1].contains(0) {
            return Err(inconsistent());
        }
        // backward[j]: values of ρ_j extending an assignment valid on nodes j+1..m
        let mut backward = vec![Span(0, 0); m];
        for j in (1..m).rev() {
            let next = self.nodes[j].sum_range().minus(backward[j]).meet(Span(0, self.cap(j - 1)));
            backward[j - 1] = next.ok_or_else(inconsistent)?;
        }
        let mut out = Vec::with_capacity(m);
        for (j, node) in self.nodes.iter().enumerate() {
            let incoming = if j == 0 { Some(Span(0, 0)) } else { forward[j - 1].meet(backward[j - 1]) };
            let sums = incoming
                .and_then(|a| node.sum_range().meet(Span(a.0 + backward[j].0, a.1 + backward[j].1)))
                .ok_or_else(|| Error::Inconsistent(format!("node {j}")))?;
            let (x, y) = (node.value_of_sum(sums.0), node.value_of_sum(sums.1));
            out.push(Bounds { lo: x.min(y), hi: x.max(y) });
        }
        Ok(out)
    }
}

/// Inclusive integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span(i64, i64);

impl Span {
    fn meet(self, other: Span) -> Option<Span> {
        let s = Span(self.0.max(other.0), self.1.min(other.1));
        (s.0 <= s.1).then_some(s)
    }

    /// `{s − a : s ∈ self, a ∈ other}`.
    fn minus(self, other: Span) -> Span {
        Span(self.0.saturating_sub(other.1), self.1.saturating_sub(other.0))
    }

    fn contains(self, v: i64) -> bool {
        self.0 <= v && v <= self.1
    }
}

impl ChainNode {
    /// Admissible values of `ρ_in + ρ_out`.
    fn sum_range(&self) -> Span {
        let (lo, hi) = (self.lo, self.hi.unwrap_or(i64::MAX));
        let s = if self.sign > 0 {
            Span(lo.saturating_sub(self.base), hi.saturating_sub(self.base))
        } else {
            Span(self.base.saturating_sub(hi), self.base.saturating_sub(lo))
        };
        Span(s.0.max(0), s.1)
    }

    fn value_of_sum(&self, s: i64) -> i64 {
        self.base + self.sign * s
    }
}
