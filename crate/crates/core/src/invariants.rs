//! Invariants of a complete intersection `X ⊂ G/P` cut out by a section of
//! `E = ⊕ E_λ`: Calabi-Yau conditions, Hodge numbers through the conormal
//! sequence `0 → E^∨|_X → Ω_F|_X → Ω_X → 0`, and degree and `c2·H` from the
//! Hilbert function `χ(O_X(i)) = deg/6 · i³ + c2·H/12 · i`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chain::{Bounds, ChainNode, RankChain};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::koszul::{check_bundle, KoszulInput};
use crate::parabolic::ParabolicData;
use crate::reference::reference_invariants;
use crate::reps::RepSum;
use crate::weight::Weight;

/// A validated bundle on a parabolic whose general zero locus has trivial
/// canonical class.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub parabolic: ParabolicData,
    /// Highest weights in canonical order.
    pub summands: Vec<Weight>,
    pub bundle: RepSum,
    pub rank: usize,
    pub dim_x: usize,
    pub det: Weight,
}

impl Candidate {
    /// True iff every summand is a line bundle.
    pub fn is_split(&self) -> bool {
        self.summands.iter().all(|s| self.parabolic.irrep_dim(s) == Ok(1))
    }

    pub fn render(&self) -> String {
        self.parabolic.render(&self.bundle)
    }

    fn koszul(&self, coefficients: RepSum, exec: Execution) -> KoszulInput {
        KoszulInput::new(self.parabolic.clone(), self.bundle.clone(), coefficients)
            .expect("validated candidate")
            .with_execution(exec)
    }
}

/// Checks global generation, absence of trivial summands, the rank bound
/// `rank ≤ dim G/P − 2` and `det E = det(g/p)`.
pub fn validate_candidate(p: &ParabolicData, summands: &[Weight]) -> Result<Candidate> {
    if summands.is_empty() {
        return Err(Error::Parse("no summands".into()));
    }
    let bundle: RepSum = summands.iter().cloned().collect();
    p.validate(&bundle)?;
    if let Some(lam) = summands.iter().find(|s| !s.is_dominant()) {
        return Err(Error::NotGloballyGenerated(lam.clone()));
    }
    if bundle.contains_trivial() {
        return Err(Error::TrivialSummand);
    }
    let rank = p.rank_of(&bundle);
    let bound = p.dim().saturating_sub(2) as u64;
    if rank > bound {
        return Err(Error::RankTooLarge { rank, bound });
    }
    let det = p.det_of(&bundle);
    if &det != p.anticanonical() {
        return Err(Error::WrongDeterminant { found: det, expected: p.anticanonical().clone() });
    }
    check_bundle(p, &bundle)?;
    let mut ordered = summands.to_vec();
    p.canonical_order(&mut ordered);
    Ok(Candidate {
        parabolic: p.clone(),
        summands: ordered,
        bundle,
        rank: rank as usize,
        dim_x: p.dim() - rank as usize,
        det,
    })
}

/// Hodge data of `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeRecord {
    /// `h^{0,q}`, `q = 0..=dim X`.
    pub h0q: Vec<Bounds>,
    /// `h^{1,q}`, `q = 0..=dim X`; only computed for threefolds.
    pub h1q: Option<Vec<Bounds>>,
    /// `χ(Ω¹_X) = χ(Ω_F|_X) − χ(E^∨|_X)`, always exact.
    pub chi_omega1: i64,
}

impl HodgeRecord {
    pub fn h11(&self) -> Option<Bounds> {
        self.h1q.as_ref().map(|h| h[1])
    }

    pub fn h12(&self) -> Option<Bounds> {
        self.h1q.as_ref().map(|h| h[2])
    }
}

/// Hodge numbers from three Koszul computations (`W = O`, `E^∨`, `Ω_F`).
///
/// For threefolds the conormal long exact sequence
/// `0 → H^0(E^∨|_X) → H^0(Ω_F|_X) → H^0(Ω_X) → H^1(E^∨|_X) → ⋯`
/// is solved for `h^{1,q}` using the boundary values
/// `h^{1,0} = h^{0,1}` and `h^{1,n} = h^{0,n−1}` (Hodge symmetry and Serre
/// duality with trivial canonical class). Undetermined values stay as
/// bounds.
pub fn hodge_numbers(c: &Candidate, exec: Execution) -> Result<HodgeRecord> {
    let p = &c.parabolic;
    let coefficients = [RepSum::trivial(p.rank()), p.dual(&c.bundle), p.dual(p.tangent())];
    let [o, conormal, omega_f]: [_; 3] = exec
        .try_map(&coefficients, |w| c.koszul(w.clone(), Execution::Sequential).restricted_cohomology())?
        .try_into()
        .expect("three computations");

    let chi_omega1 = omega_f.euler - conormal.euler;
    let n = c.dim_x;
    let h1q = if n == 3 {
        let mut nodes = Vec::with_capacity(3 * (n + 1));
        for q in 0..=n {
            nodes.push(ChainNode::exact(conormal.degrees[q].lo, Some(conormal.degrees[q].hi)));
            nodes.push(ChainNode::exact(omega_f.degrees[q].lo, Some(omega_f.degrees[q].hi)));
            let boundary = match q {
                0 => Some(o.degrees[1]),
                q if q == n => Some(o.degrees[n - 1]),
                _ => None,
            };
            nodes.push(match boundary {
                Some(b) => ChainNode::exact(b.lo, Some(b.hi)),
                None => ChainNode::exact(0, None),
            });
        }
        let caps = nodes
            .windows(2)
            .map(|pair| match (pair[0].hi, pair[1].hi) {
                (Some(a), Some(b)) => a.min(b) as u64,
                (Some(a), None) | (None, Some(a)) => a as u64,
                (None, None) => unreachable!("unbounded nodes are never adjacent"),
            })
            .collect();
        let bounds = RankChain::new(nodes, caps).solve()?;
        Some((0..=n).map(|q| bounds[3 * q + 2]).collect())
    } else {
        None
    };
    Ok(HodgeRecord { h0q: o.degrees, h1q, chi_omega1 })
}

/// Degree and `c2·H` of a threefold in a Picard-rank-one ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeC2 {
    pub degree: i64,
    pub c2h: i64,
    /// `(i, χ(O_X(i)))` for `i = −4..=4`.
    pub samples: Vec<(i64, i64)>,
}

pub const HILBERT_SAMPLES: std::ops::RangeInclusive<i64> = -4..=4;

/// Fits `χ(O_X(i)) = deg/6 · i³ + c2H/12 · i` from `i = 1, 2` and checks the
/// fit on every other sample, which also checks `χ(O_X) = 0` and oddness.
pub fn degree_and_c2(c: &Candidate, exec: Execution) -> Result<DegreeC2> {
    if c.dim_x != 3 {
        return Err(Error::DimensionOutOfRange { dim: c.dim_x, lo: 3, hi: 3 });
    }
    let p = &c.parabolic;
    p.picard_generator()?;
    let is: Vec<i64> = HILBERT_SAMPLES.collect();
    let values = exec.try_map(&is, |&i| p.hilbert_value(&c.bundle, i))?;
    let samples: Vec<(i64, i64)> = is.into_iter().zip(values).collect();
    let chi = |i: i64| samples.iter().find(|s| s.0 == i).expect("sampled").1;
    // χ(2) − 2χ(1) = deg, 16χ(1) − 2χ(2) = c2H
    let degree = chi(2) - 2 * chi(1);
    let c2h = 16 * chi(1) - 2 * chi(2);
    for &(i, v) in &samples {
        if 12 * v != 2 * degree * i * i * i + c2h * i {
            return Err(Error::FitInconsistent(format!(
                "χ(O_X({i})) = {v} but deg = {degree}, c2H = {c2h} predict {}/12",
                2 * degree * i * i * i + c2h * i
            )));
        }
    }
    Ok(DegreeC2 { degree, c2h, samples })
}

/// Topological Euler number `2(h^{1,1} − h^{1,2})` of a Calabi-Yau threefold.
pub fn euler_number(h: &HodgeRecord) -> Result<i64> {
    let determined = |b: Option<Bounds>| b.and_then(|b| b.value()).ok_or(Error::UndeterminedHodge);
    let h01 = determined(h.h0q.get(1).copied())?;
    let h02 = determined(h.h0q.get(2).copied())?;
    if h01 != 0 || h02 != 0 {
        return Err(Error::UndeterminedHodge);
    }
    Ok(2 * (determined(h.h11())? - determined(h.h12())?))
}

/// Status of one reported value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Determined,
    Undetermined { lower: i64, upper: i64 },
    NotApplicable { reason: String },
}

impl From<Bounds> for Status {
    fn from(b: Bounds) -> Self {
        if b.is_determined() {
            Status::Determined
        } else {
            Status::Undetermined { lower: b.lo, upper: b.hi }
        }
    }
}

/// Serializable invariant summary of one candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub parabolic: String,
    pub summands: Vec<Weight>,
    pub bundle: String,
    pub rank: usize,
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub det: Weight,
    pub split: bool,
    pub h0q: Vec<Option<i64>>,
    pub h11: Option<i64>,
    pub h12: Option<i64>,
    pub chi_omega1: i64,
    pub deg: Option<i64>,
    #[serde(rename = "c2H")]
    pub c2h: Option<i64>,
    pub euler: Option<i64>,
    pub hilbert: Vec<(i64, i64)>,
    pub statuses: BTreeMap<String, Status>,
    /// Differences from the published values for this row, if any.
    pub discrepancies: Vec<String>,
}

/// Every invariant the candidate admits, with statuses for the rest.
pub fn compute_invariants(c: &Candidate, exec: Execution) -> Result<InvariantRecord> {
    let hodge = hodge_numbers(c, exec)?;
    let mut statuses = BTreeMap::new();
    for (q, b) in hodge.h0q.iter().enumerate() {
        statuses.insert(format!("h0{q}"), Status::from(*b));
    }
    let not_threefold = || Status::NotApplicable { reason: not_threefold_reason(c.dim_x) };
    for (key, b) in [("h11", hodge.h11()), ("h12", hodge.h12())] {
        statuses.insert(key.to_string(), b.map_or_else(not_threefold, Status::from));
    }

    let (deg, c2h, hilbert) = match degree_and_c2(c, exec) {
        Ok(d) => {
            statuses.insert("deg".into(), Status::Determined);
            statuses.insert("c2H".into(), Status::Determined);
            (Some(d.degree), Some(d.c2h), d.samples)
        }
        Err(e @ (Error::NotMaximalParabolic(_) | Error::DimensionOutOfRange { .. })) => {
            let s = Status::NotApplicable { reason: e.to_string() };
            statuses.insert("deg".into(), s.clone());
            statuses.insert("c2H".into(), s);
            (None, None, Vec::new())
        }
        Err(e) => return Err(e),
    };

    let euler = match euler_number(&hodge) {
        Ok(e) => {
            statuses.insert("euler".into(), Status::Determined);
            Some(e)
        }
        Err(e) => {
            let reason = if c.dim_x == 3 { e.to_string() } else { not_threefold_reason(c.dim_x) };
            statuses.insert("euler".into(), Status::NotApplicable { reason });
            None
        }
    };

    let mut record = InvariantRecord {
        parabolic: c.parabolic.label().to_string(),
        summands: c.summands.clone(),
        bundle: c.render(),
        rank: c.rank,
        dim_x: c.dim_x,
        det: c.det.clone(),
        split: c.is_split(),
        h0q: hodge.h0q.iter().map(Bounds::value).collect(),
        h11: hodge.h11().and_then(|b| b.value()),
        h12: hodge.h12().and_then(|b| b.value()),
        chi_omega1: hodge.chi_omega1,
        deg,
        c2h,
        euler,
        hilbert,
        statuses,
        discrepancies: Vec::new(),
    };
    record.discrepancies = reference_discrepancies(&record);
    Ok(record)
}

fn not_threefold_reason(dim_x: usize) -> String {
    format!("dim X = {dim_x} is not 3")
}

/// Compares a record with the published invariants of the same row.
pub fn reference_discrepancies(r: &InvariantRecord) -> Vec<String> {
    let mut out = Vec::new();
    for reference in reference_invariants() {
        let mut summands = reference.summands.clone();
        summands.sort();
        let mut mine = r.summands.clone();
        mine.sort();
        if reference.parabolic.label() != r.parabolic || summands != mine {
            continue;
        }
        let checks = [
            ("deg", r.deg, reference.degree),
            ("c2H", r.c2h, reference.c2h),
            ("h11", r.h11, reference.h11 as i64),
            ("h12", r.h12, reference.h12 as i64),
        ];
        for (name, computed, published) in checks {
            if let Some(v) = computed {
                if v != published {
                    out.push(format!("{name}: computed {v}, published {published}"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::G2Parabolic::{B, P1, P2};

    fn w(a: i64, b: i64) -> Weight {
        Weight::new([a, b])
    }

    #[test]
    fn validation() {
        let c = validate_candidate(&P1.data(), &[w(1, 1)]).unwrap();
        assert_eq!((c.rank, c.dim_x, c.det.clone()), (2, 3, w(3, 0)));
        assert!(!c.is_split());
        assert_eq!(validate_candidate(&P1.data(), &[w(1, 1), w(0, 0)]).unwrap_err(), Error::TrivialSummand);
        assert_eq!(
            validate_candidate(&P2.data(), &[w(1, 0)]).unwrap_err(),
            Error::WrongDeterminant { found: w(0, 3), expected: w(0, 5) }
        );
        assert_eq!(
            validate_candidate(&P1.data(), &[w(-1, 3), w(4, 0)]).unwrap_err(),
            Error::NotGloballyGenerated(w(-1, 3))
        );
        assert_eq!(
            validate_candidate(&B.data(), &vec![w(1, 0); 5]).unwrap_err(),
            Error::RankTooLarge { rank: 5, bound: 4 }
        );
        assert_eq!(
            validate_candidate(&P1.data(), &[w(0, -1)]).unwrap_err(),
            Error::NotPDominant(w(0, -1))
        );
    }

    #[test]
    fn nonsplit_threefolds() {
        for p in [P1, P2] {
            let c = validate_candidate(&p.data(), &[w(1, 1)]).unwrap();
            let h = hodge_numbers(&c, Execution::Sequential).unwrap();
            let values: Vec<_> = h.h0q.iter().map(|b| b.value()).collect();
            assert_eq!(values, vec![Some(1), Some(0), Some(0), Some(1)]);
            assert_eq!(h.h11(), Some(Bounds::exact(1)), "{p}");
            assert_eq!(h.h12(), Some(Bounds::exact(50)), "{p}");
            assert_eq!(h.chi_omega1, 49);
            assert_eq!(euler_number(&h).unwrap(), -98);
        }
        let c = validate_candidate(&P1.data(), &[w(1, 1)]).unwrap();
        let d = degree_and_c2(&c, Execution::Sequential).unwrap();
        assert_eq!((d.degree, d.c2h), (42, 84));
        let c = validate_candidate(&P2.data(), &[w(1, 1)]).unwrap();
        let d = degree_and_c2(&c, Execution::Sequential).unwrap();
        assert_eq!(d.degree, 14);
        assert_eq!(d.c2h % 12, 8);
    }

    #[test]
    fn degree_requires_rank_one_picard_group() {
        let c = validate_candidate(&B.data(), &[w(0, 1), w(1, 0), w(1, 1)]).unwrap();
        assert!(matches!(degree_and_c2(&c, Execution::Sequential), Err(Error::NotMaximalParabolic(_))));
        let c = validate_candidate(&P1.data(), &[w(3, 0)]).unwrap();
        assert!(matches!(degree_and_c2(&c, Execution::Sequential), Err(Error::DimensionOutOfRange { .. })));
    }

    #[test]
    fn euler_number_needs_determined_values() {
        let h = HodgeRecord {
            h0q: vec![Bounds::exact(1), Bounds::exact(0), Bounds::exact(0), Bounds::exact(1)],
            h1q: Some(vec![Bounds::exact(0), Bounds::exact(7), Bounds::exact(7), Bounds::exact(0)]),
            chi_omega1: 0,
        };
        assert_eq!(euler_number(&h).unwrap(), 0);
        let mut open = h.clone();
        open.h1q.as_mut().unwrap()[2] = Bounds { lo: 3, hi: 7 };
        assert_eq!(euler_number(&open), Err(Error::UndeterminedHodge));
    }

    #[test]
    fn record_flags_published_c2_of_the_quadric_section() {
        let c = validate_candidate(&P2.data(), &[w(1, 1)]).unwrap();
        let r = compute_invariants(&c, Execution::Sequential).unwrap();
        assert_eq!(r.deg, Some(14));
        assert_eq!(r.discrepancies.len(), 1);
        assert!(r.discrepancies[0].starts_with("c2H: computed"));
        let c = validate_candidate(&P1.data(), &[w(1, 1)]).unwrap();
        let r = compute_invariants(&c, Execution::Sequential).unwrap();
        assert!(r.discrepancies.is_empty());
        assert_eq!(r.statuses["h12"], Status::Determined);
    }
}
