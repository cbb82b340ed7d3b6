//! Parabolic subgroups as crossed Dynkin diagrams.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reps::{RepSum, WeightMultiset};
use crate::root_system::{Root, RootSystem};
use crate::weight::Weight;

/// The crossed nodes of a Dynkin diagram (simple roots not in the Levi).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParabolicSpec {
    crossed: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(crossed: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSpec { crossed: crossed.into_iter().collect() }
    }

    pub fn crossed(&self) -> &BTreeSet<usize> {
        &self.crossed
    }
}

/// The three parabolics of G2, in the order `P1`, `P2`, `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum G2Parabolic {
    P1,
    P2,
    B,
}

impl G2Parabolic {
    pub const ALL: [G2Parabolic; 3] = [G2Parabolic::P1, G2Parabolic::P2, G2Parabolic::B];
    pub const MAXIMAL: [G2Parabolic; 2] = [G2Parabolic::P1, G2Parabolic::P2];

    pub fn spec(self) -> ParabolicSpec {
        match self {
            G2Parabolic::P1 => ParabolicSpec::new([0]),
            G2Parabolic::P2 => ParabolicSpec::new([1]),
            G2Parabolic::B => ParabolicSpec::new([0, 1]),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            G2Parabolic::P1 => "P1",
            G2Parabolic::P2 => "P2",
            G2Parabolic::B => "B",
        }
    }

    /// The parabolic data over the shared G2 root system.
    pub fn data(self) -> ParabolicData {
        ParabolicData::new(crate::g2_root_system(), self.spec())
            .expect("G2 parabolics have Levi rank <= 1")
    }
}

impl fmt::Display for G2Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for G2Parabolic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P1" | "p1" => Ok(G2Parabolic::P1),
            "P2" | "p2" => Ok(G2Parabolic::P2),
            "B" | "b" => Ok(G2Parabolic::B),
            _ => Err(Error::Parse(format!("unknown parabolic {s:?}; expected P1, P2 or B"))),
        }
    }
}

/// Levi data, tangent representation and anticanonical weight of `G/P`.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    rs: Arc<RootSystem>,
    spec: ParabolicSpec,
    label: String,
    uncrossed: Vec<usize>,
    dim: usize,
    levi_positive_roots: usize,
    tangent: RepSum,
    anticanonical: Weight,
}

impl PartialEq for ParabolicData {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.rs.cartan() == other.rs.cartan()
    }
}

impl Eq for ParabolicData {}

impl ParabolicData {
    /// Builds the parabolic for `spec`.
    ///
    /// `dim G/P` counts positive roots outside the Levi span. The tangent
    /// representation `g/p` is assembled from those same roots, taken with
    /// positive sign: in ω-coordinates with this Cartan matrix they are the
    /// weights whose sum is the anticanonical class.
    pub fn new(rs: Arc<RootSystem>, spec: ParabolicSpec) -> Result<Self> {
        let r = rs.rank();
        if spec.crossed.is_empty() {
            return Err(Error::InvalidParabolic("no crossed nodes".into()));
        }
        if let Some(&i) = spec.crossed.iter().find(|&&i| i >= r) {
            return Err(Error::InvalidParabolic(format!("node {i} out of range for rank {r}")));
        }
        let uncrossed: Vec<usize> = (0..r).filter(|i| !spec.crossed.contains(i)).collect();
        if uncrossed.len() > 1 {
            return Err(Error::UnsupportedLevi(uncrossed.len()));
        }
        let crossed = spec.crossed.clone();
        let in_levi = |a: &Root| crossed.iter().all(|&i| a.simple_coords[i] == 0);
        let levi_positive_roots = rs.positive_roots().iter().filter(|a| in_levi(a)).count();
        let dim = rs.positive_roots().len() - levi_positive_roots;

        let label = label_for(&rs, &spec);
        let mut pd = ParabolicData {
            rs: rs.clone(),
            spec,
            label,
            uncrossed,
            dim,
            levi_positive_roots,
            tangent: RepSum::zero(),
            anticanonical: Weight::zero(r),
        };
        let tangent_weights: WeightMultiset = rs
            .positive_roots()
            .iter()
            .filter(|a| !in_levi(a))
            .map(|a| a.weight.clone())
            .collect();
        pd.anticanonical = tangent_weights.sum(r);
        pd.tangent = pd.decompose(&tangent_weights)?;
        Ok(pd)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn spec(&self) -> &ParabolicSpec {
        &self.spec
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Nodes of the Levi (`S_p`).
    pub fn uncrossed(&self) -> &[usize] {
        &self.uncrossed
    }

    /// Semisimple rank of the Levi.
    pub fn levi_rank(&self) -> usize {
        self.uncrossed.len()
    }

    pub fn levi_positive_roots(&self) -> usize {
        self.levi_positive_roots
    }

    /// `dim G/P`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The representation `g/p`, i.e. the tangent bundle.
    pub fn tangent(&self) -> &RepSum {
        &self.tangent
    }

    /// `det(g/p)`, the anticanonical weight.
    pub fn anticanonical(&self) -> &Weight {
        &self.anticanonical
    }

    /// Weight of the canonical line bundle.
    pub fn canonical(&self) -> Weight {
        -&self.anticanonical
    }

    /// Maximal parabolics have Picard rank one.
    pub fn is_maximal(&self) -> bool {
        self.spec.crossed.len() == 1
    }

    /// `ω_c` for the single crossed node `c` of a maximal parabolic.
    pub fn picard_generator(&self) -> Result<Weight> {
        match self.spec.crossed.iter().collect::<Vec<_>>()[..] {
            [&c] => Ok(Weight::fundamental(self.rank(), c)),
            _ => Err(Error::NotMaximalParabolic(self.label.clone())),
        }
    }

    /// `λ_i ≥ 0` on every uncrossed node.
    pub fn is_p_dominant(&self, lam: &Weight) -> bool {
        self.uncrossed.iter().all(|&i| lam[i] >= 0)
    }
}

/// `λ_i ≥ 0` for every node: `E_λ` is globally generated.
pub fn is_g_dominant(lam: &Weight) -> bool {
    lam.is_dominant()
}

fn label_for(rs: &RootSystem, spec: &ParabolicSpec) -> String {
    if *rs.cartan() == crate::CartanMatrix::g2() {
        if let Some(p) = G2Parabolic::ALL.into_iter().find(|p| p.spec() == *spec) {
            return p.label().to_string();
        }
    }
    let nodes: Vec<String> = spec.crossed.iter().map(|i| (i + 1).to_string()).collect();
    format!("P[{}]", nodes.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new([a, b])
    }

    #[test]
    fn g2_dimensions_and_anticanonical() {
        let expect = [(G2Parabolic::P1, 5, w(3, 0)), (G2Parabolic::P2, 5, w(0, 5)), (G2Parabolic::B, 6, w(2, 2))];
        for (p, dim, ac) in expect {
            let pd = p.data();
            assert_eq!(pd.dim(), dim, "{p}");
            assert_eq!(pd.anticanonical(), &ac, "{p}");
            assert_eq!(pd.rank_of(pd.tangent()), dim as u64);
            assert_eq!(pd.weights(pd.tangent()).sum(2), ac);
        }
    }

    #[test]
    fn tangent_matches_reference_decompositions() {
        for p in G2Parabolic::ALL {
            let expected: RepSum = reference::tangent_decomposition(p).iter().cloned().collect();
            assert_eq!(p.data().tangent(), &expected, "{p}");
        }
    }

    #[test]
    fn tangent_weights_are_roots_outside_levi() {
        let rs = crate::g2_root_system();
        for p in G2Parabolic::ALL {
            let pd = p.data();
            for (wt, _) in pd.weights(pd.tangent()).iter() {
                let root = rs.root_by_weight(wt).expect("tangent weight is a positive root");
                assert!(pd.spec().crossed().iter().any(|&i| root.simple_coords[i] != 0));
            }
        }
    }

    #[test]
    fn inclusion_monotone() {
        let (p1, p2, b) = (G2Parabolic::P1.data(), G2Parabolic::P2.data(), G2Parabolic::B.data());
        assert!(p1.dim() <= b.dim() && p2.dim() <= b.dim());
        assert_eq!(b.levi_rank(), 0);
        assert_eq!(p1.uncrossed(), &[1]);
    }

    #[test]
    fn dominance_tests() {
        let (p1, b) = (G2Parabolic::P1.data(), G2Parabolic::B.data());
        assert!(b.is_p_dominant(&w(-5, -7)));
        assert!(p1.is_p_dominant(&w(-1, 3)));
        assert!(!p1.is_p_dominant(&w(0, -1)));
        assert!(is_g_dominant(&w(1, 1)));
        assert!(!is_g_dominant(&w(-1, 3)));
        assert!(is_g_dominant(&w(0, 0)));
    }

    #[test]
    fn picard_generators() {
        assert_eq!(G2Parabolic::P1.data().picard_generator().unwrap(), w(1, 0));
        assert_eq!(G2Parabolic::P2.data().picard_generator().unwrap(), w(0, 1));
        assert!(matches!(G2Parabolic::B.data().picard_generator(), Err(Error::NotMaximalParabolic(_))));
    }

    #[test]
    fn invalid_specs() {
        let rs = crate::g2_root_system();
        assert!(ParabolicData::new(rs.clone(), ParabolicSpec::new([])).is_err());
        assert!(ParabolicData::new(rs, ParabolicSpec::new([2])).is_err());
        let a3 = Arc::new(RootSystem::new(crate::CartanMatrix::type_a(3)).unwrap());
        assert_eq!(ParabolicData::new(a3, ParabolicSpec::new([0])), Err(Error::UnsupportedLevi(2)));
        assert_eq!("P2".parse::<G2Parabolic>().unwrap(), G2Parabolic::P2);
        assert!("P3".parse::<G2Parabolic>().is_err());
    }
}
