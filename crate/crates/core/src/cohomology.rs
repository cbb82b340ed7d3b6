//! Borel-Weil-Bott cohomology of homogeneous bundles on `G/P`.
//!
//! For a p-dominant `λ`, `H^•(G/P, E_λ)` is concentrated in the single degree
//! `ℓ(w)` where `w(λ + ρ)` is dominant, with value the `G`-irreducible of
//! highest weight `w(λ + ρ) − ρ` (up to duality, which does not affect
//! dimensions), and vanishes when `λ + ρ` is singular. The `w` is searched
//! in the full Weyl group; for p-dominant `λ` it is automatically a minimal
//! coset representative.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::reps::RepSum;
use crate::root_system::{Conjugate, RootSystem};
use crate::weight::Weight;

/// Result of Borel-Weil-Bott for one irreducible bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bwb {
    Vanishes,
    /// Cohomology only in `degree`, equal to `V^G_highest`.
    Nonzero { degree: usize, highest: Weight },
}

/// An irreducible `G`-representation with its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GIrrep {
    pub highest: Weight,
    pub dim: u64,
}

/// Weyl dimension formula `Π_{α>0} ⟨μ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`.
pub fn weyl_dim(rs: &RootSystem, mu: &Weight) -> Result<u64> {
    if !mu.is_dominant() {
        return Err(Error::NotGDominant(mu.clone()));
    }
    let shifted = mu + rs.weyl_vector();
    let (mut num, mut den) = (1u128, 1u128);
    for a in rs.positive_roots() {
        num *= rs.pairing(&shifted, a) as u128;
        den *= rs.pairing(rs.weyl_vector(), a) as u128;
    }
    debug_assert_eq!(num % den, 0);
    Ok(u64::try_from(num / den).expect("dimension fits in u64"))
}

/// Formal sum of `G`-irreducibles in one cohomological degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GModule {
    /// Highest weight to multiplicity; serialized as a list of pairs.
    #[serde(with = "pair_list")]
    pub irreps: BTreeMap<Weight, u64>,
    pub dim: u64,
}

mod pair_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::weight::Weight;

    pub fn serialize<S: Serializer>(m: &BTreeMap<Weight, u64>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, u64>, D::Error> {
        Ok(Vec::<(Weight, u64)>::deserialize(d)?.into_iter().collect())
    }
}

impl GModule {
    pub fn add(&mut self, rs: &RootSystem, highest: Weight, mult: u64) {
        let d = weyl_dim(rs, &highest).expect("BWB output is dominant");
        self.dim += mult * d;
        *self.irreps.entry(highest).or_insert(0) += mult;
    }

    pub fn merge(&mut self, other: &GModule) {
        self.dim += other.dim;
        for (w, &m) in &other.irreps {
            *self.irreps.entry(w.clone()).or_insert(0) += m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
}

impl fmt::Display for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irreps.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .irreps
            .iter()
            .map(|(w, &m)| if m == 1 { format!("V_{w}") } else { format!("{m}·V_{w}") })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `H^q(G/P, E)` for `q = 0..=dim G/P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub dim_gp: usize,
    pub degrees: BTreeMap<usize, GModule>,
}

impl CohomologyTable {
    pub fn total_dim(&self, q: usize) -> u64 {
        self.degrees.get(&q).map_or(0, |m| m.dim)
    }

    pub fn euler(&self) -> i64 {
        self.degrees.iter().map(|(&q, m)| sign(q) * m.dim as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.values().all(GModule::is_zero)
    }

    /// One `H^q = …, dim d` row per degree.
    pub fn render_text(&self) -> String {
        (0..=self.dim_gp)
            .map(|q| match self.degrees.get(&q) {
                Some(m) => format!("H^{q} = {m}, dim {}\n", m.dim),
                None => format!("H^{q} = 0, dim 0\n"),
            })
            .collect()
    }
}

pub(crate) fn sign(q: usize) -> i64 {
    if q.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ParabolicData {
    /// Borel-Weil-Bott for `E_λ`.
    pub fn bwb_irrep(&self, lam: &Weight) -> Result<Bwb> {
        if !self.is_p_dominant(lam) {
            return Err(Error::NotPDominant(lam.clone()));
        }
        let rs = self.root_system();
        match rs.dominant_conjugate(&(lam + rs.weyl_vector())) {
            Conjugate::Singular => Ok(Bwb::Vanishes),
            Conjugate::Regular { length, dominant } => {
                assert!(length <= self.dim(), "BWB degree {length} exceeds dim G/P");
                Ok(Bwb::Nonzero { degree: length, highest: &dominant - rs.weyl_vector() })
            }
        }
    }

    /// Summand-wise Borel-Weil-Bott.
    pub fn bundle_cohomology(&self, r: &RepSum) -> Result<CohomologyTable> {
        let mut degrees: BTreeMap<usize, GModule> = BTreeMap::new();
        for (lam, &m) in r.iter() {
            if let Bwb::Nonzero { degree, highest } = self.bwb_irrep(lam)? {
                degrees.entry(degree).or_default().add(self.root_system(), highest, m);
            }
        }
        Ok(CohomologyTable { dim_gp: self.dim(), degrees })
    }

    /// `χ(G/P, E)`.
    pub fn euler_char(&self, r: &RepSum) -> Result<i64> {
        Ok(self.bundle_cohomology(r)?.euler())
    }
}
