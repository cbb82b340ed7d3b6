//! Integral weights in fundamental-weight coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::Error;

/// An integral weight `λ = Σ λ_i ω_i`, stored by its coordinates `λ_i = ⟨λ, α_i^∨⟩`.
///
/// Ordering is lexicographic on the coordinates, which is what the
/// canonical sorts of representation sums and table rows rely on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(SmallVec<[i64; 4]>);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// The fundamental weight `ω_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    /// `(1, …, 1)`, the Weyl vector in this basis.
    pub fn rho(rank: usize) -> Self {
        Weight(SmallVec::from_elem(1, rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coordinates non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// All coordinates strictly positive.
    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    /// Sum of coordinates.
    pub fn coord_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &Weight) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weights of different rank");
        Weight(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| f(a, b)).collect())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|&c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|&c| self * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `"(a,b,…)"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("expected a weight like (a,b), got {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        if inner.is_empty() {
            return Err(bad());
        }
        inner
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<SmallVec<_>, _>>()
            .map(Weight)
    }
}

/// Parses a summand list `"(a,b)[+(c,d)…]"` into weights, in the order given.
pub fn parse_summands(s: &str) -> Result<Vec<Weight>, Error> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty summand list".into()));
    }
    compact.split('+').map(str::parse).collect()
}
