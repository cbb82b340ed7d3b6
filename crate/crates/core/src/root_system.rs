//! Finite root systems built from a Cartan matrix.
//!
//! Weights are written in fundamental-weight coordinates, so the simple root
//! `α_i` is row `i` of the Cartan matrix and `⟨λ, α_i^∨⟩ = λ_i`. Positive
//! roots are generated by reflection closure from the simple roots; coroots
//! are tracked as integer expansions in the simple coroots, so every pairing
//! is an exact integer computation.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// Upper bound on the number of positive roots accepted by
/// [`RootSystem::new`]. The largest exceptional type (E8) has 120.
pub const DEFAULT_ROOT_BOUND: usize = 4096;

/// Upper bound on Weyl group enumeration.
pub const WEYL_ORDER_BOUND: usize = 1 << 20;

/// `C_ij = ⟨α_i, α_j^∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let r = entries.len();
        if r == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidCartan(format!("row {i} has length {}", row.len())));
            }
            for (j, &c) in row.iter().enumerate() {
                if i == j && c != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry {i} is {c}")));
                }
                if i != j && c > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) = {c} > 0")));
                }
                if i != j && (c == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) must vanish together"
                    )));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    /// G2 with node 1 long: `⟨α_1, α_2^∨⟩ = −3`, `⟨α_2, α_1^∨⟩ = −1`.
    pub fn g2() -> Self {
        CartanMatrix { entries: vec![vec![2, -3], vec![-1, 2]] }
    }

    /// Type `A_r`.
    pub fn type_a(r: usize) -> Self {
        let entries = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        CartanMatrix { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Positive integers `d_j = (α_j, α_j)/2` with `C_ij d_j` symmetric,
    /// normalized so each connected component has gcd 1.
    pub fn symmetrizer(&self) -> Result<Vec<i64>> {
        let r = self.rank();
        // d_j as a fraction num/den, propagated along edges: d_j = d_i C_ji / C_ij.
        let mut d: Vec<Option<(i64, i64)>> = vec![None; r];
        for start in 0..r {
            if d[start].is_some() {
                continue;
            }
            let mut component = vec![start];
            d[start] = Some((1, 1));
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let (ni, di) = d[i].unwrap();
                for j in 0..r {
                    if j == i || self.entries[i][j] == 0 {
                        continue;
                    }
                    let (n, m) = reduce(ni * self.entries[j][i], di * self.entries[i][j]);
                    match d[j] {
                        None => {
                            d[j] = Some((n, m));
                            component.push(j);
                            queue.push_back(j);
                        }
                        Some(existing) if existing != (n, m) => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                        }
                        Some(_) => {}
                    }
                }
            }
            let l = component.iter().fold(1, |acc, &j| lcm(acc, d[j].unwrap().1));
            let g = component.iter().fold(0, |acc, &j| {
                let (n, m) = d[j].unwrap();
                gcd(acc, n * (l / m))
            });
            for &j in &component {
                let (n, m) = d[j].unwrap();
                d[j] = Some((n * (l / m) / g, 1));
            }
        }
        Ok(d.into_iter().map(|x| x.unwrap().0).collect())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn reduce(n: i64, m: i64) -> (i64, i64) {
    let g = gcd(n, m);
    let s = if m < 0 { -1 } else { 1 };
    (s * n / g, s * m / g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootLength {
    Long,
    Short,
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    /// ω-coordinates.
    pub weight: Weight,
    /// Expansion in the simple roots.
    pub simple_coords: Vec<i64>,
    /// Expansion of `α^∨` in the simple coroots.
    pub coroot_coords: Vec<i64>,
    pub length: RootLength,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

/// A Weyl group element as a reduced word `s_{i_1} ⋯ s_{i_k}`; the
/// rightmost reflection acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn inverse(&self) -> Self {
        WeylElement { word: self.word.iter().rev().copied().collect() }
    }
}

/// Outcome of searching for the dominant Weyl conjugate of a weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjugate {
    /// `⟨μ, α^∨⟩ = 0` for some root `α`.
    Singular,
    /// `w μ = dominant` with `ℓ(w) = length`, `dominant` strictly dominant.
    Regular { length: usize, dominant: Weight },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan: CartanMatrix,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    weyl_vector: Weight,
    symmetrizer: Vec<i64>,
    index: HashMap<Weight, usize>,
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        Self::with_bound(cartan, DEFAULT_ROOT_BOUND)
    }

    /// Reflection closure of the simple roots, keeping positive roots only.
    /// Fails with [`Error::NonFiniteType`] once more than `bound` roots appear.
    pub fn with_bound(cartan: CartanMatrix, bound: usize) -> Result<Self> {
        let r = cartan.rank();
        let symmetrizer = cartan.symmetrizer()?;
        let simple_roots: Vec<Weight> =
            cartan.rows().iter().map(|row| Weight::new(row.iter().copied())).collect();

        let weight_of = |c: &[i64]| -> Weight {
            Weight::new((0..r).map(|i| (0..r).map(|j| c[j] * cartan.entry(j, i)).sum()))
        };
        // Coordinates of real roots grow exponentially outside finite type.
        let checked_weight_of = |c: &[i64]| -> Option<Vec<i64>> {
            (0..r)
                .map(|i| {
                    (0..r).try_fold(0i64, |acc, j| c[j].checked_mul(cartan.entry(j, i))?.checked_add(acc))
                })
                .collect()
        };

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut order: Vec<Vec<i64>> = Vec::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(c) = queue.pop_front() {
            let w = checked_weight_of(&c).ok_or(Error::NonFiniteType { bound })?;
            for i in 0..r {
                let mut next = c.clone();
                next[i] = next[i].checked_sub(w[i]).ok_or(Error::NonFiniteType { bound })?;
                if next.iter().any(|&x| x < 0) || !seen.insert(next.clone()) {
                    continue;
                }
                if seen.len() > bound {
                    return Err(Error::NonFiniteType { bound });
                }
                queue.push_back(next);
            }
            order.push(c);
        }
        order.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let long = *symmetrizer.iter().max().expect("rank > 0");
        let mut positive_roots = Vec::with_capacity(order.len());
        for c in order {
            // (α, α)/2 = Σ c_i c_j C_ij d_j / 2
            let mut norm2 = 0;
            for i in 0..r {
                for j in 0..r {
                    norm2 += c[i] * c[j] * cartan.entry(i, j) * symmetrizer[j];
                }
            }
            let d_alpha = norm2 / 2;
            let coroot_coords: Vec<i64> = (0..r)
                .map(|i| {
                    let num = c[i] * symmetrizer[i];
                    debug_assert_eq!(num % d_alpha, 0);
                    num / d_alpha
                })
                .collect();
            positive_roots.push(Root {
                weight: weight_of(&c),
                simple_coords: c,
                coroot_coords,
                length: if d_alpha == long { RootLength::Long } else { RootLength::Short },
            });
        }

        let weyl_vector = Weight::rho(r);
        let two_rho = positive_roots.iter().fold(Weight::zero(r), |acc, a| &acc + &a.weight);
        debug_assert_eq!(two_rho, 2 * &weyl_vector);

        let index = positive_roots.iter().enumerate().map(|(k, a)| (a.weight.clone(), k)).collect();
        Ok(RootSystem { cartan, simple_roots, positive_roots, weyl_vector, symmetrizer, index })
    }

    pub fn g2() -> Self {
        Self::new(CartanMatrix::g2()).expect("G2 is of finite type")
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    /// Positive roots, sorted by height and then reverse-lexicographically
    /// on simple coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The positive root with the given ω-coordinates.
    pub fn root_by_weight(&self, w: &Weight) -> Option<&Root> {
        self.index.get(w).map(|&k| &self.positive_roots[k])
    }

    /// Highest root: the unique positive root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty")
    }

    /// `s_i λ = λ − λ_i α_i`.
    pub fn reflect(&self, i: usize, lam: &Weight) -> Weight {
        lam - &(lam[i] * &self.simple_roots[i])
    }

    /// `s_α λ = λ − ⟨λ, α^∨⟩ α`.
    pub fn reflect_root(&self, alpha: &Root, lam: &Weight) -> Weight {
        lam - &(self.pairing(lam, alpha) * &alpha.weight)
    }

    /// `⟨λ, α^∨⟩`.
    pub fn pairing(&self, lam: &Weight, alpha: &Root) -> i64 {
        lam.coords().iter().zip(&alpha.coroot_coords).map(|(l, c)| l * c).sum()
    }

    pub fn is_regular(&self, mu: &Weight) -> bool {
        self.positive_roots.iter().all(|a| self.pairing(mu, a) != 0)
    }

    pub fn apply(&self, w: &WeylElement, lam: &Weight) -> Weight {
        w.word.iter().rev().fold(lam.clone(), |acc, &i| self.reflect(i, &acc))
    }

    /// Number of positive roots `α` with `w α < 0`.
    pub fn inversions(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|a| self.root_by_weight(&self.apply(w, &a.weight)).is_none())
            .count()
    }

    /// Reflect at the first negative coordinate until dominant. Each step
    /// adds a positive multiple of a simple root, so the walk terminates
    /// after at most `#Δ⁺` steps; each step raises the length by one.
    pub fn dominant_conjugate(&self, mu: &Weight) -> Conjugate {
        let mut cur = mu.clone();
        let mut length = 0;
        while let Some(i) = cur.coords().iter().position(|&c| c < 0) {
            cur = self.reflect(i, &cur);
            length += 1;
            assert!(length <= self.positive_roots.len(), "dominance walk failed to terminate");
        }
        if cur.is_strictly_dominant() {
            Conjugate::Regular { length, dominant: cur }
        } else {
            Conjugate::Singular
        }
    }

    /// All Weyl group elements as shortest words, found by breadth-first
    /// search over the orbit of `ρ` (on which `W` acts simply transitively).
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let rho = self.weyl_vector.clone();
        let mut seen: HashMap<Weight, ()> = HashMap::from([(rho.clone(), ())]);
        let mut out = vec![WeylElement::identity()];
        let mut queue = VecDeque::from([(rho, WeylElement::identity())]);
        while let Some((mu, w)) = queue.pop_front() {
            for i in 0..self.rank() {
                let next = self.reflect(i, &mu);
                if seen.contains_key(&next) {
                    continue;
                }
                assert!(seen.len() < WEYL_ORDER_BOUND, "Weyl group too large to enumerate");
                seen.insert(next.clone(), ());
                let mut word = Vec::with_capacity(w.word.len() + 1);
                word.push(i);
                word.extend_from_slice(&w.word);
                let elem = WeylElement { word };
                out.push(elem.clone());
                queue.push_back((next, elem));
            }
        }
        out
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl_group().len()
    }
}
