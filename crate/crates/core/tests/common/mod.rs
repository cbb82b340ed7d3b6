//! Independent oracles: G2 realized in the plane `x + y + z = 0` of `Z^3`,
//! closed-form string data for the three parabolics, and a naive candidate
//! enumeration. None of this goes through the library's root closure,
//! string algorithm or search.

#![allow(dead_code)]

use std::collections::BTreeMap;

use g2cy::{G2Parabolic, Weight};

pub type V3 = [i64; 3];

fn dot(u: V3, v: V3) -> i64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn add(u: V3, v: V3) -> V3 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

fn scale(c: i64, v: V3) -> V3 {
    [c * v[0], c * v[1], c * v[2]]
}

/// Long simple root `α1` and short simple root `α2`.
pub const ALPHA: [V3; 2] = [[-2, 1, 1], [1, -1, 0]];
/// Fundamental weights: `⟨ω_i, α_j^∨⟩ = δ_ij`.
pub const OMEGA: [V3; 2] = [[-1, -1, 2], [0, -1, 1]];

/// `a ω1 + b ω2` as a vector.
pub fn embed(w: &Weight) -> V3 {
    add(scale(w[0], OMEGA[0]), scale(w[1], OMEGA[1]))
}

/// Back to ω-coordinates via the simple coroots.
pub fn coords(v: V3) -> Weight {
    Weight::new(ALPHA.map(|a| pair(v, a)))
}

/// `⟨v, α^∨⟩ = 2 (v, α) / (α, α)`.
pub fn pair(v: V3, alpha: V3) -> i64 {
    let num = 2 * dot(v, alpha);
    let den = dot(alpha, alpha);
    assert_eq!(num % den, 0, "non-integral pairing");
    num / den
}

fn rho() -> V3 {
    add(OMEGA[0], OMEGA[1])
}

/// The twelve roots: six short `e_i − e_j`, six long `±(2e_i − e_j − e_k)`.
pub fn roots() -> Vec<V3> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut v = [0; 3];
                v[i] = 1;
                v[j] = -1;
                out.push(v);
            }
        }
        let mut long = [-1; 3];
        long[i] = 2;
        out.push(long);
        out.push(scale(-1, long));
    }
    out
}

pub fn positive_roots() -> Vec<V3> {
    roots().into_iter().filter(|&a| dot(a, rho()) > 0).collect()
}

fn reflect(v: V3, alpha: V3) -> V3 {
    add(v, scale(-pair(v, alpha), alpha))
}

/// Weyl group orbit of `v` under all root reflections (closure).
pub fn orbit(v: V3) -> Vec<V3> {
    let mut seen = vec![v];
    let mut k = 0;
    while k < seen.len() {
        for a in roots() {
            let r = reflect(seen[k], a);
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        k += 1;
    }
    seen
}

/// Order of the group generated by the simple reflections, acting on a
/// regular vector.
pub fn weyl_order() -> usize {
    orbit(rho()).len()
}

/// `None` if `μ` is singular; otherwise `(ℓ(w), wμ)` with `wμ` dominant,
/// where `ℓ(w)` counts positive roots negative on `μ`.
pub fn dominant_conjugate(mu: &Weight) -> Option<(usize, Weight)> {
    let v = embed(mu);
    if roots().iter().any(|&a| dot(v, a) == 0) {
        return None;
    }
    let dominant = orbit(v).into_iter().find(|&u| ALPHA.iter().all(|&a| pair(u, a) > 0)).expect("chamber");
    let length = positive_roots().iter().filter(|&&a| dot(v, a) < 0).count();
    Some((length, coords(dominant)))
}

/// Weyl dimension formula over the Euclidean realization.
pub fn weyl_dim(mu: &Weight) -> u64 {
    let shifted = add(embed(mu), rho());
    let (mut num, mut den) = (1i128, 1i128);
    for a in positive_roots() {
        num *= dot(shifted, a) as i128;
        den *= dot(rho(), a) as i128;
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

/// The weights of `V^P_{(a,b)}` in closed form.
pub fn closed_weights(p: G2Parabolic, a: i64, b: i64) -> Vec<Weight> {
    match p {
        G2Parabolic::P1 => (0..=b).map(|j| Weight::new([a + j, b - 2 * j])).collect(),
        G2Parabolic::P2 => (0..=a).map(|j| Weight::new([a - 2 * j, b + 3 * j])).collect(),
        G2Parabolic::B => vec![Weight::new([a, b])],
    }
}

/// `(dim, det)` of `V^P_{(a,b)}` in closed form.
pub fn closed_dim_det(p: G2Parabolic, a: i64, b: i64) -> (u64, Weight) {
    match p {
        G2Parabolic::P1 => ((b + 1) as u64, Weight::new([a * (b + 1) + b * (b + 1) / 2, 0])),
        G2Parabolic::P2 => ((a + 1) as u64, Weight::new([0, (a + 1) * b + 3 * a * (a + 1) / 2])),
        G2Parabolic::B => (1, Weight::new([a, b])),
    }
}

pub fn is_p_dominant(p: G2Parabolic, a: i64, b: i64) -> bool {
    match p {
        G2Parabolic::P1 => b >= 0,
        G2Parabolic::P2 => a >= 0,
        G2Parabolic::B => true,
    }
}

pub fn dim_gp(p: G2Parabolic) -> usize {
    match p {
        G2Parabolic::B => 6,
        _ => 5,
    }
}

pub fn anticanonical(p: G2Parabolic) -> Weight {
    match p {
        G2Parabolic::P1 => Weight::new([3, 0]),
        G2Parabolic::P2 => Weight::new([0, 5]),
        G2Parabolic::B => Weight::new([2, 2]),
    }
}

pub const BRUTE_COORD: i64 = 5;
pub const BRUTE_SIZE: usize = 6;

/// Every multiset of at most [`BRUTE_SIZE`] nonzero dominant weights with
/// coordinates in `0..=BRUTE_COORD` and determinant the anticanonical
/// weight, bucketed by `dim G/P − rank`. Each multiset is sorted.
pub fn brute_force(p: G2Parabolic) -> BTreeMap<usize, Vec<Vec<Weight>>> {
    let mut pool = Vec::new();
    for a in 0..=BRUTE_COORD {
        for b in 0..=BRUTE_COORD {
            if (a, b) != (0, 0) {
                let (dim, det) = closed_dim_det(p, a, b);
                pool.push((Weight::new([a, b]), dim, det));
            }
        }
    }
    let n = dim_gp(p) as u64;
    let target = anticanonical(p);
    let mut out: BTreeMap<usize, Vec<Vec<Weight>>> = BTreeMap::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        pool: &[(Weight, u64, Weight)],
        from: usize,
        stack: &mut Vec<usize>,
        n: u64,
        target: &Weight,
        out: &mut BTreeMap<usize, Vec<Vec<Weight>>>,
    ) {
        if !stack.is_empty() {
            let rank: u64 = stack.iter().map(|&k| pool[k].1).sum();
            let det = stack.iter().fold(Weight::zero(2), |acc, &k| &acc + &pool[k].2);
            if rank <= n && &det == target {
                let mut ws: Vec<Weight> = stack.iter().map(|&k| pool[k].0.clone()).collect();
                ws.sort();
                out.entry((n - rank) as usize).or_default().push(ws);
            }
        }
        if stack.len() == BRUTE_SIZE {
            return;
        }
        for k in from..pool.len() {
            stack.push(k);
            let rank: u64 = stack.iter().map(|&k| pool[k].1).sum();
            if rank <= n {
                go(pool, k, stack, n, target, out);
            }
            stack.pop();
        }
    }
    go(&pool, 0, &mut stack, n, &target, &mut out);
    for v in out.values_mut() {
        v.sort();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
