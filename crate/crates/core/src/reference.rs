//! Published reference data for G2: the tangent decompositions of `g/p`,
//! the four classification tables, and the printed invariants of the two
//! Calabi-Yau threefolds with non-split bundles.

use crate::parabolic::G2Parabolic::{self, B, P1, P2};
use crate::weight::Weight;

fn w(a: i64, b: i64) -> Weight {
    Weight::new([a, b])
}

/// Irreducible summands of `g/p`, by highest weight.
pub fn tangent_decomposition(p: G2Parabolic) -> Vec<Weight> {
    match p {
        P1 => vec![w(-1, 3), w(1, 0)],
        P2 => vec![w(1, -1), w(1, 0), w(0, 1)],
        B => vec![w(2, -3), w(1, 0), w(1, -1), w(0, 1), w(-1, 3), w(-1, 2)],
    }
}

/// One printed table row: parabolic and summand highest weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceRow {
    pub number: usize,
    pub parabolic: G2Parabolic,
    pub summands: Vec<Weight>,
}

/// A printed classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceTable {
    pub number: usize,
    pub dim_x: usize,
    pub caption: &'static str,
    pub rows: Vec<ReferenceRow>,
}

fn table(number: usize, dim_x: usize, caption: &'static str, rows: &[(G2Parabolic, &[(i64, i64)])]) -> ReferenceTable {
    ReferenceTable {
        number,
        dim_x,
        caption,
        rows: rows
            .iter()
            .enumerate()
            .map(|(k, (p, s))| ReferenceRow {
                number: k + 1,
                parabolic: *p,
                summands: s.iter().map(|&(a, b)| w(a, b)).collect(),
            })
            .collect(),
    }
}

/// Tables 1-4, keyed by table number.
pub fn reference_table(number: usize) -> Option<ReferenceTable> {
    let t = match number {
        1 => table(1, 5, "Complete intersection Calabi-Yau 5-folds", &[(B, &[(2, 2)])]),
        2 => table(
            2,
            4,
            "Complete intersection Calabi-Yau 4-folds",
            &[
                (P1, &[(3, 0)]),
                (P2, &[(0, 5)]),
                (B, &[(0, 1), (2, 1)]),
                (B, &[(1, 1), (1, 1)]),
                (B, &[(0, 2), (2, 0)]),
            ],
        ),
        3 => table(
            3,
            3,
            "Complete intersection Calabi-Yau 3-folds",
            &[
                (P1, &[(1, 1)]),
                (P1, &[(1, 0), (2, 0)]),
                (P2, &[(1, 1)]),
                (P2, &[(0, 1), (0, 4)]),
                (P2, &[(0, 2), (0, 3)]),
                (B, &[(0, 1), (0, 1), (2, 0)]),
                (B, &[(0, 1), (1, 0), (1, 1)]),
                (B, &[(0, 2), (1, 0), (1, 0)]),
            ],
        ),
        4 => table(
            4,
            2,
            "Complete intersection K3 surfaces",
            &[
                (P1, &[(0, 2)]),
                (P1, &[(0, 1), (2, 0)]),
                (P1, &[(1, 0), (1, 0), (1, 0)]),
                (P2, &[(1, 0), (0, 2)]),
                (P2, &[(0, 1), (0, 1), (0, 3)]),
                (P2, &[(0, 1), (0, 2), (0, 2)]),
                (B, &[(0, 1), (0, 1), (1, 0), (1, 0)]),
            ],
        ),
        _ => return None,
    };
    Some(t)
}

/// The table listing complete intersections of dimension `dim_x`.
pub fn reference_table_for_dim(dim_x: usize) -> Option<ReferenceTable> {
    (1..=4).filter_map(reference_table).find(|t| t.dim_x == dim_x)
}

/// Printed invariants of a threefold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceInvariants {
    pub parabolic: G2Parabolic,
    pub summands: Vec<Weight>,
    pub degree: i64,
    pub c2h: i64,
    pub h11: u64,
    pub h12: u64,
}

/// Published invariants of the two non-split threefolds.
pub fn reference_invariants() -> Vec<ReferenceInvariants> {
    vec![
        ReferenceInvariants { parabolic: P1, summands: vec![w(1, 1)], degree: 42, c2h: 84, h11: 1, h12: 50 },
        ReferenceInvariants { parabolic: P2, summands: vec![w(1, 1)], degree: 14, c2h: 50, h11: 1, h12: 50 },
    ]
}
