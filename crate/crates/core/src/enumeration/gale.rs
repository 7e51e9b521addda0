use num_bigint::BigUint;
use num_traits::One;

use super::lidskii::{dominating_compositions, lidskii_flow_factor};
use crate::composition::Composition;

/// The Gale order on `k`-element multisets of `[m]`: sorted vectors compared entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaleOrder {
    pub m: u32,
    pub k: usize,
    /// Lexicographic.
    pub elements: Vec<Vec<u32>>,
    /// Index pairs `(lower, upper)`, sorted.
    pub covers: Vec<(usize, usize)>,
}

pub fn gale_leq(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Covers raise one entry by one, so they are the comparable pairs whose sums differ by one.
pub fn gale_order(m: u32, k: usize) -> GaleOrder {
    let mut elements = Vec::new();
    let mut cur = Vec::with_capacity(k);
    multisets(m, k, 1, &mut cur, &mut elements);
    let sum = |v: &Vec<u32>| v.iter().sum::<u32>();
    let mut covers = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if sum(b) == sum(a) + 1 && gale_leq(a, b) {
                covers.push((i, j));
            }
        }
    }
    GaleOrder { m, k, elements, covers }
}

fn multisets(m: u32, k: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in min..=m {
        cur.push(x);
        multisets(m, k, x, cur, out);
        cur.pop();
    }
}

/// For each `j`, the Lidskii term as `pieces` copies of a product of Gale orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalePieces {
    pub j: Vec<u32>,
    /// The flow factor.
    pub pieces: BigUint,
    /// `|Gale(s_n + 1, j_1)| prod_{i >= 2} |Gale(s_{n+1-i} - 1, j_i)|`.
    pub piece_size: BigUint,
}

/// Sizes of the pieces in the multichoose Lidskii expansion. Strict compositions only.
pub fn gale_piece_sizes(s: &Composition) -> Vec<GalePieces> {
    let n = s.n();
    dominating_compositions(n)
        .into_iter()
        .map(|j| {
            let mut piece_size = BigUint::one();
            for (idx, &ji) in j.iter().enumerate() {
                let part = s.get(n - idx);
                let m = if idx == 0 { part + 1 } else { part - 1 };
                piece_size *= gale_order(m, ji as usize).elements.len();
            }
            let pieces = lidskii_flow_factor(&j);
            GalePieces { j, pieces, piece_size }
        })
        .collect()
}
