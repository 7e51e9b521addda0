use std::collections::BTreeMap;

use num_traits::{One, Signed};

use super::height::{q, Q};
use super::linalg::{determinant, rank};
use crate::flows::{Clique, OrugaGraph};

/// The summand of a mixed cell contributed by the routes through one source edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub k: usize,
    pub t: u32,
    /// `δ` bitmasks of the routes, in route order.
    pub deltas: Vec<u32>,
}

impl Summand {
    /// Each route as the indicator of its bump edges: `x_i = 1 - δ_i` for `i < k`, zero
    /// otherwise, a vertex of the cube `□_{k-1}` in `R^n`.
    pub fn points(&self, n: usize) -> Vec<Vec<i64>> {
        self.deltas
            .iter()
            .map(|&m| (1..=n).map(|i| if i < self.k { 1 - (m >> (i - 1) & 1) as i64 } else { 0 }).collect())
            .collect()
    }

    fn differences(&self, n: usize) -> Vec<Vec<Q>> {
        let pts = self.points(n);
        pts[1..].iter().map(|p| p.iter().zip(&pts[0]).map(|(a, b)| q(a - b)).collect()).collect()
    }

    pub fn dim(&self, n: usize) -> usize {
        rank(self.differences(n))
    }
}

/// A cell of the fine mixed subdivision of `□_n + sum_k (s_k - 1) □_{k-1}` read off a
/// clique by grouping its routes by source edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCell {
    pub n: usize,
    pub summands: Vec<Summand>,
}

impl MixedCell {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|x| x.dim(self.n)).collect()
    }

    /// Fine cells are sums of affinely independent simplices spanning `R^n` together.
    pub fn is_fine(&self) -> bool {
        let n = self.n;
        let simplices = self.summands.iter().all(|x| x.dim(n) + 1 == x.deltas.len());
        let all: Vec<Vec<Q>> = self.summands.iter().flat_map(|x| x.differences(n)).collect();
        simplices && all.len() == n && rank(all) == n
    }

    /// Euclidean volume `|det(edge vectors)| / prod_j dim_j!` of a fine cell.
    pub fn volume(&self) -> Q {
        let n = self.n;
        let rows: Vec<Vec<Q>> = self.summands.iter().flat_map(|x| x.differences(n)).collect();
        if rows.len() != n {
            return q(0);
        }
        let mut denom = Q::one();
        for d in self.dims() {
            for i in 2..=d {
                denom *= q(i as i64);
            }
        }
        determinant(rows).abs() / denom
    }
}

pub fn mixed_cell(g: &OrugaGraph, c: &Clique) -> MixedCell {
    let mut groups: BTreeMap<(usize, u32), Vec<u32>> = BTreeMap::new();
    for r in c.routes() {
        groups.entry((r.k(), r.t())).or_default().push(r.delta_mask());
    }
    let summands = groups.into_iter().map(|((k, t), deltas)| Summand { k, t, deltas }).collect();
    MixedCell { n: g.n(), summands }
}

/// `(k, t)` of every cube summand `□_{k-1}` of the Minkowski sum, one per source edge.
pub fn ambient_summands(g: &OrugaGraph) -> Vec<(usize, u32)> {
    let s = g.composition();
    (1..=s.n() + 1).flat_map(|k| (1..s.get(k)).map(move |t| (k, t))).collect()
}

/// Volume of `□_n + sum_k (s_k - 1) □_{k-1}`: a box with side `1 + sum_{k>i} (s_k - 1)`
/// in direction `i`.
pub fn minkowski_volume(g: &OrugaGraph) -> Q {
    let s = g.composition();
    let n = s.n();
    (1..=n).fold(Q::one(), |acc, i| acc * q(1 + (i + 1..=n).map(|k| s.get(k) as i64 - 1).sum::<i64>()))
}
