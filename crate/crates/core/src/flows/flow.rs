use std::collections::BTreeSet;

use super::clique::Clique;
use super::graph::{EdgeKind, OrugaGraph};
use super::FlowError;
use crate::combinat::{inversion_multiset, SDecreasingTree, StirlingPermutation};

/// Integer values on the edges of an oruga graph, aligned with [`OrugaGraph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerFlow {
    pub values: Vec<i64>,
}

impl IntegerFlow {
    /// `outflow - inflow` at every vertex, aligned with [`OrugaGraph::vertices`].
    pub fn netflow(&self, g: &OrugaGraph) -> Vec<i64> {
        g.vertices()
            .into_iter()
            .map(|v| {
                let out: i64 = g.outgoing(v).iter().map(|&e| self.values[e]).sum();
                let inn: i64 = g.incoming(v).iter().map(|&e| self.values[e]).sum();
                out - inn
            })
            .collect()
    }

    pub fn check(&self, g: &OrugaGraph, netflow: &[i64]) -> Result<(), FlowError> {
        if self.values.len() != g.edges().len() {
            return Err(FlowError::InvalidFlow(format!(
                "{} values for {} edges",
                self.values.len(),
                g.edges().len()
            )));
        }
        if let Some(e) = self.values.iter().position(|&x| x < 0) {
            return Err(FlowError::InvalidFlow(format!("negative value on {}", g.edge(e))));
        }
        let actual = self.netflow(g);
        if actual != netflow {
            return Err(FlowError::InvalidFlow(format!("netflow {actual:?}, expected {netflow:?}")));
        }
        Ok(())
    }
}

/// `Ω(C)`: the flow `n_C(e) - 1`, where `n_C(e)` counts the distinct prefixes `P v`
/// (`P` in `C`, `v` the head of `e`) ending with `e`.
pub fn flow_of_clique(g: &OrugaGraph, c: &Clique) -> Result<IntegerFlow, FlowError> {
    let mut prefixes: BTreeSet<(usize, usize, u32, u32)> = BTreeSet::new();
    for r in c.routes() {
        if !g.contains_route(r) {
            return Err(FlowError::InvalidRoute(format!("{r} is not a route of the graph")));
        }
        for level in 1..=r.k() {
            // The prefix ending at `level` is fixed by the source edge and δ_level..δ_{k-1}.
            let tail = r.delta_mask() >> (level - 1);
            prefixes.insert((level, r.k(), r.t(), tail));
        }
    }
    let mut counts = vec![0i64; g.edges().len()];
    for &(level, k, t, tail) in &prefixes {
        let e = if level == k {
            g.source(k, t)
        } else if tail & 1 == 1 {
            g.dip(level)
        } else {
            g.bump(level)
        };
        counts[e] += 1;
    }
    if let Some(e) = counts.iter().position(|&x| x == 0) {
        return Err(FlowError::InvalidFlow(format!("edge {} is used by no route of the clique", g.edge(e))));
    }
    Ok(IntegerFlow { values: counts.into_iter().map(|x| x - 1).collect() })
}

/// The d-flow with `f(e^i_0) = #{letters > i before the i-block}`.
pub fn flow_of_permutation(g: &OrugaGraph, w: &StirlingPermutation) -> IntegerFlow {
    let s = g.composition();
    let inv = inversion_multiset(w);
    let mut values = vec![0i64; g.edges().len()];
    for i in 1..=s.n() {
        let bump = if i < s.n() { inv.letters_above_before(i) } else { 0 } as i64;
        values[g.bump(i)] = bump;
        values[g.dip(i)] = s.tail_sum(i) as i64 - bump;
    }
    IntegerFlow { values }
}

fn bump_positions(g: &OrugaGraph, f: &IntegerFlow) -> Result<Vec<u32>, FlowError> {
    f.check(g, &g.d_netflow())?;
    let n = g.n();
    let mut positions = vec![0u32; n + 1];
    for (i, p) in positions.iter_mut().enumerate().take(n).skip(1) {
        *p = f.values[g.bump(i)] as u32;
    }
    Ok(positions)
}

/// Insertion algorithm: starting from `n^{s_n}`, insert `(n-i)^{s_{n-i}}` after
/// `f(e^{n-i}_0)` letters.
pub fn permutation_from_flow(g: &OrugaGraph, f: &IntegerFlow) -> Result<StirlingPermutation, FlowError> {
    let positions = bump_positions(g, f)?;
    Ok(StirlingPermutation::from_insertion_positions(g.composition(), &positions)?)
}

/// Tree version of the insertion algorithm: node `n - i` replaces leaf number
/// `f(e^{n-i}_0)` in left-to-right order. Works on `oru(s)` for weak `s`.
pub fn tree_from_flow(g: &OrugaGraph, f: &IntegerFlow) -> Result<SDecreasingTree, FlowError> {
    let positions = bump_positions(g, f)?;
    let n = g.n();
    let mut t = SDecreasingTree::root_only(g.composition());
    for i in (1..n).rev() {
        t.attach(i, positions[i] as usize)?;
    }
    Ok(t)
}

/// Sum of a flow over the source edges.
pub fn source_total(g: &OrugaGraph, f: &IntegerFlow) -> i64 {
    g.edges().iter().zip(&f.values).filter(|(e, _)| e.kind == EdgeKind::Source).map(|(_, v)| v).sum()
}
