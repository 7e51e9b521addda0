use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::flow::IntegerFlow;
use super::graph::{EdgeKind, OrugaGraph};
use super::FlowError;

/// `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Ways to write `x` as an ordered sum of `parts` non-negative integers.
fn multichoose(parts: usize, x: u64) -> BigUint {
    match parts {
        0 if x == 0 => BigUint::one(),
        0 => BigUint::zero(),
        p => binomial(x + p as u64 - 1, p as u64 - 1),
    }
}

fn check_netflow(g: &OrugaGraph, a: &[i64]) -> Result<(), FlowError> {
    let nv = g.vertices().len();
    if a.len() != nv {
        return Err(FlowError::InvalidFlow(format!("netflow has {} entries for {nv} vertices", a.len())));
    }
    if a.iter().sum::<i64>() != 0 {
        return Err(FlowError::InvalidFlow("netflow does not sum to zero".into()));
    }
    Ok(())
}

/// Number of non-negative integer flows with netflow `a` (aligned with
/// [`OrugaGraph::vertices`]).
///
/// Sweeps `v_0, ..., v_n`; the state is the flow crossing the cut after the current
/// vertex, split into what is still owed by `v_{-1}` and what runs along the bump and
/// dip edges. Parallel edges only contribute a multiplicity.
pub fn count_integer_flows(g: &OrugaGraph, a: &[i64]) -> Result<BigUint, FlowError> {
    check_netflow(g, a)?;
    let offset = g.has_sources() as usize;
    let budget = if g.has_sources() { a[0] } else { 0 };
    if budget < 0 {
        return Ok(BigUint::zero());
    }
    let n = g.n();
    let mut states: BTreeMap<(i64, i64), BigUint> = BTreeMap::from([((budget, 0), BigUint::one())]);
    for j in 0..=n {
        let v = super::graph::Vertex(j as i32);
        let sources = g.incoming(v).iter().filter(|&&e| g.edge(e).kind == EdgeKind::Source).count();
        let parallel = g.outgoing(v).len();
        let mut next: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
        for (&(r, inflow), ways) in &states {
            let max_x = if sources == 0 { 0 } else { r };
            for x in 0..=max_x {
                let out = inflow + x + a[offset + j];
                if out < 0 || (parallel == 0 && out != 0) {
                    continue;
                }
                let w = multichoose(sources, x as u64) * multichoose(parallel, out as u64);
                if w.is_zero() {
                    continue;
                }
                *next.entry((r - x, out)).or_insert_with(BigUint::zero) += ways * w;
            }
        }
        states = next;
    }
    Ok(states.get(&(0, 0)).cloned().unwrap_or_else(BigUint::zero))
}

/// Every non-negative integer flow with netflow `a`, in lexicographic order of values.
pub fn enumerate_integer_flows(g: &OrugaGraph, a: &[i64]) -> Result<Vec<IntegerFlow>, FlowError> {
    check_netflow(g, a)?;
    let mut out = Vec::new();
    let mut values = vec![0i64; g.edges().len()];
    let budget = if g.has_sources() { a[0] } else { 0 };
    if budget >= 0 {
        visit(g, a, 0, budget, 0, &mut values, &mut out);
    }
    out.sort();
    Ok(out)
}

fn visit(g: &OrugaGraph, a: &[i64], j: usize, r: i64, inflow: i64, values: &mut Vec<i64>, out: &mut Vec<IntegerFlow>) {
    let n = g.n();
    if j > n {
        if r == 0 && inflow == 0 {
            out.push(IntegerFlow { values: values.clone() });
        }
        return;
    }
    let v = super::graph::Vertex(j as i32);
    let offset = g.has_sources() as usize;
    let sources: Vec<usize> = g.incoming(v).iter().copied().filter(|&e| g.edge(e).kind == EdgeKind::Source).collect();
    let outs: Vec<usize> = g.outgoing(v).to_vec();
    let max_x = if sources.is_empty() { 0 } else { r };
    for x in 0..=max_x {
        let total = inflow + x + a[offset + j];
        if total < 0 || (outs.is_empty() && total != 0) {
            continue;
        }
        for_each_split(x, &sources, values, &mut |values| {
            for_each_split(total, &outs, values, &mut |values| {
                visit(g, a, j + 1, r - x, if outs.is_empty() { 0 } else { total }, values, out);
            });
        });
    }
}

fn for_each_split(total: i64, edges: &[usize], values: &mut Vec<i64>, f: &mut dyn FnMut(&mut Vec<i64>)) {
    match edges {
        [] => {
            if total == 0 {
                f(values)
            }
        }
        [last] => {
            values[*last] = total;
            f(values);
            values[*last] = 0;
        }
        [first, rest @ ..] => {
            for x in 0..=total {
                values[*first] = x;
                for_each_split(total - x, rest, values, f);
            }
            values[*first] = 0;
        }
    }
}
