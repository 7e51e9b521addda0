//! Slow reference implementations used to cross-check the fast paths.
//!
//! Compiled for tests and under the `oracle` feature only. Each function follows the
//! defining property directly and avoids the shortcuts taken by the main code.

use std::collections::{BTreeSet, HashMap};

use crate::combinat::{
    inversion_multiset, leq, permutation_from_inversions, Letter, LetterPair, StirlingPermutation,
};
use crate::composition::Composition;
use crate::flows::{clique_of_permutation, Clique, OrugaGraph, Route, Vertex};
use crate::geometry::{HeightFunction, Q};

/// Distinct rearrangements of `1^{s_1} ... n^{s_n}` with no `i ... j ... i`, `j > i`,
/// in lexicographic order.
pub fn stirling_permutations(s: &Composition) -> Vec<Vec<Letter>> {
    let mut word: Vec<Letter> =
        (1..=s.n()).flat_map(|i| std::iter::repeat_n(i as Letter, s.get(i) as usize)).collect();
    let mut out = Vec::new();
    loop {
        let bad = (0..word.len()).any(|i| {
            (i + 1..word.len()).any(|j| (j + 1..word.len()).any(|k| word[i] == word[k] && word[j] > word[i]))
        });
        if !bad {
            out.push(word.clone());
        }
        let Some(i) = word.windows(2).rposition(|p| p[0] < p[1]) else { return out };
        let j = word.iter().rposition(|&x| x > word[i]).expect("exists");
        word.swap(i, j);
        word[i + 1..].reverse();
    }
}

/// `w + A` as the smallest transitive multiset containing `inv(w)` raised by one on each
/// pair of `A`, found by fixpoint iteration, then realized.
pub fn add_ascents_closure(w: &StirlingPermutation, ascents: &[LetterPair]) -> StirlingPermutation {
    let s = w.composition();
    let mut inv = inversion_multiset(w);
    for &(a, c) in ascents {
        let (a, c) = (a as usize, c as usize);
        inv.set(c, a, inv.get(c, a) + 1);
    }
    let n = s.n();
    loop {
        let mut changed = false;
        for c in 3..=n {
            for b in 2..c {
                for a in 1..b {
                    if inv.get(b, a) > 0 && inv.get(c, a) < inv.get(c, b) {
                        inv.set(c, a, inv.get(c, b));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    permutation_from_inversions(&s, &inv).expect("closure is realizable")
}

/// The greatest common lower bound, by scanning every element.
pub fn meet_by_search(
    w1: &StirlingPermutation,
    w2: &StirlingPermutation,
    all: &[StirlingPermutation],
) -> Option<StirlingPermutation> {
    let lower: Vec<&StirlingPermutation> = all.iter().filter(|z| leq(z, w1) && leq(z, w2)).collect();
    lower.iter().find(|m| lower.iter().all(|z| leq(z, m))).map(|m| (*m).clone())
}

/// A route as its vertex and edge sequences.
struct Path {
    vertices: Vec<Vertex>,
    edges: Vec<usize>,
}

fn path(g: &OrugaGraph, r: &Route) -> Path {
    let edges = g.route_edges(r);
    let mut vertices = vec![g.edge(edges[0]).tail];
    vertices.extend(edges.iter().map(|&e| g.edge(e).head));
    Path { vertices, edges }
}

fn rank(list: &[usize], e: usize) -> usize {
    list.iter().position(|&x| x == e).expect("edge at vertex")
}

/// Maximal common subroutes between inner vertices where the prefix order and the
/// suffix order disagree, as `(first vertex, last vertex)`. Uses only the framing.
pub fn generic_conflicts(g: &OrugaGraph, p: &Route, q: &Route) -> Vec<(Vertex, Vertex)> {
    let (pp, qq) = (path(g, p), path(g, q));
    let pos = |x: &Path, v: Vertex| x.vertices.iter().position(|&u| u == v);
    let common: Vec<Vertex> =
        pp.vertices.iter().copied().filter(|&v| g.is_inner(v) && pos(&qq, v).is_some()).collect();
    // Group into runs joined by shared edges.
    let mut runs: Vec<Vec<Vertex>> = Vec::new();
    for &v in &common {
        let joined = runs.last().and_then(|run| run.last()).is_some_and(|&u| {
            let (i, j) = (pos(&pp, u).unwrap(), pos(&qq, u).unwrap());
            pp.edges.get(i) == qq.edges.get(j) && pp.vertices.get(i + 1) == Some(&v)
        });
        if joined {
            runs.last_mut().unwrap().push(v);
        } else {
            runs.push(vec![v]);
        }
    }
    let mut out = Vec::new();
    for run in runs {
        let (x, y) = (run[0], *run.last().unwrap());
        let (px, qx) = (pos(&pp, x).unwrap(), pos(&qq, x).unwrap());
        let (py, qy) = (pos(&pp, y).unwrap(), pos(&qq, y).unwrap());
        // Walk back until the prefixes split.
        let mut before = None;
        let (mut i, mut j) = (px, qx);
        while i > 0 && j > 0 {
            let (ep, eq) = (pp.edges[i - 1], qq.edges[j - 1]);
            if ep != eq {
                let at = g.edge(ep).head;
                before = Some(rank(g.incoming(at), ep).cmp(&rank(g.incoming(at), eq)));
                break;
            }
            i -= 1;
            j -= 1;
        }
        // Walk forward until the suffixes split.
        let mut after = None;
        let (mut i, mut j) = (py, qy);
        while i < pp.edges.len() && j < qq.edges.len() {
            let (ep, eq) = (pp.edges[i], qq.edges[j]);
            if ep != eq {
                let at = g.edge(ep).tail;
                after = Some(rank(g.outgoing(at), ep).cmp(&rank(g.outgoing(at), eq)));
                break;
            }
            i += 1;
            j += 1;
        }
        if let (Some(b), Some(a)) = (before, after) {
            if a != b {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn generic_coherent(g: &OrugaGraph, p: &Route, q: &Route) -> bool {
    generic_conflicts(g, p, q).is_empty()
}

fn route_by_edges(g: &OrugaGraph) -> HashMap<Vec<usize>, Route> {
    g.routes().into_iter().map(|r| (g.route_edges(&r), r)).collect()
}

/// `P x_1 Q x_2 P ...` and `Q x_1 P x_2 Q ...` on explicit edge lists.
pub fn generic_resolvents(g: &OrugaGraph, p: &Route, q: &Route) -> Option<(Route, Route)> {
    let cs = generic_conflicts(g, p, q);
    if cs.is_empty() {
        return None;
    }
    let (pp, qq) = (path(g, p), path(g, q));
    let cut = |x: &Path, v: Vertex| x.vertices.iter().position(|&u| u == v).unwrap();
    let mut a: Vec<usize> = Vec::new();
    let mut b: Vec<usize> = Vec::new();
    let (mut from_p, mut from_q) = (0usize, 0usize);
    let mut swapped = false;
    for &(x, _) in &cs {
        let (ip, iq) = (cut(&pp, x), cut(&qq, x));
        let (src_a, src_b) = if swapped { (&qq, &pp) } else { (&pp, &qq) };
        let (sa, ea, sb, eb) = if swapped { (from_q, iq, from_p, ip) } else { (from_p, ip, from_q, iq) };
        a.extend_from_slice(&src_a.edges[sa..ea]);
        b.extend_from_slice(&src_b.edges[sb..eb]);
        from_p = ip;
        from_q = iq;
        swapped = !swapped;
    }
    let (rest_a, rest_b) = if swapped { (&qq.edges[from_q..], &pp.edges[from_p..]) } else { (&pp.edges[from_p..], &qq.edges[from_q..]) };
    a.extend_from_slice(rest_a);
    b.extend_from_slice(rest_b);
    let table = route_by_edges(g);
    Some((table[&a], table[&b]))
}

/// Pairs in conflict at exactly one subroute with adjacent entering edges and adjacent
/// exiting edges, as unordered pairs.
pub fn generic_minimal_conflicts(g: &OrugaGraph) -> BTreeSet<(Route, Route)> {
    let routes = g.routes();
    let mut out = BTreeSet::new();
    for (i, p) in routes.iter().enumerate() {
        for q in &routes[i + 1..] {
            let cs = generic_conflicts(g, p, q);
            if cs.len() != 1 {
                continue;
            }
            let (x, y) = cs[0];
            let (pp, qq) = (path(g, p), path(g, q));
            let ip = pp.vertices.iter().position(|&u| u == x).unwrap();
            let iq = qq.vertices.iter().position(|&u| u == x).unwrap();
            let (ep, eq) = (pp.edges[ip - 1], qq.edges[iq - 1]);
            let in_adj = rank(g.incoming(x), ep).abs_diff(rank(g.incoming(x), eq)) == 1;
            let jp = pp.vertices.iter().position(|&u| u == y).unwrap();
            let jq = qq.vertices.iter().position(|&u| u == y).unwrap();
            let (fp, fq) = (pp.edges[jp], qq.edges[jq]);
            let out_adj = rank(g.outgoing(y), fp).abs_diff(rank(g.outgoing(y), fq)) == 1;
            if in_adj && out_adj {
                out.insert((*p, *q));
            }
        }
    }
    out
}

/// `h(P) + h(Q) > h(P') + h(Q')` over every non-coherent pair, not only minimal conflicts.
pub fn all_pairs_admissible(g: &OrugaGraph, h: &HeightFunction) -> Result<(), (Route, Route, Q)> {
    let routes = g.routes();
    for (i, p) in routes.iter().enumerate() {
        for q in &routes[i + 1..] {
            if let Some((p2, q2)) = generic_resolvents(g, p, q) {
                let margin = h.get(p) + h.get(q) - h.get(&p2) - h.get(&q2);
                if margin <= Q::from_integer(0.into()) {
                    return Err((*p, *q, margin));
                }
            }
        }
    }
    Ok(())
}

/// Facets `Δ_w \ R` lying in exactly one maximal simplex.
pub fn boundary_facets(perms: &[StirlingPermutation]) -> BTreeSet<Clique> {
    let mut count: HashMap<Clique, usize> = HashMap::new();
    for w in perms {
        let d = clique_of_permutation(w);
        for r in d.routes() {
            *count.entry(d.without(r)).or_default() += 1;
        }
    }
    count.into_iter().filter(|(_, c)| *c == 1).map(|(f, _)| f).collect()
}

/// Every face of every maximal simplex that lies in no boundary facet.
pub fn interior_simplices(perms: &[StirlingPermutation]) -> BTreeSet<Clique> {
    let boundary = boundary_facets(perms);
    let mut out = BTreeSet::new();
    for w in perms {
        let d = clique_of_permutation(w);
        let routes = d.routes();
        for mask in 1u64..1 << routes.len() {
            let sub: Vec<Route> = (0..routes.len()).filter(|i| mask >> i & 1 == 1).map(|i| routes[i]).collect();
            let c = Clique::new(&w.composition(), sub).expect("faces of a clique are cliques");
            if !boundary.iter().any(|f| c.is_subset_of(f)) {
                out.insert(c);
            }
        }
    }
    out
}
