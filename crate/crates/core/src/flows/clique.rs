use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::coherence::is_clique;
use super::flow::{flow_of_clique, permutation_from_flow};
use super::graph::OrugaGraph;
use super::route::{route_of_prefix, Route};
use super::FlowError;
use crate::combinat::{Face, StirlingPermutation};
use crate::composition::Composition;

/// A set of pairwise coherent routes, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    routes: Vec<Route>,
}

impl Clique {
    /// Checks pairwise coherence.
    pub fn new(s: &Composition, mut routes: Vec<Route>) -> Result<Self, FlowError> {
        routes.sort();
        routes.dedup();
        if !is_clique(s, &routes) {
            return Err(FlowError::NotAClique);
        }
        Ok(Self { routes })
    }

    pub(crate) fn from_sorted(routes: Vec<Route>) -> Self {
        debug_assert!(routes.windows(2).all(|p| p[0] < p[1]));
        Self { routes }
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn len(&self) -> usize {
        self.routes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.routes.is_empty()
    }

    pub fn contains(&self, r: &Route) -> bool {
        self.routes.binary_search(r).is_ok()
    }

    pub fn is_subset_of(&self, other: &Clique) -> bool {
        self.routes.iter().all(|r| other.contains(r))
    }

    pub fn intersection(&self, other: &Clique) -> Clique {
        Clique { routes: self.routes.iter().copied().filter(|r| other.contains(r)).collect() }
    }

    pub fn without(&self, r: &Route) -> Clique {
        Clique { routes: self.routes.iter().copied().filter(|x| x != r).collect() }
    }
}

/// `(route_of_prefix(w[..i]))_{i = 0..=|s|}` in prefix order.
pub fn prefix_routes(w: &StirlingPermutation) -> Vec<Route> {
    let s = w.composition();
    (0..=w.len()).map(|i| route_of_prefix(&s, w.prefix(i))).collect()
}

/// `Δ_w`.
pub fn clique_of_permutation(w: &StirlingPermutation) -> Clique {
    let mut routes = prefix_routes(w);
    routes.sort();
    let before = routes.len();
    routes.dedup();
    debug_assert_eq!(before, routes.len(), "prefix routes are distinct");
    Clique::from_sorted(routes)
}

/// The permutation `w` with `Δ_w = C`, recovered through the flow `Ω(C)`.
pub fn permutation_of_clique(g: &OrugaGraph, c: &Clique) -> Result<StirlingPermutation, FlowError> {
    let s = g.composition();
    if c.len() != s.size() as usize + 1 || !is_clique(s, c.routes()) {
        return Err(FlowError::NotMaximalClique);
    }
    let flow = flow_of_clique(g, c)?;
    let w = permutation_from_flow(g, &flow).map_err(|_| FlowError::NotMaximalClique)?;
    if &clique_of_permutation(&w) != c {
        return Err(FlowError::NotMaximalClique);
    }
    Ok(w)
}

/// `Δ_(w,A)`: `Δ_w` without the routes of prefixes ending at an ascent in `A`.
pub fn face_clique(face: &Face) -> Clique {
    let w = &face.w;
    let s = w.composition();
    let removed: BTreeSet<usize> = face.ascents.iter().map(|&p| w.ascent_position(p).expect("validated")).collect();
    let mut routes: Vec<Route> =
        (0..=w.len()).filter(|i| !removed.contains(i)).map(|i| route_of_prefix(&s, w.prefix(i))).collect();
    routes.sort();
    Clique::from_sorted(routes)
}

/// Contains both extreme routes and, for every source edge other than `e^{n+1}_1`, a
/// route starting with it.
///
/// The argument must be a clique (a face of some `Δ_w`).
pub fn is_interior(s: &Composition, c: &Clique) -> bool {
    let n = s.n();
    if !c.contains(&Route::extreme(n, false)) || !c.contains(&Route::extreme(n, true)) {
        return false;
    }
    let starts: BTreeSet<(usize, u32)> = c.routes().iter().map(|r| (r.k(), r.t())).collect();
    (1..=n).all(|k| (1..s.get(k)).all(|t| starts.contains(&(k, t))))
}

/// Interior cliques of size `|s| - n + 2`: both extremes plus one route per source edge
/// `e^k_t`, `k <= n`. Sorted.
pub fn maximal_interior_cliques(g: &OrugaGraph, perms: &[StirlingPermutation]) -> Vec<Clique> {
    let s = g.composition();
    let n = s.n();
    let mut found = BTreeSet::new();
    for w in perms {
        let delta = clique_of_permutation(w);
        let mut groups: BTreeMap<(usize, u32), Vec<Route>> = BTreeMap::new();
        for r in delta.routes() {
            if r.k() <= n {
                groups.entry((r.k(), r.t())).or_default().push(*r);
            }
        }
        let options: Vec<Vec<Route>> = groups.into_values().collect();
        let mut choice = vec![Route::extreme(n, false), Route::extreme(n, true)];
        choose(&options, 0, &mut choice, &mut |routes| {
            let mut r = routes.to_vec();
            r.sort();
            found.insert(Clique::from_sorted(r));
        });
    }
    found.into_iter().collect()
}

fn choose(options: &[Vec<Route>], i: usize, acc: &mut Vec<Route>, emit: &mut impl FnMut(&[Route])) {
    if i == options.len() {
        emit(acc);
        return;
    }
    for r in &options[i] {
        acc.push(*r);
        choose(options, i + 1, acc, emit);
        acc.pop();
    }
}

/// Dual graph of the triangulation: `w ~ w'` iff `|Δ_w ∩ Δ_w'| = |s|`.
///
/// Returns sorted index pairs `(i, j)`, `i < j`, into `perms`.
pub fn dual_graph(perms: &[StirlingPermutation]) -> Vec<(usize, usize)> {
    let mut by_facet: HashMap<Clique, Vec<usize>> = HashMap::new();
    for (i, w) in perms.iter().enumerate() {
        let delta = clique_of_permutation(w);
        for r in delta.routes() {
            by_facet.entry(delta.without(r)).or_default().push(i);
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for owners in by_facet.values() {
        for (x, &i) in owners.iter().enumerate() {
            for &j in &owners[x + 1..] {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}
