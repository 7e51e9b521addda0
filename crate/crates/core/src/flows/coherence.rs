use std::cmp::Ordering;

use super::route::Route;
use crate::composition::Composition;

/// A maximal common subroute `[v_entry, v_exit]` of two routes, given by levels
/// (`entry_level >= exit_level`; the vertex at level `i` is `v_{n+1-i}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conflict {
    pub entry_level: usize,
    pub exit_level: usize,
}

/// Position of the route's edge into level `i` in the incoming order there.
fn in_key(s: &Composition, r: &Route, level: usize) -> u32 {
    if level == r.k() {
        r.t()
    } else if r.delta(level) {
        s.get(level)
    } else {
        0
    }
}

/// Common subroutes of `p` and `q` where the prefixes and suffixes are ordered differently.
///
/// Both routes visit every level below `min(k_p, k_q)`; common subroutes break where
/// `δ_i` differ.
pub fn conflicts(s: &Composition, p: &Route, q: &Route) -> Vec<Conflict> {
    let m = p.k().min(q.k());
    let mut out = Vec::new();
    let mut hi = m;
    for lo in (1..m).rev() {
        if p.delta(lo) == q.delta(lo) {
            continue;
        }
        // Common subroute [hi, lo + 1]; the exit edges differ.
        let exit = p.delta(lo).cmp(&q.delta(lo));
        let entry = in_key(s, p, hi).cmp(&in_key(s, q, hi));
        if entry != Ordering::Equal && entry != exit {
            out.push(Conflict { entry_level: hi, exit_level: lo + 1 });
        }
        hi = lo;
    }
    // The last common subroute runs into the sink, so it never conflicts.
    out
}

pub fn coherent(s: &Composition, p: &Route, q: &Route) -> bool {
    conflicts(s, p, q).is_empty()
}

/// Whether the routes are pairwise coherent.
pub fn is_clique(s: &Composition, routes: &[Route]) -> bool {
    routes.iter().enumerate().all(|(i, p)| routes[i + 1..].iter().all(|q| coherent(s, p, q)))
}

/// `(P', Q')`: the routes obtained by swapping tails at the start of every conflict.
///
/// `P'` keeps the source edge of `P`. Returns `None` when the routes are coherent.
pub fn resolvents(s: &Composition, p: &Route, q: &Route) -> Option<(Route, Route)> {
    let cs = conflicts(s, p, q);
    if cs.is_empty() {
        return None;
    }
    let mut swapped = false;
    let (mut mp, mut mq) = (p.delta_mask(), q.delta_mask());
    let mut boundaries = cs.iter().map(|c| c.entry_level).peekable();
    for level in (1..p.k().min(q.k())).rev() {
        // Edges e^level leave the vertex at level + 1.
        while boundaries.peek().is_some_and(|&b| b > level) {
            swapped = !swapped;
            boundaries.next();
        }
        if swapped {
            let bit = 1u32 << (level - 1);
            let (bp, bq) = (mp & bit, mq & bit);
            mp = (mp & !bit) | bq;
            mq = (mq & !bit) | bp;
        }
    }
    Some((Route::from_mask(p.k(), p.t(), mp), Route::from_mask(q.k(), q.t(), mq)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_permutations;
    use crate::flows::{prefix_routes, OrugaGraph};

    #[test]
    fn prefix_cliques_are_coherent() {
        for s in [vec![1, 2, 1], vec![2, 2], vec![2, 1, 3]] {
            let s = Composition::new(s).unwrap();
            for w in enumerate_permutations(&s).unwrap() {
                assert!(is_clique(&s, &prefix_routes(&w)), "{w}");
            }
        }
    }

    #[test]
    fn two_part_conflict() {
        // s = (1,1): R(3,1,(1,0)) and R(3,1,(0,1)) meet at v_1 only.
        let s = Composition::new(vec![1, 1]).unwrap();
        let p = Route::from_mask(3, 1, 0b01);
        let q = Route::from_mask(3, 1, 0b10);
        assert_eq!(conflicts(&s, &p, &q), vec![Conflict { entry_level: 2, exit_level: 2 }]);
        let (p2, q2) = resolvents(&s, &p, &q).unwrap();
        assert_eq!((p2.delta_mask(), q2.delta_mask()), (0b00, 0b11));
    }

    #[test]
    fn resolvents_preserve_edges_and_cohere() {
        let s = Composition::new(vec![2, 1, 3, 1]).unwrap();
        let g = OrugaGraph::new(&s).unwrap();
        let routes = g.routes();
        for p in &routes {
            for q in &routes {
                let Some((p2, q2)) = resolvents(&s, p, q) else { continue };
                assert!(coherent(&s, &p2, &q2), "{p} {q}");
                let mut before = [g.route_edges(p), g.route_edges(q)].concat();
                let mut after = [g.route_edges(&p2), g.route_edges(&q2)].concat();
                before.sort_unstable();
                after.sort_unstable();
                assert_eq!(before, after);
            }
        }
    }
}
