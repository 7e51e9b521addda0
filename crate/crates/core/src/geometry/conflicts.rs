use std::fmt;

use crate::composition::Composition;
use crate::flows::{conflicts, resolvents, Conflict, OrugaGraph, Route};

/// How the two routes enter the conflicting subroute at level `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConflictCase {
    /// Both start at level `y` through consecutive source edges.
    AdjacentSources,
    /// `P` arrives through the bump `e^y_0`, `Q` starts with `e^y_1`.
    BumpThenSource,
    /// `P` starts with `e^y_{s_y - 1}`, `Q` arrives through the dip.
    SourceThenDip,
    /// Both arrive from above through the bump and the dip; needs `s_y = 1`.
    BumpThenDip,
}

/// A pair of routes in conflict at exactly one subroute, entering and leaving it
/// through adjacent edges, with `P` entering below `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinimalConflict {
    pub p: Route,
    pub q: Route,
    pub p_resolved: Route,
    pub q_resolved: Route,
    pub at: Conflict,
    pub case: ConflictCase,
}

impl fmt::Display for MinimalConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} and {} (resolved {} and {})", self.p, self.q, self.p_resolved, self.q_resolved)
    }
}

fn in_key(s: &Composition, r: &Route, level: usize) -> u32 {
    if level == r.k() {
        r.t()
    } else if r.delta(level) {
        s.get(level)
    } else {
        0
    }
}

/// Every minimal conflict of `G_s`, ordered by `(P, Q)`.
pub fn minimal_conflicts(g: &OrugaGraph) -> Vec<MinimalConflict> {
    let s = g.composition();
    let routes = g.routes();
    let mut out = Vec::new();
    for (i, a) in routes.iter().enumerate() {
        for b in &routes[i + 1..] {
            let cs = conflicts(s, a, b);
            if cs.len() != 1 {
                continue;
            }
            let at = cs[0];
            let y = at.entry_level;
            let (ka, kb) = (in_key(s, a, y), in_key(s, b, y));
            if ka.abs_diff(kb) != 1 {
                continue;
            }
            let (p, q) = if ka < kb { (*a, *b) } else { (*b, *a) };
            let (p_resolved, q_resolved) = resolvents(s, &p, &q).expect("in conflict");
            let case = match (p.k() == y, q.k() == y) {
                (true, true) => ConflictCase::AdjacentSources,
                (false, true) => ConflictCase::BumpThenSource,
                (true, false) => ConflictCase::SourceThenDip,
                (false, false) => ConflictCase::BumpThenDip,
            };
            out.push(MinimalConflict { p, q, p_resolved, q_resolved, at, case });
        }
    }
    out.sort_by_key(|m| (m.p, m.q));
    out
}
