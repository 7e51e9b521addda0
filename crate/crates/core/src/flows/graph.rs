use std::fmt;

use super::route::Route;
use super::FlowError;
use crate::composition::Composition;

/// Vertex `v_j` for `j` in `-1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub i32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// `e^i_0`.
    Bump,
    /// `e^i_t`, `1 <= t <= s_i - 1`, leaving `v_{-1}`.
    Source,
    /// `e^i_{s_i}`.
    Dip,
}

/// Edge `e^i_j` entering the vertex at level `i`, that is `v_{n+1-i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub level: usize,
    pub index: u32,
    pub kind: EdgeKind,
    pub tail: Vertex,
    pub head: Vertex,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{}_{}", self.level, self.index)
    }
}

/// The s-oruga graph `G_s`, or the path part `oru(s)` without `v_{-1}` and source edges.
///
/// Levels: the vertex `v_{n+1-i}` sits at level `i`, so the sink `v_n` is level 1 and
/// `v_0` is level `n + 1`.
#[derive(Debug, Clone)]
pub struct OrugaGraph {
    s: Composition,
    with_sources: bool,
    edges: Vec<Edge>,
    /// Indexed by `j + 1` for `v_j`; edge ids in framing order.
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl OrugaGraph {
    /// `G_s` with its framing. Requires a strict composition.
    pub fn new(s: &Composition) -> Result<Self, FlowError> {
        s.require_strict()?;
        Ok(Self::build(s, true))
    }

    /// `oru(s)`: vertices `v_0..v_n` joined by bump and dip edges. Weak compositions allowed.
    pub fn path(s: &Composition) -> Self {
        Self::build(s, false)
    }

    fn build(s: &Composition, with_sources: bool) -> Self {
        let n = s.n();
        let at = |level: usize| Vertex((n + 1 - level) as i32);
        let mut edges = Vec::new();
        for i in 1..=n + 1 {
            let si = s.get(i);
            if i <= n {
                edges.push(Edge { level: i, index: 0, kind: EdgeKind::Bump, tail: at(i + 1), head: at(i) });
            }
            if with_sources {
                for t in 1..si {
                    edges.push(Edge { level: i, index: t, kind: EdgeKind::Source, tail: Vertex(-1), head: at(i) });
                }
            }
            if i <= n {
                edges.push(Edge { level: i, index: si, kind: EdgeKind::Dip, tail: at(i + 1), head: at(i) });
            }
        }
        let mut incoming = vec![Vec::new(); n + 2];
        let mut outgoing = vec![Vec::new(); n + 2];
        for (id, e) in edges.iter().enumerate() {
            incoming[(e.head.0 + 1) as usize].push(id);
            outgoing[(e.tail.0 + 1) as usize].push(id);
        }
        // Incoming edges are already in e^i_0 < e^i_1 < ... < e^i_{s_i} order. Outgoing edges of
        // v_{-1} carry no framing; the rest are bump before dip.
        Self { s: s.clone(), with_sources, edges, incoming, outgoing }
    }

    pub fn composition(&self) -> &Composition {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn has_sources(&self) -> bool {
        self.with_sources
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let lo = if self.with_sources { -1 } else { 0 };
        (lo..=self.n() as i32).map(Vertex).collect()
    }

    pub fn vertex_at_level(&self, level: usize) -> Vertex {
        Vertex((self.n() + 1 - level) as i32)
    }

    pub fn level_of(&self, v: Vertex) -> usize {
        (self.n() as i32 + 1 - v.0) as usize
    }

    /// Neither `v_{-1}` nor the sink `v_n`.
    pub fn is_inner(&self, v: Vertex) -> bool {
        v.0 >= 0 && (v.0 as usize) < self.n()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn incoming(&self, v: Vertex) -> &[usize] {
        &self.incoming[(v.0 + 1) as usize]
    }

    pub fn outgoing(&self, v: Vertex) -> &[usize] {
        &self.outgoing[(v.0 + 1) as usize]
    }

    fn find(&self, level: usize, kind: EdgeKind, index: u32) -> usize {
        self.incoming(self.vertex_at_level(level))
            .iter()
            .copied()
            .find(|&id| self.edges[id].kind == kind && (kind != EdgeKind::Source || self.edges[id].index == index))
            .unwrap_or_else(|| panic!("no edge of kind {kind:?} at level {level}"))
    }

    pub fn bump(&self, i: usize) -> usize {
        self.find(i, EdgeKind::Bump, 0)
    }

    pub fn dip(&self, i: usize) -> usize {
        self.find(i, EdgeKind::Dip, 0)
    }

    pub fn source(&self, k: usize, t: u32) -> usize {
        self.find(k, EdgeKind::Source, t)
    }

    /// `d = (0, 0, s_n, ..., s_2, -(s_2 + ... + s_n))`, aligned with [`Self::vertices`].
    pub fn d_netflow(&self) -> Vec<i64> {
        let n = self.n();
        let mut d: Vec<i64> = Vec::new();
        if self.with_sources {
            d.push(0);
        }
        d.push(0);
        for j in 1..n {
            d.push(self.s.get(n + 1 - j) as i64);
        }
        d.push(-(self.s.tail_sum(1) as i64));
        d
    }

    /// `(1, 0, ..., 0, -1)` scaled by `t`, aligned with [`Self::vertices`].
    pub fn unit_netflow(&self, t: i64) -> Vec<i64> {
        let mut a = vec![0; self.vertices().len()];
        a[0] = t;
        *a.last_mut().unwrap() -= t;
        a
    }

    /// Dimension of the flow polytope, `|E| - |V| + 1`.
    pub fn dim(&self) -> usize {
        self.edges.len() + 1 - self.vertices().len()
    }

    /// Every route, in canonical order.
    pub fn routes(&self) -> Vec<Route> {
        assert!(self.with_sources, "routes start at v_-1");
        let n = self.n();
        let mut out = Vec::new();
        for k in 1..=n + 1 {
            for t in 1..self.s.get(k) {
                for delta in 0..1u32 << (k - 1) {
                    out.push(Route::from_mask(k, t, delta));
                }
            }
        }
        out.sort();
        out
    }

    /// Edge ids of a route from `v_{-1}` to `v_n`.
    pub fn route_edges(&self, r: &Route) -> Vec<usize> {
        let mut out = vec![self.source(r.k(), r.t())];
        for i in (1..r.k()).rev() {
            out.push(if r.delta(i) { self.dip(i) } else { self.bump(i) });
        }
        out
    }

    /// Whether `r` is a route of this graph.
    pub fn contains_route(&self, r: &Route) -> bool {
        self.with_sources && r.k() <= self.n() + 1 && r.t() >= 1 && r.t() < self.s.get(r.k())
    }
}
