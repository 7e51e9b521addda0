use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::height::{q, AdmissibleHeight, Q};
use super::GeometryError;
use crate::combinat::{interval, Face, HasseDiagram, LetterPair, StirlingPermutation};
use crate::composition::Composition;
use crate::flows::{prefix_routes, route_of_prefix, Route};

/// `v(w)_a = sum_t [h(route of the prefix before the t-th a) - h(route of the prefix through it)]`.
pub fn vertex_coordinates(h: &AdmissibleHeight, w: &StirlingPermutation) -> Vec<Q> {
    let heights: Vec<&Q> = prefix_routes(w).iter().map(|r| h.get(r)).collect::<Vec<_>>();
    let mut v = vec![Q::zero(); w.n()];
    for (p, &x) in w.word().iter().enumerate() {
        v[x as usize - 1] += heights[p] - heights[p + 1];
    }
    v
}

/// `h(R(n+1,1,0^n)) - h(R(n+1,1,1^n))`, the coordinate sum of every vertex.
pub fn hyperplane_sum(h: &AdmissibleHeight, n: usize) -> Q {
    h.get(&Route::extreme(n, false)) - h.get(&Route::extreme(n, true))
}

/// `v(w') - v(w) = scalar (e_a - e_c)` for the cover `w' = w` transposed along `(a, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVector {
    pub ascent: LetterPair,
    pub scalar: Q,
}

impl EdgeVector {
    pub fn vector(&self, n: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); n];
        v[self.ascent.0 as usize - 1] = self.scalar.clone();
        v[self.ascent.1 as usize - 1] = -self.scalar.clone();
        v
    }
}

/// `h(u_1 c) + h(u_1 B_a) - h(u_1) - h(u_1 B_a c)` for `w = u_1 B_a c u_2`.
pub fn edge_vector(
    h: &AdmissibleHeight,
    w: &StirlingPermutation,
    w2: &StirlingPermutation,
) -> Result<EdgeVector, GeometryError> {
    let s = w.composition();
    let ascent = w
        .ascents()
        .into_iter()
        .find(|&asc| w.transpose(asc).as_ref() == Ok(w2))
        .ok_or_else(|| GeometryError::NotACover(w.to_string(), w2.to_string()))?;
    let pos = w.ascent_position(ascent).expect("ascent");
    let start = w.word().iter().position(|&x| x == ascent.0).expect("letter occurs");
    let hr = |u: &[u8]| h.get(&route_of_prefix(&s, u)).clone();
    let scalar = hr(w2.prefix(start + 1)) + hr(w.prefix(pos)) - hr(w.prefix(start)) - hr(w.prefix(pos + 1));
    Ok(EdgeVector { ascent, scalar })
}

/// `<δ, x> >= lower` and `<1 - δ, x> <= upper` for a nontrivial `δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFacet {
    pub delta: Vec<bool>,
    pub lower: Q,
    pub upper: Q,
}

impl SupportFacet {
    fn dot(&self, x: &[Q], complement: bool) -> Q {
        x.iter().zip(&self.delta).filter(|(_, &d)| d != complement).fold(Q::zero(), |acc, (v, _)| acc + v)
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.dot(x, false) >= self.lower && self.dot(x, true) <= self.upper
    }

    pub fn is_tight(&self, x: &[Q]) -> bool {
        self.dot(x, false) == self.lower
    }
}

/// One facet per `δ ∈ {0,1}^n` other than the constant vectors, in binary order of
/// `(δ_1, ..., δ_n)`.
pub fn support_facets(h: &AdmissibleHeight, n: usize) -> Vec<SupportFacet> {
    let zero = h.get(&Route::extreme(n, false));
    let one = h.get(&Route::extreme(n, true));
    let mut out = Vec::new();
    for mask in 1..(1u32 << n) - 1 {
        let r = Route::from_mask(n + 1, 1, mask.reverse_bits() >> (32 - n));
        let hd = h.get(&r);
        out.push(SupportFacet { delta: r.delta_vec(), lower: zero - hd, upper: hd - one });
    }
    out
}

/// `w^σ = σ(1)^{s_σ(1)} ... σ(n)^{s_σ(n)}` for every `σ`, keyed by `σ` in lexicographic order.
pub fn support_vertices(s: &Composition) -> Vec<(Vec<u8>, StirlingPermutation)> {
    let n = s.n();
    let mut sigma: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    loop {
        let word: Vec<u8> = sigma.iter().flat_map(|&x| std::iter::repeat_n(x, s.get(x as usize) as usize)).collect();
        out.push((sigma.clone(), StirlingPermutation::new(s, word).expect("block words avoid 121")));
        if !next_permutation(&mut sigma) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = v.windows(2).rposition(|p| p[0] < p[1]) else { return false };
    let j = v.iter().rposition(|&x| x > v[i]).expect("exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedEdge {
    pub from: StirlingPermutation,
    pub to: StirlingPermutation,
    pub ascent: LetterPair,
    pub length: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedFace {
    pub face: Face,
    pub vertices: Vec<StirlingPermutation>,
}

/// The s-permutahedron realized from an admissible height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedComplex {
    pub n: usize,
    pub vertices: BTreeMap<StirlingPermutation, Vec<Q>>,
    pub edges: Vec<RealizedEdge>,
    pub faces: Vec<RealizedFace>,
    pub hyperplane_sum: Q,
    pub support_facets: Vec<SupportFacet>,
}

pub fn realize(h: &AdmissibleHeight, hasse: &HasseDiagram, faces: &[Face]) -> Result<RealizedComplex, GeometryError> {
    let n = hasse.nodes.first().map(|w| w.n()).unwrap_or(0);
    let vertices: BTreeMap<_, _> = hasse.nodes.iter().map(|w| (w.clone(), vertex_coordinates(h, w))).collect();
    let mut edges = Vec::with_capacity(hasse.covers.len());
    for c in &hasse.covers {
        let (from, to) = (&hasse.nodes[c.from], &hasse.nodes[c.to]);
        let e = edge_vector(h, from, to)?;
        edges.push(RealizedEdge { from: from.clone(), to: to.clone(), ascent: e.ascent, length: e.scalar });
    }
    let faces = faces
        .iter()
        .map(|f| RealizedFace { face: f.clone(), vertices: interval(&f.w, &f.top()) })
        .collect();
    Ok(RealizedComplex {
        n,
        vertices,
        edges,
        faces,
        hyperplane_sum: hyperplane_sum(h, n),
        support_facets: support_facets(h, n),
    })
}

/// A failed soundness check with a human readable witness.
pub type CheckResult = Result<(), String>;

impl RealizedComplex {
    /// Every vertex lies on the hyperplane.
    pub fn check_hyperplane(&self) -> CheckResult {
        for (w, v) in &self.vertices {
            let sum = v.iter().fold(Q::zero(), |a, x| a + x);
            if sum != self.hyperplane_sum {
                return Err(format!("coordinates of {w} sum to {sum}"));
            }
        }
        Ok(())
    }

    /// Every edge is `length (e_a - e_c)` with positive length, and increases `<κ, x>`.
    pub fn check_edges(&self, kappa: &[Q]) -> CheckResult {
        for e in &self.edges {
            if !e.length.is_positive() {
                return Err(format!("edge {} -> {} has length {}", e.from, e.to, e.length));
            }
            let diff: Vec<Q> = self.vertices[&e.to].iter().zip(&self.vertices[&e.from]).map(|(a, b)| a - b).collect();
            let expect = EdgeVector { ascent: e.ascent, scalar: e.length.clone() }.vector(self.n);
            if diff != expect {
                return Err(format!("edge {} -> {} is not parallel to e_a - e_c", e.from, e.to));
            }
            let gain = diff.iter().zip(kappa).fold(Q::zero(), |acc, (d, k)| acc + d * k);
            if !gain.is_positive() {
                return Err(format!("edge {} -> {} does not increase the orientation", e.from, e.to));
            }
        }
        Ok(())
    }

    /// The support is cut out by the facets, has `n!` vertices `v(w^σ)`, and each of
    /// them is tight exactly on the facets of its initial segments.
    pub fn check_support(&self, s: &Composition) -> CheckResult {
        let n = self.n;
        if self.support_facets.len() != (1usize << n) - 2 {
            return Err(format!("{} support facets", self.support_facets.len()));
        }
        for (w, v) in &self.vertices {
            if let Some(f) = self.support_facets.iter().find(|f| !f.contains(v)) {
                return Err(format!("{w} violates the facet {:?}", f.delta));
            }
        }
        let corners: Vec<&StirlingPermutation> =
            self.vertices.iter().filter(|(_, v)| self.support_facets.iter().filter(|f| f.is_tight(v)).count() >= n - 1).map(|(w, _)| w).collect();
        let expected = support_vertices(s);
        if corners.len() != expected.len() {
            return Err(format!("{} points tight on n-1 facets, expected {}", corners.len(), expected.len()));
        }
        for (sigma, w) in &expected {
            let v = &self.vertices[w];
            let tight: Vec<Vec<bool>> =
                self.support_facets.iter().filter(|f| f.is_tight(v)).map(|f| f.delta.clone()).collect();
            let mut want: Vec<Vec<bool>> = (1..n)
                .map(|j| (1..=n as u8).map(|a| sigma[..j].contains(&a)).collect())
                .collect();
            want.sort();
            let mut got = tight.clone();
            got.sort();
            if got != want {
                return Err(format!("v({w}) is tight on {got:?}"));
            }
        }
        Ok(())
    }

    /// Between `w^σ` and `w^σ'`, where `σ'` swaps adjacent values `a < c`, the difference
    /// is `2 s_c ε^{c-a} (e_a - e_c)`.
    pub fn check_zonotope(&self, s: &Composition, eps: &Q) -> CheckResult {
        let corners: BTreeMap<Vec<u8>, StirlingPermutation> = support_vertices(s).into_iter().collect();
        for (sigma, w) in &corners {
            for j in 0..sigma.len().saturating_sub(1) {
                let (a, c) = (sigma[j], sigma[j + 1]);
                if a > c {
                    continue;
                }
                let mut tau = sigma.clone();
                tau.swap(j, j + 1);
                let w2 = &corners[&tau];
                let diff: Vec<Q> = self.vertices[w2].iter().zip(&self.vertices[w]).map(|(x, y)| x - y).collect();
                let len = q(2 * s.get(c as usize) as i64) * num_traits::pow(eps.clone(), (c - a) as usize);
                let expect = EdgeVector { ascent: (a, c), scalar: len }.vector(self.n);
                if diff != expect {
                    return Err(format!("support edge {w} -> {w2} is not 2 s_{c} ε^{} (e_{a} - e_{c})", c - a));
                }
            }
        }
        Ok(())
    }
}

/// `κ = (n, n-1, ..., 1)`.
pub fn default_orientation(n: usize) -> Vec<Q> {
    (0..n).map(|i| q((n - i) as i64)).collect()
}
