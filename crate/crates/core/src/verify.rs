//! Property suites run by `oruga verify`, one line per check.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinat::{enumerate_permutations, faces, Face, HasseDiagram, StirlingPermutation};
use crate::composition::{Composition, CompositionError};
use crate::enumeration::{
    dominating_compositions, eulerian_polynomial, h_polynomial, h_star_via_ehrhart, lidskii_flow_factor,
    lidskii_flow_factor_dp, lidskii_sum, lidskii_terms, random_linear_extension, verify_shelling,
    LidskiiVariant, ShellingReport,
};
use crate::flows::{
    binomial, clique_of_permutation, dual_graph, face_clique, is_interior, permutation_of_clique, Clique,
    OrugaGraph,
};
use crate::geometry::{
    default_orientation, minimal_conflicts, realize, region_equalities, tropical_polynomials, vertex_coordinates,
    conflict_margin, HeightFunction,
};

/// Largest `|W_s| * 2^{|s|+1}` for which every subset of every maximal clique is scanned.
pub const SUBSET_SCAN_BUDGET: u64 = 5_000_000;
/// Largest number of faces for the quadratic containment check.
pub const FACE_PAIR_BUDGET: usize = 3_000;
/// Largest polytope dimension for the Ehrhart interpolation.
pub const EHRHART_MAX_DIM: usize = 24;
/// Random linear extensions checked by the shelling suite.
pub const SHELLING_SAMPLES: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Admissibility,
    Duality,
    FacePoset,
    HStar,
    Lidskii,
    Support,
    Shelling,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Admissibility,
        Suite::Duality,
        Suite::FacePoset,
        Suite::HStar,
        Suite::Lidskii,
        Suite::Support,
        Suite::Shelling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Admissibility => "admissibility",
            Suite::Duality => "duality",
            Suite::FacePoset => "faceposet",
            Suite::HStar => "hstar",
            Suite::Lidskii => "lidskii",
            Suite::Support => "support",
            Suite::Shelling => "shelling",
        }
    }

    pub fn allows_weak(self) -> bool {
        self == Suite::Lidskii
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(x: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|s| s.name() == x).ok_or_else(|| format!("unknown suite {x:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub outcome: Outcome,
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, detail) = match &self.outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => ("FAIL", d),
            Outcome::Skip(d) => ("SKIP", d),
        };
        write!(f, "{tag} {}/{}: {detail}", self.suite, self.name)
    }
}

fn check(suite: Suite, name: &'static str, r: Result<String, String>) -> Check {
    let outcome = match r {
        Ok(d) => Outcome::Pass(d),
        Err(d) => Outcome::Fail(d),
    };
    Check { suite, name, outcome }
}

fn skip(suite: Suite, name: &'static str, why: String) -> Check {
    Check { suite, name, outcome: Outcome::Skip(why) }
}

/// Shared data, built once per composition.
struct Context {
    s: Composition,
    g: OrugaGraph,
    hasse: HasseDiagram,
    faces: Vec<Face>,
}

impl Context {
    fn new(s: &Composition) -> Result<Self, String> {
        let g = OrugaGraph::new(s).map_err(|e| e.to_string())?;
        let hasse = HasseDiagram::new(s).map_err(|e| e.to_string())?;
        let faces = faces(s).map_err(|e| e.to_string())?;
        Ok(Self { s: s.clone(), g, hasse, faces })
    }

    fn perms(&self) -> &[StirlingPermutation] {
        &self.hasse.nodes
    }
}

/// Runs the suites in order. Every suite but `lidskii` needs a strict composition.
pub fn run_suites(s: &Composition, suites: &[Suite]) -> Result<Vec<Check>, CompositionError> {
    if suites.iter().any(|x| !x.allows_weak()) {
        s.require_strict()?;
    }
    let mut ctx: Option<Context> = None;
    let mut out = Vec::new();
    for &suite in suites {
        if suite == Suite::Lidskii {
            out.extend(lidskii(s));
            continue;
        }
        if ctx.is_none() {
            match Context::new(s) {
                Ok(c) => ctx = Some(c),
                Err(e) => {
                    out.push(check(suite, "setup", Err(e)));
                    continue;
                }
            }
        }
        let c = ctx.as_ref().expect("built above");
        out.extend(match suite {
            Suite::Admissibility => admissibility(c),
            Suite::Duality => duality(c),
            Suite::FacePoset => face_poset(c),
            Suite::HStar => h_star(c),
            Suite::Support => support(c),
            Suite::Shelling => shelling(c),
            Suite::Lidskii => unreachable!(),
        });
    }
    Ok(out)
}

fn admissibility(c: &Context) -> Vec<Check> {
    let h = HeightFunction::default_epsilon(&c.g);
    let eps = h.epsilon_value().expect("epsilon height").clone();
    let mc = minimal_conflicts(&c.g);
    let r = match mc.iter().map(|m| (m, conflict_margin(&h, m))).min_by(|a, b| a.1.cmp(&b.1)) {
        None => Ok(format!("no minimal conflicts at ε = {eps}")),
        Some((_, margin)) if margin.is_positive() => {
            Ok(format!("{} minimal conflicts at ε = {eps}, smallest margin {margin}", mc.len()))
        }
        Some((m, margin)) => Err(format!("{m} has margin {margin} at ε = {eps}")),
    };
    vec![check(Suite::Admissibility, "minimal-conflicts", r)]
}

fn duality(c: &Context) -> Vec<Check> {
    let perms = c.perms();
    let mut bij = Ok(format!("Δ_w maps back to w for {} permutations", perms.len()));
    for w in perms {
        match permutation_of_clique(&c.g, &clique_of_permutation(w)) {
            Ok(back) if &back == w => {}
            Ok(back) => {
                bij = Err(format!("Δ_{w} maps back to {back}"));
                break;
            }
            Err(e) => {
                bij = Err(format!("Δ_{w}: {e}"));
                break;
            }
        }
    }
    let dual: BTreeSet<(usize, usize)> = dual_graph(perms).into_iter().collect();
    let hasse: BTreeSet<(usize, usize)> = c.hasse.undirected_edges().into_iter().collect();
    let edges = if dual == hasse {
        Ok(format!("{} edges", dual.len()))
    } else {
        let word = |(i, j): &(usize, usize)| format!("{} - {}", perms[*i], perms[*j]);
        match dual.symmetric_difference(&hasse).next() {
            Some(e) if dual.contains(e) => Err(format!("dual edge {} is not a cover", word(e))),
            Some(e) => Err(format!("cover {} is not a dual edge", word(e))),
            None => unreachable!(),
        }
    };
    vec![check(Suite::Duality, "omega-bijection", bij), check(Suite::Duality, "dual-equals-hasse", edges)]
}

fn face_poset(c: &Context) -> Vec<Check> {
    let suite = Suite::FacePoset;
    let cliques: Vec<Clique> = c.faces.iter().map(face_clique).collect();
    let mut out = Vec::new();

    let distinct: BTreeSet<&Clique> = cliques.iter().collect();
    let r = if distinct.len() != cliques.len() {
        Err("two faces share a clique".to_string())
    } else if let Some(i) = cliques.iter().position(|k| !is_interior(&c.s, k)) {
        Err(format!("Δ of {} is not interior", c.faces[i]))
    } else {
        Ok(format!("{} faces give distinct interior simplices", c.faces.len()))
    };
    out.push(check(suite, "faces-to-interior", r));

    let expected: u64 = c.perms().iter().map(|w| 1u64 << w.ascents().len()).sum();
    let r = if expected == c.faces.len() as u64 {
        Ok(format!("{expected} faces"))
    } else {
        Err(format!("{} faces, sum of 2^asc is {expected}", c.faces.len()))
    };
    out.push(check(suite, "face-count", r));

    let width = c.s.size() as u64 + 1;
    let cost = (c.perms().len() as u64).saturating_mul(1u64.checked_shl(width as u32).unwrap_or(u64::MAX));
    if width >= 63 || cost > SUBSET_SCAN_BUDGET {
        out.push(skip(suite, "interior-count", format!("subset scan of size {cost} exceeds {SUBSET_SCAN_BUDGET}")));
    } else {
        let mut interior: BTreeSet<Clique> = BTreeSet::new();
        for w in c.perms() {
            let d = clique_of_permutation(w);
            let routes = d.routes();
            for mask in 1u64..1 << routes.len() {
                let sub = (0..routes.len()).filter(|i| mask >> i & 1 == 1).map(|i| routes[i]).collect();
                let k = Clique::new(&c.s, sub).expect("subsets of cliques are cliques");
                if is_interior(&c.s, &k) {
                    interior.insert(k);
                }
            }
        }
        let r = if interior.len() == c.faces.len() && cliques.iter().all(|k| interior.contains(k)) {
            Ok(format!("{} interior simplices", interior.len()))
        } else {
            Err(format!("{} interior simplices, {} faces", interior.len(), c.faces.len()))
        };
        out.push(check(suite, "interior-count", r));
    }

    if c.faces.len() > FACE_PAIR_BUDGET {
        out.push(skip(suite, "order-isomorphism", format!("{} faces exceed {FACE_PAIR_BUDGET}", c.faces.len())));
    } else {
        let mut r = Ok(format!("{} pairs", c.faces.len() * c.faces.len()));
        'outer: for (f, kf) in c.faces.iter().zip(&cliques) {
            for (e, ke) in c.faces.iter().zip(&cliques) {
                if f.is_subface_of(e) != ke.is_subset_of(kf) {
                    r = Err(format!("{f} ≤ {e} is {} but reverse inclusion is {}", f.is_subface_of(e), ke.is_subset_of(kf)));
                    break 'outer;
                }
            }
        }
        out.push(check(suite, "order-isomorphism", r));
    }
    out
}

fn h_star(c: &Context) -> Vec<Check> {
    let suite = Suite::HStar;
    let euler = eulerian_polynomial(c.perms());
    let h = h_polynomial(&c.faces);
    let mut out = vec![check(
        suite,
        "h-equals-eulerian",
        if h == euler { Ok(format!("{euler}")) } else { Err(format!("h = {h}, eulerian = {euler}")) },
    )];
    if c.g.dim() > EHRHART_MAX_DIM {
        out.push(skip(suite, "ehrhart", format!("dimension {} exceeds {EHRHART_MAX_DIM}", c.g.dim())));
        return out;
    }
    let r = match h_star_via_ehrhart(&c.g) {
        Ok(hs) if hs == euler => Ok(format!("{hs}")),
        Ok(hs) => Err(format!("h* = {hs}, eulerian = {euler}")),
        Err(e) => Err(e.to_string()),
    };
    out.push(check(suite, "ehrhart", r));
    out
}

fn catalan(m: u64) -> BigUint {
    binomial(2 * m, m) / BigUint::from(m + 1)
}

fn lidskii(s: &Composition) -> Vec<Check> {
    let suite = Suite::Lidskii;
    let count = s.count_formula();
    let mut out = Vec::new();
    for (name, variant) in [("binomial", LidskiiVariant::Binomial), ("multichoose", LidskiiVariant::Multichoose)] {
        let v = lidskii_sum(s, variant);
        let r = if v == count.clone().into() {
            let parts: Vec<String> = lidskii_terms(s, variant).iter().map(|t| t.value().to_string()).collect();
            Ok(format!("{} = {count}", parts.join(" + ")))
        } else {
            Err(format!("sum is {v}, count is {count}"))
        };
        out.push(check(suite, name, r));
    }
    let n = s.n();
    let js = dominating_compositions(n);
    let cat = catalan(n as u64 - 1);
    out.push(check(
        suite,
        "term-count",
        if BigUint::from(js.len()) == cat { Ok(format!("{cat} terms")) } else { Err(format!("{} terms, Catalan {cat}", js.len())) },
    ));
    let mut r = Ok(format!("{} flow factors", js.len()));
    for j in &js {
        match lidskii_flow_factor_dp(j) {
            Ok(dp) if dp == lidskii_flow_factor(j) => {}
            Ok(dp) => {
                r = Err(format!("j = {j:?}: closed form {}, DP {dp}", lidskii_flow_factor(j)));
                break;
            }
            Err(e) => {
                r = Err(format!("j = {j:?}: {e}"));
                break;
            }
        }
    }
    out.push(check(suite, "flow-factors", r));
    out
}

fn support(c: &Context) -> Vec<Check> {
    let suite = Suite::Support;
    let h = HeightFunction::default_epsilon(&c.g);
    let eps = h.epsilon_value().expect("epsilon height").clone();
    let h = match h.into_admissible(&c.g) {
        Ok(h) => h,
        Err(e) => return vec![check(suite, "realize", Err(e.to_string()))],
    };
    let rc = match realize(&h, &c.hasse, &c.faces) {
        Ok(rc) => rc,
        Err(e) => return vec![check(suite, "realize", Err(e.to_string()))],
    };
    let n = c.s.n();
    let polys = tropical_polynomials(&c.g, &h);
    let mut regions = Ok(format!("{} vertices", c.perms().len()));
    for w in c.perms() {
        if let Err(e) = region_equalities(&polys, w, &vertex_coordinates(&h, w)) {
            regions = Err(e);
            break;
        }
    }
    let ok = |r: Result<(), String>, d: String| r.map(|_| d);
    vec![
        check(suite, "region-equalities", regions),
        check(suite, "edges", ok(rc.check_edges(&default_orientation(n)), format!("{} edges", rc.edges.len()))),
        check(suite, "hyperplane", ok(rc.check_hyperplane(), format!("sum {}", rc.hyperplane_sum))),
        check(suite, "support", ok(rc.check_support(&c.s), format!("{} facets", rc.support_facets.len()))),
        check(suite, "zonotope", ok(rc.check_zonotope(&c.s, &eps), format!("ε = {eps}"))),
    ]
}

fn shelling(c: &Context) -> Vec<Check> {
    let suite = Suite::Shelling;
    let euler = eulerian_polynomial(c.perms());
    let mut r = Ok(format!("{SHELLING_SAMPLES} random linear extensions, h = {euler}"));
    for seed in 0..SHELLING_SAMPLES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = random_linear_extension(&c.hasse, &mut rng);
        match verify_shelling(&c.hasse, &order) {
            Ok(ShellingReport::Shelling { h }) if h == euler => {}
            Ok(ShellingReport::Shelling { h }) => {
                r = Err(format!("seed {seed}: restriction h-vector {h}, eulerian {euler}"));
                break;
            }
            Ok(ShellingReport::Failure { p, q }) => {
                r = Err(format!("seed {seed}: Δ_{} meets the earlier Δ_{} outside a shared facet", order[q], order[p]));
                break;
            }
            Err(e) => {
                r = Err(format!("seed {seed}: {e}"));
                break;
            }
        }
    }
    vec![check(suite, "random-extensions", r)]
}

/// `|Δ_w ∩ Δ_w'|` for covers, which should all equal `|s|`.
pub fn cover_intersections(hasse: &HasseDiagram) -> BTreeMap<usize, usize> {
    let cliques: HashMap<&StirlingPermutation, Clique> =
        hasse.nodes.iter().map(|w| (w, clique_of_permutation(w))).collect();
    let mut out = BTreeMap::new();
    for c in &hasse.covers {
        let k = cliques[&hasse.nodes[c.from]].intersection(&cliques[&hasse.nodes[c.to]]).len();
        *out.entry(k).or_default() += 1;
    }
    out
}

/// All permutations of `s` if `|W_s|` is within `budget`.
pub fn enumerate_within_budget(s: &Composition, budget: u64) -> Result<Vec<StirlingPermutation>, String> {
    let count = s.count_formula();
    if count > BigUint::from(budget) {
        return Err(format!("{count} permutations exceed the budget of {budget}"));
    }
    enumerate_permutations(s).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for v in [vec![1, 2, 1], vec![1, 1], vec![2, 2]] {
            let s = Composition::new(v).unwrap();
            let checks = run_suites(&s, &Suite::ALL).unwrap();
            for c in &checks {
                assert!(!c.failed(), "{c}");
            }
            assert!(checks.len() >= Suite::ALL.len());
        }
    }

    #[test]
    fn weak_only_for_lidskii() {
        let s = Composition::weak(vec![1, 0, 1]).unwrap();
        assert!(run_suites(&s, &[Suite::Lidskii]).unwrap().iter().all(|c| !c.failed()));
        assert!(run_suites(&s, &[Suite::Duality]).is_err());
    }

    #[test]
    fn covers_share_all_but_one_route() {
        let s = Composition::new(vec![1, 2, 1]).unwrap();
        let h = HasseDiagram::new(&s).unwrap();
        let m = cover_intersections(&h);
        assert_eq!(m.keys().copied().collect::<Vec<_>>(), vec![s.size() as usize]);
    }
}
