use std::fmt;

use super::route::Route;
use crate::combinat::InversionMultiset;
use crate::composition::Composition;

/// A linear condition on the inversion multiset of `w` cutting out the permutations
/// whose clique contains a given route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RouteInequality {
    AtLeast { c: usize, a: usize, bound: u32 },
    AtMost { c: usize, a: usize, bound: u32 },
    Zero { c: usize, a: usize },
    Full { c: usize, a: usize, value: u32 },
}

impl RouteInequality {
    pub fn holds(&self, inv: &InversionMultiset) -> bool {
        match *self {
            Self::AtLeast { c, a, bound } => inv.get(c, a) >= bound,
            Self::AtMost { c, a, bound } => inv.get(c, a) <= bound,
            Self::Zero { c, a } => inv.get(c, a) == 0,
            Self::Full { c, a, value } => inv.get(c, a) == value,
        }
    }
}

impl fmt::Display for RouteInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::AtLeast { c, a, bound } => write!(f, "#({c},{a}) >= {bound}"),
            Self::AtMost { c, a, bound } => write!(f, "#({c},{a}) <= {bound}"),
            Self::Zero { c, a } => write!(f, "#({c},{a}) = 0"),
            Self::Full { c, a, value } => write!(f, "#({c},{a}) = {value}"),
        }
    }
}

/// `R(k, t, δ) ∈ Δ_w` iff every returned condition holds for `inv(w)`.
pub fn route_inequalities(s: &Composition, r: &Route) -> Vec<RouteInequality> {
    let (k, t) = (r.k(), r.t());
    let mut out = Vec::new();
    if k <= s.n() {
        for i in 1..k {
            out.push(if r.delta(i) {
                RouteInequality::AtMost { c: k, a: i, bound: t }
            } else {
                RouteInequality::AtLeast { c: k, a: i, bound: t }
            });
        }
    }
    for j in 2..k {
        for i in 1..j {
            match (r.delta(i), r.delta(j)) {
                (true, false) => out.push(RouteInequality::Zero { c: j, a: i }),
                (false, true) => out.push(RouteInequality::Full { c: j, a: i, value: s.get(j) }),
                _ => {}
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_permutations, inversion_multiset};
    use crate::flows::{clique_of_permutation, OrugaGraph};

    #[test]
    fn membership_matches_cliques() {
        for s in [vec![1, 2, 1], vec![2, 2], vec![2, 1, 3], vec![1, 2, 1, 2]] {
            let s = Composition::new(s).unwrap();
            let g = OrugaGraph::new(&s).unwrap();
            let perms = enumerate_permutations(&s).unwrap();
            for w in &perms {
                let inv = inversion_multiset(w);
                let delta = clique_of_permutation(w);
                for r in g.routes() {
                    let sat = route_inequalities(&s, &r).iter().all(|q| q.holds(&inv));
                    assert_eq!(sat, delta.contains(&r), "{w} {r}");
                }
            }
        }
    }

    #[test]
    fn listed_example() {
        let s = Composition::new(vec![1, 2, 1]).unwrap();
        let r = Route::new(&s, 2, 1, &[false]).unwrap();
        let q = route_inequalities(&s, &r);
        assert_eq!(q, vec![RouteInequality::AtLeast { c: 2, a: 1, bound: 1 }]);
        assert_eq!(q[0].to_string(), "#(2,1) >= 1");
        assert!(route_inequalities(&s, &Route::extreme(3, false)).is_empty());
    }
}
