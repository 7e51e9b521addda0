use std::collections::HashMap;

use rand::Rng;

use super::polynomial::IntPolynomial;
use super::EnumerationError;
use crate::combinat::{HasseDiagram, StirlingPermutation};
use crate::flows::{clique_of_permutation, Clique};

/// Outcome of checking the shelling condition along an order of the maximal simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShellingReport {
    /// Holds; the h-polynomial read off the restriction sets.
    Shelling { h: IntPolynomial },
    /// No `r < q` works for the pair `(p, q)` (positions in the order).
    Failure { p: usize, q: usize },
}

/// Checks that `Δ_{order[0]}, Δ_{order[1]}, ...` is a shelling: for `p < q` some `r < q`
/// has `Δ_r ∩ Δ_q` a facet of `Δ_q` containing `Δ_p ∩ Δ_q`.
///
/// `order` must be a linear extension of the s-weak order.
pub fn verify_shelling(hasse: &HasseDiagram, order: &[StirlingPermutation]) -> Result<ShellingReport, EnumerationError> {
    check_linear_extension(hasse, order)?;
    let cliques: Vec<Clique> = order.iter().map(clique_of_permutation).collect();
    let mut h = IntPolynomial::default();
    for q in 0..cliques.len() {
        let dq = &cliques[q];
        let facets: Vec<Clique> = (0..q)
            .map(|r| cliques[r].intersection(dq))
            .filter(|x| x.len() + 1 == dq.len())
            .collect();
        for p in 0..q {
            let meet = cliques[p].intersection(dq);
            if !facets.iter().any(|f| meet.is_subset_of(f)) {
                return Ok(ShellingReport::Failure { p, q });
            }
        }
        let restriction = dq.routes().iter().filter(|v| facets.iter().any(|f| !f.contains(v))).count();
        h.add_monomial(restriction);
    }
    Ok(ShellingReport::Shelling { h })
}

fn check_linear_extension(hasse: &HasseDiagram, order: &[StirlingPermutation]) -> Result<(), EnumerationError> {
    let pos: HashMap<&StirlingPermutation, usize> = order.iter().enumerate().map(|(i, w)| (w, i)).collect();
    if order.len() != hasse.nodes.len() || pos.len() != order.len() || hasse.nodes.iter().any(|w| !pos.contains_key(w)) {
        return Err(EnumerationError::NotLinearExtension("order is not a permutation of W_s".into()));
    }
    for c in &hasse.covers {
        let (a, b) = (&hasse.nodes[c.from], &hasse.nodes[c.to]);
        if pos[a] > pos[b] {
            return Err(EnumerationError::NotLinearExtension(format!("{b} comes before {a}")));
        }
    }
    Ok(())
}

/// A linear extension drawn by repeatedly picking a uniformly random minimal element.
pub fn random_linear_extension(hasse: &HasseDiagram, rng: &mut impl Rng) -> Vec<StirlingPermutation> {
    let n = hasse.nodes.len();
    let mut indegree = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for c in &hasse.covers {
        indegree[c.to] += 1;
        succ[c.from].push(c.to);
    }
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while !ready.is_empty() {
        let i = ready.swap_remove(rng.gen_range(0..ready.len()));
        out.push(hasse.nodes[i].clone());
        for &j in &succ[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
        ready.sort_unstable();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use rand::SeedableRng;

    #[test]
    fn lexicographic_by_length_shells() {
        let s = Composition::new(vec![1, 2, 1]).unwrap();
        let hasse = HasseDiagram::new(&s).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let order = random_linear_extension(&hasse, &mut rng);
        assert_eq!(
            verify_shelling(&hasse, &order).unwrap(),
            ShellingReport::Shelling { h: IntPolynomial::from_i64(&[1, 5, 2]) }
        );
        let mut reversed = order.clone();
        reversed.reverse();
        assert!(verify_shelling(&hasse, &reversed).is_err());
    }
}
