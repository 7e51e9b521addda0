use std::collections::BTreeSet;

use super::*;
use crate::combinat::{
    enumerate_permutations, faces, parse_word, tree_from_permutation, HasseDiagram, StirlingPermutation,
};
use crate::composition::Composition;

fn comp(v: &[u32]) -> Composition {
    Composition::new(v.to_vec()).unwrap()
}

#[test]
fn worked_bump_flows() {
    let s = comp(&[1, 1, 2, 1, 3, 1, 2]);
    let g = OrugaGraph::new(&s).unwrap();
    let w = StirlingPermutation::from_word(parse_word("33725455716").unwrap()).unwrap();
    let f = flow_of_clique(&g, &clique_of_permutation(&w)).unwrap();
    let bumps: Vec<i64> = (1..=6).map(|i| f.values[g.bump(i)]).collect();
    assert_eq!(bumps, vec![9, 3, 0, 2, 1, 2]);
    assert_eq!(permutation_from_flow(&g, &f).unwrap(), w);
    assert_eq!(f, flow_of_permutation(&g, &w));
}

#[test]
fn omega_is_a_bijection() {
    for s in [vec![1, 2, 1], vec![2, 2], vec![2, 1, 3], vec![1, 1, 1, 1], vec![3, 1, 2]] {
        let s = comp(&s);
        let g = OrugaGraph::new(&s).unwrap();
        let perms = enumerate_permutations(&s).unwrap();
        let mut images = BTreeSet::new();
        for w in &perms {
            let c = clique_of_permutation(w);
            assert_eq!(c.len(), s.size() as usize + 1);
            assert!(c.contains(&Route::extreme(s.n(), false)) && c.contains(&Route::extreme(s.n(), true)));
            let f = flow_of_clique(&g, &c).unwrap();
            f.check(&g, &g.d_netflow()).unwrap();
            assert_eq!(source_total(&g, &f), 0);
            assert_eq!(permutation_of_clique(&g, &c).unwrap(), *w);
            images.insert(f);
        }
        let all: BTreeSet<_> = enumerate_integer_flows(&g, &g.d_netflow()).unwrap().into_iter().collect();
        assert_eq!(images, all);
    }
}

#[test]
fn tree_insertion_matches_word_insertion() {
    let s = comp(&[2, 1, 2, 1]);
    let g = OrugaGraph::new(&s).unwrap();
    for f in enumerate_integer_flows(&g, &g.d_netflow()).unwrap() {
        let w = permutation_from_flow(&g, &f).unwrap();
        assert_eq!(tree_from_flow(&g, &f).unwrap(), tree_from_permutation(&w));
    }
}

#[test]
fn weak_trees_from_flows() {
    let s = Composition::weak(vec![1, 0, 1]).unwrap();
    let g = OrugaGraph::path(&s);
    let flows = enumerate_integer_flows(&g, &g.d_netflow()).unwrap();
    assert_eq!(flows.len(), 4);
    let trees: std::collections::HashSet<_> = flows.iter().map(|f| tree_from_flow(&g, f).unwrap()).collect();
    assert_eq!(trees.len(), 4);
    assert!(permutation_from_flow(&g, &flows[0]).is_err());
}

#[test]
fn non_maximal_clique_rejected() {
    let s = comp(&[1, 2, 1]);
    let g = OrugaGraph::new(&s).unwrap();
    let w = enumerate_permutations(&s).unwrap().remove(3);
    let c = clique_of_permutation(&w);
    let smaller = c.without(&c.routes()[0]);
    assert_eq!(permutation_of_clique(&g, &smaller), Err(FlowError::NotMaximalClique));
}

#[test]
fn face_cliques_are_interior_and_distinct() {
    for s in [vec![1, 2, 1], vec![2, 2], vec![1, 1, 2]] {
        let s = comp(&s);
        let fs = faces(&s).unwrap();
        let cliques: BTreeSet<Clique> = fs.iter().map(face_clique).collect();
        assert_eq!(cliques.len(), fs.len());
        for f in &fs {
            let c = face_clique(f);
            assert!(is_interior(&s, &c), "{f}");
            assert_eq!(c.len(), s.size() as usize + 1 - f.dim());
        }
    }
}

#[test]
fn maximal_interior_cliques_are_top_faces() {
    for s in [vec![1, 2, 1], vec![2, 2], vec![2, 1, 2], vec![1, 1, 1]] {
        let s = comp(&s);
        let g = OrugaGraph::new(&s).unwrap();
        let perms = enumerate_permutations(&s).unwrap();
        let found: BTreeSet<Clique> = maximal_interior_cliques(&g, &perms).into_iter().collect();
        let expected: BTreeSet<Clique> =
            faces(&s).unwrap().iter().filter(|f| f.dim() == s.n() - 1).map(face_clique).collect();
        assert_eq!(found, expected);
        for c in &found {
            assert_eq!(c.len(), (s.size() as usize + 2) - s.n());
        }
    }
}

#[test]
fn dual_graph_is_hasse() {
    for s in [vec![1, 2, 1], vec![2, 2], vec![3, 1, 2], vec![1, 1, 1, 1]] {
        let h = HasseDiagram::new(&comp(&s)).unwrap();
        assert_eq!(dual_graph(&h.nodes), h.undirected_edges());
    }
}
