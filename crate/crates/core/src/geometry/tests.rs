use super::*;
use crate::combinat::{enumerate_permutations, faces, parse_word, HasseDiagram, StirlingPermutation};
use crate::composition::Composition;
use crate::flows::{clique_of_permutation, maximal_interior_cliques, OrugaGraph};

fn comp(v: &[u32]) -> Composition {
    Composition::new(v.to_vec()).unwrap()
}

fn admissible(s: &Composition) -> (OrugaGraph, AdmissibleHeight) {
    let g = OrugaGraph::new(s).unwrap();
    let h = HeightFunction::default_epsilon(&g).into_admissible(&g).unwrap();
    (g, h)
}

#[test]
fn default_epsilon_is_admissible() {
    for s in [vec![1, 2, 1], vec![2, 3, 2, 2], vec![3, 3, 3], vec![1], vec![1, 1]] {
        admissible(&comp(&s));
    }
}

#[test]
fn large_epsilon_fails() {
    let s = comp(&[2, 3, 2, 2]);
    let g = OrugaGraph::new(&s).unwrap();
    let h = HeightFunction::epsilon(&g, q(10)).unwrap();
    assert!(!is_admissible(&g, &h));
}

#[test]
fn polynomials_for_small_case() {
    let (g, h) = admissible(&comp(&[1, 2, 1]));
    let polys = tropical_polynomials(&g, &h);
    let shape: Vec<(usize, u32, usize)> = polys.iter().map(|p| (p.k, p.t, p.terms.len())).collect();
    assert_eq!(shape, vec![(2, 1, 2), (4, 1, 8)]);
}

#[test]
fn realization_is_sound() {
    for s in [vec![1, 2, 1], vec![2, 2], vec![1, 1, 2], vec![2, 1, 1], vec![1, 1, 1, 1], vec![1], vec![3]] {
        let s = comp(&s);
        let (g, h) = admissible(&s);
        let hasse = HasseDiagram::new(&s).unwrap();
        let rc = realize(&h, &hasse, &faces(&s).unwrap()).unwrap();
        rc.check_hyperplane().unwrap();
        rc.check_edges(&default_orientation(s.n())).unwrap();
        rc.check_support(&s).unwrap();
        rc.check_zonotope(&s, h.inner().epsilon_value().unwrap()).unwrap();
        let polys = tropical_polynomials(&g, &h);
        for (w, x) in &rc.vertices {
            region_equalities(&polys, w, x).unwrap();
        }
        let distinct: std::collections::BTreeSet<_> = rc.vertices.values().collect();
        assert_eq!(distinct.len(), rc.vertices.len());
    }
}

#[test]
fn edge_vector_rejects_non_covers() {
    let s = comp(&[1, 2, 1]);
    let (_, h) = admissible(&s);
    let w = |t: &str| StirlingPermutation::from_word(parse_word(t).unwrap()).unwrap();
    assert!(edge_vector(&h, &w("1223"), &w("2123")).is_ok());
    assert!(matches!(edge_vector(&h, &w("1223"), &w("3221")), Err(GeometryError::NotACover(..))));
}

#[test]
fn mixed_cells_tile_the_minkowski_sum() {
    for s in [vec![1, 2, 1], vec![2, 2], vec![2, 1, 3], vec![1, 1, 1, 1]] {
        let s = comp(&s);
        let g = OrugaGraph::new(&s).unwrap();
        let mut total = q(0);
        for w in enumerate_permutations(&s).unwrap() {
            let cell = mixed_cell(&g, &clique_of_permutation(&w));
            assert!(cell.is_fine(), "{w}");
            assert_eq!(cell.dims().iter().sum::<usize>(), s.n());
            total += cell.volume();
        }
        assert_eq!(total, minkowski_volume(&g));
    }
}

#[test]
fn mixed_cell_of_3221() {
    let s = comp(&[1, 2, 1]);
    let g = OrugaGraph::new(&s).unwrap();
    let w = StirlingPermutation::from_word(parse_word("3221").unwrap()).unwrap();
    let cell = mixed_cell(&g, &clique_of_permutation(&w));
    let shape: Vec<(usize, u32, Vec<u32>)> = cell.summands.iter().map(|x| (x.k, x.t, x.deltas.clone())).collect();
    // δ masks with bit i-1 = δ_i: 000, 100, 110, 111 read as (δ_1, δ_2, δ_3).
    assert_eq!(shape, vec![(2, 1, vec![0]), (4, 1, vec![0b000, 0b100, 0b110, 0b111])]);
    assert_eq!(cell.dims(), vec![0, 3]);
    assert_eq!(ambient_summands(&g), vec![(2, 1), (4, 1)]);
}

#[test]
fn interior_cells_for_maximal_faces() {
    let s = comp(&[1, 2, 1]);
    let g = OrugaGraph::new(&s).unwrap();
    let perms = enumerate_permutations(&s).unwrap();
    for c in maximal_interior_cliques(&g, &perms) {
        let cell = mixed_cell(&g, &c);
        assert!(cell.summands.iter().filter(|x| x.k <= s.n()).all(|x| x.deltas.len() == 1));
    }
}
