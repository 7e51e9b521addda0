// Maximal cliques as fine mixed cells of a Minkowski sum of cube faces.

use num_traits::Zero;
use oruga::combinat::enumerate_permutations;
use oruga::composition::Composition;
use oruga::flows::{clique_of_permutation, OrugaGraph};
use oruga::geometry::{ambient_summands, minkowski_volume, mixed_cell, Q};

pub fn run() {
    let s: Composition = "3,2,2,1".parse().unwrap();
    let g = OrugaGraph::new(&s).unwrap();
    println!("summands (k, t): {:?}", ambient_summands(&g));
    let mut total = Q::zero();
    for w in enumerate_permutations(&s).unwrap().iter().take(4) {
        let cell = mixed_cell(&g, &clique_of_permutation(w));
        println!("  {w}: summand dimensions {:?}, volume {}", cell.dims(), cell.volume());
    }
    for w in enumerate_permutations(&s).unwrap() {
        let cell = mixed_cell(&g, &clique_of_permutation(&w));
        assert!(cell.is_fine());
        total += cell.volume();
    }
    println!("sum of cell volumes {total}, Minkowski sum volume {}", minkowski_volume(&g));
}

fn main() {
    run();
}
