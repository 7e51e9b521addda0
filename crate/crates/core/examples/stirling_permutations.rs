// Stirling s-permutations with their inversion multisets and s-decreasing trees.
//
// cargo run --example stirling_permutations -- 1,2,1

use oruga::combinat::{
    enumerate_permutations, inversion_multiset, permutation_from_inversions, permutation_from_tree,
    tree_from_permutation,
};
use oruga::composition::Composition;

pub fn run(s: &Composition) {
    let perms = enumerate_permutations(s).expect("strict composition");
    println!("s = {s}: {} permutations (product formula {})", perms.len(), s.count_formula());
    for w in &perms {
        let inv = inversion_multiset(w);
        let tree = tree_from_permutation(w);
        assert_eq!(&permutation_from_tree(&tree).unwrap(), w);
        assert_eq!(&permutation_from_inversions(s, &inv).unwrap(), w);
        println!("  {w}  inv {inv}  ascents {:?}  descents {:?}", w.ascents(), w.descents());
    }
}

fn main() {
    let s = std::env::args().nth(1).unwrap_or_else(|| "1,2,1".into());
    run(&s.parse().expect("composition like 1,2,1"));
}
