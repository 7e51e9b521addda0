// Integer flows on the oruga graph via the Ω bijection and s-tree insertion.
//
// cargo run --example flow_counting -- 2,1,1,2

use oruga::combinat::{enumerate_permutations, tree_from_permutation};
use oruga::composition::Composition;
use oruga::flows::{count_integer_flows, flow_of_permutation, permutation_from_flow, tree_from_flow, OrugaGraph};

pub fn run(s: &Composition) {
    let g = OrugaGraph::new(s).unwrap();
    let d = g.d_netflow();
    let count = count_integer_flows(&g, &d).unwrap();
    println!("s = {s}, netflow {d:?}: {count} integer flows, {} permutations", s.count_formula());
    for w in enumerate_permutations(s).unwrap().iter().take(6) {
        let f = flow_of_permutation(&g, w);
        assert_eq!(&permutation_from_flow(&g, &f).unwrap(), w);
        assert_eq!(tree_from_flow(&g, &f).unwrap(), tree_from_permutation(w));
        println!("  {w}: bump flows {:?}", (1..=s.n()).map(|i| f.values[g.bump(i)]).collect::<Vec<_>>());
    }
}

fn main() {
    let s = std::env::args().nth(1).unwrap_or_else(|| "2,1,1,2".into());
    run(&s.parse().expect("composition like 2,1,1,2"));
}
