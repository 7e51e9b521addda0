// Maximal cliques of coherent routes in the framed oruga graph.

use oruga::combinat::{faces, HasseDiagram};
use oruga::composition::Composition;
use oruga::flows::{
    clique_of_permutation, dual_graph, face_clique, is_interior, maximal_interior_cliques, permutation_of_clique,
    OrugaGraph,
};

pub fn run() {
    let s: Composition = "1,2,1".parse().unwrap();
    let g = OrugaGraph::new(&s).unwrap();
    println!("G_s has {} edges and {} routes; the flow polytope has dimension {}", g.edges().len(), g.routes().len(), g.dim());

    let h = HasseDiagram::new(&s).unwrap();
    for w in &h.nodes {
        let d = clique_of_permutation(w);
        let keys: Vec<String> = d.routes().iter().map(|r| r.key()).collect();
        assert_eq!(&permutation_of_clique(&g, &d).unwrap(), w);
        println!("  Δ_{w} = {{{}}}", keys.join(", "));
    }

    let dual = dual_graph(&h.nodes);
    let mut hasse = h.undirected_edges();
    hasse.sort();
    println!("dual graph has {} edges, matches the Hasse diagram: {}", dual.len(), dual == hasse);

    let fs = faces(&s).unwrap();
    let interior = fs.iter().filter(|f| is_interior(&s, &face_clique(f))).count();
    println!("{interior} of {} face cliques are interior", fs.len());
    println!("{} maximal interior cliques", maximal_interior_cliques(&g, &h.nodes).len());
}

fn main() {
    run();
}
