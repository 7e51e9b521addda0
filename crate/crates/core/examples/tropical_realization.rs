// Vertex coordinates of the s-permutahedron from the admissible height h_ε.

use oruga::combinat::{faces, HasseDiagram};
use oruga::composition::Composition;
use oruga::flows::OrugaGraph;
use oruga::geometry::{
    default_orientation, epsilon_bound, minimal_conflicts, realize, region_equalities, tropical_polynomials,
    HeightFunction,
};

pub fn run() {
    let s: Composition = "1,1,1,2".parse().unwrap();
    let g = OrugaGraph::new(&s).unwrap();
    let h = HeightFunction::default_epsilon(&g);
    let eps = h.epsilon_value().unwrap().clone();
    println!("ε = {eps} (bound {}), {} minimal conflicts", epsilon_bound(&s), minimal_conflicts(&g).len());
    let h = h.into_admissible(&g).expect("half the bound is admissible");

    let hasse = HasseDiagram::new(&s).unwrap();
    let rc = realize(&h, &hasse, &faces(&s).unwrap()).unwrap();
    println!("{} vertices, {} edges, {} faces", rc.vertices.len(), rc.edges.len(), rc.faces.len());
    for (w, v) in rc.vertices.iter().take(5) {
        let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("  v({w}) = ({})", v.join(", "));
    }

    rc.check_hyperplane().unwrap();
    rc.check_edges(&default_orientation(s.n())).unwrap();
    rc.check_support(&s).unwrap();
    rc.check_zonotope(&s, &eps).unwrap();
    let polys = tropical_polynomials(&g, &h);
    for w in &hasse.nodes {
        region_equalities(&polys, w, &rc.vertices[w]).unwrap();
    }
    println!("coordinates sum to {}; all checks pass", rc.hyperplane_sum);
}

fn main() {
    run();
}
