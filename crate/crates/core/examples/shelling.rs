// Shellings from linear extensions, and h* three ways.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oruga::combinat::{faces, HasseDiagram};
use oruga::composition::Composition;
use oruga::enumeration::{
    eulerian_polynomial, f_polynomial, h_polynomial, h_star_via_ehrhart, random_linear_extension, verify_shelling,
    ShellingReport,
};
use oruga::flows::OrugaGraph;

pub fn run() {
    let s: Composition = "1,2,1".parse().unwrap();
    let hasse = HasseDiagram::new(&s).unwrap();
    let fs = faces(&s).unwrap();
    println!("eulerian {}", eulerian_polynomial(&hasse.nodes));
    println!("f {}  h {}", f_polynomial(&fs), h_polynomial(&fs));
    println!("h* from the Ehrhart DP {}", h_star_via_ehrhart(&OrugaGraph::new(&s).unwrap()).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let order = random_linear_extension(&hasse, &mut rng);
        let words: Vec<String> = order.iter().map(|w| w.to_string()).collect();
        match verify_shelling(&hasse, &order).unwrap() {
            ShellingReport::Shelling { h } => println!("  {} shells with h = {h}", words.join(" ")),
            ShellingReport::Failure { p, q } => println!("  {} fails at {} against {}", words.join(" "), order[q], order[p]),
        }
    }
}

fn main() {
    run();
}
