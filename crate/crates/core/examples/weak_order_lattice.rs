// Covers and meets in the s-weak order. Adding ascents reaches the top of a face.

use oruga::combinat::{add_ascents, bottom, faces, meet, parse_word, top, HasseDiagram, StirlingPermutation};
use oruga::composition::Composition;

pub fn run() {
    let s: Composition = "1,2,1".parse().unwrap();
    let h = HasseDiagram::new(&s).unwrap();
    println!("{} elements from {} to {}, {} covers", h.nodes.len(), bottom(&s), top(&s), h.covers.len());
    for c in &h.covers {
        println!("  {} -> {} along {:?}", h.nodes[c.from], h.nodes[c.to], c.ascent);
    }

    let (a, b) = (&h.nodes[2], &h.nodes[5]);
    println!("meet({a}, {b}) = {}", meet(a, b).unwrap());

    let fs = faces(&s).unwrap();
    let mut by_dim = [0usize; 3];
    for f in &fs {
        by_dim[f.dim()] += 1;
    }
    println!("{} faces by dimension: {by_dim:?}", fs.len());

    // Adding several ascents at once may force further inversions.
    let w = StirlingPermutation::from_word(parse_word("33725455716").unwrap()).unwrap();
    let asc = [(2, 5), (5, 7), (1, 6)];
    println!("{w} + {asc:?} = {}", add_ascents(&w, &asc).unwrap());
}

fn main() {
    run();
}
