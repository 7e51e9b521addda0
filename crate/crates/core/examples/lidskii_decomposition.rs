// Both Lidskii expansions of |W_s|, and the Gale-order piece sizes.
//
// cargo run --example lidskii_decomposition -- 1,3,2

use oruga::composition::Composition;
use oruga::enumeration::{gale_piece_sizes, lidskii_sum, lidskii_terms, LidskiiVariant};

pub fn run(s: &Composition) {
    println!("s = {s}, |W_s| = {}", s.count_formula());
    for variant in [LidskiiVariant::Binomial, LidskiiVariant::Multichoose] {
        println!("{variant:?}:");
        for t in lidskii_terms(s, variant) {
            println!("  j = {:?}: {} x {} = {}", t.j, t.coefficient, t.flow_factor, t.value());
        }
        println!("  total {}", lidskii_sum(s, variant));
    }
    if s.is_strict() {
        for p in gale_piece_sizes(s) {
            println!("  j = {:?}: {} pieces of size {}", p.j, p.pieces, p.piece_size);
        }
    }
}

fn main() {
    let s = std::env::args().nth(1).unwrap_or_else(|| "1,3,2".into());
    run(&s.parse().expect("composition like 1,3,2"));
}
