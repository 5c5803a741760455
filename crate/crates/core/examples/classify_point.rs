//! Classifies random configurations of the unit strip by the chain of
//! symbols whose open sets contain them, and builds a point back from a chain.
//!
//! cargo run --example classify_point -- 4 2

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use diskstrip::geometry::random_point;
use diskstrip::{chain_witness, classify_point, tau, u_alpha_contains, Chain};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(4);
    let w = args.next().unwrap_or(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    for _ in 0..5 {
        let p = random_point(&mut rng, n, w);
        let chain = classify_point(&p, n, w).unwrap();
        let coords: Vec<String> = p.coords.iter().map(|(x, y)| format!("({x:.2}, {y:.2})")).collect();
        let names: Vec<String> = chain.0.iter().map(ToString::to_string).collect();
        println!("{}  tau={:.3}", coords.join(" "), tau(&p));
        println!("    chain: {}", names.join("  <  "));
    }

    let top = chain_witness(&Chain(vec!["2 1|4 3".parse().unwrap()]), 4, 2).unwrap();
    let inside = u_alpha_contains(&top, &"2 1|4 3".parse().unwrap());
    println!("\nwitness for 2 1|4 3: {:?} (inside: {inside})", top.coords);
}
