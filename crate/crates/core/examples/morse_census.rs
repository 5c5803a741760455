//! Critical cells of the discrete gradient against the Betti numbers, with
//! the acyclicity certificate and the skyline shapes that occur.
//!
//! cargo run --release --example morse_census -- 5 3

use diskstrip::morse::{critical_census, is_acyclic};
use diskstrip::{betti_numbers, build_matching, verify_gradient, CellComplex};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(5);
    let w = args.next().unwrap_or(2);

    let c = CellComplex::build(n, w).expect("complex fits the default budget");
    let m = build_matching(&c).expect("matching is an involution");
    let betti = betti_numbers(&c);
    println!("cell({n}, {w}): {} cells, {} matched pairs", c.total_cells(), m.num_pairs());
    println!("{:>4} {:>10} {:>10} {:>10}", "dim", "cells", "critical", "betti");
    for (d, crit) in m.critical_counts().iter().enumerate() {
        println!("{d:>4} {:>10} {crit:>10} {:>10}", c.cells(d).len(), betti.get(d));
    }
    let keys_descend = verify_gradient(&c, &m);
    let acyclic = is_acyclic(&c, &m);
    println!("key descent: {keys_descend}, topological sort: {acyclic}");

    let census = critical_census(n, w).expect("within budget");
    println!("\n{} skylines; most frequent:", census.by_skyline.len());
    let mut shapes: Vec<_> = census.by_skyline.iter().collect();
    shapes.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
    for (sky, count) in shapes.into_iter().take(8) {
        let text = if sky.blocks.is_empty() { "(empty)".to_string() } else { sky.to_string() };
        println!("  {text:<20} b={} z={} dim={} cells={count}", sky.b(), sky.z(), sky.dimension());
    }
    if !census.violations.is_empty() {
        println!("skylines breaking the counting bound: {:?}", census.violations);
    }
}
