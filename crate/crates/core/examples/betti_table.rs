//! Betti numbers of cell(n, w) for every width, next to the planar values.
//!
//! cargo run --release --example betti_table -- 6

use diskstrip::bounds::stirling_betti;
use diskstrip::{betti_numbers, CellComplex};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    println!("mod-2 Betti numbers of cell({n}, w); last row is the plane");
    print!("{:>6}", "w \\ j");
    for j in 0..n {
        print!("{j:>9}");
    }
    println!();
    for w in 1..=n {
        let c = CellComplex::build(n, w).expect("complex fits the default budget");
        let betti = betti_numbers(&c);
        print!("{w:>6}");
        for j in 0..n {
            print!("{:>9}", betti.get(j));
        }
        println!("   chi = {}", c.euler_characteristic());
    }
    print!("{:>6}", "R^2");
    for j in 0..n {
        print!("{:>9}", stirling_betti(n, j));
    }
    println!();
}
