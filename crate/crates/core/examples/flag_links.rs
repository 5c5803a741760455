//! Vertex links of the full complex: each is the clique complex of its
//! graph, the local condition for a non-positively curved cube complex.
//!
//! cargo run --release --example flag_links -- 5

use diskstrip::complex::vertex_link;
use diskstrip::{check_links_flag, CellComplex, Symbol};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for n in 1..=max_n {
        println!("n={n}: all vertex links flag = {}", check_links_flag(n).unwrap());
    }

    let c = CellComplex::build(4, 2).unwrap();
    let v = Symbol::vertex(&[2, 1, 4, 3]).unwrap();
    let link = vertex_link(&c, &v);
    println!("\nlink of {v} in cell(4, 2): {} vertices", link.edges.len());
    for (i, e) in link.edges.iter().enumerate() {
        let neighbours: Vec<String> = (0..link.edges.len())
            .filter(|&k| link.adjacency[i] >> k & 1 == 1)
            .map(|k| link.edges[k].to_string())
            .collect();
        println!("  {e:<10} adjacent to {}", neighbours.join(", "));
    }
}
