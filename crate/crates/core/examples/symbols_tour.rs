//! Symbols as cells: parsing, dimension, faces and cofaces, and counts.

use diskstrip::symbols::{symbol_count, symbol_count_in_dim};
use diskstrip::{enumerate_symbols, parse_symbol};

fn main() {
    let s = parse_symbol("3 1|2 5|4", 5).unwrap();
    println!("{s}: {} blocks, dimension {}, width {}", s.num_blocks(), s.dimension(), s.width());
    let faces: Vec<String> = s.codim1_faces().iter().map(ToString::to_string).collect();
    println!("codimension-one faces: {}", faces.join(", "));
    let cofaces: Vec<String> = s.merges().iter().filter(|t| t.width() <= 3).map(ToString::to_string).collect();
    println!("cofaces inside cell(5, 3): {}", cofaces.join(", "));

    for bad in ["1 1|2", "1|3", "1||2"] {
        println!("{bad:?}: {}", parse_symbol(bad, 3).unwrap_err());
    }

    println!("\ncells of cell(n, w) by dimension");
    for n in 1..=6 {
        let per_dim: Vec<u64> = (0..n).map(|d| symbol_count_in_dim(n, n, d)).collect();
        println!("  n={n}: {per_dim:?}, total {}", symbol_count(n, n));
    }
    let narrow = enumerate_symbols(4, 2);
    let first: Vec<String> = narrow[..6].iter().map(ToString::to_string).collect();
    println!("\ncell(4, 2) has {} cells; the first few: {}", narrow.len(), first.join(", "));
}
