//! Writes the sparse mod-2 boundary matrices of cell(n, w) to a directory,
//! one file per dimension, and prints their sizes.
//!
//! cargo run --example export_boundary -- 4 3 /tmp/cell43

use std::fs;
use std::io::BufWriter;
use std::path::PathBuf;

use diskstrip::CellComplex;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|a| a.parse().ok()).unwrap_or(4);
    let w = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let dir = args
        .get(2)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join(format!("cell_{n}_{w}")));

    let c = CellComplex::build(n, w).expect("complex fits the default budget");
    fs::create_dir_all(&dir).unwrap();
    for d in 1..=c.top_dimension() {
        let path = dir.join(format!("boundary_{d}.txt"));
        let mut f = BufWriter::new(fs::File::create(&path).unwrap());
        c.write_boundary(d, &mut f).unwrap();
        println!(
            "{}: {} x {} with {} nonzeros",
            path.display(),
            c.cells(d - 1).len(),
            c.cells(d).len(),
            c.boundary(d).nnz()
        );
    }
}
