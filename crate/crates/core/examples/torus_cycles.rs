//! Special symbols and their torus cycles: every point of the cycle is a
//! configuration of unit disks in the strip, and exactly one vertical
//! alignment lands in the dual submanifold.
//!
//! cargo run --example torus_cycles -- 4 3 2

use std::f64::consts::PI;

use diskstrip::geometry::{tau_in_strip, verify_torus};
use diskstrip::{enumerate_special_symbols, special_symbol_count, torus_point, zstar_contains, TorusAngles};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(4);
    let w = args.next().unwrap_or(3);
    let j = args.next().unwrap_or(2);

    let special = enumerate_special_symbols(n, w, j);
    match special_symbol_count(n, w, j) {
        Ok(count) => println!("{} special symbols for n={n} w={w} j={j} (closed form {count})", special.len()),
        Err(e) => println!("{} special symbols ({e})", special.len()),
    }
    for a in special.iter().take(6) {
        let angles = TorusAngles(vec![PI / 3.0; j]);
        let p = torus_point(a, &angles, w).unwrap();
        let aligned = (0..1usize << j)
            .map(|mask| TorusAngles((0..j).map(|i| if mask >> i & 1 == 1 { 1.5 * PI } else { 0.5 * PI }).collect()))
            .filter(|t| zstar_contains(&torus_point(a, t, w).unwrap(), a, w))
            .count();
        println!("  {a:<14} tau at pi/3: {:.4}, aligned points in Z*: {aligned}", tau_in_strip(&p, w as f64));
    }
    let report = verify_torus(n, w, 16, 4, 1);
    println!("grid sweep: {} checks, {} failures", report.checked, report.failures.len());
}
