//! The gas/liquid/solid portrait for fixed n, with lower bounds and the
//! exponents governing liquid growth.
//!
//! cargo run --example phase_portrait -- 7

use diskstrip::bounds::{liquid_lower_bound, render_portrait};
use diskstrip::{liquid_exponents, regime, stirling_betti, RegimeLabel};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    print!("{}", render_portrait(n));

    println!("\nliquid points: beta_j >= lower bound; growth ~ (q+1)^n n^(qw+2r)");
    for w in 1..n {
        for j in 0..n {
            if regime(n, w, j) != RegimeLabel::Liquid {
                continue;
            }
            let growth = match liquid_exponents(w, j) {
                Ok(e) => format!("q={} r={} base={} degree={}", e.q, e.r, e.base, e.degree),
                Err(_) => "-".to_string(),
            };
            println!(
                "  w={w} j={j}: lower bound {:>8}, planar {:>6}, {growth}",
                liquid_lower_bound(n, w, j),
                stirling_betti(n, j)
            );
        }
    }
}
