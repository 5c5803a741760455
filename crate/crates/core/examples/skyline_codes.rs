//! Encodes every critical cell of cell(n, w) by its skyline and code, and
//! decodes it back.
//!
//! cargo run --example skyline_codes -- 4 2

use diskstrip::{code, decode, enumerate_symbols, is_critical, skyline};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(4);
    let w = args.next().unwrap_or(2);

    let mut shown = 0;
    let mut total = 0;
    for s in enumerate_symbols(n, w).into_iter().filter(|s| is_critical(s, w)) {
        let sky = skyline(&s, w).unwrap();
        let c = code(&s, w).unwrap();
        let back = decode(&sky, &c, n, w).unwrap();
        assert_eq!(back, s);
        total += 1;
        if shown < 15 {
            shown += 1;
            println!(
                "{:<16} skyline {:<12} zeros {:?} intervals {:?}",
                s.to_string(),
                if sky.blocks.is_empty() { "()".to_string() } else { sky.to_string() },
                c.zeros_payload,
                c.interval_assignment
            );
        }
    }
    println!("{total} critical cells decoded back to themselves");
}
