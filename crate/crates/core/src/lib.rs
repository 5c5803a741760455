//! Configuration spaces of `n` unit disks in an infinite strip of width `w`,
//! studied through the combinatorial cell complex `cell(n, w)`.
//!
//! Cells are symbols: permutations of `1..=n` cut by bars into blocks of
//! width at most `w`. The crate builds the complex with its mod-2 boundary
//! maps, computes Betti numbers, constructs a discrete gradient vector field
//! with its critical cells, evaluates the closed-form bounds that separate the
//! gas, liquid and solid regimes, and provides numeric oracles for the
//! underlying point configurations.
//!
//! ```
//! use diskstrip::{betti_numbers, CellComplex};
//!
//! let c = CellComplex::build(3, 2).unwrap();
//! assert_eq!(betti_numbers(&c).betti, vec![1, 7]);
//! ```

pub mod bounds;
pub mod cli;
pub mod complex;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod morse;
pub mod symbols;

pub use bounds::{
    enumerate_special_symbols, liquid_exponents, regime, special_symbol_count, stirling_betti, LiquidExponents,
    RegimeLabel,
};
pub use complex::{check_links_flag, CellComplex, FVector};
pub use error::{Error, Result};
pub use geometry::{
    chain_witness, classify_point, tau, torus_point, u_alpha_contains, zstar_contains, Chain, ConfigurationPoint,
    TorusAngles,
};
pub use gf2::{betti_numbers, rank, verify_chain_complex, BettiTable, BitMatrix};
pub use morse::{
    block_roles, build_matching, code, critical_census, decode, is_critical, key, match_cell, skyline,
    verify_gradient, BlockRoles, Key, MorseMatching, Skyline, SkylineCode,
};
pub use symbols::{enumerate_symbols, parse_symbol, Symbol};
