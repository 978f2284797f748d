//! Exact verification engine for WP-Bailey pairs, chains, and q-series
//! transformation identities.
//!
//! A WP (well-poised) Bailey pair with parameters (a, k) relative to
//! base q is a pair of sequences (alpha_n, beta_n) with
//!
//!   beta_n = sum_{j=0}^{n} (k/a;q)_{n-j} (k;q)_{n+j}
//!            / ((q;q)_{n-j} (aq;q)_{n+j}) * alpha_j,
//!
//! reducing at k = 0 to the classical Bailey pair relation.  Chains map
//! WP-Bailey pairs to new WP-Bailey pairs, usually moving (a, k) and
//! sometimes the base; iterating them along a seed pair generates
//! transformation identities between basic hypergeometric series.
//!
//! This crate implements the relation, its inversion, and the duality
//! map (`wp_core`); a catalog of concrete pairs (`catalog`); four
//! general chain constructions together with the named classical and
//! recent chains they subsume (`chains`); and a registry of two-sided
//! transformation identities (`identities`).  Everything is verified
//! the same way: evaluate both sides exactly over the Gaussian
//! rationals at seeded, non-degenerate rational points (`field`,
//! `roots`, `qseries`) and compare for equality.  No floating point,
//! no symbolic simplification, no tolerance thresholds.
//!
//! The `wpb` binary exposes the pair checks, chain applications, and
//! identity verification as a command-line tool with deterministic,
//! byte-stable JSON output.

pub mod catalog;
pub mod chains;
pub mod error;
pub mod field;
pub mod identities;
pub mod qseries;
pub mod roots;
pub mod wp_core;

pub use error::Error;
