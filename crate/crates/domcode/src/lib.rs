//! Location-domination codes on finite graphs and infinite grids.
//!
//! A *code* is a nonempty set of vertices (its *codewords*); the codewords
//! adjacent to or equal to a vertex `v` form its *I-set* `I(v) = N[v] ∩ C`.
//! Depending on how strongly the I-sets are required to separate vertices one
//! obtains dominating (DOM), locating-dominating (LD), solid-locating-dominating
//! (DLD), self-locating-dominating (SLD) and identifying (ID) codes.
//!
//! The crate provides:
//!
//! * [`graph`] — immutable finite graphs with precomputed closed neighborhoods
//!   as bitsets, plus constructors for complete graphs, Cartesian/direct
//!   products, complements, Hamming graphs `K_q³` and king/triangular grid
//!   windows;
//! * [`verify`] — membership tests for every code class, both by the raw
//!   definitions and by the equivalent pairwise characterizations, returning
//!   re-checkable witnesses on failure;
//! * [`solver`] — an exact branch-and-bound solver for the optimal code sizes
//!   `γ`, `γ^LD`, `γ^SLD`, `γ^DLD`, `γ^ID`, with a brute-force oracle for
//!   cross-checking;
//! * [`constructions`] — the explicit optimal LD/SLD codes on direct products
//!   of complete graphs and the small Cartesian fixture codes;
//! * [`grid`] — codes on the infinite king and triangular grids given as
//!   coordinate predicates: window verification, exact densities, forbidden
//!   T-pattern scans and strip counts;
//! * [`formulas`] — closed forms for all known optimal cardinalities on the
//!   product families, with strict domain guards;
//! * [`cli`] — the `domcode` command-line front end and its file formats.
//!
//! The `examples/` directory contains one runnable program per capability;
//! start with `cargo run --example verify_codes`.

pub mod bitset;
pub mod cli;
pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod grid;
pub mod io;
pub mod solver;
pub mod verify;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
