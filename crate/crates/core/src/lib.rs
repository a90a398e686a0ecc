//! Spectral gaps of graphs near the extremal cases: incidence graphs of
//! projective planes and symmetric designs, friendship and book graphs,
//! cages, and exhaustively enumerated regular graphs.
//!
//! - [`fields`], [`designs`]: finite fields and incidence structures.
//! - [`graphs`], [`generators`]: the graph type, graph6 I/O, canonical
//!   forms, named families and enumeration.
//! - [`spectra`], [`neighborhood`]: eigenvalues, gaps, `φ(G)` and the
//!   neighborhood Laplacian.
//! - [`recognize`], [`verify`]: combinatorial recognizers and the
//!   theorem-checking harness.

pub mod designs;
pub mod fields;
pub mod generators;
pub mod graphs;
pub mod neighborhood;
pub mod recognize;
pub mod spectra;
pub mod verify;
