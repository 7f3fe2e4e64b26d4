//! Exact computational classical invariant theory.
//!
//! The crate computes invariants and covariants of binary and ternary forms
//! over exact rational arithmetic: kernel-method invariant bases, Reynolds
//! projection, transvectants and apolarity, bracket/tableau expansion with
//! straightening, Hilbert series by four independent routes (Cayley–Sylvester,
//! Springer, Molien, direct kernel dimension), and the classical invariants of
//! six-point configurations on the line and in the plane.
//!
//! Everything is deterministic: a fixed graded-lex monomial order drives all
//! normal forms, and randomized checks take explicit seeds.

pub mod binary;
pub mod exact;
pub mod hilbert;
pub mod molien;
mod par;
pub mod points_line;
pub mod points_plane;
pub mod selftest;
pub mod tableaux;
pub mod ternary;

pub use exact::{rat, rational_series, rint, series_inverse_factor, Error, Mat, Mono, Poly, Rat, Result, Series, Vars};
