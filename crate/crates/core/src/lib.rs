//! Conversion between indefinite sums weighted by a periodic sequence and
//! sums over arithmetic progressions, with numeric verification of every
//! identity involved.
//!
//! For f on the naturals and a q-periodic weight g, the prefix sums
//! S(n) = sum_{k<n} g(k) f(k) decompose over residue classes into the
//! progression sums T_p(n) = sum_{k<n} f(qk + p); when the T_p have closed
//! forms (Gamma ratios, harmonic numbers), so does S. This crate provides:
//!
//! - [`periodic`]: q-periodic weights and the residue-class indicator in
//!   three equivalent forms
//! - [`special`]: log-gamma, digamma, harmonic numbers at complex
//!   arguments, and the classical identities (Gauss formula, duplication,
//!   multiplication, sine product)
//! - [`engine`]: brute-force sum oracles, the forward difference, and the
//!   conversion formulas between S, S_p, and T_p
//! - [`catalog`]: the concrete families with known closed forms, the
//!   Catalan partial sums, and the binomial progression sums
//! - [`series`]: truncated power series and both generating-function
//!   routes to the residue sums
//! - [`expr`]: a parser/evaluator for weight expressions like
//!   `sin(k*pi/2)`, with period detection
//! - [`suites`]: the verification sweeps behind the CLI and the
//!   acceptance tests

pub mod catalog;
pub mod engine;
pub mod error;
pub mod expr;
pub mod periodic;
pub mod series;
pub mod special;
pub mod suites;

pub use error::{Error, Result};
pub use num_complex::Complex64;
