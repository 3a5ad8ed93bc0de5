//! Exact-arithmetic toolkit for the refined enumeration of fully packed
//! loops: wheel-polynomial bases under divided-difference operators, the
//! brute-force FPL oracle, exact O(1) loop-model stationary vectors, and the
//! desk-scale verification of Zuber's polynomiality conjecture.
//!
//! The same refined counts A_pi are computed along three independent routes
//! (direct FPL enumeration, the Temperley-Lieb Hamiltonian eigenvector, and
//! wheel polynomials evaluated at z = 1 in the third cyclotomic field) and
//! cross-checked exactly.

pub mod cache;
pub mod config;
pub mod error;
pub mod exactalg;
pub mod fpl;
pub mod loopmodel;
pub mod matchings;
pub mod pform;
pub mod selftest;
pub mod wheel;
pub mod zuber;

#[doc(hidden)]
pub mod rng;

pub use error::{Error, Result};
