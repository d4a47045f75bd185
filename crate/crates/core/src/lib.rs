//! Critical-point polynomial systems over prime fields.
//!
//! This crate constructs the critical-point system of a polynomial family
//! `F = (f_1, ..., f_p)` in `n` variables — the generators of `F` together
//! with the maximal minors of the Jacobian of `F` truncated by its first
//! column — and computes its Gröbner bases over `GF(q)`. Alongside the
//! computational route it carries exact closed-form counterparts (Hilbert
//! series, degree of regularity, ideal degree, complexity estimates) so the
//! two can be cross-checked.
//!
//! The crate is `no_std`-compatible (`alloc` required); disable the default
//! `std` feature for embedded or wasm targets. File formats, the CLI, and
//! the benchmark harness live in the companion `critpoints-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod critsys;
pub mod error;
pub mod fglm;
pub mod gf;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod poly;

pub use error::Error;
pub use gf::{FieldElement, PrimeField};
pub use poly::{Monomial, MonomialOrder, Polynomial};

/// Default field modulus used by the benchmark experiments.
pub const DEFAULT_MODULUS: u64 = 65521;
