//! Exact computation of factorial Grothendieck polynomials.
//!
//! `G_lambda(x|b)` is computed by three independent routes — the
//! bi-alternant ratio and two Jacobi–Trudi style determinants in one-row
//! generating-series coefficients — and the identities tying the routes
//! together are machine-verified as exact polynomial equalities in the
//! truncated ring `Z[x, b, beta] / (beta^{N+1})`.
//!
//! Start with [`ring::RingContext`] and [`formulas::bialternant`], or see
//! the runnable programs under `examples/`.

pub mod error;
pub mod formulas;
pub mod ring;
pub mod series;
pub mod verify;

pub use error::Error;
