//! The working ring `R = Z[x_1..x_d, b_1..b_B, beta] / (beta^{N+1})`.
//!
//! Everything downstream computes with exact integer coefficients in this
//! ring. Truncating at `beta^{N+1}` makes `1 + beta*y` an honest unit and
//! turns every infinite beta-series into a finite object.

mod det;
mod io;
mod monomial;
mod poly;
mod subst;

pub use det::determinant;
pub use io::PolynomialJson;
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use subst::{Replacement, Substitution, VarRef};

use crate::error::Error;
use std::fmt;

/// Dimensions of the working ring: `d` x-variables, `b_vars` b-variables,
/// and beta truncated so that `beta^{beta_trunc + 1} == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    d: usize,
    b_vars: usize,
    beta_trunc: usize,
}

impl RingContext {
    pub fn new(d: usize, b_vars: usize, beta_trunc: usize) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::IndexOutOfRange("d must be at least 1".into()));
        }
        Ok(RingContext { d, b_vars, beta_trunc })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn b_vars(&self) -> usize {
        self.b_vars
    }

    pub fn beta_trunc(&self) -> usize {
        self.beta_trunc
    }

    /// Same dimensions with the truncation order raised by one; used for
    /// stabilization checks.
    pub fn with_beta_trunc(&self, beta_trunc: usize) -> Self {
        RingContext { beta_trunc, ..*self }
    }

    pub(crate) fn check_same(&self, other: &RingContext) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch(*self, *other))
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, B={}, N={})", self.d, self.b_vars, self.beta_trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_d() {
        assert!(RingContext::new(0, 1, 1).is_err());
        assert!(RingContext::new(1, 0, 0).is_ok());
    }
}
