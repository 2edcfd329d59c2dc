use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A ring variable, 1-based as in serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarRef {
    X(usize),
    B(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Replacement {
    Int(BigInt),
    Var(VarRef),
}

/// Per-variable replacement map. x-variables may map to integers or other
/// x-variables, b-variables to integers or other b-variables, beta only to
/// an integer. Unmentioned variables are left alone.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    x: BTreeMap<usize, Replacement>,
    b: BTreeMap<usize, Replacement>,
    beta: Option<BigInt>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn x_to_int(mut self, i: usize, c: impl Into<BigInt>) -> Self {
        self.x.insert(i, Replacement::Int(c.into()));
        self
    }

    pub fn b_to_int(mut self, j: usize, c: impl Into<BigInt>) -> Self {
        self.b.insert(j, Replacement::Int(c.into()));
        self
    }

    pub fn x_to_x(mut self, i: usize, target: usize) -> Self {
        self.x.insert(i, Replacement::Var(VarRef::X(target)));
        self
    }

    pub fn b_to_b(mut self, j: usize, target: usize) -> Self {
        self.b.insert(j, Replacement::Var(VarRef::B(target)));
        self
    }

    pub fn swap_x(self, i: usize, j: usize) -> Self {
        self.x_to_x(i, j).x_to_x(j, i)
    }

    /// Apply an x-permutation given in one-line notation (`perm[i-1]` is the
    /// image of `x_i`).
    pub fn permute_x(mut self, perm: &[usize]) -> Self {
        for (i, &target) in perm.iter().enumerate() {
            self.x.insert(i + 1, Replacement::Var(VarRef::X(target)));
        }
        self
    }

    pub fn beta_to_int(mut self, c: impl Into<BigInt>) -> Self {
        self.beta = Some(c.into());
        self
    }

    fn validate(&self, ctx: &super::RingContext) -> Result<(), Error> {
        let check_x = |i: usize| -> Result<(), Error> {
            if i == 0 || i > ctx.d() {
                Err(Error::BadSubstitution(format!("x{i} out of range")))
            } else {
                Ok(())
            }
        };
        let check_b = |j: usize| -> Result<(), Error> {
            if j == 0 || j > ctx.b_vars() {
                Err(Error::BadSubstitution(format!("b{j} out of range")))
            } else {
                Ok(())
            }
        };
        for (&i, r) in &self.x {
            check_x(i)?;
            match r {
                Replacement::Int(_) => {}
                Replacement::Var(VarRef::X(t)) => check_x(*t)?,
                Replacement::Var(VarRef::B(_)) => {
                    return Err(Error::BadSubstitution(format!(
                        "x{i} may only map to an x-variable or an integer"
                    )));
                }
            }
        }
        for (&j, r) in &self.b {
            check_b(j)?;
            match r {
                Replacement::Int(_) => {}
                Replacement::Var(VarRef::B(t)) => check_b(*t)?,
                Replacement::Var(VarRef::X(_)) => {
                    return Err(Error::BadSubstitution(format!(
                        "b{j} may only map to a b-variable or an integer"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Exact substitution followed by re-truncation at `beta^{N+1}`.
    pub fn substitute(&self, subst: &Substitution) -> Result<Polynomial, Error> {
        let ctx = self.ctx();
        subst.validate(&ctx)?;
        let mut out = Polynomial::zero(ctx);
        for (m, c) in self.terms() {
            let mut coeff = c.clone();
            let mut nm = Monomial::one(ctx.d(), ctx.b_vars());
            for (i, &e) in m.x_exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match subst.x.get(&(i + 1)) {
                    None => nm.x[i] += e,
                    Some(Replacement::Var(VarRef::X(t))) => nm.x[t - 1] += e,
                    Some(Replacement::Int(v)) => coeff *= pow_int(v, e),
                    Some(Replacement::Var(VarRef::B(_))) => unreachable!("validated"),
                }
                if coeff.is_zero() {
                    break;
                }
            }
            for (j, &e) in m.b_exponents().iter().enumerate() {
                if e == 0 || coeff.is_zero() {
                    continue;
                }
                match subst.b.get(&(j + 1)) {
                    None => nm.b[j] += e,
                    Some(Replacement::Var(VarRef::B(t))) => nm.b[t - 1] += e,
                    Some(Replacement::Int(v)) => coeff *= pow_int(v, e),
                    Some(Replacement::Var(VarRef::X(_))) => unreachable!("validated"),
                }
            }
            let e = m.beta_exponent();
            if e > 0 && !coeff.is_zero() {
                match &subst.beta {
                    None => nm.beta += e,
                    Some(v) => coeff *= pow_int(v, e),
                }
            }
            out.accumulate(nm, coeff);
        }
        Ok(out)
    }
}

fn pow_int(v: &BigInt, e: u32) -> BigInt {
    if v.is_zero() {
        return BigInt::zero();
    }
    if v.is_one() {
        return BigInt::one();
    }
    v.pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ctx() -> RingContext {
        RingContext::new(2, 1, 2).unwrap()
    }

    #[test]
    fn kill_b_variable() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let b1 = Polynomial::b_var(c, 1).unwrap();
        let p = &(&x1 + &b1) + &(&(&x1 * &b1) * &Polynomial::beta(c));
        let got = p.substitute(&Substitution::new().b_to_int(1, 0)).unwrap();
        assert_eq!(got, x1);
    }

    #[test]
    fn swap_fixes_symmetric_input() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let x2 = Polynomial::x_var(c, 2).unwrap();
        let p = &x1 + &x2;
        assert_eq!(p.substitute(&Substitution::new().swap_x(1, 2)).unwrap(), p);
        let q = &x1 - &x2;
        assert_eq!(q.substitute(&Substitution::new().swap_x(1, 2)).unwrap(), q.negate());
    }

    #[test]
    fn beta_to_minus_one_flips_signs() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let x2 = Polynomial::x_var(c, 2).unwrap();
        let x1x2 = &x1 * &x2;
        let p = &(&x1 + &x2) - &(&Polynomial::beta(c) * &x1x2);
        let got = p.substitute(&Substitution::new().beta_to_int(-1)).unwrap();
        assert_eq!(got, &(&x1 + &x2) + &x1x2);
    }

    #[test]
    fn cross_family_replacement_is_rejected() {
        let c = ctx();
        let p = Polynomial::x_var(c, 1).unwrap();
        let mut s = Substitution::new();
        s.x.insert(1, Replacement::Var(VarRef::B(1)));
        assert!(matches!(p.substitute(&s), Err(Error::BadSubstitution(_))));
        assert!(p.substitute(&Substitution::new().x_to_int(5, 1)).is_err());
    }
}
