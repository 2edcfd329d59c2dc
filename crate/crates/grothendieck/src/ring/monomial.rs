use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a single monomial. Only monomials created under the
/// same context are comparable (the vectors must have equal lengths).
///
/// The canonical order is graded lexicographic with variable precedence
/// `x1 < ... < xd < b1 < ... < bB < beta`: compare total degree first, then
/// the exponent of the highest-precedence variable, and so on down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub(crate) x: Vec<u32>,
    pub(crate) b: Vec<u32>,
    pub(crate) beta: u32,
}

impl Monomial {
    pub(crate) fn one(d: usize, b_vars: usize) -> Self {
        Monomial { x: vec![0; d], b: vec![0; b_vars], beta: 0 }
    }

    pub(crate) fn x_monomial(ctx: super::RingContext, exps: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), ctx.d());
        Monomial { x: exps.to_vec(), b: vec![0; ctx.b_vars()], beta: 0 }
    }

    pub fn total_degree(&self) -> u64 {
        self.x.iter().map(|&e| e as u64).sum::<u64>()
            + self.b.iter().map(|&e| e as u64).sum::<u64>()
            + self.beta as u64
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn b_exponents(&self) -> &[u32] {
        &self.b
    }

    pub fn beta_exponent(&self) -> u32 {
        self.beta
    }

    pub fn is_one(&self) -> bool {
        self.beta == 0 && self.x.iter().all(|&e| e == 0) && self.b.iter().all(|&e| e == 0)
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            b: self.b.iter().zip(&other.b).map(|(a, b)| a + b).collect(),
            beta: self.beta + other.beta,
        }
    }

    pub(crate) fn divides(&self, other: &Monomial) -> bool {
        self.beta <= other.beta
            && self.x.iter().zip(&other.x).all(|(a, b)| a <= b)
            && self.b.iter().zip(&other.b).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must have checked `self.divides(other)`.
    pub(crate) fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: other.x.iter().zip(&self.x).map(|(a, b)| a - b).collect(),
            b: other.b.iter().zip(&self.b).map(|(a, b)| a - b).collect(),
            beta: other.beta - self.beta,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.beta.cmp(&other.beta))
            .then_with(|| self.b.iter().rev().cmp(other.b.iter().rev()))
            .then_with(|| self.x.iter().rev().cmp(other.x.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, name: String, e: u32| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{name}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            Ok(())
        };
        for (i, &e) in self.x.iter().enumerate() {
            factor(f, format!("x{}", i + 1), e)?;
        }
        for (j, &e) in self.b.iter().enumerate() {
            factor(f, format!("b{}", j + 1), e)?;
        }
        factor(f, "beta".to_string(), self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(x: Vec<u32>, b: Vec<u32>, beta: u32) -> Monomial {
        Monomial { x, b, beta }
    }

    #[test]
    fn canonical_order_matches_variable_precedence() {
        let x1 = m(vec![1, 0], vec![0], 0);
        let x2 = m(vec![0, 1], vec![0], 0);
        let b1 = m(vec![0, 0], vec![1], 0);
        let beta = m(vec![0, 0], vec![0], 1);
        assert!(x1 < x2);
        assert!(x2 < b1);
        assert!(b1 < beta);
        // graded before lex: any degree-1 monomial precedes a degree-2 one
        let x1sq = m(vec![2, 0], vec![0], 0);
        assert!(beta < x1sq);
    }

    #[test]
    fn display_omits_unit_exponents() {
        let t = m(vec![1, 0], vec![2], 1);
        assert_eq!(t.to_string(), "x1*b1^2*beta");
        assert_eq!(m(vec![0, 0], vec![0], 0).to_string(), "1");
    }
}
