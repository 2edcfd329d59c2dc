use super::monomial::Monomial;
use super::RingContext;
use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse exact polynomial in `R = Z[x, b, beta] / (beta^{N+1})`.
///
/// Invariants: no stored coefficient is zero, every monomial satisfies
/// `beta <= ctx.beta_trunc()`, and the term vector is kept in ascending
/// canonical monomial order (which serialization relies on).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: RingContext,
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero(ctx: RingContext) -> Self {
        Polynomial { ctx, terms: Vec::new() }
    }

    pub fn one(ctx: RingContext) -> Self {
        Polynomial::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: RingContext, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ctx.d(), ctx.b_vars()), c));
        }
        Polynomial { ctx, terms }
    }

    /// The variable `x_i`, 1-based.
    pub fn x_var(ctx: RingContext, i: usize) -> Result<Self, Error> {
        if i == 0 || i > ctx.d() {
            return Err(Error::IndexOutOfRange(format!("x{i} with d = {}", ctx.d())));
        }
        let mut m = Monomial::one(ctx.d(), ctx.b_vars());
        m.x[i - 1] = 1;
        Ok(Polynomial::from_term(ctx, m, BigInt::one()))
    }

    /// The variable `b_j`, 1-based.
    pub fn b_var(ctx: RingContext, j: usize) -> Result<Self, Error> {
        if j == 0 || j > ctx.b_vars() {
            return Err(Error::IndexOutOfRange(format!("b{j} with B = {}", ctx.b_vars())));
        }
        let mut m = Monomial::one(ctx.d(), ctx.b_vars());
        m.b[j - 1] = 1;
        Ok(Polynomial::from_term(ctx, m, BigInt::one()))
    }

    /// The image of `beta` in R; at truncation order 0 this is already 0.
    pub fn beta(ctx: RingContext) -> Self {
        if ctx.beta_trunc() == 0 {
            return Polynomial::zero(ctx);
        }
        let mut m = Monomial::one(ctx.d(), ctx.b_vars());
        m.beta = 1;
        Polynomial::from_term(ctx, m, BigInt::one())
    }

    pub(crate) fn from_term(ctx: RingContext, m: Monomial, c: BigInt) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() && m.beta as usize <= ctx.beta_trunc() {
            terms.push((m, c));
        }
        Polynomial { ctx, terms }
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(idx) => self.terms[idx].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one(self.ctx.d(), self.ctx.b_vars()))
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub(crate) fn accumulate(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() || m.beta as usize > self.ctx.beta_trunc() {
            return;
        }
        match self.terms.binary_search_by(|(k, _)| k.cmp(&m)) {
            Ok(idx) => {
                self.terms[idx].1 += c;
                if self.terms[idx].1.is_zero() {
                    self.terms.remove(idx);
                }
            }
            Err(idx) => self.terms.insert(idx, (m, c)),
        }
    }

    /// Insert a pure x-monomial given by its exponent vector.
    pub(crate) fn push_x_monomial(&mut self, x_exps: &[u32], c: BigInt) {
        debug_assert_eq!(x_exps.len(), self.ctx.d());
        let mut m = Monomial::one(self.ctx.d(), self.ctx.b_vars());
        m.x.copy_from_slice(x_exps);
        self.accumulate(m, c);
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.ctx.check_same(&other.ctx)?;
        // linear merge of the two sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial { ctx: self.ctx, terms: out })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.checked_add(&other.negate())
    }

    pub fn negate(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product, reduced mod `beta^{N+1}`: any product monomial whose beta
    /// exponent exceeds the truncation order is discarded.
    ///
    /// When every product exponent fits, monomials are packed into `u128`
    /// keys and accumulated through a hash map, which avoids allocating a
    /// `Monomial` per term pair; otherwise a generic tree-map path runs.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.ctx.check_same(&other.ctx)?;
        let n = self.ctx.beta_trunc() as u32;
        // iterate the smaller operand on the outside
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if let Some(packer) = Packer::for_product(small, large) {
            return Ok(packer.mul(self.ctx, small, large, n));
        }
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                if m1.beta + m2.beta > n {
                    continue;
                }
                *map.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Ok(Polynomial {
            ctx: self.ctx,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * &c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ctx);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same context");
        }
        out
    }

    /// Inverse of a unit of the form `1 + beta*q`, by the geometric series
    /// `sum_{s<=N} (-(p-1))^s`.
    pub fn unit_inverse(&self) -> Result<Polynomial, Error> {
        if !self.constant_term().is_one() {
            return Err(Error::NotAUnit(format!("constant term is {}", self.constant_term())));
        }
        if let Some((m, _)) = self.terms.iter().find(|(m, _)| !m.is_one() && m.beta == 0) {
            return Err(Error::NotAUnit(format!("term {m} has no beta factor")));
        }
        let tail = self.checked_sub(&Polynomial::one(self.ctx))?; // beta-valuation >= 1
        let mut out = Polynomial::one(self.ctx);
        let mut power = Polynomial::one(self.ctx);
        for _ in 0..self.ctx.beta_trunc() {
            power = power.checked_mul(&tail)?.negate();
            if power.is_zero() {
                break;
            }
            out = out.checked_add(&power)?;
        }
        Ok(out)
    }

    /// `unit_inverse` raised to the `e`-th power; convenience for the
    /// negative unit powers appearing in the proof identities.
    pub fn unit_inverse_pow(&self, e: u32) -> Result<Polynomial, Error> {
        Ok(self.unit_inverse()?.pow(e))
    }

    /// Exact division: returns `r` with `r * q == p`, or `NotDivisible`
    /// carrying the leading monomial of the first irreducible remainder.
    ///
    /// Standard single-divisor reduction by leading terms. Over an integral
    /// domain the leading term of an exact quotient always cancels the
    /// remainder's leading term, so a mismatch proves non-divisibility.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Polynomial, Error> {
        self.ctx.check_same(&q.ctx)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lm, lc) = q.leading().expect("nonzero divisor");
        let (lm, lc) = (lm.clone(), lc.clone());
        // Tree-map working copy: reductions insert and remove all over the
        // remainder, which a sorted vector cannot afford on large inputs.
        let mut rem: BTreeMap<Monomial, BigInt> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        let n = self.ctx.beta_trunc();
        // reduced leading monomials strictly decrease, so quotient terms
        // arrive in descending order
        let mut quo: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            if rc.is_zero() {
                continue; // cancelled earlier, removed lazily
            }
            if !lm.divides(&rm) {
                return Err(Error::NotDivisible { witness: rm.to_string() });
            }
            let (qc, leftover) = rc.div_rem(&lc);
            if !leftover.is_zero() {
                return Err(Error::NotDivisible { witness: rm.to_string() });
            }
            let tm = lm.div_into(&rm);
            for (qm, qcf) in &q.terms {
                let m = tm.mul(qm);
                if m == rm || m.beta as usize > n {
                    continue; // the leading term was already popped
                }
                *rem.entry(m).or_insert_with(BigInt::zero) -= qcf * &qc;
            }
            quo.push((tm, qc));
        }
        quo.reverse();
        Ok(Polynomial { ctx: self.ctx, terms: quo })
    }

    /// Build from a term list that may be unsorted; the caller guarantees
    /// distinct monomials and nonzero coefficients.
    pub(crate) fn from_distinct_terms(ctx: RingContext, mut terms: Vec<(Monomial, BigInt)>) -> Polynomial {
        terms.sort_unstable_by(|(a, _), (b, _)| a.cmp(b));
        Polynomial { ctx, terms }
    }

    /// Exchange the exponents of `x_i` and `x_j` (1-based) in every term;
    /// the cheap special case of substitution that the divided-difference
    /// operators need in bulk.
    pub(crate) fn swap_x_exponents(&self, i: usize, j: usize) -> Polynomial {
        let mut terms: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.x.swap(i - 1, j - 1);
                (m, c.clone())
            })
            .collect();
        terms.sort_unstable_by(|(a, _), (b, _)| a.cmp(b));
        Polynomial { ctx: self.ctx, terms }
    }

    /// Drop every term with beta exponent above `n`. The context keeps its
    /// own truncation order; this is a comparison helper, not a re-embedding.
    pub fn truncate_beta(&self, n: usize) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.beta as usize <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-interpret under a context that differs only in truncation order,
    /// dropping terms that no longer fit.
    pub fn reinterpret(&self, ctx: RingContext) -> Result<Polynomial, Error> {
        if ctx.d() != self.ctx.d() || ctx.b_vars() != self.ctx.b_vars() {
            return Err(Error::ContextMismatch(self.ctx, ctx));
        }
        Ok(Polynomial {
            ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.beta as usize <= ctx.beta_trunc())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Smallest monomial (canonical order) on which `self` and `other`
    /// disagree, with both coefficients. `None` when equal.
    pub fn first_difference(&self, other: &Polynomial) -> Option<(Monomial, BigInt, BigInt)> {
        let diff = self.checked_sub(other).ok()?;
        if diff.is_zero() && self == other {
            return None;
        }
        let (m, _) = diff.terms.iter().next()?;
        Some((m.clone(), self.coeff(m), other.coeff(m)))
    }

    pub fn max_coeff_abs(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

/// Fixed-width bit packing of exponent vectors into `u128` keys, sized from
/// the actual operand maxima so that adding two keys adds exponents with no
/// carry between fields. Layout: x variables, then b variables, then beta.
struct Packer {
    shifts: Vec<u32>,
    widths: Vec<u32>,
}

impl Packer {
    fn for_product(f: &Polynomial, g: &Polynomial) -> Option<Packer> {
        let ctx = f.ctx;
        let positions = ctx.d() + ctx.b_vars() + 1;
        let mut max_f = vec![0u64; positions];
        let mut max_g = vec![0u64; positions];
        for (poly, maxes) in [(f, &mut max_f), (g, &mut max_g)] {
            for (m, _) in &poly.terms {
                for (slot, &e) in m.x.iter().chain(&m.b).chain([&m.beta]).enumerate() {
                    maxes[slot] = maxes[slot].max(e as u64);
                }
            }
        }
        let mut shifts = Vec::with_capacity(positions);
        let mut widths = Vec::with_capacity(positions);
        let mut used = 0u32;
        for slot in 0..positions {
            let w = 64 - (max_f[slot] + max_g[slot]).leading_zeros();
            shifts.push(used);
            widths.push(w);
            used += w;
            if used > 128 {
                return None;
            }
        }
        Some(Packer { shifts, widths })
    }

    fn pack(&self, m: &Monomial) -> u128 {
        let mut key = 0u128;
        for (slot, &e) in m.x.iter().chain(&m.b).chain([&m.beta]).enumerate() {
            key |= (e as u128) << self.shifts[slot];
        }
        key
    }

    /// Sort key realizing the canonical monomial order on packed keys: the
    /// field layout runs from `x1` (least significant) up to `beta`, which
    /// is exactly the graded-lex precedence, so after grading by total
    /// degree the raw key comparison finishes the job.
    fn order_key(&self, key: u128) -> (u64, u128) {
        let mut total = 0u64;
        for slot in 0..self.widths.len() {
            if self.widths[slot] > 0 {
                total += ((key >> self.shifts[slot]) & ((1u128 << self.widths[slot]) - 1)) as u64;
            }
        }
        (total, key)
    }

    fn unpack(&self, key: u128, d: usize, b_vars: usize) -> Monomial {
        let field = |slot: usize| -> u32 {
            if self.widths[slot] == 0 {
                0
            } else {
                ((key >> self.shifts[slot]) & ((1u128 << self.widths[slot]) - 1)) as u32
            }
        };
        let mut m = Monomial::one(d, b_vars);
        for (slot, e) in m.x.iter_mut().chain(&mut m.b).enumerate() {
            *e = field(slot);
        }
        m.beta = field(d + b_vars);
        m
    }

    fn mul(&self, ctx: RingContext, small: &Polynomial, large: &Polynomial, n: u32) -> Polynomial {
        // With both operands' coefficients under 42 bits, every pairwise
        // product stays under 84 bits and even 2^40 of them cannot overflow
        // an i128 accumulator, so the arithmetic can skip BigInt entirely.
        let fits =
            |p: &Polynomial| p.terms.iter().all(|(_, c)| c.bits() <= 42);
        if fits(small) && fits(large) {
            if self.total_bits() <= 64 {
                self.mul_i128_u64(ctx, small, large, n)
            } else {
                self.mul_i128(ctx, small, large, n)
            }
        } else {
            self.mul_big(ctx, small, large, n)
        }
    }

    fn total_bits(&self) -> u32 {
        self.widths.iter().sum::<u32>()
    }

    /// `mul_i128` with the keys narrowed to `u64` when every field fits:
    /// smaller hash entries are measurably faster on the hot determinants.
    fn mul_i128_u64(&self, ctx: RingContext, small: &Polynomial, large: &Polynomial, n: u32) -> Polynomial {
        use num_traits::ToPrimitive;
        type KeyMap = std::collections::HashMap<u64, i128, std::hash::BuildHasherDefault<KeyHasher>>;
        let large_keys: Vec<(u64, u32, i128)> = large
            .terms
            .iter()
            .map(|(m, c)| (self.pack(m) as u64, m.beta, c.to_i128().expect("fits by check")))
            .collect();
        let pairs = small.terms.len().saturating_mul(large.terms.len());
        let cap = pairs.min(large.terms.len().max(small.terms.len()) * 8).max(64);
        let mut map = KeyMap::with_capacity_and_hasher(cap, Default::default());
        for (m1, c1) in &small.terms {
            let k1 = self.pack(m1) as u64;
            let c1 = c1.to_i128().expect("fits by check");
            for &(k2, b2, c2) in &large_keys {
                if m1.beta + b2 > n {
                    continue;
                }
                *map.entry(k1 + k2).or_insert(0) += c1 * c2;
            }
        }
        let mut entries: Vec<(u64, u64, i128)> = map
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(key, c)| {
                let (total, _) = self.order_key(key as u128);
                (total, key, c)
            })
            .collect();
        entries.sort_unstable();
        let terms = entries
            .into_iter()
            .map(|(_, key, c)| (self.unpack(key as u128, ctx.d(), ctx.b_vars()), BigInt::from(c)))
            .collect();
        Polynomial { ctx, terms }
    }

    fn mul_i128(&self, ctx: RingContext, small: &Polynomial, large: &Polynomial, n: u32) -> Polynomial {
        use num_traits::ToPrimitive;
        type KeyMap = std::collections::HashMap<u128, i128, std::hash::BuildHasherDefault<KeyHasher>>;
        let large_keys: Vec<(u128, u32, i128)> = large
            .terms
            .iter()
            .map(|(m, c)| (self.pack(m), m.beta, c.to_i128().expect("fits by check")))
            .collect();
        // generous pre-sizing: growth rehashes the whole table mid-loop
        let pairs = small.terms.len().saturating_mul(large.terms.len());
        let cap = pairs.min(large.terms.len().max(small.terms.len()) * 8).max(64);
        let mut map = KeyMap::with_capacity_and_hasher(cap, Default::default());
        for (m1, c1) in &small.terms {
            let k1 = self.pack(m1);
            let c1 = c1.to_i128().expect("fits by check");
            for &(k2, b2, c2) in &large_keys {
                if m1.beta + b2 > n {
                    continue;
                }
                *map.entry(k1 + k2).or_insert(0) += c1 * c2;
            }
        }
        let mut entries: Vec<(u64, u128, i128)> = map
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(key, c)| {
                let (total, key) = self.order_key(key);
                (total, key, c)
            })
            .collect();
        entries.sort_unstable();
        let terms = entries
            .into_iter()
            .map(|(_, key, c)| (self.unpack(key, ctx.d(), ctx.b_vars()), BigInt::from(c)))
            .collect();
        Polynomial { ctx, terms }
    }

    fn mul_big(&self, ctx: RingContext, small: &Polynomial, large: &Polynomial, n: u32) -> Polynomial {
        type KeyMap = std::collections::HashMap<u128, BigInt, std::hash::BuildHasherDefault<KeyHasher>>;
        let large_keys: Vec<(u128, u32, &BigInt)> =
            large.terms.iter().map(|(m, c)| (self.pack(m), m.beta, c)).collect();
        let mut map = KeyMap::with_capacity_and_hasher(
            large.terms.len().max(small.terms.len()) * 2,
            Default::default(),
        );
        for (m1, c1) in &small.terms {
            let k1 = self.pack(m1);
            for &(k2, b2, c2) in &large_keys {
                if m1.beta + b2 > n {
                    continue;
                }
                *map.entry(k1 + k2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        let mut entries: Vec<(u64, u128, BigInt)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(key, c)| {
                let (total, key) = self.order_key(key);
                (total, key, c)
            })
            .collect();
        entries.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let terms = entries
            .into_iter()
            .map(|(_, key, c)| (self.unpack(key, ctx.d(), ctx.b_vars()), c))
            .collect();
        Polynomial { ctx, terms }
    }
}

/// Mixing hasher for packed monomial keys (splitmix64 over folded halves);
/// the default SipHash costs noticeably in the multiplication inner loop.
#[derive(Default)]
struct KeyHasher(u64);

impl std::hash::Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &byte in bytes {
            self.0 = (self.0 ^ byte as u64).wrapping_mul(0x100000001b3);
        }
    }

    fn write_u64(&mut self, v: u64) {
        let mut z = v.wrapping_mul(0x9e3779b97f4a7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        self.0 = z ^ (z >> 31);
    }

    fn write_u128(&mut self, v: u128) {
        let mut z = (v as u64) ^ ((v >> 64) as u64).wrapping_mul(0x9e3779b97f4a7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        self.0 = z ^ (z >> 31);
    }
}

// Operator impls panic on context mismatch; the checked_* methods report it.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> RingContext {
        RingContext::new(2, 1, 2).unwrap()
    }

    #[test]
    fn make_basic_elements() {
        let c = ctx();
        assert_eq!(Polynomial::one(c).to_string(), "1");
        assert_eq!(Polynomial::x_var(c, 1).unwrap().to_string(), "1*x1");
        assert_eq!(Polynomial::constant(c, -3).to_string(), "-3");
        assert!(Polynomial::x_var(c, 3).is_err());
        assert!(Polynomial::b_var(c, 2).is_err());
    }

    #[test]
    fn add_cancels() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        assert!((&x1 + &x1.negate()).is_zero());
    }

    #[test]
    fn mul_truncates_beta() {
        let c = ctx(); // N = 2
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let beta = Polynomial::beta(c);
        let bn_x1 = &beta.pow(2) * &x1;
        assert!((&bn_x1 * &beta).is_zero());
    }

    #[test]
    fn mul_expands_and_collects() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let one = Polynomial::one(c);
        let bx = &Polynomial::beta(c) * &x1;
        let p = &one + &bx;
        let q = &one - &bx;
        let expect = &one - &bx.pow(2);
        assert_eq!(&p * &q, expect);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = Polynomial::one(ctx());
        let b = Polynomial::one(RingContext::new(2, 1, 3).unwrap());
        assert!(matches!(a.checked_add(&b), Err(Error::ContextMismatch(_, _))));
    }

    #[test]
    fn unit_inverse_geometric() {
        let c = ctx(); // N = 2
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let one = Polynomial::one(c);
        let bx = &Polynomial::beta(c) * &x1;
        let u = &one + &bx;
        let inv = u.unit_inverse().unwrap();
        assert_eq!(inv, &(&one - &bx) + &bx.pow(2));
        assert!((&u * &inv).is_one());
        assert!(one.unit_inverse().unwrap().is_one());
        let b1 = Polynomial::b_var(c, 1).unwrap();
        let ub = &one + &(&Polynomial::beta(c) * &b1);
        assert!((&ub.unit_inverse().unwrap() * &ub).is_one());
    }

    #[test]
    fn unit_inverse_rejects_non_units() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let one = Polynomial::one(c);
        assert!(matches!(x1.unit_inverse(), Err(Error::NotAUnit(_))));
        assert!(matches!((&one + &x1).unit_inverse(), Err(Error::NotAUnit(_))));
        assert!(matches!(Polynomial::constant(c, 2).unit_inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn exact_div_difference_of_squares() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let x2 = Polynomial::x_var(c, 2).unwrap();
        let num = &x1.pow(2) - &x2.pow(2);
        let den = &x1 - &x2;
        assert_eq!(num.exact_div(&den).unwrap(), &x1 + &x2);
    }

    #[test]
    fn exact_div_reports_witness() {
        let c = ctx();
        let x1 = Polynomial::x_var(c, 1).unwrap();
        let x2 = Polynomial::x_var(c, 2).unwrap();
        match x1.exact_div(&x2) {
            Err(Error::NotDivisible { witness }) => assert_eq!(witness, "x1"),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
        assert!(matches!(x1.exact_div(&Polynomial::zero(c)), Err(Error::DivisionByZero)));
    }
}
