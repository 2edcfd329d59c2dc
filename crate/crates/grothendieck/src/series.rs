//! Truncated Laurent series in `u` with polynomial coefficients, and the
//! generating functions built from them.
//!
//! Every series carries its guaranteed-exact window `[lo, hi]` plus two
//! flags recording whether coefficients outside the window are known to be
//! zero. Multiplication intersects windows so that no coefficient beyond
//! exactness is ever compared.

use crate::error::Error;
use crate::ring::{Polynomial, RingContext, VarRef};
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    ctx: RingContext,
    lo: i64,
    coeffs: Vec<Polynomial>,
    /// Coefficients above `hi` are identically zero (u-polynomial tail).
    exact_above: bool,
    /// Coefficients below `lo` are identically zero in R.
    exact_below: bool,
}

impl LaurentSeries {
    pub fn from_window(
        ctx: RingContext,
        lo: i64,
        coeffs: Vec<Polynomial>,
        exact_below: bool,
        exact_above: bool,
    ) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyWindow);
        }
        for c in &coeffs {
            ctx.check_same(&c.ctx())?;
        }
        Ok(LaurentSeries { ctx, lo, coeffs, exact_above, exact_below })
    }

    /// A u-polynomial with the given coefficients for `u^0, u^1, ...`;
    /// exact everywhere.
    pub fn polynomial(ctx: RingContext, coeffs: Vec<Polynomial>) -> Result<Self, Error> {
        LaurentSeries::from_window(ctx, 0, coeffs, true, true)
    }

    pub fn constant(ctx: RingContext, p: Polynomial) -> Self {
        LaurentSeries::polynomial(ctx, vec![p]).expect("nonempty")
    }

    pub fn one(ctx: RingContext) -> Self {
        LaurentSeries::constant(ctx, Polynomial::one(ctx))
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn exact_above(&self) -> bool {
        self.exact_above
    }

    pub fn exact_below(&self) -> bool {
        self.exact_below
    }

    /// The coefficient of `u^m`, when it is determined: inside the window,
    /// or outside on a side flagged exact (where it is zero).
    pub fn coeff(&self, m: i64) -> Option<Polynomial> {
        if m < self.lo {
            return self.exact_below.then(|| Polynomial::zero(self.ctx));
        }
        if m > self.hi() {
            return self.exact_above.then(|| Polynomial::zero(self.ctx));
        }
        Some(self.coeffs[(m - self.lo) as usize].clone())
    }

    fn coeff_ref(&self, m: i64) -> Option<&Polynomial> {
        if m < self.lo || m > self.hi() {
            return None;
        }
        Some(&self.coeffs[(m - self.lo) as usize])
    }

    /// Exact convolution on the intersection of the guaranteed windows.
    pub fn mul(&self, other: &LaurentSeries) -> Result<LaurentSeries, Error> {
        self.ctx.check_same(&other.ctx)?;
        let lo = self.lo + other.lo;
        let full = self.hi() + other.hi();
        // A side with an unknown tail contaminates everything above the
        // other side's lowest exponent plus its own hi.
        let mut hi = full;
        if !other.exact_above {
            hi = hi.min(self.lo + other.hi());
        }
        if !self.exact_above {
            hi = hi.min(other.lo + self.hi());
        }
        if hi < lo {
            return Err(Error::EmptyWindow);
        }
        let mut coeffs = Vec::with_capacity((hi - lo + 1) as usize);
        for m in lo..=hi {
            let mut acc = Polynomial::zero(self.ctx);
            for i in self.lo..=self.hi() {
                let j = m - i;
                if let (Some(a), Some(b)) = (self.coeff_ref(i), other.coeff_ref(j)) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
            }
            coeffs.push(acc);
        }
        LaurentSeries::from_window(
            self.ctx,
            lo,
            coeffs,
            self.exact_below && other.exact_below,
            self.exact_above && other.exact_above,
        )
    }

    /// Forget the coefficients above `hi` (and the exact-above guarantee,
    /// if any). Useful before a multiplication whose high coefficients are
    /// not needed.
    pub fn restrict_hi(&self, hi: i64) -> Result<LaurentSeries, Error> {
        if hi >= self.hi() {
            return Ok(self.clone());
        }
        if hi < self.lo {
            return Err(Error::EmptyWindow);
        }
        let coeffs = self.coeffs[..(hi - self.lo + 1) as usize].to_vec();
        LaurentSeries::from_window(self.ctx, self.lo, coeffs, self.exact_below, false)
    }

    /// Multiply every coefficient by a fixed ring element.
    pub fn scale(&self, p: &Polynomial) -> Result<LaurentSeries, Error> {
        self.ctx.check_same(&p.ctx())?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(p))
            .collect::<Result<Vec<_>, _>>()?;
        LaurentSeries::from_window(self.ctx, self.lo, coeffs, self.exact_below, self.exact_above)
    }
}

/// The substitution applied to the `u` variable of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum USubst {
    /// `u -> -u`
    NegU,
    /// `u -> -u - beta`; only defined on u-polynomials.
    NegUMinusBeta,
}

pub fn shift_substitute(f: &LaurentSeries, form: USubst) -> Result<LaurentSeries, Error> {
    let ctx = f.ctx();
    match form {
        USubst::NegU => {
            let coeffs = f
                .coeffs
                .iter()
                .enumerate()
                .map(|(idx, c)| {
                    let m = f.lo + idx as i64;
                    if m.rem_euclid(2) == 0 {
                        c.clone()
                    } else {
                        c.negate()
                    }
                })
                .collect();
            LaurentSeries::from_window(ctx, f.lo, coeffs, f.exact_below, f.exact_above)
        }
        USubst::NegUMinusBeta => {
            if f.lo < 0 || !f.exact_above {
                return Err(Error::ShiftOnLaurent);
            }
            // (-u-beta)^p = sum_t C(p,t) (-1)^p u^t beta^{p-t}
            let deg = f.hi();
            let beta = Polynomial::beta(ctx);
            let mut out = vec![Polynomial::zero(ctx); (deg + 1) as usize];
            for (idx, c) in f.coeffs.iter().enumerate() {
                let p = (f.lo + idx as i64) as u32;
                if c.is_zero() {
                    continue;
                }
                let sign = if p % 2 == 0 { 1 } else { -1 };
                for t in 0..=p {
                    let coef = crate::formulas::gen_binomial(p as i64, t as i64) * sign;
                    let term = c.scale(coef).checked_mul(&beta.pow(p - t))?;
                    out[t as usize] = out[t as usize].checked_add(&term)?;
                }
            }
            LaurentSeries::polynomial(ctx, out)
        }
    }
}

/// The expansion of `1/(1 + beta u^{-1})` as `sum_{s=0}^{N} (-beta)^s u^{-s}`;
/// exact everywhere since higher terms vanish in R.
pub fn inv_u_beta_series(ctx: RingContext) -> LaurentSeries {
    let n = ctx.beta_trunc();
    let beta = Polynomial::beta(ctx);
    let mut coeffs = Vec::with_capacity(n + 1);
    for s in (0..=n).rev() {
        let sign = if s % 2 == 0 { 1 } else { -1 };
        coeffs.push(beta.pow(s as u32).scale(sign));
    }
    LaurentSeries::from_window(ctx, -(n as i64), coeffs, true, true).expect("nonempty")
}

/// Geometric series `sum_{p=0}^{hi} ratio^p u^p`; the tail beyond `hi` is
/// unknown (nonzero), so `exact_above` is false.
pub fn geometric(ctx: RingContext, ratio: &Polynomial, hi: i64) -> Result<LaurentSeries, Error> {
    ctx.check_same(&ratio.ctx())?;
    let mut coeffs = Vec::with_capacity((hi.max(0) + 1) as usize);
    let mut pow = Polynomial::one(ctx);
    coeffs.push(pow.clone());
    for _ in 0..hi {
        pow = pow.checked_mul(ratio)?;
        coeffs.push(pow.clone());
    }
    LaurentSeries::from_window(ctx, 0, coeffs, true, false)
}

/// The formal-group inverse image of a variable: `bar(y) = -y / (1 + beta y)`,
/// a genuine polynomial in R.
pub fn bar(ctx: RingContext, v: VarRef) -> Result<Polynomial, Error> {
    let y = match v {
        VarRef::X(i) => Polynomial::x_var(ctx, i)?,
        VarRef::B(j) => Polynomial::b_var(ctx, j)?,
    };
    let unit = Polynomial::one(ctx).checked_add(&Polynomial::beta(ctx).checked_mul(&y)?)?;
    y.negate().checked_mul(&unit.unit_inverse()?)
}

/// `E^{(j)}(u) = prod_{i != j} (1 + x_i u)`, a u-polynomial of degree d-1.
pub fn e_series(ctx: RingContext, j: usize) -> Result<LaurentSeries, Error> {
    if j == 0 || j > ctx.d() {
        return Err(Error::IndexOutOfRange(format!("j = {j} with d = {}", ctx.d())));
    }
    let mut out = LaurentSeries::one(ctx);
    for i in 1..=ctx.d() {
        if i == j {
            continue;
        }
        let factor = LaurentSeries::polynomial(
            ctx,
            vec![Polynomial::one(ctx), Polynomial::x_var(ctx, i)?],
        )?;
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// `Ebar^{(j)}(u) = prod_{i != j} (1 - bar(x_i) u)`.
pub fn ebar_series(ctx: RingContext, j: usize) -> Result<LaurentSeries, Error> {
    if j == 0 || j > ctx.d() {
        return Err(Error::IndexOutOfRange(format!("j = {j} with d = {}", ctx.d())));
    }
    let mut out = LaurentSeries::one(ctx);
    for i in 1..=ctx.d() {
        if i == j {
            continue;
        }
        let factor = LaurentSeries::polynomial(
            ctx,
            vec![Polynomial::one(ctx), bar(ctx, VarRef::X(i))?.negate()],
        )?;
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// Shared `k`-independent part of `G^{(k)}(u)`: the expansion of
/// `1/(1 + beta u^{-1}) * prod_i (1 + beta x_i)/(1 - x_i u)`, exact on
/// `[-N, m_max]` and identically zero below `-N`.
///
/// Building the product naively keeps huge intermediate polynomials alive;
/// instead the coefficients `T_m` are produced top-down by the recurrence
/// `T_m = (P h)_m - beta T_{m+1}` (with `P = prod(1+beta x_i)` and `h_m` the
/// complete homogeneous polynomial), which lets the telescoping cancellation
/// happen as we go.
pub struct GkFamily {
    /// `folds[q-1]` is `(1 + beta u^{-1})^{-q} prod_i (1+beta x_i)/(1-x_i u)`,
    /// exact on `[-N, m_max - (q-1) N]`; `folds[0]` is the core above.
    folds: Vec<LaurentSeries>,
}

impl GkFamily {
    pub fn new(ctx: RingContext, m_max: i64) -> Result<Self, Error> {
        Self::with_folds(ctx, m_max, 1)
    }

    /// Like `new`, but also precomputes the deeper negative unit powers
    /// `(1 + beta u^{-1})^{-q}` of the core for `q` up to `folds`, each
    /// exact on the same window `[-N, m_max]`.
    ///
    /// Writing `F = P h` for the product without the unit power, the `q`-th
    /// fold is `(1 + beta u^{-1})^{-q} F`, whose coefficients expand as
    /// `T^{(q)}_m = sum_s C(-q, s) beta^s F_{m+s}` -- a finite sum, since
    /// `beta^s` dies past the truncation order. That gives the top
    /// coefficient of each fold directly; the rest follow downward from
    /// `T^{(q)}_m = T^{(q-1)}_m - beta T^{(q)}_{m+1}` (with `T^{(0)} = F`).
    ///
    /// The `exact_below` claim on each fold holds because every coefficient
    /// of `T^{(q)}` below `-N` has beta-valuation above the truncation
    /// order and therefore vanishes in R.
    pub fn with_folds(ctx: RingContext, m_max: i64, folds: usize) -> Result<Self, Error> {
        let n = ctx.beta_trunc() as i64;
        if m_max < -n {
            return Err(Error::EmptyWindow);
        }
        let unit_prod = beta_unit_product(ctx)?;
        // F_t = (P h)_t for 0 <= t <= m_max + N; zero for t < 0.
        let mut f_coeffs = Vec::with_capacity((m_max + n + 1).max(0) as usize);
        for t in 0..=(m_max + n) {
            f_coeffs.push(complete_homogeneous(ctx, t as u32).checked_mul(&unit_prod)?);
        }
        let f = |t: i64| -> &Polynomial { &f_coeffs[t as usize] };
        let beta = Polynomial::beta(ctx);
        let len = (m_max + n + 1) as usize;
        let mut chain: Vec<LaurentSeries> = Vec::with_capacity(folds.max(1));
        for q in 1..=folds.max(1) as i64 {
            // top coefficient at m = m_max by the direct binomial sum
            let mut top = Polynomial::zero(ctx);
            let mut beta_pow = Polynomial::one(ctx);
            for s in 0..=n {
                if s > 0 {
                    beta_pow = beta_pow.checked_mul(&beta)?;
                    if beta_pow.is_zero() {
                        break;
                    }
                }
                let c = beta_pow.scale(crate::formulas::gen_binomial(-q, s));
                top = top.checked_add(&c.checked_mul(f(m_max + s))?)?;
            }
            // then downward by the recurrence against the previous fold
            let mut coeffs = vec![Polynomial::zero(ctx); len];
            coeffs[len - 1] = top;
            for m in (-n..m_max).rev() {
                let prev = match chain.last() {
                    Some(series) => series.coeff_ref(m).expect("inside window").clone(),
                    None if m >= 0 => f(m).clone(),
                    None => Polynomial::zero(ctx),
                };
                let above = &coeffs[(m + 1 + n) as usize];
                coeffs[(m + n) as usize] = prev.checked_sub(&beta.checked_mul(above)?)?;
            }
            chain.push(LaurentSeries::from_window(ctx, -n, coeffs, true, false)?);
        }
        Ok(GkFamily { folds: chain })
    }

    /// `(1 + beta u^{-1})^{-q} prod_i (1+beta x_i)/(1-x_i u)` for
    /// `1 <= q <= folds`.
    pub fn fold(&self, q: usize) -> &LaurentSeries {
        &self.folds[q - 1]
    }

    /// The product `prod_{j<=k} (1 + (u+beta) b_j)` as a u-polynomial.
    pub fn column_factor(ctx: RingContext, k: usize) -> Result<LaurentSeries, Error> {
        if k > ctx.b_vars() {
            return Err(Error::KExceedsB { k, b: ctx.b_vars() });
        }
        let mut out = LaurentSeries::one(ctx);
        for j in 1..=k {
            let b = Polynomial::b_var(ctx, j)?;
            let c0 = Polynomial::one(ctx).checked_add(&Polynomial::beta(ctx).checked_mul(&b)?)?;
            let factor = LaurentSeries::polynomial(ctx, vec![c0, b])?; // 1 + (u+beta)b_j
            out = out.mul(&factor)?;
        }
        Ok(out)
    }

    /// `G^{(k)}(u)` on the window `[-N, m_max]`.
    pub fn series(&self, k: usize) -> Result<LaurentSeries, Error> {
        self.folds[0].mul(&Self::column_factor(self.folds[0].ctx(), k)?)
    }
}

/// `G^{(k)}(u)` with coefficients exact for `-N <= m <= m_max`.
pub fn gk_series(ctx: RingContext, k: usize, m_max: i64) -> Result<LaurentSeries, Error> {
    GkFamily::new(ctx, m_max)?.series(k)
}

/// The coefficient `G_m^{(k)}(x|b)`; zero for `m < -N`.
pub fn g_coeff(ctx: RingContext, k: usize, m: i64) -> Result<Polynomial, Error> {
    if m < -(ctx.beta_trunc() as i64) {
        if k > ctx.b_vars() {
            return Err(Error::KExceedsB { k, b: ctx.b_vars() });
        }
        return Ok(Polynomial::zero(ctx));
    }
    let series = gk_series(ctx, k, m.max(0))?;
    Ok(series.coeff(m).expect("inside guaranteed window"))
}

/// `prod_{i=1}^{d} (1 + beta x_i)`.
pub fn beta_unit_product(ctx: RingContext) -> Result<Polynomial, Error> {
    let beta = Polynomial::beta(ctx);
    let mut out = Polynomial::one(ctx);
    for i in 1..=ctx.d() {
        let f = Polynomial::one(ctx).checked_add(&beta.checked_mul(&Polynomial::x_var(ctx, i)?)?)?;
        out = out.checked_mul(&f)?;
    }
    Ok(out)
}

/// The complete homogeneous symmetric polynomial `h_m(x_1..x_d)`: the sum
/// of all x-monomials of total degree `m`.
pub fn complete_homogeneous(ctx: RingContext, m: u32) -> Polynomial {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; ctx.d()];
    fill_degrees(ctx, &mut exps, 0, m, &mut terms);
    Polynomial::from_distinct_terms(ctx, terms)
}

fn fill_degrees(
    ctx: RingContext,
    exps: &mut Vec<u32>,
    pos: usize,
    rem: u32,
    out: &mut Vec<(crate::ring::Monomial, BigInt)>,
) {
    if pos + 1 == exps.len() {
        exps[pos] = rem;
        out.push((crate::ring::Monomial::x_monomial(ctx, exps), BigInt::one()));
        exps[pos] = 0;
        return;
    }
    for e in 0..=rem {
        exps[pos] = e;
        fill_degrees(ctx, exps, pos + 1, rem - e, out);
    }
    exps[pos] = 0;
}
