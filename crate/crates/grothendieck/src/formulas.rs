//! The three routes to `G_lambda(x|b)` — bi-alternant ratio and the two
//! Jacobi–Trudi style determinants — together with the formal group law
//! `x (+) y = x + y + beta x y`, factorial powers, generalized binomial
//! coefficients, the proof matrices `M` and `Mbar`, and the classical
//! specializations used as oracles.

use crate::error::Error;
use crate::ring::{determinant, Polynomial, RingContext, Substitution};
use crate::series::{e_series, ebar_series, GkFamily, LaurentSeries};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficient of `z^s` in `(1+z)^n` for any integer `n`; zero for `s < 0`.
/// For `n < 0` this is `(-1)^s * C(-n+s-1, s)`.
pub fn gen_binomial(n: i64, s: i64) -> BigInt {
    if s < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if s > n {
            return BigInt::zero();
        }
        binom_nonneg(n as u64, s as u64)
    } else {
        let c = binom_nonneg((-n + s - 1) as u64, s as u64);
        if s % 2 == 0 {
            c
        } else {
            -c
        }
    }
}

fn binom_nonneg(n: u64, s: u64) -> BigInt {
    if s > n {
        return BigInt::zero();
    }
    let k = s.min(n - s);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// A weakly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pad with trailing zeros to length exactly `d`.
    pub fn to_index_vector(&self, d: usize) -> Result<IndexVector, Error> {
        if self.len() > d {
            return Err(Error::BadPartition(format!(
                "partition {:?} has length {} > d = {d}",
                self.parts,
                self.len()
            )));
        }
        let mut a: Vec<i64> = self.parts.iter().take(d).map(|&p| p as i64).collect();
        a.resize(d, 0);
        IndexVector::new(a)
    }
}

/// A vector `a` of `d` integers with `a_i + d - i >= 0`; the generality at
/// which the determinant identities hold. Partitions embed by zero-padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVector {
    a: Vec<i64>,
}

impl IndexVector {
    pub fn new(a: Vec<i64>) -> Result<Self, Error> {
        let d = a.len() as i64;
        if d == 0 {
            return Err(Error::BadIndexVector("empty index vector".into()));
        }
        for (idx, &ai) in a.iter().enumerate() {
            let i = idx as i64 + 1;
            if ai + d - i < 0 {
                return Err(Error::BadIndexVector(format!(
                    "a_{i} + d - {i} = {} < 0",
                    ai + d - i
                )));
            }
        }
        Ok(IndexVector { a })
    }

    pub fn parts(&self) -> &[i64] {
        &self.a
    }

    pub fn d(&self) -> usize {
        self.a.len()
    }

    pub fn is_partition(&self) -> bool {
        self.a.iter().all(|&ai| ai >= 0) && self.a.windows(2).all(|w| w[0] >= w[1])
    }

    /// `a_i + d - i` (1-based `i`): the series level of row `i`.
    pub fn level(&self, i: usize) -> usize {
        (self.a[i - 1] + self.d() as i64 - i as i64) as usize
    }

    pub fn max_level(&self) -> usize {
        (1..=self.d()).map(|i| self.level(i)).max().unwrap()
    }

    /// Safe default truncation order: the beta-degree of each bi-alternant
    /// numerator entry is at most `(a_i + d - i) + (i - 1)`, so `|a| + d(d-1)`
    /// bounds the whole alternant. For non-partition vectors the part sum is
    /// replaced by the sum of the (non-negative) levels.
    pub fn default_beta_trunc(&self) -> usize {
        let d = self.d();
        let size: usize = if self.is_partition() {
            self.a.iter().map(|&ai| ai as usize).sum()
        } else {
            (1..=d).map(|i| self.level(i)).sum()
        };
        size + d * (d - 1)
    }

    /// Context with exactly the b-variables the factorial powers consume.
    pub fn context(&self, beta_trunc: Option<usize>) -> Result<RingContext, Error> {
        RingContext::new(
            self.d(),
            self.max_level(),
            beta_trunc.unwrap_or_else(|| self.default_beta_trunc()),
        )
    }
}

/// The formal group law `p (+) q = p + q + beta p q`.
pub fn oplus(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, Error> {
    let sum = p.checked_add(q)?;
    sum.checked_add(&Polynomial::beta(p.ctx()).checked_mul(&p.checked_mul(q)?)?)
}

/// The factorial power `[y|b]^k = (y (+) b_1) ... (y (+) b_k)`.
pub fn factorial_power(ctx: RingContext, y: &Polynomial, k: usize) -> Result<Polynomial, Error> {
    ctx.check_same(&y.ctx())?;
    if k > ctx.b_vars() {
        return Err(Error::KExceedsB { k, b: ctx.b_vars() });
    }
    let mut out = Polynomial::one(ctx);
    for l in 1..=k {
        out = out.checked_mul(&oplus(y, &Polynomial::b_var(ctx, l)?)?)?;
    }
    Ok(out)
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(ctx: RingContext) -> Result<Polynomial, Error> {
    let mut out = Polynomial::one(ctx);
    for i in 1..=ctx.d() {
        for j in (i + 1)..=ctx.d() {
            let f = Polynomial::x_var(ctx, i)?.checked_sub(&Polynomial::x_var(ctx, j)?)?;
            out = out.checked_mul(&f)?;
        }
    }
    Ok(out)
}

fn check_levels(ctx: RingContext, a: &IndexVector) -> Result<(), Error> {
    if a.d() != ctx.d() {
        return Err(Error::BadIndexVector(format!(
            "index vector length {} does not match d = {}",
            a.d(),
            ctx.d()
        )));
    }
    if a.max_level() > ctx.b_vars() {
        return Err(Error::KExceedsB { k: a.max_level(), b: ctx.b_vars() });
    }
    Ok(())
}

/// The alternating numerator of the bi-alternant: the determinant of the
/// matrix with `(i,j)` entry `[x_j|b]^{a_i+d-i} (1+beta x_j)^{i-1}`.
pub fn bialternant_numerator(ctx: RingContext, a: &IndexVector) -> Result<Polynomial, Error> {
    check_levels(ctx, a)?;
    let d = ctx.d();
    let beta = Polynomial::beta(ctx);
    let mut rows = Vec::with_capacity(d);
    for i in 1..=d {
        let mut row = Vec::with_capacity(d);
        for j in 1..=d {
            let xj = Polynomial::x_var(ctx, j)?;
            let fp = factorial_power(ctx, &xj, a.level(i))?;
            let unit = Polynomial::one(ctx).checked_add(&beta.checked_mul(&xj)?)?;
            row.push(fp.checked_mul(&unit.pow(i as u32 - 1))?);
        }
        rows.push(row);
    }
    determinant(&rows)
}

/// `G_a(x|b)` as the bi-alternant ratio: alternating numerator determinant
/// divided (exactly) by the Vandermonde product.
///
/// Evaluated through divided differences rather than literally: with
/// `f = prod_i [x_i|b]^{a_i+d-i} (1+beta x_i)^{i-1}` the product of the
/// diagonal entries, `det/V = D_{w0} f` where `D_i g = (g - s_i g)/(x_i -
/// x_{i+1})` and the operators follow a reduced word of the longest
/// permutation. Each step keeps intermediates near the size of the final
/// answer, where expanding the full determinant first grows d!-fold before
/// cancelling. `bialternant_numerator` retains the literal matrix; the
/// equality of the two routes is pinned by a unit test.
pub fn bialternant(ctx: RingContext, a: &IndexVector) -> Result<Polynomial, Error> {
    check_levels(ctx, a)?;
    let d = ctx.d();
    let beta = Polynomial::beta(ctx);
    let mut g = Polynomial::one(ctx);
    for i in 1..=d {
        let xi = Polynomial::x_var(ctx, i)?;
        let fp = factorial_power(ctx, &xi, a.level(i))?;
        let unit = Polynomial::one(ctx).checked_add(&beta.checked_mul(&xi)?)?;
        g = g.checked_mul(&fp.checked_mul(&unit.pow(i as u32 - 1))?)?;
    }
    // application sequence read in reverse spells s1 s2 s1 s3 s2 s1 ...,
    // a reduced word for the longest element
    for k in (1..d).rev() {
        for i in 1..=k {
            let denom = Polynomial::x_var(ctx, i)?.checked_sub(&Polynomial::x_var(ctx, i + 1)?)?;
            g = g.checked_sub(&g.swap_x_exponents(i, i + 1))?.exact_div(&denom)?;
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum JacobiTrudiKind {
    /// Binomial upper argument `i - d`.
    Hm,
    /// Binomial upper argument `i - j`.
    Himn,
}

fn jacobi_trudi_matrix(
    ctx: RingContext,
    a: &IndexVector,
    kind: JacobiTrudiKind,
) -> Result<Vec<Vec<Polynomial>>, Error> {
    check_levels(ctx, a)?;
    let d = ctx.d();
    let n = ctx.beta_trunc() as i64;
    let l = a.max_level() as i64;
    // Every entry is one u-coefficient of (1 + beta u^{-1})^c G^{(k_i)}(u)
    // with c = upper binomial argument: the beta-binomial sum over series
    // coefficients is exactly that convolution. Negative c folds into the
    // geometric core (keeping coefficients small); positive c is a short
    // explicit sum. Row i of H uses c = i - d, so fold depth d - i + 1;
    // H' mixes depths 1..=d-i+1 and positive powers.
    let family = GkFamily::with_folds(ctx, l, d)?;
    let beta = Polynomial::beta(ctx);
    let mut rows = Vec::with_capacity(d);
    for i in 1..=d {
        let col_factor = GkFamily::column_factor(ctx, a.level(i))?;
        let max_fold = d - i + 1;
        let folded: Vec<LaurentSeries> = (1..=max_fold)
            .map(|q| family.fold(q).restrict_hi(l)?.mul(&col_factor))
            .collect::<Result<_, _>>()?;
        let mut row = Vec::with_capacity(d);
        for j in 1..=d {
            let m = a.parts()[i - 1] + j as i64 - i as i64;
            let entry = match kind {
                JacobiTrudiKind::Hm => {
                    folded[max_fold - 1].coeff(m).expect("window covers entry index")
                }
                JacobiTrudiKind::Himn if j >= i => {
                    folded[j - i].coeff(m).expect("window covers entry index")
                }
                JacobiTrudiKind::Himn => {
                    // positive power (1 + beta u^{-1})^{i-j} times G^{(k_i)}
                    let p = (i - j) as i64;
                    let mut acc = Polynomial::zero(ctx);
                    let mut bp = Polynomial::one(ctx); // beta^s
                    for s in 0..=p.min(n) {
                        if s > 0 {
                            bp = bp.checked_mul(&beta)?;
                        }
                        let g = folded[0].coeff(m + s).expect("window covers entry index");
                        acc = acc.checked_add(&g.checked_mul(&bp)?.scale(gen_binomial(p, s)))?;
                    }
                    acc
                }
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The matrix `H` with `(i,j)` entry `sum_s C(i-d, s) beta^s G_{a_i+j-i+s}^{(a_i+d-i)}`.
pub fn build_hm_matrix(ctx: RingContext, a: &IndexVector) -> Result<Vec<Vec<Polynomial>>, Error> {
    jacobi_trudi_matrix(ctx, a, JacobiTrudiKind::Hm)
}

/// The matrix `H'` with `(i,j)` entry `sum_s C(i-j, s) beta^s G_{a_i+j-i+s}^{(a_i+d-i)}`.
pub fn build_himn_matrix(ctx: RingContext, a: &IndexVector) -> Result<Vec<Vec<Polynomial>>, Error> {
    jacobi_trudi_matrix(ctx, a, JacobiTrudiKind::Himn)
}

/// `G_a(x|b)` as `det H`.
pub fn hm_determinant(ctx: RingContext, a: &IndexVector) -> Result<Polynomial, Error> {
    determinant(&build_hm_matrix(ctx, a)?)
}

/// `G_a(x|b)` as `det H'`.
pub fn himn_determinant(ctx: RingContext, a: &IndexVector) -> Result<Polynomial, Error> {
    determinant(&build_himn_matrix(ctx, a)?)
}

/// The matrix `M` with `(i,j)` entry `(-1)^{d-i} e_{d-i}^{(j)}(x)`, whose
/// determinant is the Vandermonde product.
pub fn build_m(ctx: RingContext) -> Result<Vec<Vec<Polynomial>>, Error> {
    let d = ctx.d();
    let mut rows = Vec::with_capacity(d);
    let columns: Vec<_> = (1..=d).map(|j| e_series(ctx, j)).collect::<Result<_, _>>()?;
    for i in 1..=d {
        let p = (d - i) as i64;
        let mut row = Vec::with_capacity(d);
        for col in &columns {
            let e = col.coeff(p).expect("e-series is exact");
            row.push(if p % 2 == 0 { e } else { e.negate() });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The matrix `Mbar` with `(i,j)` entry `(-1)^{d-i} e_{d-i}^{(j)}(-bar x)`.
pub fn build_mbar(ctx: RingContext) -> Result<Vec<Vec<Polynomial>>, Error> {
    let d = ctx.d();
    let mut rows = Vec::with_capacity(d);
    let columns: Vec<_> = (1..=d).map(|j| ebar_series(ctx, j)).collect::<Result<_, _>>()?;
    for i in 1..=d {
        let p = (d - i) as i64;
        let mut row = Vec::with_capacity(d);
        for col in &columns {
            let e = col.coeff(p).expect("ebar-series is exact");
            row.push(if p % 2 == 0 { e } else { e.negate() });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `beta -> 0`, `b_j -> 0`: the classical Schur limit.
pub fn schur_specialize(p: &Polynomial) -> Polynomial {
    p.substitute(&all_b_zero(p.ctx()).beta_to_int(0)).expect("valid substitution")
}

/// `beta -> -1`, `b_j -> 0`: the non-factorial Grothendieck polynomial.
pub fn buch_specialize(p: &Polynomial) -> Polynomial {
    p.substitute(&all_b_zero(p.ctx()).beta_to_int(-1)).expect("valid substitution")
}

fn all_b_zero(ctx: RingContext) -> Substitution {
    let mut s = Substitution::new();
    for j in 1..=ctx.b_vars() {
        s = s.b_to_int(j, 0);
    }
    s
}

/// Independent Schur oracle: brute-force sum of content monomials over all
/// semistandard Young tableaux of shape `lambda` with entries in `1..=d`.
pub fn ssyt_schur_oracle(ctx: RingContext, lambda: &Partition) -> Result<Polynomial, Error> {
    let d = ctx.d();
    if lambda.len() > d {
        return Err(Error::BadPartition(format!(
            "shape {:?} has more than d = {d} rows",
            lambda.parts()
        )));
    }
    let shape: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let mut tableau: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    let mut out = Polynomial::zero(ctx);
    fill_cell(&shape, &mut tableau, 0, 0, d, &mut out);
    Ok(out)
}

fn fill_cell(
    shape: &[usize],
    tableau: &mut Vec<Vec<usize>>,
    row: usize,
    col: usize,
    d: usize,
    out: &mut Polynomial,
) {
    if row == shape.len() {
        let mut exps = vec![0u32; d];
        for r in tableau.iter() {
            for &v in r {
                exps[v - 1] += 1;
            }
        }
        out.push_x_monomial(&exps, BigInt::one());
        return;
    }
    let (next_row, next_col) =
        if col + 1 == shape[row] { (row + 1, 0) } else { (row, col + 1) };
    let min_left = if col > 0 { tableau[row][col - 1] } else { 1 };
    let min_above = if row > 0 { tableau[row - 1][col] + 1 } else { 1 };
    for v in min_left.max(min_above)..=d {
        tableau[row][col] = v;
        fill_cell(shape, tableau, next_row, next_col, d, out);
    }
    tableau[row][col] = 0;
}
