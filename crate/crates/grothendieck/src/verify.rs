//! Identity-verification suites and machine-readable reports.
//!
//! Every check compares two exactly-computed ring elements (or series
//! windows) and records a pass/fail line; a failure always carries the
//! first differing monomial with both coefficients as a witness.

use crate::error::Error;
use crate::formulas::{
    bialternant, build_hm_matrix, build_himn_matrix, build_m, build_mbar, factorial_power,
    gen_binomial, hm_determinant, himn_determinant, oplus, vandermonde, IndexVector, Partition,
};
use crate::ring::{determinant, Polynomial, RingContext, VarRef};
use crate::series::{
    bar, beta_unit_product, e_series, ebar_series, geometric, inv_u_beta_series, shift_substitute,
    GkFamily, LaurentSeries, USubst,
};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Pass/fail record per identity, echoing the ring dimensions of the run.
/// Serialization is deterministic: checks appear in sweep order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub d: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(ctx: RingContext) -> Self {
        VerificationReport {
            d: ctx.d(),
            b: ctx.b_vars(),
            n: ctx.beta_trunc(),
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    fn push_poly_eq(&mut self, name: &str, params: String, lhs: &Polynomial, rhs: &Polynomial) {
        match lhs.first_difference(rhs) {
            None => self.checks.push(Check {
                name: name.into(),
                params,
                status: CheckStatus::Pass,
                witness: None,
            }),
            Some((m, cl, cr)) => self.checks.push(Check {
                name: name.into(),
                params,
                status: CheckStatus::Fail,
                witness: Some(Witness {
                    monomial: m.to_string(),
                    lhs: cl.to_string(),
                    rhs: cr.to_string(),
                }),
            }),
        }
    }

    /// Compare two series on the intersection of their guaranteed windows.
    fn push_series_eq(
        &mut self,
        name: &str,
        params: String,
        lhs: &LaurentSeries,
        rhs: &LaurentSeries,
    ) {
        let lo = lhs.lo().max(rhs.lo());
        let hi = lhs.hi().min(rhs.hi());
        for m in lo..=hi {
            let a = lhs.coeff(m).expect("inside window");
            let b = rhs.coeff(m).expect("inside window");
            if let Some((mono, cl, cr)) = a.first_difference(&b) {
                self.checks.push(Check {
                    name: name.into(),
                    params: format!("{params}, u^{m}"),
                    status: CheckStatus::Fail,
                    witness: Some(Witness {
                        monomial: mono.to_string(),
                        lhs: cl.to_string(),
                        rhs: cr.to_string(),
                    }),
                });
                return;
            }
        }
        self.checks.push(Check {
            name: name.into(),
            params: format!("{params}, window [{lo}, {hi}]"),
            status: CheckStatus::Pass,
            witness: None,
        });
    }

    fn push_int_eq(&mut self, name: &str, params: String, lhs: &BigInt, rhs: &BigInt, at: String) {
        if lhs == rhs {
            self.checks.push(Check {
                name: name.into(),
                params,
                status: CheckStatus::Pass,
                witness: None,
            });
        } else {
            self.checks.push(Check {
                name: name.into(),
                params,
                status: CheckStatus::Fail,
                witness: Some(Witness {
                    monomial: at,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            });
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "context: d={}, B={}, N={}", self.d, self.b, self.n)?;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => writeln!(f, "PASS {} [{}]", c.name, c.params)?,
                CheckStatus::Fail => {
                    let w = c.witness.as_ref().expect("failing check carries a witness");
                    writeln!(
                        f,
                        "FAIL {} [{}] at {}: lhs={} rhs={}",
                        c.name, c.params, w.monomial, w.lhs, w.rhs
                    )?;
                }
            }
        }
        let failed = self.checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Run the three formulas for one index vector, compare them pairwise, and
/// re-run at `N+1` to confirm the results stabilize on overlap.
pub fn verify_theorem(
    d: usize,
    a: &[i64],
    beta_trunc: Option<usize>,
) -> Result<VerificationReport, Error> {
    let a = IndexVector::new(a.to_vec())?;
    if a.d() != d {
        return Err(Error::BadIndexVector(format!(
            "index vector has length {}, expected d = {d}",
            a.d()
        )));
    }
    let ctx = a.context(beta_trunc)?;
    let mut report = VerificationReport::new(ctx);
    let params = format!("d={d}, a={:?}, N={}", a.parts(), ctx.beta_trunc());

    let alt = bialternant(ctx, &a)?;
    let hm = hm_determinant(ctx, &a)?;
    let himn = himn_determinant(ctx, &a)?;
    report.push_poly_eq("theorem.bialternant_eq_hm", params.clone(), &alt, &hm);
    report.push_poly_eq("theorem.bialternant_eq_himn", params.clone(), &alt, &himn);
    report.push_poly_eq("theorem.hm_eq_himn", params.clone(), &hm, &himn);

    let up = ctx.with_beta_trunc(ctx.beta_trunc() + 1);
    for (name, lhs, recompute) in [
        ("stabilization.bialternant", &alt, bialternant(up, &a)?),
        ("stabilization.hm", &hm, hm_determinant(up, &a)?),
        ("stabilization.himn", &himn, himn_determinant(up, &a)?),
    ] {
        report.push_poly_eq(name, params.clone(), lhs, &recompute.reinterpret(ctx)?);
    }
    Ok(report)
}

/// All partitions with largest part at most `max_part` and length at most
/// `d`, in a fixed (lexicographic) sweep order. Includes the empty shape.
pub fn partitions_up_to(d: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(d: usize, bound: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(current.clone()).expect("built weakly decreasing"));
        if current.len() == d {
            return;
        }
        for p in (1..=bound).rev() {
            current.push(p);
            recurse(d, p, current, out);
            current.pop();
        }
    }
    recurse(d, max_part, &mut current, &mut out);
    out.sort_by(|x, y| {
        let kx: Vec<usize> = x.parts().to_vec();
        let ky: Vec<usize> = y.parts().to_vec();
        (kx.iter().sum::<usize>(), kx).cmp(&(ky.iter().sum::<usize>(), ky))
    });
    out
}

/// The right side of the first proof identity:
/// `1/(1+beta u^{-1}) * 1/(1-x_j u) * prod_i (1+beta x_i)
///  * prod_{l<=k} (1 - bar(b_l) u) / (1 + beta bar(b_l))`.
fn eq4_rhs(ctx: RingContext, k: usize, j: usize, m_max: i64) -> Result<LaurentSeries, Error> {
    let mut exact = inv_u_beta_series(ctx).scale(&beta_unit_product(ctx)?)?;
    exact = mul_bbar_factors(ctx, k, exact)?;
    let xj = Polynomial::x_var(ctx, j)?;
    exact.mul(&geometric(ctx, &xj, m_max + ctx.beta_trunc() as i64)?)
}

/// The right side of the second proof identity: as above but with the
/// `(1+beta x_j)` numerator instead of the full product over `i`.
fn eq6_rhs(ctx: RingContext, k: usize, j: usize, m_max: i64) -> Result<LaurentSeries, Error> {
    let xj = Polynomial::x_var(ctx, j)?;
    let unit = Polynomial::one(ctx).checked_add(&Polynomial::beta(ctx).checked_mul(&xj)?)?;
    let mut exact = inv_u_beta_series(ctx).scale(&unit)?;
    exact = mul_bbar_factors(ctx, k, exact)?;
    exact.mul(&geometric(ctx, &xj, m_max + ctx.beta_trunc() as i64)?)
}

fn mul_bbar_factors(
    ctx: RingContext,
    k: usize,
    mut acc: LaurentSeries,
) -> Result<LaurentSeries, Error> {
    for l in 1..=k {
        let bbar = bar(ctx, VarRef::B(l))?;
        let unit = Polynomial::one(ctx).checked_add(&Polynomial::beta(ctx).checked_mul(&bbar)?)?;
        let factor = LaurentSeries::polynomial(ctx, vec![Polynomial::one(ctx), bbar.negate()])?;
        acc = acc.mul(&factor)?.scale(&unit.unit_inverse()?)?;
    }
    Ok(acc)
}

fn mat_mul(
    a: &[Vec<Polynomial>],
    b: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>, Error> {
    let n = a.len();
    let ctx = a[0][0].ctx();
    let mut out = vec![vec![Polynomial::zero(ctx); n]; n];
    for i in 0..n {
        for j in 0..n {
            for (t, row_b) in b.iter().enumerate() {
                if !a[i][t].is_zero() && !row_b[j].is_zero() {
                    out[i][j] = out[i][j].checked_add(&a[i][t].checked_mul(&row_b[j])?)?;
                }
            }
        }
    }
    Ok(out)
}

/// Sweep over the identities behind the theorem's proof: the two series
/// identities and their coefficient forms, the determinants of `M` and
/// `Mbar`, the entry formulas for `H*M` and `H'*Mbar`, the binomial
/// convolution, and the `bar`/`oplus` inversion.
pub fn verify_proof_suite(
    d: usize,
    k_max: usize,
    beta_trunc: usize,
) -> Result<VerificationReport, Error> {
    let ctx = RingContext::new(d, k_max + d - 1, beta_trunc)?;
    let n = beta_trunc as i64;
    let mut report = VerificationReport::new(ctx);
    let beta = Polynomial::beta(ctx);
    let unit_prod = beta_unit_product(ctx)?;

    for k in 0..=k_max {
        let m_max = k as i64 + 3;
        let family = GkFamily::new(ctx, m_max)?;
        let g = family.series(k)?;
        for j in 1..=d {
            let kj = format!("d={d}, k={k}, j={j}, N={beta_trunc}");

            // series identity for G(u) E(-u)
            let e_neg = shift_substitute(&e_series(ctx, j)?, USubst::NegU)?;
            let lhs4 = g.mul(&e_neg)?;
            let rhs4 = eq4_rhs(ctx, k, j, m_max)?;
            report.push_series_eq("proof.gE_series", kj.clone(), &lhs4, &rhs4);

            // its coefficient form, for m >= k
            let e = e_series(ctx, j)?;
            let xj = Polynomial::x_var(ctx, j)?;
            let unit_others = unit_prod.exact_div(
                &Polynomial::one(ctx).checked_add(&beta.checked_mul(&xj)?)?,
            )?;
            let fp = factorial_power(ctx, &xj, k)?;
            for m in k as i64..=k as i64 + 3 {
                let mut lhs = Polynomial::zero(ctx);
                for p in 0..d as i64 {
                    let gc = g.coeff(m - p).expect("window");
                    let ep = e.coeff(p).expect("e-series is exact");
                    let term = gc.checked_mul(&ep)?;
                    lhs = if p % 2 == 0 {
                        lhs.checked_add(&term)?
                    } else {
                        lhs.checked_sub(&term)?
                    };
                }
                let rhs = xj.pow((m - k as i64) as u32).checked_mul(&fp)?.checked_mul(&unit_others)?;
                report.push_poly_eq("proof.gE_coefficient", format!("{kj}, m={m}"), &lhs, &rhs);
            }

            // series identity for G(u) Ebar(-u-beta)
            let ebar_shift = shift_substitute(&ebar_series(ctx, j)?, USubst::NegUMinusBeta)?;
            let lhs6 = g.mul(&ebar_shift)?;
            let rhs6 = eq6_rhs(ctx, k, j, m_max)?;
            report.push_series_eq("proof.gEbar_series", kj.clone(), &lhs6, &rhs6);

            // its coefficient form, for m >= k
            let ebar = ebar_series(ctx, j)?;
            for m in k as i64..=k as i64 + 3 {
                let mut lhs = Polynomial::zero(ctx);
                for p in 0..d as i64 {
                    let ep = ebar.coeff(p).expect("ebar-series is exact");
                    if ep.is_zero() {
                        continue;
                    }
                    let mut inner = Polynomial::zero(ctx);
                    for s in 0..=p {
                        let c = gen_binomial(p, s);
                        if c.is_zero() {
                            continue;
                        }
                        let gc = g.coeff(m - p + s).expect("window");
                        inner = inner.checked_add(&gc.checked_mul(&beta.pow(s as u32))?.scale(c))?;
                    }
                    let term = inner.checked_mul(&ep)?;
                    lhs = if p % 2 == 0 {
                        lhs.checked_add(&term)?
                    } else {
                        lhs.checked_sub(&term)?
                    };
                }
                let rhs = xj.pow((m - k as i64) as u32).checked_mul(&fp)?;
                report.push_poly_eq("proof.gEbar_coefficient", format!("{kj}, m={m}"), &lhs, &rhs);
            }
        }
    }

    // det M and det Mbar
    let params = format!("d={d}, N={beta_trunc}");
    let vdm = vandermonde(ctx)?;
    let det_m = determinant(&build_m(ctx)?)?;
    report.push_poly_eq("proof.det_M", params.clone(), &det_m, &vdm);
    let det_mbar = determinant(&build_mbar(ctx)?)?;
    let mut expected_mbar = vdm.clone();
    for i in 1..=d {
        let unit = Polynomial::one(ctx)
            .checked_add(&beta.checked_mul(&Polynomial::x_var(ctx, i)?)?)?;
        expected_mbar = expected_mbar.checked_mul(&unit.unit_inverse_pow(d as u32 - 1)?)?;
    }
    report.push_poly_eq("proof.det_Mbar", params.clone(), &det_mbar, &expected_mbar);

    // entry formulas for H*M and H'*Mbar on a small set of index vectors
    let mut index_set = vec![IndexVector::new(vec![0; d])?];
    if k_max > 0 {
        let mut staircase = vec![0i64; d];
        staircase[0] = k_max as i64;
        index_set.push(IndexVector::new(staircase)?);
    }
    let m_mat = build_m(ctx)?;
    let mbar_mat = build_mbar(ctx)?;
    for a in &index_set {
        let pa = format!("d={d}, a={:?}, N={beta_trunc}", a.parts());
        let hm = mat_mul(&build_hm_matrix(ctx, a)?, &m_mat)?;
        let hp = mat_mul(&build_himn_matrix(ctx, a)?, &mbar_mat)?;
        for i in 1..=d {
            for j in 1..=d {
                let xj = Polynomial::x_var(ctx, j)?;
                let unit = Polynomial::one(ctx).checked_add(&beta.checked_mul(&xj)?)?;
                let fp = factorial_power(ctx, &xj, a.level(i))?;
                // (HM)_ij = [x_j|b]^{a_i+d-i} (1+beta x_j)^{i-d-1} prod_t (1+beta x_t)
                let expect_hm = fp
                    .checked_mul(&unit.unit_inverse_pow((d + 1 - i) as u32)?)?
                    .checked_mul(&unit_prod)?;
                report.push_poly_eq(
                    "proof.HM_entry",
                    format!("{pa}, i={i}, j={j}"),
                    &hm[i - 1][j - 1],
                    &expect_hm,
                );
                // (H' Mbar)_ij = [x_j|b]^{a_i+d-i} (1+beta x_j)^{i-d}
                let expect_hp = if i >= d {
                    fp.clone()
                } else {
                    fp.checked_mul(&unit.unit_inverse_pow((d - i) as u32)?)?
                };
                report.push_poly_eq(
                    "proof.HpMbar_entry",
                    format!("{pa}, i={i}, j={j}"),
                    &hp[i - 1][j - 1],
                    &expect_hp,
                );
            }
        }
    }

    // binomial convolution used to pass between the two coefficient forms
    for i in 1..=d as i64 {
        for p in 0..d as i64 {
            for s in 0..=n {
                let lhs = gen_binomial(i - d as i64 + p, s);
                let mut rhs = BigInt::zero();
                for l in 0..=s {
                    rhs += gen_binomial(i - d as i64, l) * gen_binomial(p, s - l);
                }
                report.push_int_eq(
                    "proof.binomial_convolution",
                    format!("i={i}, p={p}, s={s}"),
                    &lhs,
                    &rhs,
                    format!("C({}, {s})", i - d as i64 + p),
                );
            }
        }
    }

    // (x - bar(y)) / (1 + beta bar(y)) = x (+) y
    if ctx.b_vars() >= 1 {
        let x1 = Polynomial::x_var(ctx, 1)?;
        let b1 = Polynomial::b_var(ctx, 1)?;
        let bbar = bar(ctx, VarRef::B(1))?;
        let unit = Polynomial::one(ctx).checked_add(&beta.checked_mul(&bbar)?)?;
        let lhs = x1.checked_sub(&bbar)?.checked_mul(&unit.unit_inverse()?)?;
        report.push_poly_eq(
            "proof.oplus_bar_inverse",
            format!("d={d}, N={beta_trunc}"),
            &lhs,
            &oplus(&x1, &b1)?,
        );
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_d1() {
        let report = verify_theorem(1, &[3], None).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn theorem_d2_10() {
        let report = verify_theorem(2, &[1, 0], None).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn theorem_rejects_bad_index_vector() {
        assert!(matches!(verify_theorem(2, &[0, -1], None), Err(Error::BadIndexVector(_))));
        assert!(matches!(verify_theorem(3, &[1, 0], None), Err(Error::BadIndexVector(_))));
    }

    #[test]
    fn proof_suite_degenerate() {
        // d = 1, k = 0, N = 0: E^(1) = 1 and everything collapses
        let report = verify_proof_suite(1, 0, 0).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn proof_suite_d2() {
        let report = verify_proof_suite(2, 2, 4).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.len() >= 40, "only {} checks", report.checks.len());
    }

    #[test]
    fn partition_sweep_is_complete_and_ordered() {
        let ps = partitions_up_to(2, 2);
        let shapes: Vec<Vec<usize>> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            shapes,
            vec![
                vec![],
                vec![1],
                vec![1, 1],
                vec![2],
                vec![2, 1],
                vec![2, 2],
            ]
        );
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = verify_theorem(1, &[2], None).unwrap();
        let s = report.to_json_string();
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json_string(), s);
    }
}
