//! The one-row case: G_(k) is a single coefficient of the generating
//! series, and equals the factorial power [x1|b]^k when d = 1.
//!
//! Run with: `cargo run --release --example single_row`

use grothendieck::formulas::{bialternant, factorial_power, IndexVector};
use grothendieck::ring::Polynomial;
use grothendieck::series::g_coeff;
use grothendieck::Error;

fn main() -> Result<(), Error> {
    for d in 1..=3usize {
        for k in 0..=3i64 {
            let mut parts = vec![0i64; d];
            parts[0] = k;
            let a = IndexVector::new(parts)?;
            let ctx = a.context(None)?;
            let row = bialternant(ctx, &a)?;
            let coeff = g_coeff(ctx, k as usize + d - 1, k)?;
            println!(
                "d={d}: G_({k},0,...) == G_{k}^({}): {} ({} terms)",
                k as usize + d - 1,
                row == coeff,
                row.num_terms()
            );
        }
    }

    // with a single x-variable the polynomial is just the factorial power
    let a = IndexVector::new(vec![3])?;
    let ctx = a.context(None)?;
    let x1 = Polynomial::x_var(ctx, 1)?;
    println!("\n[x1|b]^3 = {}", factorial_power(ctx, &x1, 3)?);
    assert_eq!(bialternant(ctx, &a)?, factorial_power(ctx, &x1, 3)?);
    Ok(())
}
