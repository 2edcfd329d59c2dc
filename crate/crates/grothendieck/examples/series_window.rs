//! The generating series G^(k)(u) and its guaranteed coefficient window.
//!
//! Coefficients extend infinitely far down in powers of u, but below
//! u^{-N} every coefficient has beta-valuation above the truncation order
//! and vanishes in the quotient ring — so the whole series is exact on a
//! finite window.
//!
//! Run with: `cargo run --release --example series_window`

use grothendieck::ring::RingContext;
use grothendieck::series::{g_coeff, gk_series};
use grothendieck::Error;

fn main() -> Result<(), Error> {
    let ctx = RingContext::new(2, 1, 2)?;
    let k = 1;
    let series = gk_series(ctx, k, 3)?;
    println!(
        "G^({k})(u) over d={}, B={}, N={}: window u^{} .. u^{}",
        ctx.d(),
        ctx.b_vars(),
        ctx.beta_trunc(),
        series.lo(),
        series.hi()
    );
    for m in series.lo()..=series.hi() {
        println!("  [u^{m:>2}] = {}", series.coeff(m).expect("inside window"));
    }

    // single coefficients without materializing the series
    println!("\nG_2^({k}) = {}", g_coeff(ctx, k, 2)?);
    println!("G_(-99)^({k}) = {} (below the window: exactly zero)", g_coeff(ctx, k, -99)?);
    Ok(())
}
