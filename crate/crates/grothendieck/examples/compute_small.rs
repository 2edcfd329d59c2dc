//! Compute one factorial Grothendieck polynomial three independent ways
//! and confirm the results coincide term for term.
//!
//! Run with: `cargo run --release --example compute_small`

use grothendieck::formulas::{bialternant, himn_determinant, hm_determinant, IndexVector};
use grothendieck::Error;

fn main() -> Result<(), Error> {
    // G_(2,1)(x1, x2 | b1, b2, b3) at the default truncation order
    let a = IndexVector::new(vec![2, 1])?;
    let ctx = a.context(None)?;
    println!(
        "ring: Z[x1..x{}, b1..b{}, beta] / (beta^{})",
        ctx.d(),
        ctx.b_vars(),
        ctx.beta_trunc() + 1
    );

    let alt = bialternant(ctx, &a)?;
    let hm = hm_determinant(ctx, &a)?;
    let himn = himn_determinant(ctx, &a)?;

    println!("G_(2,1) has {} terms", alt.num_terms());
    println!("bi-alternant   == H determinant:  {}", alt == hm);
    println!("bi-alternant   == H' determinant: {}", alt == himn);

    // the beta-degree-0 part is the factorial Schur polynomial
    println!("\ndegree-0 part in beta:\n{}", alt.truncate_beta(0));
    Ok(())
}
