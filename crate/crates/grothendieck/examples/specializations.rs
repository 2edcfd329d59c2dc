//! Classical limits: beta -> 0 recovers Schur polynomials (checked here
//! against a brute-force tableau sum), and beta -> -1 with b -> 0 gives
//! the non-factorial Grothendieck polynomial.
//!
//! Run with: `cargo run --release --example specializations`

use grothendieck::formulas::{
    bialternant, buch_specialize, schur_specialize, ssyt_schur_oracle, Partition,
};
use grothendieck::Error;

fn main() -> Result<(), Error> {
    let d = 2;
    for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![3, 2]] {
        let lambda = Partition::new(parts)?;
        let a = lambda.to_index_vector(d)?;
        let ctx = a.context(None)?;
        let g = bialternant(ctx, &a)?;

        let schur = schur_specialize(&g);
        let oracle = ssyt_schur_oracle(ctx, &lambda)?;
        println!(
            "lambda={:?}: schur limit == tableau sum: {}  (s_lambda = {schur})",
            lambda.parts(),
            schur == oracle
        );
    }

    let a = Partition::new(vec![1])?.to_index_vector(2)?;
    let ctx = a.context(None)?;
    let buch = buch_specialize(&bialternant(ctx, &a)?);
    println!("\nbeta=-1, b=0 limit of G_(1,0): {buch}");
    Ok(())
}
