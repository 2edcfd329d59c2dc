//! Run the identity-verification harness from code and inspect the
//! machine-readable report.
//!
//! Run with: `cargo run --release --example verify_report`

use grothendieck::verify::{partitions_up_to, verify_proof_suite, verify_theorem};
use grothendieck::Error;

fn main() -> Result<(), Error> {
    // one theorem run: three pairwise equalities plus stabilization at N+1
    let report = verify_theorem(2, &[2, 1], None)?;
    println!("{report}\n");

    // the same report as JSON, as written by `--out`
    println!("{}\n", report.to_json_string());

    // a sweep over small shapes
    let mut passed = 0;
    let mut total = 0;
    for lambda in partitions_up_to(2, 2) {
        let a = lambda.to_index_vector(2)?;
        let r = verify_theorem(2, a.parts(), None)?;
        total += r.checks.len();
        passed += r
            .checks
            .iter()
            .filter(|c| c.status == grothendieck::verify::CheckStatus::Pass)
            .count();
        println!("lambda={:?}: {}", lambda.parts(), if r.all_passed() { "ok" } else { "FAILED" });
    }
    println!("sweep: {passed}/{total} checks passed");

    // the proof-level identities behind the theorem
    let proofs = verify_proof_suite(2, 1, 3)?;
    println!("\nproof suite: {} checks, all passed: {}", proofs.checks.len(), proofs.all_passed());
    Ok(())
}
