//! Checks every transformation law at random exact points, including a
//! corrupted law that must be rejected.

use slocc::verify::{verify_identity, Identity};

fn main() -> slocc::Result<()> {
    for id in Identity::all() {
        let report = verify_identity(id, 50, 7)?;
        let verdict = match (&report.counterexample, id.is_negative_control()) {
            (None, false) => "holds".to_string(),
            (Some((t, _, r)), true) => format!("rejected at trial {t} (residual {r})"),
            (Some((t, seed, r)), false) => format!("FAILS at trial {t}, seed {seed}: {r}"),
            (None, true) => "control unexpectedly passed".to_string(),
        };
        println!("{:14} {verdict}", report.id);
    }
    Ok(())
}
