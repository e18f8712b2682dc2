//! Evaluates closed-form orbit expressions at a random operation and
//! compares them with direct evaluation.

use slocc::oracle::{check_forms, ORACLE_CLASSES};
use slocc::state::{random_rational_operation, rng};

fn main() -> slocc::Result<()> {
    let l = random_rational_operation(&mut rng(42), 4);
    for class in ORACLE_CLASSES {
        for c in check_forms(class, &l)? {
            if !c.printed_ok {
                println!(
                    "{class} {}: printed form off ({} vs {}), correction {}",
                    c.form.quantity,
                    c.predicted,
                    c.direct,
                    if c.corrected_ok == Some(true) { "holds" } else { "missing" }
                );
            }
        }
        println!("{class}: checked");
    }
    Ok(())
}
