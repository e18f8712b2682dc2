//! Drives the conditional claims of each class through targeted sampling,
//! which zeroes entries of α and β so that antecedents actually fire.

use slocc::catalog::{class_names, class_properties};
use slocc::verify::verify_conditionals;

fn main() -> slocc::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(147);
    for class in class_names() {
        if class_properties(&class)?.conditionals.is_empty() {
            continue;
        }
        let report = verify_conditionals(&class, true, n, 1)?;
        let hits: usize = report.branch_hits.values().sum();
        println!(
            "{class}: {} firings over {} branches, {} violations, missing {:?}",
            hits,
            report.expected_branches.len(),
            report.violations.len(),
            report.missing_branches()
        );
    }
    Ok(())
}
