//! Samples every catalogued class on its orbit and prints one line per
//! asserted property. Pass a sample count as the first argument.

use std::time::Instant;

use slocc::catalog::class_names;
use slocc::verify::{verify_class_zero_pattern, Carrier, Status};

fn main() -> slocc::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    let mut bad = 0;
    for class in class_names() {
        let start = Instant::now();
        let report = verify_class_zero_pattern(&class, n, 1, Carrier::Exact)?;
        for (property, status) in report.lines() {
            if status != Status::Pass {
                println!("{class}\t{property}\t{status}");
                bad += usize::from(status == Status::Fail);
            }
        }
        println!("{class}: {} samples, {} properties, {:.2?}", report.samples, report.checked.len(), start.elapsed());
    }
    println!("{bad} failing properties");
    Ok(())
}
