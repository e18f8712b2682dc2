//! Degenerate class census for n = 4..9, symbolic in the unknown t(m).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use slocc::count::{degenerate_count, degenerate_count_symbolic, partitions};

fn main() -> slocc::Result<()> {
    for p in partitions(4)? {
        println!("4 = {p}: {} arrangements", p.arrangements());
    }
    for n in 4..=9 {
        println!("d({n}) = {}", degenerate_count_symbolic(n)?);
    }
    let known = BTreeMap::from([(4, BigInt::from(28))]);
    println!("d(5) with t(4) = 28: {}", degenerate_count(5, &known)?);
    Ok(())
}
