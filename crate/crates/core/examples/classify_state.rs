//! Zero-pattern signature, true-entanglement certificate and candidate
//! classes for a few states, plus a two-state comparison.

use slocc::catalog::representative;
use slocc::classify::{certify_true_entanglement, distinguish_exact, exact_signature, match_classes};
use slocc::ket::parse_exact;

fn main() -> slocc::Result<()> {
    for text in ["|3>+|5>+|6>+|9>+|10>+|12>", "|0>+|5>+|10>-|15>", "|0>+|3>+|5>+|6>+|10>+|15>", "|0>+|1>"] {
        let s = parse_exact(text, Some(4))?.state;
        let sig = exact_signature(&s)?;
        println!("{text}");
        println!("  nonzero F: {:?}", sig.f_nonzero());
        println!("  {}", certify_true_entanglement(&sig));
        println!("  candidates: {}", match_classes(&sig).join(" "));
    }
    let ghz = representative("GHZ")?.state;
    let w = representative("W")?.state;
    println!("GHZ vs W: {}", distinguish_exact(&ghz, &w)?);
    Ok(())
}
