//! Parses a ket expression and prints IV, F1..F10 and D1..D3, first in
//! floating point, then exactly.

use slocc::invariants::InvariantVector;
use slocc::ket::{parse, parse_exact};

fn main() -> slocc::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(|0>+|15>)/sqrt(2)".into());
    let float = parse(&text, Some(4))?.normalize()?;
    let inv = InvariantVector::evaluate(&float)?;
    println!("IV = {:.6}", inv.iv);
    for (i, f) in inv.f.iter().enumerate() {
        println!("F{} = {:.6}", i + 1, f);
    }
    println!("D = {:.6} {:.6} {:.6}", inv.d[0], inv.d[1], inv.d[2]);
    println!("F aggregate = {:.6}", inv.f_aggregate());

    // Exact values of the unnormalized amplitudes; the 1/sqrt(k) prefactor
    // is kept apart.
    let exact = parse_exact(&text, Some(4))?;
    let inv = InvariantVector::evaluate(&exact.state)?;
    println!("exact, before the 1/sqrt({}) factor: IV = {}, F9 = {}", exact.inv_sqrt, inv.iv, inv.f[8]);
    Ok(())
}
