//! The generalized F on GHZ and W states of three to eight qubits.

use std::time::Instant;

use slocc::nqubit::{admissible_sums, enumerate_quadruples, f_n, f_n_vanishes, ghz_n, w_n};

fn main() -> slocc::Result<()> {
    println!("n=4 quadruples: {}, sums {:?}", enumerate_quadruples(4)?.len(), admissible_sums(4)?);
    for n in 3..=8 {
        let start = Instant::now();
        let ghz = ghz_n(n)?.to_float().normalize()?;
        println!(
            "n={n}: f(GHZ) = {:.6}, f(W) vanishes {}, {:.2?}",
            f_n(&ghz)?,
            f_n_vanishes(&w_n(n)?)?,
            start.elapsed()
        );
    }
    Ok(())
}
