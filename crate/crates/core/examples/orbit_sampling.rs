//! Draws a few orbit points of a class and shows that the IV flag and the
//! forced zeros survive the local operation.

use slocc::classify::exact_signature;
use slocc::exact::GaussianRational;
use slocc::verify::{sample_orbit, Sampler};

fn main() -> slocc::Result<()> {
    let class = std::env::args().nth(1).unwrap_or_else(|| "rho4".into());
    for sample in sample_orbit::<GaussianRational>(&class, 6, 3, Sampler::Mixed)? {
        let sample = sample?;
        let sig = exact_signature(&sample.state)?;
        println!("trial {} seed {}: IV zero {}, nonzero F {:?}", sample.trial, sample.seed, sig.iv_zero, sig.f_nonzero());
    }
    Ok(())
}
