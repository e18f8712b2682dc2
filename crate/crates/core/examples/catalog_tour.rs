//! Walks the class catalog: representatives, degenerate kinds, one family
//! member and the conjecture state.

use num_complex::Complex64;
use slocc::catalog::{class_properties, conjecture_state, errata, family_state, representatives, Degenerate, Family};
use slocc::classify::signature;

fn main() -> slocc::Result<()> {
    for named in representatives() {
        let p = class_properties(&named.name)?;
        let d: Vec<String> = p.d_flags.iter().map(ToString::to_string).collect();
        println!("{:10} IV{} D[{}] forced zero F{:?}", named.name, if p.iv_zero { "=0 " } else { "!=0" }, d.join(","), p.f_zero);
    }
    for kind in Degenerate::all() {
        let p = kind.properties();
        println!("{:12} IV{} F nonzero {:?}", kind.name(), if p.iv_zero { "=0 " } else { "!=0" }, p.f_nonzero);
    }
    let fam = family_state(Family::La4 { a: Complex64::new(0.5, 0.25) });
    println!("L_a4 at a=0.5+0.25i: nonzero F {:?}", signature(&fam, 1e-9)?.f_nonzero());
    let (conj, claims) = conjecture_state();
    println!("{}: IV zero claimed {}", conj.name, claims.iv_zero);
    for e in errata() {
        println!("erratum {}: {}", e.id, e.finding);
    }
    Ok(())
}
