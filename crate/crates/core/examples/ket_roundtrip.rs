//! Formats catalog states as ket text and parses them back.

use slocc::catalog::representatives;
use slocc::ket::{format_exact, parse_exact, ExactKet};

fn main() -> slocc::Result<()> {
    for named in representatives().into_iter().take(6) {
        let text = format_exact(&ExactKet::plain(named.state.clone()));
        let back = parse_exact(&text, Some(4))?;
        println!("{:8} {:32} round trip {}", named.name, text, back.state == named.state);
    }
    let bits = parse_exact("(|0000> - i|1111>)/sqrt(2)", None)?;
    println!("bitstring form: {} with 1/sqrt({})", format_exact(&ExactKet::plain(bits.state)), bits.inv_sqrt);
    Ok(())
}
