//! Drives the command-line front end in-process.

fn main() {
    for args in [
        vec!["compute", "(|0>+|15>)/sqrt(2)"],
        vec!["catalog", "show", "psi4"],
        vec!["count", "6", "--symbolic"],
        vec!["nf", "--w", "4"],
    ] {
        println!("$ slocc {}", args.join(" "));
        let code = slocc::cli::run(std::iter::once("slocc").chain(args), &mut std::io::stdout(), &mut std::io::stderr());
        println!("(exit {code})\n");
    }
}
