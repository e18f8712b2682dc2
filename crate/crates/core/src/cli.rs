//! Command-line front end. The `slocc` binary only forwards to [`run`].
//!
//! Exit codes: 0 on success, 1 when a verification finds a violation, 2 on
//! usage or input errors. Randomized commands print their seed first.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::catalog::{class_names, class_properties, representative, ClassKind, ClassProperties};
use crate::classify::{
    certify_true_entanglement, distinguish_exact, distinguish_states, exact_signature, match_classes, signature, Signature, DEFAULT_TOL,
};
use crate::count::{degenerate_count_with, ClassCount};
use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::invariants::{InvariantVector, IV_DEGREE, SEMI_DEGREE};
use crate::ket::{format, format_exact, parse_exact, parse_expr, split_state_file, ExactKet};
use crate::nqubit::{f_n, f_n_vanishes, ghz_n, w_n};
use crate::oracle::ORACLE_CLASSES;
use crate::scalar::Scalar;
use crate::state::State;
use crate::verify::{
    verify_class_zero_pattern, verify_conditionals, verify_identity, verify_oracle, Carrier, Identity, Status,
};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "slocc", version, about = "SLOCC invariants and class signatures of four-qubit states")]
pub struct Cli {
    /// Emit `key<TAB>value` lines.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// IV, F1..F10, D1..D3 and F of a normalized four-qubit state.
    Compute(StateArgs),
    /// Signature, true-entanglement certificate and matching classes.
    Classify(StateArgs),
    /// Catalogued classes.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Classes whose necessary conditions a state meets; with a second
    /// state, whether the two are provably inequivalent.
    Match {
        #[command(flatten)]
        state: StateArgs,
        /// Second state to compare against.
        #[arg(allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// Randomized checks of class tables, transformation laws and closed forms.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Number of degenerate SLOCC classes of n qubits.
    Count {
        n: usize,
        /// Known true-class count, as `m=value`; repeatable.
        #[arg(long = "t", value_name = "m=value")]
        t: Vec<String>,
        /// Print the combination in the unknown t(m) even when values are given.
        #[arg(long)]
        symbolic: bool,
    },
    /// Generalized F of an n-qubit state.
    Nf {
        /// Ket expression or @file; omit when using --ghz or --w.
        #[arg(allow_hyphen_values = true)]
        state: Option<String>,
        #[arg(long)]
        qubits: Option<usize>,
        #[arg(long, value_name = "n", conflicts_with_all = ["state", "w"])]
        ghz: Option<usize>,
        #[arg(long, value_name = "n", conflicts_with = "state")]
        w: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct StateArgs {
    /// Ket expression, or @path to a state file.
    #[arg(allow_hyphen_values = true)]
    pub state: String,
    /// Evaluate in exact Gaussian-rational arithmetic.
    #[arg(long)]
    pub exact: bool,
    /// Zero threshold for floating evaluation.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List,
    Show { name: String },
}

#[derive(Args, Debug)]
pub struct Sampling {
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Sample class orbits and check every encoded table entry.
    Tables {
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        #[arg(long)]
        float: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        class: Option<String>,
    },
    /// Targeted runs through the conditional claims.
    Conditionals {
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        class: Option<String>,
    },
    /// Transformation laws at random exact points.
    Identities {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Closed forms against direct evaluation.
    Oracles {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        class: Option<String>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut p = Printer { out, machine: cli.machine };
    match execute(cli.command, &mut p) {
        Ok(code) => code,
        // A closed pipe (`slocc ... | head`) is not an error.
        Err(Error::Invalid(m)) if m == BROKEN_PIPE => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    machine: bool,
}

impl Printer<'_> {
    /// `key<TAB>value` in machine mode, `key: value` otherwise.
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> Result<()> {
        let r = if self.machine { writeln!(self.out, "{key}\t{value}") } else { writeln!(self.out, "{key}: {value}") };
        r.map_err(io)
    }

    fn line(&mut self, text: impl std::fmt::Display) -> Result<()> {
        writeln!(self.out, "{text}").map_err(io)
    }

    fn row(&mut self, cells: &[&str]) -> Result<()> {
        writeln!(self.out, "{}", cells.join(if self.machine { "\t" } else { "  " })).map_err(io)
    }

    fn seed(&mut self, seed: u64) -> Result<()> {
        if self.machine {
            self.kv("seed", seed)
        } else {
            self.line(format!("# seed {seed}"))
        }
    }
}

const BROKEN_PIPE: &str = "output: broken pipe";

fn io(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Error::Invalid(BROKEN_PIPE.into())
    } else {
        Error::Invalid(format!("output: {e}"))
    }
}

fn read_state_text(arg: &str) -> Result<(Option<usize>, String)> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
            split_state_file(&text)
        }
        None => Ok((None, arg.to_string())),
    }
}

fn load_float(arg: &str, n: Option<usize>) -> Result<State> {
    let (declared, text) = read_state_text(arg)?;
    parse_expr(&text, n.or(declared))?.to_float()
}

fn load_exact(arg: &str, n: Option<usize>) -> Result<ExactKet> {
    let (declared, text) = read_state_text(arg)?;
    parse_exact(&text, n.or(declared))
}

fn load4_float(arg: &str) -> Result<State> {
    load_float(arg, Some(4))
}

fn load4_exact(arg: &str) -> Result<ExactKet> {
    load_exact(arg, Some(4))
}

/// Shortest round-trip text in machine mode; rounded to 12 places otherwise.
fn fmt_c64(z: Complex64, machine: bool) -> String {
    let part = |x: f64| {
        if machine {
            format!("{x}")
        } else {
            let r = (x * 1e12).round() / 1e12;
            format!("{}", if r == 0.0 { 0.0 } else { r })
        }
    };
    let small = |x: f64| if machine { x == 0.0 } else { x.abs() < 5e-13 };
    match (small(z.re), small(z.im)) {
        (_, true) => part(z.re),
        (true, false) => format!("{} i", part(z.im)),
        (false, false) => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{} i", part(z.re), part(z.im.abs()))
        }
    }
}

fn print_values<S>(p: &mut Printer, inv: &InvariantVector<S>, show: impl Fn(&S) -> String, aggregate: f64) -> Result<()> {
    p.kv("IV", show(&inv.iv))?;
    for (i, x) in inv.f.iter().enumerate() {
        p.kv(&format!("F{}", i + 1), show(x))?;
    }
    for (i, x) in inv.d.iter().enumerate() {
        p.kv(&format!("D{}", i + 1), show(x))?;
    }
    p.kv("F", if p.machine { format!("{aggregate}") } else { fmt_c64(Complex64::new(aggregate, 0.0), false) })
}

/// Exact invariants of the normalized state behind `k`. The common radical
/// cancels against the norm, so only the integer part matters.
fn exact_normalized(k: &ExactKet) -> Result<InvariantVector<GaussianRational>> {
    let inv = InvariantVector::evaluate(&k.state)?;
    let norm_sqr = GaussianRational::real(k.state.norm_sqr());
    let scale = |deg: u32| norm_sqr.pow(deg / 2).inv();
    let (s2, s4) = (scale(IV_DEGREE)?, scale(SEMI_DEGREE)?);
    Ok(InvariantVector { iv: inv.iv.mul(&s2), f: inv.f.map(|x| x.mul(&s4)), d: inv.d.map(|x| x.mul(&s4)) })
}

fn compute(p: &mut Printer, a: &StateArgs) -> Result<i32> {
    if a.exact {
        let inv = exact_normalized(&load4_exact(&a.state)?)?;
        let agg = inv.f_aggregate();
        print_values(p, &inv, |x| x.to_string(), agg)?;
    } else {
        let inv = InvariantVector::evaluate(&load4_float(&a.state)?.normalize()?)?;
        let machine = p.machine;
        let agg = inv.f_aggregate();
        print_values(p, &inv, |x| fmt_c64(*x, machine), agg)?;
    }
    Ok(0)
}

fn state_signature(a: &StateArgs) -> Result<Signature> {
    if a.exact {
        exact_signature(&load4_exact(&a.state)?.state)
    } else {
        signature(&load4_float(&a.state)?, a.tol)
    }
}

fn print_signature(p: &mut Printer, sig: &Signature) -> Result<()> {
    let z = |b: bool| if b { "0" } else { "nonzero" };
    p.kv("IV", z(sig.iv_zero))?;
    p.kv("F", if sig.f_aggregate_zero { "0" } else { "positive" })?;
    let nz: Vec<String> = sig.f_nonzero().iter().map(|i| format!("F{i}")).collect();
    p.kv("F nonzero", if nz.is_empty() { "none".to_string() } else { nz.join(" ") })?;
    for i in 0..3 {
        p.kv(&format!("D{}", i + 1), z(sig.di_zero[i]))?;
    }
    for r in crate::catalog::Relation::ALL {
        p.kv(&r.to_string(), if sig.relation(r) { "holds" } else { "fails" })?;
    }
    p.kv("carrier", sig.tolerance.map_or("exact".to_string(), |t| format!("float tol {t:e}")))
}

fn classify(p: &mut Printer, a: &StateArgs) -> Result<i32> {
    let sig = state_signature(a)?;
    print_signature(p, &sig)?;
    p.kv("certificate", certify_true_entanglement(&sig))?;
    p.kv("classes", match_classes(&sig).join(" "))?;
    Ok(0)
}

fn matching(p: &mut Printer, a: &StateArgs, other: Option<&str>) -> Result<i32> {
    let sig = state_signature(a)?;
    for c in match_classes(&sig) {
        p.kv("class", c)?;
    }
    if let Some(other) = other {
        let d = if a.exact {
            distinguish_exact(&load4_exact(&a.state)?.state, &load4_exact(other)?.state)?
        } else {
            distinguish_states(&load4_float(&a.state)?, &load4_float(other)?, a.tol)?
        };
        p.kv("distinction", d)?;
    }
    Ok(0)
}

fn describe(props: &ClassProperties) -> Vec<(String, String)> {
    let list = |v: &[usize]| if v.is_empty() { "none".to_string() } else { v.iter().map(|i| format!("F{i}")).collect::<Vec<_>>().join(" ") };
    let mut rows = vec![
        ("kind".into(), if props.kind == ClassKind::True { "true" } else { "degenerate" }.to_string()),
        ("IV".into(), if props.iv_zero { "=0" } else { "!=0" }.to_string()),
        ("F".into(), if props.f_positive { ">0" } else { "=0" }.to_string()),
    ];
    for (i, flag) in props.d_flags.iter().enumerate() {
        rows.push((format!("D{}", i + 1), flag.to_string()));
    }
    rows.push(("F zero".into(), list(&props.f_zero)));
    rows.push(("F nonzero".into(), list(&props.f_nonzero)));
    let pairs: Vec<String> = props.nonzero_pairs.iter().map(|(i, j)| format!("|F{i}|+|F{j}|!=0")).collect();
    rows.push(("pairs".into(), if pairs.is_empty() { "none".into() } else { pairs.join(" ") }));
    let rels: Vec<String> = props.relations.iter().map(ToString::to_string).collect();
    rows.push(("relations".into(), if rels.is_empty() { "none".into() } else { rels.join(" ") }));
    let conds: Vec<String> = props.conditionals.iter().map(ToString::to_string).collect();
    rows.push(("conditionals".into(), if conds.is_empty() { "none".into() } else { conds.join(" ") }));
    rows
}

fn class_expression(name: &str) -> Result<String> {
    match representative(name) {
        Ok(named) => Ok(format_exact(&ExactKet::plain(named.state))),
        Err(Error::UnknownClass(_)) => Ok("(s|0>+t|1>) on free qubits".to_string()),
        Err(e) => Err(e),
    }
}

fn catalog(p: &mut Printer, c: &CatalogCommand) -> Result<i32> {
    match c {
        CatalogCommand::List => {
            for name in class_names() {
                let props = class_properties(&name)?;
                let kind = if props.kind == ClassKind::True { "true" } else { "degenerate" };
                let expr = match representative(&name) {
                    Ok(named) => format_exact(&ExactKet::plain(named.state)),
                    Err(_) => "-".into(),
                };
                p.row(&[&name, kind, &expr])?;
            }
        }
        CatalogCommand::Show { name } => {
            let props = class_properties(name)?;
            p.kv("name", name)?;
            p.kv("state", class_expression(name)?)?;
            for (k, v) in describe(&props) {
                p.kv(&k, v)?;
            }
            let errata: Vec<&str> = crate::catalog::errata().iter().filter(|e| e.class == name).map(|e| e.id).collect();
            if !errata.is_empty() {
                p.kv("errata", errata.join(" "))?;
            }
        }
    }
    Ok(0)
}

fn selected(class: &Option<String>, default: Vec<String>) -> Result<Vec<String>> {
    match class {
        Some(c) => {
            class_properties(c)?;
            Ok(vec![c.clone()])
        }
        None => Ok(default),
    }
}

fn verify(p: &mut Printer, v: &VerifyCommand) -> Result<i32> {
    let mut failed = false;
    match v {
        VerifyCommand::Tables { sampling, exact: _, float, tol, class } => {
            p.seed(sampling.seed)?;
            let carrier = if *float { Carrier::Float { tol: *tol } } else { Carrier::Exact };
            for name in selected(class, class_names())? {
                let report = verify_class_zero_pattern(&name, sampling.samples, sampling.seed, carrier)?;
                for (property, status) in report.lines() {
                    failed |= status == Status::Fail;
                    p.row(&[&name, &property, &status.to_string()])?;
                }
                for v in &report.violations {
                    p.line(format!("# {name} trial {} seed {}: {} ({})", v.trial, v.seed, v.property, v.values))?;
                }
            }
        }
        VerifyCommand::Conditionals { sampling, class } => {
            p.seed(sampling.seed)?;
            let with_conds: Vec<String> =
                class_names().into_iter().filter(|c| class_properties(c).is_ok_and(|pr| !pr.conditionals.is_empty())).collect();
            for name in selected(class, with_conds)? {
                let report = verify_conditionals(&name, true, sampling.samples, sampling.seed)?;
                for (property, status) in report.lines() {
                    failed |= status == Status::Fail;
                    p.row(&[&name, &property, &status.to_string()])?;
                }
            }
        }
        VerifyCommand::Identities { trials, seed } => {
            p.seed(*seed)?;
            for id in Identity::all() {
                let report = verify_identity(id, *trials, *seed)?;
                let ok = report.passed() != id.is_negative_control();
                failed |= !ok;
                let status = match (id.is_negative_control(), ok) {
                    (_, false) => "fail",
                    (true, true) => "rejected",
                    (false, true) => "pass",
                };
                p.row(&["identity", &report.id, status])?;
                if let (Some((trial, seed, residual)), false) = (&report.counterexample, id.is_negative_control()) {
                    p.line(format!("# {} trial {trial} seed {seed}: residual {residual}", report.id))?;
                }
            }
        }
        VerifyCommand::Oracles { trials, seed, class } => {
            p.seed(*seed)?;
            for name in selected(class, ORACLE_CLASSES.iter().map(|c| c.to_string()).collect())? {
                let report = verify_oracle(&name, *trials, *seed)?;
                for (quantity, status, _) in &report.forms {
                    failed |= *status == Status::Fail;
                    p.row(&[&name, quantity, &status.to_string()])?;
                }
            }
        }
    }
    Ok(i32::from(failed))
}

fn parse_t(entries: &[String]) -> Result<BTreeMap<usize, BigInt>> {
    entries
        .iter()
        .map(|e| {
            let bad = || Error::Invalid(format!("expected m=value, got {e:?}"));
            let (m, v) = e.split_once('=').ok_or_else(bad)?;
            Ok((m.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn count(p: &mut Printer, n: usize, t: &[String], symbolic: bool) -> Result<i32> {
    let known = parse_t(t)?;
    let combo: ClassCount = degenerate_count_with(n, &if symbolic { BTreeMap::new() } else { known.clone() })?;
    if symbolic || !combo.is_integer() {
        if !symbolic {
            // Report the first missing value rather than a partial number.
            combo.evaluate(&known)?;
        }
        p.kv("d", combo)?;
    } else {
        p.kv("d", combo.evaluate(&known)?)?;
    }
    Ok(0)
}

fn nf(p: &mut Printer, state: Option<&str>, qubits: Option<usize>, ghz: Option<usize>, w: Option<usize>) -> Result<i32> {
    let exact = match (state, ghz, w) {
        (_, Some(n), _) => Some(ghz_n(n)?),
        (_, _, Some(n)) => Some(w_n(n)?),
        (Some(s), _, _) => load_exact(s, qubits).ok().map(|k| k.state),
        (None, None, None) => return Err(Error::Invalid("nf needs a state, --ghz n or --w n".into())),
    };
    let float = match (&exact, state) {
        (Some(e), _) => e.to_float(),
        (None, Some(s)) => load_float(s, qubits)?,
        (None, None) => unreachable!("handled above"),
    };
    let float = float.normalize()?;
    p.kv("n", float.n())?;
    if !p.machine {
        p.kv("state", format(&float))?;
    }
    p.kv("f_n", f_n(&float)?)?;
    let vanishes = match &exact {
        Some(e) => f_n_vanishes(e)?,
        None => f_n_vanishes(&float)?,
    };
    p.kv("vanishes", if exact.is_some() { format!("{vanishes} (exact)") } else { vanishes.to_string() })?;
    Ok(0)
}

fn execute(command: Command, p: &mut Printer) -> Result<i32> {
    match &command {
        Command::Compute(a) => compute(p, a),
        Command::Classify(a) => classify(p, a),
        Command::Catalog(c) => catalog(p, c),
        Command::Match { state, other } => matching(p, state, other.as_deref()),
        Command::Verify(v) => verify(p, v),
        Command::Count { n, t, symbolic } => count(p, *n, t, *symbolic),
        Command::Nf { state, qubits, ghz, w } => nf(p, state.as_deref(), *qubits, *ghz, *w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("slocc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_ghz() {
        let (code, out, _) = call(&["compute", "(|0>+|15>)/sqrt(2)"]);
        assert_eq!(code, 0);
        assert!(out.contains("IV: -0.5\n"), "{out}");
        assert!(out.contains("F9: 0.25\n") && out.contains("F1: 0\n") && out.contains("D3: 0\n"));
        let (_, out, _) = call(&["compute", "--exact", "--machine", "(|0>+|15>)/sqrt(2)"]);
        assert!(out.contains("IV\t-1/2\n") && out.contains("F9\t1/4\n") && out.contains("F10\t0\n"), "{out}");
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("frobnicate"));
        let (code, _, err) = call(&["compute", "|0> +* |1>"]);
        assert_eq!(code, 2);
        assert!(err.contains("syntax"), "{err}");
        assert_eq!(call(&["count", "5", "--bogus"]).0, 2);
    }

    #[test]
    fn count_forms() {
        assert_eq!(call(&["count", "5", "--symbolic"]).1, "d: 5*t(4) + 66\n");
        assert_eq!(call(&["count", "5", "--t", "4=28", "--machine"]).1, "d\t206\n");
        assert_eq!(call(&["count", "4"]).1, "d: 18\n");
        assert_eq!(call(&["count", "6"]).0, 2);
    }

    #[test]
    fn catalog_and_classify() {
        let (_, out, _) = call(&["catalog", "list", "--machine"]);
        assert_eq!(out.lines().count(), 46);
        assert!(out.starts_with("GHZ\ttrue\t|0> + |15>"), "{out}");
        let (_, out, _) = call(&["catalog", "show", "chi4"]);
        assert!(out.contains("errata: chi4-pair-56 chi4-pair-78"));
        let (code, out, _) = call(&["classify", "--exact", "|3>+|5>+|6>+|9>+|10>+|12>"]);
        assert_eq!(code, 0);
        assert!(out.contains("condition (3)") && out.contains("C4"), "{out}");
        assert_eq!(call(&["catalog", "show", "nope"]).0, 2);
    }

    #[test]
    fn match_two_states() {
        let (_, out, _) = call(&["match", "|0>+|15>", "|1>+|2>+|4>+|8>"]);
        assert!(out.contains("distinction: provably inequivalent"), "{out}");
    }

    #[test]
    fn nf_ghz_w() {
        let (_, out, _) = call(&["nf", "--w", "5", "--machine"]);
        assert!(out.contains("vanishes\ttrue (exact)"));
        let (_, out, _) = call(&["nf", "--ghz", "3"]);
        assert!(out.contains("vanishes: false"));
    }

    #[test]
    fn verify_small_runs() {
        let (code, out, _) = call(&["verify", "tables", "--samples", "4", "--class", "kappa4", "--machine"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("seed\t1\n") && out.contains("kappa4\tD3=0\tpass"), "{out}");
        let (code, out, _) = call(&["verify", "identities", "--trials", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("iv-corrupted  rejected"));
        let (code, out, _) = call(&["verify", "oracles", "--trials", "2", "--class", "sigma4"]);
        assert_eq!(code, 0);
        assert!(out.contains("sigma4  IV  known-erratum"), "{out}");
    }
}
