//! Closed-form predictions of IV, Fᵢ and Dᵢ on the orbit of a
//! representative, as polynomials in the local operator entries.
//!
//! Formulas are kept as text in a small polynomial language so the table
//! reads like the printed forms. Variables: `a1..a4`, `b1..b4`, `g1..g4`,
//! `d1..d4` are the row-major entries of the operators on qubits A..D;
//! `dA`, `dB`, `dG`, `dD` their determinants; and the shorthands
//!
//! ```text
//! P = dB²dG²dD²   Q = dA²dG²dD²   R = dA²dB²dD²   S = dA²dB²dG²   T = dA·dB·dG·dD
//! ```
//!
//! Predictions refer to the normalized representative; compare them with
//! `direct / ‖ψ‖^deg`.

use std::collections::BTreeMap;
use std::fmt;

use crate::catalog::representative;
use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::invariants::{InvariantVector, IV_DEGREE, SEMI_DEGREE};
use crate::scalar::Scalar;
use crate::state::{apply_local, LocalOperation};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Quantity {
    Iv,
    /// 1-based.
    F(usize),
    /// 1-based.
    D(usize),
}

impl Quantity {
    pub fn degree(self) -> u32 {
        match self {
            Quantity::Iv => IV_DEGREE,
            _ => SEMI_DEGREE,
        }
    }

    pub fn of<S: Clone>(self, inv: &InvariantVector<S>) -> S {
        match self {
            Quantity::Iv => inv.iv.clone(),
            Quantity::F(i) => inv.f[i - 1].clone(),
            Quantity::D(i) => inv.d[i - 1].clone(),
        }
    }

    fn parse(s: &str) -> Quantity {
        match s {
            "IV" => Quantity::Iv,
            _ => {
                let k = s[1..].parse().expect("quantity index");
                if s.starts_with('F') {
                    Quantity::F(k)
                } else {
                    Quantity::D(k)
                }
            }
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Iv => write!(f, "IV"),
            Quantity::F(i) => write!(f, "F{i}"),
            Quantity::D(i) => write!(f, "D{i}"),
        }
    }
}

/// Values of every variable for one local operation.
pub struct Bindings {
    vars: BTreeMap<String, GaussianRational>,
}

impl Bindings {
    pub fn new(l: &LocalOperation<GaussianRational>) -> Result<Self> {
        if l.len() != 4 {
            return Err(Error::SizeMismatch { got: l.len(), n: 4 });
        }
        let mut vars = BTreeMap::new();
        let dets: Vec<GaussianRational> = l.dets();
        for (k, (prefix, det)) in ["a", "b", "g", "d"].iter().zip(["dA", "dB", "dG", "dD"]).enumerate() {
            for (e, v) in l.ops[k].m.iter().enumerate() {
                vars.insert(format!("{prefix}{}", e + 1), v.clone());
            }
            vars.insert(det.to_string(), dets[k].clone());
        }
        let sq = |i: usize| dets[i].square();
        vars.insert("P".into(), sq(1).mul(&sq(2)).mul(&sq(3)));
        vars.insert("Q".into(), sq(0).mul(&sq(2)).mul(&sq(3)));
        vars.insert("R".into(), sq(0).mul(&sq(1)).mul(&sq(3)));
        vars.insert("S".into(), sq(0).mul(&sq(1)).mul(&sq(2)));
        vars.insert("T".into(), dets.iter().fold(GaussianRational::one(), |acc, d| acc.mul(d)));
        Ok(Bindings { vars })
    }
}

/// Evaluates a polynomial expression.
///
/// ```text
/// expr   := term (("+" | "-") term)*
/// term   := factor (("*" | "/") factor)*
/// factor := ("+" | "-") factor | atom ("^" uint)?
/// atom   := uint | ident | "(" expr ")"
/// ```
pub fn eval_expr(text: &str, env: &Bindings) -> Result<GaussianRational> {
    let mut p = ExprParser { s: text.as_bytes(), pos: 0, env };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
    env: &'a Bindings,
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<GaussianRational> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GaussianRational> {
        let mut acc = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if c == b'*' { acc.mul_sparse(&rhs) } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GaussianRational> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.uint()?;
                    Ok(base.pow(u32::try_from(e).map_err(|_| self.err("exponent too large"))?))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("expected integer"))
    }

    fn atom(&mut self) -> Result<GaussianRational> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(GaussianRational::from_int(i64::try_from(n).map_err(|_| self.err("literal too large"))?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                self.env.vars.get(name).cloned().ok_or_else(|| Error::Syntax { pos: start, msg: format!("unknown variable {name}") })
            }
            _ => Err(self.err("expected operand")),
        }
    }
}

/// One printed closed form, with its correction when the printed text is wrong.
#[derive(Clone, Copy, Debug)]
pub struct ClosedForm {
    pub class: &'static str,
    pub quantity: &'static str,
    pub printed: &'static str,
    pub corrected: Option<(&'static str, &'static str)>,
}

impl ClosedForm {
    pub fn quantity(&self) -> Quantity {
        Quantity::parse(self.quantity)
    }

    /// Corrected text when one exists, else the printed text.
    pub fn best(&self) -> &'static str {
        self.corrected.map_or(self.printed, |(text, _)| text)
    }

    pub fn erratum(&self) -> Option<&'static str> {
        self.corrected.map(|(_, id)| id)
    }
}

const fn form(class: &'static str, quantity: &'static str, printed: &'static str) -> ClosedForm {
    ClosedForm { class, quantity, printed, corrected: None }
}

macro_rules! ghz_like_f {
    ($class:literal, $c:literal) => {
        [
            form($class, "F1", concat!($c, "*a1^2*a2^2*P")),
            form($class, "F2", concat!($c, "*a3^2*a4^2*P")),
            form($class, "F3", concat!($c, "*b1^2*b2^2*Q")),
            form($class, "F4", concat!($c, "*b3^2*b4^2*Q")),
            form($class, "F5", concat!($c, "*g2^2*g1^2*R")),
            form($class, "F6", concat!($c, "*g4^2*g3^2*R")),
            form($class, "F7", concat!($c, "*d1^2*d2^2*S")),
            form($class, "F8", concat!($c, "*d3^2*d4^2*S")),
        ]
    };
}

macro_rules! ghz_like_f910 {
    ($class:literal, $c:literal) => {
        [
            form($class, "F9", concat!($c, "*(a1*b1*a4*b4 - b3*a3*b2*a2)^2*dD^2*dG^2")),
            form($class, "F10", concat!($c, "*(-a1*b3*a4*b2 + b1*a3*b4*a2)^2*dD^2*dG^2")),
        ]
    };
}

macro_rules! psi4_f9 {
    ($tail:literal) => {
        concat!("(1/16)*(a2^2*a3^2*b2^2*b3^2 + 2*a1*a2*a3*a4*b2^2*b3^2 + a1^2*a4^2*b2^2*b3^2 \
    + 2*a2^2*a3^2*b1*b2*b3*b4 - 12*a1*a2*a3*a4*b1*b2*b3*b4 + 2*a1^2*a4^2*b1*b2*b3*b4 \
    + a2^2*a3^2*b1^2*b4^2 + 2*a1*a2*a3*a4*b1^2*b4^2 + a1^2*a4^2*b1^2*b4^2)", "*", $tail)
    };
}

const C4_F9: &str = "(1/36)*(-4*a2^2*a3*a4*b1*b2*b3^2 + 4*a1*a2*a4^2*b1*b2*b3^2 + a2^2*a3^2*b2^2*b3^2 \
    - 4*a1*a2*a3*a4*b2^2*b3^2 + 4*a2^2*a3*a4*b1^2*b3*b4 - 4*a1*a2*a4^2*b1^2*b3*b4 - 4*a2^2*a3^2*b1*b2*b3*b4 \
    + 14*a1*a2*a3*a4*b1*b2*b3*b4 - 4*a1^2*a4^2*b1*b2*b3*b4 - 4*a1*a2*a3^2*b2^2*b3*b4 + 4*a1^2*a3*a4*b2^2*b3*b4 \
    - 4*a1*a2*a3*a4*b1^2*b4^2 + a1^2*a4^2*b1^2*b4^2 + 4*a1*a2*a3^2*b1*b2*b4^2 - 4*a1^2*a3*a4*b1*b2*b4^2)*dD^2*dG^2";

const C4_F10: &str = "(1/36)*(4*a2^2*a3*a4*b1*b2*b3^2 - 4*a1*a2*a4^2*b1*b2*b3^2 - 4*a1*a2*a3*a4*b2^2*b3^2 \
    + a1^2*a4^2*b2^2*b3^2 - 4*a2^2*a3*a4*b1^2*b3*b4 + 4*a1*a2*a4^2*b1^2*b3*b4 - 4*a2^2*a3^2*b1*b2*b3*b4 \
    + 14*a1*a2*a3*a4*b1*b2*b3*b4 - 4*a1^2*a4^2*b1*b2*b3*b4 + 4*a1*a2*a3^2*b2^2*b3*b4 - 4*a1^2*a3*a4*b2^2*b3*b4 \
    + a2^2*a3^2*b1^2*b4^2 - 4*a1*a2*a3*a4*b1^2*b4^2 - 4*a1*a2*a3^2*b1*b2*b4^2 + 4*a1^2*a3*a4*b1*b2*b4^2)*dD^2*dG^2";

const PI4_F9: &str = "dB*(-4*a1*a2*a3^2*b1*b3 + 4*a1^2*a3*a4*b1*b3 - 4*a1^2*a3^2*b2*b3 - a2^2*a3^2*b2*b3 \
    + 2*a1*a2*a3*a4*b2*b3 - a1^2*a4^2*b2*b3 + 4*a1^2*a3^2*b1*b4 + a2^2*a3^2*b1*b4 - 2*a1*a2*a3*a4*b1*b4 \
    + a1^2*a4^2*b1*b4 + 4*a1*a2*a3^2*b2*b4 - 4*a1^2*a3*a4*b2*b4)*dG^2*dD^2/36";

const PI4_F10: &str = "dB*(4*a1*a2*a3^2*b1*b3 - 4*a1^2*a3*a4*b1*b3 - 4*a1^2*a3^2*b2*b3 - a2^2*a3^2*b2*b3 \
    + 2*a1*a2*a3*a4*b2*b3 - a1^2*a4^2*b2*b3 + 4*a1^2*a3^2*b1*b4 + a2^2*a3^2*b1*b4 - 2*a1*a2*a3*a4*b1*b4 \
    + a1^2*a4^2*b1*b4 - 4*a1*a2*a3^2*b2*b4 + 4*a1^2*a3*a4*b2*b4)*dG^2*dD^2/36";

const THETA4_F9: &str = "(1/36)*(-a2*a3*b2^2*b3^2 + a1*a4*b2^2*b3^2 + 2*a2*a3*b1*b2*b3*b4 - 2*a1*a4*b1*b2*b3*b4 \
    + 4*a1*a3*b2^2*b3*b4 - 4*a2*a4*b2^2*b3*b4 - a2*a3*b1^2*b4^2 + a1*a4*b1^2*b4^2 - 4*a1*a3*b1*b2*b4^2 \
    + 4*a2*a4*b1*b2*b4^2 - 4*a2*a3*b2^2*b4^2 + 4*a1*a4*b2^2*b4^2)*dA*dG^2*dD^2";

const THETA4_F10: &str = "(1/36)*(-a2*a3*b2^2*b3^2 + a1*a4*b2^2*b3^2 + 2*a2*a3*b1*b2*b3*b4 - 2*a1*a4*b1*b2*b3*b4 \
    - 4*a1*a3*b2^2*b3*b4 + 4*a2*a4*b2^2*b3*b4 - a2*a3*b1^2*b4^2 + a1*a4*b1^2*b4^2 + 4*a1*a3*b1*b2*b4^2 \
    - 4*a2*a4*b1*b2*b4^2 - 4*a2*a3*b2^2*b4^2 + 4*a1*a4*b2^2*b4^2)*dA*dG^2*dD^2";

/// Every transcribed closed form, grouped by class.
pub fn closed_forms() -> Vec<ClosedForm> {
    let mut v = Vec::new();
    // GHZ
    v.push(form("GHZ", "IV", "-(1/2)*T"));
    v.extend(ghz_like_f!("GHZ", "(1/4)"));
    v.extend(ghz_like_f910!("GHZ", "(1/4)"));
    v.extend(["D1", "D2", "D3"].map(|d| form("GHZ", d, "0")));
    // C4
    v.push(form("C4", "IV", "-(1/2)*T"));
    v.extend(ghz_like_f!("C4", "(-1/12)"));
    v.push(form("C4", "F9", C4_F9));
    v.push(form("C4", "F10", C4_F10));
    v.push(form("C4", "D1", "-(1/36)*((a2*a3 + a1*a4)*(g2*g3 + g1*g4) + a2*a4*g1*g3 + a1*a3*g2*g4)*dA*dB^2*dG*dD^2"));
    v.push(form("C4", "D2", "(1/36)*((a2*a3 + a1*a4)*(b2*b3 + b1*b4) + a2*a4*b1*b3 + a1*a3*b2*b4)*dA*dB*dG^2*dD^2"));
    v.push(form("C4", "D3", "(1/36)*((a2*a3 + a1*a4)*(d2*d3 + d1*d4) + a2*a4*d1*d3 + a1*a3*d2*d4)*dA*dB^2*dG^2*dD"));
    // kappa4, E4, L4
    for class in ["kappa4", "E4", "L4"] {
        v.push(form(class, "IV", "(1/4)*T"));
    }
    v.extend(ghz_like_f!("kappa4", "(1/16)"));
    v.extend(ghz_like_f910!("kappa4", "(1/16)"));
    v.extend(ghz_like_f!("E4", "(1/16)"));
    v.extend(ghz_like_f910!("E4", "(1/16)"));
    v.extend(ghz_like_f!("L4", "(1/16)"));
    v.extend(ghz_like_f910!("L4", "(1/16)"));
    v.push(form("kappa4", "D1", "(1/16)*a2*a4*g2*g4*dA*dB^2*dG*dD^2"));
    v.push(form("kappa4", "D2", "(1/16)*a1*a3*b1*b3*dA*dB*dG^2*dD^2"));
    v.push(form("kappa4", "D3", "0"));
    v.push(form("E4", "D1", "-(1/16)*a1*a3*g1*g3*dA*dB^2*dG*dD^2"));
    v.push(form("E4", "D2", "0"));
    v.push(form("E4", "D3", "-(1/16)*a2*a4*d2*d4*dA*dB^2*dG^2*dD"));
    v.push(form("L4", "D1", "0"));
    v.push(form("L4", "D2", "(1/16)*a1*a3*b1*b3*dA*dB*dG^2*dD^2"));
    v.push(form("L4", "D3", "-(1/16)*a2*a4*d2*d4*dA*dB^2*dG^2*dD"));
    // H4, lambda4, M4
    for class in ["H4", "lambda4", "M4"] {
        v.push(form(class, "IV", "-(1/3)*T"));
    }
    v.extend(ghz_like_f!("H4", "(1/9)"));
    v.extend(ghz_like_f910!("H4", "(1/9)"));
    v.extend(ghz_like_f!("lambda4", "(1/9)"));
    v.push(form("lambda4", "F9", "(1/9)*(a1*b2*a4*b3 - b1*a2*b4*a3)^2*dG^2*dD^2"));
    v.push(form("lambda4", "F10", "(1/9)*(-a1*b1*a4*b4 + b2*a3*b3*a2)^2*dG^2*dD^2"));
    v.extend(ghz_like_f!("M4", "(1/9)"));
    v.extend(ghz_like_f910!("M4", "(1/9)"));
    v.push(form("H4", "D1", "-(1/9)*a1*a3*g2*g4*dA*dB^2*dG*dD^2"));
    v.push(form("H4", "D2", "0"));
    v.push(form("H4", "D3", "0"));
    v.push(form("lambda4", "D1", "0"));
    v.push(form("lambda4", "D2", "(1/9)*a1*a3*b2*b4*dA*dB*dG^2*dD^2"));
    v.push(form("lambda4", "D3", "0"));
    v.push(form("M4", "D1", "0"));
    v.push(form("M4", "D2", "0"));
    v.push(form("M4", "D3", "(1/9)*a1*a3*d2*d4*dA*dB^2*dG^2*dD"));
    // pi4
    v.push(form("pi4", "IV", "-(1/3)*T"));
    v.push(form("pi4", "D1", concat!("(1/36)*", "(2*a1*a3*g1*g3 + a2*a3*g2*g3 + a1*a4*g2*g3 + a2*a3*g1*g4 + a1*a4*g1*g4", " + 2*a1*a3*g2*g4 + 2*a2*a4*g2*g4)*dA*dB^2*dG*dD^2")));
    v.push(form("pi4", "F1", "a1^4*P/9"));
    v.push(form("pi4", "F2", "a3^4*P/9"));
    v.push(form("pi4", "F5", "g2^4*R/9"));
    v.push(form("pi4", "F6", "g4^4*R/9"));
    v.push(form("pi4", "F9", PI4_F9));
    v.push(form("pi4", "F10", PI4_F10));
    // theta4
    v.push(form("theta4", "IV", "-(1/3)*T"));
    v.push(form("theta4", "D1", concat!("(1/36)*", "(2*a1*a3*g1*g3 + a2*a3*g2*g3 + a1*a4*g2*g3 + a2*a3*g1*g4 + a1*a4*g1*g4", " + 2*a2*a4*g2*g4)*dA*dB^2*dG*dD^2")));
    v.push(form("theta4", "F3", "b2^4*Q/9"));
    v.push(form("theta4", "F4", "b4^4*Q/9"));
    v.push(form("theta4", "F7", "d1^4*S/9"));
    v.push(form("theta4", "F8", "d3^4*S/9"));
    v.push(form("theta4", "F9", THETA4_F9));
    v.push(form("theta4", "F10", THETA4_F10));
    // sigma4
    v.push(ClosedForm { class: "sigma4", quantity: "IV", printed: "(1/3)*T", corrected: Some(("-(1/3)*T", "sigma4-iv")) });
    v.push(form(
        "sigma4",
        "D2",
        "-(1/36)*(2*a1*a3*b1*b3 + 2*a2*a4*b1*b3 + a2*a3*b2*b3 + a1*a4*b2*b3 + a2*a3*b1*b4 + a1*a4*b1*b4 + 2*a2*a4*b2*b4)*dA*dB*dG^2*dD^2",
    ));
    v.push(form("sigma4", "F1", "a2^4*P/9"));
    v.push(form("sigma4", "F2", "a4^4*P/9"));
    v.push(form("sigma4", "F3", "b1^4*Q/9"));
    v.push(form("sigma4", "F4", "b3^4*Q/9"));
    v.push(form("sigma4", "F9", "(1/9)*(a2*a3*b1*b3 - a1*a4*b1*b3 - a2*a4*b2*b3 + a2*a4*b1*b4)^2*dD^2*dG^2"));
    v.push(form("sigma4", "F10", "(1/9)*(a2*a3*b1*b3 - a1*a4*b1*b3 + a2*a4*b2*b3 - a2*a4*b1*b4)^2*dD^2*dG^2"));
    // psi4
    v.push(form("psi4", "IV", "0"));
    v.push(form("psi4", "D1", "-(1/16)*(a2*a3 + a1*a4)*(g2*g3 + g1*g4)*dA*dB^2*dG*dD^2"));
    v.extend(ghz_like_f!("psi4", "(1/4)"));
    for q in ["F9", "F10"] {
        v.push(ClosedForm { class: "psi4", quantity: q, printed: PSI4_F9_PRINTED, corrected: Some((PSI4_F9_FIXED, "psi4-f9")) });
    }
    // phi4
    v.push(form("phi4", "IV", "0"));
    v.push(form("phi4", "D1", "0"));
    v.push(form("phi4", "D2", "(1/16)*(a2*a3 + a1*a4)*(b2*b3 + b1*b4)*dA*dB*dG^2*dD^2"));
    v.push(form("phi4", "D3", "0"));
    v.extend(ghz_like_f!("phi4", "(1/4)"));
    v.extend(ghz_like_f910!("phi4", "(1/4)"));
    // varpi4
    v.push(form("varpi4", "IV", "0"));
    v.push(form("varpi4", "D1", "-(1/16)*a1*a3*g1*g3*dA*dB^2*dG*dD^2"));
    v.push(form("varpi4", "D2", "0"));
    v.push(form("varpi4", "D3", "(1/16)*a1*a3*d1*d3*dA*dB^2*dG^2*dD"));
    v.push(form("varpi4", "F1", "(1/16)*a1^4*P"));
    v.push(form("varpi4", "F2", "(1/16)*a3^4*P"));
    v.push(form("varpi4", "F3", "0"));
    v.push(form("varpi4", "F4", "0"));
    v.push(form("varpi4", "F5", "(1/16)*g1^4*R"));
    v.push(form("varpi4", "F6", "(1/16)*g3^4*R"));
    v.push(form("varpi4", "F7", "(1/16)*d1^4*S"));
    v.push(form("varpi4", "F8", "(1/16)*d3^4*S"));
    v.push(form("varpi4", "F9", "(1/16)*a1^2*a3^2*P"));
    v.push(form("varpi4", "F10", "(1/16)*a1^2*a3^2*P"));
    // omega4
    v.push(form("omega4", "IV", "0"));
    v.extend(["D1", "D2", "D3", "F1", "F2"].map(|q| form("omega4", q, "0")));
    v.push(form("omega4", "F3", "b2^4*Q/16"));
    v.push(form("omega4", "F4", "b4^4*Q/16"));
    v.push(form("omega4", "F5", "g1^4*R/16"));
    v.push(form("omega4", "F6", "g3^4*R/16"));
    v.push(form("omega4", "F7", "d1^4*S/16"));
    v.push(form("omega4", "F8", "d3^4*S/16"));
    v.push(form("omega4", "F9", "b2^2*b4^2*Q/16"));
    v.push(form("omega4", "F10", "b2^2*b4^2*Q/16"));
    v
}

const PSI4_F9_PRINTED: &str = psi4_f9!("dG^2*dB^2");
const PSI4_F9_FIXED: &str = psi4_f9!("dG^2*dD^2");

/// Classes with a transcribed closed form, in catalog order.
pub const ORACLE_CLASSES: [&str; 15] =
    ["GHZ", "C4", "kappa4", "E4", "L4", "H4", "lambda4", "M4", "pi4", "theta4", "sigma4", "psi4", "phi4", "varpi4", "omega4"];

pub fn forms_for(class: &str) -> Result<Vec<ClosedForm>> {
    if !ORACLE_CLASSES.contains(&class) {
        return Err(Error::NoOracle(class.into()));
    }
    Ok(closed_forms().into_iter().filter(|f| f.class == class).collect())
}

/// Predicted value of every closed form of `class` at `l`, printed text.
pub fn closed_form_oracle(class: &str, l: &LocalOperation<GaussianRational>) -> Result<Vec<(Quantity, GaussianRational)>> {
    let env = Bindings::new(l)?;
    forms_for(class)?.iter().map(|f| Ok((f.quantity(), eval_expr(f.printed, &env)?))).collect()
}

/// Direct values on the normalized orbit point, keyed like the oracle.
pub fn direct_values(class: &str, l: &LocalOperation<GaussianRational>) -> Result<InvariantVector<GaussianRational>> {
    let rep = representative(class)?.state;
    let inv = InvariantVector::evaluate(&apply_local(&rep, l)?)?;
    let norm_sqr = GaussianRational::real(rep.norm_sqr());
    let scale = |deg: u32| norm_sqr.pow(deg / 2).inv();
    let (s2, s4) = (scale(IV_DEGREE)?, scale(SEMI_DEGREE)?);
    Ok(InvariantVector {
        iv: inv.iv.mul(&s2),
        f: inv.f.map(|x| x.mul(&s4)),
        d: inv.d.map(|x| x.mul(&s4)),
    })
}

/// Outcome of comparing one closed form at one operation.
#[derive(Clone, Debug)]
pub struct FormCheck {
    pub form: ClosedForm,
    pub printed_ok: bool,
    pub corrected_ok: Option<bool>,
    pub direct: GaussianRational,
    pub predicted: GaussianRational,
}

pub fn check_forms(class: &str, l: &LocalOperation<GaussianRational>) -> Result<Vec<FormCheck>> {
    let env = Bindings::new(l)?;
    let direct = direct_values(class, l)?;
    forms_for(class)?
        .into_iter()
        .map(|form| {
            let value = form.quantity().of(&direct);
            let predicted = eval_expr(form.printed, &env)?;
            let corrected_ok = form.corrected.map(|(text, _)| eval_expr(text, &env).map(|p| p == value)).transpose()?;
            Ok(FormCheck { form, printed_ok: predicted == value, corrected_ok, direct: value, predicted })
        })
        .collect()
}
