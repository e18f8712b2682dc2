//! Ket expressions such as `(|0000> + |1111>)/sqrt(2)` or `i|1> + 2|2> - |3>`.
//!
//! ```text
//! expr    := group | sum
//! group   := "(" sum ")" [ "/" (root | number) ]
//! sum     := [sign] term { sign term }
//! term    := [coeff ["*"]] ket
//! ket     := "|" digits (">" | "⟩")
//! coeff   := [sign] factor
//! factor  := (number [ "/" uint ] ["i"] | "i" | root) [ "/" (root | number) ]
//! root    := "sqrt(" uint ")"
//! number  := uint | decimal
//! ```
//!
//! A ket of `0`/`1` digits whose length equals the qubit count is a bitstring;
//! any other ket is a decimal index. Without a declared count, kets written
//! with a leading zero, or a sum whose kets are all equal-length `0`/`1`
//! strings, are bitstrings and fix the count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::scalar::Scalar;
use crate::state::{ExactState, PureState, State, MAX_QUBITS};

/// `q·√m` with `m` square-free.
#[derive(Clone, PartialEq, Debug)]
pub struct Coefficient {
    pub q: GaussianRational,
    pub m: u64,
}

impl Coefficient {
    fn rational(q: GaussianRational) -> Self {
        Coefficient { q, m: 1 }
    }

    fn times_root(self, k: u64) -> Self {
        let (s, r) = split_root(self.m * k);
        Coefficient { q: &self.q * &GaussianRational::from_int(s as i64), m: r }
    }

    fn over_root(self, k: u64) -> Self {
        let c = self.times_root(k);
        Coefficient { q: &c.q / &GaussianRational::from_int(k as i64), m: c.m }
    }

    fn over(self, d: &BigRational) -> Self {
        Coefficient { q: &self.q / &GaussianRational::real(d.clone()), m: self.m }
    }

    fn negated(self) -> Self {
        Coefficient { q: -self.q, m: self.m }
    }

    fn to_c64(&self) -> Complex64 {
        self.q.to_c64() * (self.m as f64).sqrt()
    }
}

/// `k = s²·r` with `r` square-free.
fn split_root(k: u64) -> (u64, u64) {
    let (mut s, mut r) = (1, k);
    let mut p = 2;
    while p * p <= r {
        while r % (p * p) == 0 {
            r /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, r)
}

/// Parsed expression: one coefficient per term, group divisor folded in.
#[derive(Clone, PartialEq, Debug)]
pub struct KetExpr {
    pub n: usize,
    pub terms: Vec<(Coefficient, usize)>,
}

/// Exact amplitudes `state / √inv_sqrt`.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactKet {
    pub state: ExactState,
    pub inv_sqrt: u64,
}

impl ExactKet {
    pub fn plain(state: ExactState) -> Self {
        ExactKet { state, inv_sqrt: 1 }
    }

    pub fn to_float(&self) -> State {
        let k = (self.inv_sqrt as f64).sqrt();
        let s = self.state.to_float();
        PureState::new(s.n(), s.amps().iter().map(|a| a / k).collect()).expect("same shape")
    }
}

impl KetExpr {
    pub fn to_float(&self) -> Result<State> {
        let mut s = PureState::zero(self.n)?.into_amps();
        for (c, i) in &self.terms {
            s[*i] += c.to_c64();
        }
        let s = PureState::new(self.n, s)?;
        s.require_nonzero()?;
        Ok(s)
    }

    /// Fails with [`Error::NotExact`] unless every term shares one radical.
    pub fn to_exact(&self) -> Result<ExactKet> {
        let radicals: Vec<u64> = self.terms.iter().filter(|(c, _)| !c.q.is_zero()).map(|(c, _)| c.m).collect();
        let m = radicals.first().copied().unwrap_or(1);
        if radicals.iter().any(|&r| r != m) {
            return Err(Error::NotExact);
        }
        let mut amps = PureState::<GaussianRational>::zero(self.n)?.into_amps();
        let scale = GaussianRational::from_int(m as i64);
        for (c, i) in &self.terms {
            amps[*i] = &amps[*i] + &(&c.q * &scale);
        }
        let state = PureState::new(self.n, amps)?;
        state.require_nonzero()?;
        Ok(ExactKet { state, inv_sqrt: m })
    }
}

/// Floating state denoted by `text`.
pub fn parse(text: &str, n: Option<usize>) -> Result<State> {
    parse_expr(text, n)?.to_float()
}

/// Exact state denoted by `text`, up to a common `1/√k`.
pub fn parse_exact(text: &str, n: Option<usize>) -> Result<ExactKet> {
    parse_expr(text, n)?.to_exact()
}

/// State-file contents: an optional `qubits: n` line, then one expression.
pub fn split_state_file(text: &str) -> Result<(Option<usize>, String)> {
    let mut lines = text.lines().skip_while(|l| l.trim().is_empty()).peekable();
    let mut n = None;
    if let Some(first) = lines.peek() {
        if let Some(rest) = first.trim().strip_prefix("qubits:") {
            let v = rest.trim().parse().map_err(|_| Error::Syntax { pos: 0, msg: format!("bad qubit count {:?}", rest.trim()) })?;
            n = Some(v);
            lines.next();
        }
    }
    Ok((n, lines.collect::<Vec<_>>().join(" ")))
}

pub fn parse_expr(text: &str, n: Option<usize>) -> Result<KetExpr> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len() };
    let raw = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    resolve(raw, n)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    I,
    Sqrt,
    Num(String),
    Ket(String),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let err = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
    while k < chars.len() {
        let (pos, c) = chars[k];
        k += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            'i' => Tok::I,
            's' => {
                let word: String = chars[k - 1..].iter().take(4).map(|&(_, c)| c).collect();
                if word != "sqrt" {
                    return Err(err(pos, "expected sqrt"));
                }
                k += 3;
                Tok::Sqrt
            }
            '|' => {
                let mut digits = String::new();
                loop {
                    match chars.get(k) {
                        Some(&(_, d)) if d.is_ascii_digit() => digits.push(d),
                        Some(&(_, d)) if d.is_whitespace() => {}
                        Some(&(_, '>' | '⟩')) => break,
                        Some(&(p, _)) => return Err(err(p, "expected digit or '>' in ket")),
                        None => return Err(err(text.len(), "unterminated ket")),
                    }
                    k += 1;
                }
                k += 1;
                if digits.is_empty() {
                    return Err(err(pos, "empty ket"));
                }
                Tok::Ket(digits)
            }
            d if d.is_ascii_digit() || d == '.' => {
                let mut s = String::from(d);
                while let Some(&(_, d)) = chars.get(k) {
                    let exp_sign = matches!(d, '+' | '-') && s.ends_with(['e', 'E']);
                    if d.is_ascii_digit() || d == '.' || matches!(d, 'e' | 'E') || exp_sign {
                        s.push(d);
                        k += 1;
                    } else {
                        break;
                    }
                }
                Tok::Num(s)
            }
            _ => return Err(err(pos, &format!("unexpected character {c:?}"))),
        };
        out.push((tok, pos));
    }
    Ok(out)
}

/// Exact value of a decimal literal such as `12`, `0.25` or `1.5e-3`.
fn parse_number(s: &str, pos: usize) -> Result<BigRational> {
    let bad = || Error::Syntax { pos, msg: format!("bad number {s:?}") };
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(e) => (&s[..e], s[e + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-shift) as usize))
    })
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

type RawTerm = (Coefficient, String, usize);

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(_, p)| p)
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.here(), msg: msg.to_string() }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Vec<RawTerm>> {
        if self.peek() != Some(&Tok::LParen) {
            return self.sum();
        }
        self.pos += 1;
        let terms = self.sum()?;
        self.expect(Tok::RParen, "')'")?;
        if !self.eat(&Tok::Slash) {
            return Ok(terms);
        }
        let divide = self.divisor()?;
        Ok(terms.into_iter().map(|(c, k, p)| (divide(c), k, p)).collect())
    }

    fn sum(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = self.sign();
        loop {
            let (c, ket, pos) = self.term()?;
            terms.push((if negative { c.negated() } else { c }, ket, pos));
            match self.peek() {
                Some(Tok::Plus | Tok::Minus) => negative = self.sign(),
                _ => return Ok(terms),
            }
        }
    }

    /// Consumes any run of `+`/`-`; true when the net sign is negative.
    fn sign(&mut self) -> bool {
        let mut negative = false;
        loop {
            if self.eat(&Tok::Minus) {
                negative = !negative;
            } else if !self.eat(&Tok::Plus) {
                return negative;
            }
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let coeff = match self.peek() {
            Some(Tok::Ket(_)) => Coefficient::rational(GaussianRational::one()),
            _ => {
                let c = self.factor()?;
                self.eat(&Tok::Star);
                c
            }
        };
        match self.tokens.get(self.pos).cloned() {
            Some((Tok::Ket(digits), pos)) => {
                self.pos += 1;
                Ok((coeff, digits, pos))
            }
            _ => Err(self.error("coefficient without ket")),
        }
    }

    fn factor(&mut self) -> Result<Coefficient> {
        let mut c = match self.tokens.get(self.pos).cloned() {
            Some((Tok::Num(s), pos)) => {
                self.pos += 1;
                let mut r = parse_number(&s, pos)?;
                if self.peek() == Some(&Tok::Slash) && matches!(self.tokens.get(self.pos + 1), Some((Tok::Num(_), _))) {
                    self.pos += 1;
                    let d = self.uint_value()?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    r /= d;
                }
                let q = GaussianRational::real(r);
                Coefficient::rational(if self.eat(&Tok::I) { &q * &GaussianRational::i() } else { q })
            }
            Some((Tok::I, _)) => {
                self.pos += 1;
                Coefficient::rational(GaussianRational::i())
            }
            Some((Tok::Sqrt, _)) => {
                let k = self.root()?;
                Coefficient::rational(GaussianRational::one()).times_root(k)
            }
            _ => return Err(self.error("expected coefficient or ket")),
        };
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            c = self.divisor()?(c);
        }
        Ok(c)
    }

    fn uint_value(&mut self) -> Result<BigRational> {
        match self.tokens.get(self.pos).cloned() {
            Some((Tok::Num(s), pos)) => {
                self.pos += 1;
                parse_number(&s, pos)
            }
            _ => Err(self.error("expected number")),
        }
    }

    fn root(&mut self) -> Result<u64> {
        self.expect(Tok::Sqrt, "sqrt")?;
        self.expect(Tok::LParen, "'(' after sqrt")?;
        let at = self.here();
        let v = self.uint_value()?;
        let k = if v.is_integer() { v.to_integer().to_u64() } else { None };
        let k = k.ok_or(Error::Syntax { pos: at, msg: "sqrt takes a non-negative integer".into() })?;
        self.expect(Tok::RParen, "')' after sqrt argument")?;
        Ok(k)
    }

    /// Parses `sqrt(k)` or a number after `/`, returning the division.
    fn divisor(&mut self) -> Result<Box<dyn Fn(Coefficient) -> Coefficient>> {
        if self.peek() == Some(&Tok::Sqrt) {
            let k = self.root()?;
            if k == 0 {
                return Err(Error::DivisionByZero);
            }
            Ok(Box::new(move |c: Coefficient| c.over_root(k)))
        } else {
            let d = self.uint_value()?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Box::new(move |c: Coefficient| c.over(&d)))
        }
    }
}

fn is_bits(s: &str) -> bool {
    s.chars().all(|c| c == '0' || c == '1')
}

fn bits_needed(index: usize) -> usize {
    (usize::BITS - index.leading_zeros()).max(1) as usize
}

fn resolve(raw: Vec<RawTerm>, declared: Option<usize>) -> Result<KetExpr> {
    let syntax = |pos: usize, msg: String| Error::Syntax { pos, msg };
    let bitstring: Vec<bool> = match declared {
        Some(n) => raw
            .iter()
            .map(|(_, k, pos)| {
                if k.len() == n && is_bits(k) {
                    Ok(true)
                } else if k.len() > 1 && k.starts_with('0') {
                    Err(syntax(*pos, format!("bitstring {k:?} does not match {n} qubits")))
                } else {
                    Ok(false)
                }
            })
            .collect::<Result<_>>()?,
        None => {
            let uniform = raw.iter().all(|(_, k, _)| is_bits(k) && k.len() >= 2 && k.len() == raw[0].1.len());
            raw.iter().map(|(_, k, _)| uniform || (k.len() > 1 && k.starts_with('0'))).collect()
        }
    };
    let mut width = declared;
    for ((_, k, pos), &b) in raw.iter().zip(&bitstring) {
        if b {
            if !is_bits(k) {
                return Err(syntax(*pos, format!("{k:?} is not a bitstring")));
            }
            match width {
                Some(w) if w != k.len() => return Err(syntax(*pos, format!("bitstring {k:?} does not match {w} qubits"))),
                _ => width = Some(k.len()),
            }
        }
    }
    let mut terms = Vec::with_capacity(raw.len());
    let mut widest = 1;
    for ((c, k, pos), b) in raw.into_iter().zip(bitstring) {
        let index = if b {
            usize::from_str_radix(&k, 2).expect("checked bits")
        } else {
            k.parse::<usize>().map_err(|_| syntax(pos, format!("index {k} too large")))?
        };
        widest = widest.max(bits_needed(index));
        terms.push((c, index));
    }
    let n = width.unwrap_or(widest);
    if n > MAX_QUBITS {
        return Err(Error::QubitCount { got: n, expected: format!("1..={MAX_QUBITS}") });
    }
    if let Some(&(_, index)) = terms.iter().find(|&&(_, i)| i >> n != 0) {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(KetExpr { n, terms })
}

/// Canonical text of an exact state: ascending kets, zero amplitudes omitted.
pub fn format_exact(k: &ExactKet) -> String {
    let mut body = String::new();
    for (i, a) in k.state.amps().iter().enumerate() {
        if !a.re.is_zero() {
            push_term(&mut body, &a.re, false, i);
        }
        if !a.im.is_zero() {
            push_term(&mut body, &a.im, true, i);
        }
    }
    if body.is_empty() {
        body.push('0');
    }
    if k.inv_sqrt == 1 {
        body
    } else {
        format!("({body})/sqrt({})", k.inv_sqrt)
    }
}

fn push_term(out: &mut String, c: &BigRational, imaginary: bool, index: usize) {
    let first = out.is_empty();
    match (c.is_negative(), first) {
        (true, true) => out.push_str("- "),
        (true, false) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
        (false, true) => {}
    }
    let mag = c.abs();
    if !mag.is_one() {
        out.push_str(&mag.to_string());
    }
    if imaginary {
        out.push('i');
    }
    out.push_str(&format!("|{index}>"));
}

/// Canonical text of a floating state.
///
/// Amplitudes that are small rationals up to a common `1/√k` print exactly;
/// anything else prints as decimals with 12 significant digits.
pub fn format(s: &State) -> String {
    match recognize_exact(s) {
        Some(k) => format_exact(&k),
        None => format_decimal(s),
    }
}

fn recognize_exact(s: &State) -> Option<ExactKet> {
    const MAX_DEN: i64 = 64;
    let rational = |y: f64| -> Option<BigRational> {
        (1..=MAX_DEN).find_map(|q| {
            let p = (y * q as f64).round();
            let close = (y - p / q as f64).abs() <= 1e-12 * y.abs().max(1.0);
            (close && p.abs() < 1e12).then(|| BigRational::new(BigInt::from(p as i64), BigInt::from(q)))
        })
    };
    (1..=64u64).filter(|&r| split_root(r).0 == 1).find_map(|r| {
        let root = (r as f64).sqrt();
        let amps = s
            .amps()
            .iter()
            .map(|a| Some(GaussianRational::new(rational(a.re * root)?, rational(a.im * root)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(ExactKet { state: PureState::new(s.n(), amps).ok()?, inv_sqrt: r })
    })
}

fn decimal(x: f64) -> String {
    let mag = x.abs();
    let decimals = (11 - mag.log10().floor() as i32).clamp(0, 40) as usize;
    let text = format!("{mag:.decimals$}");
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

fn format_decimal(s: &State) -> String {
    let mut out = String::new();
    let mut push = |x: f64, imaginary: bool, index: usize| {
        let first = out.is_empty();
        out.push_str(match (x < 0.0, first) {
            (true, true) => "- ",
            (true, false) => " - ",
            (false, false) => " + ",
            (false, true) => "",
        });
        out.push_str(&decimal(x));
        if imaginary {
            out.push('i');
        }
        out.push_str(&format!("|{index}>"));
    };
    for (i, a) in s.amps().iter().enumerate() {
        if a.re != 0.0 {
            push(a.re, false, i);
        }
        if a.im != 0.0 {
            push(a.im, true, i);
        }
    }
    out
}

/// Amplitudes keyed by index, for display.
pub fn support_map(s: &ExactState) -> BTreeMap<usize, GaussianRational> {
    s.amps().iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, a.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(text: &str, n: Option<usize>) -> ExactKet {
        parse_exact(text, n).unwrap()
    }

    #[test]
    fn ghz_bitstrings() {
        let k = exact("(|0000>+|1111>)/sqrt(2)", None);
        assert_eq!(k.state.n(), 4);
        assert_eq!(k.inv_sqrt, 2);
        assert_eq!(k.state.support(), vec![0, 15]);
        assert!(k.state.amps()[0].is_one() && k.state.amps()[15].is_one());
        let f = parse("(|0000>+|1111>)/sqrt(2)", None).unwrap();
        assert!((f.amp(0).re - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn decimal_indices() {
        let k = exact("|5>", Some(4));
        assert_eq!(k.state.support(), vec![5]);
        let k = exact("i|1> + 2|2> - |3>", Some(4));
        assert_eq!(k.state.amps()[1], GaussianRational::i());
        assert_eq!(k.state.amps()[2], GaussianRational::from_int(2));
        assert_eq!(k.state.amps()[3], GaussianRational::from_int(-1));
        assert_eq!(exact("(|0>+|5>+|10>-|15>)/2", None).state.n(), 4);
        assert_eq!(exact("|10>", Some(4)).state.support(), vec![10]);
        assert_eq!(exact("|10>", None).state.support(), vec![2]);
        assert_eq!(exact("|0011> + |5>", None).state.support(), vec![3, 5]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("|16>", Some(4)), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse("|0> - |0>", Some(2)), Err(Error::ZeroState)));
        assert!(matches!(parse("2 + |1>", None), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("|011>", Some(4)), Err(Error::Syntax { .. })));
        assert!(matches!(parse("|0011> + |111>", None), Err(Error::IndexOutOfRange { index: 111, n: 4 })));
        assert!(matches!(parse("(|0>+|1>", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse("|1>/sqrt(0)", None), Err(Error::Syntax { .. }) | Err(Error::DivisionByZero)));
    }

    #[test]
    fn radicals_must_agree() {
        assert_eq!(parse_exact("|0> + sqrt(2)|1>", None), Err(Error::NotExact));
        let k = exact("3/sqrt(2)|2> + sqrt(8)|3>", None);
        assert_eq!(k.inv_sqrt, 2);
        assert_eq!(k.state.amps()[2], GaussianRational::from_int(3));
        assert_eq!(k.state.amps()[3], GaussianRational::from_int(4));
    }

    #[test]
    fn formatting() {
        let k = exact("(|0>+|15>)/sqrt(2)", None);
        assert_eq!(format_exact(&k), "(|0> + |15>)/sqrt(2)");
        let s = exact("|0> - 1/2|15>", Some(4));
        assert_eq!(format_exact(&s), "|0> - 1/2|15>");
        assert!(!format_exact(&exact("|1> + 0|3>", Some(4))).contains("|3>"));
        assert_eq!(format(&k.to_float()), "(|0> + |15>)/sqrt(2)");
        assert_eq!(format_exact(&exact("i|1> + |1>", Some(1))), "|1> + i|1>");
    }

    #[test]
    fn decimal_roundtrip() {
        let s = PureState::new(1, vec![Complex64::new(0.1234567890123456, -0.3), Complex64::new(std::f64::consts::PI, 0.0)]).unwrap();
        let text = format(&s);
        let back = parse(&text, Some(1)).unwrap();
        for (a, b) in s.amps().iter().zip(back.amps()) {
            assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0), "{text}");
        }
        assert_eq!(parse_number("1.5e-3", 0).unwrap(), BigRational::new(3.into(), 2000.into()));
    }

    #[test]
    fn state_file() {
        let (n, body) = split_state_file("qubits: 4\n(|0> + |15>)/sqrt(2)\n").unwrap();
        assert_eq!(n, Some(4));
        assert_eq!(exact(&body, n).state.support(), vec![0, 15]);
    }

    #[test]
    fn whitespace() {
        assert_eq!(exact("( | 0 0 > + - 1 / 2 i | 1 1 > ) / sqrt ( 2 )", None), exact("(|00>+-1/2i|11>)/sqrt(2)", None));
    }
}
