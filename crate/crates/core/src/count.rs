//! Census of degenerate SLOCC classes of n qubits.
//!
//! A degenerate class splits the qubits into k ≥ 2 groups, each group truly
//! entangled among itself. Summing over integer partitions r₁ ≤ … ≤ r_k of
//! n gives
//!
//! ```text
//! d(n) = Σ n!/(r₁!…r_k!) · t(r₁)…t(r_k) / (s₁!…s_l!)
//! ```
//!
//! where t(m) counts true classes of m qubits and the sⱼ are multiplicities
//! of repeated part values. t(1) = t(2) = 1 and t(3) = 2 are built in;
//! larger t(m) stay symbolic unless supplied.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parts in non-decreasing order, at least two of them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(part value, multiplicity)` in increasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `n! / (Π rᵢ! · Π sⱼ!)`: the number of ways to split labelled qubits
    /// into unlabelled groups of these sizes.
    pub fn arrangements(&self) -> BigInt {
        let denom = self.parts.iter().map(|&r| factorial(r)).product::<BigInt>()
            * self.multiplicities().iter().map(|&(_, s)| factorial(s)).product::<BigInt>();
        factorial(self.n()) / denom
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn extend(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in min..=rest {
        prefix.push(p);
        extend(rest - p, p, prefix, out);
        prefix.pop();
    }
}

/// Partitions of `n` into at least two parts, lexicographic.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n < 2 {
        return Err(Error::Invalid(format!("partitions need n >= 2, got {n}")));
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= 2);
    out.sort();
    Ok(out.into_iter().map(|parts| Partition { parts }).collect())
}

/// Known true-class counts for one, two and three qubits.
pub fn builtin_t(m: usize) -> Option<u64> {
    match m {
        1 | 2 => Some(1),
        3 => Some(2),
        _ => None,
    }
}

/// A product of unknown `t(m)` factors, as sorted `m` values with repetition.
pub type Monomial = Vec<usize>;

/// `constant + Σ coeff · Π t(m)` with every unknown `m ≥ 4`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClassCount {
    pub constant: BigInt,
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl ClassCount {
    /// Coefficient of the linear term `t(m)`.
    pub fn coeff(&self, m: usize) -> BigInt {
        self.terms.get(&vec![m]).cloned().unwrap_or_default()
    }

    fn add(&mut self, mono: Monomial, c: BigInt) {
        if mono.is_empty() {
            self.constant += c;
        } else {
            *self.terms.entry(mono).or_default() += c;
        }
    }

    /// Substitutes `known` and fails on any `t(m)` left without a value.
    pub fn evaluate(&self, known: &BTreeMap<usize, BigInt>) -> Result<BigInt> {
        let mut total = self.constant.clone();
        for (mono, c) in &self.terms {
            let mut v = c.clone();
            for m in mono {
                v *= known.get(m).ok_or(Error::MissingT(*m))?;
            }
            total += v;
        }
        Ok(total)
    }

    pub fn is_integer(&self) -> bool {
        self.terms.values().all(Zero::is_zero)
    }
}

/// Terms by decreasing largest factor, then the constant, e.g.
/// `6*t(5) + 30*t(4) + 276`.
impl fmt::Display for ClassCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (mono, c) in self.terms.iter().rev() {
            if c.is_zero() {
                continue;
            }
            let mut powers: BTreeMap<usize, usize> = BTreeMap::new();
            for &m in mono {
                *powers.entry(m).or_default() += 1;
            }
            let factors: Vec<String> = powers
                .iter()
                .rev()
                .map(|(m, e)| if *e == 1 { format!("t({m})") } else { format!("t({m})^{e}") })
                .collect();
            parts.push(format!("{c}*{}", factors.join("*")));
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        f.write_str(&parts.join(" + "))
    }
}

fn check_known(known: &BTreeMap<usize, BigInt>) -> Result<()> {
    for (&m, v) in known {
        if let Some(b) = builtin_t(m) {
            if *v != BigInt::from(b) {
                return Err(Error::Invalid(format!("t({m}) is fixed at {b}")));
            }
        }
        if m == 0 {
            return Err(Error::Invalid("t(0) is undefined".into()));
        }
    }
    Ok(())
}

/// d(n) with every `t(m)` for `m ≥ 4` taken from `known` where present and
/// left symbolic otherwise.
pub fn degenerate_count_with(n: usize, known: &BTreeMap<usize, BigInt>) -> Result<ClassCount> {
    check_known(known)?;
    let mut out = ClassCount::default();
    for p in partitions(n)? {
        let mut c = p.arrangements();
        let mut mono = Vec::new();
        for &r in &p.parts {
            match builtin_t(r).map(BigInt::from).or_else(|| known.get(&r).cloned()) {
                Some(v) => c *= v,
                None => mono.push(r),
            }
        }
        out.add(mono, c);
    }
    Ok(out)
}

/// Fully symbolic d(n).
pub fn degenerate_count_symbolic(n: usize) -> Result<ClassCount> {
    degenerate_count_with(n, &BTreeMap::new())
}

/// Numeric d(n); every `t(m)` with `4 ≤ m < n` that appears must be known.
pub fn degenerate_count(n: usize, known: &BTreeMap<usize, BigInt>) -> Result<BigInt> {
    degenerate_count_with(n, known)?.evaluate(known)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(n: usize) -> Vec<Vec<usize>> {
        partitions(n).unwrap().into_iter().map(|p| p.parts).collect()
    }

    fn t(pairs: &[(usize, i64)]) -> BTreeMap<usize, BigInt> {
        pairs.iter().map(|&(m, v)| (m, BigInt::from(v))).collect()
    }

    /// Sum over set partitions of {0..n} with at least two blocks, each
    /// block of size r contributing t(r); unknown sizes become monomials.
    fn brute_force(n: usize) -> ClassCount {
        let mut out = ClassCount::default();
        let mut labels = vec![0usize; n];
        loop {
            let blocks = labels.iter().max().unwrap() + 1;
            if blocks >= 2 {
                let mut sizes = vec![0usize; blocks];
                for &l in &labels {
                    sizes[l] += 1;
                }
                let mut c = BigInt::one();
                let mut mono: Vec<usize> = Vec::new();
                for s in sizes {
                    match builtin_t(s) {
                        Some(v) => c *= v,
                        None => mono.push(s),
                    }
                }
                mono.sort();
                out.add(mono, c);
            }
            // Next restricted growth string.
            let mut i = n - 1;
            loop {
                let max_prev = labels[..i].iter().max().copied().unwrap_or(0);
                if i > 0 && labels[i] <= max_prev {
                    labels[i] += 1;
                    labels[i + 1..].iter_mut().for_each(|x| *x = 0);
                    break;
                }
                if i <= 1 {
                    return out;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn small_partitions() {
        assert_eq!(parts(2), vec![vec![1, 1]]);
        assert_eq!(parts(4), vec![vec![1, 1, 1, 1], vec![1, 1, 2], vec![1, 3], vec![2, 2]]);
        assert_eq!(parts(5).len(), 6);
        assert!(partitions(1).is_err());
        assert!(parts(7).iter().all(|p| p.iter().sum::<usize>() == 7 && p.windows(2).all(|w| w[0] <= w[1])));
    }

    #[test]
    fn four_qubit_cases() {
        let terms: Vec<BigInt> = partitions(4)
            .unwrap()
            .iter()
            .map(|p| p.arrangements() * p.parts.iter().map(|&r| builtin_t(r).unwrap()).product::<u64>())
            .collect();
        assert_eq!(terms, [1, 6, 8, 3].map(BigInt::from));
    }

    #[test]
    fn known_counts() {
        assert_eq!(degenerate_count(4, &t(&[])).unwrap(), BigInt::from(18));
        assert_eq!(degenerate_count_symbolic(5).unwrap().to_string(), "5*t(4) + 66");
        assert_eq!(degenerate_count_symbolic(6).unwrap().to_string(), "6*t(5) + 30*t(4) + 276");
        assert_eq!(degenerate_count(5, &t(&[(4, 28)])).unwrap(), BigInt::from(206));
        assert_eq!(degenerate_count(5, &t(&[])), Err(Error::MissingT(4)));
        assert!(degenerate_count_with(5, &t(&[(3, 5)])).is_err());
    }

    #[test]
    fn quadratic_term_at_eight() {
        let c = degenerate_count_symbolic(8).unwrap();
        assert_eq!(c.terms[&vec![4, 4]], BigInt::from(35));
        assert!(c.to_string().contains("35*t(4)^2"));
    }

    #[test]
    fn constant_is_count_without_large_classes() {
        for n in 2..=9 {
            let c = degenerate_count_symbolic(n).unwrap();
            let zeros: BTreeMap<usize, BigInt> = (4..n).map(|m| (m, BigInt::zero())).collect();
            assert_eq!(c.evaluate(&zeros).unwrap(), c.constant);
        }
    }

    #[test]
    fn agrees_with_set_partitions() {
        for n in 2..=9 {
            assert_eq!(degenerate_count_symbolic(n).unwrap(), brute_force(n), "n = {n}");
        }
    }

    #[test]
    fn bell_numbers_with_unit_weights() {
        // All partitions including the trivial one, every weight 1.
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(2) {
            let total: BigInt = partitions(n).unwrap().iter().map(Partition::arrangements).sum::<BigInt>() + 1;
            assert_eq!(total, BigInt::from(b));
        }
    }
}
