//! Zero-pattern signatures, sufficient conditions for true entanglement and
//! necessary-condition matching against the catalog.

use std::fmt;

use num_complex::Complex64;

use crate::catalog::{class_names, class_properties, pair_refuted, ClassProperties, DFlag, FFlags, Relation};
use crate::error::Result;
use crate::invariants::InvariantVector;
use crate::scalar::Scalar;
use crate::state::{ExactState, State};

/// Default zero threshold for normalized floating evaluations.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, PartialEq, Debug)]
pub struct Signature {
    pub iv_zero: bool,
    pub f_aggregate_zero: bool,
    /// `fi_zero[i]` refers to F_{i+1}.
    pub fi_zero: [bool; 10],
    pub di_zero: [bool; 3],
    pub rel_f9_eq_f10: bool,
    pub rel_f1f2_eq_f9sq: bool,
    pub rel_f3f4_eq_f9sq: bool,
    /// `None` on the exact carrier.
    pub tolerance: Option<f64>,
}

impl Signature {
    pub fn is_exact(&self) -> bool {
        self.tolerance.is_none()
    }

    pub fn relation(&self, r: Relation) -> bool {
        match r {
            Relation::F9EqF10 => self.rel_f9_eq_f10,
            Relation::F1F2EqF9Sq => self.rel_f1f2_eq_f9sq,
            Relation::F3F4EqF9Sq => self.rel_f3f4_eq_f9sq,
        }
    }

    pub fn f_flags(&self) -> FFlags {
        FFlags { zero: self.fi_zero, f9_eq_f10: self.rel_f9_eq_f10 }
    }

    /// 1-based indices of the nonzero Fᵢ.
    pub fn f_nonzero(&self) -> Vec<usize> {
        (1..=10).filter(|&i| !self.fi_zero[i - 1]).collect()
    }

    fn from_parts<S>(inv: &InvariantVector<S>, zero: impl Fn(&S) -> bool, rel: impl Fn(Relation) -> bool, tolerance: Option<f64>) -> Self {
        let fi_zero = std::array::from_fn(|i| zero(&inv.f[i]));
        Signature {
            iv_zero: zero(&inv.iv),
            f_aggregate_zero: fi_zero.iter().all(|&z| z),
            fi_zero,
            di_zero: std::array::from_fn(|i| zero(&inv.d[i])),
            rel_f9_eq_f10: rel(Relation::F9EqF10),
            rel_f1f2_eq_f9sq: rel(Relation::F1F2EqF9Sq),
            rel_f3f4_eq_f9sq: rel(Relation::F3F4EqF9Sq),
            tolerance,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = |b: bool| if b { "=0" } else { "!=0" };
        writeln!(f, "IV {}", z(self.iv_zero))?;
        writeln!(f, "F {}", if self.f_aggregate_zero { "=0" } else { ">0" })?;
        let nz: Vec<String> = self.f_nonzero().iter().map(|i| format!("F{i}")).collect();
        writeln!(f, "F nonzero: {}", if nz.is_empty() { "none".into() } else { nz.join(" ") })?;
        writeln!(f, "D1 {} D2 {} D3 {}", z(self.di_zero[0]), z(self.di_zero[1]), z(self.di_zero[2]))?;
        for r in Relation::ALL {
            writeln!(f, "{r}: {}", if self.relation(r) { "holds" } else { "fails" })?;
        }
        match self.tolerance {
            Some(t) => write!(f, "carrier: float (tol {t:e})"),
            None => write!(f, "carrier: exact"),
        }
    }
}

/// Floating signature of the normalized state.
pub fn signature(s: &State, tol: f64) -> Result<Signature> {
    let inv = InvariantVector::evaluate(&s.normalize()?)?;
    Ok(float_signature(&inv, tol))
}

/// Signature of already evaluated floating invariants.
pub fn float_signature(inv: &InvariantVector<Complex64>, tol: f64) -> Signature {
    let f9 = inv.f[8].norm();
    let rel = |r: Relation| {
        let (lhs, rhs) = r.sides(&inv.f);
        // F₉ = F₁₀ scales with |F₉|, the product relations with |F₉|².
        let scale = if r == Relation::F9EqF10 { f9 } else { f9 * f9 };
        (lhs - rhs).norm() <= tol.max(tol * scale)
    };
    Signature::from_parts(inv, |v| v.norm() < tol, rel, Some(tol))
}

/// Exact signature; vanishing is decided identically.
pub fn exact_signature(s: &ExactState) -> Result<Signature> {
    s.require_nonzero()?;
    let inv = InvariantVector::evaluate(s)?;
    let rel = |r: Relation| {
        let (lhs, rhs) = r.sides(&inv.f);
        lhs == rhs
    };
    Ok(Signature::from_parts(&inv, |v| v.is_zero(), rel, None))
}

/// Which sufficient condition certified a state as truly entangled.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Certification {
    /// IV = 0 and D_i ≠ 0.
    ZeroIvNonzeroD { d: usize },
    /// IV ≠ 0 and F_i ≠ 0 for some i ≤ 8.
    NonzeroIvNonzeroF { f: usize },
    /// IV ≠ 0 and two distinct D_i, D_j ≠ 0.
    NonzeroIvTwoD { d: (usize, usize) },
    NotCertified,
}

impl Certification {
    /// 1, 2 or 3 for the condition that fired.
    pub fn condition(&self) -> Option<u8> {
        match self {
            Certification::ZeroIvNonzeroD { .. } => Some(1),
            Certification::NonzeroIvNonzeroF { .. } => Some(2),
            Certification::NonzeroIvTwoD { .. } => Some(3),
            Certification::NotCertified => None,
        }
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certification::ZeroIvNonzeroD { d } => write!(f, "true entanglement by condition (1): IV=0, D{d}!=0"),
            Certification::NonzeroIvNonzeroF { f: i } => write!(f, "true entanglement by condition (2): IV!=0, F{i}!=0"),
            Certification::NonzeroIvTwoD { d: (i, j) } => {
                write!(f, "true entanglement by condition (3): IV!=0, D{i}!=0, D{j}!=0")
            }
            Certification::NotCertified => write!(f, "not certified"),
        }
    }
}

/// Tries conditions (1), (2), (3) in order and reports the first that fires.
pub fn certify_true_entanglement(sig: &Signature) -> Certification {
    let nonzero_d: Vec<usize> = (1..=3).filter(|&i| !sig.di_zero[i - 1]).collect();
    if sig.iv_zero {
        return nonzero_d.first().map_or(Certification::NotCertified, |&d| Certification::ZeroIvNonzeroD { d });
    }
    if let Some(f) = (1..=8).find(|&i| !sig.fi_zero[i - 1]) {
        return Certification::NonzeroIvNonzeroF { f };
    }
    if nonzero_d.len() >= 2 {
        return Certification::NonzeroIvTwoD { d: (nonzero_d[0], nonzero_d[1]) };
    }
    Certification::NotCertified
}

/// Whether `sig` satisfies every necessary condition of the class.
///
/// Entries marked opt, pair claims listed as errata, and anything else that
/// is only an existence statement never exclude a class.
pub fn satisfies(sig: &Signature, p: &ClassProperties) -> bool {
    let nonzero = |i: usize| !sig.fi_zero[i - 1];
    sig.iv_zero == p.iv_zero
        && sig.f_aggregate_zero != p.f_positive
        && p.d_flags.iter().zip(sig.di_zero).all(|(flag, z)| *flag == DFlag::Opt || z)
        && p.f_zero.iter().all(|&i| sig.fi_zero[i - 1])
        && p.f_nonzero.iter().all(|&i| nonzero(i))
        && p.nonzero_pairs.iter().all(|&(i, j)| pair_refuted(&p.name, (i, j)) || nonzero(i) || nonzero(j))
        && p.relations.iter().all(|&r| sig.relation(r))
        && p.conditionals.iter().all(|c| c.fire(&sig.f_flags()).iter().all(|x| x.holds))
}

/// Every catalog class whose necessary conditions `sig` satisfies.
pub fn match_classes(sig: &Signature) -> Vec<String> {
    class_names()
        .into_iter()
        .filter(|n| satisfies(sig, &class_properties(n).expect("catalog class")))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Distinction {
    Inequivalent(String),
    Undecided,
}

impl fmt::Display for Distinction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distinction::Inequivalent(r) => write!(f, "provably inequivalent: {r}"),
            Distinction::Undecided => write!(f, "undecided"),
        }
    }
}

fn distinguish_by_iv(z1: bool, z2: bool) -> Distinction {
    if z1 == z2 {
        Distinction::Undecided
    } else {
        let side = |z: bool| if z { "IV=0" } else { "IV!=0" };
        Distinction::Inequivalent(format!("first has {}, second has {}", side(z1), side(z2)))
    }
}

/// Separates two states only when exactly one has vanishing IV; the
/// individual Fᵢ, Dᵢ flags are not orbit invariants and are never used.
pub fn distinguish_states(s1: &State, s2: &State, tol: f64) -> Result<Distinction> {
    let z = |s: &State| -> Result<bool> { Ok(crate::invariants::iv(&s.normalize()?)?.norm() < tol) };
    Ok(distinguish_by_iv(z(s1)?, z(s2)?))
}

pub fn distinguish_exact(s1: &ExactState, s2: &ExactState) -> Result<Distinction> {
    let z = |s: &ExactState| -> Result<bool> {
        s.require_nonzero()?;
        Ok(crate::invariants::iv(s)?.is_zero())
    };
    Ok(distinguish_by_iv(z(s1)?, z(s2)?))
}
