//! Named four-qubit states and the class-level properties attached to them.
//!
//! Greek class names are romanized: `kappa4` is |κ₄⟩, `phi4` is |φ₄⟩ and
//! `varphi4` is the variant |φ'₄⟩. Representatives are stored unnormalized
//! with integer amplitudes. F indices in this module are 1-based, matching
//! the names F₁..F₁₀.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::scalar::Scalar;
use crate::state::{make_state, PureState, State};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StateKind {
    Representative,
    Degenerate,
    Family,
    Conjecture,
}

#[derive(Clone, Debug)]
pub struct NamedState<S = GaussianRational> {
    pub name: String,
    pub display: String,
    pub state: PureState<S>,
    pub kind: StateKind,
}

/// `(id, display, amplitudes)` for the 28 true classes.
type Row = (&'static str, &'static str, &'static [(usize, i64)]);

const REPRESENTATIVES: &[Row] = &[
    ("GHZ", "|GHZ>", &[(0, 1), (15, 1)]),
    ("W", "|W>", &[(1, 1), (2, 1), (4, 1), (8, 1)]),
    ("C4", "|C4>", &[(3, 1), (5, 1), (6, 1), (9, 1), (10, 1), (12, 1)]),
    ("kappa4", "|κ4>", &[(0, 1), (3, 1), (10, 1), (15, -1)]),
    ("E4", "|E4>", &[(0, 1), (5, 1), (9, 1), (15, -1)]),
    ("L4", "|L4>", &[(0, 1), (3, 1), (9, 1), (15, -1)]),
    ("H4", "|H4>", &[(3, 1), (6, 1), (12, 1)]),
    ("lambda4", "|λ4>", &[(5, 1), (6, 1), (10, 1)]),
    ("M4", "|M4>", &[(3, 1), (5, 1), (12, 1)]),
    ("pi4", "|π4>", &[(0, 1), (3, 1), (5, 1), (6, 1), (10, 1), (15, 1)]),
    ("theta4", "|θ4>", &[(0, 1), (5, 1), (6, 1), (10, 1), (12, 1), (15, 1)]),
    ("sigma4", "|σ4>", &[(0, 1), (3, 1), (9, 1), (10, 1), (12, 1), (15, 1)]),
    ("rho4", "|ρ4>", &[(0, 1), (3, 1), (6, 1), (10, 1), (12, 1), (15, 1)]),
    ("xi4", "|ξ4>", &[(0, 1), (6, 1), (9, 1), (10, 1), (12, 1), (15, 1)]),
    ("epsilon4", "|ε4>", &[(0, 1), (3, 1), (6, 1), (9, 1), (10, 1), (15, 1)]),
    ("chi4", "|χ4>", &[(0, 1), (3, 1), (6, 1), (10, 1), (12, 1), (15, -1)]),
    ("psi4", "|ψ4>", &[(0, 1), (5, 1), (10, 1), (15, -1)]),
    ("phi4", "|φ4>", &[(0, 1), (3, 1), (12, 1), (15, -1)]),
    ("mu4", "|μ4>", &[(0, 1), (6, 1), (9, 1), (15, -1)]),
    ("varphi4", "|φ'4>", &[(1, 1), (6, 1), (11, 1)]),
    ("vartheta4", "|ϑ4>", &[(2, 1), (5, 1), (11, 1)]),
    ("tau4", "|τ4>", &[(1, 1), (7, 1), (10, 1)]),
    ("varrho4", "|ϱ4>", &[(2, 1), (7, 1), (9, 1)]),
    ("zeta4", "|ζ4>", &[(0, 1), (11, 1), (12, 1)]),
    ("iota4", "|ι4>", &[(0, 1), (3, 1), (13, 1)]),
    ("upsilon4", "|υ4>", &[(2, 1), (5, 1), (9, 1), (11, 1)]),
    ("omega4", "|ω4>", &[(0, 1), (5, 1), (8, 1), (14, 1)]),
    ("varpi4", "|ϖ4>", &[(2, 1), (5, 1), (8, 1), (12, 1)]),
];

/// Names of the 28 true classes in catalog order.
pub fn representative_names() -> impl Iterator<Item = &'static str> {
    REPRESENTATIVES.iter().map(|r| r.0)
}

pub fn representative(name: &str) -> Result<NamedState> {
    let (id, display, amps) =
        REPRESENTATIVES.iter().find(|r| r.0 == name).ok_or_else(|| Error::UnknownClass(name.into()))?;
    Ok(NamedState {
        name: id.to_string(),
        display: display.to_string(),
        state: make_state(4, amps.iter().map(|&(i, c)| (i, GaussianRational::from_int(c))))?,
        kind: StateKind::Representative,
    })
}

pub fn representatives() -> Vec<NamedState> {
    representative_names().map(|n| representative(n).expect("catalog entry")).collect()
}

/// Zero pattern printed for a single representative: which Dᵢ are nonzero
/// and which Fᵢ are nonzero. Carries known misprints verbatim; see
/// [`errata`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReferencePattern {
    pub d_nonzero: [bool; 3],
    pub f_nonzero: &'static [usize],
}

const REFERENCE_PATTERNS: &[(&str, [bool; 3], &[usize])] = &[
    ("GHZ", [false, false, false], &[9]),
    ("C4", [true, true, true], &[9]),
    ("kappa4", [false, false, false], &[9]),
    ("E4", [false, false, false], &[9]),
    ("L4", [false, false, false], &[9]),
    ("H4", [false, false, false], &[9]),
    ("lambda4", [false, true, false], &[10]),
    ("M4", [false, false, false], &[9]),
    ("pi4", [true, false, false], &[1, 6, 9, 10]),
    ("theta4", [true, false, false], &[4, 7, 9, 10]),
    ("sigma4", [false, true, false], &[2, 3]),
    ("rho4", [false, true, false], &[6, 7]),
    ("xi4", [false, false, true], &[2, 7, 9, 10]),
    ("epsilon4", [false, false, true], &[3, 6, 9, 10]),
    ("W", [false, false, false], &[]),
    ("chi4", [false, true, false], &[6, 7, 9]),
    ("upsilon4", [false, false, false], &[1, 3, 8]),
    ("varpi4", [false, false, false], &[1, 5, 7]),
    ("psi4", [true, false, false], &[3, 4, 9, 10]),
    ("phi4", [false, true, false], &[9]),
    ("mu4", [false, false, true], &[9, 10]),
    ("varphi4", [false, false, false], &[1, 6]),
    ("zeta4", [false, false, false], &[2, 3]),
    ("vartheta4", [false, false, false], &[1, 8]),
    ("tau4", [false, false, false], &[3, 6]),
    ("varrho4", [false, false, false], &[3, 8]),
    ("iota4", [false, false, false], &[5, 8]),
    ("omega4", [false, false, false], &[4, 5, 7]),
];

pub fn reference_pattern(name: &str) -> Result<ReferencePattern> {
    REFERENCE_PATTERNS
        .iter()
        .find(|r| r.0 == name)
        .map(|&(_, d_nonzero, f_nonzero)| ReferencePattern { d_nonzero, f_nonzero })
        .ok_or_else(|| Error::UnknownClass(name.into()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DFlag {
    /// Vanishes on the whole orbit.
    Zero,
    /// Vanishes on some orbit points and not on others.
    Opt,
}

impl fmt::Display for DFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DFlag::Zero => "=0",
            DFlag::Opt => "opt",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Relation {
    F9EqF10,
    F1F2EqF9Sq,
    F3F4EqF9Sq,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::F9EqF10, Relation::F1F2EqF9Sq, Relation::F3F4EqF9Sq];

    /// `(lhs, rhs)` of the relation on an F vector (0-based storage).
    pub fn sides<S: Scalar>(self, f: &[S; 10]) -> (S, S) {
        match self {
            Relation::F9EqF10 => (f[8].clone(), f[9].clone()),
            Relation::F1F2EqF9Sq => (f[0].mul(&f[1]), f[8].square()),
            Relation::F3F4EqF9Sq => (f[2].mul(&f[3]), f[8].square()),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::F9EqF10 => "F9=F10",
            Relation::F1F2EqF9Sq => "F1F2=F9^2",
            Relation::F3F4EqF9Sq => "F3F4=F9^2",
        })
    }
}

/// Implications between the vanishing of F₁..F₄ and the behaviour of F₉, F₁₀.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Conditional {
    /// `#0`: F₁F₂ = 0 and F₃F₄ = 0 imply exactly one of F₉, F₁₀ vanishes.
    ExactlyOneIfPairsVanish,
    /// `#1`: F₁F₂ = 0 and F₃F₄ = 0 imply F₉ = F₁₀ = 0.
    BothVanishIfPairsVanish,
    /// `#2`: F₁F₂ = 0 implies F₉ = F₁₀ ≠ 0.
    EqualNonzeroIfF1F2,
    /// `#3`: F₃F₄ = 0 implies F₉ = F₁₀ ≠ 0.
    EqualNonzeroIfF3F4,
    /// `#4`: three of F₁..F₄ vanishing implies exactly one of F₉, F₁₀ vanishes.
    ExactlyOneIfThree,
    /// `#5`: three of F₁..F₄ vanishing implies F₉ ≠ 0.
    F9NonzeroIfThree,
}

/// Flags an antecedent/consequent check reads from one evaluation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FFlags {
    /// `zero[i]` is true when F_{i+1} vanishes.
    pub zero: [bool; 10],
    pub f9_eq_f10: bool,
}

/// One satisfied antecedent variant and whether its consequent held.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Firing {
    pub branch: String,
    pub holds: bool,
}

impl Conditional {
    pub const ALL: [Conditional; 6] = [
        Conditional::ExactlyOneIfPairsVanish,
        Conditional::BothVanishIfPairsVanish,
        Conditional::EqualNonzeroIfF1F2,
        Conditional::EqualNonzeroIfF3F4,
        Conditional::ExactlyOneIfThree,
        Conditional::F9NonzeroIfThree,
    ];

    pub fn number(self) -> usize {
        self as usize
    }

    pub fn from_number(k: usize) -> Option<Self> {
        Self::ALL.get(k).copied()
    }

    fn antecedents(self) -> Vec<Vec<usize>> {
        use Conditional::*;
        match self {
            ExactlyOneIfPairsVanish | BothVanishIfPairsVanish => vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]],
            EqualNonzeroIfF1F2 => vec![vec![1], vec![2]],
            EqualNonzeroIfF3F4 => vec![vec![3], vec![4]],
            ExactlyOneIfThree | F9NonzeroIfThree => vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
        }
    }

    /// Consequent splits into two disjuncts for the "exactly one" forms.
    fn splits(self) -> bool {
        matches!(self, Conditional::ExactlyOneIfPairsVanish | Conditional::ExactlyOneIfThree)
    }

    fn consequent(self, fl: &FFlags) -> bool {
        let (z9, z10) = (fl.zero[8], fl.zero[9]);
        use Conditional::*;
        match self {
            ExactlyOneIfPairsVanish | ExactlyOneIfThree => z9 != z10,
            BothVanishIfPairsVanish => z9 && z10,
            EqualNonzeroIfF1F2 | EqualNonzeroIfF3F4 => fl.f9_eq_f10 && !z9,
            F9NonzeroIfThree => !z9,
        }
    }

    fn label(atoms: &[usize]) -> String {
        atoms.iter().map(|i| format!("F{i}")).collect::<Vec<_>>().join(",") + "=0"
    }

    /// Every antecedent variant satisfied by `fl`, with the consequent verdict.
    pub fn fire(self, fl: &FFlags) -> Vec<Firing> {
        let holds = self.consequent(fl);
        self.antecedents()
            .into_iter()
            .filter(|atoms| atoms.iter().all(|&i| fl.zero[i - 1]))
            .map(|atoms| {
                let mut branch = Self::label(&atoms);
                if self.splits() && holds {
                    branch += if fl.zero[8] { " => F9=0" } else { " => F10=0" };
                }
                Firing { branch, holds }
            })
            .collect()
    }

    /// All branch labels a full exploration should reach.
    pub fn branches(self) -> Vec<String> {
        self.antecedents()
            .iter()
            .flat_map(|atoms| {
                let base = Self::label(atoms);
                if self.splits() {
                    vec![format!("{base} => F9=0"), format!("{base} => F10=0")]
                } else {
                    vec![base]
                }
            })
            .collect()
    }
}

impl fmt::Display for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.number())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassKind {
    True,
    Degenerate,
}

/// Necessary conditions every state of a class satisfies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassProperties {
    pub name: String,
    pub kind: ClassKind,
    pub iv_zero: bool,
    pub f_positive: bool,
    pub d_flags: [DFlag; 3],
    /// Fᵢ forced to vanish.
    pub f_zero: Vec<usize>,
    /// Fᵢ forced to be nonzero individually.
    pub f_nonzero: Vec<usize>,
    /// Pairs `(i, j)` with `|Fᵢ| + |Fⱼ| ≠ 0`.
    pub nonzero_pairs: Vec<(usize, usize)>,
    pub relations: Vec<Relation>,
    pub conditionals: Vec<Conditional>,
}

impl ClassProperties {
    /// No index is both forced zero and forced nonzero.
    pub fn is_consistent(&self) -> bool {
        let nonzero = self.f_nonzero.iter().chain(self.nonzero_pairs.iter().flat_map(|(i, j)| [i, j]));
        let disjoint = nonzero.clone().all(|i| !self.f_zero.contains(i));
        let positive_ok = self.f_positive || (self.f_zero.len() == 10 && nonzero.count() == 0);
        disjoint && positive_ok && self.f_zero.iter().all(|i| (1..=10).contains(i))
    }
}

use Conditional::*;
use DFlag::{Opt, Zero};

const ALL_F: [usize; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

type TrueRow = (&'static str, bool, [DFlag; 3], &'static [usize], &'static [(usize, usize)], &'static [Relation], &'static [Conditional]);

const TRUE_CLASSES: &[TrueRow] = &[
    ("GHZ", false, [Zero, Zero, Zero], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("C4", false, [Opt, Opt, Opt], &[], &[], &[], &[ExactlyOneIfThree]),
    ("kappa4", false, [Opt, Opt, Zero], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("E4", false, [Opt, Zero, Opt], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("L4", false, [Zero, Opt, Opt], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("H4", false, [Opt, Zero, Zero], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("lambda4", false, [Zero, Opt, Zero], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("M4", false, [Zero, Zero, Opt], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("pi4", false, [Opt, Zero, Zero], &[3, 4, 7, 8], &[(1, 2), (5, 6)], &[], &[EqualNonzeroIfF1F2]),
    ("theta4", false, [Opt, Zero, Zero], &[1, 2, 5, 6], &[(3, 4), (7, 8)], &[], &[EqualNonzeroIfF3F4]),
    ("sigma4", false, [Zero, Opt, Zero], &[5, 6, 7, 8], &[(1, 2), (3, 4)], &[], &[BothVanishIfPairsVanish]),
    ("rho4", false, [Zero, Opt, Zero], &[1, 2, 3, 4, 9, 10], &[(5, 6), (7, 8)], &[], &[]),
    ("xi4", false, [Zero, Zero, Opt], &[3, 4, 5, 6], &[(1, 2), (7, 8)], &[], &[EqualNonzeroIfF1F2]),
    ("epsilon4", false, [Zero, Zero, Opt], &[1, 2, 7, 8], &[(3, 4), (5, 6)], &[], &[EqualNonzeroIfF3F4]),
    ("W", true, [Zero, Zero, Zero], &ALL_F, &[], &[], &[]),
    ("chi4", true, [Opt, Opt, Opt], &[], &[(5, 6), (7, 8)], &[], &[ExactlyOneIfPairsVanish]),
    ("upsilon4", true, [Zero, Opt, Opt], &[5, 6], &[(1, 2), (3, 4), (7, 8)], &[], &[BothVanishIfPairsVanish]),
    (
        "varpi4",
        true,
        [Opt, Zero, Opt],
        &[3, 4],
        &[(1, 2), (5, 6), (7, 8)],
        &[Relation::F9EqF10, Relation::F1F2EqF9Sq],
        &[],
    ),
    ("psi4", true, [Opt, Zero, Zero], &[], &[], &[Relation::F9EqF10], &[F9NonzeroIfThree]),
    ("phi4", true, [Zero, Opt, Zero], &[], &[], &[], &[ExactlyOneIfPairsVanish]),
    ("mu4", true, [Zero, Zero, Opt], &[], &[], &[Relation::F9EqF10], &[F9NonzeroIfThree]),
    ("varphi4", true, [Opt, Zero, Zero], &[3, 4, 7, 8], &[(1, 2), (5, 6)], &[Relation::F9EqF10, Relation::F1F2EqF9Sq], &[]),
    ("zeta4", true, [Zero, Opt, Zero], &[5, 6, 7, 8], &[(1, 2), (3, 4)], &[], &[BothVanishIfPairsVanish]),
    ("vartheta4", true, [Zero, Zero, Opt], &[3, 4, 5, 6], &[(1, 2), (7, 8)], &[Relation::F9EqF10, Relation::F1F2EqF9Sq], &[]),
    ("tau4", true, [Zero, Zero, Zero], &[1, 2, 7, 8], &[(3, 4), (5, 6)], &[Relation::F9EqF10, Relation::F3F4EqF9Sq], &[]),
    ("varrho4", true, [Zero, Zero, Zero], &[1, 2, 5, 6], &[(3, 4), (7, 8)], &[Relation::F9EqF10, Relation::F3F4EqF9Sq], &[]),
    ("iota4", true, [Zero, Zero, Zero], &[1, 2, 3, 4, 9, 10], &[(5, 6), (7, 8)], &[], &[]),
    (
        "omega4",
        true,
        [Zero, Zero, Zero],
        &[1, 2],
        &[(3, 4), (5, 6), (7, 8)],
        &[Relation::F9EqF10, Relation::F3F4EqF9Sq],
        &[],
    ),
];

/// Which factorization a degenerate class has.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Degenerate {
    /// Three-qubit GHZ on every qubit except `free`, times a qubit on `free`.
    Ghz3 { free: usize },
    /// Three-qubit W on every qubit except `free`, times a qubit on `free`.
    W3 { free: usize },
    /// Bell pairs on `{0, partner}` and on the remaining two qubits.
    GhzPairs { partner: usize },
    /// One Bell pair on `(a, b)`, the other two qubits in product.
    Bell { a: usize, b: usize },
    Product,
}

const LETTERS: [char; 4] = ['1', '2', '3', '4'];

impl Degenerate {
    pub fn all() -> Vec<Degenerate> {
        let mut out: Vec<_> = (0..4).rev().map(|free| Degenerate::Ghz3 { free }).collect();
        out.extend((0..4).rev().map(|free| Degenerate::W3 { free }));
        out.extend((1..4).map(|partner| Degenerate::GhzPairs { partner }));
        for a in 0..4 {
            for b in a + 1..4 {
                out.push(Degenerate::Bell { a, b });
            }
        }
        out.push(Degenerate::Product);
        out
    }

    pub fn name(self) -> String {
        let group = |qs: &[usize]| qs.iter().map(|&q| LETTERS[q]).collect::<String>();
        let rest = |free: usize| (0..4).filter(|&q| q != free).collect::<Vec<_>>();
        match self {
            Degenerate::Ghz3 { free: 0 } => format!("q1xGHZ{}", group(&rest(0))),
            Degenerate::Ghz3 { free } => format!("GHZ{}xq{}", group(&rest(free)), free + 1),
            Degenerate::W3 { free: 0 } => format!("q1xW{}", group(&rest(0))),
            Degenerate::W3 { free } => format!("W{}xq{}", group(&rest(free)), free + 1),
            Degenerate::GhzPairs { partner } => {
                let other: Vec<usize> = (1..4).filter(|&q| q != partner).collect();
                format!("GHZ{}xGHZ{}", group(&[0, partner]), group(&other))
            }
            Degenerate::Bell { a, b } => format!("GHZ{}", group(&[a, b])),
            Degenerate::Product => "product".into(),
        }
    }

    pub fn from_name(name: &str) -> Result<Degenerate> {
        Degenerate::all().into_iter().find(|d| d.name() == name).ok_or_else(|| Error::UnknownClass(name.into()))
    }

    pub fn properties(self) -> ClassProperties {
        let mut p = ClassProperties {
            name: self.name(),
            kind: ClassKind::Degenerate,
            iv_zero: true,
            f_positive: false,
            d_flags: [Zero; 3],
            f_zero: ALL_F.to_vec(),
            f_nonzero: vec![],
            nonzero_pairs: vec![],
            relations: vec![],
            conditionals: vec![],
        };
        match self {
            Degenerate::Ghz3 { free } => {
                // The surviving F pair belongs to the free qubit; F₉, F₁₀
                // survive too when the free qubit is A or B.
                let pair = (2 * free + 1, 2 * free + 2);
                p.f_positive = true;
                p.nonzero_pairs = vec![pair];
                let mut live = vec![pair.0, pair.1];
                if free < 2 {
                    live.extend([9, 10]);
                    p.relations = vec![Relation::F9EqF10, if free == 0 { Relation::F1F2EqF9Sq } else { Relation::F3F4EqF9Sq }];
                }
                p.f_zero.retain(|i| !live.contains(i));
            }
            Degenerate::GhzPairs { partner } => {
                p.iv_zero = false;
                p.d_flags[[1, 0, 2][partner - 1]] = Opt;
                if partner != 1 {
                    p.f_positive = true;
                    p.f_zero = (1..=8).collect();
                    p.f_nonzero = vec![9, 10];
                    p.relations = vec![Relation::F9EqF10];
                }
            }
            Degenerate::W3 { .. } | Degenerate::Bell { .. } | Degenerate::Product => {}
        }
        p
    }
}

/// Properties of any true or degenerate class.
pub fn class_properties(name: &str) -> Result<ClassProperties> {
    if let Some(&(id, iv_zero, d_flags, f_zero, pairs, rels, conds)) = TRUE_CLASSES.iter().find(|r| r.0 == name) {
        let all_zero = f_zero.len() == 10;
        return Ok(ClassProperties {
            name: id.to_string(),
            kind: ClassKind::True,
            iv_zero,
            f_positive: !all_zero,
            d_flags,
            f_zero: f_zero.to_vec(),
            f_nonzero: vec![],
            nonzero_pairs: pairs.to_vec(),
            relations: rels.to_vec(),
            conditionals: conds.to_vec(),
        });
    }
    Ok(Degenerate::from_name(name)?.properties())
}

/// Every class with encoded properties, true classes first.
pub fn class_names() -> Vec<String> {
    representative_names().map(String::from).chain(Degenerate::all().into_iter().map(Degenerate::name)).collect()
}

fn qubit<S: Scalar>(s: &S, t: &S) -> Vec<S> {
    vec![s.clone(), t.clone()]
}

/// Tensor product of factor vectors placed on the given qubit groups.
///
/// Each group lists its qubits most significant first; groups must cover
/// `0..4` exactly once.
pub fn place<S: Scalar>(groups: &[(&[usize], Vec<S>)]) -> Result<PureState<S>> {
    let mut seen = [false; 4];
    for (qs, v) in groups {
        if v.len() != 1 << qs.len() {
            return Err(Error::Invalid(format!("factor on {qs:?} has {} amplitudes", v.len())));
        }
        for &q in qs.iter() {
            if q >= 4 || std::mem::replace(&mut seen[q], true) {
                return Err(Error::InvalidPermutation(qs.to_vec()));
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::Invalid("factors do not cover all four qubits".into()));
    }
    let amps = (0..16usize)
        .map(|i| {
            groups.iter().fold(S::one(), |acc, (qs, v)| {
                let local = qs.iter().fold(0, |k, &q| 2 * k + ((i >> (3 - q)) & 1));
                acc.mul_sparse(&v[local])
            })
        })
        .collect();
    let st = PureState::new(4, amps)?;
    st.require_nonzero()?;
    Ok(st)
}

/// A representative of a degenerate class; `(s, t)` is the free qubit
/// `s|0⟩ + t|1⟩` wherever the class has one.
pub fn degenerate_state<S: Scalar>(kind: Degenerate, s: &S, t: &S) -> Result<PureState<S>> {
    if s.is_zero() && t.is_zero() {
        return Err(Error::ZeroState);
    }
    let o = S::one;
    let z = S::zero;
    let ghz3 = || vec![o(), z(), z(), z(), z(), z(), z(), o()];
    let w3 = || vec![z(), o(), o(), z(), o(), z(), z(), z()];
    let bell = || vec![o(), z(), z(), o()];
    let rest = |skip: &[usize]| (0..4).filter(|q| !skip.contains(q)).collect::<Vec<_>>();
    match kind {
        Degenerate::Ghz3 { free } | Degenerate::W3 { free } => {
            let three = rest(&[free]);
            let f = if matches!(kind, Degenerate::Ghz3 { .. }) { ghz3() } else { w3() };
            place(&[(&three, f), (&[free], qubit(s, t))])
        }
        Degenerate::GhzPairs { partner } => {
            let other = rest(&[0, partner]);
            place(&[(&[0, partner], bell()), (&other, bell())])
        }
        Degenerate::Bell { a, b } => {
            let other = rest(&[a, b]);
            place(&[(&[a, b], bell()), (&other[..1], qubit(s, t)), (&other[1..], qubit(s, t))])
        }
        Degenerate::Product => {
            place(&[(&[0], qubit(s, t)), (&[1], qubit(s, t)), (&[2], qubit(s, t)), (&[3], qubit(s, t))])
        }
    }
}

/// Parameterized family states; `a`, `b` are arbitrary complex numbers.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Family {
    Lab3 { a: Complex64, b: Complex64 },
    La4 { a: Complex64 },
    La2031 { a: Complex64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Lab3 { .. } => "L_ab3",
            Family::La4 { .. } => "L_a4",
            Family::La2031 { .. } => "L_a2_03+1",
        }
    }
}

/// Unnormalized family state.
pub fn family_state(family: Family) -> State {
    let c = |x: f64| Complex64::new(x, 0.0);
    let i = Complex64::i();
    let mut amps = vec![c(0.0); 16];
    let mut set = |k: usize, v: Complex64| amps[k] += v;
    match family {
        Family::Lab3 { a, b } => {
            let h = i / 2f64.sqrt();
            for k in [0, 15] {
                set(k, a);
            }
            for k in [5, 10] {
                set(k, (a + b) / 2.0);
            }
            for k in [6, 9] {
                set(k, (a - b) / 2.0);
            }
            for k in [1, 2, 7, 11] {
                set(k, h);
            }
        }
        Family::La4 { a } => {
            for k in [0, 5, 10, 15] {
                set(k, a);
            }
            set(1, i);
            set(6, c(1.0));
            set(11, -i);
        }
        Family::La2031 { a } => {
            for k in [0, 15] {
                set(k, a);
            }
            for k in [3, 5, 6] {
                set(k, c(1.0));
            }
        }
    }
    PureState::new(4, amps).expect("sixteen amplitudes")
}

/// Claims recorded for the conjectured class outside the catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureClaims {
    pub iv_zero: bool,
    pub d_flags: [DFlag; 3],
    pub nonzero_pairs: Vec<(usize, usize)>,
}

/// `√2|15⟩ + |8⟩ + |4⟩ + |2⟩ + |1⟩`, unnormalized.
pub fn conjecture_state() -> (NamedState<Complex64>, ConjectureClaims) {
    let mut amps = vec![Complex64::new(0.0, 0.0); 16];
    amps[15] = Complex64::new(2f64.sqrt(), 0.0);
    for k in [1, 2, 4, 8] {
        amps[k] = Complex64::new(1.0, 0.0);
    }
    let named = NamedState {
        name: "conjecture".into(),
        display: "(sqrt(2)|15> + |8> + |4> + |2> + |1>)/sqrt(6)".into(),
        state: PureState::new(4, amps).expect("sixteen amplitudes"),
        kind: StateKind::Conjecture,
    };
    let claims = ConjectureClaims { iv_zero: true, d_flags: [Opt; 3], nonzero_pairs: vec![(1, 2), (3, 4), (5, 6), (7, 8)] };
    (named, claims)
}

/// A printed claim that direct evaluation contradicts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Erratum {
    pub id: &'static str,
    pub class: &'static str,
    pub claim: &'static str,
    pub finding: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        id: "lambda4-pattern-d2",
        class: "lambda4",
        claim: "representative has D2 != 0",
        finding: "D2 = 0 at the representative; only F10 is nonzero",
    },
    Erratum {
        id: "psi4-pattern-f3f4",
        class: "psi4",
        claim: "representative has F3, F4 != 0",
        finding: "F3 = F4 = 0 at the representative; only F9, F10 are nonzero",
    },
    Erratum {
        id: "chi4-pair-56",
        class: "chi4",
        claim: "|F5|+|F6| != 0 on the whole class",
        finding: "F5 = F6 = 0 after applying [[1,1],[1,-1]] on qubit C",
    },
    Erratum {
        id: "chi4-pair-78",
        class: "chi4",
        claim: "|F7|+|F8| != 0 on the whole class",
        finding: "F7 = F8 = 0 after applying [[1,i],[1,-i]] on qubit D",
    },
    Erratum {
        id: "sigma4-iv",
        class: "sigma4",
        claim: "closed form IV = T/3",
        finding: "direct evaluation gives IV = -T/3",
    },
    Erratum {
        id: "psi4-f9",
        class: "psi4",
        claim: "closed form F9 carries det^2(gamma) det^2(beta)",
        finding: "the factor is det^2(gamma) det^2(delta); F9 is invariant under beta",
    },
];

pub fn errata() -> &'static [Erratum] {
    ERRATA
}

pub fn erratum(id: &str) -> Option<&'static Erratum> {
    ERRATA.iter().find(|e| e.id == id)
}

/// Whether the nonzero pair claim `(i, j)` of `class` is refuted.
pub fn pair_refuted(class: &str, pair: (usize, usize)) -> bool {
    let id = format!("{class}-pair-{}{}", pair.0, pair.1);
    erratum(&id).is_some()
}
