//! Randomized verification of class-level claims on SLOCC orbits.
//!
//! Every trial draws its operation from `rng(seed + trial)`, so any reported
//! violation can be replayed from its seed alone. The exact carrier decides
//! every zero test identically; the floating carrier exists to exercise the
//! tolerance policy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;
use rand::Rng;

use crate::catalog::{
    class_properties, degenerate_state, erratum, representative, ClassKind, ClassProperties, Conditional, DFlag, Degenerate,
    Relation,
};
use crate::classify::{certify_true_entanglement, exact_signature, float_signature, Certification, Signature};
use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::invariants::{
    iv, residual_d_semiinvariance, residual_f910_semiinvariance, residual_f_semiinvariance, residual_iv_covariance, InvariantVector,
    Slot,
};
use crate::scalar::Scalar;
use crate::state::{
    apply_local, random_invertible_with, random_rational, random_rational_operator, random_rational_state, rng,
    sparse_rational_operator, ExactState, LocalOperation, LocalOperator, PureState,
};

/// Free-qubit amplitudes `(s, t)` cycled through by degenerate classes, as
/// `(re_s, im_s, re_t, im_t)` over a common denominator of 2.
const QUBIT_FACTORS: [(i64, i64, i64, i64); 10] = [
    (2, 0, 0, 0),
    (0, 0, 2, 0),
    (2, 0, 2, 0),
    (4, 0, -2, 0),
    (2, 0, 6, 0),
    (2, 0, 0, 2),
    (6, 0, -4, 0),
    (1, 0, 2, 0),
    (-2, 0, 0, 2),
    (4, 0, 10, 0),
];

pub const QUBIT_FACTOR_COUNT: usize = QUBIT_FACTORS.len();

/// The `k`-th free-qubit factor `(s, t)`.
pub fn qubit_factor(k: usize) -> (GaussianRational, GaussianRational) {
    let (rs, is, rt, it) = QUBIT_FACTORS[k % QUBIT_FACTORS.len()];
    (GaussianRational::from_parts(rs, 2, is, 2), GaussianRational::from_parts(rt, 2, it, 2))
}

/// Base state of a class for trial `trial`: the representative for true
/// classes, the factorized state with the cycled qubit factor otherwise.
pub fn class_state(class: &str, trial: usize) -> Result<ExactState> {
    match representative(class) {
        Ok(named) => Ok(named.state),
        Err(Error::UnknownClass(_)) => {
            let (s, t) = qubit_factor(trial);
            degenerate_state(Degenerate::from_name(class)?, &s, &t)
        }
        Err(e) => Err(e),
    }
}

/// How local operators are drawn.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sampler {
    /// Every entry a random Gaussian rational.
    Dense,
    /// Entries from a small palette rich in zeros.
    Sparse,
    /// Dense on even trials, sparse on odd ones.
    Mixed,
    /// α and β with entries zeroed by a mask cycled with the trial index,
    /// γ and δ dense.
    Targeted,
}

/// 1-based entry sets zeroed by targeted sampling.
pub const MASKS: [&[usize]; 7] = [&[], &[1], &[2], &[3], &[4], &[1, 4], &[2, 3]];

/// Dense exact operator with the given 1-based entries forced to zero.
pub fn masked_rational_operator<R: Rng + ?Sized>(rng: &mut R, mask: &[usize]) -> LocalOperator<GaussianRational> {
    loop {
        let op = LocalOperator::new(std::array::from_fn(|e| {
            if mask.contains(&(e + 1)) {
                GaussianRational::zero()
            } else {
                random_rational(rng)
            }
        }));
        if !op.det().is_zero() {
            return op;
        }
    }
}

/// A scalar carrier that orbit sampling can run on.
pub trait OrbitCarrier: Scalar {
    fn draw<R: Rng + ?Sized>(rng: &mut R, sampler: Sampler, trial: usize) -> LocalOperation<Self>;
    fn lift(s: &ExactState) -> PureState<Self>;
}

impl OrbitCarrier for GaussianRational {
    fn draw<R: Rng + ?Sized>(rng: &mut R, sampler: Sampler, trial: usize) -> LocalOperation<Self> {
        let sparse = match sampler {
            Sampler::Dense => false,
            Sampler::Sparse => true,
            Sampler::Mixed => trial % 2 == 1,
            Sampler::Targeted => {
                let (ma, mb) = (MASKS[(trial / MASKS.len()) % MASKS.len()], MASKS[trial % MASKS.len()]);
                let ops = vec![
                    masked_rational_operator(rng, ma),
                    masked_rational_operator(rng, mb),
                    random_rational_operator(rng),
                    random_rational_operator(rng),
                ];
                return LocalOperation::new(ops);
            }
        };
        let draw = if sparse { sparse_rational_operator::<R> } else { random_rational_operator::<R> };
        LocalOperation::new((0..4).map(|_| draw(rng)).collect())
    }

    fn lift(s: &ExactState) -> ExactState {
        s.clone()
    }
}

/// Smallest |det| accepted for floating operators.
pub const FLOAT_DET_MIN: f64 = 0.1;

impl OrbitCarrier for Complex64 {
    fn draw<R: Rng + ?Sized>(rng: &mut R, sampler: Sampler, trial: usize) -> LocalOperation<Self> {
        match sampler {
            Sampler::Dense => LocalOperation::new((0..4).map(|_| random_invertible_with(rng, FLOAT_DET_MIN)).collect()),
            _ => GaussianRational::draw(rng, sampler, trial).to_float(),
        }
    }

    fn lift(s: &ExactState) -> PureState<Complex64> {
        s.to_float()
    }
}

#[derive(Clone, Debug)]
pub struct OrbitSample<S> {
    pub trial: usize,
    pub seed: u64,
    pub op: LocalOperation<S>,
    pub state: PureState<S>,
}

/// Deterministic stream of orbit points of `class`.
pub fn sample_orbit<S: OrbitCarrier>(
    class: &str,
    n_samples: usize,
    seed: u64,
    sampler: Sampler,
) -> Result<impl Iterator<Item = Result<OrbitSample<S>>> + '_> {
    class_properties(class)?;
    Ok((0..n_samples).map(move |trial| {
        let seed = seed.wrapping_add(trial as u64);
        let op = S::draw(&mut rng(seed), sampler, trial);
        let state = apply_local(&S::lift(&class_state(class, trial)?), &op)?;
        Ok(OrbitSample { trial, seed, op, state })
    }))
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Carrier {
    Exact,
    Float { tol: f64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    Representative,
    Trial { trial: usize, seed: u64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Representative => write!(f, "representative"),
            Witness::Trial { trial, seed } => write!(f, "trial {trial} (seed {seed})"),
        }
    }
}

/// Zero and nonzero witnesses for one opt entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OptWitness {
    pub property: String,
    pub zero: Option<Witness>,
    pub nonzero: Option<Witness>,
}

impl OptWitness {
    pub fn complete(&self) -> bool {
        self.zero.is_some() && self.nonzero.is_some()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub trial: usize,
    pub seed: u64,
    pub property: String,
    pub values: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    /// Fails, but the claim is a registered erratum.
    KnownErratum,
    /// An opt entry or conditional branch lacks a witness.
    Unwitnessed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::KnownErratum => "known-erratum",
            Status::Unwitnessed => "unwitnessed",
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct OrbitSampleReport {
    pub class: String,
    pub samples: usize,
    /// Property ids asserted on every sample.
    pub checked: BTreeSet<String>,
    pub violations: Vec<Violation>,
    /// Failures of claims registered as errata, by erratum id.
    pub errata_hits: BTreeMap<String, Vec<Violation>>,
    pub opt_witnesses: Vec<OptWitness>,
    pub branch_hits: BTreeMap<String, usize>,
    /// Branches the run is expected to reach; empty unless targeted.
    pub expected_branches: Vec<String>,
}

impl OrbitSampleReport {
    fn new(class: &str, p: &ClassProperties) -> Self {
        let opt_witnesses = p
            .d_flags
            .iter()
            .enumerate()
            .filter(|(_, f)| **f == DFlag::Opt)
            .map(|(i, _)| OptWitness { property: format!("D{} opt", i + 1), zero: None, nonzero: None })
            .collect();
        OrbitSampleReport { class: class.into(), opt_witnesses, ..Default::default() }
    }

    /// No violation outside the errata registry.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn witnesses_complete(&self) -> bool {
        self.opt_witnesses.iter().all(OptWitness::complete)
    }

    pub fn missing_branches(&self) -> Vec<String> {
        self.expected_branches.iter().filter(|b| !self.branch_hits.contains_key(*b)).cloned().collect()
    }

    /// One `(property, status)` line per asserted property, opt entry and
    /// expected branch.
    pub fn lines(&self) -> Vec<(String, Status)> {
        let failed: BTreeSet<&str> = self.violations.iter().map(|v| v.property.as_str()).collect();
        let mut out: Vec<(String, Status)> = self
            .checked
            .iter()
            .map(|p| {
                let status = if failed.contains(p.as_str()) {
                    Status::Fail
                } else if self.errata_hits.values().flatten().any(|v| &v.property == p) {
                    Status::KnownErratum
                } else {
                    Status::Pass
                };
                (p.clone(), status)
            })
            .collect();
        for w in &self.opt_witnesses {
            out.push((w.property.clone(), if w.complete() { Status::Pass } else { Status::Unwitnessed }));
        }
        for b in &self.expected_branches {
            let status = if self.branch_hits.contains_key(b) { Status::Pass } else { Status::Unwitnessed };
            out.push((b.clone(), status));
        }
        out
    }

    fn record(&mut self, trial: usize, seed: u64, property: String, ok: bool, values: impl FnOnce() -> String, class: &str) {
        let erratum_id = pair_erratum(class, &property);
        self.checked.insert(property.clone());
        if ok {
            return;
        }
        let v = Violation { trial, seed, property, values: values() };
        match erratum_id {
            Some(id) => self.errata_hits.entry(id).or_default().push(v),
            None => self.violations.push(v),
        }
    }
}

fn pair_erratum(class: &str, property: &str) -> Option<String> {
    let body = property.strip_prefix("|F")?.strip_suffix("|!=0")?;
    let (i, j) = body.split_once("|+|F")?;
    let id = format!("{class}-pair-{i}{j}");
    erratum(&id).map(|e| e.id.to_string())
}

/// Signature and raw F values of one orbit point on either carrier.
pub trait Evaluate: Scalar {
    fn evaluate_signature(s: &PureState<Self>, carrier: Carrier) -> Result<(Signature, [Complex64; 10])>;
}

impl Evaluate for GaussianRational {
    fn evaluate_signature(s: &ExactState, _: Carrier) -> Result<(Signature, [Complex64; 10])> {
        let inv = InvariantVector::evaluate(s)?;
        Ok((exact_signature(s)?, inv.f.map(|x| x.to_c64())))
    }
}

impl Evaluate for Complex64 {
    fn evaluate_signature(s: &PureState<Complex64>, carrier: Carrier) -> Result<(Signature, [Complex64; 10])> {
        let tol = match carrier {
            Carrier::Float { tol } => tol,
            Carrier::Exact => crate::classify::DEFAULT_TOL,
        };
        let inv = InvariantVector::evaluate(&s.normalize()?)?;
        Ok((float_signature(&inv, tol), inv.f))
    }
}

fn check_sample(report: &mut OrbitSampleReport, p: &ClassProperties, sig: &Signature, f: &[Complex64; 10], trial: usize, seed: u64) {
    let class = p.name.clone();
    let zs = |b: bool| if b { "0" } else { "nonzero" };
    let rec = |r: &mut OrbitSampleReport, prop: String, ok: bool, vals: String| r.record(trial, seed, prop, ok, || vals, &class);
    rec(report, format!("IV{}", if p.iv_zero { "=0" } else { "!=0" }), sig.iv_zero == p.iv_zero, format!("IV {}", zs(sig.iv_zero)));
    rec(
        report,
        format!("F{}", if p.f_positive { ">0" } else { "=0" }),
        sig.f_aggregate_zero != p.f_positive,
        format!("F {}", zs(sig.f_aggregate_zero)),
    );
    for (i, flag) in p.d_flags.iter().enumerate() {
        if *flag == DFlag::Zero {
            rec(report, format!("D{}=0", i + 1), sig.di_zero[i], format!("D{} nonzero", i + 1));
        }
    }
    for &i in &p.f_zero {
        rec(report, format!("F{i}=0"), sig.fi_zero[i - 1], format!("F{i} = {}", f[i - 1]));
    }
    for &i in &p.f_nonzero {
        rec(report, format!("F{i}!=0"), !sig.fi_zero[i - 1], format!("F{i} = 0"));
    }
    for &(i, j) in &p.nonzero_pairs {
        let ok = !sig.fi_zero[i - 1] || !sig.fi_zero[j - 1];
        rec(report, format!("|F{i}|+|F{j}|!=0"), ok, format!("F{i} = F{j} = 0"));
    }
    for &r in &p.relations {
        rec(report, r.to_string(), sig.relation(r), format!("F1 {} F2 {} F3 {} F4 {} F9 {} F10 {}", f[0], f[1], f[2], f[3], f[8], f[9]));
    }
    for c in &p.conditionals {
        for firing in c.fire(&sig.f_flags()) {
            let prop = format!("{c} {}", firing.branch);
            *report.branch_hits.entry(prop.clone()).or_default() += 1;
            rec(report, format!("{c}"), firing.holds, format!("{prop}: consequent fails, F9 {} F10 {}", f[8], f[9]));
        }
    }
    for (i, w) in p.d_flags.iter().enumerate().filter(|(_, f)| **f == DFlag::Opt).map(|(i, _)| i).zip(0..) {
        let slot = &mut report.opt_witnesses[w];
        let found = Some(Witness::Trial { trial, seed });
        if sig.di_zero[i] {
            slot.zero = slot.zero.or(found);
        } else {
            slot.nonzero = slot.nonzero.or(found);
        }
    }
}

fn run_orbit<S: OrbitCarrier + Evaluate>(class: &str, n_samples: usize, seed: u64, sampler: Sampler, carrier: Carrier) -> Result<OrbitSampleReport> {
    let p = class_properties(class)?;
    let mut report = OrbitSampleReport::new(class, &p);
    // The base state supplies witnesses without counting as a sample.
    let (base_sig, _) = S::evaluate_signature(&S::lift(&class_state(class, 0)?), carrier)?;
    for (w, i) in report.opt_witnesses.iter_mut().zip(p.d_flags.iter().enumerate().filter(|(_, f)| **f == DFlag::Opt).map(|(i, _)| i)) {
        if base_sig.di_zero[i] {
            w.zero = Some(Witness::Representative);
        } else {
            w.nonzero = Some(Witness::Representative);
        }
    }
    for sample in sample_orbit::<S>(class, n_samples, seed, sampler)? {
        let sample = sample?;
        let (sig, f) = S::evaluate_signature(&sample.state, carrier)?;
        check_sample(&mut report, &p, &sig, &f, sample.trial, sample.seed);
        report.samples += 1;
    }
    Ok(report)
}

/// Asserts every encoded property of `class` on `n_samples` orbit points
/// and searches for opt witnesses. Exact runs mix dense and sparse draws.
pub fn verify_class_zero_pattern(class: &str, n_samples: usize, seed: u64, carrier: Carrier) -> Result<OrbitSampleReport> {
    match carrier {
        Carrier::Exact => run_orbit::<GaussianRational>(class, n_samples, seed, Sampler::Mixed, carrier),
        Carrier::Float { .. } => run_orbit::<Complex64>(class, n_samples, seed, Sampler::Dense, carrier),
    }
}

/// Exercises the conditionals of `class`; targeted runs zero α, β entries
/// so that antecedents fire, and expect every branch to be reached.
pub fn verify_conditionals(class: &str, targeted: bool, n_samples: usize, seed: u64) -> Result<OrbitSampleReport> {
    let p = class_properties(class)?;
    if p.conditionals.is_empty() {
        return Err(Error::Invalid(format!("class {class} has no conditionals")));
    }
    let sampler = if targeted { Sampler::Targeted } else { Sampler::Dense };
    let conds_only = ClassProperties {
        f_zero: vec![],
        f_nonzero: vec![],
        nonzero_pairs: vec![],
        relations: vec![],
        d_flags: [DFlag::Opt; 3],
        ..p.clone()
    };
    let mut report = OrbitSampleReport::new(class, &conds_only);
    if targeted {
        report.expected_branches = p.conditionals.iter().flat_map(|c| c.branches().into_iter().map(move |b| format!("{c} {b}"))).collect();
    }
    for sample in sample_orbit::<GaussianRational>(class, n_samples, seed, sampler)? {
        let sample = sample?;
        let (sig, f) = GaussianRational::evaluate_signature(&sample.state, Carrier::Exact)?;
        check_sample(&mut report, &conds_only, &sig, &f, sample.trial, sample.seed);
        report.samples += 1;
    }
    // Only the conditional lines belong to this report.
    report.checked.retain(|c| c.starts_with('#'));
    report.opt_witnesses.clear();
    Ok(report)
}

/// `(name, nonzero flags, expected)`.
pub type DPatternRow = (String, [bool; 3], [bool; 3]);

/// The D pattern of each GHZ-pair product.
pub fn ghz_pair_d_patterns() -> Result<Vec<DPatternRow>> {
    let one = GaussianRational::one();
    [(1, [false, true, false]), (2, [true, false, false]), (3, [false, false, true])]
        .into_iter()
        .map(|(partner, expected)| {
            let kind = Degenerate::GhzPairs { partner };
            let d = InvariantVector::evaluate(&degenerate_state(kind, &one, &one)?)?.d;
            Ok((kind.name(), d.map(|x| !x.is_zero()), expected))
        })
        .collect()
}

/// Transformation laws checked by exact evaluation at random points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Identity {
    IvCovariance,
    FPair(Slot),
    F910,
    D(usize),
    /// IV covariance with one determinant dropped; must fail.
    CorruptedIv,
}

impl Identity {
    pub fn all() -> Vec<Identity> {
        let mut v = vec![Identity::IvCovariance];
        v.extend(Slot::ALL.map(Identity::FPair));
        v.push(Identity::F910);
        v.extend((1..=3).map(Identity::D));
        v.push(Identity::CorruptedIv);
        v
    }

    pub fn id(&self) -> String {
        match self {
            Identity::IvCovariance => "iv-covariance".into(),
            Identity::FPair(s) => format!("f-pair-{}", s.letter()),
            Identity::F910 => "f9-f10".into(),
            Identity::D(i) => format!("d{i}"),
            Identity::CorruptedIv => "iv-corrupted".into(),
        }
    }

    pub fn from_id(id: &str) -> Result<Identity> {
        Identity::all().into_iter().find(|i| i.id() == id).ok_or_else(|| Error::Invalid(format!("unknown identity {id:?}")))
    }

    pub fn is_negative_control(&self) -> bool {
        matches!(self, Identity::CorruptedIv)
    }

    fn identity_slots(&self) -> Vec<usize> {
        match self {
            Identity::IvCovariance | Identity::CorruptedIv => vec![],
            Identity::FPair(s) => vec![s.index()],
            Identity::F910 => vec![0, 1],
            Identity::D(i) => crate::invariants::d_law(*i).map(|(s, _)| s.to_vec()).unwrap_or_default(),
        }
    }

    fn residuals(&self, s: &ExactState, l: &LocalOperation<GaussianRational>) -> Result<Vec<GaussianRational>> {
        Ok(match self {
            Identity::IvCovariance => vec![residual_iv_covariance(s, l)?],
            Identity::FPair(slot) => residual_f_semiinvariance(s, l, *slot)?.to_vec(),
            Identity::F910 => residual_f910_semiinvariance(s, l)?.to_vec(),
            Identity::D(i) => vec![residual_d_semiinvariance(s, l, *i)?],
            Identity::CorruptedIv => {
                let dets = l.dets();
                let partial = dets[0].mul(&dets[1]).mul(&dets[2]);
                vec![iv(&apply_local(s, l)?)?.sub(&iv(s)?.mul(&partial))]
            }
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub trials: usize,
    /// Trial, seed and nonzero residual of the first failure.
    pub counterexample: Option<(usize, u64, String)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks an identity at `trials` random rational states and operations
/// with the law's slots held at the identity.
pub fn verify_identity(identity: Identity, trials: usize, seed: u64) -> Result<IdentityReport> {
    let slots = identity.identity_slots();
    for trial in 0..trials {
        let seed = seed.wrapping_add(trial as u64);
        let mut r = rng(seed);
        let s = random_rational_state(&mut r, 4, 0.75);
        let ops = (0..4)
            .map(|k| if slots.contains(&k) { LocalOperator::identity() } else { random_rational_operator(&mut r) })
            .collect();
        let l = LocalOperation::new(ops);
        if let Some(res) = identity.residuals(&s, &l)?.into_iter().find(|x| !x.is_zero()) {
            return Ok(IdentityReport { id: identity.id(), trials, counterexample: Some((trial, seed, res.to_string())) });
        }
    }
    Ok(IdentityReport { id: identity.id(), trials, counterexample: None })
}

/// Orbit points of degenerate classes on which a sufficient condition fired.
pub fn degenerate_certification_fuzz(samples_per_class: usize, seed: u64) -> Result<Vec<(String, usize, Certification)>> {
    let mut hits = Vec::new();
    for kind in Degenerate::all() {
        let name = kind.name();
        for sample in sample_orbit::<GaussianRational>(&name, samples_per_class, seed, Sampler::Mixed)? {
            let sample = sample?;
            let c = certify_true_entanglement(&exact_signature(&sample.state)?);
            if c != Certification::NotCertified {
                hits.push((name.clone(), sample.trial, c));
            }
        }
    }
    Ok(hits)
}

/// Whether `class` is degenerate.
pub fn is_degenerate(class: &str) -> Result<bool> {
    Ok(class_properties(class)?.kind == ClassKind::Degenerate)
}

/// Relation flags evaluated exactly, for reporting.
pub fn relation_flags(s: &ExactState) -> Result<Vec<(Relation, bool)>> {
    let sig = exact_signature(s)?;
    Ok(Relation::ALL.iter().map(|&r| (r, sig.relation(r))).collect())
}

/// Conditionals attached to a class.
pub fn conditionals_of(class: &str) -> Result<Vec<Conditional>> {
    Ok(class_properties(class)?.conditionals)
}

/// `(quantity, status, first failing trial and seed)`.
pub type FormStatus = (String, Status, Option<(usize, u64)>);

/// Per-form outcome of checking closed forms against direct evaluation.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub class: String,
    pub trials: usize,
    pub forms: Vec<FormStatus>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.forms.iter().all(|(_, s, _)| *s != Status::Fail)
    }

    /// Every printed form matched on every trial.
    pub fn printed_all_match(&self) -> bool {
        self.forms.iter().all(|(_, s, _)| *s == Status::Pass)
    }
}

/// Compares every closed form of `class` with direct evaluation on `trials`
/// random rational operations. A printed form that fails while its
/// registered correction holds is reported as a known erratum.
pub fn verify_oracle(class: &str, trials: usize, seed: u64) -> Result<OracleReport> {
    let forms = crate::oracle::forms_for(class)?;
    let mut status: Vec<FormStatus> =
        forms.iter().map(|f| (f.quantity.to_string(), Status::Pass, None)).collect();
    for trial in 0..trials {
        let seed = seed.wrapping_add(trial as u64);
        let l = crate::state::random_rational_operation(&mut rng(seed), 4);
        for (slot, check) in status.iter_mut().zip(crate::oracle::check_forms(class, &l)?) {
            let now = match (check.printed_ok, check.corrected_ok) {
                (true, _) => Status::Pass,
                (false, Some(true)) => Status::KnownErratum,
                (false, _) => Status::Fail,
            };
            let worse = matches!((slot.1, now), (Status::Pass, Status::KnownErratum | Status::Fail) | (Status::KnownErratum, Status::Fail));
            if worse {
                *slot = (slot.0.clone(), now, Some((trial, seed)));
            }
        }
    }
    Ok(OracleReport { class: class.into(), trials, forms: status })
}
