//! Dense pure states, local operators and their action.
//!
//! Basis index `i` encodes `|i⟩` with qubit A as the most significant bit,
//! so `|0011⟩ = |3⟩` and `|1111⟩ = |15⟩` for four qubits. Amplitudes are kept
//! unnormalized; every invariant in the crate is homogeneous.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::scalar::Scalar;

pub const MAX_QUBITS: usize = 8;

#[derive(Clone, PartialEq, Debug)]
pub struct PureState<S> {
    n: usize,
    amps: Vec<S>,
}

/// Floating carrier.
pub type State = PureState<Complex64>;
/// Exact Gaussian-rational carrier.
pub type ExactState = PureState<GaussianRational>;

impl<S: Scalar> PureState<S> {
    pub fn new(n: usize, amps: Vec<S>) -> Result<Self> {
        check_qubits(n)?;
        if amps.len() != 1 << n {
            return Err(Error::SizeMismatch { got: amps.len(), n });
        }
        Ok(PureState { n, amps })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(PureState { n, amps: vec![S::zero(); 1 << n] })
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        make_state(n, [(index, S::one())])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[S] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> &S {
        &self.amps[index]
    }

    pub fn into_amps(self) -> Vec<S> {
        self.amps
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(Scalar::is_zero)
    }

    /// Indices carrying a nonzero amplitude, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.amps.len()).filter(|&i| !self.amps[i].is_zero()).collect()
    }

    pub fn scaled(&self, k: &S) -> Self {
        PureState { n: self.n, amps: self.amps.iter().map(|a| a.mul(k)).collect() }
    }

    pub fn to_float(&self) -> State {
        PureState { n: self.n, amps: self.amps.iter().map(Scalar::to_c64).collect() }
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroState)
        } else {
            Ok(())
        }
    }
}

impl State {
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Unit 2-norm copy.
    pub fn normalize(&self) -> Result<State> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroState);
        }
        Ok(PureState { n: self.n, amps: self.amps.iter().map(|a| a / norm).collect() })
    }
}

impl ExactState {
    /// `Σ|aᵢ|²`, exact.
    pub fn norm_sqr(&self) -> BigRational {
        self.amps.iter().fold(BigRational::zero(), |acc, a| acc + a.norm_sqr())
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount { got: n, expected: format!("1..={MAX_QUBITS}") })
    }
}

/// State with the given amplitudes and zeros elsewhere.
pub fn make_state<S: Scalar>(
    n: usize,
    entries: impl IntoIterator<Item = (usize, S)>,
) -> Result<PureState<S>> {
    let mut s = PureState::zero(n)?;
    let mut seen = vec![false; s.dim()];
    for (index, value) in entries {
        if index >= s.dim() {
            return Err(Error::IndexOutOfRange { index, n });
        }
        if std::mem::replace(&mut seen[index], true) {
            return Err(Error::DuplicateIndex(index));
        }
        s.amps[index] = value;
    }
    s.require_nonzero()?;
    Ok(s)
}

/// A 2×2 matrix `m₁ m₂ / m₃ m₄`, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct LocalOperator<S> {
    pub m: [S; 4],
}

impl<S: Scalar> LocalOperator<S> {
    pub fn new(m: [S; 4]) -> Self {
        LocalOperator { m }
    }

    pub fn identity() -> Self {
        LocalOperator::new([S::one(), S::zero(), S::zero(), S::one()])
    }

    pub fn bit_flip() -> Self {
        LocalOperator::new([S::zero(), S::one(), S::one(), S::zero()])
    }

    pub fn diag(a: S, d: S) -> Self {
        LocalOperator::new([a, S::zero(), S::zero(), d])
    }

    pub fn det(&self) -> S {
        let [m1, m2, m3, m4] = &self.m;
        m1.mul(m4).sub(&m2.mul(m3))
    }

    pub fn is_identity(&self) -> bool {
        self.m[0].is_one() && self.m[1].is_zero() && self.m[2].is_zero() && self.m[3].is_one()
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let [a1, a2, a3, a4] = &self.m;
        let [b1, b2, b3, b4] = &rhs.m;
        LocalOperator::new([
            a1.mul(b1).add(&a2.mul(b3)),
            a1.mul(b2).add(&a2.mul(b4)),
            a3.mul(b1).add(&a4.mul(b3)),
            a3.mul(b2).add(&a4.mul(b4)),
        ])
    }

    pub fn to_float(&self) -> LocalOperator<Complex64> {
        LocalOperator::new(self.m.clone().map(|x| x.to_c64()))
    }
}

/// One operator per qubit, `α ⊗ β ⊗ γ ⊗ δ` for four qubits.
#[derive(Clone, PartialEq, Debug)]
pub struct LocalOperation<S> {
    pub ops: Vec<LocalOperator<S>>,
}

impl<S: Scalar> LocalOperation<S> {
    pub fn new(ops: Vec<LocalOperator<S>>) -> Self {
        LocalOperation { ops }
    }

    pub fn identity(n: usize) -> Self {
        LocalOperation::new(vec![LocalOperator::identity(); n])
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Copy with qubit `k` replaced by `op`.
    pub fn with(mut self, k: usize, op: LocalOperator<S>) -> Self {
        self.ops[k] = op;
        self
    }

    /// Per-slot product `self_k · rhs_k`.
    pub fn compose(&self, rhs: &Self) -> Self {
        LocalOperation::new(self.ops.iter().zip(&rhs.ops).map(|(a, b)| a.compose(b)).collect())
    }

    pub fn dets(&self) -> Vec<S> {
        self.ops.iter().map(LocalOperator::det).collect()
    }

    /// Operation acting on a permuted state: slot `perm[q]` gets operator `q`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_perm(perm, self.ops.len())?;
        let mut ops = self.ops.clone();
        for (q, &p) in perm.iter().enumerate() {
            ops[p] = self.ops[q].clone();
        }
        Ok(LocalOperation::new(ops))
    }

    pub fn to_float(&self) -> LocalOperation<Complex64> {
        LocalOperation::new(self.ops.iter().map(LocalOperator::to_float).collect())
    }
}

/// `(⊗ₖ Lₖ)·s`.
pub fn apply_local<S: Scalar>(s: &PureState<S>, l: &LocalOperation<S>) -> Result<PureState<S>> {
    if l.len() != s.n {
        return Err(Error::SizeMismatch { got: l.len(), n: s.n });
    }
    if let Some(k) = l.ops.iter().position(|op| op.det().is_zero()) {
        return Err(Error::SingularOperator(k));
    }
    let mut amps = s.amps.clone();
    for (k, op) in l.ops.iter().enumerate() {
        if op.is_identity() {
            continue;
        }
        let bit = 1usize << (s.n - 1 - k);
        for i in (0..amps.len()).filter(|i| i & bit == 0) {
            let (x0, x1) = (&amps[i], &amps[i | bit]);
            let lo = op.m[0].mul_sparse(x0).add(&op.m[1].mul_sparse(x1));
            let hi = op.m[2].mul_sparse(x0).add(&op.m[3].mul_sparse(x1));
            amps[i] = lo;
            amps[i | bit] = hi;
        }
    }
    Ok(PureState { n: s.n, amps })
}

/// Relabel qubits: qubit `q` of `s` becomes qubit `perm[q]` of the result.
pub fn permute_qubits<S: Scalar>(s: &PureState<S>, perm: &[usize]) -> Result<PureState<S>> {
    check_perm(perm, s.n)?;
    let n = s.n;
    let mut amps = vec![S::zero(); s.dim()];
    for (i, a) in s.amps.iter().enumerate() {
        let mut j = 0;
        for (q, &p) in perm.iter().enumerate() {
            if i >> (n - 1 - q) & 1 == 1 {
                j |= 1 << (n - 1 - p);
            }
        }
        amps[j] = a.clone();
    }
    Ok(PureState { n, amps })
}

/// Transposition of qubits `a` and `b` among `n`.
pub fn swap(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(a, b);
    perm
}

fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    let ok = perm.len() == n && perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation(perm.to_vec()))
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries with re, im uniform in [−1, 1], redrawn until `|det| ≥ det_min`.
pub fn random_invertible_with<R: Rng + ?Sized>(rng: &mut R, det_min: f64) -> LocalOperator<Complex64> {
    loop {
        let op = LocalOperator::new(std::array::from_fn(|_| {
            Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
        }));
        if op.det().norm() >= det_min {
            return op;
        }
    }
}

pub fn random_invertible(seed: u64, det_min: f64) -> LocalOperator<Complex64> {
    random_invertible_with(&mut rng(seed), det_min)
}

/// Largest numerator magnitude and denominator of random exact entries.
pub const EXACT_BOUND: i64 = 8;

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    let mut part = || {
        BigRational::new(
            rng.random_range(-EXACT_BOUND..=EXACT_BOUND).into(),
            rng.random_range(1..=EXACT_BOUND).into(),
        )
    };
    GaussianRational::new(part(), part())
}

/// Dense exact operator: every entry a random Gaussian rational.
pub fn random_rational_operator<R: Rng + ?Sized>(rng: &mut R) -> LocalOperator<GaussianRational> {
    loop {
        let op = LocalOperator::new(std::array::from_fn(|_| random_rational(rng)));
        if !op.det().is_zero() {
            return op;
        }
    }
}

/// Sparse exact operator over a small palette rich in zeros and ±1.
///
/// Dense draws almost never land on the hypersurfaces where a semi-invariant
/// vanishes, so witness searches mix these in.
pub fn sparse_rational_operator<R: Rng + ?Sized>(rng: &mut R) -> LocalOperator<GaussianRational> {
    const PALETTE: [(i64, i64, i64); 11] =
        [(0, 1, 0), (0, 1, 0), (0, 1, 0), (1, 1, 0), (1, 1, 0), (-1, 1, 0), (2, 1, 0), (-2, 1, 0), (1, 2, 0), (0, 1, 1), (0, 1, -1)];
    loop {
        let op = LocalOperator::new(std::array::from_fn(|_| {
            let (n, d, im) = PALETTE[rng.random_range(0..PALETTE.len())];
            GaussianRational::from_parts(n, d, im, 1)
        }));
        if !op.det().is_zero() {
            return op;
        }
    }
}

pub fn random_rational_operation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> LocalOperation<GaussianRational> {
    LocalOperation::new((0..n).map(|_| random_rational_operator(rng)).collect())
}

pub fn random_float_operation<R: Rng + ?Sized>(rng: &mut R, n: usize, det_min: f64) -> LocalOperation<Complex64> {
    LocalOperation::new((0..n).map(|_| random_invertible_with(rng, det_min)).collect())
}

/// Random exact state; each amplitude is nonzero with probability `density`.
pub fn random_rational_state<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> ExactState {
    loop {
        let amps = (0..1usize << n)
            .map(|_| if rng.random_bool(density) { random_rational(rng) } else { GaussianRational::zero() })
            .collect();
        let s = PureState { n, amps };
        if !s.is_zero() {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ghz() -> State {
        make_state(4, [(0, Complex64::one()), (15, Complex64::one())]).unwrap()
    }

    #[test]
    fn make_state_checks() {
        assert_eq!(ghz().support(), vec![0, 15]);
        assert!(matches!(make_state::<Complex64>(4, []), Err(Error::ZeroState)));
        assert!(matches!(make_state(4, [(16, Complex64::one())]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            make_state(4, [(3, Complex64::one()), (3, Complex64::one())]),
            Err(Error::DuplicateIndex(3))
        ));
        let g3 = make_state(3, [(0, Complex64::one()), (7, Complex64::one())]).unwrap();
        assert_eq!(g3.dim(), 8);
    }

    #[test]
    fn normalize_examples() {
        let g = ghz().normalize().unwrap();
        assert!((g.amp(0).re - 0.5f64.sqrt()).abs() < 1e-15);
        let again = g.normalize().unwrap();
        for (a, b) in g.amps().iter().zip(again.amps()) {
            assert!((a - b).norm() < 1e-15);
        }
        let s = PureState::new(1, vec![Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0)]).unwrap();
        let u = s.normalize().unwrap();
        assert!((u.amp(0).re - 0.6).abs() < 1e-15 && (u.amp(1).re - 0.8).abs() < 1e-15);
        assert_eq!(State::zero(2).unwrap().normalize(), Err(Error::ZeroState));
    }

    #[test]
    fn apply_examples() {
        let g = ghz();
        assert_eq!(apply_local(&g, &LocalOperation::identity(4)).unwrap(), g);
        let flip = LocalOperation::identity(4).with(0, LocalOperator::bit_flip());
        assert_eq!(apply_local(&g, &flip).unwrap().support(), vec![7, 8]);
        let scale = LocalOperation::identity(4).with(0, LocalOperator::diag(Complex64::new(2.0, 0.0), Complex64::one()));
        let out = apply_local(&g, &scale).unwrap();
        assert_eq!(*out.amp(0), Complex64::new(2.0, 0.0));
        assert_eq!(*out.amp(15), Complex64::one());
    }

    #[test]
    fn apply_rejects_bad_operations() {
        let g = ghz();
        assert!(matches!(apply_local(&g, &LocalOperation::identity(3)), Err(Error::SizeMismatch { .. })));
        let singular = LocalOperation::identity(4).with(2, LocalOperator::new([Complex64::one(); 4]));
        assert_eq!(apply_local(&g, &singular), Err(Error::SingularOperator(2)));
    }

    #[test]
    fn permutation_examples() {
        let s = ExactState::basis(4, 4).unwrap();
        assert_eq!(permute_qubits(&s, &swap(4, 0, 1)).unwrap().support(), vec![8]);
        let mut r = rng(3);
        let t = random_rational_state(&mut r, 4, 0.7);
        let p = swap(4, 0, 1);
        assert_eq!(permute_qubits(&permute_qubits(&t, &p).unwrap(), &p).unwrap(), t);
        assert_eq!(permute_qubits(&t, &[0, 1, 2, 3]).unwrap(), t);
        assert!(permute_qubits(&t, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn sampler_contracts() {
        let a = random_invertible(1, 0.1);
        assert!(a.det().norm() >= 0.1);
        assert_eq!(a, random_invertible(1, 0.1));
        let mut r = rng(7);
        for _ in 0..1000 {
            assert!(random_invertible_with(&mut r, 0.1).det().norm() >= 0.1);
        }
        for _ in 0..200 {
            assert!(!random_rational_operator(&mut r).det().is_zero());
            assert!(!sparse_rational_operator(&mut r).det().is_zero());
        }
    }

    #[test]
    fn unitary_action_preserves_norm() {
        let h = 0.5f64.sqrt();
        let had = LocalOperator::new([h, h, h, -h].map(|x| Complex64::new(x, 0.0)));
        let y = LocalOperator::new([
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ]);
        let l = LocalOperation::new(vec![had.clone(), y, had, LocalOperator::identity()]);
        let s = random_rational_state(&mut rng(9), 4, 1.0).to_float();
        let out = apply_local(&s, &l).unwrap();
        assert!((out.norm() - s.norm()).abs() < 1e-12 * s.norm());
    }
}
