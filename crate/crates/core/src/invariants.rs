//! The invariant IV and the semi-invariants F₁..F₁₀, D₁..D₃ of four-qubit
//! states, with residuals of their transformation laws.
//!
//! Arrays are 0-based: `f[0]` is F₁ and `d[2]` is D₃.

use crate::error::{Error, Result};
use crate::scalar::{pair_sum, Scalar};
use crate::state::{apply_local, LocalOperation, PureState};

pub const IV_DEGREE: u32 = 2;
pub const SEMI_DEGREE: u32 = 4;

type PairTerms = &'static [(usize, usize, i8)];

pub(crate) const IV_TERMS: PairTerms =
    &[(2, 13, 1), (3, 12, -1), (4, 11, 1), (5, 10, -1), (0, 15, -1), (1, 14, 1), (6, 9, -1), (7, 8, 1)];

/// Each Fᵢ is `X² − 4·Y·Z` with X, Y, Z signed sums of amplitude pairs.
pub(crate) const F_TERMS: [[PairTerms; 3]; 10] = [
    [&[(0, 7, 1), (2, 5, -1), (1, 6, 1), (3, 4, -1)], &[(2, 4, 1), (0, 6, -1)], &[(3, 5, 1), (1, 7, -1)]],
    [&[(8, 15, 1), (11, 12, -1), (9, 14, 1), (10, 13, -1)], &[(11, 13, 1), (9, 15, -1)], &[(10, 12, 1), (8, 14, -1)]],
    [&[(0, 11, 1), (2, 9, -1), (1, 10, 1), (3, 8, -1)], &[(2, 8, 1), (0, 10, -1)], &[(3, 9, 1), (1, 11, -1)]],
    [&[(4, 15, 1), (6, 13, -1), (5, 14, 1), (7, 12, -1)], &[(6, 12, 1), (4, 14, -1)], &[(7, 13, 1), (5, 15, -1)]],
    [&[(0, 13, 1), (4, 9, -1), (1, 12, 1), (5, 8, -1)], &[(4, 8, 1), (0, 12, -1)], &[(5, 9, 1), (1, 13, -1)]],
    [&[(2, 15, 1), (6, 11, -1), (3, 14, 1), (7, 10, -1)], &[(6, 10, 1), (2, 14, -1)], &[(7, 11, 1), (3, 15, -1)]],
    [&[(0, 14, 1), (4, 10, -1), (2, 12, 1), (6, 8, -1)], &[(4, 8, 1), (0, 12, -1)], &[(6, 10, 1), (2, 14, -1)]],
    [&[(1, 15, 1), (5, 11, -1), (3, 13, 1), (7, 9, -1)], &[(5, 9, 1), (1, 13, -1)], &[(7, 11, 1), (3, 15, -1)]],
    [&[(0, 15, 1), (2, 13, -1), (1, 14, 1), (3, 12, -1)], &[(0, 14, 1), (2, 12, -1)], &[(1, 15, 1), (3, 13, -1)]],
    [&[(4, 11, 1), (7, 8, -1), (5, 10, 1), (6, 9, -1)], &[(7, 9, 1), (5, 11, -1)], &[(6, 8, 1), (4, 10, -1)]],
];

/// Each Dᵢ is `P·Q − R·S` with two-term pair sums.
pub(crate) const D_TERMS: [[PairTerms; 4]; 3] = [
    [&[(1, 4, 1), (0, 5, -1)], &[(11, 14, 1), (10, 15, -1)], &[(3, 6, 1), (2, 7, -1)], &[(9, 12, 1), (8, 13, -1)]],
    [&[(4, 7, 1), (5, 6, -1)], &[(8, 11, 1), (9, 10, -1)], &[(0, 3, 1), (1, 2, -1)], &[(12, 15, 1), (13, 14, -1)]],
    [&[(3, 5, 1), (1, 7, -1)], &[(10, 12, 1), (8, 14, -1)], &[(2, 4, 1), (0, 6, -1)], &[(11, 13, 1), (9, 15, -1)]],
];

/// IV, F₁..F₁₀ and D₁..D₃ of one state.
#[derive(Clone, PartialEq, Debug)]
pub struct InvariantVector<S> {
    pub iv: S,
    pub f: [S; 10],
    pub d: [S; 3],
}

impl<S: Scalar> InvariantVector<S> {
    pub fn evaluate(s: &PureState<S>) -> Result<Self> {
        let a = four_qubit_amps(s)?;
        Ok(InvariantVector { iv: iv_raw(a), f: std::array::from_fn(|i| f_raw(a, i)), d: std::array::from_fn(|i| d_raw(a, i)) })
    }

    /// `F = 4·Σ|Fᵢ|`.
    pub fn f_aggregate(&self) -> f64 {
        4.0 * self.f.iter().map(|x| x.to_c64().norm()).sum::<f64>()
    }
}

fn four_qubit_amps<S: Scalar>(s: &PureState<S>) -> Result<&[S]> {
    if s.n() != 4 {
        return Err(Error::QubitCount { got: s.n(), expected: "4".into() });
    }
    Ok(s.amps())
}

fn iv_raw<S: Scalar>(a: &[S]) -> S {
    pair_sum(a, IV_TERMS)
}

fn f_raw<S: Scalar>(a: &[S], i: usize) -> S {
    let [x, y, z] = F_TERMS[i];
    let yz = pair_sum(a, y).mul_sparse(&pair_sum(a, z));
    pair_sum(a, x).square().sub(&yz.scale(4))
}

fn d_raw<S: Scalar>(a: &[S], i: usize) -> S {
    let [p, q, r, s] = D_TERMS[i];
    let left = pair_sum(a, p).mul_sparse(&pair_sum(a, q));
    left.sub(&pair_sum(a, r).mul_sparse(&pair_sum(a, s)))
}

pub fn iv<S: Scalar>(s: &PureState<S>) -> Result<S> {
    Ok(iv_raw(four_qubit_amps(s)?))
}

pub fn f_components<S: Scalar>(s: &PureState<S>) -> Result<[S; 10]> {
    let a = four_qubit_amps(s)?;
    Ok(std::array::from_fn(|i| f_raw(a, i)))
}

pub fn f_aggregate<S: Scalar>(s: &PureState<S>) -> Result<f64> {
    let f = f_components(s)?;
    Ok(4.0 * f.iter().map(|x| x.to_c64().norm()).sum::<f64>())
}

pub fn d_components<S: Scalar>(s: &PureState<S>) -> Result<[S; 3]> {
    let a = four_qubit_amps(s)?;
    Ok(std::array::from_fn(|i| d_raw(a, i)))
}

/// The qubit whose operator is fixed to the identity in a semi-invariance law.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    A,
    B,
    C,
    D,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::A, Slot::B, Slot::C, Slot::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        ['A', 'B', 'C', 'D'][self as usize]
    }

    /// 0-based indices of the F pair governed by this slot.
    pub fn f_pair(self) -> [usize; 2] {
        let k = 2 * self as usize;
        [k, k + 1]
    }
}

fn require_identity<S: Scalar>(l: &LocalOperation<S>, slots: &[usize]) -> Result<()> {
    if l.len() != 4 {
        return Err(Error::SizeMismatch { got: l.len(), n: 4 });
    }
    match slots.iter().find(|&&k| !l.ops[k].is_identity()) {
        Some(&k) => Err(Error::SlotNotIdentity { slot: Slot::ALL[k].letter() }),
        None => Ok(()),
    }
}

fn det_product<S: Scalar>(dets: &[S], powers: [u32; 4]) -> S {
    dets.iter().zip(powers).fold(S::one(), |acc, (d, p)| acc.mul(&d.pow(p)))
}

/// `iv(L·s) − iv(s)·Π det`.
pub fn residual_iv_covariance<S: Scalar>(s: &PureState<S>, l: &LocalOperation<S>) -> Result<S> {
    let t = apply_local(s, l)?;
    Ok(iv(&t)?.sub(&iv(s)?.mul(&det_product(&l.dets(), [1; 4]))))
}

/// Residuals of the F-pair law for the slot held at the identity.
pub fn residual_f_semiinvariance<S: Scalar>(s: &PureState<S>, l: &LocalOperation<S>, slot: Slot) -> Result<[S; 2]> {
    require_identity(l, &[slot.index()])?;
    let mut powers = [2; 4];
    powers[slot.index()] = 0;
    pair_residual(s, l, slot.f_pair(), powers)
}

/// Residuals of the F₉, F₁₀ law; α and β must be the identity.
pub fn residual_f910_semiinvariance<S: Scalar>(s: &PureState<S>, l: &LocalOperation<S>) -> Result<[S; 2]> {
    require_identity(l, &[0, 1])?;
    pair_residual(s, l, [8, 9], [0, 0, 2, 2])
}

fn pair_residual<S: Scalar>(s: &PureState<S>, l: &LocalOperation<S>, pair: [usize; 2], powers: [u32; 4]) -> Result<[S; 2]> {
    let before = f_components(s)?;
    let after = f_components(&apply_local(s, l)?)?;
    let factor = det_product(&l.dets(), powers);
    Ok(pair.map(|i| after[i].sub(&before[i].mul(&factor))))
}

/// Identity slots and determinant powers of the Dᵢ laws, `which` in 1..=3.
pub fn d_law(which: usize) -> Result<([usize; 2], [u32; 4])> {
    match which {
        1 => Ok(([0, 2], [0, 2, 0, 2])),
        2 => Ok(([0, 1], [0, 0, 2, 2])),
        3 => Ok(([0, 3], [0, 2, 2, 0])),
        _ => Err(Error::Invalid(format!("D index {which} not in 1..=3"))),
    }
}

/// Residual of the Dᵢ law, `which` in 1..=3.
pub fn residual_d_semiinvariance<S: Scalar>(s: &PureState<S>, l: &LocalOperation<S>, which: usize) -> Result<S> {
    let (slots, powers) = d_law(which)?;
    require_identity(l, &slots)?;
    let before = d_components(s)?[which - 1].clone();
    let after = d_components(&apply_local(s, l)?)?[which - 1].clone();
    Ok(after.sub(&before.mul(&det_product(&l.dets(), powers))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational as Q;
    use crate::state::{make_state, random_rational_operator, random_rational_state, rng, ExactState, LocalOperator};

    fn st(entries: &[(usize, i64)]) -> ExactState {
        make_state(4, entries.iter().map(|&(i, a)| (i, Q::from_int(a)))).unwrap()
    }

    fn ratio(n: i64, d: i64) -> Q {
        Q::from_ratio(n, d)
    }

    #[test]
    fn ghz_values() {
        let g = st(&[(0, 1), (15, 1)]);
        // Unnormalized norm² is 2, so IV carries 1/2 and the quartics 1/4.
        assert_eq!(iv(&g).unwrap(), Q::from_int(-1));
        let f = f_components(&g).unwrap();
        assert_eq!(f[8], Q::one());
        assert!(f.iter().enumerate().all(|(i, x)| i == 8 || x.is_zero()));
        assert!(d_components(&g).unwrap().iter().all(Scalar::is_zero));
        assert_eq!(f_aggregate(&g).unwrap(), 4.0);
    }

    #[test]
    fn w_vanishes() {
        let w = st(&[(1, 1), (2, 1), (4, 1), (8, 1)]);
        let v = InvariantVector::evaluate(&w).unwrap();
        assert!(v.iv.is_zero() && v.f.iter().all(Scalar::is_zero) && v.d.iter().all(Scalar::is_zero));
    }

    #[test]
    fn c4_d_values() {
        let c4 = st(&[(3, 1), (5, 1), (6, 1), (9, 1), (10, 1), (12, 1)]);
        // norm² = 6; degree-4 values scale by 36.
        assert_eq!(d_components(&c4).unwrap(), [Q::from_int(-1), Q::one(), Q::one()]);
        assert_eq!(iv(&c4).unwrap(), Q::from_int(-3));
    }

    #[test]
    fn ghz_pair_product_d2() {
        let s = st(&[(0, 1), (3, 1), (12, 1), (15, 1)]);
        assert_eq!(d_components(&s).unwrap(), [Q::zero(), Q::from_int(-1), Q::zero()]);
        assert_eq!(f_aggregate(&s).unwrap(), 0.0);
        assert_eq!(d_components(&s.scaled(&ratio(1, 2))).unwrap()[1], ratio(-1, 16));
    }

    #[test]
    fn phi4_matches_ghz_f() {
        let phi = st(&[(0, 1), (3, 1), (12, 1), (15, -1)]);
        let f = f_components(&phi.scaled(&ratio(1, 2))).unwrap();
        assert_eq!(f[8], ratio(1, 4));
        assert!(f.iter().enumerate().all(|(i, x)| i == 8 || x.is_zero()));
    }

    #[test]
    fn wrong_qubit_count() {
        let s = ExactState::basis(3, 0).unwrap();
        assert!(matches!(iv(&s), Err(Error::QubitCount { .. })));
    }

    /// Each Fᵢ on the indicator of its own X monomials: X = ±1 per term.
    #[test]
    fn transcription_indicator_inputs() {
        for (i, [x, y, z]) in F_TERMS.iter().enumerate() {
            for &(p, q, sign) in x.iter() {
                let s = st(&[(p, 1), (q, 1)]);
                let f = f_components(&s).unwrap();
                let touches = |t: &[(usize, usize, i8)]| t.iter().any(|&(u, v, _)| u == p && v == q);
                assert!(!touches(y) && !touches(z));
                assert_eq!(f[i], Q::one(), "F{} term ({p},{q},{sign})", i + 1);
            }
            // Y·Z cross term: one monomial from each.
            let (p, q, _) = y[0];
            let (u, v, _) = z[0];
            let s = st(&[(p, 1), (q, 1), (u, 1), (v, 1)]);
            let set = [p, q, u, v];
            let on = |t: &[(usize, usize, i8)]| -> i64 {
                t.iter().filter(|&&(a, b, _)| set.contains(&a) && set.contains(&b)).map(|&(_, _, sg)| sg as i64).sum()
            };
            let expected = on(x) * on(x) - 4 * on(y) * on(z);
            assert_eq!(f_components(&s).unwrap()[i], Q::from_int(expected), "F{}", i + 1);
        }
    }

    #[test]
    fn covariance_laws_exact() {
        let mut r = rng(5);
        for _ in 0..5 {
            let s = random_rational_state(&mut r, 4, 0.8);
            let l = LocalOperation::new((0..4).map(|_| random_rational_operator(&mut r)).collect());
            assert!(residual_iv_covariance(&s, &l).unwrap().is_zero());
            for slot in Slot::ALL {
                let ls = l.clone().with(slot.index(), LocalOperator::identity());
                assert!(residual_f_semiinvariance(&s, &ls, slot).unwrap().iter().all(Scalar::is_zero));
            }
            let l910 = l.clone().with(0, LocalOperator::identity()).with(1, LocalOperator::identity());
            assert!(residual_f910_semiinvariance(&s, &l910).unwrap().iter().all(Scalar::is_zero));
            for which in 1..=3 {
                let (slots, _) = d_law(which).unwrap();
                let ld = slots.iter().fold(l.clone(), |acc, &k| acc.with(k, LocalOperator::identity()));
                assert!(residual_d_semiinvariance(&s, &ld, which).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn slot_contract() {
        let g = st(&[(0, 1), (15, 1)]);
        let l = LocalOperation::identity(4).with(0, LocalOperator::diag(Q::from_int(2), Q::one()));
        assert_eq!(residual_f_semiinvariance(&g, &l, Slot::A), Err(Error::SlotNotIdentity { slot: 'A' }));
        assert!(residual_f_semiinvariance(&g, &l, Slot::B).is_ok());
        assert!(residual_d_semiinvariance(&g, &l, 4).is_err());
    }
}
