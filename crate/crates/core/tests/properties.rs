//! Property tests over random states and operations.

use num_complex::Complex64;
use proptest::prelude::*;
use slocc::catalog::{class_names, representative_names};
use slocc::classify::{distinguish_exact, distinguish_states, exact_signature, match_classes};
use slocc::exact::GaussianRational as Q;
use slocc::invariants::{iv, InvariantVector};
use slocc::ket::{format_exact, parse_exact, ExactKet};
use slocc::nqubit::f_n;
use slocc::state::{apply_local, permute_qubits, swap, ExactState, LocalOperation, LocalOperator, PureState};
use slocc::verify::{sample_orbit, Sampler};
use slocc::Scalar;

fn gr() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| Q::from_parts(a, b, c, d))
}

fn small_int() -> impl Strategy<Value = Q> {
    prop_oneof![3 => Just(Q::zero()), 4 => (-3i64..=3, -2i64..=2).prop_map(|(a, b)| Q::from_ints(a, b))]
}

fn state(n: usize) -> impl Strategy<Value = ExactState> {
    proptest::collection::vec(small_int(), 1 << n)
        .prop_filter("nonzero", |v| v.iter().any(|x| !x.is_zero()))
        .prop_map(move |amps| PureState::new(n, amps).unwrap())
}

fn operator() -> impl Strategy<Value = LocalOperator<Q>> {
    [gr(), gr(), gr(), gr()].prop_map(LocalOperator::new).prop_filter("invertible", |op| !op.det().is_zero())
}

fn operation() -> impl Strategy<Value = LocalOperation<Q>> {
    proptest::collection::vec(operator(), 4).prop_map(LocalOperation::new)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn homogeneity(s in state(4), k in gr().prop_filter("nonzero", |k| !k.is_zero())) {
        let a = InvariantVector::evaluate(&s).unwrap();
        let b = InvariantVector::evaluate(&s.scaled(&k)).unwrap();
        let (k2, k4) = (k.square(), k.pow(4));
        prop_assert_eq!(b.iv, a.iv.mul(&k2));
        for i in 0..10 {
            prop_assert_eq!(&b.f[i], &a.f[i].mul(&k4));
        }
        for i in 0..3 {
            prop_assert_eq!(&b.d[i], &a.d[i].mul(&k4));
        }
    }

    #[test]
    fn composition(s in state(4), l in operation(), m in operation()) {
        let lhs = apply_local(&s, &l.compose(&m)).unwrap();
        let rhs = apply_local(&apply_local(&s, &m).unwrap(), &l).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_is_bit_exact(s in state(4)) {
        let f = s.to_float();
        prop_assert_eq!(apply_local(&f, &LocalOperation::identity(4)).unwrap(), f);
    }

    #[test]
    fn permutation_conjugates_action(s in state(4), l in operation(), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let a = permute_qubits(&apply_local(&s, &l).unwrap(), &perm).unwrap();
        let b = apply_local(&permute_qubits(&s, &perm).unwrap(), &l.permuted(&perm).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn iv_covariant_under_general_operations(s in state(4), l in operation()) {
        let det = l.dets().iter().fold(Q::one(), |acc, d| acc.mul(d));
        prop_assert_eq!(iv(&apply_local(&s, &l).unwrap()).unwrap(), iv(&s).unwrap().mul(&det));
    }

    #[test]
    fn exact_and_float_agree(s in state(4)) {
        let e = InvariantVector::evaluate(&s).unwrap();
        let f = InvariantVector::evaluate(&s.to_float()).unwrap();
        prop_assert!(close(e.iv.to_c64(), f.iv, 1e-10));
        for i in 0..10 {
            prop_assert!(close(e.f[i].to_c64(), f.f[i], 1e-10));
        }
        for i in 0..3 {
            prop_assert!(close(e.d[i].to_c64(), f.d[i], 1e-10));
        }
    }

    #[test]
    fn f_pairs_follow_qubit_swaps(s in state(4)) {
        let f = InvariantVector::evaluate(&s).unwrap().f;
        for (pair, other) in [(2usize, 1usize), (4, 2), (6, 3)] {
            let g = InvariantVector::evaluate(&permute_qubits(&s, &swap(4, 0, other)).unwrap()).unwrap().f;
            prop_assert_eq!(&f[pair], &g[0], "F{} vs swap A{}", pair + 1, other);
            prop_assert_eq!(&f[pair + 1], &g[1], "F{} vs swap A{}", pair + 2, other);
        }
    }

    #[test]
    fn f1_to_f8_magnitudes_permute_under_swaps(s in state(4), a in 0usize..4, b in 0usize..4) {
        prop_assume!(a != b);
        let sorted = |s: &ExactState| {
            let mut v: Vec<String> = InvariantVector::evaluate(s).unwrap().f[..8].iter().map(|x| x.norm_sqr().to_string()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(sorted(&s), sorted(&permute_qubits(&s, &swap(4, a, b)).unwrap()));
    }

    #[test]
    fn f_n_homogeneous(s in state(3), re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let k = Complex64::new(re, im);
        prop_assume!(k.norm() > 0.1);
        let f = s.to_float();
        let scaled = PureState::new(3, f.amps().iter().map(|a| a * k).collect()).unwrap();
        let (x, y) = (f_n(&f).unwrap(), f_n(&scaled).unwrap());
        prop_assert!((y - x * k.norm().powi(4)).abs() <= 1e-9 * (1.0 + y.abs()));
    }

    #[test]
    fn ket_roundtrip(s in state(4)) {
        let text = format_exact(&ExactKet::plain(s.clone()));
        prop_assert_eq!(&parse_exact(&text, Some(4)).unwrap().state, &s);
        let padded = text.replace('+', " + ").replace(">-", "> - ");
        prop_assert_eq!(&parse_exact(&padded, Some(4)).unwrap().state, &s);
    }

    #[test]
    fn distinguish_is_sound(s in state(4), l in operation()) {
        let t = apply_local(&s, &l).unwrap();
        prop_assert_eq!(distinguish_exact(&s, &t).unwrap(), slocc::classify::Distinction::Undecided);
        let d = distinguish_states(&s.to_float(), &t.to_float(), 1e-9).unwrap();
        prop_assert_eq!(d, slocc::classify::Distinction::Undecided);
    }
}

#[test]
fn orbit_samples_match_their_class() {
    for class in class_names() {
        for sample in sample_orbit::<Q>(&class, 8, 21, Sampler::Mixed).unwrap() {
            let sig = exact_signature(&sample.unwrap().state).unwrap();
            assert!(match_classes(&sig).contains(&class), "{class}");
        }
    }
    assert_eq!(representative_names().count(), 28);
}

/// F9 and F10 are not carried onto each other by qubit swaps, so neither
/// their magnitudes nor the aggregate F survive a B <-> C swap.
#[test]
fn f9_f10_break_swap_symmetry() {
    let s = parse_exact("|2> + i|7> + i|8> - |13>", Some(4)).unwrap().state;
    let t = permute_qubits(&s, &swap(4, 1, 2)).unwrap();
    assert_eq!(t, parse_exact("|4> + i|7> + i|8> - |11>", Some(4)).unwrap().state);
    let (a, b) = (InvariantVector::evaluate(&s).unwrap(), InvariantVector::evaluate(&t).unwrap());
    assert_eq!(a.f[..8], b.f[..8]);
    assert_ne!((a.f[8].norm_sqr(), a.f[9].norm_sqr()), (b.f[8].norm_sqr(), b.f[9].norm_sqr()));
    assert!((a.f_aggregate() - b.f_aggregate()).abs() > 1e-3);
}
