//! The n-qubit semi-invariant F built from index quadruples.
//!
//! A quadruple is four pairs `(i,j),(k,l),(p,q),(r,s)` with `i<j`, `k<l`,
//! `p<q`, `r<s`, `i<k<p<r`, equal sums and equal XORs. Its term is
//!
//! ```text
//! (aᵢaⱼ + aₖaₗ − aₚa_q − aᵣaₛ)² − 4(aᵢa_{j−o} − aₚa_{q−o})(aₖa_{l+o} − aᵣa_{s+o})
//! ```
//!
//! with offset `o = 1` when `i+j` is odd and `o = 2` when it is even; a
//! quadruple counts only when all offset indices are basis indices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::invariants::f_aggregate;
use crate::scalar::Scalar;
use crate::state::{make_state, ExactState, PureState, State};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct IndexQuadruple {
    pub pairs: [(usize, usize); 4],
}

impl IndexQuadruple {
    pub fn sum(&self) -> usize {
        self.pairs[0].0 + self.pairs[0].1
    }

    pub fn xor(&self) -> usize {
        self.pairs[0].0 ^ self.pairs[0].1
    }

    pub fn is_odd(&self) -> bool {
        self.sum() % 2 == 1
    }

    pub fn offset(&self) -> usize {
        if self.is_odd() {
            1
        } else {
            2
        }
    }

    /// `j−o, l+o, q−o, s+o`, or `None` when any leaves `[0, dim)`.
    pub fn offset_indices(&self, dim: usize) -> Option<[usize; 4]> {
        let o = self.offset();
        let [(_, j), (_, l), (_, q), (_, s)] = self.pairs;
        let out = [j.checked_sub(o)?, l + o, q.checked_sub(o)?, s + o];
        out.iter().all(|&x| x < dim).then_some(out)
    }

    /// Checks every membership constraint against `dim = 2ⁿ`.
    pub fn is_valid(&self, dim: usize) -> bool {
        let [(i, j), (k, l), (p, q), (r, s)] = self.pairs;
        let ordered = i < j && k < l && p < q && r < s && i < k && k < p && p < r && s < dim;
        let sums = i + j == k + l && k + l == p + q && p + q == r + s;
        let xors = i ^ j == k ^ l && k ^ l == p ^ q && p ^ q == r ^ s;
        ordered && sums && xors && self.offset_indices(dim).is_some()
    }
}

fn check_n(n: usize) -> Result<()> {
    if (2..=8).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount { got: n, expected: "2..=8".into() })
    }
}

/// All pairs `i<j` grouped by `(i+j, i⊕j)`, each group ascending.
fn pair_groups(n: usize) -> BTreeMap<(usize, usize), Vec<(usize, usize)>> {
    let dim = 1usize << n;
    let mut groups: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for i in 0..dim {
        for j in i + 1..dim {
            groups.entry((i + j, i ^ j)).or_default().push((i, j));
        }
    }
    groups.retain(|_, g| g.len() >= 4);
    groups
}

/// Lazy 4-subsets of one key group, lexicographic.
struct Combos {
    group: Vec<(usize, usize)>,
    idx: [usize; 4],
    done: bool,
}

impl Combos {
    fn new(group: Vec<(usize, usize)>) -> Self {
        let done = group.len() < 4;
        Combos { group, idx: [0, 1, 2, 3], done }
    }
}

impl Iterator for Combos {
    type Item = [(usize, usize); 4];

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self.idx.map(|k| self.group[k]);
        let m = self.group.len();
        match (0..4).rev().find(|&t| self.idx[t] < m - 4 + t) {
            Some(t) => {
                self.idx[t] += 1;
                for u in t + 1..4 {
                    self.idx[u] = self.idx[u - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// Lazily yields every quadruple, by `(sum, xor)` key then lexicographically.
pub fn quadruples(n: usize) -> Result<impl Iterator<Item = IndexQuadruple>> {
    check_n(n)?;
    let dim = 1usize << n;
    Ok(pair_groups(n)
        .into_values()
        .flat_map(Combos::new)
        .map(|pairs| IndexQuadruple { pairs })
        .filter(move |q| q.offset_indices(dim).is_some()))
}

/// Every quadruple for `n` qubits. Holds ~25M entries at `n = 8`; prefer
/// [`quadruples`] there.
pub fn enumerate_quadruples(n: usize) -> Result<Vec<IndexQuadruple>> {
    Ok(quadruples(n)?.collect())
}

/// Pair sums `i+j` that occur in some quadruple.
pub fn admissible_sums(n: usize) -> Result<BTreeSet<usize>> {
    Ok(quadruples(n)?.map(|q| q.sum()).collect())
}

fn term<S: Scalar>(a: &[S], q: &IndexQuadruple, nonzero: &[bool]) -> Option<S> {
    let [(i, j), (k, l), (p, qq), (r, s)] = q.pairs;
    let [j1, l1, q1, s1] = q.offset_indices(a.len())?;
    let both = |x: usize, y: usize| nonzero[x] && nonzero[y];
    let live = both(i, j) || both(k, l) || both(p, qq) || both(r, s) || both(i, j1) || both(p, q1) || both(k, l1) || both(r, s1);
    if !live {
        return None;
    }
    let x = a[i].mul_sparse(&a[j]).add(&a[k].mul_sparse(&a[l])).sub(&a[p].mul_sparse(&a[qq])).sub(&a[r].mul_sparse(&a[s]));
    let y = a[i].mul_sparse(&a[j1]).sub(&a[p].mul_sparse(&a[q1]));
    let z = a[k].mul_sparse(&a[l1]).sub(&a[r].mul_sparse(&a[s1]));
    Some(x.square().sub(&y.mul_sparse(&z).scale(4)))
}

fn for_each_term<S: Scalar>(s: &PureState<S>, mut f: impl FnMut(S) -> bool) -> Result<()> {
    let a = s.amps();
    let nonzero: Vec<bool> = a.iter().map(|x| !x.is_zero()).collect();
    for q in quadruples(s.n())? {
        if let Some(t) = term(a, &q, &nonzero) {
            if !f(t) {
                break;
            }
        }
    }
    Ok(())
}

/// `4·Σ|term|` over all quadruples.
pub fn f_n<S: Scalar>(s: &PureState<S>) -> Result<f64> {
    let mut total = 0.0;
    for_each_term(s, |t| {
        total += t.to_c64().norm();
        true
    })?;
    Ok(4.0 * total)
}

/// True when every term vanishes; decided exactly on the exact carrier.
pub fn f_n_vanishes<S: Scalar>(s: &PureState<S>) -> Result<bool> {
    let mut all_zero = true;
    for_each_term(s, |t| {
        all_zero = t.is_zero();
        all_zero
    })?;
    Ok(all_zero)
}

/// `|0…0⟩ + |1…1⟩`, unnormalized.
pub fn ghz_n(n: usize) -> Result<ExactState> {
    make_state(n, [(0, Scalar::one()), ((1 << n) - 1, Scalar::one())])
}

/// Equal amplitudes on the single-excitation kets `|2ʲ⟩`, unnormalized.
pub fn w_n(n: usize) -> Result<ExactState> {
    make_state(n, (0..n).map(|j| (1 << j, Scalar::one())))
}

/// `(f_n(s), F(s))` for a four-qubit state; the two are not assumed equal.
pub fn compare_with_aggregate(s: &State) -> Result<(f64, f64)> {
    Ok((f_n(s)?, f_aggregate(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{permute_qubits, random_rational_state, rng, swap};

    #[test]
    fn two_qubits_have_no_quadruples() {
        assert!(enumerate_quadruples(2).unwrap().is_empty());
        assert!(quadruples(1).is_err());
        assert!(quadruples(9).is_err());
    }

    #[test]
    fn constraints_hold() {
        for n in 3..=5 {
            for q in enumerate_quadruples(n).unwrap() {
                assert!(q.is_valid(1 << n), "{q:?}");
            }
        }
    }

    /// Independent brute force over all 4-subsets of pairs for n = 3, 4.
    #[test]
    fn brute_force_agrees() {
        for n in 3..=4usize {
            let dim = 1 << n;
            let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
            let mut expected = BTreeSet::new();
            for a in 0..pairs.len() {
                for b in a + 1..pairs.len() {
                    if pairs[a].0 + pairs[a].1 != pairs[b].0 + pairs[b].1 {
                        continue;
                    }
                    for c in b + 1..pairs.len() {
                        for d in c + 1..pairs.len() {
                            let mut four = [pairs[a], pairs[b], pairs[c], pairs[d]];
                            four.sort();
                            let q = IndexQuadruple { pairs: four };
                            if q.is_valid(dim) {
                                expected.insert(q);
                            }
                        }
                    }
                }
            }
            let got: BTreeSet<_> = enumerate_quadruples(n).unwrap().into_iter().collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn four_qubit_sums() {
        let sums: Vec<usize> = admissible_sums(4).unwrap().into_iter().collect();
        assert_eq!(sums, vec![7, 11, 13, 14, 15, 16, 17, 19, 23]);
        assert_eq!(enumerate_quadruples(4).unwrap().len(), 78);
    }

    #[test]
    fn ghz_and_w_small_n() {
        for n in 3..=6 {
            assert!(f_n_vanishes(&w_n(n).unwrap()).unwrap());
            assert_eq!(f_n(&w_n(n).unwrap()).unwrap(), 0.0);
            assert!(f_n(&ghz_n(n).unwrap()).unwrap() > 0.0);
            assert!(!f_n_vanishes(&ghz_n(n).unwrap()).unwrap());
        }
        assert_eq!(w_n(3).unwrap().support(), vec![1, 2, 4]);
        assert_eq!(ghz_n(4).unwrap().support(), vec![0, 15]);
    }

    #[test]
    fn product_basis_state_vanishes() {
        for n in 2..=5 {
            assert_eq!(f_n(&ExactState::basis(n, 0).unwrap()).unwrap(), 0.0);
        }
    }

    #[test]
    fn three_qubit_permutation_invariance() {
        let mut r = rng(21);
        for _ in 0..20 {
            let s = random_rational_state(&mut r, 3, 0.9).to_float();
            let base = f_n(&s).unwrap();
            for b in 1..3 {
                let v = f_n(&permute_qubits(&s, &swap(3, 0, b)).unwrap()).unwrap();
                assert!((v - base).abs() <= 1e-10 * base.max(1.0), "swap(0,{b}): {base} vs {v}");
            }
        }
    }

    /// Four qubits break permutation invariance already on a 0/1 state.
    #[test]
    fn four_qubit_permutation_counterexample() {
        let s = make_state(4, [2, 4, 12].map(|i| (i, crate::GaussianRational::from_int(1)))).unwrap();
        let t = permute_qubits(&s, &swap(4, 0, 1)).unwrap();
        assert_eq!(t.support(), vec![2, 8, 12]);
        assert_eq!(f_n(&s).unwrap(), 68.0);
        assert_eq!(f_n(&t).unwrap(), 4.0);
    }
}
