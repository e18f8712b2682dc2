//! The scalar carrier shared by the floating and exact evaluation paths.
//!
//! Every polynomial in the crate is written once against [`Scalar`], so the
//! two carriers cannot drift apart.

use std::fmt::Debug;

use num_complex::Complex64;

pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// `num/den` as a real scalar.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn imag_unit() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_c64(&self) -> Complex64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Product that skips the multiplication when a factor is zero.
    fn mul_sparse(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            Self::zero()
        } else {
            self.mul(rhs)
        }
    }

    fn square(&self) -> Self {
        self.mul_sparse(self)
    }

    fn scale(&self, k: i64) -> Self {
        self.mul_sparse(&Self::from_int(k))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_sparse(self);
        }
        acc
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
}

/// Signed sum of pairwise products `Σ sign·a[i]·a[j]`.
pub(crate) fn pair_sum<S: Scalar>(a: &[S], terms: &[(usize, usize, i8)]) -> S {
    let mut acc = S::zero();
    for &(i, j, sign) in terms {
        let p = a[i].mul_sparse(&a[j]);
        if p.is_zero() {
            continue;
        }
        acc = if sign > 0 { acc.add(&p) } else { acc.sub(&p) };
    }
    acc
}
