//! Failure of the integral power-generating set over the Gaussian integers.
//!
//! Over Z, the weakly-increasing symmetrization sums generate the lattice of
//! tensor powers. Over Z[i] they do not: for a free Z[i]-module M of rank 2,
//! the four elements that form a Z-basis of P_3(Zx_1 + Zx_2) span a proper
//! Z[i]-submodule of P_3(M), missing (1+i)(x_1^{(2)} x_2^{(1)})*. This module
//! verifies that by restriction of scalars: Z[i]-coefficients become pairs of
//! integers per word, and membership is tested in the rank-16 Z-lattice.

use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::Composition;
use crate::lattice::Lattice;
use crate::scalar::Scalar;
use crate::sym_modules::generators_p;
use crate::tensor::{modified_symmetrization, Tensor, TensorSpace};

/// Gaussian integer re + im·i with exact parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gauss<T: Scalar> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> Gauss<T> {
    pub fn new(re: T, im: T) -> Self {
        Gauss { re, im }
    }

    pub fn zero() -> Self {
        Gauss::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Gauss::new(T::one(), T::zero())
    }

    pub fn i() -> Self {
        Gauss::new(T::zero(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiplication by i: (a + bi)·i = -b + ai.
    pub fn times_i(&self) -> Self {
        Gauss::new(-self.im.clone(), self.re.clone())
    }
}

impl<T: Scalar> Add for &Gauss<T> {
    type Output = Gauss<T>;
    fn add(self, rhs: &Gauss<T>) -> Gauss<T> {
        Gauss::new(
            self.re.clone() + rhs.re.clone(),
            self.im.clone() + rhs.im.clone(),
        )
    }
}

impl<T: Scalar> Sub for &Gauss<T> {
    type Output = Gauss<T>;
    fn sub(self, rhs: &Gauss<T>) -> Gauss<T> {
        Gauss::new(
            self.re.clone() - rhs.re.clone(),
            self.im.clone() - rhs.im.clone(),
        )
    }
}

impl<T: Scalar> Mul for &Gauss<T> {
    type Output = Gauss<T>;
    fn mul(self, rhs: &Gauss<T>) -> Gauss<T> {
        Gauss::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re.clone() * rhs.im.clone() + self.im.clone() * rhs.re.clone(),
        )
    }
}

impl<T: Scalar> Neg for &Gauss<T> {
    type Output = Gauss<T>;
    fn neg(self) -> Gauss<T> {
        Gauss::new(-self.re.clone(), -self.im.clone())
    }
}

/// Outcome of the three Gaussian-integer checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianExampleReport {
    /// The four reduced elements span the same Z-lattice as the nine
    /// generating sums, and are 4 independent vectors.
    pub basis_reduced: bool,
    /// (1+i)(x_1^{(2)} x_2^{(1)})* equals the displayed combination of four
    /// tensor cubes, hence lies in P_3(M).
    pub power_identity: bool,
    /// Membership of that element in the Z[i]-span of the four reduced
    /// elements (expected false).
    pub in_gaussian_span: bool,
}

impl GaussianExampleReport {
    pub fn passes(&self) -> bool {
        self.basis_reduced && self.power_identity && !self.in_gaussian_span
    }
}

/// Cube of v_1·x_1 + v_2·x_2 with Gaussian coefficients: one coefficient per
/// word of the rank-2 degree-3 space, in lexicographic word order.
fn gauss_cube<T: Scalar>(space: TensorSpace, v: &[Gauss<T>; 2]) -> Vec<Gauss<T>> {
    space
        .words()
        .map(|w| {
            let mut c = Gauss::one();
            for &letter in w.letters() {
                c = &c * &v[letter as usize - 1];
            }
            c
        })
        .collect()
}

/// Embeds an integer tensor as a Gaussian coefficient vector.
fn embed<T: Scalar>(t: &Tensor<T>) -> Vec<Gauss<T>> {
    t.to_coords()
        .into_iter()
        .map(|re| Gauss::new(re, T::zero()))
        .collect()
}

fn scale<T: Scalar>(v: &[Gauss<T>], c: &Gauss<T>) -> Vec<Gauss<T>> {
    v.iter().map(|x| x * c).collect()
}

fn add<T: Scalar>(a: &[Gauss<T>], b: &[Gauss<T>]) -> Vec<Gauss<T>> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub<T: Scalar>(a: &[Gauss<T>], b: &[Gauss<T>]) -> Vec<Gauss<T>> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Restriction of scalars: interleaves (re, im) per word, turning a Gaussian
/// vector of length d into an integer vector of length 2d.
fn flatten<T: Scalar>(v: &[Gauss<T>]) -> Vec<T> {
    let mut out = Vec::with_capacity(2 * v.len());
    for g in v {
        out.push(g.re.clone());
        out.push(g.im.clone());
    }
    out
}

/// Runs the three checks of the Gaussian-integer counterexample.
pub fn gaussian_example_check<T: Scalar>() -> GaussianExampleReport {
    let space = TensorSpace::new(2, 3).expect("rank 2, degree 3");
    let c3 = Composition::new(vec![3]).unwrap();
    let c21 = Composition::new(vec![2, 1]).unwrap();
    let c12 = Composition::new(vec![1, 2]).unwrap();

    let cube1 = modified_symmetrization::<T>(space, &[1], &c3);
    let cube2 = modified_symmetrization::<T>(space, &[2], &c3);
    let a = modified_symmetrization::<T>(space, &[1, 2], &c21);
    let b = modified_symmetrization::<T>(space, &[1, 2], &c12);
    let two = T::from_usize(2).unwrap();
    let reduced = [cube1.clone(), cube2.clone(), &a + &b, b.scaled(&two)];

    // (a) the four elements span the integral power lattice and are a basis
    let gens = generators_p::<T>(space);
    let lat_gens = Lattice::span(space.dim(), gens.into_iter().map(|(_, t)| t.to_coords()).collect());
    let lat_reduced = Lattice::span(space.dim(), reduced.iter().map(Tensor::to_coords).collect());
    let basis_reduced = lat_gens == lat_reduced && lat_reduced.rank() == 4;

    // (b) (1+i)(x_1^(2) x_2^(1))* =
    //     (x_1+x_2)^{⊗3} + (x_1+i x_2)^{⊗3} - 2 x_1^{⊗3} - (1-i) x_2^{⊗3}
    let one_plus_i = Gauss::new(T::one(), T::one());
    let one_minus_i = Gauss::new(T::one(), -T::one());
    let lhs = scale(&embed(&a), &one_plus_i);
    let rhs = {
        let p11 = gauss_cube(space, &[Gauss::one(), Gauss::one()]);
        let p1i = gauss_cube(space, &[Gauss::one(), Gauss::i()]);
        let p10 = gauss_cube(space, &[Gauss::one(), Gauss::zero()]);
        let p01 = gauss_cube(space, &[Gauss::zero(), Gauss::one()]);
        let two_g = Gauss::new(two.clone(), T::zero());
        sub(
            &sub(&add(&p11, &p1i), &scale(&p10, &two_g)),
            &scale(&p01, &one_minus_i),
        )
    };
    let power_identity = lhs == rhs;

    // (c) the Z[i]-span of the four elements, restricted to Z: spanned by
    // each element and its i-multiple in the rank-16 coordinates
    let mut rows = Vec::with_capacity(8);
    for t in &reduced {
        let g = embed(t);
        let gi: Vec<Gauss<T>> = g.iter().map(Gauss::times_i).collect();
        rows.push(flatten(&g));
        rows.push(flatten(&gi));
    }
    let gaussian_span = Lattice::span(2 * space.dim(), rows);
    let in_gaussian_span = gaussian_span
        .contains(&flatten(&lhs))
        .expect("matching ambient dimension")
        .is_some();

    GaussianExampleReport {
        basis_reduced,
        power_identity,
        in_gaussian_span,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn gauss_arithmetic() {
        let a: Gauss<BigInt> = Gauss::new(BigInt::from(1), BigInt::from(2));
        let b = Gauss::new(BigInt::from(3), BigInt::from(-1));
        // (1+2i)(3-i) = 5 + 5i
        assert_eq!(&a * &b, Gauss::new(BigInt::from(5), BigInt::from(5)));
        assert_eq!(a.times_i(), Gauss::new(BigInt::from(-2), BigInt::from(1)));
        assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn all_three_checks_pass() {
        let report = gaussian_example_check::<BigInt>();
        assert!(report.basis_reduced);
        assert!(report.power_identity);
        assert!(!report.in_gaussian_span);
        assert!(report.passes());
    }

    #[test]
    fn plain_sum_is_in_the_gaussian_span() {
        // sanity: the element without the (1+i) factor does lie in the span
        let space = TensorSpace::new(2, 3).unwrap();
        let c21 = Composition::new(vec![2, 1]).unwrap();
        let c12 = Composition::new(vec![1, 2]).unwrap();
        let a = modified_symmetrization::<BigInt>(space, &[1, 2], &c21);
        let b = modified_symmetrization::<BigInt>(space, &[1, 2], &c12);
        let two = BigInt::from(2);
        let reduced = [
            modified_symmetrization::<BigInt>(space, &[1], &Composition::new(vec![3]).unwrap()),
            modified_symmetrization::<BigInt>(space, &[2], &Composition::new(vec![3]).unwrap()),
            &a + &b,
            b.scaled(&two),
        ];
        let mut rows = Vec::new();
        for t in &reduced {
            let g = embed(t);
            let gi: Vec<Gauss<BigInt>> = g.iter().map(Gauss::times_i).collect();
            rows.push(flatten(&g));
            rows.push(flatten(&gi));
        }
        let span = Lattice::span(16, rows);
        let sum = embed(&(&a + &b));
        assert!(span.contains(&flatten(&sum)).unwrap().is_some());
        // and A alone does not (its coefficient on B-words would need 1/2)
        let a_only = embed(&a);
        assert!(span.contains(&flatten(&a_only)).unwrap().is_none());
    }
}
