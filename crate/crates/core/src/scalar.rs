//! Scalar abstraction behind all tensor and lattice arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact integer scalar.
///
/// Implemented by `i64`, `i128`, `BigInt` and anything else with ring, sign
/// and Euclidean-division structure. All library math is generic over it; the
/// crate-root aliases fix `BigInt`, which the lattice index computations need
/// (indices grow like `2^(m^2)`).
pub trait Scalar:
    Integer + Signed + FromPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + FromPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
}

/// k! as a scalar.
pub fn factorial<T: Scalar>(k: usize) -> T {
    let mut acc = T::one();
    for i in 2..=k {
        acc = acc * T::from_usize(i).expect("factorial argument fits in scalar");
    }
    acc
}

/// Binomial coefficient C(n, k), exactly.
pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc is C(n, i) here, so the division below is exact
        acc = acc * T::from_usize(n - i).expect("binomial argument fits in scalar");
        acc = acc / T::from_usize(i + 1).unwrap();
    }
    acc
}

/// C(n, k) as a machine integer, for use as an exponent or cardinality.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial fits in usize")
}
