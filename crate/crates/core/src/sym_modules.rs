//! The nested lattices S''_n(M) ⊆ P_n(M) ⊆ S'_n(M) inside the degree-n
//! tensor space of a free Z-module: S'_n is the lattice of symmetric tensors,
//! S''_n the image of the symmetrization map, and P_n the span of the n-th
//! tensor powers of module elements. All three have rank C(m+n-1, n); the
//! quotients are finite and computed exactly here.

use num_traits::pow::pow;

use crate::combinatorics::{
    compositions, strict_multi_indices, weak_multi_indices, Composition, MultiIndex,
};
use crate::lattice::{Lattice, LatticeIndex};
use crate::matrix::IntMatrix;
use crate::scalar::{binomial_usize, factorial, Scalar};
use crate::tensor::{modified_symmetrization, tensor_power, Tensor, TensorError, TensorSpace};

/// Product of the factorials of the parts of a composition.
fn part_factorials<T: Scalar>(c: &Composition) -> T {
    c.parts()
        .iter()
        .fold(T::one(), |acc, &k| acc * factorial::<T>(k))
}

/// Basis of S'_n(M): the modified symmetrizations over strictly increasing
/// index tuples and all compositions of n. Cardinality C(m+n-1, n).
pub fn basis_s_prime<T: Scalar>(space: TensorSpace) -> Vec<Tensor<T>> {
    let mut out = Vec::new();
    for s in 1..=space.degree() {
        for mi in strict_multi_indices(space.rank(), s) {
            for c in compositions(space.degree(), s) {
                out.push(modified_symmetrization(space, mi.indices(), &c));
            }
        }
    }
    out
}

/// Basis of S''_n(M): the S'_n basis elements scaled by k_1! ... k_s!.
pub fn basis_s_dprime<T: Scalar>(space: TensorSpace) -> Vec<Tensor<T>> {
    let mut out = Vec::new();
    for s in 1..=space.degree() {
        for mi in strict_multi_indices(space.rank(), s) {
            for c in compositions(space.degree(), s) {
                let scale: T = part_factorials(&c);
                out.push(modified_symmetrization::<T>(space, mi.indices(), &c).scaled(&scale));
            }
        }
    }
    out
}

/// Generating set of P_n(M): for each weakly increasing multi-index, the sum
/// of the modified symmetrizations over all compositions of n of its length.
/// Cardinality C(m+n, n) - 1.
pub fn generators_p<T: Scalar>(space: TensorSpace) -> Vec<(MultiIndex, Tensor<T>)> {
    let mut out = Vec::new();
    for s in 1..=space.degree() {
        for mi in weak_multi_indices(space.rank(), s) {
            let mut sum = Tensor::zero(space);
            for c in compositions(space.degree(), s) {
                sum = &sum + &modified_symmetrization(space, mi.indices(), &c);
            }
            out.push((mi, sum));
        }
    }
    out
}

/// Brute-force lattice of n-th powers: the span of v^{⊗n} over all
/// coefficient vectors v in {0,...,bound}^m. With bound >= n this is all of
/// P_n(M); it serves as the independent oracle for `generators_p`.
pub fn oracle_p_lattice<T: Scalar>(space: TensorSpace, bound: usize) -> Lattice<T> {
    let mut rows = IntMatrix::zeros(0, space.dim());
    let m = space.rank();
    let mut v = vec![0usize; m];
    loop {
        if v.iter().any(|&x| x > 0) {
            let coeffs: Vec<T> = v
                .iter()
                .map(|&x| T::from_usize(x).expect("bound fits in scalar"))
                .collect();
            rows.push_row(tensor_power(space, &coeffs).to_coords());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return Lattice::from_generators(&rows);
            }
            i -= 1;
            v[i] += 1;
            if v[i] <= bound {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Closed form for the index [S'_n(M) : S''_n(M)]:
/// the product over s and over compositions (k_1,...,k_s) of n of
/// (k_1! ... k_s!)^C(m,s).
pub fn index_formula_s<T: Scalar>(rank: usize, degree: usize) -> T {
    let mut acc = T::one();
    for s in 1..=degree {
        let e = binomial_usize(rank, s);
        if e == 0 {
            continue;
        }
        for c in compositions(degree, s) {
            acc = acc * pow(part_factorials::<T>(&c), e);
        }
    }
    acc
}

/// The three lattices of one (rank, degree) pair in a shared word order.
#[derive(Debug, Clone)]
pub struct SymmetricModuleFamily<T: Scalar> {
    space: TensorSpace,
    s_prime: Lattice<T>,
    s_dprime: Lattice<T>,
    p: Lattice<T>,
}

impl<T: Scalar> SymmetricModuleFamily<T> {
    pub fn new(rank: usize, degree: usize) -> Result<Self, TensorError> {
        let space = TensorSpace::new(rank, degree)?;
        let to_lattice = |tensors: Vec<Tensor<T>>| {
            let mut m = IntMatrix::zeros(0, space.dim());
            for t in tensors {
                m.push_row(t.to_coords());
            }
            Lattice::from_generators(&m)
        };
        let s_prime = to_lattice(basis_s_prime(space));
        let s_dprime = to_lattice(basis_s_dprime(space));
        let p = to_lattice(generators_p(space).into_iter().map(|(_, t)| t).collect());
        Ok(SymmetricModuleFamily {
            space,
            s_prime,
            s_dprime,
            p,
        })
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn s_prime(&self) -> &Lattice<T> {
        &self.s_prime
    }

    pub fn s_dprime(&self) -> &Lattice<T> {
        &self.s_dprime
    }

    pub fn p(&self) -> &Lattice<T> {
        &self.p
    }

    /// [S'_n : S''_n], always finite.
    pub fn index_s(&self) -> T {
        self.index_expect(&self.s_prime, &self.s_dprime)
    }

    /// [S'_n : P_n], always finite.
    pub fn index_s_over_p(&self) -> T {
        self.index_expect(&self.s_prime, &self.p)
    }

    /// [P_n : S''_n], always finite.
    pub fn index_p_over_dprime(&self) -> T {
        self.index_expect(&self.p, &self.s_dprime)
    }

    fn index_expect(&self, sup: &Lattice<T>, sub: &Lattice<T>) -> T {
        match sup.index_of(sub) {
            Ok(LatticeIndex::Finite(v)) => v,
            Ok(LatticeIndex::Infinite) => unreachable!("the three lattices share one rank"),
            Err(e) => unreachable!("containment S'' ⊆ P ⊆ S' failed: {e}"),
        }
    }

    /// Containment chain S''_n ⊆ P_n ⊆ S'_n, checked row by row.
    pub fn sandwich_holds(&self) -> bool {
        let inside = |sub: &Lattice<T>, sup: &Lattice<T>| {
            (0..sub.rank()).all(|r| matches!(sup.contains(sub.basis().row(r)), Ok(Some(_))))
        };
        inside(&self.s_dprime, &self.p) && inside(&self.p, &self.s_prime)
    }
}

/// Result of the prime divisibility check on [S'_p(M) : P_p(M)].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIndexReport<T> {
    pub prime: usize,
    pub rank: usize,
    pub index: T,
    /// True when the prime does not divide the index.
    pub coprime: bool,
}

/// Computes [S'_p(M) : P_p(M)] for a prime p and reports whether p divides it
/// (it never does; the check verifies that).
pub fn prime_index_check<T: Scalar>(p: usize, rank: usize) -> Result<PrimeIndexReport<T>, TensorError> {
    let family = SymmetricModuleFamily::<T>::new(rank, p)?;
    let index = family.index_s_over_p();
    let modulus = T::from_usize(p).expect("prime fits in scalar");
    let coprime = !index.mod_floor(&modulus).is_zero();
    Ok(PrimeIndexReport {
        prime: p,
        rank,
        index,
        coprime,
    })
}
