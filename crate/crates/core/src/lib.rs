//! Exact arithmetic for symmetric tensor lattices over the integers, with an
//! n-Engel checker for Lie rings built on top.
//!
//! The degree-n tensor space of a free Z-module of rank m carries three
//! nested full-rank lattices: the symmetric tensors S'_n, the span P_n of the
//! n-th tensor powers of module elements, and the image S''_n of the
//! symmetrization map. This crate constructs all three from explicit bases
//! and generating sets, computes their indices exactly via Hermite normal
//! form, and verifies the inclusion–exclusion identities that relate powers
//! of sums to symmetrizations.
//!
//! The same symmetrization sums, read as right-normed bracket substitutions,
//! give a finite test for the n-Engel identity on a Lie ring presented by
//! structure constants; [`lie`] implements that test together with a
//! brute-force oracle over finite rings.
//!
//! All core types are generic over an exact integer [`Scalar`]; the aliases
//! below fix `BigInt`, which the index computations require.

pub mod combinatorics;
pub mod gaussian;
pub mod lattice;
pub mod lie;
pub mod matrix;
pub mod scalar;
pub mod sym_modules;
pub mod tensor;

pub use combinatorics::{Composition, MultiIndex};
pub use scalar::Scalar;
pub use tensor::{TensorSpace, Word};

/// Default exact coefficient type.
pub type Int = num_bigint::BigInt;

/// Degree-n tensor with `BigInt` coefficients.
pub type Tensor = tensor::Tensor<Int>;
/// Dense `BigInt` matrix.
pub type IntMatrix = matrix::IntMatrix<Int>;
/// Integer lattice with `BigInt` entries.
pub type Lattice = lattice::Lattice<Int>;
/// Index of a sublattice over `BigInt`.
pub type LatticeIndex = lattice::LatticeIndex<Int>;
/// Structure-constant Lie ring over `BigInt`.
pub type LieRing = lie::LieRing<Int>;
/// Element of a `BigInt` Lie ring.
pub type RingElement = lie::RingElement<Int>;
/// Brute-force Engel verdict over `BigInt`.
pub type BruteVerdict = lie::BruteVerdict<Int>;
/// The S''_n ⊆ P_n ⊆ S'_n family over `BigInt`.
pub type SymmetricModuleFamily = sym_modules::SymmetricModuleFamily<Int>;
/// Prime divisibility report over `BigInt`.
pub type PrimeIndexReport = sym_modules::PrimeIndexReport<Int>;
