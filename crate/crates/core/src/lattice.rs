//! Integer lattices: canonical Hermite bases, membership with witness
//! coordinates, rank, and indices of sublattices.

use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vector has length {got}, ambient dimension is {ambient}")]
    DimensionMismatch { got: usize, ambient: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("basis row {row} of the candidate sublattice lies outside the superlattice")]
    NotSublattice { row: usize },
}

/// Index of a sublattice: the order of the quotient group, or infinite when
/// the ranks differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIndex<T> {
    Finite(T),
    Infinite,
}

impl<T> LatticeIndex<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            LatticeIndex::Finite(v) => Some(v),
            LatticeIndex::Infinite => None,
        }
    }
}

/// Z-span of integer vectors, held as its canonical Hermite basis. Two
/// lattices are equal iff they have the same ambient dimension and span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice<T: Scalar> {
    ambient: usize,
    basis: IntMatrix<T>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Lattice<T> {
    /// The lattice containing only the zero vector.
    pub fn zero(ambient: usize) -> Self {
        Lattice {
            ambient,
            basis: IntMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    /// Span of the rows of `generators`; rows may be dependent or zero.
    pub fn from_generators(generators: &IntMatrix<T>) -> Self {
        let basis = generators.hermite_normal_form();
        let pivots = basis.pivot_cols();
        Lattice {
            ambient: generators.cols(),
            basis,
            pivots,
        }
    }

    /// Convenience constructor from row vectors.
    pub fn span(ambient: usize, rows: Vec<Vec<T>>) -> Self {
        let mut m = IntMatrix::zeros(0, ambient);
        for row in rows {
            m.push_row(row);
        }
        Self::from_generators(&m)
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Canonical basis in Hermite normal form, one row per basis vector.
    pub fn basis(&self) -> &IntMatrix<T> {
        &self.basis
    }

    /// Tests membership of `v`; on success returns the unique coordinates of
    /// `v` in the canonical basis.
    pub fn contains(&self, v: &[T]) -> Result<Option<Vec<T>>, LatticeError> {
        if v.len() != self.ambient {
            return Err(LatticeError::DimensionMismatch {
                got: v.len(),
                ambient: self.ambient,
            });
        }
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (i, &p) in self.pivots.iter().enumerate() {
            let pivot = self.basis.get(i, p);
            // rows below i are zero in column p, so residual[p] is final here
            let (q, rem) = residual[p].div_rem(pivot);
            if !rem.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for c in p..self.ambient {
                    let delta = q.clone() * self.basis.get(i, c).clone();
                    let cur = std::mem::replace(&mut residual[c], T::zero());
                    residual[c] = cur - delta;
                }
            }
            coords.push(q);
        }
        if residual.iter().all(T::is_zero) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    /// Index [self : sub] of a sublattice, computed as the product of the
    /// Hermite pivots of `sub` expressed in the coordinates of `self`.
    pub fn index_of(&self, sub: &Lattice<T>) -> Result<LatticeIndex<T>, LatticeError> {
        if self.ambient != sub.ambient {
            return Err(LatticeError::AmbientMismatch {
                left: self.ambient,
                right: sub.ambient,
            });
        }
        let mut coords = IntMatrix::zeros(0, self.rank());
        for r in 0..sub.rank() {
            match self.contains(sub.basis.row(r))? {
                Some(c) => coords.push_row(c),
                None => return Err(LatticeError::NotSublattice { row: r }),
            }
        }
        if sub.rank() < self.rank() {
            return Ok(LatticeIndex::Infinite);
        }
        let h = coords.hermite_normal_form();
        if h.rows() < self.rank() {
            return Ok(LatticeIndex::Infinite);
        }
        let mut index = T::one();
        for i in 0..h.rows() {
            index = index * h.get(i, i).clone();
        }
        Ok(LatticeIndex::Finite(index))
    }
}
