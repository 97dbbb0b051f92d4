//! Compositions, multi-indices and multiset permutations.
//!
//! Every enumerator here returns its items in lexicographic order, which is
//! what fixes the row order of the lattice generator matrices downstream.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("composition must have at least one part")]
    EmptyComposition,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("multi-index must have at least one entry")]
    EmptyMultiIndex,
    #[error("multi-index entry {entry} outside [1, {rank}]")]
    EntryOutOfRange { entry: u32, rank: usize },
    #[error("multi-index entries must be weakly increasing")]
    NotIncreasing,
}

/// Ordered tuple (k_1,...,k_s) of positive integers; its sum is the degree it
/// partitions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() {
            return Err(CombinatoricsError::EmptyComposition);
        }
        if parts.iter().any(|&k| k == 0) {
            return Err(CombinatoricsError::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `n` into exactly `s` positive parts, lexicographically.
pub fn compositions(n: usize, s: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if s == 0 || s > n {
        return out;
    }
    let mut prefix = Vec::with_capacity(s);
    fill_composition(n, s, &mut prefix, &mut out);
    out
}

fn fill_composition(
    remaining: usize,
    slots: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    if slots == 1 {
        prefix.push(remaining);
        out.push(Composition {
            parts: prefix.clone(),
        });
        prefix.pop();
        return;
    }
    for k in 1..=remaining - slots + 1 {
        prefix.push(k);
        fill_composition(remaining - k, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// Weakly increasing tuple (j_1,...,j_s) of generator indices in [1, rank].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    indices: Vec<u32>,
}

impl MultiIndex {
    pub fn new(indices: Vec<u32>, rank: usize) -> Result<Self, CombinatoricsError> {
        if indices.is_empty() {
            return Err(CombinatoricsError::EmptyMultiIndex);
        }
        for &j in &indices {
            if j == 0 || j as usize > rank {
                return Err(CombinatoricsError::EntryOutOfRange { entry: j, rank });
            }
        }
        if indices.windows(2).any(|w| w[0] > w[1]) {
            return Err(CombinatoricsError::NotIncreasing);
        }
        Ok(MultiIndex { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// True when no index repeats.
    pub fn is_strict(&self) -> bool {
        self.indices.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, j) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, ")")
    }
}

/// All weakly increasing s-tuples over [1, rank], lexicographically.
pub fn weak_multi_indices(rank: usize, s: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if s == 0 || rank == 0 {
        return out;
    }
    let mut prefix = Vec::with_capacity(s);
    fill_multi_index(rank, s, 1, false, &mut prefix, &mut out);
    out
}

/// All strictly increasing s-tuples over [1, rank], lexicographically.
pub fn strict_multi_indices(rank: usize, s: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if s == 0 || s > rank {
        return out;
    }
    let mut prefix = Vec::with_capacity(s);
    fill_multi_index(rank, s, 1, true, &mut prefix, &mut out);
    out
}

fn fill_multi_index(
    rank: usize,
    slots: usize,
    lo: u32,
    strict: bool,
    prefix: &mut Vec<u32>,
    out: &mut Vec<MultiIndex>,
) {
    if slots == 0 {
        out.push(MultiIndex {
            indices: prefix.clone(),
        });
        return;
    }
    for j in lo..=rank as u32 {
        prefix.push(j);
        fill_multi_index(rank, slots - 1, if strict { j + 1 } else { j }, strict, prefix, out);
        prefix.pop();
    }
}

/// Advance `a` to its lexicographic successor; false once `a` is the last
/// arrangement. Repeated entries are visited once each.
pub fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Iterator over the distinct rearrangements of a letter multiset, in
/// lexicographic order.
pub struct MultisetPermutations {
    state: Vec<u32>,
    first: bool,
    exhausted: bool,
}

pub fn multiset_permutations(letters: &[u32]) -> MultisetPermutations {
    let mut state = letters.to_vec();
    state.sort_unstable();
    MultisetPermutations {
        exhausted: state.is_empty(),
        state,
        first: true,
    }
}

impl Iterator for MultisetPermutations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.exhausted {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.state.clone());
        }
        if next_permutation(&mut self.state) {
            Some(self.state.clone())
        } else {
            self.exhausted = true;
            None
        }
    }
}
