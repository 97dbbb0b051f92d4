//! Degree-n tensors over a rank-m free Z-module, together with the
//! symmetrization operators and the subset-sum / inclusion-exclusion
//! identities between them.
//!
//! Words are compared lexicographically on their letter sequences; that order
//! fixes the column order of every lattice matrix downstream.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::combinatorics::{compositions, multiset_permutations, Composition};
use crate::scalar::{factorial, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("tensor degree must be positive")]
    ZeroDegree,
    #[error("module rank must be positive")]
    ZeroRank,
    #[error("ambient dimension {rank}^{degree} does not fit in usize")]
    TooLarge { rank: usize, degree: usize },
    #[error("word has length {got}, ambient degree is {degree}")]
    WrongWordLength { got: usize, degree: usize },
    #[error("letter {letter} outside generator range [1, {rank}]")]
    LetterOutOfRange { letter: u32, rank: usize },
    #[error("coordinate vector has length {got}, ambient dimension is {dim}")]
    WrongCoordinateLength { got: usize, dim: usize },
}

/// The ambient space of degree-`degree` tensors over a free module of rank
/// `rank`; its monomial basis is the set of all rank^degree words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    rank: usize,
    degree: usize,
}

impl TensorSpace {
    pub fn new(rank: usize, degree: usize) -> Result<Self, TensorError> {
        if degree == 0 {
            return Err(TensorError::ZeroDegree);
        }
        if rank == 0 {
            return Err(TensorError::ZeroRank);
        }
        // the word-coordinate maps need the full dimension as a usize
        rank.checked_pow(degree as u32)
            .ok_or(TensorError::TooLarge { rank, degree })?;
        Ok(TensorSpace { rank, degree })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of words, rank^degree.
    pub fn dim(&self) -> usize {
        self.rank.pow(self.degree as u32)
    }

    pub fn check_word(&self, word: &Word) -> Result<(), TensorError> {
        if word.degree() != self.degree {
            return Err(TensorError::WrongWordLength {
                got: word.degree(),
                degree: self.degree,
            });
        }
        for &letter in word.letters() {
            if letter == 0 || letter as usize > self.rank {
                return Err(TensorError::LetterOutOfRange {
                    letter,
                    rank: self.rank,
                });
            }
        }
        Ok(())
    }

    /// Position of `word` in the lexicographic word order.
    pub fn word_index(&self, word: &Word) -> usize {
        debug_assert!(self.check_word(word).is_ok());
        let mut idx = 0usize;
        for &letter in word.letters() {
            idx = idx * self.rank + (letter as usize - 1);
        }
        idx
    }

    /// Word at position `idx` of the lexicographic order.
    pub fn word_at(&self, mut idx: usize) -> Word {
        assert!(idx < self.dim(), "word index out of range");
        let mut letters = vec![0u32; self.degree];
        for t in (0..self.degree).rev() {
            letters[t] = (idx % self.rank) as u32 + 1;
            idx /= self.rank;
        }
        Word(letters)
    }

    /// All words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.dim()).map(move |idx| self.word_at(idx))
    }
}

/// Monomial x_{i_1} ⊗ ... ⊗ x_{i_n}, stored as its 1-based letter sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Position action: the letter at position t moves to position sigma[t].
    pub fn permuted(&self, sigma: &[usize]) -> Word {
        assert_eq!(sigma.len(), self.0.len(), "permutation length mismatch");
        let mut out = vec![0u32; self.0.len()];
        for (t, &letter) in self.0.iter().enumerate() {
            out[sigma[t]] = letter;
        }
        Word(out)
    }

    /// Letters in weakly increasing order; the key of the commutative image.
    pub fn sorted(&self) -> Word {
        let mut letters = self.0.clone();
        letters.sort_unstable();
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{letter}")?;
        }
        write!(f, ")")
    }
}

/// Sparse integer combination of words of one degree; stored coefficients are
/// never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor<T: Scalar> {
    space: TensorSpace,
    terms: BTreeMap<Word, T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn zero(space: TensorSpace) -> Self {
        Tensor {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(space: TensorSpace, word: Word, coeff: T) -> Result<Self, TensorError> {
        Self::from_terms(space, [(word, coeff)])
    }

    /// Builds a tensor from (word, coefficient) pairs, merging duplicates and
    /// dropping zero sums.
    pub fn from_terms(
        space: TensorSpace,
        terms: impl IntoIterator<Item = (Word, T)>,
    ) -> Result<Self, TensorError> {
        let mut out = Tensor::zero(space);
        for (word, coeff) in terms {
            space.check_word(&word)?;
            out.add_term(word, coeff);
        }
        Ok(out)
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter()
    }

    /// Coefficient of `word`, zero if absent.
    pub fn coeff(&self, word: &Word) -> T {
        self.terms.get(word).cloned().unwrap_or_else(T::zero)
    }

    fn add_term(&mut self, word: Word, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn accumulate(&mut self, other: Tensor<T>, negate: bool) {
        assert_eq!(self.space, other.space, "tensor spaces differ");
        for (word, coeff) in other.terms {
            self.add_term(word, if negate { -coeff } else { coeff });
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        let mut out = Tensor::zero(self.space);
        if c.is_zero() {
            return out;
        }
        for (word, coeff) in &self.terms {
            out.terms.insert(word.clone(), coeff.clone() * c.clone());
        }
        out
    }

    /// Applies the position action of `sigma` to every word.
    pub fn permuted(&self, sigma: &[usize]) -> Self {
        let mut out = Tensor::zero(self.space);
        for (word, coeff) in &self.terms {
            out.add_term(word.permuted(sigma), coeff.clone());
        }
        out
    }

    /// Fixed under the full position action of S_n; checked on the adjacent
    /// transpositions, which generate it.
    pub fn is_symmetric(&self) -> bool {
        let n = self.space.degree;
        let mut sigma: Vec<usize> = (0..n).collect();
        for t in 0..n.saturating_sub(1) {
            sigma.swap(t, t + 1);
            if self.permuted(&sigma) != *self {
                return false;
            }
            sigma.swap(t, t + 1);
        }
        true
    }

    /// Dense coordinates in the lexicographic word order.
    pub fn to_coords(&self) -> Vec<T> {
        let mut v = vec![T::zero(); self.space.dim()];
        for (word, coeff) in &self.terms {
            v[self.space.word_index(word)] = coeff.clone();
        }
        v
    }

    pub fn from_coords(space: TensorSpace, coords: &[T]) -> Result<Self, TensorError> {
        if coords.len() != space.dim() {
            return Err(TensorError::WrongCoordinateLength {
                got: coords.len(),
                dim: space.dim(),
            });
        }
        let mut out = Tensor::zero(space);
        for (idx, coeff) in coords.iter().enumerate() {
            if !coeff.is_zero() {
                out.terms.insert(space.word_at(idx), coeff.clone());
            }
        }
        Ok(out)
    }

    /// Merges coefficients of words with the same letter multiset. Keys are
    /// sorted words; zero sums are dropped.
    pub fn commutative_image(&self) -> BTreeMap<Word, T> {
        let mut out: BTreeMap<Word, T> = BTreeMap::new();
        for (word, coeff) in &self.terms {
            let key = word.sorted();
            match out.entry(key) {
                Entry::Vacant(e) => {
                    e.insert(coeff.clone());
                }
                Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + coeff.clone();
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for &Tensor<T> {
    type Output = Tensor<T>;

    fn add(self, rhs: &Tensor<T>) -> Tensor<T> {
        let mut out = self.clone();
        out.accumulate(rhs.clone(), false);
        out
    }
}

impl<T: Scalar> Sub for &Tensor<T> {
    type Output = Tensor<T>;

    fn sub(self, rhs: &Tensor<T>) -> Tensor<T> {
        let mut out = self.clone();
        out.accumulate(rhs.clone(), true);
        out
    }
}

impl<T: Scalar> Neg for &Tensor<T> {
    type Output = Tensor<T>;

    fn neg(self) -> Tensor<T> {
        let mut out = Tensor::zero(self.space);
        out.accumulate(self.clone(), true);
        out
    }
}

impl<T: Scalar> fmt::Display for Tensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{word}={coeff}")?;
        }
        Ok(())
    }
}

/// Sum over all of S_n of the position-permuted copies of `word`.
///
/// Each distinct rearrangement appears with coefficient equal to the order of
/// the stabilizer of the letter tuple, i.e. the product of the factorials of
/// the letter multiplicities.
pub fn symmetrize_word<T: Scalar>(space: TensorSpace, word: &Word) -> Tensor<T> {
    space.check_word(word).expect("word valid for the space");
    let stabilizer: T = letter_multiplicities(word.letters())
        .values()
        .fold(T::one(), |acc, &k| acc * factorial::<T>(k));
    let mut out = Tensor::zero(space);
    for letters in multiset_permutations(word.letters()) {
        out.terms.insert(Word(letters), stabilizer.clone());
    }
    out
}

/// The modified symmetrization (X_{i_1}^{(k_1)} ... X_{i_s}^{(k_s)})*:
/// the symmetrization of the word with k_r copies of i_r, divided exactly by
/// k_1! ... k_s!.
///
/// For pairwise distinct indices this is the sum of the n!/(k_1!...k_s!)
/// distinct rearrangements, each with coefficient 1. Repeated indices are
/// allowed; the coefficients then pick up the extra multinomial factor.
pub fn modified_symmetrization<T: Scalar>(
    space: TensorSpace,
    indices: &[u32],
    composition: &Composition,
) -> Tensor<T> {
    assert_eq!(
        indices.len(),
        composition.len(),
        "index tuple and composition must have equal length"
    );
    assert_eq!(
        composition.total(),
        space.degree(),
        "composition must sum to the ambient degree"
    );
    let mut expanded = Vec::with_capacity(space.degree());
    for (&i, &k) in indices.iter().zip(composition.parts()) {
        expanded.extend(std::iter::repeat(i).take(k));
    }
    let expanded = Word(expanded);
    space.check_word(&expanded).expect("indices valid for the space");

    let numerator: T = letter_multiplicities(expanded.letters())
        .values()
        .fold(T::one(), |acc, &k| acc * factorial::<T>(k));
    let denominator: T = composition
        .parts()
        .iter()
        .fold(T::one(), |acc, &k| acc * factorial::<T>(k));
    let (coeff, rem) = numerator.div_rem(&denominator);
    assert!(
        rem.is_zero(),
        "stabilizer order must be divisible by the part factorials"
    );

    let mut out = Tensor::zero(space);
    for letters in multiset_permutations(expanded.letters()) {
        out.terms.insert(Word(letters), coeff.clone());
    }
    out
}

/// Full multilinear expansion of (sum_i v_i x_i)^{⊗n}: the coefficient of the
/// word (w_1,...,w_n) is the product of the v_{w_t}.
pub fn tensor_power<T: Scalar>(space: TensorSpace, v: &[T]) -> Tensor<T> {
    assert_eq!(v.len(), space.rank(), "vector length must equal the rank");
    let support: Vec<(u32, &T)> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32 + 1, c))
        .collect();
    let mut out = Tensor::zero(space);
    if support.is_empty() {
        return out;
    }
    let n = space.degree();
    let mut digits = vec![0usize; n];
    loop {
        let mut letters = Vec::with_capacity(n);
        let mut coeff = T::one();
        for &d in &digits {
            let (letter, c) = support[d];
            letters.push(letter);
            coeff = coeff * (*c).clone();
        }
        out.terms.insert(Word(letters), coeff);
        // odometer over the support alphabet
        let mut t = n;
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            digits[t] += 1;
            if digits[t] < support.len() {
                break;
            }
            digits[t] = 0;
        }
    }
}

/// X_I: the sum of all distinct degree-n monomials in which every index of
/// `indices` appears at least once. Zero for the empty set and whenever
/// |I| exceeds the degree.
pub fn subset_sum_tensor<T: Scalar>(space: TensorSpace, indices: &[u32]) -> Tensor<T> {
    let mut set: Vec<u32> = indices.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut out = Tensor::zero(space);
    if set.is_empty() || set.len() > space.degree() {
        return out;
    }
    for c in compositions(space.degree(), set.len()) {
        out.accumulate(modified_symmetrization(space, &set, &c), false);
    }
    out
}

/// The inclusion-exclusion combination
/// (-1)^s * sum over J ⊆ {1,...,s} of (-1)^{|J|} (sum_{j in J} X_j)^{⊗n},
/// which equals the sum of (X_1^{(k_1)}...X_s^{(k_s)})* over all compositions
/// (k_1,...,k_s) of n. Zero when s exceeds the degree.
pub fn mobius_combination<T: Scalar>(space: TensorSpace, s: usize) -> Tensor<T> {
    assert!(s >= 1, "s must be at least 1");
    assert!(s <= space.rank(), "s must not exceed the rank");
    let mut out = Tensor::zero(space);
    for mask in 0u64..(1u64 << s) {
        let v: Vec<T> = (0..space.rank())
            .map(|i| {
                if i < s && mask & (1 << i) != 0 {
                    T::one()
                } else {
                    T::zero()
                }
            })
            .collect();
        let negate = (s as u32 + mask.count_ones()) % 2 == 1;
        out.accumulate(tensor_power(space, &v), negate);
    }
    out
}

fn letter_multiplicities(letters: &[u32]) -> BTreeMap<u32, usize> {
    let mut mult = BTreeMap::new();
    for &letter in letters {
        *mult.entry(letter).or_insert(0) += 1;
    }
    mult
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::next_permutation;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;

    type Zn = Tensor<BigInt>;

    fn space(m: usize, n: usize) -> TensorSpace {
        TensorSpace::new(m, n).unwrap()
    }

    fn word(letters: &[u32]) -> Word {
        Word::new(letters.to_vec())
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent oracle: symmetrize by enumerating all n! position
    /// permutations and tallying the permuted words.
    fn symmetrize_brute(sp: TensorSpace, w: &Word) -> Zn {
        let n = sp.degree();
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut all = vec![sigma.clone()];
        let mut work: Vec<u32> = (0..n as u32).collect();
        while next_permutation(&mut work) {
            all.push(work.iter().map(|&x| x as usize).collect());
        }
        assert_eq!(all.len(), (1..=n).product::<usize>());
        let mut out = Zn::zero(sp);
        for perm in &all {
            sigma.copy_from_slice(perm);
            out = &out + &Zn::monomial(sp, w.permuted(&sigma), int(1)).unwrap();
        }
        out
    }

    #[test]
    fn space_rejects_degenerate_input() {
        assert_eq!(TensorSpace::new(2, 0).unwrap_err(), TensorError::ZeroDegree);
        assert_eq!(TensorSpace::new(0, 2).unwrap_err(), TensorError::ZeroRank);
        assert!(matches!(
            TensorSpace::new(1000, 20).unwrap_err(),
            TensorError::TooLarge { .. }
        ));
    }

    #[test]
    fn word_index_round_trip() {
        let sp = space(3, 4);
        for (idx, w) in sp.words().enumerate() {
            assert_eq!(sp.word_index(&w), idx);
            assert_eq!(sp.word_at(idx), w);
        }
        // lexicographic order agrees with the index order
        let words: Vec<Word> = sp.words().collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn from_terms_validates_words() {
        let sp = space(2, 2);
        assert_eq!(
            Zn::from_terms(sp, [(word(&[1, 2, 1]), int(1))]).unwrap_err(),
            TensorError::WrongWordLength { got: 3, degree: 2 }
        );
        assert_eq!(
            Zn::from_terms(sp, [(word(&[1, 3]), int(1))]).unwrap_err(),
            TensorError::LetterOutOfRange { letter: 3, rank: 2 }
        );
        // merging drops zero sums
        let t = Zn::from_terms(sp, [(word(&[1, 2]), int(2)), (word(&[1, 2]), int(-2))]).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn symmetrize_distinct_letters() {
        let sp = space(2, 2);
        let t = symmetrize_word::<BigInt>(sp, &word(&[1, 2]));
        assert_eq!(t.coeff(&word(&[1, 2])), int(1));
        assert_eq!(t.coeff(&word(&[2, 1])), int(1));
        assert_eq!(t.num_terms(), 2);
    }

    #[test]
    fn symmetrize_repeated_letters() {
        let sp = space(1, 2);
        let t = symmetrize_word::<BigInt>(sp, &word(&[1, 1]));
        assert_eq!(t.coeff(&word(&[1, 1])), int(2));
        assert_eq!(t.num_terms(), 1);
    }

    #[test]
    fn symmetrize_matches_brute_force() {
        // includes the (1,1,2) case: 2*(112 + 121 + 211)
        let sp = space(2, 3);
        let t = symmetrize_word::<BigInt>(sp, &word(&[1, 1, 2]));
        assert_eq!(t, symmetrize_brute(sp, &word(&[1, 1, 2])));
        assert_eq!(t.coeff(&word(&[1, 2, 1])), int(2));
        assert_eq!(t.num_terms(), 3);

        for letters in [vec![1, 2, 3], vec![1, 1, 1], vec![3, 1, 2]] {
            let sp = space(3, 3);
            let w = word(&letters);
            assert_eq!(symmetrize_word::<BigInt>(sp, &w), symmetrize_brute(sp, &w));
        }
    }

    #[test]
    fn modified_symmetrization_basics() {
        let sp = space(2, 2);
        let c = Composition::new(vec![1, 1]).unwrap();
        let t = modified_symmetrization::<BigInt>(sp, &[1, 2], &c);
        assert_eq!(t, symmetrize_word::<BigInt>(sp, &word(&[1, 2])));

        // (X_1^{(n)})* is the bare n-th power
        for n in 1..=5 {
            let sp = space(1, n);
            let c = Composition::new(vec![n]).unwrap();
            let t = modified_symmetrization::<BigInt>(sp, &[1], &c);
            assert_eq!(t.coeff(&Word::new(vec![1; n])), int(1));
            assert_eq!(t.num_terms(), 1);
        }
    }

    #[test]
    fn modified_symmetrization_multinomial_support() {
        let sp = space(2, 4);
        let c = Composition::new(vec![2, 2]).unwrap();
        let t = modified_symmetrization::<BigInt>(sp, &[1, 2], &c);
        // brute-force the multiset permutations of (1,1,2,2)
        let expected: Vec<Vec<u32>> = multiset_permutations(&[1, 1, 2, 2]).collect();
        assert_eq!(expected.len(), 6);
        assert_eq!(t.num_terms(), 6);
        for letters in expected {
            assert_eq!(t.coeff(&Word::new(letters)), int(1));
        }
    }

    #[test]
    fn modified_symmetrization_divides_factorials_when_indices_collide() {
        // (X_1^{(1)} X_1^{(2)})* = (1/1!2!) (X_1 X_1 X_1)* = 3 X_1^3
        let sp = space(1, 3);
        let c = Composition::new(vec![1, 2]).unwrap();
        let t = modified_symmetrization::<BigInt>(sp, &[1, 1], &c);
        assert_eq!(t.coeff(&word(&[1, 1, 1])), int(3));
        assert_eq!(t.num_terms(), 1);

        // against the divide-by-factorials definition on a mixed case
        let sp = space(2, 4);
        let c = Composition::new(vec![1, 2, 1]).unwrap();
        let direct = modified_symmetrization::<BigInt>(sp, &[1, 2, 1], &c);
        let sym = symmetrize_word::<BigInt>(sp, &word(&[1, 2, 2, 1]));
        // every coefficient of sym divides by 1!2!1! = 2 exactly
        let halved = Zn::from_terms(
            sp,
            sym.terms().map(|(w, c)| {
                let (q, r) = c.div_rem(&int(2));
                assert!(r.is_zero());
                (w.clone(), q)
            }),
        )
        .unwrap();
        assert_eq!(direct, halved);
    }

    #[test]
    fn tensor_power_expansions() {
        let sp = space(2, 2);
        let t = tensor_power(sp, &[int(1), int(1)]);
        assert_eq!(t.num_terms(), 4);
        for w in sp.words() {
            assert_eq!(t.coeff(&w), int(1));
        }

        let sp3 = space(2, 3);
        let t = tensor_power(sp3, &[int(2), int(0)]);
        assert_eq!(t.coeff(&word(&[1, 1, 1])), int(8));
        assert_eq!(t.num_terms(), 1);

        // unit vector gives the single constant word
        let sp5 = space(3, 5);
        let t = tensor_power(sp5, &[int(0), int(1), int(0)]);
        assert_eq!(t.coeff(&Word::new(vec![2; 5])), int(1));
        assert_eq!(t.num_terms(), 1);

        // zero vector gives the zero tensor
        assert!(tensor_power(sp, &[int(0), int(0)]).is_zero());
    }

    #[test]
    fn tensor_power_scales_homogeneously() {
        let sp = space(2, 3);
        let base = tensor_power(sp, &[int(2), int(-1)]);
        let scaled = tensor_power(sp, &[int(6), int(-3)]);
        assert_eq!(base.scaled(&int(27)), scaled);
    }

    #[test]
    fn subset_sum_edge_cases() {
        let sp = space(3, 2);
        assert!(subset_sum_tensor::<BigInt>(sp, &[]).is_zero());
        assert!(subset_sum_tensor::<BigInt>(sp, &[1, 2, 3]).is_zero());

        let sp13 = space(1, 3);
        let t = subset_sum_tensor::<BigInt>(sp13, &[1]);
        assert_eq!(t.coeff(&word(&[1, 1, 1])), int(1));
        assert_eq!(t.num_terms(), 1);
    }

    #[test]
    fn expansion_identity_small() {
        // (X_1 + ... + X_s)^n = sum over subsets J of X_J
        for s in 1..=4usize {
            for n in 1..=4usize {
                let sp = space(s, n);
                let ones: Vec<BigInt> = vec![int(1); s];
                let lhs = tensor_power(sp, &ones);
                let mut rhs = Zn::zero(sp);
                for mask in 0u32..(1 << s) {
                    let subset: Vec<u32> =
                        (0..s as u32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
                    rhs = &rhs + &subset_sum_tensor(sp, &subset);
                }
                assert_eq!(lhs, rhs, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn mobius_combination_matches_special_cases() {
        // s = n: the full symmetrization of (1,2,...,n)
        for n in 2..=4usize {
            let sp = space(n, n);
            let w = Word::new((1..=n as u32).collect());
            assert_eq!(mobius_combination::<BigInt>(sp, n), symmetrize_word(sp, &w));
        }
        // s > n: the zero tensor
        let sp = space(3, 2);
        assert!(mobius_combination::<BigInt>(sp, 3).is_zero());
    }

    #[test]
    fn mobius_combination_n4_worked_examples() {
        // s = 2, n = 4: (X1+X2)^4 - X1^4 - X2^4, with commutative image 4/6/4
        let sp = space(2, 4);
        let t = mobius_combination::<BigInt>(sp, 2);
        let pow = |v: &[i64]| tensor_power(sp, &v.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let direct = &(&pow(&[1, 1]) - &pow(&[1, 0])) - &pow(&[0, 1]);
        assert_eq!(t, direct);

        let image = t.commutative_image();
        assert_eq!(image.len(), 3);
        assert_eq!(image[&word(&[1, 1, 1, 2])], int(4));
        assert_eq!(image[&word(&[1, 1, 2, 2])], int(6));
        assert_eq!(image[&word(&[1, 2, 2, 2])], int(4));

        // s = 3, n = 4: image 12/12/12
        let sp3 = space(3, 4);
        let t3 = mobius_combination::<BigInt>(sp3, 3);
        let image3 = t3.commutative_image();
        assert_eq!(image3.len(), 3);
        assert_eq!(image3[&word(&[1, 1, 2, 3])], int(12));
        assert_eq!(image3[&word(&[1, 2, 2, 3])], int(12));
        assert_eq!(image3[&word(&[1, 2, 3, 3])], int(12));
    }

    #[test]
    fn commutative_image_of_zero_is_empty() {
        let sp = space(2, 2);
        assert!(Zn::zero(sp).commutative_image().is_empty());
    }

    #[test]
    fn symmetrized_outputs_are_symmetric() {
        let sp = space(2, 4);
        assert!(symmetrize_word::<BigInt>(sp, &word(&[1, 1, 2, 2])).is_symmetric());
        assert!(mobius_combination::<BigInt>(sp, 2).is_symmetric());
        assert!(tensor_power(sp, &[int(2), int(3)]).is_symmetric());
        let c = Composition::new(vec![3, 1]).unwrap();
        assert!(modified_symmetrization::<BigInt>(sp, &[1, 2], &c).is_symmetric());
        // a bare word is not
        let w = Zn::monomial(sp, word(&[1, 1, 1, 2]), int(1)).unwrap();
        assert!(!w.is_symmetric());
    }

    #[test]
    fn coords_round_trip() {
        let sp = space(2, 3);
        let t = mobius_combination::<BigInt>(sp, 2);
        let coords = t.to_coords();
        assert_eq!(coords.len(), 8);
        assert_eq!(Zn::from_coords(sp, &coords).unwrap(), t);
        assert_eq!(
            Zn::from_coords(sp, &coords[1..]).unwrap_err(),
            TensorError::WrongCoordinateLength { got: 7, dim: 8 }
        );
    }
}
