//! Lie rings presented by structure constants on additive generators, and the
//! n-Engel condition tests on them.
//!
//! A ring is given by generator orders (0 meaning infinite additive order)
//! and the brackets [x_i, x_j] for i < j; the bilinear extension and the
//! axioms are derived and checked from that table. The Engel tests come in
//! three strengths: the symmetrization-sum family over weakly increasing
//! multi-indices, its sign-augmented superset, and plain exhaustion over all
//! ring elements (the ground-truth oracle, finite rings only).

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

use crate::combinatorics::{compositions, weak_multi_indices, Composition};
use crate::scalar::{binomial, Scalar};
use crate::tensor::{modified_symmetrization, Tensor, TensorSpace};

/// Which axiom failed, on which generators (1-based labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// d_i · [x_i, x_j] does not vanish modulo the orders.
    OrderCompatibility { i: usize, j: usize },
    /// [x_i, x_i] != 0.
    Alternating { i: usize },
    /// [x_i, x_j] + [x_j, x_i] != 0.
    Anticommutativity { i: usize, j: usize },
    /// Jacobi fails on (x_i, x_j, x_k).
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::OrderCompatibility { i, j } => {
                write!(f, "order incompatibility on bracket ({i},{j})")
            }
            AxiomViolation::Alternating { i } => write!(f, "[x{i}, x{i}] is nonzero"),
            AxiomViolation::Anticommutativity { i, j } => {
                write!(f, "anticommutativity fails on ({i},{j})")
            }
            AxiomViolation::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails on ({i},{j},{k})")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("ring axiom violated: {0}")]
    Axiom(AxiomViolation),
    #[error("ring file: {0}")]
    Parse(String),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("orders list has length {got}, expected rank {rank}")]
    OrdersLength { got: usize, rank: usize },
    #[error("order of generator {index} is negative")]
    NegativeOrder { index: usize },
    #[error("bracket ({i},{j}): indices must satisfy 1 <= i < j <= rank")]
    BadBracketPair { i: usize, j: usize },
    #[error("bracket ({i},{j}) given more than once")]
    DuplicateBracket { i: usize, j: usize },
    #[error("bracket ({i},{j}) value has length {got}, expected rank {rank}")]
    BracketLength {
        i: usize,
        j: usize,
        got: usize,
        rank: usize,
    },
    #[error("ring has a generator of infinite order; brute force needs a finite ring")]
    InfiniteRing,
    #[error("ring has {size} elements, above the brute-force cap {cap}")]
    BruteForceTooLarge { size: String, cap: u64 },
}

/// Element of a ring: a coefficient vector reduced modulo the orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement<T: Scalar>(Vec<T>);

impl<T: Scalar> RingElement<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(T::is_zero)
    }
}

impl<T: Scalar> fmt::Display for RingElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Witness of a failed symmetrization-family condition: the lexicographically
/// first (s, multi-index, generator) whose condition sum is nonzero. `signs`
/// is empty for the unsigned family; for the signed family it carries one
/// sign per multi-index position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngelWitness {
    pub s: usize,
    pub indices: Vec<u32>,
    pub signs: Vec<i8>,
    /// 1-based label of the generator substituted for y.
    pub generator: usize,
}

impl fmt::Display for EngelWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} j=(", self.s)?;
        for (r, idx) in self.indices.iter().enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            if let Some(&sign) = self.signs.get(r) {
                write!(f, "{}", if sign < 0 { "-" } else { "+" })?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, ") y=x{}", self.generator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngelVerdict {
    Holds,
    Fails(EngelWitness),
}

impl EngelVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, EngelVerdict::Holds)
    }

    pub fn witness(&self) -> Option<&EngelWitness> {
        match self {
            EngelVerdict::Holds => None,
            EngelVerdict::Fails(w) => Some(w),
        }
    }
}

/// Outcome of the exhaustive test: either every (x, generator) pair vanishes,
/// or the first counterexample in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteVerdict<T: Scalar> {
    Holds,
    Fails {
        x: RingElement<T>,
        /// 1-based label of the generator substituted for y.
        generator: usize,
    },
}

impl<T: Scalar> BruteVerdict<T> {
    pub fn holds(&self) -> bool {
        matches!(self, BruteVerdict::Holds)
    }
}

pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 1_000_000;

/// Lie ring on additive generators x_1,...,x_m with per-generator orders and
/// a structure-constant table for i < j. Immutable once constructed; the
/// constructor validates the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRing<T: Scalar> {
    rank: usize,
    orders: Vec<T>,
    /// [x_i, x_j] for 0-based i < j, at pair_index(i, j); vectors of length rank.
    brackets: Vec<Vec<T>>,
}

impl<T: Scalar> LieRing<T> {
    /// Builds and validates a ring. `orders` fixes the rank; bracket pairs
    /// use 1-based generator labels with i < j, and omitted pairs are zero.
    pub fn new(
        orders: Vec<T>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<T>)>,
    ) -> Result<Self, LieError> {
        let rank = orders.len();
        if rank == 0 {
            return Err(LieError::ZeroRank);
        }
        for (pos, d) in orders.iter().enumerate() {
            if d.is_negative() {
                return Err(LieError::NegativeOrder { index: pos + 1 });
            }
        }
        let mut table = vec![vec![T::zero(); rank]; rank * (rank - 1) / 2];
        let mut seen = BTreeSet::new();
        for ((i, j), value) in brackets {
            if i == 0 || j == 0 || i >= j || j > rank {
                return Err(LieError::BadBracketPair { i, j });
            }
            if !seen.insert((i, j)) {
                return Err(LieError::DuplicateBracket { i, j });
            }
            if value.len() != rank {
                return Err(LieError::BracketLength {
                    i,
                    j,
                    got: value.len(),
                    rank,
                });
            }
            table[pair_index(i - 1, j - 1, rank)] = value;
        }
        let mut ring = LieRing {
            rank,
            orders,
            brackets: table,
        };
        for entry in &mut ring.brackets {
            let reduced = reduce_vec(std::mem::take(entry), &ring.orders);
            *entry = reduced;
        }
        ring.validate().map_err(LieError::Axiom)?;
        Ok(ring)
    }

    /// Loads a ring from its JSON description:
    /// `{"rank": m, "orders": [...], "brackets": [{"i":..,"j":..,"value":[...]},..]}`.
    /// Unknown keys and duplicate (i, j) pairs are rejected.
    pub fn from_json_str(text: &str) -> Result<Self, LieError> {
        let doc: RingDoc = serde_json::from_str(text).map_err(|e| LieError::Parse(e.to_string()))?;
        if doc.rank == 0 {
            return Err(LieError::ZeroRank);
        }
        if doc.orders.len() != doc.rank {
            return Err(LieError::OrdersLength {
                got: doc.orders.len(),
                rank: doc.rank,
            });
        }
        let orders: Vec<T> = doc
            .orders
            .iter()
            .map(|&d| T::from_i64(d).expect("order fits in scalar"))
            .collect();
        let brackets = doc.brackets.into_iter().map(|b| {
            (
                (b.i, b.j),
                b.value
                    .iter()
                    .map(|&c| T::from_i64(c).expect("coefficient fits in scalar"))
                    .collect(),
            )
        });
        Self::new(orders, brackets)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn orders(&self) -> &[T] {
        &self.orders
    }

    /// True when every generator has finite additive order.
    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|d| !d.is_zero())
    }

    /// Number of elements of a finite ring.
    pub fn cardinality(&self) -> Option<T> {
        if !self.is_finite() {
            return None;
        }
        Some(
            self.orders
                .iter()
                .fold(T::one(), |acc, d| acc * d.clone()),
        )
    }

    /// Re-checks order compatibility, the alternating law, anticommutativity
    /// and the Jacobi identity on all generator pairs and triples; reports
    /// the first violation in that order.
    pub fn validate(&self) -> Result<(), AxiomViolation> {
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let table = &self.brackets[pair_index(i, j, self.rank)];
                for d in [&self.orders[i], &self.orders[j]] {
                    if d.is_zero() {
                        continue;
                    }
                    let scaled: Vec<T> = table.iter().map(|c| c.clone() * d.clone()).collect();
                    if !reduce_vec(scaled, &self.orders).iter().all(T::is_zero) {
                        return Err(AxiomViolation::OrderCompatibility { i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        for i in 1..=self.rank {
            let g = self.generator(i);
            if !self.bracket(&g, &g).is_zero() {
                return Err(AxiomViolation::Alternating { i });
            }
        }
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                let (gi, gj) = (self.generator(i), self.generator(j));
                let sum = self.add(&self.bracket(&gi, &gj), &self.bracket(&gj, &gi));
                if !sum.is_zero() {
                    return Err(AxiomViolation::Anticommutativity { i, j });
                }
            }
        }
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                for k in j + 1..=self.rank {
                    let (gi, gj, gk) = (self.generator(i), self.generator(j), self.generator(k));
                    let mut acc = self.bracket(&gi, &self.bracket(&gj, &gk));
                    acc = self.add(&acc, &self.bracket(&gj, &self.bracket(&gk, &gi)));
                    acc = self.add(&acc, &self.bracket(&gk, &self.bracket(&gi, &gj)));
                    if !acc.is_zero() {
                        return Err(AxiomViolation::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Element with the given coefficients, reduced modulo the orders.
    pub fn element(&self, coeffs: Vec<T>) -> RingElement<T> {
        assert_eq!(coeffs.len(), self.rank, "coefficient vector length");
        RingElement(reduce_vec(coeffs, &self.orders))
    }

    pub fn zero_element(&self) -> RingElement<T> {
        RingElement(vec![T::zero(); self.rank])
    }

    /// Generator x_i by its 1-based label.
    pub fn generator(&self, label: usize) -> RingElement<T> {
        assert!(label >= 1 && label <= self.rank, "generator label");
        let mut coeffs = vec![T::zero(); self.rank];
        coeffs[label - 1] = T::one();
        RingElement(reduce_vec(coeffs, &self.orders))
    }

    pub fn add(&self, a: &RingElement<T>, b: &RingElement<T>) -> RingElement<T> {
        let coeffs = a
            .0
            .iter()
            .zip(&b.0)
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        RingElement(reduce_vec(coeffs, &self.orders))
    }

    pub fn neg(&self, a: &RingElement<T>) -> RingElement<T> {
        RingElement(reduce_vec(a.0.iter().map(|x| -x.clone()).collect(), &self.orders))
    }

    pub fn scale(&self, c: &T, a: &RingElement<T>) -> RingElement<T> {
        RingElement(reduce_vec(
            a.0.iter().map(|x| x.clone() * c.clone()).collect(),
            &self.orders,
        ))
    }

    /// Bilinear extension of the structure-constant table.
    pub fn bracket(&self, a: &RingElement<T>, b: &RingElement<T>) -> RingElement<T> {
        let mut out = vec![T::zero(); self.rank];
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let coef = a.0[i].clone() * b.0[j].clone() - a.0[j].clone() * b.0[i].clone();
                if coef.is_zero() {
                    continue;
                }
                let table = &self.brackets[pair_index(i, j, self.rank)];
                for (k, c) in table.iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + coef.clone() * c.clone();
                    }
                }
            }
        }
        RingElement(reduce_vec(out, &self.orders))
    }

    /// (ad x)^n applied to y via right-normed brackets [x ... x y].
    pub fn engel_bracket(
        &self,
        x: &RingElement<T>,
        n: usize,
        y: &RingElement<T>,
    ) -> RingElement<T> {
        assert!(n >= 1, "Engel exponent must be positive");
        let mut acc = y.clone();
        for _ in 0..n {
            if acc.is_zero() {
                break;
            }
            acc = self.bracket(x, &acc);
        }
        acc
    }

    /// [(x_{j_1}^{(k_1)} ... x_{j_s}^{(k_s)})* y]: each word of the modified
    /// symmetrization applied to y as a right-normed bracket chain, summed
    /// with the word coefficients.
    pub fn symmetrized_engel_term(
        &self,
        indices: &[u32],
        composition: &Composition,
        y: &RingElement<T>,
    ) -> RingElement<T> {
        let space = TensorSpace::new(self.rank, composition.total())
            .expect("rank^degree fits in usize");
        let t = modified_symmetrization::<T>(space, indices, composition);
        self.apply_tensor(&t, y)
    }

    fn apply_tensor(&self, t: &Tensor<T>, y: &RingElement<T>) -> RingElement<T> {
        let mut acc = self.zero_element();
        for (word, coeff) in t.terms() {
            let mut chained = y.clone();
            for &letter in word.letters().iter().rev() {
                if chained.is_zero() {
                    break;
                }
                chained = self.bracket_with_generator(letter as usize - 1, &chained);
            }
            if !chained.is_zero() {
                acc = self.add(&acc, &self.scale(coeff, &chained));
            }
        }
        acc
    }

    /// [x_i, b] for a 0-based generator position.
    fn bracket_with_generator(&self, i: usize, b: &RingElement<T>) -> RingElement<T> {
        let mut out = vec![T::zero(); self.rank];
        for j in 0..self.rank {
            if j == i || b.0[j].is_zero() {
                continue;
            }
            let (lo, hi, negate) = if i < j { (i, j, false) } else { (j, i, true) };
            let table = &self.brackets[pair_index(lo, hi, self.rank)];
            for (k, c) in table.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = b.0[j].clone() * c.clone();
                out[k] = if negate {
                    out[k].clone() - term
                } else {
                    out[k].clone() + term
                };
            }
        }
        RingElement(reduce_vec(out, &self.orders))
    }

    /// The symmetrization-family n-Engel test: for every 1 <= s <= n, every
    /// weakly increasing multi-index and every generator y, the sum over all
    /// compositions of n of the symmetrized terms must vanish. Returns the
    /// lexicographically first failing (s, multi-index, y).
    pub fn cg_engel_test(&self, n: usize) -> EngelVerdict {
        assert!(n >= 1, "Engel exponent must be positive");
        let space = TensorSpace::new(self.rank, n).expect("rank^n fits in usize");
        for s in 1..=n {
            for mi in weak_multi_indices(self.rank, s) {
                let mut sum = Tensor::zero(space);
                for c in compositions(n, s) {
                    sum = &sum + &modified_symmetrization(space, mi.indices(), &c);
                }
                for y in 1..=self.rank {
                    let val = self.apply_tensor(&sum, &self.generator(y));
                    if !val.is_zero() {
                        return EngelVerdict::Fails(EngelWitness {
                            s,
                            indices: mi.indices().to_vec(),
                            signs: Vec::new(),
                            generator: y,
                        });
                    }
                }
            }
        }
        EngelVerdict::Holds
    }

    /// The sign-augmented family: every condition of `cg_engel_test`, further
    /// multiplied by p_{j_1}^{k_1} ... p_{j_s}^{k_s} over all assignments of
    /// signs to the distinct indices. Equivalent to the unsigned family.
    pub fn cg_pm_engel_test(&self, n: usize) -> EngelVerdict {
        assert!(n >= 1, "Engel exponent must be positive");
        let space = TensorSpace::new(self.rank, n).expect("rank^n fits in usize");
        for s in 1..=n {
            for mi in weak_multi_indices(self.rank, s) {
                let mut distinct: Vec<u32> = mi.indices().to_vec();
                distinct.dedup();
                let comps = compositions(n, s);
                // exponent of each distinct index within each composition
                let exponents: Vec<Vec<usize>> = comps
                    .iter()
                    .map(|c| {
                        distinct
                            .iter()
                            .map(|&l| {
                                mi.indices()
                                    .iter()
                                    .zip(c.parts())
                                    .filter(|(&i, _)| i == l)
                                    .map(|(_, &k)| k)
                                    .sum()
                            })
                            .collect()
                    })
                    .collect();
                let tensors: Vec<Tensor<T>> = comps
                    .iter()
                    .map(|c| modified_symmetrization(space, mi.indices(), c))
                    .collect();
                for y in 1..=self.rank {
                    let gen_y = self.generator(y);
                    let terms: Vec<RingElement<T>> =
                        tensors.iter().map(|t| self.apply_tensor(t, &gen_y)).collect();
                    for mask in 0u32..(1 << distinct.len()) {
                        let mut acc = self.zero_element();
                        for (ci, term) in terms.iter().enumerate() {
                            let flipped: usize = (0..distinct.len())
                                .filter(|&d| mask & (1 << d) != 0)
                                .map(|d| exponents[ci][d])
                                .sum();
                            let signed = if flipped % 2 == 1 {
                                self.neg(term)
                            } else {
                                term.clone()
                            };
                            acc = self.add(&acc, &signed);
                        }
                        if !acc.is_zero() {
                            let signs = mi
                                .indices()
                                .iter()
                                .map(|&l| {
                                    let d = distinct.iter().position(|&x| x == l).unwrap();
                                    if mask & (1 << d) != 0 {
                                        -1
                                    } else {
                                        1
                                    }
                                })
                                .collect();
                            return EngelVerdict::Fails(EngelWitness {
                                s,
                                indices: mi.indices().to_vec(),
                                signs,
                                generator: y,
                            });
                        }
                    }
                }
            }
        }
        EngelVerdict::Holds
    }

    /// Ground-truth oracle: enumerates every element x of a finite ring and
    /// every generator y, and tests [x ... x y] = 0 directly.
    pub fn brute_force_engel_test(&self, n: usize, cap: u64) -> Result<BruteVerdict<T>, LieError> {
        assert!(n >= 1, "Engel exponent must be positive");
        let size = self.cardinality().ok_or(LieError::InfiniteRing)?;
        let cap_t = T::from_u64(cap).expect("cap fits in scalar");
        if size > cap_t {
            return Err(LieError::BruteForceTooLarge {
                size: size.to_string(),
                cap,
            });
        }
        let generators: Vec<RingElement<T>> =
            (1..=self.rank).map(|i| self.generator(i)).collect();
        let mut x = self.zero_element();
        loop {
            for (pos, gen_y) in generators.iter().enumerate() {
                if !self.engel_bracket(&x, n, gen_y).is_zero() {
                    return Ok(BruteVerdict::Fails {
                        x,
                        generator: pos + 1,
                    });
                }
            }
            // odometer over the coefficient ranges
            let mut i = self.rank;
            loop {
                if i == 0 {
                    return Ok(BruteVerdict::Holds);
                }
                i -= 1;
                x.0[i] = x.0[i].clone() + T::one();
                if x.0[i] < self.orders[i] {
                    break;
                }
                x.0[i] = T::zero();
            }
        }
    }

    /// The quotient modulo t: generator orders become t (infinite order) or
    /// gcd(d_i, t), with the bracket table reduced accordingly.
    pub fn quotient_mod(&self, t: &T) -> LieRing<T> {
        assert!(t > &T::zero(), "modulus must be positive");
        let orders: Vec<T> = self
            .orders
            .iter()
            .map(|d| if d.is_zero() { t.clone() } else { d.gcd(t) })
            .collect();
        let brackets = (0..self.rank).flat_map(|i| {
            (i + 1..self.rank).map(move |j| {
                (
                    (i + 1, j + 1),
                    self.brackets[pair_index(i, j, self.rank)].clone(),
                )
            })
        });
        LieRing::new(orders, brackets).expect("quotients preserve the axioms")
    }
}

fn pair_index(i: usize, j: usize, rank: usize) -> usize {
    debug_assert!(i < j && j < rank);
    i * rank - i * (i + 1) / 2 + (j - i - 1)
}

fn reduce_vec<T: Scalar>(coeffs: Vec<T>, orders: &[T]) -> Vec<T> {
    coeffs
        .into_iter()
        .zip(orders)
        .map(|(c, d)| if d.is_zero() { c } else { c.mod_floor(d) })
        .collect()
}

/// Number of conditions per generator y in the symmetrization family:
/// the sum of C(m+s-1, s) for s = 1..n, which telescopes to C(m+n, n) - 1.
pub fn condition_count<T: Scalar>(m: usize, n: usize) -> T {
    let mut total = T::zero();
    for s in 1..=n {
        total = total + binomial::<T>(m + s - 1, s);
    }
    debug_assert_eq!(
        total,
        binomial::<T>(m + n, n) - T::one(),
        "hockey-stick identity"
    );
    total
}

/// Nominal size of the sign-augmented family per y: sum of 2^s C(m+s-1, s).
pub fn cg_pm_condition_count<T: Scalar>(m: usize, n: usize) -> T {
    let mut total = T::zero();
    for s in 1..=n {
        let two_pow = T::from_usize(1 << s).expect("2^s fits in scalar");
        total = total + two_pow * binomial::<T>(m + s - 1, s);
    }
    total
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDoc {
    rank: usize,
    orders: Vec<i64>,
    brackets: Vec<BracketDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    i: usize,
    j: usize,
    value: Vec<i64>,
}
