//! Integer partitions: generation, classification and the structural maps
//! used throughout the crate (conjugation, principal hooks, staircases,
//! the Glaisher bijection, dominance and centralizer orders).
//!
//! A [`Partition`] doubles as a cycle type, i.e. a conjugacy-class label of
//! `S_n`. Enumeration is always in reverse-lexicographic order, so
//! `(n)` comes first and `(1^n)` last.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u16>", into = "Vec<u16>")]
pub struct Partition {
    parts: Vec<u16>,
}

impl Partition {
    pub fn new(parts: Vec<u16>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u16>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u16>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n as u16] }
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n - j, 1^j)`.
    pub fn hook(n: usize, j: usize) -> Result<Self> {
        if n == 0 || j >= n {
            return Err(Error::OutOfRange(format!("hook ({n}-{j},1^{j})")));
        }
        let mut parts = vec![(n - j) as u16];
        parts.extend(std::iter::repeat_n(1, j));
        Ok(Partition { parts })
    }

    /// The rectangle `(k^k)`.
    pub fn square(k: usize) -> Self {
        Partition { parts: vec![k as u16; k] }
    }

    pub fn parts(&self) -> &[u16] {
        &self.parts
    }

    /// The number partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Length `l(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).map_or(0, |&p| p as usize)
    }

    pub fn is_odd_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `n - l(λ)` even.
    pub fn is_even_type(&self) -> bool {
        (self.n() - self.len()).is_multiple_of(2)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn classify(&self) -> PartitionClass {
        let is_distinct = self.is_distinct();
        PartitionClass {
            is_odd_parts: self.is_odd_parts(),
            is_distinct,
            parity_sign: is_distinct.then(|| {
                if self.is_even_type() {
                    ParitySign::Plus
                } else {
                    ParitySign::Minus
                }
            }),
        }
    }

    pub fn in_d_plus(&self) -> bool {
        self.is_distinct() && self.is_even_type()
    }

    pub fn in_d_minus(&self) -> bool {
        self.is_distinct() && !self.is_even_type()
    }

    /// Multiplicity of each part size, indexed by the part.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p as usize >= i).count() as u16)
            .collect();
        Partition { parts }
    }

    /// Size of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// Principal hook lengths `h_j = λ_j + λ'_j - 2j + 1`, `j = 1..d`.
    pub fn principal_hooks(&self) -> Partition {
        let conj = self.conjugate();
        let parts = (0..self.durfee())
            .map(|i| (self.part(i) + conj.part(i) - 2 * i - 1) as u16)
            .collect();
        Partition { parts }
    }

    /// All hook lengths of the Young diagram.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                hooks.push(row as usize - j + conj.part(j) - i - 1);
            }
        }
        hooks
    }

    /// Partial sums, the basis of dominance comparisons.
    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// Dominance comparison of `self` against `other`.
    pub fn dominance(&self, other: &Partition) -> Result<Dominance> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        let len = self.len().max(other.len());
        let (a, b) = (self.partial_sums(len), other.partial_sums(len));
        let le = a.iter().zip(&b).all(|(x, y)| x <= y);
        let ge = a.iter().zip(&b).all(|(x, y)| x >= y);
        Ok(match (le, ge) {
            (_, true) => Dominance::AboveOrEqual,
            (true, false) => Dominance::Below,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `z_α = ∏ i^{m_i} m_i!`; the class of type `α` in `S_n` has `n!/z_α` elements.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    /// Number of elements of cycle type `α` in `S_n`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_order()
    }

    /// Product of the parts.
    pub fn product(&self) -> BigUint {
        self.parts.iter().map(|&p| BigUint::from(p)).product()
    }

    /// Removes one part equal to `r`, if present.
    pub fn without_part(&self, r: u16) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == r)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Canonical comma-separated text form; the empty partition is `""`.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u16>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u16>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u16> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Reverse-lexicographic order: `(n)` is the smallest element, matching
/// enumeration order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorthand used heavily in tests: `part![3, 2, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p as u16),+]).expect("valid partition literal")
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParitySign {
    Plus,
    Minus,
}

/// Membership of a partition in O(n), D(n) and D±(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionClass {
    pub is_odd_parts: bool,
    pub is_distinct: bool,
    /// `Some(Plus)` for D⁺ (`n - l` even), `Some(Minus)` for D⁻; `None` if not distinct.
    pub parity_sign: Option<ParitySign>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Below,
    AboveOrEqual,
    Incomparable,
}

impl Dominance {
    pub fn is_comparable(self) -> bool {
        self != Dominance::Incomparable
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    Odd,
    Distinct,
    DistinctPlus,
    DistinctMinus,
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Filter::All,
            "odd" => Filter::Odd,
            "distinct" => Filter::Distinct,
            "distinct_plus" | "distinct-plus" => Filter::DistinctPlus,
            "distinct_minus" | "distinct-minus" => Filter::DistinctMinus,
            other => return Err(Error::OutOfRange(format!("unknown filter {other:?}"))),
        })
    }
}

/// Lazy reverse-lexicographic enumeration of the partitions of `n`
/// satisfying `filter`.
pub fn gen_partitions(n: usize, filter: Filter) -> Partitions {
    Partitions::new(n, filter)
}

pub fn all_partitions(n: usize) -> Vec<Partition> {
    gen_partitions(n, Filter::All).collect()
}

/// Iterator behind [`gen_partitions`].
#[derive(Debug, Clone)]
pub struct Partitions {
    n: usize,
    odd: bool,
    distinct: bool,
    parity: Option<ParitySign>,
    current: Option<Vec<u16>>,
    started: bool,
}

impl Partitions {
    fn new(n: usize, filter: Filter) -> Self {
        let (odd, distinct, parity) = match filter {
            Filter::All => (false, false, None),
            Filter::Odd => (true, false, None),
            Filter::Distinct => (false, true, None),
            Filter::DistinctPlus => (false, true, Some(ParitySign::Plus)),
            Filter::DistinctMinus => (false, true, Some(ParitySign::Minus)),
        };
        let mut it = Partitions { n, odd, distinct, parity, current: None, started: false };
        let mut first = Vec::new();
        if it.complete(&mut first, n, n) {
            it.current = Some(first);
        }
        it
    }

    fn allowed(&self, q: usize) -> bool {
        q >= 1 && (!self.odd || q % 2 == 1)
    }

    /// Whether `rest` can be written with allowed parts of size at most `max`.
    fn feasible(&self, rest: usize, max: usize) -> bool {
        if rest == 0 {
            return true;
        }
        if self.distinct {
            rest <= max * (max + 1) / 2
        } else {
            max >= 1
        }
    }

    /// Appends the lexicographically largest completion of `rest` using
    /// parts at most `max`.
    fn complete(&self, parts: &mut Vec<u16>, mut rest: usize, mut max: usize) -> bool {
        while rest > 0 {
            let mut q = max.min(rest);
            while q > 0 && !(self.allowed(q) && self.feasible(rest - q, self.next_max(q))) {
                q -= 1;
            }
            if q == 0 {
                return false;
            }
            parts.push(q as u16);
            rest -= q;
            max = self.next_max(q);
        }
        true
    }

    fn next_max(&self, q: usize) -> usize {
        if self.distinct {
            q - 1
        } else {
            q
        }
    }

    fn advance(&self, mut parts: Vec<u16>) -> Option<Vec<u16>> {
        let mut rest = 0usize;
        while let Some(p) = parts.pop() {
            rest += p as usize;
            let bound = parts.last().map_or(self.n, |&b| self.next_max(b as usize));
            let mut q = (p as usize - 1).min(bound).min(rest);
            while q > 0 {
                if self.allowed(q) && self.feasible(rest - q, self.next_max(q)) {
                    parts.push(q as u16);
                    let ok = self.complete(&mut parts, rest - q, self.next_max(q));
                    debug_assert!(ok);
                    return Some(parts);
                }
                q -= 1;
            }
        }
        None
    }

    fn accepts(&self, parts: &[u16]) -> bool {
        match self.parity {
            None => true,
            Some(sign) => {
                let even = (self.n - parts.len()).is_multiple_of(2);
                even == (sign == ParitySign::Plus)
            }
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if self.started {
                let cur = self.current.take()?;
                self.current = self.advance(cur);
            }
            self.started = true;
            let cur = self.current.as_ref()?;
            if self.accepts(cur) {
                return Some(Partition { parts: cur.clone() });
            }
        }
    }
}

/// `p(n)` via Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut table: Vec<num_bigint::BigInt> = Vec::with_capacity(n + 1);
    table.push(1.into());
    for i in 1..=n {
        let mut sum = num_bigint::BigInt::from(0);
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += &table[i - g1] * sign;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                sum += &table[i - g2] * sign;
            }
        }
        table.push(sum);
    }
    table[n].to_biguint().expect("partition numbers are positive")
}

/// `ρ_k = (k, k-1, …, 1)`.
pub fn staircase(k: usize) -> Partition {
    Partition { parts: (1..=k as u16).rev().collect() }
}

/// `τ_k = (2k-1, 2k-3, …, 3, 1)`, a partition of `k²`.
pub fn spin_staircase(k: usize) -> Partition {
    Partition { parts: (1..=k as u16).rev().map(|i| 2 * i - 1).collect() }
}

/// Glaisher's map O(n) → D(n): an odd part `o` with multiplicity
/// `m = Σ 2^{e_i}` becomes the parts `o·2^{e_i}`.
pub fn glaisher(alpha: &Partition) -> Result<Partition> {
    if !alpha.is_odd_parts() {
        return Err(Error::NotInSet { partition: alpha.to_string(), set: "O(n)" });
    }
    let mut parts = Vec::new();
    for (o, &m) in alpha.multiplicities().iter().enumerate() {
        let mut bit = 0;
        while (m >> bit) > 0 {
            if (m >> bit) & 1 == 1 {
                parts.push((o << bit) as u16);
            }
            bit += 1;
        }
    }
    Ok(Partition::from_unsorted(parts))
}

/// Inverse of [`glaisher`]: each part `o·2^e` (with `o` odd) becomes `2^e` copies of `o`.
pub fn glaisher_inverse(lambda: &Partition) -> Result<Partition> {
    if !lambda.is_distinct() {
        return Err(Error::NotInSet { partition: lambda.to_string(), set: "D(n)" });
    }
    let mut parts = Vec::new();
    for &p in lambda.parts() {
        let e = p.trailing_zeros();
        let odd = p >> e;
        parts.extend(std::iter::repeat_n(odd, 1 << e));
    }
    Ok(Partition::from_unsorted(parts))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}
