//! Exact values in `Q(i, √2, √3, √5, …)`.
//!
//! A [`Surd`] is a finite sum `Σ r_k · i^{e_k} · √q_k` with rational `r_k`,
//! `e_k ∈ {0, 1}` and square-free radicands `q_k ≥ 1`. Square roots of
//! distinct square-free integers are linearly independent over `Q(i)`, so
//! the representation is canonical and equality is structural.
//!
//! The integer backend is generic; the crate uses [`crate::ExactValue`]
//! (`Surd<BigInt>`) for all character arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Bound on the integer backend of [`Surd`].
pub trait SurdInt: Integer + Signed + Clone + FromPrimitive + ToPrimitive + fmt::Display {}

impl<T> SurdInt for T where T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + fmt::Display {}

/// Basis element `i^{e} √q`, ordered by radicand then by `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis {
    pub radicand: u128,
    pub i_power: u8,
}

impl Basis {
    const ONE: Basis = Basis { radicand: 1, i_power: 0 };
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd<T: SurdInt> {
    terms: BTreeMap<Basis, Ratio<T>>,
}

/// Splits `q` as `s² · f` with `f` square-free.
pub fn square_free_split(mut q: u128) -> (u128, u128) {
    assert!(q > 0, "radicand must be positive");
    let mut square = 1u128;
    let mut free = 1u128;
    let mut p = 2u128;
    while p * p <= q {
        let mut e = 0;
        while q.is_multiple_of(p) {
            q /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * q)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn from_u128<T: SurdInt>(v: u128) -> T {
    T::from_u128(v).expect("radicand factor fits the integer backend")
}

impl<T: SurdInt> Surd<T> {
    pub fn zero() -> Self {
        Surd { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_ratio(Ratio::one())
    }

    pub fn from_int(v: T) -> Self {
        Self::from_ratio(Ratio::from_integer(v))
    }

    pub fn from_ratio(r: Ratio<T>) -> Self {
        let mut s = Self::zero();
        s.add_term(Basis::ONE, r);
        s
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        let mut s = Self::zero();
        s.add_term(Basis { radicand: 1, i_power: 1 }, Ratio::one());
        s
    }

    /// `r · i^{e} · √q` for any `e` and any `q ≥ 0`, normalized.
    pub fn term(r: Ratio<T>, i_power: u32, q: u128) -> Self {
        if q == 0 || r.is_zero() {
            return Self::zero();
        }
        let (square, free) = square_free_split(q);
        let mut coeff = r * Ratio::from_integer(from_u128::<T>(square));
        let e = i_power % 4;
        if e >= 2 {
            coeff = -coeff;
        }
        let mut s = Self::zero();
        s.add_term(Basis { radicand: free, i_power: (e % 2) as u8 }, coeff);
        s
    }

    /// `√q` for a signed integer `q`; negative radicands give `i√|q|`.
    pub fn sqrt_int(q: i128) -> Self {
        Self::term(Ratio::one(), if q < 0 { 1 } else { 0 }, q.unsigned_abs())
    }

    fn add_term(&mut self, b: Basis, r: Ratio<T>) {
        if r.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(Ratio::zero);
        *entry = entry.clone() + r;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Ratio<T>)> {
        self.terms.iter()
    }

    /// The rational value, if the value lies in `Q`.
    pub fn as_rational(&self) -> Option<Ratio<T>> {
        match self.terms.len() {
            0 => Some(Ratio::zero()),
            1 => self.terms.get(&Basis::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// The integer value, if the value lies in `Z`.
    pub fn as_integer(&self) -> Option<T> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn is_real(&self) -> bool {
        self.terms.keys().all(|b| b.i_power == 0)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Surd {
            terms: self
                .terms
                .iter()
                .map(|(b, r)| (*b, if b.i_power == 1 { -r.clone() } else { r.clone() }))
                .collect(),
        }
    }

    /// `|x|²` for values in the crate's range; always a nonnegative element.
    pub fn norm_sqr(&self) -> Self {
        self.clone() * self.conj()
    }

    pub fn scale(&self, r: &Ratio<T>) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Surd { terms: self.terms.iter().map(|(b, c)| (*b, c.clone() * r.clone())).collect() }
    }

    pub fn scale_int(&self, v: T) -> Self {
        self.scale(&Ratio::from_integer(v))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Canonical text form: terms `r*i*sqrt(q)` joined by `" + "`, with the
    /// trivial factors omitted (`"0"`, `"2"`, `"-1*sqrt(3)"`, `"1/2*i*sqrt(3)"`).
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl<T: SurdInt> Default for Surd<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: SurdInt> From<i64> for Surd<T> {
    fn from(v: i64) -> Self {
        Self::from_int(T::from_i64(v).expect("integer fits the backend"))
    }
}

impl<T: SurdInt> fmt::Display for Surd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, r)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{r}")?;
            if b.i_power == 1 {
                f.write_str("*i")?;
            }
            if b.radicand > 1 {
                write!(f, "*sqrt({})", b.radicand)?;
            }
        }
        Ok(())
    }
}

impl<T: SurdInt> serde::Serialize for Surd<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<T: SurdInt> fmt::Debug for Surd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}

impl<T: SurdInt> Neg for Surd<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Surd { terms: self.terms.into_iter().map(|(b, r)| (b, -r)).collect() }
    }
}

impl<T: SurdInt> AddAssign<&Surd<T>> for Surd<T> {
    fn add_assign(&mut self, rhs: &Surd<T>) {
        for (b, r) in &rhs.terms {
            self.add_term(*b, r.clone());
        }
    }
}

impl<T: SurdInt> AddAssign for Surd<T> {
    fn add_assign(&mut self, rhs: Surd<T>) {
        *self += &rhs;
    }
}

impl<T: SurdInt> SubAssign<&Surd<T>> for Surd<T> {
    fn sub_assign(&mut self, rhs: &Surd<T>) {
        for (b, r) in &rhs.terms {
            self.add_term(*b, -r.clone());
        }
    }
}

impl<T: SurdInt> Add for Surd<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: SurdInt> Sub for Surd<T> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: SurdInt> Mul<&Surd<T>> for &Surd<T> {
    type Output = Surd<T>;
    fn mul(self, rhs: &Surd<T>) -> Surd<T> {
        let mut out = Surd::zero();
        for (ba, ra) in &self.terms {
            for (bb, rb) in &rhs.terms {
                let g = gcd_u128(ba.radicand, bb.radicand);
                let radicand = (ba.radicand / g)
                    .checked_mul(bb.radicand / g)
                    .expect("radicand overflow");
                let mut coeff = ra.clone() * rb.clone() * Ratio::from_integer(from_u128::<T>(g));
                let e = ba.i_power + bb.i_power;
                if e == 2 {
                    coeff = -coeff;
                }
                out.add_term(Basis { radicand, i_power: e % 2 }, coeff);
            }
        }
        out
    }
}

impl<T: SurdInt> Mul for Surd<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: SurdInt> MulAssign<&Surd<T>> for Surd<T> {
    fn mul_assign(&mut self, rhs: &Surd<T>) {
        *self = &*self * rhs;
    }
}

impl<T: SurdInt> std::iter::Sum for Surd<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Surd<BigInt>;

    #[test]
    fn normalization() {
        assert_eq!(square_free_split(12), (2, 3));
        assert_eq!(square_free_split(1), (1, 1));
        assert_eq!(S::sqrt_int(12), S::from(2) * S::sqrt_int(3));
        assert_eq!(S::sqrt_int(-1), S::i());
        assert_eq!(S::i() * S::i(), S::from(-1));
        assert_eq!(S::term(Ratio::one(), 3, 3).to_string(), "-1*i*sqrt(3)");
        assert_eq!(S::sqrt_int(4).as_integer(), Some(BigInt::from(2)));
    }

    #[test]
    fn arithmetic() {
        let a = S::sqrt_int(3);
        assert_eq!(&a * &a, S::from(3));
        let z = S::from(1) + S::sqrt_int(-3);
        assert_eq!(z.norm_sqr(), S::from(4));
        assert_eq!((z.clone() - z).to_string(), "0");
        assert_eq!(S::sqrt_int(6) * S::sqrt_int(10), S::from(2) * S::sqrt_int(15));
        let half = Ratio::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(S::term(half, 1, 3).to_string(), "1/2*i*sqrt(3)");
    }

    #[test]
    fn works_with_machine_integers() {
        let a: Surd<i64> = Surd::sqrt_int(2);
        assert_eq!(&a * &a, Surd::<i64>::from(2));
        assert!(Surd::<i128>::sqrt_int(-5).conj().terms().all(|(b, r)| b.i_power == 1 && *r < Ratio::zero()));
    }
}
