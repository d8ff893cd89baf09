//! Spin characters `⟨λ⟩`, `⟨λ⟩_±` of the double cover `S̃_n`.
//!
//! On odd-part classes the value comes from the bar recursion. Write
//! `X^λ_α = 2^{⌈(l(λ)+l(α))/2⌉} ⟨λ⟩(σ_α)`. Stripping the largest part `r`
//! of `α` gives `X^λ_α = Σ c · (-1)^L · X^{λ∖b}_{α∖r}`, summed over the
//! `r`-bars `b` of `λ`:
//!
//! * a part `λ_i > r` with `λ_i - r ∉ λ` drops to `λ_i - r`: `c = 2`, and
//!   `L` is the number of parts strictly between `λ_i - r` and `λ_i`;
//! * a part equal to `r` is removed: `c = 2`, and `L` counts the parts below `r`;
//! * two parts `a > b` with `a + b = r` are removed: `c = 4`, and
//!   `L = b + #{parts strictly between b and a}`.
//!
//! For `λ ∈ D⁻(n)` the associates also differ on the two classes of type
//! `λ`, where `⟨λ⟩_±(C_λ^+) = ±i^{(n-m+1)/2} √(∏ ℓ_j / 2)`. Every spin
//! character vanishes on the remaining classes.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{CharLabel, CharacterTable, ClassFunction, ClassLabel, GroupContext, GroupKind};
use crate::ordinary::CharValue;
use crate::partitions::{factorial, gen_partitions, Filter, Partition};
use crate::{Engine, ExactValue, Sign};

/// A spin character of `S̃_n`: `⟨λ⟩` for `λ ∈ D⁺(n)`, `⟨λ⟩_±` for `λ ∈ D⁻(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinLabel {
    lambda: Partition,
    assoc: Option<Sign>,
}

impl SpinLabel {
    pub fn new(lambda: Partition, assoc: Option<Sign>) -> Result<Self> {
        if !lambda.is_distinct() {
            return Err(Error::NotInSet { partition: lambda.to_string(), set: "D(n)" });
        }
        if lambda.in_d_minus() != assoc.is_some() {
            return Err(Error::InvalidLabel(format!(
                "<{lambda}> is {}",
                if lambda.in_d_minus() { "one of an associate pair and needs a sign" } else { "self-associate" }
            )));
        }
        Ok(SpinLabel { lambda, assoc })
    }

    /// `⟨λ⟩` for `λ ∈ D⁺(n)`, `⟨λ⟩_+` for `λ ∈ D⁻(n)`.
    pub fn principal(lambda: Partition) -> Result<Self> {
        let assoc = lambda.in_d_minus().then_some(Sign::Plus);
        Self::new(lambda, assoc)
    }

    /// `⟨λ⟩` or `⟨λ⟩_choice`, ignoring the choice for self-associate `λ`.
    pub fn with_choice(lambda: Partition, choice: Sign) -> Result<Self> {
        let assoc = lambda.in_d_minus().then_some(choice);
        Self::new(lambda, assoc)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn assoc(&self) -> Option<Sign> {
        self.assoc
    }

    pub fn is_self_associate(&self) -> bool {
        self.assoc.is_none()
    }

    /// The associate `sgn · χ`: swaps `±`, fixes self-associate labels.
    pub fn associate(&self) -> SpinLabel {
        SpinLabel { lambda: self.lambda.clone(), assoc: self.assoc.map(Sign::flip) }
    }

    pub fn to_char_label(&self) -> CharLabel {
        CharLabel::Spin(self.lambda.clone(), self.assoc)
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_char_label().fmt(f)
    }
}

impl TryFrom<&CharLabel> for SpinLabel {
    type Error = Error;

    fn try_from(label: &CharLabel) -> Result<Self> {
        match label {
            CharLabel::Spin(l, s) => SpinLabel::new(l.clone(), *s),
            other => Err(Error::InvalidLabel(format!("{other} is not a spin label of S~n"))),
        }
    }
}

/// All spin labels of `S̃_n`, in enumeration order, `+` before `-`.
pub fn spin_labels(n: usize) -> Vec<SpinLabel> {
    let mut out = Vec::new();
    for lambda in gen_partitions(n, Filter::Distinct) {
        if lambda.in_d_minus() {
            out.push(SpinLabel { lambda: lambda.clone(), assoc: Some(Sign::Plus) });
            out.push(SpinLabel { lambda, assoc: Some(Sign::Minus) });
        } else {
            out.push(SpinLabel { lambda, assoc: None });
        }
    }
    out
}

/// `⌈(l(λ) + l(α)) / 2⌉`.
fn x_exponent(lambda_len: usize, alpha_len: usize) -> usize {
    (lambda_len + alpha_len).div_ceil(2)
}

/// The `r`-bars of strict `λ`, as (remaining partition, signed coefficient).
pub fn bar_removals(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let has = |x: usize| parts.contains(&x);
    let parity = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut out = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        if p > r && !has(p - r) {
            let between = parts.iter().filter(|&&x| x > p - r && x < p).count();
            let mut next: Vec<u16> = parts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x as u16).collect();
            next.push((p - r) as u16);
            out.push((Partition::from_unsorted(next), 2 * parity(between)));
        } else if p == r {
            let smaller = parts.iter().filter(|&&x| x < r).count();
            let next = parts.iter().filter(|&&x| x != r).map(|&x| x as u16).collect();
            out.push((Partition::from_sorted_unchecked(next), 2 * parity(smaller)));
        }
    }
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            if a + b == r {
                let between = parts.iter().filter(|&&x| x > b && x < a).count();
                let next = parts.iter().filter(|&&x| x != a && x != b).map(|&x| x as u16).collect();
                out.push((Partition::from_sorted_unchecked(next), 4 * parity(between + b)));
            }
        }
    }
    out
}

impl Engine {
    /// `⟨λ⟩(σ_α)` for `λ ∈ D(n)`, `α ∈ O(n)`, on the class `C_α^+`.
    /// Associates agree on these classes.
    pub fn morris_value(&self, lambda: &Partition, alpha: &Partition) -> Result<CharValue> {
        if lambda.n() != alpha.n() {
            return Err(Error::SizeMismatch { left: lambda.n(), right: alpha.n() });
        }
        if !lambda.is_distinct() {
            return Err(Error::NotInSet { partition: lambda.to_string(), set: "D(n)" });
        }
        if !alpha.is_odd_parts() {
            return Err(Error::NotInSet { partition: alpha.to_string(), set: "O(n)" });
        }
        Ok(self.morris(lambda, alpha))
    }

    fn morris(&self, lambda: &Partition, alpha: &Partition) -> CharValue {
        if alpha.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = self.morris_store().get(lambda, alpha) {
            return v;
        }
        let r = alpha.part(0);
        let rest = Partition::from_sorted_unchecked(alpha.parts()[1..].to_vec());
        let mut x = BigInt::zero();
        for (mu, coeff) in bar_removals(lambda, r) {
            let v = self.morris(&mu, &rest);
            if v.is_zero() {
                continue;
            }
            x += (v << x_exponent(mu.len(), rest.len())) * coeff;
        }
        let e = x_exponent(lambda.len(), alpha.len());
        let (value, rem) = x.div_rem(&(BigInt::one() << e));
        assert!(rem.is_zero(), "bar recursion left a remainder at ({lambda:?}, {alpha:?})");
        self.morris_store().insert(lambda.clone(), alpha.clone(), value.clone());
        value
    }

    /// Value of a spin character on a class of `S̃_n`.
    pub fn spin_value(&self, label: &SpinLabel, class: &ClassLabel) -> Result<ExactValue> {
        let alpha = &class.cycle_type;
        if alpha.n() != label.lambda.n() {
            return Err(Error::SizeMismatch { left: label.lambda.n(), right: alpha.n() });
        }
        let split = alpha.is_odd_parts() || alpha.in_d_minus();
        if split != class.central.is_some() || class.alt.is_some() {
            return Err(Error::DomainMismatch(format!("{class} is not a class of S~{}", alpha.n())));
        }
        let s = class.central_sign();
        if alpha.is_odd_parts() {
            return Ok(ExactValue::from_int(self.morris(&label.lambda, alpha) * s));
        }
        if let (true, Some(eps)) = (alpha == &label.lambda, label.assoc) {
            return Ok(diagonal_value(alpha).scale_int(BigInt::from(eps.sign() * s)));
        }
        Ok(ExactValue::zero())
    }

    /// A spin character as a class function on `S̃_n`.
    pub fn spin_character(&self, label: &SpinLabel, ctx: &GroupContext) -> Result<ClassFunction> {
        if ctx.kind() != GroupKind::TildeSn {
            return Err(Error::DomainMismatch(format!("spin characters live on S~n, not {}", ctx.kind())));
        }
        ClassFunction::try_from_fn(ctx, |c| self.spin_value(label, c))
    }

    /// `⟨λ⟩` for `λ ∈ D⁺(n)`, `⟨λ⟩_+ + ⟨λ⟩_-` for `λ ∈ D⁻(n)`.
    pub fn hat(&self, lambda: &Partition, ctx: &GroupContext) -> Result<ClassFunction> {
        let label = SpinLabel::principal(lambda.clone())?;
        let f = self.spin_character(&label, ctx)?;
        if label.is_self_associate() {
            return Ok(f);
        }
        Ok(f.sum(&self.spin_character(&label.associate(), ctx)?))
    }

    /// Character table of `S̃_n`: the ordinary characters, then the spin characters.
    pub fn tilde_sn_table(&self, n: usize) -> Result<CharacterTable> {
        let ctx = Arc::new(GroupContext::tilde_symmetric(n));
        let mut rows = self.ordinary_rows(&ctx)?;
        let spin: Vec<_> = spin_labels(n)
            .into_par_iter()
            .map(|l| Ok((l.to_char_label(), self.spin_character(&l, &ctx)?)))
            .collect::<Result<_>>()?;
        rows.extend(spin);
        Ok(CharacterTable::new(ctx, rows))
    }
}

/// `i^{(n-m+1)/2} √(∏ ℓ_j / 2)` for `λ ∈ D⁻(n)` with `m` parts.
pub fn diagonal_value(lambda: &Partition) -> ExactValue {
    let n = lambda.n();
    let m = lambda.len();
    let prod = lambda.product();
    let half: u128 = (prod / 2u32).try_into().expect("part product fits in u128");
    ExactValue::term(Ratio::one(), (n - m).div_ceil(2) as u32, half)
}

/// Degree of `⟨λ⟩`: `2^{⌊(n-l)/2⌋} · n!/∏ λ_i! · ∏_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`.
pub fn spin_degree(lambda: &Partition) -> BigUint {
    let n = lambda.n();
    let l = lambda.len();
    let parts = lambda.parts();
    let mut num = BigInt::from(factorial(n)) << ((n - l) / 2);
    let mut den = BigInt::one();
    for (i, &a) in parts.iter().enumerate() {
        den *= BigInt::from(factorial(a as usize));
        for &b in &parts[i + 1..] {
            num *= a - b;
            den *= a + b;
        }
    }
    let v = Ratio::new(num, den);
    assert!(v.is_integer(), "spin degree of {lambda:?} is not integral");
    v.to_integer().try_into().expect("degree is positive")
}
