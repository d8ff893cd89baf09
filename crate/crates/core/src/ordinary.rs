//! Ordinary irreducible characters `[λ]` of `S_n`.
//!
//! Values come from the Murnaghan–Nakayama rule: the largest remaining part
//! `r` of the cycle type is stripped, and `[λ](α) = Σ (-1)^{ht} [λ∖ξ](α∖r)`
//! over the rim hooks `ξ` of size `r`. Rim hooks are handled on beta-sets
//! (first-column hook lengths), where removing an `r`-hook is sliding a bead
//! down by `r` onto a free position.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{CharLabel, CharacterTable, ClassFunction, GroupContext};
use crate::partitions::{factorial, gen_partitions, Filter, Partition};
use crate::scans::dk_coefficients;
use crate::{Engine, ExactValue, Sign};

pub type CharValue = BigInt;

/// Beta-set of `λ` with `len` beads: `β_i = λ_i + len - 1 - i`.
pub(crate) fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + len - 1 - i).collect()
}

pub(crate) fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b + i + 1 - len) as u16)
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// All ways to remove a rim hook of size `r` from `λ`, with the resulting
/// partition and the sign `(-1)^{height}`.
pub fn rim_hook_removals(lambda: &Partition, r: usize) -> Vec<(Partition, i32)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        out.push((from_beta_set(moved), if height % 2 == 0 { 1 } else { -1 }));
    }
    out
}

impl Engine {
    /// `[λ](α)` by memoized Murnaghan–Nakayama.
    pub fn mn_value(&self, lambda: &Partition, alpha: &Partition) -> Result<CharValue> {
        check_sizes(lambda, alpha)?;
        Ok(self.mn(lambda, alpha, true))
    }

    /// As [`mn_value`](Self::mn_value), but the top-level entry is not
    /// memoized. Scans over all `λ` for a fixed `α` never revisit it.
    pub fn mn_value_transient(&self, lambda: &Partition, alpha: &Partition) -> Result<CharValue> {
        check_sizes(lambda, alpha)?;
        Ok(self.mn(lambda, alpha, false))
    }

    fn mn(&self, lambda: &Partition, alpha: &Partition, store: bool) -> CharValue {
        if alpha.is_empty() {
            return BigInt::one();
        }
        if lambda.len() == 1 {
            return BigInt::one();
        }
        if let Some(v) = self.mn_store().get(lambda, alpha) {
            return v;
        }
        let r = alpha.part(0);
        let rest = Partition::from_sorted_unchecked(alpha.parts()[1..].to_vec());
        let mut acc = BigInt::zero();
        for (mu, sign) in rim_hook_removals(lambda, r) {
            let v = self.mn(&mu, &rest, true);
            if sign > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        if store {
            self.mn_store().insert(lambda.clone(), alpha.clone(), acc.clone());
        }
        acc
    }
}

impl Engine {
    /// `[λ]` restricted or inflated to any context, read off the cycle type of each class.
    pub fn ordinary_character(&self, lambda: &Partition, ctx: &GroupContext) -> Result<ClassFunction> {
        ClassFunction::try_from_fn(ctx, |c| Ok(ExactValue::from_int(self.mn_value(lambda, &c.cycle_type)?)))
    }

    pub(crate) fn ordinary_rows(&self, ctx: &GroupContext) -> Result<Vec<(CharLabel, ClassFunction)>> {
        gen_partitions(ctx.n(), Filter::All)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|l| Ok((CharLabel::Ordinary(l.clone()), self.ordinary_character(&l, ctx)?)))
            .collect()
    }

    /// Character table of `S_n`.
    pub fn sn_table(&self, n: usize) -> Result<CharacterTable> {
        let ctx = Arc::new(GroupContext::symmetric(n));
        let rows = self.ordinary_rows(&ctx)?;
        Ok(CharacterTable::new(ctx, rows))
    }
}

fn check_sizes(lambda: &Partition, alpha: &Partition) -> Result<()> {
    if lambda.n() != alpha.n() {
        return Err(Error::SizeMismatch { left: lambda.n(), right: alpha.n() });
    }
    Ok(())
}

/// Degree of `[λ]` by the hook length formula.
pub fn char_degree(lambda: &Partition) -> BigUint {
    let hooks: BigUint = lambda.hook_lengths().into_iter().map(BigUint::from).product();
    factorial(lambda.n()) / hooks
}

/// Value of `χ_hook = Σ_j [n-j, 1^j]` at cycle type `α`:
/// `2^{l(α)-1}` on odd-part classes, zero elsewhere.
pub fn hook_sum_value(alpha: &Partition) -> CharValue {
    if alpha.is_empty() || !alpha.is_odd_parts() {
        return BigInt::zero();
    }
    BigInt::one() << (alpha.len() - 1)
}

/// Closed-form value of the basic spin character `⟨n⟩` (or `⟨n⟩_±` for even `n`)
/// on elements projecting to cycle type `α`; the designated class `C_α^+`
/// is used for the split class `(n)`.
pub fn basic_spin_value(n: usize, alpha: &Partition, choice: Sign) -> Result<ExactValue> {
    if alpha.n() != n {
        return Err(Error::SizeMismatch { left: n, right: alpha.n() });
    }
    if n == 0 {
        return Err(Error::OutOfRange("basic spin character needs n >= 1".into()));
    }
    let l = alpha.len();
    if alpha.is_odd_parts() {
        let e = if n % 2 == 1 { (l - 1) / 2 } else { (l - 2) / 2 };
        return Ok(ExactValue::from_int(BigInt::one() << e));
    }
    if n.is_multiple_of(2) && alpha.len() == 1 {
        let k = n / 2;
        let v = ExactValue::term(Ratio::from_integer(BigInt::from(choice.sign())), k as u32, k as u128);
        return Ok(v);
    }
    Ok(ExactValue::zero())
}

/// `[n-j, j](ρ_k) = d_k(j) - d_k(j-1)`, where `d_k(m)` counts strict
/// partitions of `m` with largest part at most `k`.
pub fn two_part_value(k: usize, j: usize) -> Result<CharValue> {
    let n = k * (k + 1) / 2;
    if j > n / 2 {
        return Err(Error::OutOfRange(format!("j = {j} exceeds n/2 = {}", n / 2)));
    }
    let d = dk_coefficients(k);
    let prev = if j == 0 { BigUint::zero() } else { d[j - 1].clone() };
    Ok(BigInt::from(d[j].clone()) - BigInt::from(prev))
}
