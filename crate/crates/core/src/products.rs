//! Inner products, Kronecker coefficients and decompositions of products of
//! ordinary and spin characters.
//!
//! A product of two spin characters is non-faithful and is decomposed over
//! `S_n`; a product of an ordinary and a spin character is decomposed over
//! `S̃_n`. Either way the values on the designated classes `C^+` suffice.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternating::{CriticalPair, TildeAnSpinLabel};
use crate::error::{Error, Result};
use crate::group::{inner_product, CharLabel, CharacterTable, ClassFunction, ClassLabel, GroupContext, GroupKind};
use crate::partitions::{factorial, gen_partitions, Filter, Partition};
use crate::spin::SpinLabel;
use crate::{Engine, ExactValue, Sign};

/// Multiplicities of irreducibles in a character, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub context: GroupKind,
    pub n: usize,
    /// Nonzero multiplicities only.
    pub entries: Vec<DecompositionEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub label: CharLabel,
    #[serde(with = "crate::decimal")]
    pub multiplicity: BigUint,
}

impl Decomposition {
    pub fn multiplicity(&self, label: &CharLabel) -> BigUint {
        self.entries.iter().find(|e| &e.label == label).map_or_else(BigUint::zero, |e| e.multiplicity.clone())
    }

    pub fn contains(&self, label: &CharLabel) -> bool {
        self.entries.iter().any(|e| &e.label == label)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `multiplicity<TAB>label` lines.
    pub fn to_tsv(&self) -> String {
        self.entries.iter().map(|e| format!("{}\t{}\n", e.multiplicity, e.label)).collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                if e.multiplicity == BigUint::from(1u32) {
                    e.label.to_string()
                } else {
                    format!("{}*{}", e.multiplicity, e.label)
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `⟨f, χ⟩` as a nonnegative integer; anything else is an error.
pub fn multiplicity(f: &ClassFunction, chi: &ClassFunction, ctx: &GroupContext, label: &CharLabel) -> Result<BigUint> {
    let v = inner_product(f, chi, ctx)?;
    let Some(m) = v.as_integer() else {
        return Err(Error::NonIntegralMultiplicity { label: label.to_string(), value: v.to_string() });
    };
    if m.is_negative() {
        return Err(Error::NegativeMultiplicity { label: label.to_string(), value: m.to_string() });
    }
    Ok(m.try_into().expect("nonnegative"))
}

/// Decomposes a character over the irreducibles of `table`, and checks
/// that the multiplicities rebuild it exactly.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<Decomposition> {
    let ctx = table.context();
    let mults: Vec<BigUint> = table
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(l, chi)| multiplicity(f, chi, ctx, l))
        .collect::<Result<_>>()?;
    let mut rebuilt = ClassFunction::zero(ctx.class_count());
    let mut entries = Vec::new();
    for ((label, chi), m) in table.iter().zip(mults) {
        if m.is_zero() {
            continue;
        }
        rebuilt.add_scaled(chi, &BigInt::from(m.clone()));
        entries.push(DecompositionEntry { label: label.clone(), multiplicity: m });
    }
    if &rebuilt != f {
        return Err(Error::Precondition(format!(
            "{}{} class function is not a character of the assembled table",
            ctx.kind(),
            ctx.n()
        )));
    }
    Ok(Decomposition { context: ctx.kind(), n: ctx.n(), entries })
}

/// `ψ·χ` where `χ` lives on `S̃_n` and `ψ` is read on the matching `C^+` class.
fn designated(ctx: &GroupContext, alpha: &Partition) -> ClassLabel {
    let central = ctx.find(alpha, None, Some(Sign::Plus)).map(|_| Sign::Plus);
    ClassLabel { cycle_type: alpha.clone(), alt: None, central }
}

impl Engine {
    /// Kronecker coefficient `g(λ, μ, ν) = Σ_α z_α⁻¹ [λ](α)[μ](α)[ν](α)`.
    pub fn kron_coeff(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
        let n = lambda.n();
        for p in [mu, nu] {
            if p.n() != n {
                return Err(Error::SizeMismatch { left: n, right: p.n() });
            }
        }
        let fact = BigInt::from(factorial(n));
        let total: BigInt = gen_partitions(n, Filter::All)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|a| -> Result<BigInt> {
                let v = self.mn_value(lambda, &a)?;
                if v.is_zero() {
                    return Ok(BigInt::zero());
                }
                let v = v * self.mn_value(mu, &a)?;
                if v.is_zero() {
                    return Ok(v);
                }
                Ok(v * self.mn_value(nu, &a)? * BigInt::from(a.class_size()))
            })
            .try_reduce(BigInt::zero, |a, b| Ok(a + b))?;
        if &total % &fact != BigInt::zero() || total.is_negative() {
            return Err(Error::NonIntegralMultiplicity {
                label: format!("g({lambda}; {mu}; {nu})"),
                value: format!("{total}/{fact}"),
            });
        }
        Ok((total / fact).try_into().expect("nonnegative"))
    }

    /// `[λ]·[μ]` decomposed over `S_n`.
    pub fn decompose_kronecker(&self, lambda: &Partition, mu: &Partition) -> Result<Decomposition> {
        let n = lambda.n();
        if mu.n() != n {
            return Err(Error::SizeMismatch { left: n, right: mu.n() });
        }
        let mut entries = Vec::new();
        for nu in gen_partitions(n, Filter::All) {
            let g = self.kron_coeff(lambda, mu, &nu)?;
            if !g.is_zero() {
                entries.push(DecompositionEntry { label: CharLabel::Ordinary(nu), multiplicity: g });
            }
        }
        Ok(Decomposition { context: GroupKind::Sn, n, entries })
    }

    /// The non-faithful product `a · b` of two spin characters, as a class function on `S_n`.
    pub fn spin_product(&self, a: &SpinLabel, b: &SpinLabel) -> Result<ClassFunction> {
        let n = a.lambda().n();
        if b.lambda().n() != n {
            return Err(Error::SizeMismatch { left: n, right: b.lambda().n() });
        }
        let tsn = GroupContext::tilde_symmetric(n);
        let sn = GroupContext::symmetric(n);
        ClassFunction::try_from_fn(&sn, |c| {
            let class = designated(&tsn, &c.cycle_type);
            let va = self.spin_value(a, &class)?;
            if va.is_zero() {
                return Ok(va);
            }
            let v = &va * &self.spin_value(b, &class)?;
            if cfg!(debug_assertions) && class.central.is_some() {
                let other = ClassLabel { central: Some(Sign::Minus), ..class.clone() };
                let w = &self.spin_value(a, &other)? * &self.spin_value(b, &other)?;
                debug_assert_eq!(v, w, "spin product is not even under z");
            }
            Ok(v)
        })
    }

    /// `a · b` for two spin characters, decomposed into ordinary characters.
    pub fn decompose_spin_product(&self, a: &SpinLabel, b: &SpinLabel) -> Result<Decomposition> {
        let f = self.spin_product(a, b)?;
        decompose(&f, &*self.cached_table(GroupKind::Sn, a.lambda().n())?)
    }

    /// `⟨λ⟩_ε · ⟨λ⟩_δ` decomposed into ordinary characters; the choices are
    /// ignored for self-associate `λ`.
    pub fn decompose_spin_square(&self, lambda: &Partition, eps: Sign, delta: Sign) -> Result<Decomposition> {
        let a = SpinLabel::with_choice(lambda.clone(), eps)?;
        let b = SpinLabel::with_choice(lambda.clone(), delta)?;
        self.decompose_spin_product(&a, &b)
    }

    /// `⟨n⟩ · hat(n)` as a class function on `S_n`.
    pub fn basic_times_hat(&self, n: usize) -> Result<ClassFunction> {
        self.spin_times_hat(&Partition::row(n))
    }

    /// `⟨λ⟩ · hat(λ)` as a class function on `S_n`, where `hat(λ)` is the sum
    /// of `⟨λ⟩` and its associate when they differ.
    pub fn spin_times_hat(&self, lambda: &Partition) -> Result<ClassFunction> {
        let a = SpinLabel::principal(lambda.clone())?;
        let f = self.spin_product(&a, &a)?;
        if a.is_self_associate() {
            return Ok(f);
        }
        Ok(f.sum(&self.spin_product(&a, &a.associate())?))
    }

    /// `[μ] · χ` for a spin character `χ`, as a class function on `S̃_n`.
    pub fn mixed_product(&self, mu: &Partition, label: &SpinLabel) -> Result<ClassFunction> {
        let n = label.lambda().n();
        if mu.n() != n {
            return Err(Error::SizeMismatch { left: n, right: mu.n() });
        }
        let ctx = GroupContext::tilde_symmetric(n);
        ClassFunction::try_from_fn(&ctx, |c| {
            let v = self.spin_value(label, c)?;
            if v.is_zero() {
                return Ok(v);
            }
            Ok(v.scale_int(self.mn_value(mu, &c.cycle_type)?))
        })
    }

    /// `[μ] · χ` decomposed over `S̃_n`; only spin characters occur.
    pub fn decompose_mixed(&self, mu: &Partition, label: &SpinLabel) -> Result<Decomposition> {
        let f = self.mixed_product(mu, label)?;
        let d = decompose(&f, &*self.cached_table(GroupKind::TildeSn, mu.n())?)?;
        debug_assert!(d.entries.iter().all(|e| e.label.is_spin()));
        Ok(d)
    }

    /// `m_± = ⟨[μ]·χ_+, χ_±⟩` for the associate or conjugate spin pair of `λ`.
    pub fn spin_main_check(&self, lambda: &Partition, mu: &Partition) -> Result<SpinMainRecord> {
        let n = lambda.n();
        if n < 2 {
            return Err(Error::OutOfRange("spin pairs need n >= 2".into()));
        }
        if !lambda.is_distinct() {
            return Err(Error::NotInSet { partition: lambda.to_string(), set: "D(n)" });
        }
        if mu.n() != n {
            return Err(Error::SizeMismatch { left: n, right: mu.n() });
        }
        let value = self.mn_value(mu, lambda)?;
        let (m_plus, m_minus, context, congruence) = if lambda.in_d_minus() {
            let table = self.cached_table(GroupKind::TildeSn, n)?;
            let ctx = table.context();
            let plus = SpinLabel::new(lambda.clone(), Some(Sign::Plus))?;
            let f = self.mixed_product(mu, &plus)?;
            let chi_p = table.row(&plus.to_char_label()).expect("row");
            let chi_m = table.row(&plus.associate().to_char_label()).expect("row");
            let mp = multiplicity(&f, chi_p, ctx, &plus.to_char_label())?;
            let mm = multiplicity(&f, chi_m, ctx, &plus.associate().to_char_label())?;
            (mp, mm, GroupKind::TildeSn, None)
        } else {
            let table = self.cached_table(GroupKind::TildeAn, n)?;
            let ctx = table.context();
            let plus = TildeAnSpinLabel::new(lambda.clone(), Some(Sign::Plus))?;
            let minus = plus.conjugate();
            let chi_p = table.row(&plus.to_char_label()).expect("row");
            let chi_m = table.row(&minus.to_char_label()).expect("row");
            let f = self.ordinary_character(mu, ctx)?.product(chi_p);
            let mp = multiplicity(&f, chi_p, ctx, &plus.to_char_label())?;
            let mm = multiplicity(&f, chi_m, ctx, &minus.to_char_label())?;
            let stable = self.cached_table(GroupKind::TildeSn, n)?;
            let label = SpinLabel::principal(lambda.clone())?;
            let chi = stable.row(&label.to_char_label()).expect("row");
            let g = self.mixed_product(mu, &label)?;
            let square = multiplicity(&g, chi, stable.context(), &label.to_char_label())?;
            (mp, mm, GroupKind::TildeAn, Some(BigInt::from(square)))
        };
        let diff = BigInt::from(m_plus.clone()) - BigInt::from(m_minus.clone());
        let bound_ok = m_plus.clone().max(m_minus.clone()) >= value.magnitude().clone();
        let parity_ok = congruence.as_ref().map(|c| (c - &value) % 2 == BigInt::zero());
        Ok(SpinMainRecord {
            lambda: lambda.clone(),
            mu: mu.clone(),
            context,
            difference_ok: diff == value,
            value,
            m_plus,
            m_minus,
            bound_ok,
            self_multiplicity: congruence,
            parity_ok,
        })
    }
}

/// Multiplicities in `[μ]·χ_+` of a spin pair `χ_±` labelled by `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpinMainRecord {
    pub lambda: Partition,
    pub mu: Partition,
    pub context: GroupKind,
    /// `[μ](λ)`.
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
    #[serde(with = "crate::decimal")]
    pub m_plus: BigUint,
    #[serde(with = "crate::decimal")]
    pub m_minus: BigUint,
    /// `m_+ - m_- = [μ](λ)`.
    pub difference_ok: bool,
    /// `max(m_+, m_-) ≥ |[μ](λ)|`.
    pub bound_ok: bool,
    /// `⟨[μ]⟨λ⟩, ⟨λ⟩⟩` over `S̃_n`, for `λ ∈ D⁺(n)`.
    #[serde(with = "crate::decimal::option")]
    pub self_multiplicity: Option<BigInt>,
    /// `⟨[μ]⟨λ⟩, ⟨λ⟩⟩ ≡ [μ](λ) mod 2`, for `λ ∈ D⁺(n)`.
    pub parity_ok: Option<bool>,
}

impl SpinMainRecord {
    pub fn holds(&self) -> bool {
        self.difference_ok && self.bound_ok && self.parity_ok.unwrap_or(true)
    }
}

/// Outcome of multiplying a class function into a detecting pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetectingPairRecord {
    pub psi_x: ExactValue,
    #[serde(with = "crate::decimal")]
    pub m1: BigUint,
    #[serde(with = "crate::decimal")]
    pub m2: BigUint,
    /// The pair is detecting and `ψ(x) = ψ(y) ≠ 0`.
    pub precondition_ok: bool,
    /// `ψ(x) = m_1 - m_2`.
    pub difference_ok: bool,
    /// `max(m_1, m_2) ≥ |ψ(x)|`.
    pub bound_ok: bool,
}

/// `m_j = ⟨ψ·χ_1, χ_j⟩` for a detecting pair of `χ_1, χ_2`.
pub fn lemma_detect_check(psi: &ClassFunction, pair: &CriticalPair, table: &CharacterTable) -> Result<DetectingPairRecord> {
    let ctx = table.context();
    if pair.differing.len() != 2 {
        return Err(Error::Precondition(format!("pair {}~{} is not critical for two characters", pair.x_label, pair.y_label)));
    }
    let chi1 = table.row(&pair.differing[0]).ok_or_else(|| Error::InvalidLabel(pair.differing[0].to_string()))?;
    let chi2 = table.row(&pair.differing[1]).ok_or_else(|| Error::InvalidLabel(pair.differing[1].to_string()))?;
    let psi_x = psi.get(pair.x).clone();
    let precondition_ok = pair.detecting && psi.get(pair.y) == &psi_x && !psi_x.is_zero();
    let f = psi.product(chi1);
    let m1 = multiplicity(&f, chi1, ctx, &pair.differing[0])?;
    let m2 = multiplicity(&f, chi2, ctx, &pair.differing[1])?;
    let diff = ExactValue::from_int(BigInt::from(m1.clone()) - BigInt::from(m2.clone()));
    let bound_ok = match psi_x.as_integer() {
        Some(v) => m1.clone().max(m2.clone()) >= *v.magnitude(),
        None => false,
    };
    Ok(DetectingPairRecord { difference_ok: diff == psi_x, psi_x, m1, m2, precondition_ok, bound_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::staircase;

    #[test]
    fn kron_examples() {
        let e = Engine::new();
        assert_eq!(e.kron_coeff(&part![2, 1], &part![2, 1], &part![2, 1]).unwrap(), BigUint::from(1u32));
        assert_eq!(e.kron_coeff(&part![2, 1], &part![3], &part![1, 1, 1]).unwrap(), BigUint::zero());
        assert!(e.kron_coeff(&staircase(3), &staircase(3), &part![2, 2, 2]).unwrap() > BigUint::zero());
        assert!(e.kron_coeff(&part![2], &part![2], &part![1]).is_err());
    }

    #[test]
    fn basic_square_is_hook_sum() {
        let e = Engine::new();
        for n in 4..=7 {
            let f = e.basic_times_hat(n).unwrap();
            let d = decompose(&f, &e.sn_table(n).unwrap()).unwrap();
            let hooks: Vec<_> = (0..n)
                .map(|j| DecompositionEntry {
                    label: CharLabel::Ordinary(Partition::hook(n, j).unwrap()),
                    multiplicity: BigUint::from(1u32),
                })
                .collect();
            assert_eq!(d.entries, hooks, "n={n}");
        }
    }

    #[test]
    fn mixed_example() {
        let e = Engine::new();
        let d = e.decompose_mixed(&part![3, 3, 3], &SpinLabel::principal(part![9]).unwrap()).unwrap();
        assert_eq!(d.to_string(), "2*<5,3,1>");
        let l = SpinLabel::principal(part![3, 2, 1]).unwrap();
        let d = e.decompose_mixed(&part![1, 1, 1, 1, 1, 1], &l).unwrap();
        assert_eq!(d.to_string(), "<3,2,1>-");
    }

    #[test]
    fn main_check_example() {
        let e = Engine::new();
        let r = e.spin_main_check(&part![3, 2, 1], &part![6]).unwrap();
        assert_eq!(r.value, BigInt::from(1));
        assert!(r.holds(), "{r:?}");
        let r = e.spin_main_check(&part![5, 3, 1], &part![4, 3, 2]).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
