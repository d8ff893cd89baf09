//! Characters of `A_n` and spin characters of its double cover `Ã_n`.
//!
//! `[μ]↓ = {μ}` for `μ ≠ μ'`. For symmetric `μ` the restriction splits as
//! `{μ}_+ + {μ}_-`, and the two halves differ only on the classes
//! `σ^±_{h(μ)}`, where `{μ}_+(σ^±) = ½(e_μ ± √(e_μ ∏ h_j))`.
//!
//! On `Ã_n`, `⟨λ⟩↓ = ⟨⟨λ⟩⟩` for `λ ∈ D⁻(n)`, while for `λ ∈ D⁺(n)`,
//! `⟨⟨λ⟩⟩_± = ½(⟨λ⟩↓ ± Δ^λ)` with `Δ^λ` supported on the classes of type `λ`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CharLabel, CharacterTable, ClassFunction, ClassLabel, GroupContext, GroupKind};
use crate::partitions::{gen_partitions, Filter, Partition};
use crate::spin::SpinLabel;
use crate::{Engine, ExactValue, Sign};

fn half() -> Ratio<BigInt> {
    Ratio::new(BigInt::one(), BigInt::from(2))
}

/// `e_μ = (-1)^{(n-k)/2}` with `k = l(h(μ))`: the value of `[μ]` on type `h(μ)`.
pub fn e_mu(mu: &Partition) -> i64 {
    let k = mu.principal_hooks().len();
    if ((mu.n() - k) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Irreducible character of `A_n`: `{μ}` (merged with `{μ'}`) or `{μ}_±` for `μ = μ'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnCharLabel {
    mu: Partition,
    kind: Option<Sign>,
}

impl AnCharLabel {
    /// Accepts either member of a conjugate pair; the label is stored on
    /// the one that comes first in enumeration order.
    pub fn new(mu: Partition, kind: Option<Sign>) -> Result<Self> {
        let symmetric = mu.is_symmetric() && mu.n() > 1;
        if symmetric != kind.is_some() {
            return Err(Error::InvalidLabel(format!(
                "{{{mu}}} {}",
                if symmetric { "is symmetric and needs a sign" } else { "is not symmetric and takes no sign" }
            )));
        }
        let conj = mu.conjugate();
        Ok(AnCharLabel { mu: mu.min(conj), kind })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn kind(&self) -> Option<Sign> {
        self.kind
    }

    /// The `A_n`-conjugate character (`{μ}_+ ↔ {μ}_-`).
    pub fn conjugate(&self) -> AnCharLabel {
        AnCharLabel { mu: self.mu.clone(), kind: self.kind.map(Sign::flip) }
    }

    pub fn to_char_label(&self) -> CharLabel {
        CharLabel::Alternating(self.mu.clone(), self.kind)
    }
}

impl TryFrom<&CharLabel> for AnCharLabel {
    type Error = Error;

    fn try_from(label: &CharLabel) -> Result<Self> {
        match label {
            CharLabel::Alternating(m, s) => AnCharLabel::new(m.clone(), *s),
            other => Err(Error::InvalidLabel(format!("{other} is not a character of An"))),
        }
    }
}

/// Labels of `Irr(A_n)` in enumeration order.
pub fn an_labels(n: usize) -> Vec<AnCharLabel> {
    let mut out = Vec::new();
    for mu in gen_partitions(n, Filter::All) {
        let conj = mu.conjugate();
        if mu == conj && n > 1 {
            out.push(AnCharLabel { mu: mu.clone(), kind: Some(Sign::Plus) });
            out.push(AnCharLabel { mu, kind: Some(Sign::Minus) });
        } else if mu <= conj {
            out.push(AnCharLabel { mu, kind: None });
        }
    }
    out
}

/// Spin character of `Ã_n`: `⟨⟨λ⟩⟩` for `λ ∈ D⁻(n)`, `⟨⟨λ⟩⟩_±` for `λ ∈ D⁺(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TildeAnSpinLabel {
    lambda: Partition,
    kind: Option<Sign>,
}

impl TildeAnSpinLabel {
    pub fn new(lambda: Partition, kind: Option<Sign>) -> Result<Self> {
        if !lambda.is_distinct() {
            return Err(Error::NotInSet { partition: lambda.to_string(), set: "D(n)" });
        }
        let splits = lambda.in_d_plus() && lambda.n() > 1;
        if splits != kind.is_some() {
            return Err(Error::InvalidLabel(format!(
                "<<{lambda}>> {}",
                if splits { "splits on An~ and needs a sign" } else { "does not split and takes no sign" }
            )));
        }
        Ok(TildeAnSpinLabel { lambda, kind })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn kind(&self) -> Option<Sign> {
        self.kind
    }

    pub fn conjugate(&self) -> TildeAnSpinLabel {
        TildeAnSpinLabel { lambda: self.lambda.clone(), kind: self.kind.map(Sign::flip) }
    }

    pub fn to_char_label(&self) -> CharLabel {
        CharLabel::TildeAlternating(self.lambda.clone(), self.kind)
    }
}

impl TryFrom<&CharLabel> for TildeAnSpinLabel {
    type Error = Error;

    fn try_from(label: &CharLabel) -> Result<Self> {
        match label {
            CharLabel::TildeAlternating(l, s) => TildeAnSpinLabel::new(l.clone(), *s),
            other => Err(Error::InvalidLabel(format!("{other} is not a spin character of An~"))),
        }
    }
}

/// Spin labels of `Ã_n` in enumeration order.
pub fn tilde_an_spin_labels(n: usize) -> Vec<TildeAnSpinLabel> {
    let mut out = Vec::new();
    for lambda in gen_partitions(n, Filter::Distinct) {
        if lambda.in_d_plus() && n > 1 {
            out.push(TildeAnSpinLabel { lambda: lambda.clone(), kind: Some(Sign::Plus) });
            out.push(TildeAnSpinLabel { lambda, kind: Some(Sign::Minus) });
        } else {
            out.push(TildeAnSpinLabel { lambda, kind: None });
        }
    }
    out
}

/// The `S̃_n` class containing a class of `Ã_n`.
fn tilde_sn_class(class: &ClassLabel) -> ClassLabel {
    let a = &class.cycle_type;
    let central = if a.is_odd_parts() { class.central } else { None };
    ClassLabel { cycle_type: a.clone(), alt: None, central }
}

fn check_class(class: &ClassLabel, n: usize, kind: GroupKind) -> Result<()> {
    let a = &class.cycle_type;
    let alt_split = a.is_odd_parts() && a.is_distinct() && n > 1;
    let central_ok = match kind {
        GroupKind::An => class.central.is_none(),
        _ => class.central.is_some() == (a.is_odd_parts() || a.in_d_plus()),
    };
    if a.n() != n || !a.is_even_type() || class.alt.is_some() != alt_split || !central_ok {
        return Err(Error::DomainMismatch(format!("{class} is not a class of {kind}{n}")));
    }
    Ok(())
}

impl Engine {
    /// Value of an `A_n` character on an `A_n` class. Classes of `Ã_n`
    /// are accepted too; the central half is ignored.
    pub fn an_char_value(&self, label: &AnCharLabel, class: &ClassLabel) -> Result<ExactValue> {
        let n = label.mu.n();
        let plain = ClassLabel { central: None, ..class.clone() };
        check_class(&plain, n, GroupKind::An)?;
        let full = ExactValue::from_int(self.mn_value(&label.mu, &class.cycle_type)?);
        let Some(kind) = label.kind else {
            return Ok(full);
        };
        let hooks = label.mu.principal_hooks();
        match class.alt {
            Some(s) if class.cycle_type == hooks => {
                let e = e_mu(&label.mu);
                let prod: i128 = hooks.parts().iter().map(|&h| h as i128).product();
                let root = ExactValue::sqrt_int(e as i128 * prod).scale_int(BigInt::from(kind.sign() * s.sign()));
                Ok((ExactValue::from(e) + root).scale(&half()))
            }
            _ => Ok(full.scale(&half())),
        }
    }

    pub fn an_character(&self, label: &AnCharLabel, ctx: &GroupContext) -> Result<ClassFunction> {
        ClassFunction::try_from_fn(ctx, |c| self.an_char_value(label, c))
    }

    /// Character table of `A_n`.
    pub fn an_table(&self, n: usize) -> Result<CharacterTable> {
        let ctx = Arc::new(GroupContext::alternating(n));
        let rows = self.an_rows(&ctx)?;
        Ok(CharacterTable::new(ctx, rows))
    }

    fn an_rows(&self, ctx: &GroupContext) -> Result<Vec<(CharLabel, ClassFunction)>> {
        an_labels(ctx.n())
            .into_par_iter()
            .map(|l| Ok((l.to_char_label(), self.an_character(&l, ctx)?)))
            .collect()
    }

    /// Value of a spin character of `Ã_n`.
    pub fn atilde_spin_value(&self, label: &TildeAnSpinLabel, class: &ClassLabel) -> Result<ExactValue> {
        let n = label.lambda.n();
        check_class(class, n, GroupKind::TildeAn)?;
        let parent = SpinLabel::principal(label.lambda.clone())?;
        let restricted = self.spin_value(&parent, &tilde_sn_class(class))?;
        let Some(kind) = label.kind else {
            return Ok(restricted);
        };
        let delta = delta_value(&label.lambda, class)?;
        Ok((restricted + delta.scale_int(BigInt::from(kind.sign()))).scale(&half()))
    }

    pub fn atilde_spin_character(&self, label: &TildeAnSpinLabel, ctx: &GroupContext) -> Result<ClassFunction> {
        ClassFunction::try_from_fn(ctx, |c| self.atilde_spin_value(label, c))
    }

    /// Character table of `Ã_n`: the inflated `A_n` characters, then the spin characters.
    pub fn tilde_an_table(&self, n: usize) -> Result<CharacterTable> {
        let ctx = Arc::new(GroupContext::tilde_alternating(n));
        let mut rows = self.an_rows(&ctx)?;
        let spin: Vec<_> = tilde_an_spin_labels(n)
            .into_par_iter()
            .map(|l| Ok((l.to_char_label(), self.atilde_spin_character(&l, &ctx)?)))
            .collect::<Result<_>>()?;
        rows.extend(spin);
        Ok(CharacterTable::new(ctx, rows))
    }

    /// Character table of any of the four groups.
    pub fn table(&self, kind: GroupKind, n: usize) -> Result<CharacterTable> {
        match kind {
            GroupKind::Sn => self.sn_table(n),
            GroupKind::TildeSn => self.tilde_sn_table(n),
            GroupKind::An => self.an_table(n),
            GroupKind::TildeAn => self.tilde_an_table(n),
        }
    }
}

/// `Δ^λ = ⟨⟨λ⟩⟩_+ - ⟨⟨λ⟩⟩_-` for `λ ∈ D⁺(n)`: `±i^{(n-m)/2} √(∏ ℓ_j)` on
/// classes of type `λ`, with the sign `s(a)·s(z)` read off the class halves.
pub fn delta_value(lambda: &Partition, class: &ClassLabel) -> Result<ExactValue> {
    if !lambda.in_d_plus() {
        return Err(Error::NotInSet { partition: lambda.to_string(), set: "D+(n)" });
    }
    check_class(class, lambda.n(), GroupKind::TildeAn)?;
    if &class.cycle_type != lambda {
        return Ok(ExactValue::zero());
    }
    let sign = class.alt.map_or(1, Sign::sign) * class.central_sign();
    let prod: u128 = lambda.product().try_into().expect("part product fits in u128");
    let e = ((lambda.n() - lambda.len()) / 2) as u32;
    Ok(ExactValue::term(Ratio::from_integer(BigInt::from(sign)), e, prod))
}

/// An unordered pair of classes on which at most two irreducibles differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalPair {
    pub x: usize,
    pub y: usize,
    pub x_label: String,
    pub y_label: String,
    /// The irreducibles taking different values on `x` and `y`.
    pub differing: Vec<CharLabel>,
    /// `|I| = 2` and `χ_1(x) - χ_1(y) = χ_2(y) - χ_2(x)`.
    pub detecting: bool,
}

/// All class pairs critical for a set `I` with `|I| ≤ max_size`.
pub fn find_critical_pairs(table: &CharacterTable, max_size: usize) -> Result<Vec<CriticalPair>> {
    let ctx = table.context();
    let k = ctx.class_count();
    if table.len() != k {
        return Err(Error::Precondition(format!(
            "table for {}{} has {} characters for {} classes",
            ctx.kind(),
            ctx.n(),
            table.len(),
            k
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|x| (x + 1..k).map(move |y| (x, y))).collect();
    let out = pairs
        .into_par_iter()
        .filter_map(|(x, y)| {
            let mut differing = Vec::new();
            for (label, row) in table.iter() {
                if row.get(x) != row.get(y) {
                    differing.push((label, row));
                    if differing.len() > max_size {
                        return None;
                    }
                }
            }
            let detecting = differing.len() == 2 && {
                let (a, b) = (differing[0].1, differing[1].1);
                a.get(x).clone() - a.get(y).clone() == b.get(y).clone() - b.get(x).clone()
            };
            Some(CriticalPair {
                x,
                y,
                x_label: ctx.classes()[x].to_string(),
                y_label: ctx.classes()[y].to_string(),
                differing: differing.into_iter().map(|(l, _)| l.clone()).collect(),
                detecting,
            })
        })
        .collect();
    Ok(out)
}

/// The detecting pairs described for `A_n`, `S̃_n` and `Ã_n`, as
/// (class, class, {χ_1, χ_2}) triples; empty for `S_n`.
pub fn expected_detecting_pairs(ctx: &GroupContext) -> BTreeSet<(ClassLabel, ClassLabel, BTreeSet<CharLabel>)> {
    let n = ctx.n();
    let mut out = BTreeSet::new();
    let pair = |l: CharLabel, r: CharLabel| [l, r].into_iter().collect::<BTreeSet<_>>();
    match ctx.kind() {
        GroupKind::Sn => {}
        GroupKind::An => {
            for mu in gen_partitions(n, Filter::All).filter(|m| m.is_symmetric() && n > 1) {
                let h = mu.principal_hooks();
                out.insert((
                    ClassLabel { cycle_type: h.clone(), alt: Some(Sign::Plus), central: None },
                    ClassLabel { cycle_type: h, alt: Some(Sign::Minus), central: None },
                    pair(
                        CharLabel::Alternating(mu.clone(), Some(Sign::Plus)),
                        CharLabel::Alternating(mu, Some(Sign::Minus)),
                    ),
                ));
            }
        }
        GroupKind::TildeSn => {
            for l in gen_partitions(n, Filter::DistinctMinus) {
                out.insert((
                    ClassLabel { cycle_type: l.clone(), alt: None, central: Some(Sign::Plus) },
                    ClassLabel { cycle_type: l.clone(), alt: None, central: Some(Sign::Minus) },
                    pair(CharLabel::Spin(l.clone(), Some(Sign::Plus)), CharLabel::Spin(l, Some(Sign::Minus))),
                ));
            }
        }
        GroupKind::TildeAn => {
            // Types in D ∩ O are excluded: there the pairs also separate the
            // non-faithful {μ}_± with h(μ) = λ.
            for l in gen_partitions(n, Filter::DistinctPlus).filter(|l| !l.is_odd_parts()) {
                out.insert((
                    ClassLabel { cycle_type: l.clone(), alt: None, central: Some(Sign::Plus) },
                    ClassLabel { cycle_type: l.clone(), alt: None, central: Some(Sign::Minus) },
                    pair(
                        CharLabel::TildeAlternating(l.clone(), Some(Sign::Plus)),
                        CharLabel::TildeAlternating(l, Some(Sign::Minus)),
                    ),
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn split_values() {
        let e = Engine::new();
        let plus = AnCharLabel::new(part![3, 1, 1], Some(Sign::Plus)).unwrap();
        let c = ClassLabel { cycle_type: part![5], alt: Some(Sign::Plus), central: None };
        let want = (ExactValue::from(1) + ExactValue::sqrt_int(5)).scale(&half());
        assert_eq!(e.an_char_value(&plus, &c).unwrap(), want);
        let l = AnCharLabel::new(part![2, 2], Some(Sign::Minus)).unwrap();
        let c = ClassLabel { cycle_type: part![3, 1], alt: Some(Sign::Plus), central: None };
        let want = (ExactValue::from(-1) - ExactValue::sqrt_int(-3)).scale(&half());
        assert_eq!(e.an_char_value(&l, &c).unwrap(), want);
        let merged = AnCharLabel::new(part![3, 1], None).unwrap();
        assert_eq!(e.an_char_value(&merged, &ClassLabel::plain(part![2, 2])).unwrap(), ExactValue::from(-1));
        assert!(AnCharLabel::new(part![3, 1], Some(Sign::Plus)).is_err());
        assert_eq!(AnCharLabel::new(part![2, 1, 1], None).unwrap().mu(), &part![3, 1]);
    }

    #[test]
    fn delta_examples() {
        let c = ClassLabel { cycle_type: part![3, 1], alt: Some(Sign::Plus), central: Some(Sign::Plus) };
        assert_eq!(delta_value(&part![3, 1], &c).unwrap(), ExactValue::i() * ExactValue::sqrt_int(3));
        let d = ClassLabel { alt: Some(Sign::Minus), ..c.clone() };
        assert_eq!(delta_value(&part![3, 1], &d).unwrap(), -(ExactValue::i() * ExactValue::sqrt_int(3)));
        let c9 = ClassLabel { cycle_type: part![5, 3, 1], alt: Some(Sign::Plus), central: Some(Sign::Plus) };
        // (n - m)/2 = 3, so the value is i³√15.
        assert_eq!(delta_value(&part![5, 3, 1], &c9).unwrap(), -(ExactValue::i() * ExactValue::sqrt_int(15)));
        assert!(delta_value(&part![3, 2, 1], &c).is_err());
    }

    #[test]
    fn table_counts() {
        let e = Engine::new();
        for n in 2..=7 {
            for kind in [GroupKind::An, GroupKind::TildeAn] {
                let t = e.table(kind, n).unwrap();
                assert_eq!(t.len(), t.context().class_count(), "{kind}{n}");
            }
        }
    }
}
