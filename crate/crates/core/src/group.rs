//! Group contexts, class functions and character labels shared by the four
//! groups `S_n`, `S̃_n`, `A_n` and `Ã_n`.
//!
//! Every class of every context is described by a [`ClassLabel`]: the cycle
//! type it projects to in `S_n`, plus an optional half for classes that
//! split on passing to `A_n` (`alt`) and an optional half for classes that
//! split in the double cover (`central`, the two halves differing by `z`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{factorial, gen_partitions, Filter, Partition};
use crate::{ExactValue, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    Sn,
    TildeSn,
    An,
    TildeAn,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sn => "S",
            GroupKind::TildeSn => "~S",
            GroupKind::An => "A",
            GroupKind::TildeAn => "~A",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "s" | "sn" => GroupKind::Sn,
            "~s" | "tsn" | "tilde-sn" | "tilde_sn" => GroupKind::TildeSn,
            "a" | "an" => GroupKind::An,
            "~a" | "tan" | "tilde-an" | "tilde_an" => GroupKind::TildeAn,
            other => return Err(Error::OutOfRange(format!("unknown group {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ClassLabel {
    pub cycle_type: Partition,
    /// Half of a cycle type that splits in `A_n` (`σ^±`).
    pub alt: Option<Sign>,
    /// Half of a class that splits in the double cover (`C^±`).
    pub central: Option<Sign>,
}

impl ClassLabel {
    pub fn plain(cycle_type: Partition) -> Self {
        ClassLabel { cycle_type, alt: None, central: None }
    }

    /// `±1` according to the central half; `+1` for unsplit classes.
    pub fn central_sign(&self) -> i64 {
        self.central.map_or(1, Sign::sign)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.cycle_type)?;
        if let Some(s) = self.alt {
            write!(f, "a{s}")?;
        }
        if let Some(s) = self.central {
            write!(f, "z{s}")?;
        }
        Ok(())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `(5,3,1)a+z-`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidLabel(format!("class {s:?}"));
        let close = s.find(')').ok_or_else(bad)?;
        let cycle_type: Partition = s[..=close].parse()?;
        let mut rest = &s[close + 1..];
        let mut take = |tag: char| -> Result<Option<Sign>> {
            match rest.strip_prefix(tag) {
                Some(r) if !r.is_empty() => {
                    let sign = r[..1].parse()?;
                    rest = &r[1..];
                    Ok(Some(sign))
                }
                Some(_) => Err(bad()),
                None => Ok(None),
            }
        };
        let alt = take('a')?;
        let central = take('z')?;
        if !rest.is_empty() {
            return Err(bad());
        }
        Ok(ClassLabel { cycle_type, alt, central })
    }
}

impl From<ClassLabel> for String {
    fn from(c: ClassLabel) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for ClassLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Conjugacy classes of one of the four groups, with their sizes.
#[derive(Debug, Clone)]
pub struct GroupContext {
    kind: GroupKind,
    n: usize,
    classes: Vec<ClassLabel>,
    sizes: Vec<BigUint>,
    order: BigUint,
    index: HashMap<ClassLabel, usize>,
}

impl GroupContext {
    fn build(kind: GroupKind, n: usize, entries: Vec<(ClassLabel, BigUint)>) -> Self {
        let an_order = if n < 2 { BigUint::from(1u32) } else { factorial(n) / 2u32 };
        let order = match kind {
            GroupKind::Sn => factorial(n),
            GroupKind::TildeSn => factorial(n) * 2u32,
            GroupKind::An => an_order,
            GroupKind::TildeAn => an_order * 2u32,
        };
        let (classes, sizes): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        debug_assert_eq!(sizes.iter().sum::<BigUint>(), order, "{kind} class sizes");
        let index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        GroupContext { kind, n, classes, sizes, order, index }
    }

    /// `S_n`: one class per cycle type.
    pub fn symmetric(n: usize) -> Self {
        let entries = gen_partitions(n, Filter::All)
            .map(|a| {
                let size = a.class_size();
                (ClassLabel::plain(a), size)
            })
            .collect();
        Self::build(GroupKind::Sn, n, entries)
    }

    /// `S̃_n`: the preimage of type `α` splits into `C_α^±` iff `α ∈ O(n) ∪ D⁻(n)`.
    pub fn tilde_symmetric(n: usize) -> Self {
        let mut entries = Vec::new();
        for a in gen_partitions(n, Filter::All) {
            let size = a.class_size();
            if a.is_odd_parts() || a.in_d_minus() {
                for s in [Sign::Plus, Sign::Minus] {
                    entries.push((ClassLabel { cycle_type: a.clone(), alt: None, central: Some(s) }, size.clone()));
                }
            } else {
                entries.push((ClassLabel::plain(a), size * 2u32));
            }
        }
        Self::build(GroupKind::TildeSn, n, entries)
    }

    /// `A_n`: even cycle types; a type splits into `σ^±` iff its parts are odd and distinct.
    pub fn alternating(n: usize) -> Self {
        let mut entries = Vec::new();
        for a in gen_partitions(n, Filter::All).filter(|a| a.is_even_type()) {
            let size = a.class_size();
            if a.is_odd_parts() && a.is_distinct() && n > 1 {
                let half = size / 2u32;
                for s in [Sign::Plus, Sign::Minus] {
                    entries.push((ClassLabel { cycle_type: a.clone(), alt: Some(s), central: None }, half.clone()));
                }
            } else {
                entries.push((ClassLabel::plain(a), size));
            }
        }
        Self::build(GroupKind::An, n, entries)
    }

    /// `Ã_n`: preimages of the `A_n` classes. Over `α ∈ O(n) ∪ D⁺(n)` each
    /// preimage splits into a `z`-pair; elsewhere it stays one class.
    pub fn tilde_alternating(n: usize) -> Self {
        let an = Self::alternating(n);
        let mut entries = Vec::new();
        for (label, size) in an.classes.iter().zip(&an.sizes) {
            let a = &label.cycle_type;
            if a.is_odd_parts() || a.in_d_plus() {
                for s in [Sign::Plus, Sign::Minus] {
                    let mut l = label.clone();
                    l.central = Some(s);
                    entries.push((l, size.clone()));
                }
            } else {
                entries.push((label.clone(), size * 2u32));
            }
        }
        Self::build(GroupKind::TildeAn, n, entries)
    }

    pub fn of_kind(kind: GroupKind, n: usize) -> Self {
        match kind {
            GroupKind::Sn => Self::symmetric(n),
            GroupKind::TildeSn => Self::tilde_symmetric(n),
            GroupKind::An => Self::alternating(n),
            GroupKind::TildeAn => Self::tilde_alternating(n),
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, i: usize) -> &BigUint {
        &self.sizes[i]
    }

    pub fn sizes(&self) -> &[BigUint] {
        &self.sizes
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn index_of(&self, label: &ClassLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Index of the class with the given type and halves.
    pub fn find(&self, cycle_type: &Partition, alt: Option<Sign>, central: Option<Sign>) -> Option<usize> {
        self.index_of(&ClassLabel { cycle_type: cycle_type.clone(), alt, central })
    }

    /// Indices of all classes projecting to `cycle_type`.
    pub fn classes_of_type(&self, cycle_type: &Partition) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| &self.classes[i].cycle_type == cycle_type).collect()
    }
}

/// Values of a function on the classes of a context, in context order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<ExactValue>,
}

impl ClassFunction {
    pub fn new(values: Vec<ExactValue>) -> Self {
        ClassFunction { values }
    }

    pub fn from_fn(ctx: &GroupContext, f: impl FnMut(&ClassLabel) -> ExactValue) -> Self {
        ClassFunction { values: ctx.classes().iter().map(f).collect() }
    }

    pub fn try_from_fn(ctx: &GroupContext, f: impl FnMut(&ClassLabel) -> Result<ExactValue>) -> Result<Self> {
        Ok(ClassFunction { values: ctx.classes().iter().map(f).collect::<Result<_>>()? })
    }

    pub fn zero(len: usize) -> Self {
        ClassFunction { values: vec![ExactValue::zero(); len] }
    }

    pub fn values(&self) -> &[ExactValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> &ExactValue {
        &self.values[i]
    }

    pub fn product(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.len(), other.len(), "class functions on different contexts");
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn add_scaled(&mut self, other: &ClassFunction, k: &BigInt) {
        assert_eq!(self.len(), other.len(), "class functions on different contexts");
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b.scale_int(k.clone());
        }
    }

    pub fn sum(&self, other: &ClassFunction) -> ClassFunction {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::from(1));
        out
    }

    pub fn scale_int(&self, k: &BigInt) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|v| v.scale_int(k.clone())).collect() }
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(ExactValue::conj).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(ExactValue::is_zero)
    }
}

/// `⟨f, g⟩ = |G|⁻¹ Σ_C |C| f(C) conj(g(C))`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction, ctx: &GroupContext) -> Result<ExactValue> {
    if f.len() != ctx.class_count() || g.len() != ctx.class_count() {
        return Err(Error::DomainMismatch(format!(
            "{} and {} values for {} classes of {}{}",
            f.len(),
            g.len(),
            ctx.class_count(),
            ctx.kind(),
            ctx.n()
        )));
    }
    let mut acc = ExactValue::zero();
    for i in 0..ctx.class_count() {
        let (a, b) = (f.get(i), g.get(i));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc += (a * &b.conj()).scale_int(BigInt::from(ctx.class_size(i).clone()));
    }
    Ok(acc.scale(&Ratio::new(BigInt::from(1), BigInt::from(ctx.order().clone()))))
}

/// Label of an irreducible character of one of the four groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CharLabel {
    /// `[λ]`, also the inflation to `S̃_n`.
    Ordinary(Partition),
    /// `⟨λ⟩` (self-associate, `None`) or `⟨λ⟩_±`.
    Spin(Partition, Option<Sign>),
    /// `{μ}` (merged with `{μ'}`, `None`) or `{μ}_±` for symmetric `μ`; also the inflation to `Ã_n`.
    Alternating(Partition, Option<Sign>),
    /// `⟨⟨λ⟩⟩` (for `λ ∈ D⁻`, `None`) or `⟨⟨λ⟩⟩_±` (for `λ ∈ D⁺`).
    TildeAlternating(Partition, Option<Sign>),
}

impl CharLabel {
    pub fn partition(&self) -> &Partition {
        match self {
            CharLabel::Ordinary(p)
            | CharLabel::Spin(p, _)
            | CharLabel::Alternating(p, _)
            | CharLabel::TildeAlternating(p, _) => p,
        }
    }

    pub fn is_spin(&self) -> bool {
        matches!(self, CharLabel::Spin(..) | CharLabel::TildeAlternating(..))
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = |s: &Option<Sign>| s.map_or(String::new(), |s| s.to_string());
        match self {
            CharLabel::Ordinary(p) => write!(f, "[{p}]"),
            CharLabel::Spin(p, s) => write!(f, "<{p}>{}", suffix(s)),
            CharLabel::Alternating(p, s) => write!(f, "{{{p}}}{}", suffix(s)),
            CharLabel::TildeAlternating(p, s) => write!(f, "<<{p}>>{}", suffix(s)),
        }
    }
}

impl FromStr for CharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, sign) = match s.chars().last() {
            Some('+') => (&s[..s.len() - 1], Some(Sign::Plus)),
            Some('-') => (&s[..s.len() - 1], Some(Sign::Minus)),
            _ => (s, None),
        };
        let bad = || Error::InvalidLabel(s.to_string());
        let inner = |open: &str, close: &str| -> Result<Partition> {
            body.strip_prefix(open).and_then(|b| b.strip_suffix(close)).ok_or_else(bad)?.parse()
        };
        if body.starts_with("<<") {
            Ok(CharLabel::TildeAlternating(inner("<<", ">>")?, sign))
        } else if body.starts_with('<') {
            Ok(CharLabel::Spin(inner("<", ">")?, sign))
        } else if body.starts_with('{') {
            Ok(CharLabel::Alternating(inner("{", "}")?, sign))
        } else if body.starts_with('[') && sign.is_none() {
            Ok(CharLabel::Ordinary(inner("[", "]")?))
        } else {
            Err(bad())
        }
    }
}

impl From<CharLabel> for String {
    fn from(l: CharLabel) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for CharLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Irreducible characters of a context, one row per label.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    context: Arc<GroupContext>,
    labels: Vec<CharLabel>,
    rows: Vec<ClassFunction>,
    index: HashMap<CharLabel, usize>,
}

impl CharacterTable {
    pub fn new(context: Arc<GroupContext>, rows: Vec<(CharLabel, ClassFunction)>) -> Self {
        let (labels, rows): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        CharacterTable { context, labels, rows, index }
    }

    pub fn context(&self) -> &GroupContext {
        &self.context
    }

    pub fn context_arc(&self) -> Arc<GroupContext> {
        Arc::clone(&self.context)
    }

    pub fn labels(&self) -> &[CharLabel] {
        &self.labels
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, label: &CharLabel) -> Option<&ClassFunction> {
        self.index.get(label).map(|&i| &self.rows[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CharLabel, &ClassFunction)> {
        self.labels.iter().zip(&self.rows)
    }

    /// Degree of each character: its value at the identity class `(1^n)` (`+` half).
    pub fn degrees(&self) -> Vec<ExactValue> {
        let id = self
            .context
            .classes()
            .iter()
            .position(|c| c.cycle_type == Partition::column(self.context.n()) && c.central != Some(Sign::Minus))
            .expect("identity class");
        self.rows.iter().map(|r| r.get(id).clone()).collect()
    }

    /// TSV dump: header row of class labels, one row per character.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("character");
        for c in self.context.classes() {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (label, row) in self.iter() {
            out.push_str(&label.to_string());
            for v in row.values() {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Failures of the orthogonality relations for one table; empty when the table is correct.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub kind: Option<GroupKind>,
    pub n: usize,
    pub square: bool,
    pub row_failures: Vec<(CharLabel, CharLabel)>,
    pub column_failures: Vec<(ClassLabel, ClassLabel)>,
    pub degrees_ok: bool,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.square && self.degrees_ok && self.row_failures.is_empty() && self.column_failures.is_empty()
    }
}

/// First and second orthogonality and `Σ χ(1)² = |G|`.
pub fn check_orthogonality(table: &CharacterTable) -> Result<OrthogonalityReport> {
    let ctx = table.context();
    let rows = table.rows();
    let labels = table.labels();
    let mut report = OrthogonalityReport {
        kind: Some(ctx.kind()),
        n: ctx.n(),
        square: rows.len() == ctx.class_count(),
        ..Default::default()
    };
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let want = if i == j { ExactValue::one() } else { ExactValue::zero() };
            if inner_product(&rows[i], &rows[j], ctx)? != want {
                report.row_failures.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    let degrees: ExactValue = table.degrees().iter().map(|d| d * d).sum();
    report.degrees_ok = degrees == ExactValue::from_int(ctx.order().clone().into());
    for x in 0..ctx.class_count() {
        for y in x..ctx.class_count() {
            let s: ExactValue = rows.iter().map(|r| r.get(x) * &r.get(y).conj()).sum();
            let want = if x == y {
                ExactValue::from_int((ctx.order() / ctx.class_size(x)).into())
            } else {
                ExactValue::zero()
            };
            if s != want {
                report.column_failures.push((ctx.classes()[x].clone(), ctx.classes()[y].clone()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn class_labels_parse() {
        for text in ["(5,3,1)a+z-", "(3,1)", "(4)z+", "(3,3)a-"] {
            assert_eq!(text.parse::<ClassLabel>().unwrap().to_string(), text);
        }
        assert!("(3,1)q".parse::<ClassLabel>().is_err());
        assert!("(3,1)a".parse::<ClassLabel>().is_err());
    }

    #[test]
    fn context_sizes() {
        for n in 1..=9 {
            for kind in [GroupKind::Sn, GroupKind::TildeSn, GroupKind::An, GroupKind::TildeAn] {
                let ctx = GroupContext::of_kind(kind, n);
                assert_eq!(&ctx.sizes().iter().sum::<BigUint>(), ctx.order(), "{kind}{n}");
            }
        }
        let a5 = GroupContext::alternating(5);
        assert_eq!(a5.class_count(), 5);
        let t4 = GroupContext::tilde_alternating(4);
        assert_eq!(t4.class_count(), 7);
        assert_eq!(t4.classes_of_type(&part![3, 1]).len(), 4);
    }

    #[test]
    fn label_text_round_trip() {
        for s in ["[5,3,1]", "<5,3,1>+", "<4,3,2,1>", "{4,1,1}-", "{3,1}", "<<5,3,1>>+", "<<3,2,1>>"] {
            let l: CharLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("[3,1]+".parse::<CharLabel>().is_err());
        assert!("(3,1)".parse::<CharLabel>().is_err());
    }
}
