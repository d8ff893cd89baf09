//! Sweeps over all partitions of `n`: nonvanishing counts at `ρ_k`,
//! `h(ρ_k)` and `τ_k`, the `d_k` sequences, Saxl-type verifications and
//! the spin-square conjecture checks.
//!
//! Every sweep is parallel over `μ` and merges per-partition records with
//! associative sums, so results do not depend on the worker count.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternating::tilde_an_spin_labels;
use crate::error::{Error, Result};
use crate::group::{CharLabel, GroupKind};
use crate::partitions::{
    factorial, gen_partitions, glaisher_inverse, partition_count, spin_staircase, staircase, Filter, Partition,
};
use crate::products::decompose;
use crate::spin::SpinLabel;
use crate::{Engine, Sign};

/// Coefficients of `∏_{i=1}^{k} (1 + x^i)`: `d_k(m)` for `m = 0..=k(k+1)/2`.
pub fn dk_coefficients(k: usize) -> Vec<BigUint> {
    let mut poly = vec![BigUint::from(1u32)];
    for i in 1..=k {
        let mut next = vec![BigUint::zero(); poly.len() + i];
        for (m, c) in poly.iter().enumerate() {
            next[m] += c;
            next[m + i] += c;
        }
        poly = next;
    }
    poly
}

/// `d_k` through `d_j(m) = d_{j-1}(m) + d_{j-1}(m - j)`, row by row.
pub fn dk_by_recursion(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::from(1u32)];
    for j in 1..=k {
        let len = j * (j + 1) / 2 + 1;
        row = (0..len)
            .map(|m| {
                let a = row.get(m).cloned().unwrap_or_default();
                let b = if m >= j { row.get(m - j).cloned().unwrap_or_default() } else { BigUint::zero() };
                a + b
            })
            .collect();
    }
    row
}

/// `d_k(m)` by listing strict partitions of each `m` with largest part at most `k`.
pub fn dk_by_enumeration(k: usize) -> Vec<BigUint> {
    (0..=k * (k + 1) / 2)
        .map(|m| BigUint::from(gen_partitions(m, Filter::Distinct).filter(|p| p.part(0) <= k).count()))
        .collect()
}

/// Largest `k` for which [`dk_table`] also enumerates strict partitions.
pub const DK_ENUMERATION_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DkTable {
    pub k: usize,
    #[serde(with = "decimal_vec")]
    pub coefficients: Vec<BigUint>,
}

mod decimal_vec {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?.into_iter().map(|s| s.parse().map_err(D::Error::custom)).collect()
    }
}

impl DkTable {
    pub fn n(&self) -> usize {
        self.k * (self.k + 1) / 2
    }

    pub fn is_symmetric(&self) -> bool {
        let c = &self.coefficients;
        (0..c.len()).all(|m| c[m] == c[c.len() - 1 - m])
    }
}

/// `d_k` by the polynomial product, checked against the recursion and,
/// for `k ≤ DK_ENUMERATION_LIMIT`, against direct enumeration.
pub fn dk_table(k: usize) -> Result<DkTable> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let coefficients = dk_coefficients(k);
    if dk_by_recursion(k) != coefficients {
        return Err(Error::Precondition(format!("d_{k}: product and recursion disagree")));
    }
    if k <= DK_ENUMERATION_LIMIT && dk_by_enumeration(k) != coefficients {
        return Err(Error::Precondition(format!("d_{k}: product and enumeration disagree")));
    }
    Ok(DkTable { k, coefficients })
}

/// Plateaus `d_k(m-1) = d_k(m)` up to the middle of the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodalityReport {
    pub k: usize,
    /// Largest `m` inspected: `⌊k(k+1)/4⌋`.
    pub middle: usize,
    /// Every `m` in `1..=middle` with `d_k(m-1) = d_k(m)`.
    pub equalities: Vec<usize>,
    /// The equalities other than the ones at `m = 1, 2, 4` that hold for all large `k`.
    pub exceptional: Vec<usize>,
}

pub fn unimodality_report(k: usize) -> Result<UnimodalityReport> {
    if k < 2 {
        return Err(Error::OutOfRange("unimodality report needs k >= 2".into()));
    }
    let d = dk_coefficients(k);
    let middle = k * (k + 1) / 4;
    let equalities: Vec<usize> = (1..=middle).filter(|&m| d[m - 1] == d[m]).collect();
    let generic = |m: usize| m == 1 || m == 2 || (m == 4 && k >= 4);
    let exceptional = equalities.iter().copied().filter(|&m| !generic(m)).collect();
    Ok(UnimodalityReport { k, middle, equalities, exceptional })
}

/// Exceptional plateau positions for `k = 4..=11`.
pub const GOLDEN_EXCEPTIONS: [(usize, &[usize]); 8] = [
    (4, &[5]),
    (5, &[6, 7]),
    (6, &[7, 8, 10]),
    (7, &[8, 11, 13, 14]),
    (8, &[16, 17]),
    (9, &[19, 22]),
    (10, &[26]),
    (11, &[32]),
];

/// Wall-clock and memory budget for a sweep. Memory is estimated from
/// the size of the memo tables.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Limits {
    pub max_seconds: Option<f64>,
    pub max_memory: Option<u64>,
}

/// Rough per-entry footprint of a memo table entry.
const MEMO_ENTRY_BYTES: u64 = 160;

impl Limits {
    pub fn none() -> Self {
        Self::default()
    }

    fn breach(&self, start: Instant, engine: &Engine) -> Option<String> {
        if let Some(s) = self.max_seconds {
            if start.elapsed().as_secs_f64() > s {
                return Some(format!("time limit of {s} s exceeded"));
            }
        }
        if let Some(m) = self.max_memory {
            let used = (engine.mn_store().len() + engine.morris_store().len()) as u64 * MEMO_ENTRY_BYTES;
            if used > m {
                return Some(format!("memory limit of {m} bytes exceeded (memo estimate {used})"));
            }
        }
        None
    }
}

/// Counts a predicate over all of `P(n)` in parallel, stopping early when a limit is hit.
fn sweep<T, F>(engine: &Engine, n: usize, limits: &Limits, f: F) -> Result<(Vec<T>, usize, Option<String>)>
where
    T: Send + Default + Clone + std::ops::AddAssign,
    F: Fn(&Partition) -> Result<Vec<T>> + Sync,
{
    let start = Instant::now();
    let stop = AtomicBool::new(false);
    let reason = std::sync::Mutex::new(None);
    let examined = AtomicUsize::new(0);
    let parts: Vec<Partition> = gen_partitions(n, Filter::All).collect();
    let sums = parts
        .par_iter()
        .map(|mu| -> Result<Option<Vec<T>>> {
            if stop.load(Ordering::Relaxed) {
                return Ok(None);
            }
            if let Some(r) = limits.breach(start, engine) {
                stop.store(true, Ordering::Relaxed);
                reason.lock().expect("lock").get_or_insert(r);
                return Ok(None);
            }
            let v = f(mu)?;
            examined.fetch_add(1, Ordering::Relaxed);
            Ok(Some(v))
        })
        .try_fold(Vec::new, |mut acc: Vec<T>, item| {
            if let Some(v) = item? {
                if acc.is_empty() {
                    acc = vec![T::default(); v.len()];
                }
                for (a, x) in acc.iter_mut().zip(v) {
                    *a += x;
                }
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(Vec::new, |mut a, b| {
            if a.is_empty() {
                return Ok(b);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            Ok(a)
        })?;
    let reason = reason.into_inner().expect("lock");
    Ok((sums, examined.into_inner(), reason))
}

/// `100·num/den` rounded half-up to one decimal.
pub fn percentage(num: &BigUint, den: &BigUint) -> String {
    if den.is_zero() {
        return "0.0".into();
    }
    let tenths = (num * 2000u32 + den) / (den * 2u32);
    format!("{}.{}", &tenths / 10u32, &tenths % 10u32)
}

/// A percentage string in tenths (`"74.4"` → 744, `"100"` → 1000).
fn tenths(s: &str) -> Option<u64> {
    let (int, frac) = s.split_once('.').unwrap_or((s, "0"));
    let frac = frac.chars().next().unwrap_or('0').to_digit(10)? as u64;
    Some(int.parse::<u64>().ok()? * 10 + frac)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanKind {
    Saxl,
    Spin,
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanKind::Saxl => "saxl",
            ScanKind::Spin => "spin",
        })
    }
}

/// Which tests a Saxl scan runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaxlCriteria {
    pub at_h_rho: bool,
    pub at_rho: bool,
    pub dominance: bool,
}

impl Default for SaxlCriteria {
    fn default() -> Self {
        SaxlCriteria { at_h_rho: true, at_rho: true, dominance: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub k: usize,
    pub n: usize,
    #[serde(with = "crate::decimal")]
    pub p_n: BigUint,
    /// Partitions actually visited; less than `p(n)` on a partial report.
    pub examined: usize,
    /// `#{μ : [μ](h(ρ_k)) ≠ 0}`.
    pub nonzero_h_rho: Option<usize>,
    /// `#{μ : [μ](ρ_k) ≠ 0}`.
    pub nonzero_rho: Option<usize>,
    /// `#{μ : [μ](τ_k) ≠ 0}`.
    pub nonzero_tau: Option<usize>,
    /// Partitions passing at least one test (the tested one, for spin scans).
    pub union: usize,
    pub percentage: String,
    /// `#{μ comparable to ρ_k in dominance order}`.
    pub dominance_comparable: Option<usize>,
    pub dominance_percentage: Option<String>,
    pub partial: bool,
    pub limit_reason: Option<String>,
    #[serde(skip)]
    pub wall_seconds: f64,
}

impl ScanReport {
    /// Column headers matching [`tsv_row`](Self::tsv_row).
    pub fn tsv_header(&self) -> String {
        let mut cols: Vec<&str> = vec!["k", "n", "p(n)"];
        match self.kind {
            ScanKind::Saxl => {
                if self.nonzero_h_rho.is_some() {
                    cols.push("nonzero_h_rho");
                }
                if self.nonzero_rho.is_some() {
                    cols.push("nonzero_rho");
                }
                cols.push("union");
            }
            ScanKind::Spin => cols.push("nonzero_tau"),
        }
        cols.push("percent");
        if self.dominance_comparable.is_some() {
            cols.extend(["dominance_comparable", "dominance_percent"]);
        }
        if self.partial {
            cols.extend(["examined", "partial"]);
        }
        cols.join("\t")
    }

    /// The row in the column order of the published tables.
    pub fn tsv_row(&self) -> String {
        let mut cols = vec![self.k.to_string(), self.n.to_string(), self.p_n.to_string()];
        match self.kind {
            ScanKind::Saxl => {
                cols.extend(self.nonzero_h_rho.map(|v| v.to_string()));
                cols.extend(self.nonzero_rho.map(|v| v.to_string()));
                cols.push(self.union.to_string());
            }
            ScanKind::Spin => cols.extend(self.nonzero_tau.map(|v| v.to_string())),
        }
        cols.push(self.percentage.clone());
        if let (Some(c), Some(p)) = (self.dominance_comparable, &self.dominance_percentage) {
            cols.push(c.to_string());
            cols.push(p.clone());
        }
        if self.partial {
            cols.push(self.examined.to_string());
            cols.push("PARTIAL".into());
        }
        cols.join("\t")
    }
}

impl Engine {
    /// Nonvanishing counts at `ρ_k` and `h(ρ_k)` over `P(k(k+1)/2)`.
    pub fn saxl_scan(&self, k: usize, criteria: SaxlCriteria, limits: &Limits) -> Result<ScanReport> {
        if k < 2 {
            return Err(Error::OutOfRange("saxl scan needs k >= 2".into()));
        }
        let start = Instant::now();
        let rho = staircase(k);
        let h = rho.principal_hooks();
        let n = rho.n();
        let (sums, examined, reason) = sweep(self, n, limits, |mu| {
            let at_h = criteria.at_h_rho && !self.mn_value_transient(mu, &h)?.is_zero();
            let at_rho = criteria.at_rho && !self.mn_value_transient(mu, &rho)?.is_zero();
            let dom = criteria.dominance && mu.dominance(&rho)?.is_comparable();
            Ok(vec![at_h as usize, at_rho as usize, (at_h || at_rho) as usize, dom as usize])
        })?;
        let sums = if sums.is_empty() { vec![0; 4] } else { sums };
        let p_n = partition_count(n);
        Ok(ScanReport {
            kind: ScanKind::Saxl,
            k,
            n,
            examined,
            nonzero_h_rho: criteria.at_h_rho.then_some(sums[0]),
            nonzero_rho: criteria.at_rho.then_some(sums[1]),
            nonzero_tau: None,
            union: sums[2],
            percentage: percentage(&BigUint::from(sums[2]), &p_n),
            dominance_comparable: criteria.dominance.then_some(sums[3]),
            dominance_percentage: criteria.dominance.then(|| percentage(&BigUint::from(sums[3]), &p_n)),
            partial: reason.is_some(),
            limit_reason: reason,
            p_n,
            wall_seconds: start.elapsed().as_secs_f64(),
        })
    }

    /// Nonvanishing count at `τ_k` over `P(k²)`.
    pub fn spin_scan(&self, k: usize, limits: &Limits) -> Result<ScanReport> {
        if k < 1 {
            return Err(Error::OutOfRange("spin scan needs k >= 1".into()));
        }
        let start = Instant::now();
        let tau = spin_staircase(k);
        let n = tau.n();
        let (sums, examined, reason) =
            sweep(self, n, limits, |mu| Ok(vec![!self.mn_value_transient(mu, &tau)?.is_zero() as usize]))?;
        let count = sums.first().copied().unwrap_or(0);
        let p_n = partition_count(n);
        Ok(ScanReport {
            kind: ScanKind::Spin,
            k,
            n,
            examined,
            nonzero_h_rho: None,
            nonzero_rho: None,
            nonzero_tau: Some(count),
            union: count,
            percentage: percentage(&BigUint::from(count), &p_n),
            dominance_comparable: None,
            dominance_percentage: None,
            partial: reason.is_some(),
            limit_reason: reason,
            p_n,
            wall_seconds: start.elapsed().as_secs_f64(),
        })
    }
}

/// A row of a published count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenRow {
    pub k: usize,
    pub n: usize,
    pub p_n: u64,
    pub nonzero_h_rho: Option<u64>,
    /// `ρ_k` for Saxl rows, `τ_k` for spin rows.
    pub nonzero: u64,
    pub union: u64,
    pub percentage: &'static str,
}

const fn saxl_row(k: usize, n: usize, p_n: u64, h: u64, rho: u64, union: u64, percentage: &'static str) -> GoldenRow {
    GoldenRow { k, n, p_n, nonzero_h_rho: Some(h), nonzero: rho, union, percentage }
}

const fn spin_row(k: usize, n: usize, p_n: u64, tau: u64, percentage: &'static str) -> GoldenRow {
    GoldenRow { k, n, p_n, nonzero_h_rho: None, nonzero: tau, union: tau, percentage }
}

pub const SAXL_GOLDEN: [GoldenRow; 10] = [
    saxl_row(2, 3, 3, 3, 2, 3, "100"),
    saxl_row(3, 6, 11, 5, 6, 9, "81.8"),
    saxl_row(4, 10, 42, 21, 24, 33, "78.6"),
    saxl_row(5, 15, 176, 45, 114, 131, "74.4"),
    saxl_row(6, 21, 792, 231, 524, 607, "76.6"),
    saxl_row(7, 28, 3718, 573, 2408, 2623, "70.5"),
    saxl_row(8, 36, 17977, 3321, 12734, 13567, "75.5"),
    saxl_row(9, 45, 89134, 9321, 67462, 69692, "78.2"),
    saxl_row(10, 55, 451276, 59091, 370590, 381375, "84.5"),
    saxl_row(11, 66, 2323520, 183989, 2036486, 2060003, "88.7"),
];

/// As printed; the `k = 8` row has `p(n)` and the count in swapped columns.
pub const SPIN_GOLDEN: [GoldenRow; 8] = [
    spin_row(1, 1, 1, 1, "100"),
    spin_row(2, 4, 5, 3, "60.0"),
    spin_row(3, 9, 30, 15, "50.0"),
    spin_row(4, 16, 231, 93, "40.3"),
    spin_row(5, 25, 1958, 755, "38.6"),
    spin_row(6, 36, 17977, 7185, "40.0"),
    spin_row(7, 49, 173525, 75430, "43.5"),
    spin_row(8, 64, 851522, 1741630, "48.9"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenComparison {
    pub k: usize,
    pub matches: bool,
    pub mismatches: Vec<String>,
    pub caveat: Option<String>,
}

/// Compares a report with the published row for its `k`.
pub fn compare_golden(report: &ScanReport) -> Result<GoldenComparison> {
    let table: &[GoldenRow] = match report.kind {
        ScanKind::Saxl => &SAXL_GOLDEN,
        ScanKind::Spin => &SPIN_GOLDEN,
    };
    let row = table
        .iter()
        .find(|r| r.k == report.k)
        .ok_or_else(|| Error::OutOfRange(format!("no published {} row for k = {}", report.kind, report.k)))?;
    let mut mismatches = Vec::new();
    let mut caveat = None;
    let mut check = |name: &str, got: Option<u64>, want: u64| {
        if got != Some(want) {
            mismatches.push(format!("{name}: computed {}, published {want}", got.map_or("-".into(), |g| g.to_string())));
        }
    };
    check("n", Some(report.n as u64), row.n as u64);
    let p_n = report.p_n.to_u64();
    let main = match report.kind {
        ScanKind::Saxl => report.nonzero_rho,
        ScanKind::Spin => report.nonzero_tau,
    }
    .map(|v| v as u64);
    let direct = p_n == Some(row.p_n) && main == Some(row.nonzero);
    if !direct && report.kind == ScanKind::Spin && p_n == Some(row.nonzero) && main == Some(row.p_n) {
        caveat = Some(format!(
            "published row lists p(n) = {} and nonzero = {}; computed values match with the two entries swapped",
            row.p_n, row.nonzero
        ));
    } else {
        check("p(n)", p_n, row.p_n);
        check("nonzero", main, row.nonzero);
    }
    if let Some(h) = row.nonzero_h_rho {
        check("nonzero at h(rho)", report.nonzero_h_rho.map(|v| v as u64), h);
        check("union", Some(report.union as u64), row.union);
    }
    if report.partial {
        mismatches.push(format!("partial report: {}", report.limit_reason.clone().unwrap_or_default()));
    }
    if tenths(&report.percentage) != tenths(row.percentage) {
        mismatches.push(format!("percent: computed {}, published {}", report.percentage, row.percentage));
    }
    Ok(GoldenComparison { k: report.k, matches: mismatches.is_empty(), mismatches, caveat })
}

/// Outcome of checking `g(ρ_k, ρ_k, μ) > 0` for every `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaxlVerdict {
    pub k: usize,
    pub n: usize,
    pub total: usize,
    /// `μ` with `g(ρ_k, ρ_k, μ) = 0`.
    pub missing: Vec<Partition>,
    /// Every `μ` with `[μ](ρ_k) ≠ 0` is a constituent.
    pub criterion_ok: bool,
    /// Every hook is a constituent.
    pub hooks_ok: bool,
    /// Every two-row `[n-j, j]` is a constituent.
    pub two_part_ok: bool,
}

impl SaxlVerdict {
    pub fn verified(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Default upper bound on `k` for [`Engine::verify_saxl`].
pub const SAXL_VERIFY_LIMIT: usize = 5;
/// Default upper bound on `k` for [`Engine::verify_spin_saxl`].
pub const SPIN_SAXL_VERIFY_LIMIT: usize = 4;
/// Default upper bound on `n` for [`Engine::conjecture_sweep`].
pub const CONJECTURE_LIMIT: usize = 12;

fn is_two_part(mu: &Partition) -> bool {
    mu.len() <= 2
}

fn is_hook(mu: &Partition) -> bool {
    mu.len() <= 1 || mu.part(1) <= 1
}

impl Engine {
    /// `g(ρ_k, ρ_k, μ)` for all `μ`, with the weights `[ρ_k](α)² |C_α|` shared.
    pub fn saxl_coefficients(&self, k: usize) -> Result<Vec<(Partition, BigUint)>> {
        let rho = staircase(k);
        let n = rho.n();
        let classes: Vec<Partition> = gen_partitions(n, Filter::All).collect();
        let weights: Vec<(Partition, BigInt)> = classes
            .par_iter()
            .map(|a| {
                let v = self.mn_value(&rho, a)?;
                Ok((a.clone(), &v * &v * BigInt::from(a.class_size())))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, w)| !w.is_zero())
            .collect();
        let fact = BigInt::from(factorial(n));
        classes
            .par_iter()
            .map(|mu| {
                let mut s = BigInt::zero();
                for (a, w) in &weights {
                    s += w * self.mn_value(mu, a)?;
                }
                if (&s % &fact) != BigInt::zero() || s < BigInt::zero() {
                    return Err(Error::NonIntegralMultiplicity { label: format!("[{mu}]"), value: format!("{s}/{fact}") });
                }
                Ok((mu.clone(), (s / &fact).try_into().expect("nonnegative")))
            })
            .collect()
    }

    pub fn verify_saxl(&self, k: usize, limit: usize) -> Result<SaxlVerdict> {
        if k < 1 {
            return Err(Error::OutOfRange("k must be at least 1".into()));
        }
        if k > limit {
            return Err(Error::LimitExceeded(format!("verify_saxl k = {k} exceeds the limit {limit}")));
        }
        let rho = staircase(k);
        let coeffs = self.saxl_coefficients(k)?;
        let missing: Vec<Partition> = coeffs.iter().filter(|(_, g)| g.is_zero()).map(|(m, _)| m.clone()).collect();
        let mut criterion_ok = true;
        for (mu, g) in &coeffs {
            if g.is_zero() && !self.mn_value(mu, &rho)?.is_zero() {
                criterion_ok = false;
            }
        }
        Ok(SaxlVerdict {
            k,
            n: rho.n(),
            total: coeffs.len(),
            criterion_ok,
            hooks_ok: !missing.iter().any(is_hook),
            two_part_ok: !missing.iter().any(is_two_part),
            missing,
        })
    }

    /// `⟨τ_k⟩²` contains every `[μ]`; also the `[μ](τ_k) ≠ 0` subset and the hooks.
    pub fn verify_spin_saxl(&self, k: usize, limit: usize) -> Result<SaxlVerdict> {
        if k < 1 {
            return Err(Error::OutOfRange("k must be at least 1".into()));
        }
        if k > limit {
            return Err(Error::LimitExceeded(format!("verify_spin_saxl k = {k} exceeds the limit {limit}")));
        }
        let tau = spin_staircase(k);
        let n = tau.n();
        let d = self.decompose_spin_square(&tau, Sign::Plus, Sign::Plus)?;
        let mut missing = Vec::new();
        let mut criterion_ok = true;
        for mu in gen_partitions(n, Filter::All) {
            if !d.contains(&CharLabel::Ordinary(mu.clone())) {
                if !self.mn_value(&mu, &tau)?.is_zero() {
                    criterion_ok = false;
                }
                missing.push(mu);
            }
        }
        Ok(SaxlVerdict {
            k,
            n,
            total: partition_count(n).to_usize().unwrap_or(usize::MAX),
            criterion_ok,
            hooks_ok: !missing.iter().any(is_hook),
            two_part_ok: !missing.iter().any(is_two_part),
            missing,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureTarget {
    /// Some `⟨λ⟩`, `λ ∈ D⁺(n)`, has every `[μ]` in its square.
    DPlusSquare,
    /// Some spin `χ` of `Ã_n` has every non-faithful irreducible in `χ²`.
    AtildeSpinSquare,
}

impl std::str::FromStr for ConjectureTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d_plus_square" | "d-plus-square" => Ok(ConjectureTarget::DPlusSquare),
            "atilde_spin_square" | "atilde-spin-square" => Ok(ConjectureTarget::AtildeSpinSquare),
            other => Err(Error::OutOfRange(format!("unknown conjecture target {other:?}"))),
        }
    }
}

impl Engine {
    /// All spin characters whose square contains every relevant irreducible.
    /// An empty list is a finding, not an error.
    pub fn conjecture_sweep(&self, n: usize, target: ConjectureTarget, limit: usize) -> Result<Vec<CharLabel>> {
        if n > limit {
            return Err(Error::LimitExceeded(format!("conjecture sweep n = {n} exceeds the limit {limit}")));
        }
        match target {
            ConjectureTarget::DPlusSquare => {
                let all = partition_count(n).to_usize().unwrap_or(usize::MAX);
                let mut out = Vec::new();
                for lambda in gen_partitions(n, Filter::DistinctPlus) {
                    let label = SpinLabel::principal(lambda)?;
                    let d = self.decompose_spin_product(&label, &label)?;
                    if d.len() == all {
                        out.push(label.to_char_label());
                    }
                }
                Ok(out)
            }
            ConjectureTarget::AtildeSpinSquare => {
                let table = self.cached_table(GroupKind::TildeAn, n)?;
                let faithful_free: Vec<&CharLabel> =
                    table.labels().iter().filter(|l| matches!(l, CharLabel::Alternating(..))).collect();
                let mut out = Vec::new();
                for label in tilde_an_spin_labels(n) {
                    let chi = table.row(&label.to_char_label()).expect("row");
                    let d = decompose(&chi.product(chi), &table)?;
                    if faithful_free.iter().all(|l| d.contains(l)) {
                        out.push(label.to_char_label());
                    }
                }
                Ok(out)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityVerdict {
    pub k: usize,
    /// The odd-part partition with Glaisher image `ρ_k`.
    pub alpha: Partition,
    pub total: usize,
    /// `μ` with `[μ](ρ_k) ≢ [μ](α) mod 2`.
    pub failures: Vec<Partition>,
}

impl Engine {
    /// `[μ](ρ_k) ≡ [μ](α) mod 2` for all `μ`, where `α` is the Glaisher preimage of `ρ_k`.
    pub fn parity_check(&self, k: usize, limit: usize) -> Result<ParityVerdict> {
        if k > limit {
            return Err(Error::LimitExceeded(format!("parity check k = {k} exceeds the limit {limit}")));
        }
        let rho = staircase(k);
        let alpha = glaisher_inverse(&rho)?;
        let parts: Vec<Partition> = gen_partitions(rho.n(), Filter::All).collect();
        let failures: Vec<Partition> = parts
            .par_iter()
            .map(|mu| {
                let a = self.mn_value(mu, &rho)?;
                let b = self.mn_value(mu, &alpha)?;
                Ok(((a - b) % 2u32 != BigInt::zero()).then(|| mu.clone()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(ParityVerdict { k, alpha, total: parts.len(), failures })
    }

    /// `#{j ≤ n/2 : [n-j, j](ρ_k) ≠ 0}`, read from the `ρ_k` column.
    pub fn two_part_nonzero_at_rho(&self, k: usize) -> Result<usize> {
        let rho = staircase(k);
        let n = rho.n();
        let mut count = 0;
        for mu in gen_partitions(n, Filter::All).filter(is_two_part) {
            if !self.mn_value(&mu, &rho)?.is_zero() {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// The same count predicted by `d_k(j) ≠ d_k(j-1)` (and `j = 0`).
pub fn two_part_nonzero_predicted(k: usize) -> usize {
    let d = dk_coefficients(k);
    let n = k * (k + 1) / 2;
    1 + (1..=n / 2).filter(|&j| d[j] != d[j - 1]).count()
}
