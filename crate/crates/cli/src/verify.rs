//! The `verify` suites: each check yields one PASS/FAIL line.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use saxllab::alternating::{expected_detecting_pairs, find_critical_pairs};
use saxllab::oracle::{kostka_character_table, QFunctions};
use saxllab::partitions::{gen_partitions, spin_staircase, staircase, Filter, Partition};
use saxllab::products::decompose;
use saxllab::scans::{
    compare_golden, dk_by_recursion, dk_coefficients, unimodality_report, ConjectureTarget, Limits, SaxlCriteria,
    CONJECTURE_LIMIT, GOLDEN_EXCEPTIONS,
};
use saxllab::spin::SpinLabel;
use saxllab::{check_orthogonality, CharLabel, Engine, GroupKind, Result, Sign};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Paper,
    Orthogonality,
    Oracle,
}

impl Suite {
    pub fn default_limit(self) -> usize {
        match self {
            Suite::Paper => 5,
            Suite::Orthogonality => 9,
            Suite::Oracle => 7,
        }
    }
}

pub fn run(engine: &Engine, suite: Suite, limit: usize, limits: &Limits) -> Result<Vec<Check>> {
    match suite {
        Suite::Paper => paper(engine, limit, limits),
        Suite::Orthogonality => orthogonality(engine, limit),
        Suite::Oracle => oracle(engine, limit),
    }
}

fn orthogonality(engine: &Engine, limit: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=limit {
        for kind in [GroupKind::Sn, GroupKind::TildeSn, GroupKind::An, GroupKind::TildeAn] {
            let r = check_orthogonality(&*engine.cached_table(kind, n)?)?;
            let detail = if r.holds() {
                String::new()
            } else {
                format!("{} row and {} column failures", r.row_failures.len(), r.column_failures.len())
            };
            out.push(Check::new(format!("orthogonality {kind}{n}"), r.holds(), detail));
        }
    }
    Ok(out)
}

fn oracle(engine: &Engine, limit: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut q = QFunctions::new();
    for n in 1..=limit.min(10) {
        let mut bad = 0;
        for (lambda, row) in kostka_character_table(n)? {
            for (alpha, v) in row {
                if engine.mn_value(&lambda, &alpha)? != v {
                    bad += 1;
                }
            }
        }
        out.push(Check::new(format!("murnaghan-nakayama vs kostka n={n}"), bad == 0, format!("{bad} disagreements")));
    }
    for n in 1..=limit {
        let mut bad = 0;
        for lambda in gen_partitions(n, Filter::Distinct) {
            for (alpha, v) in q.spin_column(&lambda)? {
                if engine.morris_value(&lambda, &alpha)? != v {
                    bad += 1;
                }
            }
        }
        out.push(Check::new(format!("bar recursion vs q-functions n={n}"), bad == 0, format!("{bad} disagreements")));
    }
    Ok(out)
}

fn choices(lambda: &Partition) -> Result<Vec<SpinLabel>> {
    if lambda.in_d_minus() {
        [Sign::Plus, Sign::Minus].into_iter().map(|s| SpinLabel::with_choice(lambda.clone(), s)).collect()
    } else {
        Ok(vec![SpinLabel::principal(lambda.clone())?])
    }
}

fn paper(engine: &Engine, limit: usize, limits: &Limits) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    for k in 2..=8 {
        let r = engine.saxl_scan(k, SaxlCriteria::default(), limits)?;
        let c = compare_golden(&r)?;
        out.push(Check::new(format!("saxl table row k={k}"), c.matches, c.mismatches.join("; ")));
    }
    for k in 1..=6 {
        let r = engine.spin_scan(k, limits)?;
        let c = compare_golden(&r)?;
        out.push(Check::new(format!("spin table row k={k}"), c.matches, c.mismatches.join("; ")));
    }

    let mut bad = Vec::new();
    for (k, want) in GOLDEN_EXCEPTIONS {
        if unimodality_report(k)?.exceptional != want {
            bad.push(k);
        }
    }
    for k in 12..=25 {
        if !unimodality_report(k)?.exceptional.is_empty() {
            bad.push(k);
        }
    }
    out.push(Check::new("plateaus of d_k for k=4..25", bad.is_empty(), format!("{bad:?}")));
    let bad: Vec<usize> = (1..=40).filter(|&k| dk_by_recursion(k) != dk_coefficients(k)).collect();
    out.push(Check::new("d_k recursion k<=40", bad.is_empty(), format!("{bad:?}")));

    let sn = |n| engine.cached_table(GroupKind::Sn, n);
    let mut bad = Vec::new();
    for n in 4..=9 {
        let d = decompose(&engine.basic_times_hat(n)?, &*sn(n)?)?;
        let hooks = (0..n).all(|j| d.multiplicity(&CharLabel::Ordinary(Partition::hook(n, j).expect("hook"))) == BigUint::from(1u32));
        if !(hooks && d.len() == n) {
            bad.push(n);
        }
    }
    out.push(Check::new("basic spin times its sum is the hook sum, n=4..9", bad.is_empty(), format!("{bad:?}")));

    let mut bad = Vec::new();
    for (k, a) in [(2usize, 0u32), (3, 0), (4, 1), (5, 2)] {
        let rho = staircase(k);
        let want = BigUint::from(1u32 << a);
        let mut found = false;
        for x in choices(&Partition::row(rho.n()))? {
            for y in choices(&rho)? {
                let d = engine.decompose_spin_product(&x, &y)?;
                found |= d.len() == 1 && d.multiplicity(&CharLabel::Ordinary(rho.clone())) == want;
            }
        }
        if !found {
            bad.push(k);
        }
    }
    out.push(Check::new("basic spin times staircase spin, k=2..5", bad.is_empty(), format!("{bad:?}")));

    let mut bad = Vec::new();
    for k in 2..=3usize {
        let tau = spin_staircase(k);
        let want = BigUint::from(1u32 << ((k - 1) / 2));
        let mut found = false;
        for x in choices(&Partition::row(k * k))? {
            let d = engine.decompose_mixed(&Partition::square(k), &x)?;
            let total: BigUint = d.entries.iter().map(|e| e.multiplicity.clone()).sum();
            let on_tau: BigUint = choices(&tau)?.iter().map(|t| d.multiplicity(&t.to_char_label())).sum();
            found |= total == want && on_tau == want;
        }
        if !found {
            bad.push(k);
        }
    }
    out.push(Check::new("basic spin times square, k=2,3", bad.is_empty(), format!("{bad:?}")));

    for k in 1..=limit {
        let v = engine.verify_saxl(k, limit)?;
        let ok = v.verified() && v.criterion_ok && v.hooks_ok && v.two_part_ok;
        out.push(Check::new(format!("staircase square contains everything, k={k}"), ok, format!("missing {:?}", v.missing)));
    }
    for k in 2..=limit.min(4) {
        let v = engine.verify_spin_saxl(k, 4)?;
        let ok = v.verified() && v.criterion_ok && v.hooks_ok;
        out.push(Check::new(format!("spin staircase square contains everything, k={k}"), ok, format!("missing {:?}", v.missing)));
    }

    let mut failures = 0;
    let mut checked = 0;
    for n in 2..=9 {
        for lambda in gen_partitions(n, Filter::Distinct) {
            for mu in gen_partitions(n, Filter::All) {
                if engine.mn_value(&mu, &lambda)? == BigInt::from(0) {
                    continue;
                }
                checked += 1;
                if !engine.spin_main_check(&lambda, &mu)?.holds() {
                    failures += 1;
                }
            }
        }
    }
    out.push(Check::new("spin multiplicity differences, n<=9", failures == 0, format!("{failures} of {checked}")));

    let mut bad = Vec::new();
    for n in 2..=8 {
        for kind in [GroupKind::Sn, GroupKind::TildeSn, GroupKind::An, GroupKind::TildeAn] {
            let t = engine.cached_table(kind, n)?;
            let ctx = t.context();
            let found: BTreeSet<_> = find_critical_pairs(&t, 2)?
                .into_iter()
                .filter(|p| p.detecting && ctx.classes()[p.x].cycle_type == ctx.classes()[p.y].cycle_type)
                .map(|p| (ctx.classes()[p.x].clone(), ctx.classes()[p.y].clone(), p.differing.into_iter().collect::<BTreeSet<_>>()))
                .collect();
            if found != expected_detecting_pairs(ctx) {
                bad.push(format!("{kind}{n}"));
            }
        }
    }
    out.push(Check::new("detecting pairs within a cycle type, n<=8", bad.is_empty(), bad.join(",")));

    for k in 1..=limit {
        let v = engine.parity_check(k, limit)?;
        out.push(Check::new(format!("glaisher parity k={k}"), v.failures.is_empty(), format!("{:?}", v.failures)));
    }

    let r = engine.saxl_scan(9, SaxlCriteria { at_h_rho: false, at_rho: false, dominance: true }, limits)?;
    let c = r.dominance_comparable.unwrap_or(0);
    out.push(Check::new("dominance-comparable below half at k=9", !r.partial && BigUint::from(2 * c) < r.p_n, format!("{c} of {}", r.p_n)));

    let none5 = engine.conjecture_sweep(5, ConjectureTarget::DPlusSquare, CONJECTURE_LIMIT)?;
    let some4 = engine.conjecture_sweep(4, ConjectureTarget::DPlusSquare, CONJECTURE_LIMIT)?;
    let some6 = engine.conjecture_sweep(6, ConjectureTarget::AtildeSpinSquare, CONJECTURE_LIMIT)?;
    out.push(Check::new(
        "spin square witnesses at n=4,5,6",
        none5.is_empty() && !some4.is_empty() && !some6.is_empty(),
        format!("{} / {} / {}", some4.len(), none5.len(), some6.len()),
    ));
    Ok(out)
}
