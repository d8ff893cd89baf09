use num_bigint::BigUint;
use saxllab::partitions::{gen_partitions, staircase, Filter, Partition};
use saxllab::scans::*;
use saxllab::Engine;

#[test]
fn dk_routes_agree() {
    for k in 1..=40 {
        let t = dk_table(k).unwrap();
        assert!(t.is_symmetric(), "k = {k}");
        assert_eq!(dk_by_recursion(k), t.coefficients);
        let total: BigUint = t.coefficients.iter().sum();
        assert_eq!(total, BigUint::from(2u32).pow(k as u32));
    }
    for k in 1..=DK_ENUMERATION_LIMIT {
        assert_eq!(dk_by_enumeration(k), dk_coefficients(k));
    }
}

#[test]
fn exceptional_plateaus() {
    for (k, want) in GOLDEN_EXCEPTIONS {
        assert_eq!(unimodality_report(k).unwrap().exceptional, want, "k = {k}");
    }
    for k in 12..=25 {
        let r = unimodality_report(k).unwrap();
        assert!(r.exceptional.is_empty(), "k = {k}: {:?}", r.exceptional);
        assert!(r.equalities.iter().all(|&m| m < 5));
    }
}

#[test]
fn golden_saxl_rows() {
    let e = Engine::new();
    for k in 2..=7 {
        let r = e.saxl_scan(k, SaxlCriteria::default(), &Limits::none()).unwrap();
        let c = compare_golden(&r).unwrap();
        assert!(c.matches, "{:?}", c.mismatches);
    }
}

#[test]
fn golden_spin_rows() {
    let e = Engine::new();
    for k in 1..=5 {
        let r = e.spin_scan(k, &Limits::none()).unwrap();
        let c = compare_golden(&r).unwrap();
        assert!(c.matches && c.caveat.is_none(), "{:?}", c.mismatches);
    }
}

#[test]
fn transposed_spin_row_is_reported() {
    let r = ScanReport {
        kind: ScanKind::Spin,
        k: 8,
        n: 64,
        p_n: BigUint::from(1741630u32),
        examined: 1741630,
        nonzero_h_rho: None,
        nonzero_rho: None,
        nonzero_tau: Some(851522),
        union: 851522,
        percentage: percentage(&BigUint::from(851522u32), &BigUint::from(1741630u32)),
        dominance_comparable: None,
        dominance_percentage: None,
        partial: false,
        limit_reason: None,
        wall_seconds: 0.0,
    };
    let c = compare_golden(&r).unwrap();
    assert!(c.matches);
    assert!(c.caveat.is_some());
}

#[test]
fn scans_do_not_depend_on_the_memo() {
    let warm = Engine::new();
    let first = warm.saxl_scan(6, SaxlCriteria::default(), &Limits::none()).unwrap();
    let again = warm.saxl_scan(6, SaxlCriteria::default(), &Limits::none()).unwrap();
    let cold = Engine::new().saxl_scan(6, SaxlCriteria::default(), &Limits::none()).unwrap();
    assert_eq!(first.tsv_row(), again.tsv_row());
    assert_eq!(first.tsv_row(), cold.tsv_row());
    let rho = staircase(6);
    let direct = gen_partitions(21, Filter::All).filter(|m| warm.mn_value(m, &rho).unwrap() != 0.into()).count();
    assert_eq!(first.nonzero_rho, Some(direct));
}

#[test]
fn scans_do_not_depend_on_the_worker_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let criteria = SaxlCriteria { dominance: true, ..Default::default() };
        let r = pool.install(|| Engine::new().saxl_scan(6, criteria, &Limits::none()).unwrap());
        ScanReport { wall_seconds: 0.0, ..r }
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn two_part_counts_follow_dk() {
    let e = Engine::new();
    for k in 2..=8 {
        assert_eq!(e.two_part_nonzero_at_rho(k).unwrap(), two_part_nonzero_predicted(k), "k = {k}");
    }
}

#[test]
fn saxl_squares_up_to_five() {
    let e = Engine::new();
    for k in 1..=5 {
        let v = e.verify_saxl(k, SAXL_VERIFY_LIMIT).unwrap();
        assert!(v.verified() && v.criterion_ok && v.hooks_ok && v.two_part_ok, "k = {k}: {:?}", v.missing);
    }
    assert_eq!(e.verify_saxl(4, 5).unwrap().total, 42);
    assert!(e.verify_saxl(6, 5).is_err());
}

#[test]
fn spin_saxl_squares_up_to_four() {
    let e = Engine::new();
    for k in 2..=4 {
        let v = e.verify_spin_saxl(k, SPIN_SAXL_VERIFY_LIMIT).unwrap();
        assert!(v.verified() && v.criterion_ok && v.hooks_ok, "k = {k}: {:?}", v.missing);
    }
}

#[test]
fn glaisher_parity() {
    let e = Engine::new();
    for k in 1..=5 {
        let v = e.parity_check(k, 5).unwrap();
        assert!(v.failures.is_empty(), "k = {k}: {:?}", v.failures);
    }
    assert_eq!(e.parity_check(3, 5).unwrap().alpha, Partition::new(vec![3, 1, 1, 1]).unwrap());
}

#[test]
fn dominance_fraction_below_half_at_nine() {
    let r = Engine::new()
        .saxl_scan(9, SaxlCriteria { at_h_rho: false, at_rho: false, dominance: true }, &Limits::none())
        .unwrap();
    let c = BigUint::from(r.dominance_comparable.unwrap());
    assert!(c * 2u32 < r.p_n);
}

#[test]
fn conjecture_examples() {
    let e = Engine::new();
    assert!(e.conjecture_sweep(5, ConjectureTarget::DPlusSquare, CONJECTURE_LIMIT).unwrap().is_empty());
    assert!(!e.conjecture_sweep(4, ConjectureTarget::DPlusSquare, CONJECTURE_LIMIT).unwrap().is_empty());
    assert!(!e.conjecture_sweep(6, ConjectureTarget::AtildeSpinSquare, CONJECTURE_LIMIT).unwrap().is_empty());
    assert!(e.conjecture_sweep(13, ConjectureTarget::DPlusSquare, CONJECTURE_LIMIT).is_err());
}
