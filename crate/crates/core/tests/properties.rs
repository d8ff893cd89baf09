use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;
use saxllab::alternating::{an_labels, tilde_an_spin_labels};
use saxllab::ordinary::{hook_sum_value, two_part_value};
use saxllab::partitions::{factorial, gen_partitions, glaisher, glaisher_inverse, staircase, Filter, Partition};
use saxllab::spin::SpinLabel;
use saxllab::{ClassFunction, ClassLabel, Engine, GroupContext, GroupKind, Sign};

fn partition_of(max_n: usize, filter: Filter) -> impl Strategy<Value = Partition> {
    (1..=max_n)
        .prop_map(move |n| gen_partitions(n, filter).collect::<Vec<_>>())
        .prop_filter("nonempty", |v| !v.is_empty())
        .prop_flat_map(proptest::sample::select)
}

fn triple(max_n: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| {
        let all: Vec<Partition> = gen_partitions(n, Filter::All).collect();
        let s = proptest::sample::select(all);
        (s.clone(), s.clone(), s)
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition_of(12, Filter::All)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().n(), l.n());
    }

    #[test]
    fn glaisher_round_trips_from_odd(a in partition_of(30, Filter::Odd)) {
        let d = glaisher(&a).unwrap();
        prop_assert!(d.is_distinct());
        prop_assert_eq!(glaisher_inverse(&d).unwrap(), a);
    }

    #[test]
    fn glaisher_round_trips_from_distinct(d in partition_of(30, Filter::Distinct)) {
        let a = glaisher_inverse(&d).unwrap();
        prop_assert!(a.is_odd_parts());
        prop_assert_eq!(glaisher(&a).unwrap(), d);
    }

    #[test]
    fn principal_hooks_sum_to_size(l in partition_of(12, Filter::All)) {
        prop_assert_eq!(l.principal_hooks().n(), l.n());
    }

    #[test]
    fn conjugate_column_is_signed(l in partition_of(9, Filter::All), seed in any::<prop::sample::Index>()) {
        let classes: Vec<Partition> = gen_partitions(l.n(), Filter::All).collect();
        let a = seed.get(&classes);
        let e = Engine::global();
        let v = e.mn_value(&l, a).unwrap();
        let sign = if (l.n() - a.len()) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(e.mn_value(&l.conjugate(), a).unwrap(), sign * v);
    }

    #[test]
    fn kronecker_coefficients_are_symmetric((l, m, v) in triple(7)) {
        let e = Engine::global();
        let g = e.kron_coeff(&l, &m, &v).unwrap();
        for (a, b, c) in [(&l, &v, &m), (&m, &l, &v), (&m, &v, &l), (&v, &l, &m), (&v, &m, &l)] {
            prop_assert_eq!(&e.kron_coeff(a, b, c).unwrap(), &g);
        }
        prop_assert_eq!(e.kron_coeff(&l.conjugate(), &m.conjugate(), &v).unwrap(), g);
    }
}

#[test]
fn distinct_and_odd_counts_agree() {
    for n in 0..=30 {
        let d = gen_partitions(n, Filter::Distinct).count();
        let dp = gen_partitions(n, Filter::DistinctPlus).count();
        let dm = gen_partitions(n, Filter::DistinctMinus).count();
        assert_eq!(dp + dm, d);
        assert_eq!(gen_partitions(n, Filter::Odd).count(), d, "n = {n}");
    }
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 0..=12 {
        let total: BigUint = gen_partitions(n, Filter::All).map(|a| a.class_size()).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn column_orthogonality() {
    let e = Engine::new();
    for n in 1..=8 {
        let ps: Vec<Partition> = gen_partitions(n, Filter::All).collect();
        for a in &ps {
            for b in &ps {
                let s: BigInt = ps.iter().map(|l| e.mn_value(l, a).unwrap() * e.mn_value(l, b).unwrap()).sum();
                let want = if a == b { BigInt::from(a.centralizer_order()) } else { BigInt::zero() };
                assert_eq!(s, want, "({a}), ({b})");
            }
        }
    }
}

#[test]
fn hook_sum_matches_hooks() {
    let e = Engine::new();
    for n in 1..=9 {
        for a in gen_partitions(n, Filter::All) {
            let s: BigInt = (0..n).map(|j| e.mn_value(&Partition::hook(n, j).unwrap(), &a).unwrap()).sum();
            assert_eq!(s, hook_sum_value(&a), "({a})");
        }
    }
}

#[test]
fn two_part_values_from_dk() {
    let e = Engine::new();
    for k in 1..=6 {
        let rho = staircase(k);
        let n = rho.n();
        for j in 0..=n / 2 {
            let mu = Partition::new(if j == 0 { vec![n as u16] } else { vec![(n - j) as u16, j as u16] }).unwrap();
            assert_eq!(two_part_value(k, j).unwrap(), e.mn_value(&mu, &rho).unwrap(), "k = {k}, j = {j}");
        }
    }
}

#[test]
fn bar_recursion_matches_basic_spin_on_rows() {
    use saxllab::ordinary::basic_spin_value;
    let e = Engine::new();
    for n in 1..=10 {
        for a in gen_partitions(n, Filter::Odd) {
            let got = saxllab::ExactValue::from_int(e.morris_value(&Partition::row(n), &a).unwrap());
            assert_eq!(got, basic_spin_value(n, &a, Sign::Plus).unwrap(), "<{n}>({a})");
        }
    }
}

#[test]
fn split_characters_sum_to_restrictions() {
    let e = Engine::new();
    for n in 2..=9 {
        let an = GroupContext::alternating(n);
        for l in an_labels(n).into_iter().filter(|l| l.kind() == Some(Sign::Plus)) {
            let sum = e.an_character(&l, &an).unwrap().sum(&e.an_character(&l.conjugate(), &an).unwrap());
            assert_eq!(sum, e.ordinary_character(l.mu(), &an).unwrap(), "{{{}}}", l.mu());
        }
        let atn = GroupContext::tilde_alternating(n);
        let tsn = GroupContext::tilde_symmetric(n);
        for l in tilde_an_spin_labels(n).into_iter().filter(|l| l.kind() == Some(Sign::Plus)) {
            let sum = e.atilde_spin_character(&l, &atn).unwrap().sum(&e.atilde_spin_character(&l.conjugate(), &atn).unwrap());
            let label = SpinLabel::principal(l.lambda().clone()).unwrap();
            let restricted = ClassFunction::try_from_fn(&atn, |c| {
                let class = ClassLabel { alt: None, ..c.clone() };
                let class = if tsn.index_of(&class).is_some() { class } else { ClassLabel { central: None, ..class } };
                e.spin_value(&label, &class)
            })
            .unwrap();
            assert_eq!(sum, restricted, "<<{}>>", l.lambda());
        }
    }
}

#[test]
fn decompositions_reconstruct() {
    let e = Engine::new();
    for n in 2..=9 {
        for kind in [GroupKind::Sn, GroupKind::TildeSn, GroupKind::An, GroupKind::TildeAn] {
            let t = e.cached_table(kind, n).unwrap();
            let labels = t.labels();
            let (a, b) = (&t.rows()[labels.len() / 2], &t.rows()[labels.len() - 1]);
            let f = a.product(b);
            let d = saxllab::products::decompose(&f, &t).unwrap();
            let mut rebuilt = ClassFunction::zero(f.len());
            for en in &d.entries {
                rebuilt.add_scaled(t.row(&en.label).unwrap(), &BigInt::from(en.multiplicity.clone()));
            }
            assert_eq!(rebuilt, f, "{kind}{n}");
        }
    }
}

/// Reading spin squares on `C^-` instead of `C^+` changes nothing.
#[test]
fn spin_squares_ignore_the_class_halves() {
    let e = Engine::new();
    for n in 2..=8 {
        let sn = GroupContext::symmetric(n);
        let tsn = GroupContext::tilde_symmetric(n);
        let table = e.cached_table(GroupKind::Sn, n).unwrap();
        for lambda in gen_partitions(n, Filter::Distinct) {
            for (eps, delta) in [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus)] {
                let a = SpinLabel::with_choice(lambda.clone(), eps).unwrap();
                let b = SpinLabel::with_choice(lambda.clone(), delta).unwrap();
                let on_minus = ClassFunction::try_from_fn(&sn, |c| {
                    let central = tsn.find(&c.cycle_type, None, Some(Sign::Minus)).map(|_| Sign::Minus);
                    let class = ClassLabel { cycle_type: c.cycle_type.clone(), alt: None, central };
                    Ok::<_, saxllab::Error>(&e.spin_value(&a, &class)? * &e.spin_value(&b, &class)?)
                })
                .unwrap();
                let swapped = saxllab::products::decompose(&on_minus, &table).unwrap();
                assert_eq!(swapped, e.decompose_spin_square(&lambda, eps, delta).unwrap(), "<{lambda}>");
            }
        }
    }
}
