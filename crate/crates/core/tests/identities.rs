use num_bigint::BigUint;
use saxllab::partitions::{gen_partitions, spin_staircase, staircase, Filter, Partition};
use saxllab::spin::SpinLabel;
use saxllab::{CharLabel, Engine, Sign};

fn choices(lambda: &Partition) -> Vec<SpinLabel> {
    if lambda.in_d_minus() {
        [Sign::Plus, Sign::Minus].map(|s| SpinLabel::with_choice(lambda.clone(), s).unwrap()).to_vec()
    } else {
        vec![SpinLabel::principal(lambda.clone()).unwrap()]
    }
}

#[test]
fn basic_times_hat_is_the_hook_sum() {
    let e = Engine::new();
    for n in 4..=9 {
        let f = e.basic_times_hat(n).unwrap();
        let d = saxllab::products::decompose(&f, &e.cached_table(saxllab::GroupKind::Sn, n).unwrap()).unwrap();
        assert_eq!(d.len(), n, "n = {n}");
        for j in 0..n {
            assert_eq!(d.multiplicity(&CharLabel::Ordinary(Partition::hook(n, j).unwrap())), BigUint::from(1u32));
        }
    }
}

#[test]
fn basic_times_staircase_is_a_power_of_two_times_staircase() {
    let e = Engine::new();
    for (k, a) in [(2usize, 0u32), (3, 0), (4, 1), (5, 2)] {
        let rho = staircase(k);
        let n = rho.n();
        let mut found = false;
        for x in choices(&Partition::row(n)) {
            for y in choices(&rho) {
                let d = e.decompose_spin_product(&x, &y).unwrap();
                if d.len() == 1 && d.multiplicity(&CharLabel::Ordinary(rho.clone())) == BigUint::from(1u32 << a) {
                    found = true;
                }
            }
        }
        assert!(found, "k = {k}");
    }
}

#[test]
fn basic_times_square_is_a_multiple_of_spin_staircase() {
    let e = Engine::new();
    for k in 2..=3usize {
        let tau = spin_staircase(k);
        let n = k * k;
        let want = BigUint::from(1u32 << ((k - 1) / 2));
        let mut found = false;
        for x in choices(&Partition::row(n)) {
            let d = e.decompose_mixed(&Partition::square(k), &x).unwrap();
            let total: BigUint = d.entries.iter().map(|en| en.multiplicity.clone()).sum();
            let on_tau: BigUint = choices(&tau).iter().map(|t| d.multiplicity(&t.to_char_label())).sum();
            if total == want && on_tau == want {
                found = true;
            }
        }
        assert!(found, "k = {k}");
    }
}

#[test]
fn associate_product_contains_exactly_one_linear_character() {
    let e = Engine::new();
    for n in 2..=9 {
        for lambda in gen_partitions(n, Filter::DistinctMinus) {
            let plus = SpinLabel::with_choice(lambda.clone(), Sign::Plus).unwrap();
            let d = e.decompose_spin_product(&plus, &plus.associate()).unwrap();
            let triv = d.contains(&CharLabel::Ordinary(Partition::row(n)));
            let sgn = d.contains(&CharLabel::Ordinary(Partition::column(n)));
            assert!(triv ^ sgn, "<{lambda}>");
        }
    }
}

/// `m_+ - m_- = [μ](λ)`, `max(m_±) ≥ |[μ](λ)|` and the parity for `λ ∈ D⁺`.
#[test]
fn spin_main_theorem_up_to_nine() {
    let e = Engine::new();
    let mut checked = 0;
    for n in 2..=9 {
        for lambda in gen_partitions(n, Filter::Distinct) {
            for mu in gen_partitions(n, Filter::All) {
                if e.mn_value(&mu, &lambda).unwrap() == 0.into() {
                    continue;
                }
                let r = e.spin_main_check(&lambda, &mu).unwrap();
                assert!(r.holds(), "{r:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn nonvanishing_gives_a_constituent_of_spin_times_hat() {
    let e = Engine::new();
    for n in 1..=9 {
        let table = e.cached_table(saxllab::GroupKind::Sn, n).unwrap();
        for lambda in gen_partitions(n, Filter::Distinct) {
            let d = saxllab::products::decompose(&e.spin_times_hat(&lambda).unwrap(), &table).unwrap();
            for mu in gen_partitions(n, Filter::All) {
                if e.mn_value(&mu, &lambda).unwrap() != 0.into() {
                    assert!(d.contains(&CharLabel::Ordinary(mu.clone())), "[{mu}] in <{lambda}>·hat");
                }
            }
        }
    }
}
