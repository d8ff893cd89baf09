use std::collections::BTreeSet;

use saxllab::alternating::{expected_detecting_pairs, find_critical_pairs};
use saxllab::partitions::{gen_partitions, Filter};
use saxllab::{CharLabel, ClassLabel, Engine, GroupKind, Sign};

/// Detecting pairs between classes of one cycle type equal the described set.
#[test]
fn same_type_detecting_pairs_are_exactly_the_described_ones() {
    let e = Engine::new();
    for n in 2..=8 {
        for kind in [GroupKind::Sn, GroupKind::TildeSn, GroupKind::An, GroupKind::TildeAn] {
            let t = e.table(kind, n).unwrap();
            let ctx = t.context();
            let found: BTreeSet<_> = find_critical_pairs(&t, 2)
                .unwrap()
                .into_iter()
                .filter(|p| p.detecting && ctx.classes()[p.x].cycle_type == ctx.classes()[p.y].cycle_type)
                .map(|p| (ctx.classes()[p.x].clone(), ctx.classes()[p.y].clone(), p.differing.into_iter().collect::<BTreeSet<_>>()))
                .collect();
            assert_eq!(found, expected_detecting_pairs(ctx), "{kind}{n}");
        }
    }
}

/// For λ ∈ D ∩ O the two Ã_n classes inside one S̃_n class separate
/// ⟨⟨λ⟩⟩_± and also {μ}_± with h(μ) = λ, each pair antisymmetrically.
#[test]
fn odd_distinct_types_separate_four_characters() {
    let e = Engine::new();
    for n in 3..=8 {
        let t = e.table(GroupKind::TildeAn, n).unwrap();
        let ctx = t.context();
        let pairs = find_critical_pairs(&t, 4).unwrap();
        for lambda in gen_partitions(n, Filter::Distinct).filter(|l| l.is_odd_parts()) {
            let mu = gen_partitions(n, Filter::All).find(|m| m.is_symmetric() && m.principal_hooks() == lambda).unwrap();
            for z in [Sign::Plus, Sign::Minus] {
                let x = ctx.find(&lambda, Some(Sign::Plus), Some(z)).unwrap();
                let y = ctx.find(&lambda, Some(Sign::Minus), Some(z)).unwrap();
                let p = pairs.iter().find(|p| (p.x, p.y) == (x.min(y), x.max(y))).expect("critical");
                let got: BTreeSet<_> = p.differing.iter().cloned().collect();
                let want: BTreeSet<_> = [
                    CharLabel::Alternating(mu.clone(), Some(Sign::Plus)),
                    CharLabel::Alternating(mu.clone(), Some(Sign::Minus)),
                    CharLabel::TildeAlternating(lambda.clone(), Some(Sign::Plus)),
                    CharLabel::TildeAlternating(lambda.clone(), Some(Sign::Minus)),
                ]
                .into_iter()
                .collect();
                assert_eq!(got, want, "~A{n} type {lambda}");
                for [a, b] in [[0, 1], [2, 3]] {
                    let w: Vec<_> = want.iter().collect();
                    let (ra, rb) = (t.row(w[a]).unwrap(), t.row(w[b]).unwrap());
                    assert_eq!(ra.get(x).clone() - ra.get(y).clone(), rb.get(y).clone() - rb.get(x).clone());
                }
            }
        }
    }
}

#[test]
fn described_examples() {
    let e = Engine::new();
    let t = e.table(GroupKind::An, 5).unwrap();
    let pairs = find_critical_pairs(&t, 2).unwrap();
    let x = t.context().find(&"5".parse().unwrap(), Some(Sign::Plus), None).unwrap();
    assert!(pairs.iter().any(|p| p.x == x && p.detecting && p.differing.contains(&"{3,1,1}+".parse().unwrap())));

    let t = e.table(GroupKind::TildeSn, 6).unwrap();
    let pairs = find_critical_pairs(&t, 2).unwrap();
    let lambda = "3,2,1".parse().unwrap();
    let x = t.context().index_of(&ClassLabel { cycle_type: lambda, alt: None, central: Some(Sign::Plus) }).unwrap();
    let p = pairs.iter().find(|p| p.x == x).unwrap();
    assert!(p.detecting);
    assert_eq!(p.differing, vec!["<3,2,1>+".parse().unwrap(), "<3,2,1>-".parse().unwrap()]);
}

/// `ψ(x) = m_1 - m_2` and `max(m_1, m_2) ≥ |ψ(x)|` for every irreducible `ψ`
/// constant and nonzero on a detecting pair.
#[test]
fn detecting_pair_multiplicities() {
    use saxllab::products::lemma_detect_check;
    let e = Engine::new();
    let mut checked = 0;
    for n in 2..=7 {
        for kind in [GroupKind::Sn, GroupKind::TildeSn, GroupKind::An, GroupKind::TildeAn] {
            let t = e.table(kind, n).unwrap();
            for pair in find_critical_pairs(&t, 2).unwrap().into_iter().filter(|p| p.detecting) {
                for psi in t.rows() {
                    if psi.get(pair.x) != psi.get(pair.y) || psi.get(pair.x).is_zero() {
                        continue;
                    }
                    let r = lemma_detect_check(psi, &pair, &t).unwrap();
                    assert!(r.precondition_ok && r.difference_ok && r.bound_ok, "{kind}{n} {}~{}: {r:?}", pair.x_label, pair.y_label);
                    checked += 1;
                }
                let trivial = &t.rows()[t.labels().iter().position(|l| l.partition() == &saxllab::Partition::row(n) && !l.is_spin()).unwrap()];
                let r = lemma_detect_check(trivial, &pair, &t).unwrap();
                assert_eq!((r.m1.clone(), r.m2.clone()), (1u32.into(), 0u32.into()));
            }
        }
    }
    assert!(checked > 0);
}

/// For symmetric `λ`, `[μ](h(λ)) ≠ 0` puts `[μ]` in `[λ]²`.
#[test]
fn principal_hook_values_give_constituents_of_squares() {
    let e = Engine::new();
    for n in 2..=9 {
        for lambda in gen_partitions(n, Filter::All).filter(|l| l.is_symmetric()) {
            let h = lambda.principal_hooks();
            for mu in gen_partitions(n, Filter::All) {
                if e.mn_value(&mu, &h).unwrap() != 0.into() {
                    assert!(e.kron_coeff(&lambda, &lambda, &mu).unwrap() > 0u32.into(), "[{mu}] in [{lambda}]^2");
                }
            }
        }
    }
}
