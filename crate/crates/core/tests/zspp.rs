mod common;

use common::zero_sum_block_profiles;
use zerosum::group::{enumerate_abelian_groups, Element, Group};
use zerosum::partition::Status;
use zerosum::zspp::{groups_between, integer_partitions, Outcome, ZsppChecker};

fn partition_count(n: usize, min: usize) -> usize {
    // Partitions of n into parts >= min, by the largest part.
    fn p(n: usize, max: usize, min: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (min..=max.min(n)).map(|k| p(n - k, k, min)).sum()
    }
    p(n, n, min.max(1))
}

#[test]
fn integer_partitions_are_complete_and_ordered() {
    for n in 0..=24 {
        for min in 1..=4 {
            let all: Vec<Vec<usize>> = integer_partitions(n, min).map(|p| p.0).collect();
            assert_eq!(all.len(), partition_count(n, min), "n={n} min={min}");
            for p in &all {
                assert_eq!(p.iter().sum::<usize>(), n);
                assert!(p.windows(2).all(|w| w[0] >= w[1]));
                assert!(p.iter().all(|&x| x >= min));
            }
            assert!(all.windows(2).all(|w| w[0] > w[1]), "reverse lexicographic");
        }
    }
}

#[test]
fn two_zspp_criterion_up_to_16() {
    let report = ZsppChecker::default().check_zeng(16);
    assert!(report.confirmed(), "{}", report.to_json_lines());
    assert_eq!(report.verdicts.len(), groups_between(3, 16).len());
}

#[test]
fn failures_are_confirmed_by_naive_enumeration() {
    let checker = ZsppChecker::default();
    for n in 3..=12 {
        for g in enumerate_abelian_groups(n) {
            let domain: Vec<Element> = g.nonzero().into_iter().collect();
            let profiles = zero_sum_block_profiles(&g, &domain);
            for v in checker.zspp_profile(&g) {
                let x: usize = v.property.trim_end_matches("-zspp").parse().unwrap();
                let all_realized = integer_partitions(n - 1, x).all(|p| profiles.contains(p.parts()));
                assert_eq!(v.outcome == Outcome::Holds, all_realized, "{g} {}", v.property);
                if let Some(c) = &v.counterexample {
                    assert!(!profiles.contains(c.sizes.parts()), "{g} {}", c.sizes);
                }
            }
        }
    }
}

#[test]
fn proven_properties_for_groups_with_several_involutions() {
    let checker = ZsppChecker::default();
    for g in groups_between(4, 16).iter().filter(|g| g.involution_count() > 1) {
        let four = checker.check_4zspp(g).unwrap();
        assert!(four.holds(), "{g}");
        let mixed = checker.check_mixed_23(g).unwrap();
        assert!(!mixed.is_mismatch() && mixed.outcome != Outcome::Unknown, "{g}");
        let three = checker.check_3zspp_conjecture(g).unwrap();
        assert!(!three.is_mismatch(), "{g}");
        for m in (3..=g.order()).filter(|m| g.order() % m == 0) {
            assert!(checker.check_divisor_partition(g, m).unwrap().holds(), "{g} m={m}");
        }
    }
}

#[test]
fn mixed_sizes_fail_on_z2_z2_z4() {
    let g = Group::new(&[2, 2, 4]).unwrap();
    let v = ZsppChecker::default().check_mixed_23(&g).unwrap();
    assert_eq!(v.outcome, Outcome::Fails);
    assert_eq!(v.expected, Some(false));
    assert_eq!(v.counterexample.unwrap().status, Status::Infeasible);
}

#[test]
fn elementary_two_groups_have_3zspp() {
    let checker = ZsppChecker::default();
    for n in 2..=4 {
        let g = Group::new(&vec![2; n]).unwrap();
        assert!(checker.has_x_zspp(&g, 3).unwrap().holds(), "{g}");
    }
}

#[test]
fn one_involution_groups() {
    let checker = ZsppChecker::default();
    for g in groups_between(2, 16).iter().filter(|g| g.involution_count() == 1) {
        let r = checker.check_one_involution(g).unwrap();
        assert!(r.parts_4.holds(), "{g}");
        if let Some(c) = &r.cyclic_2_3 {
            assert!(c.holds(), "{g}");
        }
        assert_ne!(r.conjecture.outcome, Outcome::Unknown, "{g}");
    }
    assert!(checker.check_one_involution(&Group::new(&[2, 2]).unwrap()).is_err());
}
