use std::collections::BTreeSet;

use zerosum::group::{enumerate_abelian_groups, Element, ElementSet, Group};
use zerosum::partition::Status;
use zerosum::skolem::{
    characterize_r_skolem, cyclic_r_skolem_prediction, find_skolem_sequence, good_six, is_skolem_sequence,
    refine_good_six, skolem_counts, skolem_partition, verify_skolem_partition, Refinement, SkolemDomain,
};
use zerosum::Budget;

const BUDGET: Budget = Budget(200_000_000);

fn six_of(g: &Group, c: &Element, d: &Element) -> Vec<Element> {
    let cd = g.add(c, d).unwrap();
    let ncd = g.neg(&cd).unwrap();
    vec![c.clone(), d.clone(), ncd, g.neg(c).unwrap(), g.neg(d).unwrap(), cd]
}

#[test]
fn good_six_subsets_up_to_order_16() {
    for n in 2..=16 {
        for g in enumerate_abelian_groups(n) {
            for c in g.elements() {
                for d in g.elements() {
                    let six = six_of(&g, &c, &d);
                    let distinct: BTreeSet<&Element> = six.iter().collect();
                    let ok = distinct.len() == 6 && six.iter().all(|e| !e.is_zero());
                    let got = good_six(&g, &c, &d);
                    assert_eq!(got.is_ok(), ok, "{g} c={c} d={d}");
                    let Ok(s) = got else { continue };
                    assert!(g.sum(s.members.iter()).unwrap().is_zero());
                    for mode in [Refinement::Pairs, Refinement::Triples] {
                        let p = refine_good_six(&g, &s, mode);
                        let covered: BTreeSet<Element> = p.parts.iter().flatten().cloned().collect();
                        assert_eq!(covered, s.member_set());
                        let want = if mode == Refinement::Pairs { 2 } else { 3 };
                        assert!(p
                            .parts
                            .iter()
                            .all(|q| q.len() == want && g.sum(q.iter()).unwrap().is_zero()));
                    }
                }
            }
        }
    }
}

/// Covers by pairs `{e, -e}` and good six-subsets, trying every `(c, d)`
/// for the smallest uncovered element.
fn naive_skolem(g: &Group, domain: &ElementSet) -> bool {
    fn rec(g: &Group, left: &ElementSet, sixes: usize, twos: usize) -> bool {
        let Some(x) = left.iter().next().cloned() else {
            return sixes == 0 && twos == 0;
        };
        let nx = g.neg(&x).unwrap();
        if twos > 0 && nx != x && left.contains(&nx) {
            let mut rest = left.clone();
            rest.remove(&x);
            rest.remove(&nx);
            if rec(g, &rest, sixes, twos - 1) {
                return true;
            }
        }
        if sixes > 0 {
            for c in left.iter() {
                for d in left.iter() {
                    let six = six_of(g, c, d);
                    let set: BTreeSet<Element> = six.iter().cloned().collect();
                    if set.len() != 6 || !set.contains(&x) || !set.iter().all(|e| left.contains(e)) {
                        continue;
                    }
                    let rest: ElementSet = left.difference(&set).cloned().collect();
                    if rec(g, &rest, sixes - 1, twos) {
                        return true;
                    }
                }
            }
        }
        false
    }
    let (six, two) = skolem_counts(domain.len());
    rec(g, domain, six, two)
}

#[test]
fn star_partitions_exist_for_odd_orders_up_to_27() {
    for n in (3..=27).step_by(2) {
        for g in enumerate_abelian_groups(n) {
            let v = skolem_partition(&g, &SkolemDomain::Star, BUDGET).unwrap();
            assert_eq!(v.status, Status::Feasible, "{g}: {}", v.reason);
            assert!(verify_skolem_partition(&g, &g.nonzero(), v.witness.as_ref().unwrap()));
        }
    }
}

#[test]
fn r_domain_agrees_with_naive_cover_up_to_order_16() {
    for n in 4..=16 {
        for g in enumerate_abelian_groups(n) {
            if g.involution_count() == 0 {
                continue;
            }
            let r = g.non_involutions();
            let v = skolem_partition(&g, &SkolemDomain::NonInvolutions, BUDGET).unwrap();
            assert_ne!(v.status, Status::Unknown);
            assert_eq!(v.is_feasible(), naive_skolem(&g, &r), "{g}");
            if let Some(w) = &v.witness {
                assert!(verify_skolem_partition(&g, &r, w));
            }
        }
    }
}

#[test]
fn r_table_up_to_32_matches_known_cases() {
    let rows = characterize_r_skolem(32, BUDGET).unwrap();
    for row in &rows {
        assert_ne!(row.status, Status::Unknown, "{}", row.group);
        assert!(!row.contradicts_known(), "{} {:?}", row.group, row.status);
    }
    for m in [14usize, 20, 26, 32] {
        let row = rows
            .iter()
            .find(|r| r.group.is_cyclic() && r.group.order() == m)
            .unwrap();
        assert_eq!(Some(row.status == Status::Feasible), cyclic_r_skolem_prediction(m));
    }
}

/// Places the pairs for `k = n, n-1, ..., 1` into the first free slot only.
fn naive_sequence_exists(n: usize) -> bool {
    fn rec(slots: &mut Vec<u32>, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        for i in 0..slots.len() {
            if i + k < slots.len() && slots[i] == 0 && slots[i + k] == 0 {
                slots[i] = k as u32;
                slots[i + k] = k as u32;
                if rec(slots, k - 1) {
                    return true;
                }
                slots[i] = 0;
                slots[i + k] = 0;
            }
        }
        false
    }
    rec(&mut vec![0; 2 * n], n)
}

#[test]
fn skolem_sequences_up_to_9() {
    for n in 1..=9 {
        let v = find_skolem_sequence(n, BUDGET);
        assert!(!matches!(v, zerosum::SearchVerdict::BudgetExceeded));
        assert_eq!(v.is_found(), n % 4 == 0 || n % 4 == 1, "order {n}");
        if n <= 7 {
            assert_eq!(v.is_found(), naive_sequence_exists(n), "order {n}");
        }
        if let Some(s) = v.found() {
            assert!(is_skolem_sequence(s.entries()).unwrap());
        }
    }
    assert!(is_skolem_sequence(&[4, 2, 3, 2, 4, 3, 1, 1]).unwrap());
    assert!(!is_skolem_sequence(&[1, 1, 2, 3, 2, 3]).unwrap());
    assert!(is_skolem_sequence(&[1, 1, 2]).is_err());
}

#[test]
fn even_order_star_domain_is_rejected() {
    let g = Group::cyclic(10).unwrap();
    assert!(skolem_partition(&g, &SkolemDomain::Star, BUDGET).is_err());
}
