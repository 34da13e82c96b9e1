//! Finite checks of zero-sum partition properties.
//!
//! A group of order `m` has the x-zero-sum partition property (x-ZSPP) when
//! every integer partition of `m - 1` with all parts `≥ x` is realizable in
//! `Γ*` with zero targets. The checkers here enumerate the relevant integer
//! partitions, hand each one to the exact solver, and compare the outcome
//! with what the known theorems predict.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{enumerate_abelian_groups, Group};
use crate::partition::{realize_partition, DomainKind, FeasibilityVerdict, RealizationInstance, Status};
use crate::search::Budget;

/// A non-increasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IntegerPartition(pub Vec<usize>);

impl IntegerPartition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_of(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

/// Partitions of `n` with every part `≥ min_part`, in reverse
/// lexicographic order: `(6, 2)` gives `[6], [4,2], [3,3], [2,2,2]`.
pub fn integer_partitions(n: usize, min_part: usize) -> IntegerPartitions {
    let min_part = min_part.max(1);
    let first = if n == 0 {
        Some(Vec::new())
    } else if n >= min_part {
        Some(vec![n])
    } else {
        None
    };
    IntegerPartitions { next: first, min_part }
}

pub struct IntegerPartitions {
    next: Option<Vec<usize>>,
    min_part: usize,
}

/// Whether `x` splits into parts of size in `[m, p]`.
fn fillable(x: usize, m: usize, p: usize) -> bool {
    x == 0 || (x >= m && (x / m) * p >= x)
}

/// Lexicographically largest parts `≤ cap`, all `≥ m`, summing to `x`.
fn fill(mut x: usize, cap: usize, m: usize, out: &mut Vec<usize>) {
    while x > 0 {
        let mut q = cap.min(x);
        while !fillable(x - q, m, q) {
            q -= 1;
        }
        out.push(q);
        x -= q;
    }
}

impl Iterator for IntegerPartitions {
    type Item = IntegerPartition;

    fn next(&mut self) -> Option<IntegerPartition> {
        let cur = self.next.take()?;
        let m = self.min_part;
        let mut succ = None;
        'outer: for i in (0..cur.len()).rev() {
            let tail: usize = cur[i..].iter().sum();
            for q in (m..cur[i]).rev() {
                if fillable(tail - q, m, q) {
                    let mut v = cur[..i].to_vec();
                    v.push(q);
                    fill(tail - q, q, m, &mut v);
                    succ = Some(v);
                    break 'outer;
                }
            }
        }
        self.next = succ;
        Some(IntegerPartition(cur))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub sizes: IntegerPartition,
    pub status: Status,
    pub reason: String,
}

/// The verdict of one property on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub group: Group,
    pub involutions: usize,
    pub outcome: Outcome,
    pub counterexample: Option<Counterexample>,
    /// Sub-instances found feasible.
    pub witness_count: usize,
    /// Sub-instances checked.
    pub instances: usize,
    /// What the theorem (if any) predicts for this group.
    pub expected: Option<bool>,
    pub note: String,
}

impl PropertyVerdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    /// Definite outcome that contradicts the prediction.
    pub fn is_mismatch(&self) -> bool {
        matches!(
            (self.expected, self.outcome),
            (Some(true), Outcome::Fails) | (Some(false), Outcome::Holds)
        )
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

/// A family of verdicts for one theorem or conjecture over a range of groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub property: String,
    pub verdicts: Vec<PropertyVerdict>,
}

impl TheoremReport {
    pub fn mismatches(&self) -> Vec<&PropertyVerdict> {
        self.verdicts.iter().filter(|v| v.is_mismatch()).collect()
    }

    pub fn unknowns(&self) -> Vec<&PropertyVerdict> {
        self.verdicts.iter().filter(|v| v.outcome == Outcome::Unknown).collect()
    }

    /// No mismatches and no unknowns.
    pub fn confirmed(&self) -> bool {
        self.mismatches().is_empty() && self.unknowns().is_empty()
    }

    pub fn to_json_lines(&self) -> String {
        self.verdicts.iter().map(|v| v.to_json_line() + "\n").collect()
    }
}

type CacheKey = (Vec<u32>, DomainKind, Vec<usize>);

/// Runs zero-target realization checks, memoizing sub-instance verdicts.
///
/// Zero-target feasibility depends only on the group, the domain and the
/// multiset of sizes, so one cache serves every property.
pub struct ZsppChecker {
    budget: Budget,
    cache: Mutex<HashMap<CacheKey, (Status, String)>>,
}

impl ZsppChecker {
    pub fn new(budget: Budget) -> Self {
        ZsppChecker {
            budget,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Zero-target realization of `sizes` on the given domain.
    pub fn realize(&self, group: &Group, domain: DomainKind, sizes: &[usize]) -> FeasibilityVerdict {
        let key = (group.moduli().to_vec(), domain, sizes.to_vec());
        if let Some((status, reason)) = self.cache.lock().unwrap().get(&key) {
            if *status != Status::Feasible {
                return FeasibilityVerdict {
                    status: *status,
                    witness: None,
                    reason: reason.clone(),
                };
            }
        }
        let inst = RealizationInstance::zero_sum(group, domain.resolve(group), sizes.to_vec())
            .expect("size vectors are built to match the domain");
        let v = realize_partition(&inst, self.budget);
        self.cache.lock().unwrap().insert(key, (v.status, v.reason.clone()));
        v
    }

    fn status(&self, group: &Group, domain: DomainKind, sizes: &[usize]) -> (Status, String) {
        let key = (group.moduli().to_vec(), domain, sizes.to_vec());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let v = self.realize(group, domain, sizes);
        (v.status, v.reason)
    }

    /// Checks every size vector in `family` on `domain`. Size vectors are
    /// tried in order of increasing part count; the first infeasible one in
    /// that order is reported. Any unresolved instance without a
    /// counterexample makes the outcome `Unknown`.
    pub fn check_family(
        &self,
        property: &str,
        group: &Group,
        domain: DomainKind,
        family: Vec<IntegerPartition>,
        expected: Option<bool>,
        note: &str,
    ) -> PropertyVerdict {
        let mut family = family;
        family.sort_by_key(|p| p.len());
        let statuses: Vec<(Status, String)> = family
            .par_iter()
            .map(|p| self.status(group, domain, p.parts()))
            .collect();
        let mut counterexample = None;
        let mut unknown = false;
        let mut witness_count = 0;
        for (p, (status, reason)) in family.iter().zip(&statuses) {
            match status {
                Status::Feasible => witness_count += 1,
                Status::Unknown => unknown = true,
                s if counterexample.is_none() => {
                    counterexample = Some(Counterexample {
                        sizes: p.clone(),
                        status: *s,
                        reason: reason.clone(),
                    })
                }
                _ => {}
            }
        }
        let outcome = match (&counterexample, unknown) {
            (Some(_), _) => Outcome::Fails,
            (None, true) => Outcome::Unknown,
            (None, false) => Outcome::Holds,
        };
        PropertyVerdict {
            property: property.to_string(),
            group: group.clone(),
            involutions: group.involution_count(),
            outcome,
            counterexample,
            witness_count,
            instances: family.len(),
            expected,
            note: note.to_string(),
        }
    }

    /// x-ZSPP of `group`.
    pub fn has_x_zspp(&self, group: &Group, x: usize) -> Result<PropertyVerdict> {
        if x == 0 {
            return Err(Error::InvalidInstance("x must be at least 1".into()));
        }
        let family = integer_partitions(group.order() - 1, x).collect();
        Ok(self.check_family(&format!("{x}-zspp"), group, DomainKind::Star, family, None, ""))
    }

    /// 2-ZSPP holds exactly when `|I(Γ)| ∈ {0, 3}`, for groups of order
    /// `3..=max_order`.
    pub fn check_zeng(&self, max_order: usize) -> TheoremReport {
        let verdicts = groups_between(3, max_order)
            .iter()
            .map(|g| {
                let mut v = self.has_x_zspp(g, 2).expect("x = 2 is valid");
                v.property = "2-zspp-iff-involutions-0-or-3".into();
                v.expected = Some(matches!(g.involution_count(), 0 | 3));
                v
            })
            .collect();
        TheoremReport {
            property: "2-zspp-iff-involutions-0-or-3".into(),
            verdicts,
        }
    }

    /// Size vectors of `|Γ*|` with parts `≥ 2`, at most `|R|/2` of them equal
    /// to 2. Realizable for all such vectors iff `|I(Γ)| ∈ {3, |Γ*|}`.
    pub fn check_mixed_23(&self, group: &Group) -> Result<PropertyVerdict> {
        let inv = group.involution_count();
        if inv <= 1 {
            return Err(Error::InvalidInstance(format!(
                "{group} has {inv} involutions, need more than one"
            )));
        }
        let half_r = group.non_involutions().len() / 2;
        let family = integer_partitions(group.order() - 1, 2)
            .filter(|p| p.count_of(2) <= half_r)
            .collect();
        let expected = inv == 3 || inv == group.order() - 1;
        Ok(self.check_family(
            "mixed-2-3",
            group,
            DomainKind::Star,
            family,
            Some(expected),
            &format!("at most {half_r} parts of size 2"),
        ))
    }

    /// 3-ZSPP for a group with more than one involution. Proven when
    /// `|H| mod 6 ∈ {1, 3}` (with `H` the odd part) or `|Γ|` is a power of 2;
    /// open otherwise.
    pub fn check_3zspp_conjecture(&self, group: &Group) -> Result<PropertyVerdict> {
        let inv = group.involution_count();
        if inv <= 1 {
            return Err(Error::InvalidInstance(format!(
                "{group} has {inv} involutions, need more than one"
            )));
        }
        let h = group.sylow2_decomposition().h().order();
        let (expected, note) = if h == 1 {
            (Some(true), "proven: order is a power of 2")
        } else if matches!(h % 6, 1 | 3) {
            (Some(true), "proven: odd part has order 1 or 3 mod 6")
        } else {
            (None, "open: odd part has order 5 mod 6")
        };
        let mut v = self.has_x_zspp(group, 3)?;
        v.property = "3-zspp".into();
        v.expected = expected;
        v.note = note.into();
        Ok(v)
    }

    /// 4-ZSPP, proven for every group with more than one involution.
    pub fn check_4zspp(&self, group: &Group) -> Result<PropertyVerdict> {
        let inv = group.involution_count();
        if inv <= 1 {
            return Err(Error::InvalidInstance(format!(
                "{group} has {inv} involutions, need more than one"
            )));
        }
        let mut v = self.has_x_zspp(group, 4)?;
        v.expected = Some(true);
        Ok(v)
    }

    /// Partition of all of `Γ` into zero-sum parts of size `m`, `m > 2`,
    /// `m | |Γ|`.
    pub fn check_divisor_partition(&self, group: &Group, m: usize) -> Result<PropertyVerdict> {
        let inv = group.involution_count();
        if inv <= 1 {
            return Err(Error::InvalidInstance(format!(
                "{group} has {inv} involutions, need more than one"
            )));
        }
        if m <= 2 || !group.order().is_multiple_of(m) {
            return Err(Error::InvalidInstance(format!(
                "{m} must exceed 2 and divide {}",
                group.order()
            )));
        }
        let family = vec![IntegerPartition(vec![m; group.order() / m])];
        Ok(self.check_family(
            &format!("divisor-partition-{m}"),
            group,
            DomainKind::Whole,
            family,
            Some(true),
            "",
        ))
    }

    /// Groups with one involution: every partition of `|Γ| - 2` into parts
    /// `≥ 2` realized on `R = Γ \ {0, ι}`.
    pub fn check_one_involution(&self, group: &Group) -> Result<OneInvolutionReport> {
        if group.involution_count() != 1 {
            return Err(Error::InvalidInstance(format!(
                "{group} does not have exactly one involution"
            )));
        }
        let n = group.order();
        let all: Vec<IntegerPartition> = integer_partitions(n - 2, 2).collect();
        let conjecture = self.check_family(
            "one-involution-parts-2",
            group,
            DomainKind::NonInvolutions,
            all.clone(),
            None,
            "open conjecture",
        );
        let cyclic_2_3 = group.is_cyclic().then(|| {
            let family = all
                .iter()
                .filter(|p| p.parts().iter().all(|&x| x <= 3))
                .cloned()
                .collect();
            self.check_family(
                "cyclic-one-involution-parts-2-3",
                group,
                DomainKind::NonInvolutions,
                family,
                Some(true),
                "",
            )
        });
        let parts_4 = self.check_family(
            "one-involution-parts-4",
            group,
            DomainKind::NonInvolutions,
            integer_partitions(n - 2, 4).collect(),
            Some(true),
            "",
        );
        Ok(OneInvolutionReport {
            conjecture,
            cyclic_2_3,
            parts_4,
        })
    }

    /// x-ZSPP for `x = 2..=|Γ|-1`. Panics if the profile is not monotone
    /// (holding for x but failing for a larger x).
    pub fn zspp_profile(&self, group: &Group) -> Vec<PropertyVerdict> {
        let top = group.order().saturating_sub(1);
        let profile: Vec<PropertyVerdict> = (2..=top.max(2))
            .filter(|&x| x <= top)
            .map(|x| self.has_x_zspp(group, x).expect("x ≥ 2"))
            .collect();
        let mut held = false;
        for v in &profile {
            match v.outcome {
                Outcome::Holds => held = true,
                Outcome::Fails => assert!(!held, "x-ZSPP profile of {group} is not monotone"),
                Outcome::Unknown => {}
            }
        }
        profile
    }
}

impl Default for ZsppChecker {
    fn default() -> Self {
        ZsppChecker::new(Budget::default())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneInvolutionReport {
    /// Every partition with parts `≥ 2` (conjectured, open).
    pub conjecture: PropertyVerdict,
    /// Parts in `{2, 3}` for cyclic groups (proven).
    pub cyclic_2_3: Option<PropertyVerdict>,
    /// Parts `≥ 4` (proven for every group with one involution).
    pub parts_4: PropertyVerdict,
}

/// Every group with order in `lo..=hi`, in the order of
/// [`enumerate_abelian_groups`].
pub fn groups_between(lo: usize, hi: usize) -> Vec<Group> {
    (lo.max(1)..=hi).flat_map(enumerate_abelian_groups).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(n: usize, m: usize) -> Vec<Vec<usize>> {
        integer_partitions(n, m).map(|p| p.0).collect()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(parts(6, 2), vec![vec![6], vec![4, 2], vec![3, 3], vec![2, 2, 2]]);
        assert_eq!(parts(3, 2), vec![vec![3]]);
        assert!(parts(1, 2).is_empty());
        assert_eq!(parts(0, 2), vec![Vec::<usize>::new()]);
        assert_eq!(parts(5, 1).len(), 7);
        assert_eq!(parts(7, 3), vec![vec![7], vec![4, 3]]);
    }

    #[test]
    fn x_zspp_examples() {
        let c = ZsppChecker::default();
        let v = c.has_x_zspp(&Group::cyclic(9).unwrap(), 2).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        let v = c.has_x_zspp(&Group::cyclic(4).unwrap(), 2).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert_eq!(v.counterexample.unwrap().sizes.0, vec![3]);
        let v = c.has_x_zspp(&Group::new(&[2, 2]).unwrap(), 3).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
    }

    #[test]
    fn mixed_examples() {
        let c = ZsppChecker::default();
        for m in [[2u32, 4], [2, 8]] {
            let v = c.check_mixed_23(&Group::new(&m).unwrap()).unwrap();
            assert_eq!(v.outcome, Outcome::Holds);
        }
        let v = c.check_mixed_23(&Group::new(&[2, 2, 4]).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert_eq!(v.counterexample.unwrap().status, Status::Infeasible);
        assert!(c.check_mixed_23(&Group::cyclic(8).unwrap()).is_err());
    }

    #[test]
    fn divisor_examples() {
        let c = ZsppChecker::default();
        let g = Group::new(&[2, 6]).unwrap();
        assert!(c.check_divisor_partition(&g, 3).unwrap().holds());
        assert!(c.check_divisor_partition(&g, 4).unwrap().holds());
        assert!(c
            .check_divisor_partition(&Group::new(&[2, 2]).unwrap(), 4)
            .unwrap()
            .holds());
        assert!(c.check_divisor_partition(&g, 5).is_err());
    }

    #[test]
    fn profile_is_monotone() {
        let c = ZsppChecker::default();
        let p = c.zspp_profile(&Group::cyclic(8).unwrap());
        assert!(p.iter().all(|v| v.outcome == Outcome::Fails));
        let p = c.zspp_profile(&Group::new(&[2, 2, 2]).unwrap());
        assert_eq!(p[0].outcome, Outcome::Fails);
        assert!(p[1..].iter().all(|v| v.holds()));
    }
}
