//! Realizing prescribed part sizes and part sums inside a subset of a group.
//!
//! Given a domain `D ⊆ Γ`, sizes `m_1..m_t` and targets `w_1..w_t`, find
//! pairwise disjoint `S_i ⊆ D` with `|S_i| = m_i` and `Σ S_i = w_i`. In
//! [`Coverage::Exact`] mode the parts must cover `D`; in
//! [`Coverage::Disjoint`] mode they need not.
//!
//! The exact solver is a backtracking exact-cover search: the smallest
//! uncovered element is placed into one part class at a time, the rest of
//! that part is chosen in increasing order, and the final slot of every part
//! is forced by its target. Failed sub-states (uncovered set plus remaining
//! part counts) are memoized.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Arith, Element, ElementSet, Group};
use crate::search::{bit, bits, mask_from, Budget, NodeCounter, EXACT_SEARCH_CEILING};

/// Whether the parts must cover the whole domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    Exact,
    Disjoint,
}

/// Standard domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainKind {
    /// `Γ` including the identity.
    Whole,
    /// `Γ* = Γ \ {0}`.
    Star,
    /// `R = Γ* \ I(Γ)`.
    NonInvolutions,
}

impl DomainKind {
    pub fn resolve(self, group: &Group) -> ElementSet {
        match self {
            DomainKind::Whole => group.all(),
            DomainKind::Star => group.nonzero(),
            DomainKind::NonInvolutions => group.non_involutions(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DomainKind::Whole => "all",
            DomainKind::Star => "star",
            DomainKind::NonInvolutions => "r",
        }
    }
}

/// An instance of the realization problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationInstance {
    group: Group,
    domain: ElementSet,
    sizes: Vec<usize>,
    targets: Vec<Element>,
    coverage: Coverage,
}

impl RealizationInstance {
    /// An instance whose parts must cover `domain` exactly.
    pub fn new(group: &Group, domain: ElementSet, sizes: Vec<usize>, targets: Vec<Element>) -> Result<Self> {
        Self::build(group, domain, sizes, targets, Coverage::Exact)
    }

    /// An instance asking only for pairwise disjoint parts inside `domain`.
    pub fn disjoint(group: &Group, domain: ElementSet, sizes: Vec<usize>, targets: Vec<Element>) -> Result<Self> {
        Self::build(group, domain, sizes, targets, Coverage::Disjoint)
    }

    /// Exact cover of `domain` with every target equal to zero.
    pub fn zero_sum(group: &Group, domain: ElementSet, sizes: Vec<usize>) -> Result<Self> {
        let targets = vec![group.zero(); sizes.len()];
        Self::new(group, domain, sizes, targets)
    }

    fn build(
        group: &Group,
        domain: ElementSet,
        sizes: Vec<usize>,
        targets: Vec<Element>,
        coverage: Coverage,
    ) -> Result<Self> {
        if sizes.len() != targets.len() {
            return Err(Error::InvalidInstance(format!(
                "{} sizes but {} targets",
                sizes.len(),
                targets.len()
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidInstance("part sizes must be at least 1".into()));
        }
        if let Some(g) = domain.iter().chain(targets.iter()).find(|g| !group.contains(g)) {
            return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
        }
        let total: usize = sizes.iter().sum();
        match coverage {
            Coverage::Exact if total != domain.len() => {
                return Err(Error::InvalidInstance(format!(
                    "sizes sum to {total} but the domain has {} elements",
                    domain.len()
                )))
            }
            Coverage::Disjoint if total > domain.len() => {
                return Err(Error::InvalidInstance(format!(
                    "sizes sum to {total}, more than the {} domain elements",
                    domain.len()
                )))
            }
            _ => {}
        }
        Ok(RealizationInstance {
            group: group.clone(),
            domain,
            sizes,
            targets,
            coverage,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn domain(&self) -> &ElementSet {
        &self.domain
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn targets(&self) -> &[Element] {
        &self.targets
    }

    pub fn coverage(&self) -> Coverage {
        self.coverage
    }
}

/// Parts of a candidate solution, `parts[i]` answering `sizes[i]`.
///
/// Parts are plain lists so that malformed certificates (with repeated
/// elements, say) can be represented and rejected by [`verify_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetPartition {
    pub parts: Vec<Vec<Element>>,
}

impl SubsetPartition {
    pub fn new(parts: Vec<Vec<Element>>) -> Self {
        SubsetPartition { parts }
    }

    pub fn parts(&self) -> &[Vec<Element>] {
        &self.parts
    }
}

impl fmt::Display for SubsetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let items: Vec<String> = p.iter().map(|e| e.to_string()).collect();
                format!("{{{}}}", items.join(", "))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// A witness was found and verified.
    #[serde(rename = "feasible")]
    Feasible,
    /// The exact search completed without a witness.
    #[serde(rename = "infeasible")]
    Infeasible,
    /// A necessary condition fails; no search was needed.
    #[serde(rename = "infeasible-necessary-condition")]
    InfeasibleNecessary,
    /// Neither proven nor refuted (budget exhausted, or heuristic gave up).
    #[serde(rename = "unknown")]
    Unknown,
}

impl Status {
    pub fn is_infeasible(self) -> bool {
        matches!(self, Status::Infeasible | Status::InfeasibleNecessary)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Feasible => "feasible",
            Status::Infeasible => "infeasible",
            Status::InfeasibleNecessary => "infeasible-necessary-condition",
            Status::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub status: Status,
    pub witness: Option<SubsetPartition>,
    pub reason: String,
}

impl FeasibilityVerdict {
    fn new(status: Status, reason: impl Into<String>) -> Self {
        FeasibilityVerdict {
            status,
            witness: None,
            reason: reason.into(),
        }
    }

    fn feasible(witness: SubsetPartition, reason: impl Into<String>) -> Self {
        FeasibilityVerdict {
            status: Status::Feasible,
            witness: Some(witness),
            reason: reason.into(),
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }

    pub fn is_infeasible(&self) -> bool {
        self.status.is_infeasible()
    }
}

/// Cheap necessary conditions. Returns `InfeasibleNecessary` when one fails,
/// `Unknown` otherwise.
///
/// * Exact coverage: the targets must sum to the sum of the domain.
/// * A part of size 1 is its own target, so the target must lie in the
///   domain, and no two singleton parts may share a target.
pub fn necessary_conditions(inst: &RealizationInstance) -> FeasibilityVerdict {
    let g = &inst.group;
    if inst.coverage == Coverage::Exact {
        let domain_sum = g.sum(inst.domain.iter()).expect("domain validated");
        let target_sum = g.sum(inst.targets.iter()).expect("targets validated");
        if domain_sum != target_sum {
            return FeasibilityVerdict::new(
                Status::InfeasibleNecessary,
                format!("targets sum to {target_sum} but the domain sums to {domain_sum}"),
            );
        }
    }
    let mut singles = HashSet::new();
    for (m, w) in inst.sizes.iter().zip(&inst.targets) {
        if *m == 1 {
            if !inst.domain.contains(w) {
                return FeasibilityVerdict::new(
                    Status::InfeasibleNecessary,
                    format!("singleton part with target {w} outside the domain"),
                );
            }
            if !singles.insert(w.clone()) {
                return FeasibilityVerdict::new(
                    Status::InfeasibleNecessary,
                    format!("two singleton parts share the target {w}"),
                );
            }
        }
    }
    FeasibilityVerdict::new(Status::Unknown, "necessary conditions hold")
}

/// Checks a candidate against an instance without trusting whoever built it.
pub fn verify_partition(inst: &RealizationInstance, p: &SubsetPartition) -> bool {
    let g = &inst.group;
    if p.parts.len() != inst.sizes.len() {
        return false;
    }
    let mut seen: HashSet<&Element> = HashSet::new();
    for ((part, &m), w) in p.parts.iter().zip(&inst.sizes).zip(&inst.targets) {
        if part.len() != m {
            return false;
        }
        for e in part {
            if !g.contains(e) || !inst.domain.contains(e) || !seen.insert(e) {
                return false;
            }
        }
        match g.sum(part.iter()) {
            Ok(s) if &s == w => {}
            _ => return false,
        }
    }
    match inst.coverage {
        Coverage::Exact => seen.len() == inst.domain.len(),
        Coverage::Disjoint => true,
    }
}

/// Part classes: parts with equal size and target are interchangeable.
#[derive(Debug, Clone)]
struct Class {
    size: usize,
    target: usize,
    count: u32,
    /// Indices into the instance's size list, `None` for the leftover part.
    slots: Vec<Option<usize>>,
}

/// Groups parts into classes, adding the leftover part in disjoint mode
/// (its size and sum are forced). Classes are ordered by decreasing size.
fn build_classes(inst: &RealizationInstance) -> Vec<Class> {
    let g = &inst.group;
    let mut map: HashMap<(usize, usize, bool), Class> = HashMap::new();
    for (i, (&m, w)) in inst.sizes.iter().zip(&inst.targets).enumerate() {
        let t = g.index_unchecked(w);
        map.entry((m, t, false))
            .or_insert(Class {
                size: m,
                target: t,
                count: 0,
                slots: Vec::new(),
            })
            .slots
            .push(Some(i));
    }
    if inst.coverage == Coverage::Disjoint {
        let total: usize = inst.sizes.iter().sum();
        let left = inst.domain.len() - total;
        if left > 0 {
            let dsum = g.sum(inst.domain.iter()).expect("validated");
            let tsum = g.sum(inst.targets.iter()).expect("validated");
            let t = g.index_unchecked(&g.sub(&dsum, &tsum).expect("validated"));
            map.insert(
                (left, t, true),
                Class {
                    size: left,
                    target: t,
                    count: 0,
                    slots: vec![None],
                },
            );
        }
    }
    let mut classes: Vec<((usize, usize, bool), Class)> = map.into_iter().collect();
    classes.sort_by(|a, b| {
        let (sa, ta, la) = a.0;
        let (sb, tb, lb) = b.0;
        sb.cmp(&sa).then(la.cmp(&lb)).then(ta.cmp(&tb))
    });
    classes
        .into_iter()
        .map(|(_, mut c)| {
            c.count = c.slots.len() as u32;
            c
        })
        .collect()
}

const FAILURE_CACHE_CAP: usize = 4_000_000;

enum Flow {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Kernel<'a> {
    arith: &'a Arith,
    classes: &'a [Class],
    remaining: Vec<u32>,
    radix: Option<Vec<u64>>,
    unused: u128,
    counter: NodeCounter,
    failed: HashSet<(u128, u64)>,
    current: Vec<usize>,
    done: Vec<(usize, Vec<usize>)>,
}

impl<'a> Kernel<'a> {
    fn new(arith: &'a Arith, classes: &'a [Class], domain: u128, budget: Budget) -> Self {
        // Mixed-radix encoding of the remaining counts for the failure cache.
        let mut radix = Some(Vec::with_capacity(classes.len()));
        let mut acc: u64 = 1;
        for c in classes {
            match (radix.as_mut(), acc.checked_mul(c.count as u64 + 1)) {
                (Some(r), Some(next)) => {
                    r.push(acc);
                    acc = next;
                }
                _ => radix = None,
            }
        }
        Kernel {
            arith,
            classes,
            remaining: classes.iter().map(|c| c.count).collect(),
            radix,
            unused: domain,
            counter: NodeCounter::new(budget),
            failed: HashSet::new(),
            current: Vec::new(),
            done: Vec::new(),
        }
    }

    fn key(&self) -> Option<(u128, u64)> {
        let r = self.radix.as_ref()?;
        let code = r.iter().zip(&self.remaining).map(|(w, &c)| w * c as u64).sum();
        Some((self.unused, code))
    }

    fn solve(&mut self) -> Flow {
        if self.unused == 0 {
            return Flow::Found;
        }
        let key = self.key();
        if let Some(k) = key {
            if self.failed.contains(&k) {
                return Flow::Exhausted;
            }
        }
        let dead = self
            .classes
            .iter()
            .zip(&self.remaining)
            .any(|(c, &r)| r > 0 && c.size == 1 && self.unused & bit(c.target) == 0);
        if !dead {
            let e = self.unused.trailing_zeros() as usize;
            for ci in 0..self.classes.len() {
                if self.remaining[ci] == 0 {
                    continue;
                }
                self.remaining[ci] -= 1;
                self.unused &= !bit(e);
                self.current.clear();
                self.current.push(e);
                let size = self.classes[ci].size;
                let flow = self.fill(ci, size - 1, e, e + 1);
                if let Flow::Found = flow {
                    return Flow::Found;
                }
                self.unused |= bit(e);
                self.remaining[ci] += 1;
                if let Flow::OutOfBudget = flow {
                    return Flow::OutOfBudget;
                }
            }
        }
        if let Some(k) = key {
            if self.failed.len() < FAILURE_CACHE_CAP {
                self.failed.insert(k);
            }
        }
        Flow::Exhausted
    }

    fn fill(&mut self, ci: usize, left: usize, partial: usize, next: usize) -> Flow {
        if !self.counter.tick() {
            return Flow::OutOfBudget;
        }
        let target = self.classes[ci].target;
        match left {
            0 => {
                if partial != target {
                    return Flow::Exhausted;
                }
                self.done.push((ci, self.current.clone()));
                let saved = std::mem::take(&mut self.current);
                let flow = self.solve();
                self.current = saved;
                if !matches!(flow, Flow::Found) {
                    self.done.pop();
                }
                flow
            }
            1 => {
                let x = self.arith.sub(target, partial);
                if x < next || self.unused & bit(x) == 0 {
                    return Flow::Exhausted;
                }
                self.unused &= !bit(x);
                self.current.push(x);
                let flow = self.fill(ci, 0, target, x + 1);
                if let Flow::Found = flow {
                    return flow;
                }
                self.current.pop();
                self.unused |= bit(x);
                flow
            }
            _ => {
                let cand = self.unused & mask_from(next);
                let mut avail = cand.count_ones() as usize;
                for x in bits(cand) {
                    if avail < left {
                        break;
                    }
                    avail -= 1;
                    self.unused &= !bit(x);
                    self.current.push(x);
                    let flow = self.fill(ci, left - 1, self.arith.add(partial, x), x + 1);
                    if let Flow::Found = flow {
                        return flow;
                    }
                    self.current.pop();
                    self.unused |= bit(x);
                    if let Flow::OutOfBudget = flow {
                        return flow;
                    }
                }
                Flow::Exhausted
            }
        }
    }
}

/// Maps parts found per class back onto the instance's slot order.
fn assemble(inst: &RealizationInstance, classes: &[Class], found: &[(usize, Vec<usize>)]) -> SubsetPartition {
    let g = &inst.group;
    let mut parts: Vec<Vec<Element>> = vec![Vec::new(); inst.sizes.len()];
    let mut next_slot = vec![0usize; classes.len()];
    for (ci, elems) in found {
        let slot = classes[*ci].slots[next_slot[*ci]];
        next_slot[*ci] += 1;
        if let Some(i) = slot {
            parts[i] = elems.iter().map(|&x| g.element_at(x)).collect();
        }
    }
    SubsetPartition { parts }
}

/// Exact search. Returns `Feasible` with a verified witness or `Infeasible`
/// when the search completes within `budget` nodes, `Unknown` otherwise.
/// Identical inputs give identical verdicts and witnesses.
pub fn realize_partition(inst: &RealizationInstance, budget: Budget) -> FeasibilityVerdict {
    let pre = necessary_conditions(inst);
    if pre.status.is_infeasible() {
        return pre;
    }
    let g = &inst.group;
    if g.order() > EXACT_SEARCH_CEILING {
        return FeasibilityVerdict::new(
            Status::Unknown,
            format!(
                "order {} exceeds the exact-search ceiling {EXACT_SEARCH_CEILING}",
                g.order()
            ),
        );
    }
    let arith = g.arith();
    let classes = build_classes(inst);
    let domain = inst.domain.iter().fold(0u128, |m, e| m | bit(g.index_unchecked(e)));
    let mut kernel = Kernel::new(&arith, &classes, domain, budget);
    match kernel.solve() {
        Flow::Found => {
            let witness = assemble(inst, &classes, &kernel.done);
            assert!(verify_partition(inst, &witness), "solver produced an invalid witness");
            FeasibilityVerdict::feasible(witness, format!("found after {} nodes", kernel.counter.used()))
        }
        Flow::Exhausted => FeasibilityVerdict::new(
            Status::Infeasible,
            format!("search exhausted after {} nodes", kernel.counter.used()),
        ),
        Flow::OutOfBudget => {
            FeasibilityVerdict::new(Status::Unknown, format!("budget of {} nodes exhausted", budget.nodes()))
        }
    }
}

const HEURISTIC_RESTARTS: usize = 200;
const HEURISTIC_STEPS_PER_ELEMENT: usize = 64;

/// Randomized local search for orders where the exact search is too slow.
/// Never claims infeasibility beyond the necessary conditions; deterministic
/// for a fixed `seed`.
///
/// Each restart deals the domain into parts at random, then repeatedly picks
/// a part `A` whose sum is off by `d`, an element `x ∈ A`, and swaps it with
/// `y = x - d` wherever `y` sits. `A` is then correct and its error moves to
/// the part that held `y`; two errors meeting in one part may cancel.
pub fn heuristic_realize(inst: &RealizationInstance, seed: u64) -> FeasibilityVerdict {
    let pre = necessary_conditions(inst);
    if pre.status.is_infeasible() {
        return pre;
    }
    let g = &inst.group;
    let arith = g.arith();
    let classes = build_classes(inst);
    let class_of: Vec<usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| std::iter::repeat_n(ci, c.count as usize))
        .collect();
    let targets: Vec<usize> = class_of.iter().map(|&ci| classes[ci].target).collect();
    if class_of
        .iter()
        .any(|&ci| classes[ci].size == 0 && classes[ci].target != 0)
    {
        return FeasibilityVerdict::new(Status::Infeasible, "an empty part cannot have a nonzero target");
    }
    let domain: Vec<usize> = inst.domain.iter().map(|e| g.index_unchecked(e)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = HEURISTIC_STEPS_PER_ELEMENT * domain.len().max(1);
    const OUTSIDE: (usize, usize) = (usize::MAX, usize::MAX);

    for restart in 0..HEURISTIC_RESTARTS {
        let mut pool = domain.clone();
        pool.shuffle(&mut rng);
        let mut parts: Vec<Vec<usize>> = Vec::with_capacity(class_of.len());
        let mut owner = vec![OUTSIDE; g.order()];
        let mut it = pool.into_iter();
        for (p, &ci) in class_of.iter().enumerate() {
            let part: Vec<usize> = it.by_ref().take(classes[ci].size).collect();
            for (pos, &x) in part.iter().enumerate() {
                owner[x] = (p, pos);
            }
            parts.push(part);
        }
        let mut sums: Vec<usize> = parts
            .iter()
            .map(|q| q.iter().fold(0, |s, &x| arith.add(s, x)))
            .collect();
        let mut wrong: Vec<usize> = (0..parts.len()).filter(|&p| sums[p] != targets[p]).collect();

        for _ in 0..steps {
            if wrong.is_empty() {
                break;
            }
            let wi = rng.gen_range(0..wrong.len());
            let a = wrong[wi];
            let d = arith.sub(sums[a], targets[a]);
            let pos = rng.gen_range(0..parts[a].len());
            let x = parts[a][pos];
            let y = arith.sub(x, d);
            let (c, cpos) = owner[y];
            if (c, cpos) == OUTSIDE || c == a {
                continue;
            }
            parts[a][pos] = y;
            parts[c][cpos] = x;
            owner[y] = (a, pos);
            owner[x] = (c, cpos);
            sums[a] = targets[a];
            sums[c] = arith.add(sums[c], d);
            wrong.swap_remove(wi);
            let c_wrong = wrong.iter().position(|&q| q == c);
            match (c_wrong, sums[c] == targets[c]) {
                (Some(i), true) => {
                    wrong.swap_remove(i);
                }
                (None, false) => wrong.push(c),
                _ => {}
            }
        }
        if !wrong.is_empty() {
            continue;
        }
        let mut built: Vec<(usize, Vec<usize>)> = class_of.iter().copied().zip(parts).collect();
        for (_, part) in built.iter_mut() {
            part.sort_unstable();
        }
        built.sort_by_key(|(ci, part)| (*ci, part.first().copied()));
        let witness = assemble(inst, &classes, &built);
        if verify_partition(inst, &witness) {
            return FeasibilityVerdict::feasible(witness, format!("heuristic succeeded on restart {restart}"));
        }
    }
    FeasibilityVerdict::new(Status::Unknown, "heuristic gave up")
}

/// A constant-sum partition and its common part sum `ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantSumVerdict {
    pub verdict: FeasibilityVerdict,
    pub common_sum: Option<Element>,
}

/// Partition `Γ` (or `Γ*`) into parts of the given sizes that all share one
/// sum `ν`. Candidates are tried in canonical order, skipping those with
/// `t·ν ≠ Σ domain`.
pub fn constant_sum_partition(
    group: &Group,
    sizes: &[usize],
    include_zero: bool,
    budget: Budget,
) -> Result<ConstantSumVerdict> {
    let domain = if include_zero { group.all() } else { group.nonzero() };
    let total: usize = sizes.iter().sum();
    if total != domain.len() {
        return Err(Error::InvalidInstance(format!(
            "sizes sum to {total} but the domain has {} elements",
            domain.len()
        )));
    }
    let dsum = group.sum(domain.iter())?;
    let t = sizes.len() as i64;
    let mut unknown = false;
    let mut any_candidate = false;
    for nu in group.elements() {
        if group.scalar_mul(t, &nu)? != dsum {
            continue;
        }
        any_candidate = true;
        let inst = RealizationInstance::new(group, domain.clone(), sizes.to_vec(), vec![nu.clone(); sizes.len()])?;
        let v = realize_partition(&inst, budget);
        match v.status {
            Status::Feasible => {
                return Ok(ConstantSumVerdict {
                    verdict: v,
                    common_sum: Some(nu),
                })
            }
            Status::Unknown => unknown = true,
            _ => {}
        }
    }
    let verdict = if !any_candidate {
        FeasibilityVerdict::new(Status::InfeasibleNecessary, "no ν satisfies t·ν = Σ domain")
    } else if unknown {
        FeasibilityVerdict::new(Status::Unknown, "budget exhausted for some common sum")
    } else {
        FeasibilityVerdict::new(Status::Infeasible, "no common sum admits a partition")
    };
    Ok(ConstantSumVerdict {
        verdict,
        common_sum: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Group {
        Group::cyclic(n).unwrap()
    }

    fn set(g: &Group, xs: &[u32]) -> Vec<Element> {
        xs.iter().map(|&x| g.element(&[x]).unwrap()).collect()
    }

    fn budget() -> Budget {
        Budget(10_000_000)
    }

    #[test]
    fn necessary_condition_examples() {
        let z8 = z(8);
        let inst = RealizationInstance::zero_sum(&z8, z8.nonzero(), vec![7]).unwrap();
        assert_eq!(necessary_conditions(&inst).status, Status::InfeasibleNecessary);

        let z7 = z(7);
        let inst = RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![1, 5]).unwrap();
        assert_eq!(necessary_conditions(&inst).status, Status::InfeasibleNecessary);

        let inst = RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![3, 3]).unwrap();
        assert_eq!(necessary_conditions(&inst).status, Status::Unknown);
    }

    #[test]
    fn malformed_instances_are_errors() {
        let z7 = z(7);
        assert!(RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![3, 2]).is_err());
        assert!(RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![6, 0]).is_err());
        let other = z(5).element(&[1]).unwrap();
        assert!(RealizationInstance::new(&z7, z7.nonzero(), vec![6], vec![other]).is_err());
        assert!(RealizationInstance::new(&z7, z7.nonzero(), vec![3, 3], vec![z7.zero()]).is_err());
    }

    #[test]
    fn realize_z7_two_triples() {
        let z7 = z(7);
        let inst = RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![3, 3]).unwrap();
        let v = realize_partition(&inst, budget());
        assert_eq!(v.status, Status::Feasible);
        let w = v.witness.unwrap();
        assert_eq!(w.parts, vec![set(&z7, &[1, 2, 4]), set(&z7, &[3, 5, 6])]);
    }

    #[test]
    fn realize_small_examples() {
        let z3 = z(3);
        let inst = RealizationInstance::zero_sum(&z3, z3.nonzero(), vec![2]).unwrap();
        let v = realize_partition(&inst, budget());
        assert_eq!(v.witness.unwrap().parts, vec![set(&z3, &[1, 2])]);

        let g = Group::new(&[2, 4]).unwrap();
        let inst = RealizationInstance::zero_sum(&g, g.nonzero(), vec![2, 2, 3]).unwrap();
        assert!(realize_partition(&inst, budget()).is_feasible());
    }

    #[test]
    fn verify_examples() {
        let z7 = z(7);
        let inst = RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![3, 3]).unwrap();
        let good = SubsetPartition::new(vec![set(&z7, &[1, 2, 4]), set(&z7, &[3, 5, 6])]);
        assert!(verify_partition(&inst, &good));
        let dup = SubsetPartition::new(vec![set(&z7, &[1, 2, 4]), set(&z7, &[3, 5, 5])]);
        assert!(!verify_partition(&inst, &dup));
        let wrong = SubsetPartition::new(vec![set(&z7, &[1, 2, 3]), set(&z7, &[4, 5, 6])]);
        assert!(!verify_partition(&inst, &wrong));
    }

    #[test]
    fn targets_other_than_zero() {
        let z7 = z(7);
        let targets = set(&z7, &[1, 6]);
        let inst = RealizationInstance::new(&z7, z7.nonzero(), vec![3, 3], targets).unwrap();
        let v = realize_partition(&inst, budget());
        assert!(v.is_feasible());
        assert!(verify_partition(&inst, v.witness.as_ref().unwrap()));
    }

    #[test]
    fn singleton_parts() {
        let z7 = z(7);
        let targets = set(&z7, &[3, 4]);
        let inst = RealizationInstance::new(&z7, z7.nonzero(), vec![1, 5], targets).unwrap();
        let v = realize_partition(&inst, budget());
        assert!(v.is_feasible());
        assert_eq!(v.witness.unwrap().parts[0], set(&z7, &[3]));
    }

    #[test]
    fn disjoint_mode_leaves_elements_out() {
        let z7 = z(7);
        let inst = RealizationInstance::disjoint(&z7, z7.all(), vec![3, 3], vec![z7.zero(); 2]).unwrap();
        let v = realize_partition(&inst, budget());
        assert!(v.is_feasible());
        let w = v.witness.unwrap();
        assert!(verify_partition(&inst, &w));
        assert_eq!(w.parts.len(), 2);
    }

    #[test]
    fn infeasible_is_proven() {
        // Z_2^3: no zero-sum pair exists.
        let g = Group::new(&[2, 2, 2]).unwrap();
        let inst = RealizationInstance::zero_sum(&g, g.nonzero(), vec![2, 5]).unwrap();
        assert_eq!(realize_partition(&inst, budget()).status, Status::Infeasible);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = z(25);
        let inst = RealizationInstance::zero_sum(&g, g.nonzero(), vec![2; 12]).unwrap();
        assert_eq!(realize_partition(&inst, Budget(3)).status, Status::Unknown);
    }

    #[test]
    fn heuristic_examples() {
        let z27 = z(27);
        let mut sizes = vec![3; 8];
        sizes.push(2);
        let inst = RealizationInstance::zero_sum(&z27, z27.nonzero(), sizes).unwrap();
        let v = heuristic_realize(&inst, 7);
        assert!(v.is_feasible());
        assert!(verify_partition(&inst, v.witness.as_ref().unwrap()));
        assert_eq!(heuristic_realize(&inst, 7), v);

        let z3 = z(3);
        let inst = RealizationInstance::zero_sum(&z3, z3.nonzero(), vec![2]).unwrap();
        assert_eq!(
            heuristic_realize(&inst, 1).witness.unwrap().parts,
            vec![set(&z3, &[1, 2])]
        );

        let z8 = z(8);
        let inst = RealizationInstance::zero_sum(&z8, z8.nonzero(), vec![7]).unwrap();
        assert_eq!(heuristic_realize(&inst, 1).status, Status::InfeasibleNecessary);
    }

    #[test]
    fn heuristic_disjoint_mode() {
        let g = z(13);
        let inst = RealizationInstance::disjoint(&g, g.all(), vec![4, 3], vec![g.zero(); 2]).unwrap();
        let v = heuristic_realize(&inst, 3);
        assert!(v.is_feasible());
        assert!(verify_partition(&inst, v.witness.as_ref().unwrap()));
    }

    #[test]
    fn constant_sum_examples() {
        let z7 = z(7);
        let v = constant_sum_partition(&z7, &[1, 3, 3], true, budget()).unwrap();
        assert_eq!(v.common_sum, Some(z7.zero()));
        assert_eq!(
            v.verdict.witness.unwrap().parts,
            vec![set(&z7, &[0]), set(&z7, &[1, 2, 4]), set(&z7, &[3, 5, 6])]
        );

        let z4 = z(4);
        let v = constant_sum_partition(&z4, &[2, 2], true, budget()).unwrap();
        assert_eq!(v.common_sum, Some(z4.element(&[1]).unwrap()));
        assert_eq!(
            v.verdict.witness.unwrap().parts,
            vec![set(&z4, &[0, 1]), set(&z4, &[2, 3])]
        );

        let z2 = z(2);
        let v = constant_sum_partition(&z2, &[1, 1], true, budget()).unwrap();
        assert!(v.verdict.is_infeasible());
        assert!(v.common_sum.is_none());
    }
}
