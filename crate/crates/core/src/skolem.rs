//! Skolem sequences, good 6-subsets and Skolem partitions.
//!
//! A Skolem partition of a set `S` splits it into `⌊|S|/6⌋` good 6-subsets
//! `{c, d, -c-d, -c, -d, c+d}` and `(|S| mod 6)/2` zero-sum pairs `{e, -e}`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{enumerate_abelian_groups, Element, ElementSet, Group};
use crate::partition::{Status, SubsetPartition};
use crate::search::{bit, Budget, NodeCounter, SearchVerdict, EXACT_SEARCH_CEILING};

/// A sequence of length `2n` in which each `k ∈ [1, n]` occurs twice, `k`
/// positions apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SkolemSequence(Vec<u32>);

impl SkolemSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if is_skolem_sequence(&entries)? {
            Ok(SkolemSequence(entries))
        } else {
            Err(Error::MalformedSequence(format!(
                "{entries:?} is not a Skolem sequence"
            )))
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for SkolemSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

/// Odd-length input is an error; otherwise reports whether the sequence is
/// a Skolem sequence.
pub fn is_skolem_sequence(seq: &[u32]) -> Result<bool> {
    if seq.len() % 2 == 1 {
        return Err(Error::MalformedSequence(format!("odd length {}", seq.len())));
    }
    let n = seq.len() / 2;
    let mut first: Vec<Option<usize>> = vec![None; n + 1];
    let mut seen = vec![0u8; n + 1];
    for (i, &k) in seq.iter().enumerate() {
        let k = k as usize;
        if k == 0 || k > n {
            return Ok(false);
        }
        seen[k] += 1;
        match (seen[k], first[k]) {
            (1, _) => first[k] = Some(i),
            (2, Some(j)) if i - j == k => {}
            _ => return Ok(false),
        }
    }
    Ok(seen[1..].iter().all(|&c| c == 2))
}

/// Backtracking search placing `n, n-1, ..., 1` in turn.
pub fn find_skolem_sequence(n: usize, budget: Budget) -> SearchVerdict<SkolemSequence> {
    fn place(k: usize, slots: &mut [u32], counter: &mut NodeCounter) -> Option<bool> {
        if k == 0 {
            return Some(true);
        }
        for i in 0..slots.len().saturating_sub(k) {
            if slots[i] != 0 || slots[i + k] != 0 {
                continue;
            }
            if !counter.tick() {
                return None;
            }
            slots[i] = k as u32;
            slots[i + k] = k as u32;
            if place(k - 1, slots, counter)? {
                return Some(true);
            }
            slots[i] = 0;
            slots[i + k] = 0;
        }
        Some(false)
    }

    let mut slots = vec![0u32; 2 * n];
    let mut counter = NodeCounter::new(budget);
    match place(n, &mut slots, &mut counter) {
        Some(true) => SearchVerdict::Found(SkolemSequence::new(slots).expect("search builds valid sequences")),
        Some(false) => SearchVerdict::Exhausted,
        None => SearchVerdict::BudgetExceeded,
    }
}

/// A good 6-subset `{c, d, -c-d, -c, -d, c+d}`, members listed in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GoodSixSubset {
    pub c: Element,
    pub d: Element,
    pub members: Vec<Element>,
}

/// Why a generator pair does not give a good 6-subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SixRejection {
    ZeroGenerator,
    NotInGroup,
    /// Two of the six values coincide.
    RepeatedMember(Element),
}

impl fmt::Display for SixRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SixRejection::ZeroGenerator => write!(f, "a generator is zero"),
            SixRejection::NotInGroup => write!(f, "a generator is not in the group"),
            SixRejection::RepeatedMember(e) => write!(f, "the value {e} occurs twice"),
        }
    }
}

pub fn good_six(group: &Group, c: &Element, d: &Element) -> std::result::Result<GoodSixSubset, SixRejection> {
    if !group.contains(c) || !group.contains(d) {
        return Err(SixRejection::NotInGroup);
    }
    if c.is_zero() || d.is_zero() {
        return Err(SixRejection::ZeroGenerator);
    }
    let g = group;
    let cd = g.add(c, d).unwrap();
    let members = vec![
        c.clone(),
        d.clone(),
        g.neg(&cd).unwrap(),
        g.neg(c).unwrap(),
        g.neg(d).unwrap(),
        cd,
    ];
    let mut seen = HashSet::new();
    for m in &members {
        if !seen.insert(m) {
            return Err(SixRejection::RepeatedMember(m.clone()));
        }
    }
    assert!(
        g.sum(members.iter()).unwrap().is_zero(),
        "good 6-subset must sum to zero"
    );
    Ok(GoodSixSubset {
        c: c.clone(),
        d: d.clone(),
        members,
    })
}

impl GoodSixSubset {
    pub fn member_set(&self) -> ElementSet {
        self.members.iter().cloned().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    /// `{c,-c}, {d,-d}, {c+d,-c-d}`
    Pairs,
    /// `{c,d,-c-d}, {-c,-d,c+d}`
    Triples,
}

pub fn refine_good_six(group: &Group, six: &GoodSixSubset, mode: Refinement) -> SubsetPartition {
    let m = &six.members;
    let parts = match mode {
        Refinement::Pairs => vec![
            vec![m[0].clone(), m[3].clone()],
            vec![m[1].clone(), m[4].clone()],
            vec![m[5].clone(), m[2].clone()],
        ],
        Refinement::Triples => vec![m[0..3].to_vec(), m[3..6].to_vec()],
    };
    for p in &parts {
        assert!(group.sum(p.iter()).unwrap().is_zero(), "refined part must sum to zero");
    }
    SubsetPartition::new(parts)
}

/// The domain a Skolem partition is asked for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkolemDomain {
    /// `Γ*`; meaningful for odd group order.
    Star,
    /// `R = Γ* \ I(Γ)`.
    NonInvolutions,
    Explicit(ElementSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkolemPartition {
    pub six_parts: Vec<GoodSixSubset>,
    pub two_parts: Vec<Vec<Element>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkolemVerdict {
    pub status: Status,
    pub witness: Option<SkolemPartition>,
    pub reason: String,
}

impl SkolemVerdict {
    fn new(status: Status, reason: impl Into<String>) -> Self {
        SkolemVerdict {
            status,
            witness: None,
            reason: reason.into(),
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }
}

fn resolve_domain(group: &Group, domain: &SkolemDomain) -> Result<ElementSet> {
    let set = match domain {
        SkolemDomain::Star => group.nonzero(),
        SkolemDomain::NonInvolutions => group.non_involutions(),
        SkolemDomain::Explicit(s) => {
            if let Some(e) = s.iter().find(|e| !group.contains(e)) {
                return Err(Error::GroupMismatch(format!("{e} is not an element of {group}")));
            }
            s.clone()
        }
    };
    if set.len() % 2 == 1 {
        return Err(Error::InvalidDomain(format!(
            "a Skolem partition needs an even number of elements, the domain has {}",
            set.len()
        )));
    }
    Ok(set)
}

/// Part counts `(six, two)` for a domain of the given (even) size.
pub fn skolem_counts(size: usize) -> (usize, usize) {
    (size / 6, (size % 6) / 2)
}

/// Every good 6-subset inside `domain`, with the canonical generators: `c`
/// is the smallest member and `d` the smallest admissible second generator.
pub fn good_six_subsets_within(group: &Group, domain: &ElementSet) -> Vec<GoodSixSubset> {
    let mut seen: BTreeSet<Vec<Element>> = BTreeSet::new();
    let mut out = Vec::new();
    for c in domain {
        for d in domain {
            let Ok(six) = good_six(group, c, d) else { continue };
            if !six.members.iter().all(|m| domain.contains(m)) {
                continue;
            }
            // Only the representation with c minimal and d minimal survives.
            if six.members.iter().any(|m| m < c) {
                continue;
            }
            let key: Vec<Element> = six.member_set().into_iter().collect();
            if seen.insert(key) {
                out.push(six);
            }
        }
    }
    out
}

struct Cover {
    sixes_at: Vec<Vec<(u128, usize)>>,
    neg: Vec<usize>,
    counter: NodeCounter,
    failed: HashSet<(u128, usize)>,
    chosen_six: Vec<usize>,
    chosen_two: Vec<usize>,
}

impl Cover {
    fn solve(&mut self, unused: u128, sixes_left: usize) -> Option<bool> {
        if unused == 0 {
            return Some(true);
        }
        if self.failed.contains(&(unused, sixes_left)) {
            return Some(false);
        }
        if !self.counter.tick() {
            return None;
        }
        let e = unused.trailing_zeros() as usize;
        let pairs_left = (unused.count_ones() as usize - 6 * sixes_left) / 2;
        if pairs_left > 0 {
            let n = self.neg[e];
            if n != e && unused & bit(n) != 0 {
                self.chosen_two.push(e);
                if self.solve(unused & !bit(e) & !bit(n), sixes_left)? {
                    return Some(true);
                }
                self.chosen_two.pop();
            }
        }
        if sixes_left > 0 {
            for k in 0..self.sixes_at[e].len() {
                let (mask, id) = self.sixes_at[e][k];
                if unused & mask != mask {
                    continue;
                }
                self.chosen_six.push(id);
                if self.solve(unused & !mask, sixes_left - 1)? {
                    return Some(true);
                }
                self.chosen_six.pop();
            }
        }
        if self.failed.len() < 4_000_000 {
            self.failed.insert((unused, sixes_left));
        }
        Some(false)
    }
}

/// Exact search for a Skolem partition of the domain.
pub fn skolem_partition(group: &Group, domain: &SkolemDomain, budget: Budget) -> Result<SkolemVerdict> {
    let set = resolve_domain(group, domain)?;
    let (sixes, _) = skolem_counts(set.len());
    if set.is_empty() {
        return Ok(SkolemVerdict {
            status: Status::Feasible,
            witness: Some(SkolemPartition {
                six_parts: vec![],
                two_parts: vec![],
            }),
            reason: "empty domain".into(),
        });
    }
    // Every part is closed under negation and avoids 0 and the involutions.
    for e in &set {
        let n = group.neg(e)?;
        if n == *e {
            return Ok(SkolemVerdict::new(
                Status::InfeasibleNecessary,
                format!("{e} is zero or an involution"),
            ));
        }
        if !set.contains(&n) {
            return Ok(SkolemVerdict::new(
                Status::InfeasibleNecessary,
                format!("the domain contains {e} but not its negative"),
            ));
        }
    }
    if group.order() > EXACT_SEARCH_CEILING {
        return Ok(SkolemVerdict::new(
            Status::Unknown,
            format!(
                "order {} exceeds the exact-search ceiling {EXACT_SEARCH_CEILING}",
                group.order()
            ),
        ));
    }
    let n = group.order();
    let catalog = good_six_subsets_within(group, &set);
    let mut sixes_at: Vec<Vec<(u128, usize)>> = vec![Vec::new(); n];
    for (id, six) in catalog.iter().enumerate() {
        let mask = six.members.iter().fold(0u128, |m, e| m | bit(group.index_unchecked(e)));
        let first = mask.trailing_zeros() as usize;
        sixes_at[first].push((mask, id));
    }
    let neg: Vec<usize> = group
        .elements()
        .map(|e| group.index_unchecked(&group.neg(&e).unwrap()))
        .collect();
    let unused = set.iter().fold(0u128, |m, e| m | bit(group.index_unchecked(e)));
    let mut cover = Cover {
        sixes_at,
        neg,
        counter: NodeCounter::new(budget),
        failed: HashSet::new(),
        chosen_six: Vec::new(),
        chosen_two: Vec::new(),
    };
    let verdict = match cover.solve(unused, sixes) {
        Some(true) => {
            let witness = SkolemPartition {
                six_parts: cover.chosen_six.iter().map(|&i| catalog[i].clone()).collect(),
                two_parts: cover
                    .chosen_two
                    .iter()
                    .map(|&i| {
                        let e = group.element_at(i);
                        let ne = group.neg(&e).unwrap();
                        vec![e, ne]
                    })
                    .collect(),
            };
            assert!(
                verify_skolem_partition(group, &set, &witness),
                "search produced an invalid Skolem partition"
            );
            SkolemVerdict {
                status: Status::Feasible,
                witness: Some(witness),
                reason: format!("found after {} nodes", cover.counter.used()),
            }
        }
        Some(false) => SkolemVerdict::new(
            Status::Infeasible,
            format!("search exhausted after {} nodes", cover.counter.used()),
        ),
        None => SkolemVerdict::new(Status::Unknown, format!("budget of {} nodes exhausted", budget.nodes())),
    };
    Ok(verdict)
}

/// Independent check of a claimed Skolem partition of `domain`.
pub fn verify_skolem_partition(group: &Group, domain: &ElementSet, p: &SkolemPartition) -> bool {
    let (sixes, twos) = skolem_counts(domain.len());
    if domain.len() % 2 == 1 || p.six_parts.len() != sixes || p.two_parts.len() != twos {
        return false;
    }
    let mut covered: HashSet<&Element> = HashSet::new();
    for six in &p.six_parts {
        match good_six(group, &six.c, &six.d) {
            Ok(fresh) if fresh.member_set() == six.member_set() && six.members.len() == 6 => {}
            _ => return false,
        }
        for m in &six.members {
            if !domain.contains(m) || !covered.insert(m) {
                return false;
            }
        }
    }
    for pair in &p.two_parts {
        if pair.len() != 2 || pair[0] == pair[1] {
            return false;
        }
        match group.add(&pair[0], &pair[1]) {
            Ok(s) if s.is_zero() => {}
            _ => return false,
        }
        for m in pair {
            if !domain.contains(m) || !covered.insert(m) {
                return false;
            }
        }
    }
    covered.len() == domain.len()
}

/// One row of the `R`-Skolem table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RSkolemRow {
    pub group: Group,
    pub involutions: usize,
    pub r_size: usize,
    pub status: Status,
    /// `Γ ≅ (Z_2)^η × H` with `η > 1` and `|H| ≡ 1 (mod 6)`.
    pub known_family: bool,
    /// For cyclic groups, the value forced by the mod-24 pattern.
    pub cyclic_prediction: Option<bool>,
}

impl RSkolemRow {
    /// True when the search contradicts a known positive or negative case.
    pub fn contradicts_known(&self) -> bool {
        let feasible = self.status == Status::Feasible;
        let refuted = self.status.is_infeasible();
        (self.known_family && refuted)
            || matches!(self.cyclic_prediction, Some(true) if refuted)
            || matches!(self.cyclic_prediction, Some(false) if feasible)
    }
}

/// Whether `Z_m^* \ I(Z_m)` has a Skolem partition for even `m ≥ 6`:
/// yes for `m ≡ 0, 4 (mod 6)` and `m ≡ 2, 8 (mod 24)`, no for
/// `m ≡ 14, 20 (mod 24)`.
pub fn cyclic_r_skolem_prediction(m: usize) -> Option<bool> {
    if m < 6 || m % 2 == 1 {
        return None;
    }
    match m % 6 {
        0 | 4 => Some(true),
        _ => Some(matches!(m % 24, 2 | 8)),
    }
}

/// Whether the group has the shape `(Z_2)^η × H`, `η > 1`, `|H| ≡ 1 mod 6`.
pub fn in_known_r_skolem_family(group: &Group) -> bool {
    let sylow = group.sylow2_decomposition();
    matches!(sylow.elementary_two_rank(), Some(eta) if eta > 1) && sylow.h().order() % 6 == 1
}

/// Tabulates `R`-Skolem existence for every group of order `≤ max_order`
/// with at least one involution.
pub fn characterize_r_skolem(max_order: usize, budget: Budget) -> Result<Vec<RSkolemRow>> {
    if max_order > EXACT_SEARCH_CEILING {
        return Err(Error::TooLarge {
            order: max_order,
            ceiling: EXACT_SEARCH_CEILING,
        });
    }
    let groups: Vec<Group> = (2..=max_order)
        .flat_map(enumerate_abelian_groups)
        .filter(|g| g.involution_count() >= 1)
        .collect();
    use rayon::prelude::*;
    groups
        .par_iter()
        .map(|g| {
            let v = skolem_partition(g, &SkolemDomain::NonInvolutions, budget)?;
            Ok(RSkolemRow {
                group: g.clone(),
                involutions: g.involution_count(),
                r_size: g.non_involutions().len(),
                status: v.status,
                known_family: in_known_r_skolem_family(g),
                cyclic_prediction: if g.is_cyclic() {
                    cyclic_r_skolem_prediction(g.order())
                } else {
                    None
                },
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Group {
        Group::cyclic(n).unwrap()
    }

    fn el(g: &Group, x: u32) -> Element {
        g.element(&[x]).unwrap()
    }

    fn vals(xs: &[Element]) -> Vec<u32> {
        xs.iter().map(|e| e.coords()[0]).collect()
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(is_skolem_sequence(&[4, 2, 3, 2, 4, 3, 1, 1]), Ok(true));
        assert_eq!(is_skolem_sequence(&[1, 1]), Ok(true));
        assert_eq!(is_skolem_sequence(&[1, 2, 1, 2]), Ok(false));
        assert!(is_skolem_sequence(&[1, 1, 2]).is_err());
        assert_eq!(is_skolem_sequence(&[]), Ok(true));
    }

    #[test]
    fn find_sequence_examples() {
        let b = Budget(1_000_000);
        let s4 = find_skolem_sequence(4, b).into_found().unwrap();
        assert!(is_skolem_sequence(s4.entries()).unwrap());
        assert_eq!(find_skolem_sequence(1, b).into_found().unwrap().entries(), &[1, 1]);
        assert!(find_skolem_sequence(2, b).is_exhausted());
    }

    #[test]
    fn good_six_examples() {
        let z7 = z(7);
        let six = good_six(&z7, &el(&z7, 1), &el(&z7, 2)).unwrap();
        assert_eq!(vals(&six.members), vec![1, 2, 4, 6, 5, 3]);
        let z9 = z(9);
        let six9 = good_six(&z9, &el(&z9, 1), &el(&z9, 2)).unwrap();
        assert_eq!(vals(&six9.members), vec![1, 2, 6, 8, 7, 3]);
        assert!(matches!(
            good_six(&z7, &el(&z7, 1), &el(&z7, 1)),
            Err(SixRejection::RepeatedMember(_))
        ));
        assert_eq!(
            good_six(&z7, &el(&z7, 0), &el(&z7, 1)),
            Err(SixRejection::ZeroGenerator)
        );

        let pairs = refine_good_six(&z7, &six, Refinement::Pairs);
        let p: Vec<Vec<u32>> = pairs.parts.iter().map(|p| vals(p)).collect();
        assert_eq!(p, vec![vec![1, 6], vec![2, 5], vec![3, 4]]);
        let triples = refine_good_six(&z7, &six, Refinement::Triples);
        let t: Vec<Vec<u32>> = triples.parts.iter().map(|p| vals(p)).collect();
        assert_eq!(t, vec![vec![1, 2, 4], vec![6, 5, 3]]);
        let t9: Vec<Vec<u32>> = refine_good_six(&z9, &six9, Refinement::Triples)
            .parts
            .iter()
            .map(|p| vals(p))
            .collect();
        assert_eq!(t9, vec![vec![1, 2, 6], vec![8, 7, 3]]);
    }

    #[test]
    fn partition_examples() {
        let b = Budget(10_000_000);
        let z7 = z(7);
        let v = skolem_partition(&z7, &SkolemDomain::Star, b).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.six_parts.len(), 1);
        assert!(w.two_parts.is_empty());
        assert_eq!(
            (vals(&[w.six_parts[0].c.clone()]), vals(&[w.six_parts[0].d.clone()])),
            (vec![1], vec![2])
        );

        let v = skolem_partition(&z(14), &SkolemDomain::NonInvolutions, b).unwrap();
        assert_eq!(v.status, Status::Infeasible);
        let v = skolem_partition(&z(26), &SkolemDomain::NonInvolutions, b).unwrap();
        assert_eq!(v.status, Status::Feasible);

        assert!(matches!(
            skolem_partition(&z(8), &SkolemDomain::Star, b),
            Err(Error::InvalidDomain(_))
        ));
        let e = Group::new(&[2, 2, 2]).unwrap();
        assert!(skolem_partition(&e, &SkolemDomain::NonInvolutions, b)
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn json_shape() {
        let z7 = z(7);
        let v = skolem_partition(&z7, &SkolemDomain::Star, Budget(1000)).unwrap();
        let json = serde_json::to_string(&v.witness.unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"six_parts":[{"c":[1],"d":[2],"members":[[1],[2],[4],[6],[5],[3]]}],"two_parts":[]}"#
        );
    }

    #[test]
    fn predictions() {
        assert_eq!(cyclic_r_skolem_prediction(14), Some(false));
        assert_eq!(cyclic_r_skolem_prediction(20), Some(false));
        assert_eq!(cyclic_r_skolem_prediction(26), Some(true));
        assert_eq!(cyclic_r_skolem_prediction(8), Some(true));
        assert_eq!(cyclic_r_skolem_prediction(12), Some(true));
        assert_eq!(cyclic_r_skolem_prediction(10), Some(true));
        assert!(in_known_r_skolem_family(&Group::new(&[2, 2, 7]).unwrap()));
        assert!(in_known_r_skolem_family(&Group::new(&[2, 14]).unwrap()));
        assert!(!in_known_r_skolem_family(&Group::new(&[4, 7]).unwrap()));
        assert!(!in_known_r_skolem_family(&Group::new(&[2, 7]).unwrap()));
    }
}
