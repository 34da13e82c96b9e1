//! Orthomorphisms and complete mappings of finite Abelian groups.
//!
//! In additive notation a bijection `φ` is an orthomorphism when
//! `θ(g) = φ(g) - g` is also a bijection; `θ` is then a complete mapping.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::partition::{realize_partition, RealizationInstance};
use crate::search::{Budget, NodeCounter, SearchVerdict, EXACT_SEARCH_CEILING};

/// A bijection of a group's elements, stored as images in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPermutation {
    group: Group,
    images: Vec<Element>,
}

impl GroupPermutation {
    /// `images[i]` is the image of the `i`-th element in canonical order.
    pub fn new(group: &Group, images: Vec<Element>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::InvalidPermutation(format!(
                "{} images for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        let mut hit = vec![false; group.order()];
        for e in &images {
            let i = group
                .index_of(e)
                .map_err(|_| Error::InvalidPermutation(format!("{e} is not an element of {group}")))?;
            if std::mem::replace(&mut hit[i], true) {
                return Err(Error::InvalidPermutation(format!("{e} is hit twice")));
            }
        }
        Ok(GroupPermutation {
            group: group.clone(),
            images,
        })
    }

    pub fn from_fn(group: &Group, f: impl Fn(&Element) -> Element) -> Result<Self> {
        Self::new(group, group.elements().map(|g| f(&g)).collect())
    }

    pub fn identity(group: &Group) -> Self {
        GroupPermutation {
            group: group.clone(),
            images: group.elements().collect(),
        }
    }

    fn from_indices(group: &Group, idx: &[usize]) -> Self {
        GroupPermutation {
            group: group.clone(),
            images: idx.iter().map(|&i| group.element_at(i)).collect(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, g: &Element) -> Result<Element> {
        Ok(self.images[self.group.index_of(g)?].clone())
    }

    fn index_map(&self) -> Vec<usize> {
        self.images.iter().map(|e| self.group.index_of(e).unwrap()).collect()
    }

    /// Cycles in canonical order of their smallest element, each starting
    /// there.
    pub fn cycles(&self) -> Vec<Vec<Element>> {
        let map = self.index_map();
        let mut seen = vec![false; map.len()];
        let mut out = Vec::new();
        for start in 0..map.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(self.group.element_at(x));
                x = map[x];
            }
            out.push(cycle);
        }
        out
    }
}

/// A multiset of cycle lengths, kept sorted. Displays as `1 + 3^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn count(&self, len: usize) -> usize {
        self.0.iter().filter(|&&l| l == len).count()
    }
}

impl From<Vec<usize>> for CycleType {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        CycleType(v)
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.0 {
            *counts.entry(l).or_default() += 1;
        }
        let terms: Vec<String> = counts
            .into_iter()
            .map(|(l, c)| if c == 1 { l.to_string() } else { format!("{l}^{c}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn cycle_structure(p: &GroupPermutation) -> CycleType {
    let t: CycleType = p.cycles().iter().map(|c| c.len()).collect::<Vec<_>>().into();
    assert_eq!(t.total(), p.group.order());
    t
}

/// An orthomorphism `φ` with its derived complete mapping `θ = φ - id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthomorphismCertificate {
    pub phi: GroupPermutation,
    pub theta: GroupPermutation,
    pub phi_cycles: CycleType,
    pub theta_cycles: CycleType,
}

impl OrthomorphismCertificate {
    /// Recomputes `θ` from `φ` and rechecks both bijections.
    pub fn recheck(&self) -> bool {
        matches!(is_orthomorphism(&self.phi), Some(c) if c == *self)
    }
}

/// The certificate when `θ(g) = p(g) - g` is a bijection, `None` otherwise.
pub fn is_orthomorphism(p: &GroupPermutation) -> Option<OrthomorphismCertificate> {
    let g = &p.group;
    let theta: Vec<Element> = g
        .elements()
        .zip(&p.images)
        .map(|(x, y)| g.sub(y, &x).unwrap())
        .collect();
    let theta = GroupPermutation::new(g, theta).ok()?;
    for (x, t) in g.elements().zip(&theta.images) {
        assert_eq!(&g.add(t, &x).unwrap(), p.apply(&x).as_ref().unwrap());
    }
    Some(OrthomorphismCertificate {
        phi_cycles: cycle_structure(p),
        theta_cycles: cycle_structure(&theta),
        phi: p.clone(),
        theta,
    })
}

fn check_order(group: &Group) -> Result<()> {
    if group.order() > EXACT_SEARCH_CEILING {
        return Err(Error::TooLarge {
            order: group.order(),
            ceiling: EXACT_SEARCH_CEILING,
        });
    }
    Ok(())
}

/// Exhaustive search for an orthomorphism (equivalently a complete mapping)
/// with `φ(0) = 0`; translating any orthomorphism gives one of this form.
/// A completed search is checked against the criterion `|I(Γ)| ≠ 1`.
pub fn complete_mapping_exists(group: &Group, budget: Budget) -> Result<SearchVerdict<OrthomorphismCertificate>> {
    check_order(group)?;
    let a = group.arith();
    let n = group.order();

    fn rec(
        x: usize,
        a: &crate::group::Arith,
        phi: &mut Vec<usize>,
        used_phi: &mut [bool],
        used_theta: &mut [bool],
        counter: &mut NodeCounter,
    ) -> Option<bool> {
        if x == phi.len() {
            return Some(true);
        }
        for y in 1..phi.len() {
            let t = a.sub(y, x);
            if used_phi[y] || used_theta[t] {
                continue;
            }
            if !counter.tick() {
                return None;
            }
            used_phi[y] = true;
            used_theta[t] = true;
            phi[x] = y;
            if rec(x + 1, a, phi, used_phi, used_theta, counter)? {
                return Some(true);
            }
            used_phi[y] = false;
            used_theta[t] = false;
        }
        Some(false)
    }

    let mut phi = vec![0usize; n];
    let mut used_phi = vec![false; n];
    let mut used_theta = vec![false; n];
    used_phi[0] = true;
    used_theta[0] = true;
    let mut counter = NodeCounter::new(budget);
    let verdict = match rec(1, &a, &mut phi, &mut used_phi, &mut used_theta, &mut counter) {
        Some(true) => {
            let cert = is_orthomorphism(&GroupPermutation::from_indices(group, &phi))
                .expect("search keeps both maps injective");
            SearchVerdict::Found(cert)
        }
        Some(false) => SearchVerdict::Exhausted,
        None => SearchVerdict::BudgetExceeded,
    };
    match &verdict {
        SearchVerdict::Found(_) => assert_ne!(group.involution_count(), 1, "{group} cannot have a complete mapping"),
        SearchVerdict::Exhausted => assert_eq!(group.involution_count(), 1, "{group} must have a complete mapping"),
        SearchVerdict::BudgetExceeded => {}
    }
    Ok(verdict)
}

/// The hypotheses of the triple construction, evaluated for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleHypotheses {
    /// `|Γ| ≡ 1 (mod 3)`.
    pub order_1_mod_3: bool,
    /// `|I(Γ)| ≠ 1`.
    pub involutions_not_1: bool,
    /// The 2-part has order `2^η ≡ 1 (mod 3)` with `η ≥ 1`.
    pub two_part_1_mod_3: bool,
    /// The odd part has order `≡ 1 (mod 6)`.
    pub odd_part_1_mod_6: bool,
    /// `|Γ| ≡ 4 (mod 24)`, the form the result is sometimes quoted in.
    pub order_4_mod_24: bool,
}

impl TripleHypotheses {
    pub fn of(group: &Group) -> Self {
        let n = group.order();
        let s = group.sylow2_decomposition();
        let l = s.l().order();
        TripleHypotheses {
            order_1_mod_3: n % 3 == 1,
            involutions_not_1: group.involution_count() != 1,
            two_part_1_mod_3: l > 1 && l % 3 == 1,
            odd_part_1_mod_6: s.h().order() % 6 == 1,
            order_4_mod_24: n % 24 == 4,
        }
    }

    /// All hypotheses of the theorem (the mod-24 form is not one of them).
    pub fn all_hold(&self) -> bool {
        self.order_1_mod_3 && self.involutions_not_1 && self.two_part_1_mod_3 && self.odd_part_1_mod_6
    }

    /// The hypotheses and the mod-24 form disagree on this group.
    pub fn forms_disagree(&self) -> bool {
        self.all_hold() != self.order_4_mod_24
    }
}

/// Output of the triple construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleConstruction {
    pub certificate: OrthomorphismCertificate,
    /// The zero-sum triples `(x_0, x_1, x_2)` used.
    pub triples: Vec<[Element; 3]>,
    pub hypotheses: TripleHypotheses,
    /// Whether `φ` itself fixes 0 and is a product of 3-cycles.
    pub phi_is_3_cycles: bool,
}

/// Builds `φ(0) = 0`, `φ(x_j) = -x_{j+2}` (indices mod 3) from the given
/// zero-sum triples partitioning `Γ*`, and checks that `θ(x_j) = x_{j+1}`.
pub fn construct_from_partition(group: &Group, triples: &[[Element; 3]]) -> Result<TripleConstruction> {
    let g = group;
    let mut images: Vec<Option<Element>> = vec![None; g.order()];
    images[0] = Some(g.zero());
    for t in triples {
        if !g.sum(t.iter())?.is_zero() {
            return Err(Error::InvalidInstance(format!(
                "triple ({}, {}, {}) does not sum to 0",
                t[0], t[1], t[2]
            )));
        }
        for j in 0..3 {
            let i = g.index_of(&t[j])?;
            if images[i].is_some() {
                return Err(Error::InvalidInstance(format!("{} is covered twice", t[j])));
            }
            images[i] = Some(g.neg(&t[(j + 2) % 3])?);
        }
    }
    let images: Vec<Element> = images
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| Error::InvalidInstance(format!("{} is not covered", g.element_at(i)))))
        .collect::<Result<_>>()?;
    let phi = GroupPermutation::new(g, images)?;
    let cert = is_orthomorphism(&phi).expect("the triple construction always gives an orthomorphism");
    assert!(cert.theta.apply(&g.zero())?.is_zero());
    for t in triples {
        for j in 0..3 {
            assert_eq!(cert.theta.apply(&t[j])?, t[(j + 1) % 3]);
        }
    }
    let threes = triples.len();
    assert_eq!(cert.theta_cycles.count(3), threes);
    assert_eq!(cert.theta_cycles.count(1), 1);
    let phi_is_3_cycles = cert.phi_cycles.count(1) == 1 && cert.phi_cycles.count(3) == threes;
    Ok(TripleConstruction {
        certificate: cert,
        triples: triples.to_vec(),
        hypotheses: TripleHypotheses::of(g),
        phi_is_3_cycles,
    })
}

/// Finds a zero-sum triple partition of `Γ*` with the exact solver and
/// applies [`construct_from_partition`]. Elements of each triple are taken
/// in canonical order.
pub fn construct_from_triples(group: &Group, budget: Budget) -> Result<TripleConstruction> {
    let n = group.order();
    if n % 3 != 1 {
        return Err(Error::ConstructionUnavailable(format!("order {n} is not 1 mod 3")));
    }
    check_order(group)?;
    let inst = RealizationInstance::zero_sum(group, group.nonzero(), vec![3; (n - 1) / 3])?;
    let v = realize_partition(&inst, budget);
    let w = v.witness.ok_or_else(|| {
        Error::ConstructionUnavailable(format!("no zero-sum triple partition of {group}*: {}", v.reason))
    })?;
    let triples: Vec<[Element; 3]> = w
        .parts
        .into_iter()
        .map(|p| {
            let mut p = p;
            p.sort();
            [p[0].clone(), p[1].clone(), p[2].clone()]
        })
        .collect();
    construct_from_partition(group, &triples)
}

/// Which map must consist of `k`-cycles in [`search_k_cycle_orthomorphism`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleMap {
    Phi,
    Theta,
}

/// Exhaustive search for an orthomorphism whose selected map fixes 0 and
/// permutes `Γ*` in cycles of length exactly `k`.
///
/// The selected map is built cycle by cycle, each cycle starting at the
/// smallest unplaced element; the other map is derived and kept injective.
pub fn search_k_cycle_orthomorphism(
    group: &Group,
    k: usize,
    which: CycleMap,
    budget: Budget,
) -> Result<SearchVerdict<OrthomorphismCertificate>> {
    let n = group.order();
    if k < 2 || !(n - 1).is_multiple_of(k) {
        return Err(Error::InvalidInstance(format!(
            "k = {k} must be at least 2 and divide {}",
            n - 1
        )));
    }
    check_order(group)?;
    let a = group.arith();

    struct State<'a> {
        a: &'a crate::group::Arith,
        k: usize,
        which: CycleMap,
        sigma: Vec<usize>,
        placed: Vec<bool>,
        other_used: Vec<bool>,
        counter: NodeCounter,
    }

    impl State<'_> {
        fn derived(&self, x: usize, y: usize) -> usize {
            match self.which {
                CycleMap::Phi => self.a.sub(y, x),
                CycleMap::Theta => self.a.add(y, x),
            }
        }

        /// Extends the open cycle starting at `start` whose last element is
        /// `last` and which has `len` elements so far.
        fn extend(&mut self, start: usize, last: usize, len: usize) -> Option<bool> {
            if len == self.k {
                let t = self.derived(last, start);
                if self.other_used[t] {
                    return Some(false);
                }
                self.other_used[t] = true;
                self.sigma[last] = start;
                if self.next_cycle()? {
                    return Some(true);
                }
                self.other_used[t] = false;
                return Some(false);
            }
            for y in start + 1..self.sigma.len() {
                if self.placed[y] {
                    continue;
                }
                let t = self.derived(last, y);
                if self.other_used[t] {
                    continue;
                }
                if !self.counter.tick() {
                    return None;
                }
                self.placed[y] = true;
                self.other_used[t] = true;
                self.sigma[last] = y;
                if self.extend(start, y, len + 1)? {
                    return Some(true);
                }
                self.placed[y] = false;
                self.other_used[t] = false;
            }
            Some(false)
        }

        fn next_cycle(&mut self) -> Option<bool> {
            let Some(start) = self.placed.iter().position(|&p| !p) else {
                return Some(true);
            };
            self.placed[start] = true;
            if self.extend(start, start, 1)? {
                return Some(true);
            }
            self.placed[start] = false;
            Some(false)
        }
    }

    let mut st = State {
        a: &a,
        k,
        which,
        sigma: vec![0; n],
        placed: vec![false; n],
        other_used: vec![false; n],
        counter: NodeCounter::new(budget),
    };
    st.placed[0] = true;
    st.other_used[0] = true;
    let verdict = match st.next_cycle() {
        Some(true) => {
            let phi: Vec<usize> = match which {
                CycleMap::Phi => st.sigma.clone(),
                CycleMap::Theta => (0..n).map(|x| a.add(st.sigma[x], x)).collect(),
            };
            let cert = is_orthomorphism(&GroupPermutation::from_indices(group, &phi))
                .expect("search keeps both maps injective");
            let selected = match which {
                CycleMap::Phi => &cert.phi_cycles,
                CycleMap::Theta => &cert.theta_cycles,
            };
            assert!(selected.count(1) == 1 && selected.count(k) * k == n - 1);
            SearchVerdict::Found(cert)
        }
        Some(false) => SearchVerdict::Exhausted,
        None => SearchVerdict::BudgetExceeded,
    };
    Ok(verdict)
}

/// Whether `seq`, a listing of `Γ*`, has pairwise distinct cyclic
/// differences `g_{i+1} - g_i` (the last one wrapping to `g_1 - g_{n-1}`).
pub fn is_r_sequencing(group: &Group, seq: &[Element]) -> Result<bool> {
    let mut listed: Vec<Element> = seq.to_vec();
    listed.sort();
    let star: Vec<Element> = group.nonzero().into_iter().collect();
    if listed != star {
        return Err(Error::InvalidPermutation(
            "the sequence is not a listing of the nonzero elements".into(),
        ));
    }
    let mut seen = std::collections::HashSet::new();
    for i in 0..seq.len() {
        let d = group.sub(&seq[(i + 1) % seq.len()], &seq[i])?;
        if !seen.insert(d) {
            return Ok(false);
        }
    }
    Ok(true)
}
