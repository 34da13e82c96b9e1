//! Finite Abelian groups presented as direct products of cyclic groups.
//!
//! A [`Group`] keeps the factor list exactly as the caller supplied it. Its
//! elements are residue vectors, enumerated in lexicographic order of their
//! coordinates; that order doubles as a dense index (`0..order`) which the
//! search kernels use through [`Arith`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite Abelian group `Z_{m_1} x ... x Z_{m_r}`.
#[derive(Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "Vec<u32>")]
pub struct Group {
    moduli: Arc<[u32]>,
    order: usize,
}

/// An element of a [`Group`], one residue per cyclic factor.
///
/// Elements remember the factor list of their group, so mixing elements of
/// different groups is detected rather than silently reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    moduli: Arc<[u32]>,
    coords: Box<[u32]>,
}

/// An ordered set of elements of one group.
pub type ElementSet = BTreeSet<Element>;

impl Group {
    /// Builds `Z_{m_1} x ... x Z_{m_r}` from its moduli.
    pub fn new(moduli: &[u32]) -> Result<Group> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("at least one modulus is required".into()));
        }
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("modulus {m} is below 2")));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .ok_or_else(|| Error::InvalidGroup("order overflows".into()))?;
        Ok(Group {
            moduli: moduli.into(),
            order,
        })
    }

    /// Cyclic group `Z_n`.
    pub fn cyclic(n: u32) -> Result<Group> {
        Group::new(&[n])
    }

    /// The order-1 group with no factors. Only produced by
    /// [`Group::sylow2_decomposition`].
    pub(crate) fn trivial() -> Group {
        Group {
            moduli: Arc::from(Vec::<u32>::new()),
            order: 1,
        }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// True when the group is cyclic, i.e. its moduli are pairwise coprime.
    pub fn is_cyclic(&self) -> bool {
        let m = &self.moduli;
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| gcd(m[i] as u64, m[j] as u64) == 1))
    }

    pub fn zero(&self) -> Element {
        Element {
            moduli: self.moduli.clone(),
            coords: vec![0; self.rank()].into(),
        }
    }

    /// The element with the given coordinates; each must already be reduced.
    pub fn element(&self, coords: &[u32]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "{} coordinates given for a group with {} factors",
                coords.len(),
                self.rank()
            )));
        }
        for (&c, &m) in coords.iter().zip(self.moduli.iter()) {
            if c >= m {
                return Err(Error::InvalidElement(format!("coordinate {c} not reduced modulo {m}")));
            }
        }
        Ok(Element {
            moduli: self.moduli.clone(),
            coords: coords.into(),
        })
    }

    /// The element with the given coordinates, each reduced into range.
    pub fn element_reduced(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "{} coordinates given for a group with {} factors",
                coords.len(),
                self.rank()
            )));
        }
        let reduced: Vec<u32> = coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&c, &m)| c.rem_euclid(m as i64) as u32)
            .collect();
        self.element(&reduced)
    }

    pub fn contains(&self, g: &Element) -> bool {
        g.moduli == self.moduli
    }

    fn check(&self, g: &Element) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{g} is not an element of {self}")))
        }
    }

    /// Position of `g` in the canonical (lexicographic) element order.
    pub fn index_of(&self, g: &Element) -> Result<usize> {
        self.check(g)?;
        Ok(self.index_unchecked(g))
    }

    pub(crate) fn index_unchecked(&self, g: &Element) -> usize {
        g.coords
            .iter()
            .zip(self.moduli.iter())
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    /// The element at position `index` of the canonical order.
    pub fn element_at(&self, mut index: usize) -> Element {
        assert!(index < self.order, "index {index} out of range for {self}");
        let mut coords = vec![0u32; self.rank()];
        for (slot, &m) in coords.iter_mut().zip(self.moduli.iter()).rev() {
            *slot = (index % m as usize) as u32;
            index /= m as usize;
        }
        Element {
            moduli: self.moduli.clone(),
            coords: coords.into(),
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// `Γ*`, the non-identity elements.
    pub fn nonzero(&self) -> ElementSet {
        self.elements().skip(1).collect()
    }

    pub fn all(&self) -> ElementSet {
        self.elements().collect()
    }

    pub fn add(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, h))
    }

    fn add_unchecked(&self, g: &Element, h: &Element) -> Element {
        let coords: Vec<u32> = g
            .coords
            .iter()
            .zip(h.coords.iter())
            .zip(self.moduli.iter())
            .map(|((&a, &b), &m)| ((a as u64 + b as u64) % m as u64) as u32)
            .collect();
        Element {
            moduli: self.moduli.clone(),
            coords: coords.into(),
        }
    }

    pub fn neg(&self, g: &Element) -> Result<Element> {
        self.check(g)?;
        Ok(self.neg_unchecked(g))
    }

    fn neg_unchecked(&self, g: &Element) -> Element {
        let coords: Vec<u32> = g
            .coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&a, &m)| (m - a) % m)
            .collect();
        Element {
            moduli: self.moduli.clone(),
            coords: coords.into(),
        }
    }

    pub fn sub(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, &self.neg_unchecked(h)))
    }

    /// `k·g`; negative `k` multiplies the inverse.
    pub fn scalar_mul(&self, k: i64, g: &Element) -> Result<Element> {
        self.check(g)?;
        let coords: Vec<u32> = g
            .coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&a, &m)| {
                let m = m as i128;
                ((k as i128 * a as i128).rem_euclid(m)) as u32
            })
            .collect();
        Ok(Element {
            moduli: self.moduli.clone(),
            coords: coords.into(),
        })
    }

    /// Sum of a collection of elements.
    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        items.into_iter().try_fold(self.zero(), |acc, g| self.add(&acc, g))
    }

    /// Order of `g` (smallest `k ≥ 1` with `k·g = 0`).
    pub fn order_of(&self, g: &Element) -> Result<usize> {
        self.check(g)?;
        Ok(g.coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&a, &m)| (m as u64 / gcd(a as u64, m as u64)) as usize)
            .fold(1, lcm))
    }

    /// `I(Γ)`: the elements of order exactly 2.
    pub fn involutions(&self) -> ElementSet {
        let found: ElementSet = self
            .elements()
            .filter(|g| !g.is_zero() && self.add_unchecked(g, g).is_zero())
            .collect();
        let even = self.moduli.iter().filter(|&&m| m % 2 == 0).count();
        assert_eq!(
            found.len() + 1,
            1 << even,
            "involution count disagrees with the number of even factors"
        );
        found
    }

    /// Number of involutions, `2^r - 1` with `r` the number of even moduli.
    pub fn involution_count(&self) -> usize {
        (1usize << self.moduli.iter().filter(|&&m| m % 2 == 0).count()) - 1
    }

    /// `R = Γ* \ I(Γ)`.
    pub fn non_involutions(&self) -> ElementSet {
        self.elements()
            .filter(|g| !g.is_zero() && !self.add_unchecked(g, g).is_zero())
            .collect()
    }

    /// Sum of every element of the group.
    ///
    /// Computed by direct summation, then checked against the involution
    /// lemma: the unique involution when there is exactly one, zero otherwise.
    pub fn sum_all_elements(&self) -> Element {
        let total = self.elements().fold(self.zero(), |acc, g| self.add_unchecked(&acc, &g));
        let inv = self.involutions();
        let expected = if inv.len() == 1 {
            inv.into_iter().next().unwrap()
        } else {
            self.zero()
        };
        assert_eq!(total, expected, "sum of all elements contradicts the involution lemma");
        total
    }

    /// Splits the group as `L x H` with `L` the Sylow 2-subgroup and `|H|` odd.
    pub fn sylow2_decomposition(&self) -> Sylow2Decomposition {
        let mut l_moduli = Vec::new();
        let mut h_moduli = Vec::new();
        let mut slots = Vec::with_capacity(self.rank());
        for &m in self.moduli.iter() {
            let two = 1u32 << m.trailing_zeros();
            let odd = m / two;
            let l_slot = (two > 1).then(|| {
                l_moduli.push(two);
                l_moduli.len() - 1
            });
            let h_slot = (odd > 1).then(|| {
                h_moduli.push(odd);
                h_moduli.len() - 1
            });
            slots.push(FactorSplit {
                two,
                odd,
                l_slot,
                h_slot,
            });
        }
        let make = |m: Vec<u32>| {
            if m.is_empty() {
                Group::trivial()
            } else {
                Group::new(&m).expect("factor moduli are at least 2")
            }
        };
        let l = make(l_moduli);
        let h = make(h_moduli);
        debug_assert_eq!(l.order() * h.order(), self.order());
        Sylow2Decomposition {
            group: self.clone(),
            l,
            h,
            slots,
        }
    }

    /// Dense arithmetic tables for the search kernels.
    pub(crate) fn arith(&self) -> Arith {
        Arith::new(self)
    }
}

impl TryFrom<Vec<u32>> for Group {
    type Error = Error;

    fn try_from(moduli: Vec<u32>) -> Result<Group> {
        Group::new(&moduli)
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.moduli.serialize(s)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z_{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Element {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.moduli
            .cmp(&other.moduli)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            write!(f, "{}", self.coords[0])
        } else {
            let parts: Vec<String> = self.coords.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone)]
struct FactorSplit {
    two: u32,
    odd: u32,
    l_slot: Option<usize>,
    h_slot: Option<usize>,
}

/// `Γ ≅ L x H` together with the coordinate maps between the two sides.
#[derive(Debug, Clone)]
pub struct Sylow2Decomposition {
    group: Group,
    l: Group,
    h: Group,
    slots: Vec<FactorSplit>,
}

impl Sylow2Decomposition {
    /// The Sylow 2-subgroup `L` (the trivial group when `|Γ|` is odd).
    pub fn l(&self) -> &Group {
        &self.l
    }

    /// The odd-order part `H`.
    pub fn h(&self) -> &Group {
        &self.h
    }

    /// The 2-rank `η` when `L` is elementary abelian, `None` otherwise.
    pub fn elementary_two_rank(&self) -> Option<usize> {
        self.l.moduli().iter().all(|&m| m == 2).then(|| self.l.rank())
    }

    /// Image of `g` under `Γ -> L x H`.
    pub fn split(&self, g: &Element) -> Result<(Element, Element)> {
        self.group.check(g)?;
        let mut lc = vec![0u32; self.l.rank()];
        let mut hc = vec![0u32; self.h.rank()];
        for (&x, s) in g.coords.iter().zip(&self.slots) {
            if let Some(i) = s.l_slot {
                lc[i] = x % s.two;
            }
            if let Some(i) = s.h_slot {
                hc[i] = x % s.odd;
            }
        }
        Ok((self.l.element(&lc)?, self.h.element(&hc)?))
    }

    /// Inverse of [`split`](Self::split), by the Chinese remainder theorem.
    pub fn join(&self, l: &Element, h: &Element) -> Result<Element> {
        self.l.check(l)?;
        self.h.check(h)?;
        let coords: Vec<u32> = self
            .slots
            .iter()
            .map(|s| {
                let u = s.l_slot.map_or(0, |i| l.coords[i]);
                let v = s.h_slot.map_or(0, |i| h.coords[i]);
                (0..s.odd)
                    .map(|t| u + s.two * t)
                    .find(|x| x % s.odd == v)
                    .expect("2-part and odd part are coprime")
            })
            .collect();
        self.group.element(&coords)
    }
}

/// Index-level arithmetic over a group, used by the search kernels.
#[derive(Debug, Clone)]
pub(crate) struct Arith {
    n: usize,
    moduli: Vec<u32>,
    strides: Vec<usize>,
    neg: Vec<u32>,
    table: Option<Vec<u32>>,
}

const TABLE_LIMIT: usize = 1024;

impl Arith {
    fn new(group: &Group) -> Arith {
        let n = group.order();
        let moduli = group.moduli().to_vec();
        let mut strides = vec![1usize; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1] as usize;
        }
        let mut a = Arith {
            n,
            moduli,
            strides,
            neg: Vec::new(),
            table: None,
        };
        a.neg = (0..n).map(|i| a.slow_neg(i) as u32).collect();
        if n <= TABLE_LIMIT {
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = a.slow_add(i, j) as u32;
                }
            }
            a.table = Some(t);
        }
        a
    }

    fn slow_add(&self, i: usize, j: usize) -> usize {
        let mut out = 0;
        for (k, &m) in self.moduli.iter().enumerate() {
            let m = m as usize;
            let a = (i / self.strides[k]) % m;
            let b = (j / self.strides[k]) % m;
            out += ((a + b) % m) * self.strides[k];
        }
        out
    }

    fn slow_neg(&self, i: usize) -> usize {
        let mut out = 0;
        for (k, &m) in self.moduli.iter().enumerate() {
            let m = m as usize;
            let a = (i / self.strides[k]) % m;
            out += ((m - a) % m) * self.strides[k];
        }
        out
    }

    #[inline]
    pub(crate) fn add(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.n + j] as usize,
            None => self.slow_add(i, j),
        }
    }

    #[inline]
    pub(crate) fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    #[inline]
    pub(crate) fn sub(&self, i: usize, j: usize) -> usize {
        self.add(i, self.neg(j))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as u64, b as u64) as usize * b
}

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Integer partitions of `e` as non-increasing exponent lists, largest part first.
fn exponent_partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// One representative per isomorphism class of Abelian groups of order `n`,
/// in invariant-factor form `Z_{d_1} x ... x Z_{d_k}` with `d_1 | d_2 | ... | d_k`.
///
/// Order 1 yields the trivial group. The listing is deterministic: groups
/// with fewer factors come first.
pub fn enumerate_abelian_groups(n: usize) -> Vec<Group> {
    assert!(n >= 1, "group order must be positive");
    if n == 1 {
        return vec![Group::trivial()];
    }
    let primes = factorize(n);
    let mut combos: Vec<Vec<(usize, Vec<u32>)>> = vec![Vec::new()];
    for &(p, e) in &primes {
        let mut next = Vec::new();
        for combo in &combos {
            for part in exponent_partitions(e) {
                let mut c = combo.clone();
                c.push((p, part));
                next.push(c);
            }
        }
        combos = next;
    }
    let mut groups: Vec<Group> = combos
        .into_iter()
        .map(|combo| {
            let k = combo.iter().map(|(_, part)| part.len()).max().unwrap_or(0);
            // d_k is the product of the largest prime powers, d_{k-1} of the next, ...
            let mut factors = vec![1u64; k];
            for (p, part) in &combo {
                for (i, &exp) in part.iter().enumerate() {
                    factors[k - 1 - i] *= (*p as u64).pow(exp);
                }
            }
            let moduli: Vec<u32> = factors.into_iter().filter(|&d| d > 1).map(|d| d as u32).collect();
            Group::new(&moduli).expect("invariant factors exceed 1")
        })
        .collect();
    groups.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| b.moduli().cmp(a.moduli())));
    groups.dedup();
    groups
}

/// Every non-trivial Abelian group (one per isomorphism class) with order in `lo..=hi`.
pub fn groups_in_range(lo: usize, hi: usize) -> Vec<Group> {
    (lo.max(2)..=hi).flat_map(enumerate_abelian_groups).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Group {
        Group::cyclic(n).unwrap()
    }

    #[test]
    fn make_group_examples() {
        assert_eq!(z(7).order(), 7);
        let g = Group::new(&[2, 4]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(matches!(Group::new(&[1]), Err(Error::InvalidGroup(_))));
        assert!(matches!(Group::new(&[]), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn arithmetic_examples() {
        let g = z(7);
        let e = |c| g.element(&[c]).unwrap();
        assert_eq!(g.add(&e(3), &e(5)).unwrap(), e(1));
        assert_eq!(g.scalar_mul(3, &e(5)).unwrap(), e(1));
        assert_eq!(g.sub(&e(2), &e(5)).unwrap(), e(4));

        let h = Group::new(&[2, 4]).unwrap();
        let x = h.element(&[1, 3]).unwrap();
        assert_eq!(h.neg(&x).unwrap(), h.element(&[1, 1]).unwrap());
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = z(7);
        let b = z(8);
        let x = a.element(&[1]).unwrap();
        let y = b.element(&[1]).unwrap();
        assert!(matches!(a.add(&x, &y), Err(Error::GroupMismatch(_))));
        assert!(matches!(b.neg(&x), Err(Error::GroupMismatch(_))));
        assert!(a.element(&[7]).is_err());
        assert!(a.element(&[1, 0]).is_err());
    }

    #[test]
    fn involution_examples() {
        assert!(z(7).involutions().is_empty());
        let z8 = z(8);
        assert_eq!(z8.involutions(), [z8.element(&[4]).unwrap()].into_iter().collect());
        let g = Group::new(&[2, 4]).unwrap();
        let expected: ElementSet = [[1, 0], [0, 2], [1, 2]].iter().map(|c| g.element(c).unwrap()).collect();
        assert_eq!(g.involutions(), expected);
    }

    #[test]
    fn sum_all_examples() {
        assert_eq!(z(8).sum_all_elements(), z(8).element(&[4]).unwrap());
        assert!(z(7).sum_all_elements().is_zero());
        assert!(Group::new(&[2, 2]).unwrap().sum_all_elements().is_zero());
    }

    #[test]
    fn sylow_examples() {
        let d = z(12).sylow2_decomposition();
        assert_eq!(d.l().moduli(), &[4]);
        assert_eq!(d.h().moduli(), &[3]);

        let d = z(7).sylow2_decomposition();
        assert!(d.l().is_trivial());
        assert!(d.l().moduli().is_empty());
        assert_eq!(d.h().moduli(), &[7]);

        let d = Group::new(&[2, 6]).unwrap().sylow2_decomposition();
        assert_eq!(d.l().moduli(), &[2, 2]);
        assert_eq!(d.h().moduli(), &[3]);
        assert_eq!(d.elementary_two_rank(), Some(2));
    }

    #[test]
    fn sylow_split_join_roundtrip() {
        for moduli in [&[12u32][..], &[2, 6], &[4, 10], &[7], &[8]] {
            let g = Group::new(moduli).unwrap();
            let d = g.sylow2_decomposition();
            assert_eq!(d.l().order() * d.h().order(), g.order());
            assert_eq!(d.l().order().count_ones(), 1);
            assert_eq!(d.h().order() % 2, 1);
            for x in g.elements() {
                for y in g.elements() {
                    let (xl, xh) = d.split(&x).unwrap();
                    let (yl, yh) = d.split(&y).unwrap();
                    let (sl, sh) = d.split(&g.add(&x, &y).unwrap()).unwrap();
                    // split is a homomorphism
                    assert_eq!(sl, d.l().add(&xl, &yl).unwrap());
                    assert_eq!(sh, d.h().add(&xh, &yh).unwrap());
                }
                let (l, h) = d.split(&x).unwrap();
                assert_eq!(d.join(&l, &h).unwrap(), x);
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let names = |n| {
            enumerate_abelian_groups(n)
                .into_iter()
                .map(|g| g.moduli().to_vec())
                .collect::<BTreeSet<_>>()
        };
        assert_eq!(names(8), [vec![8], vec![2, 4], vec![2, 2, 2]].into_iter().collect());
        assert_eq!(names(6), [vec![6]].into_iter().collect());
        assert_eq!(names(12), [vec![12], vec![2, 6]].into_iter().collect());
        assert_eq!(enumerate_abelian_groups(1).len(), 1);
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let g = Group::new(&[3, 4]).unwrap();
        let elems: Vec<Element> = g.elements().collect();
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(g.index_of(e).unwrap(), i);
        }
    }

    #[test]
    fn arith_matches_element_arithmetic() {
        let g = Group::new(&[2, 6]).unwrap();
        let a = g.arith();
        for i in 0..g.order() {
            for j in 0..g.order() {
                let s = g.add(&g.element_at(i), &g.element_at(j)).unwrap();
                assert_eq!(a.add(i, j), g.index_of(&s).unwrap());
                assert_eq!(a.slow_add(i, j), a.add(i, j));
            }
            assert_eq!(a.neg(i), g.index_of(&g.neg(&g.element_at(i)).unwrap()).unwrap());
        }
    }

    #[test]
    fn display() {
        assert_eq!(Group::new(&[2, 4]).unwrap().to_string(), "Z_2xZ_4");
        assert_eq!(z(7).to_string(), "Z_7");
        assert_eq!(
            Group::new(&[2, 4]).unwrap().element(&[1, 3]).unwrap().to_string(),
            "(1,3)"
        );
    }

    #[test]
    fn json_forms() {
        let g = Group::new(&[2, 4]).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[2,4]");
        assert_eq!(serde_json::to_string(&g.element(&[1, 3]).unwrap()).unwrap(), "[1,3]");
        let back: Group = serde_json::from_str("[2,4]").unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Group>("[1]").is_err());
    }
}
