//! Group labelings of graphs built from zero-sum subsets: antimagic
//! labelings of k-trees, irregular labelings and group irregularity
//! strength, irregular labelings of digraphs, and distance magic labelings
//! of complete multipartite graphs.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, RootedTree};
use crate::group::{enumerate_abelian_groups, Element, ElementSet, Group};
use crate::partition::{
    constant_sum_partition, heuristic_realize, realize_partition, FeasibilityVerdict, RealizationInstance, Status,
};
use crate::search::{Budget, NodeCounter, SearchVerdict, EXACT_SEARCH_CEILING};

/// Labels indexed by edge.
pub type EdgeLabeling = Vec<Element>;
/// Labels indexed by arc.
pub type ArcLabeling = Vec<Element>;
/// Labels indexed by vertex.
pub type VertexLabeling = Vec<Element>;

fn check_labels(group: &Group, labels: &[Element], expected: usize, what: &str) -> Result<()> {
    if labels.len() != expected {
        return Err(Error::InvalidInstance(format!(
            "{} labels for {expected} {what}",
            labels.len()
        )));
    }
    if let Some(e) = labels.iter().find(|e| !group.contains(e)) {
        return Err(Error::GroupMismatch(format!("{e} is not an element of {group}")));
    }
    Ok(())
}

/// Weight of each vertex: the sum of the labels on its edges.
pub fn vertex_weights(group: &Group, graph: &Graph, labels: &[Element]) -> Result<Vec<Element>> {
    check_labels(group, labels, graph.edge_count(), "edges")?;
    let mut w = vec![group.zero(); graph.n()];
    for (&(u, v), l) in graph.edges().iter().zip(labels) {
        w[u] = group.add(&w[u], l)?;
        w[v] = group.add(&w[v], l)?;
    }
    Ok(w)
}

fn all_distinct(items: &[Element]) -> bool {
    let mut seen = HashSet::new();
    items.iter().all(|e| seen.insert(e))
}

/// The labeling is injective into `pool` and all vertex weights differ.
pub fn verify_antimagic(group: &Group, graph: &Graph, labels: &[Element], pool: &ElementSet) -> bool {
    let Ok(w) = vertex_weights(group, graph, labels) else {
        return false;
    };
    labels.iter().all(|l| pool.contains(l)) && all_distinct(labels) && all_distinct(&w)
}

/// A `Γ*`-antimagic labeling of a rooted `k`-tree on `|Γ|` vertices: the
/// child edges of the `i`-th internal vertex are labeled with a zero-sum
/// part `A_i`, so each vertex weighs the label of its parent edge.
pub fn antimagic_label_ktree(group: &Group, tree: &RootedTree, k: usize, budget: Budget) -> Result<EdgeLabeling> {
    let g = tree.graph();
    if g.n() != group.order() {
        return Err(Error::InvalidInstance(format!(
            "the tree has {} vertices but the group has order {}",
            g.n(),
            group.order()
        )));
    }
    if !tree.is_k_tree(k) {
        return Err(Error::InvalidGraph(format!("not a {k}-tree")));
    }
    let internal = tree.internal_vertices();
    let sizes: Vec<usize> = internal.iter().map(|&v| tree.children(v).len()).collect();
    let inst = RealizationInstance::zero_sum(group, group.nonzero(), sizes)?;
    let v = solve(&inst, budget);
    let parts = v
        .witness
        .ok_or_else(|| Error::ConstructionUnavailable(format!("no zero-sum partition of {group}*: {}", v.reason)))?;
    let mut labels: Vec<Option<Element>> = vec![None; g.edge_count()];
    for (&p, part) in internal.iter().zip(&parts.parts) {
        for (&child, label) in tree.children(p).iter().zip(part) {
            labels[tree.parent_edge(child).unwrap()] = Some(label.clone());
        }
    }
    let labels: EdgeLabeling = labels.into_iter().map(|l| l.unwrap()).collect();
    assert!(
        verify_antimagic(group, g, &labels, &group.nonzero()),
        "k-tree construction produced a labeling that is not antimagic"
    );
    Ok(labels)
}

/// Exact search when the order allows it, heuristic otherwise.
fn solve(inst: &RealizationInstance, budget: Budget) -> FeasibilityVerdict {
    if inst.group().order() <= EXACT_SEARCH_CEILING {
        realize_partition(inst, budget)
    } else {
        heuristic_realize(inst, 0)
    }
}

/// Adds `a` to the labels of the edges at odd positions of `walk` (the
/// first edge is position 1) and `-a` to the others. Only the endpoint
/// weights change: the first by `+a`, the last by `+a` (odd length) or `-a`
/// (even length).
pub fn augmented_walk_adjust(
    group: &Group,
    graph: &Graph,
    labels: &[Element],
    walk: &[usize],
    a: &Element,
) -> Result<EdgeLabeling> {
    let before = vertex_weights(group, graph, labels)?;
    if !group.contains(a) {
        return Err(Error::GroupMismatch(format!("{a} is not an element of {group}")));
    }
    let mut out = labels.to_vec();
    let neg = group.neg(a)?;
    for (i, step) in walk.windows(2).enumerate() {
        let e = graph
            .edge_index(step[0], step[1])
            .ok_or_else(|| Error::InvalidGraph(format!("the walk uses a missing edge ({}, {})", step[0], step[1])))?;
        let delta = if i % 2 == 0 { a } else { &neg };
        out[e] = group.add(&out[e], delta)?;
    }
    let after = vertex_weights(group, graph, &out)?;
    if walk.len() >= 2 {
        let first = walk[0];
        let last = *walk.last().unwrap();
        let end_delta = if (walk.len() - 1) % 2 == 1 {
            a.clone()
        } else {
            neg.clone()
        };
        for v in 0..graph.n() {
            let mut expected = before[v].clone();
            if v == first {
                expected = group.add(&expected, a)?;
            }
            if v == last {
                expected = group.add(&expected, &end_delta)?;
            }
            assert_eq!(after[v], expected, "walk adjustment changed the weight of vertex {v}");
        }
    } else {
        assert_eq!(after, before);
    }
    Ok(out)
}

/// The per-component condition for a weight vector to be realizable by
/// edge labels: a bipartite component needs equal sums on its two sides; a
/// non-bipartite one needs its total in `2Γ`.
struct ComponentRule {
    vertices: Vec<usize>,
    /// Side of each vertex for bipartite components.
    sides: Option<Vec<bool>>,
}

fn component_rules(graph: &Graph) -> Vec<ComponentRule> {
    graph
        .components()
        .into_iter()
        .map(|c| {
            let sides = graph.two_colouring(&c).map(|col| {
                let mut s = vec![false; graph.n()];
                for (v, side) in col {
                    s[v] = side;
                }
                s
            });
            ComponentRule { vertices: c, sides }
        })
        .collect()
}

fn component_realizable(group: &Group, rule: &ComponentRule, w: &[Element], doubles: &HashSet<Element>) -> bool {
    let mut total = group.zero();
    for &v in &rule.vertices {
        let term = match &rule.sides {
            Some(s) if s[v] => group.neg(&w[v]).unwrap(),
            _ => w[v].clone(),
        };
        total = group.add(&total, &term).unwrap();
    }
    match rule.sides {
        Some(_) => total.is_zero(),
        None => doubles.contains(&total),
    }
}

/// Edge labels realizing the vertex weights `w`, which must satisfy the
/// component conditions. Tree edges are set leaf to root; in a
/// non-bipartite component the root's remaining defect `2b` is removed
/// along a closed walk of odd length through the root.
pub fn labels_for_weights(group: &Group, graph: &Graph, w: &[Element]) -> Result<EdgeLabeling> {
    let mut labels = vec![group.zero(); graph.edge_count()];
    for rule in component_rules(graph) {
        let root = rule.vertices[0];
        let tree = graph.bfs_tree(root);
        let mut current = vec![group.zero(); graph.n()];
        for &(v, link) in tree.iter().rev() {
            if let Some((p, e)) = link {
                let l = group.sub(&w[v], &current[v])?;
                current[v] = w[v].clone();
                current[p] = group.add(&current[p], &l)?;
                labels[e] = l;
            }
        }
        let defect = group.sub(&w[root], &current[root])?;
        if defect.is_zero() {
            continue;
        }
        if rule.sides.is_some() {
            return Err(Error::InvalidInstance(
                "the weights violate the bipartite balance condition".into(),
            ));
        }
        let half = group
            .elements()
            .find(|b| group.add(b, b).unwrap() == defect)
            .ok_or_else(|| Error::InvalidInstance("the component total is not a double".into()))?;
        let walk = odd_closed_walk(graph, root, &tree);
        labels = augmented_walk_adjust(group, graph, &labels, &walk, &half)?;
    }
    Ok(labels)
}

/// A closed walk of odd length from `root` in a non-bipartite component:
/// root to `u`, an edge `u-v` joining vertices of equal tree depth parity,
/// then `v` back to root.
fn odd_closed_walk(graph: &Graph, root: usize, tree: &[(usize, Option<(usize, usize)>)]) -> Vec<usize> {
    let mut parent = vec![None; graph.n()];
    let mut depth = vec![0usize; graph.n()];
    for &(v, link) in tree {
        if let Some((p, _)) = link {
            parent[v] = Some(p);
            depth[v] = depth[p] + 1;
        }
    }
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    let &(u, v) = graph
        .edges()
        .iter()
        .find(|&&(u, v)| {
            depth[u] % 2 == depth[v] % 2 && (parent[u].is_some() || u == root) && (parent[v].is_some() || v == root)
        })
        .expect("a non-bipartite component has an edge inside one parity class");
    let mut walk = path_to_root(u);
    walk.reverse();
    walk.extend(path_to_root(v));
    walk
}

/// Search for a `Γ`-irregular labeling (labels may repeat, weights must
/// differ). The search runs over injective weight vectors that satisfy the
/// per-component realizability conditions, then builds labels for one.
pub fn irregular_exists(group: &Group, graph: &Graph, budget: Budget) -> SearchVerdict<EdgeLabeling> {
    let n = graph.n();
    if group.order() < n {
        return SearchVerdict::Exhausted;
    }
    let rules = component_rules(graph);
    let doubles: HashSet<Element> = group.elements().map(|g| group.add(&g, &g).unwrap()).collect();
    let order: Vec<(usize, Option<usize>)> = rules
        .iter()
        .enumerate()
        .flat_map(|(ci, r)| {
            let last = r.vertices.len() - 1;
            r.vertices
                .iter()
                .enumerate()
                .map(move |(i, &v)| (v, (i == last).then_some(ci)))
        })
        .collect();
    let elements: Vec<Element> = group.elements().collect();

    struct Search<'a> {
        group: &'a Group,
        rules: &'a [ComponentRule],
        doubles: &'a HashSet<Element>,
        order: &'a [(usize, Option<usize>)],
        elements: &'a [Element],
        used: Vec<bool>,
        w: Vec<Element>,
        counter: NodeCounter,
    }

    impl Search<'_> {
        fn rec(&mut self, i: usize) -> Option<bool> {
            if i == self.order.len() {
                return Some(true);
            }
            let (v, closes) = self.order[i];
            for x in 0..self.elements.len() {
                if self.used[x] {
                    continue;
                }
                if !self.counter.tick() {
                    return None;
                }
                self.w[v] = self.elements[x].clone();
                if let Some(ci) = closes {
                    if !component_realizable(self.group, &self.rules[ci], &self.w, self.doubles) {
                        continue;
                    }
                }
                self.used[x] = true;
                if self.rec(i + 1)? {
                    return Some(true);
                }
                self.used[x] = false;
            }
            Some(false)
        }
    }

    let mut s = Search {
        group,
        rules: &rules,
        doubles: &doubles,
        order: &order,
        elements: &elements,
        used: vec![false; group.order()],
        w: vec![group.zero(); n],
        counter: NodeCounter::new(budget),
    };
    match s.rec(0) {
        Some(true) => {
            let labels = labels_for_weights(group, graph, &s.w).expect("weights satisfy the component conditions");
            let weights = vertex_weights(group, graph, &labels).unwrap();
            assert_eq!(weights, s.w, "constructed labels miss the target weights");
            assert!(all_distinct(&weights));
            SearchVerdict::Found(labels)
        }
        Some(false) => SearchVerdict::Exhausted,
        None => SearchVerdict::BudgetExceeded,
    }
}

/// Labels of `graph` have pairwise distinct weights.
pub fn verify_irregular(group: &Group, graph: &Graph, labels: &[Element]) -> bool {
    matches!(vertex_weights(group, graph, labels), Ok(w) if all_distinct(&w))
}

/// Value of the group irregularity strength search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum GroupIrregularity {
    Value(usize),
    /// Not found for any order up to the limit.
    Exceeded,
    /// The graph has a component on fewer than 3 vertices.
    NotCovered,
    /// Some group's search ran out of budget before a value was settled.
    Unknown,
}

/// The least `k ≤ k_max` such that every Abelian group of order `k` admits
/// an irregular labeling. Orders below `n` are skipped: `n` distinct
/// weights need at least `n` elements.
pub fn group_irregularity_strength(graph: &Graph, k_max: usize, budget: Budget) -> GroupIrregularity {
    if graph.components().iter().any(|c| c.len() < 3) {
        return GroupIrregularity::NotCovered;
    }
    for k in graph.n()..=k_max {
        let mut all = true;
        for g in enumerate_abelian_groups(k) {
            match irregular_exists(&g, graph, budget) {
                SearchVerdict::Found(_) => {}
                SearchVerdict::Exhausted => {
                    all = false;
                    break;
                }
                SearchVerdict::BudgetExceeded => return GroupIrregularity::Unknown,
            }
        }
        if all {
            return GroupIrregularity::Value(k);
        }
    }
    GroupIrregularity::Exceeded
}

/// `K_{1, 3^{2q+1} - 2}` for some `q ≥ 1`.
fn is_exceptional_star(graph: &Graph) -> bool {
    let mut leaves = 25usize;
    while leaves < graph.n() {
        if graph.is_star_with_leaves(leaves) {
            return true;
        }
        leaves = (leaves + 2) * 9 - 2;
    }
    false
}

/// The value of `s_g` for a connected graph of order `n ≥ 3`: `n + 2` for
/// the stars `K_{1,3^{2q+1}-2}`, `n + 1` when `n ≡ 2 (mod 4)`, `n`
/// otherwise.
pub fn predicted_group_irregularity(graph: &Graph) -> Option<usize> {
    let n = graph.n();
    if n < 3 || !graph.is_connected() {
        return None;
    }
    Some(if is_exceptional_star(graph) {
        n + 2
    } else if n % 4 == 2 {
        n + 1
    } else {
        n
    })
}

/// Integer irregularity strength `s(G)`: the least `k` such that labels
/// from `1..=k` give distinct integer weights. `None` when no such `k`
/// exists (an isolated edge or two isolated vertices) or `k_max` is reached.
pub fn irregularity_strength(graph: &Graph, k_max: usize, budget: Budget) -> Option<usize> {
    let isolated = (0..graph.n()).filter(|&v| graph.degree(v) == 0).count();
    let isolated_edge = graph.components().iter().any(|c| c.len() == 2);
    if isolated > 1 || isolated_edge {
        return None;
    }
    if graph.n() <= 1 {
        return Some(1);
    }
    // Each vertex becomes final once its last edge is labeled.
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); graph.edge_count()];
    for v in 0..graph.n() {
        if let Some(last) = (0..graph.edge_count()).rev().find(|&e| {
            let (a, b) = graph.edges()[e];
            a == v || b == v
        }) {
            closes[last].push(v);
        }
    }

    struct S<'a> {
        graph: &'a Graph,
        closes: &'a [Vec<usize>],
        k: u64,
        w: Vec<u64>,
        done: HashSet<u64>,
        counter: NodeCounter,
    }

    impl S<'_> {
        fn rec(&mut self, e: usize) -> Option<bool> {
            if e == self.graph.edge_count() {
                return Some(true);
            }
            let (u, v) = self.graph.edges()[e];
            for l in 1..=self.k {
                if !self.counter.tick() {
                    return None;
                }
                self.w[u] += l;
                self.w[v] += l;
                let mut added = Vec::new();
                let mut ok = true;
                for &x in &self.closes[e] {
                    if self.done.insert(self.w[x]) {
                        added.push(self.w[x]);
                    } else {
                        ok = false;
                        break;
                    }
                }
                if ok && self.rec(e + 1)? {
                    return Some(true);
                }
                for x in added {
                    self.done.remove(&x);
                }
                self.w[u] -= l;
                self.w[v] -= l;
            }
            Some(false)
        }
    }

    for k in 1..=k_max as u64 {
        let mut s = S {
            graph,
            closes: &closes,
            k,
            w: vec![0; graph.n()],
            done: HashSet::new(),
            counter: NodeCounter::new(budget),
        };
        // An isolated vertex has weight 0, distinct from every positive weight.
        match s.rec(0) {
            Some(true) => return Some(k as usize),
            Some(false) => {}
            None => return None,
        }
    }
    None
}

/// Out-labels minus in-labels at every vertex.
pub fn digraph_weights(group: &Group, dg: &Digraph, labels: &[Element]) -> Result<Vec<Element>> {
    check_labels(group, labels, dg.arcs().len(), "arcs")?;
    let mut w = vec![group.zero(); dg.n()];
    for (&(u, v), l) in dg.arcs().iter().zip(labels) {
        w[u] = group.add(&w[u], l)?;
        w[v] = group.sub(&w[v], l)?;
    }
    Ok(w)
}

/// Search for a `Γ`-irregular arc labeling. Pairwise disjoint zero-sum
/// subsets sized by the weak components are found first; each component's
/// vertices then take the elements of its subset as weights, and arc
/// labels are solved along a spanning tree.
pub fn digraph_realizable(group: &Group, dg: &Digraph, budget: Budget) -> Result<SearchVerdict<ArcLabeling>> {
    let comps = dg.weak_components();
    if group.order() < dg.n() {
        return Ok(SearchVerdict::Exhausted);
    }
    let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    let inst = RealizationInstance::disjoint(group, group.all(), sizes, vec![group.zero(); comps.len()])?;
    let v = solve(&inst, budget);
    let parts = match v.status {
        Status::Feasible => v.witness.unwrap(),
        Status::Infeasible | Status::InfeasibleNecessary => return Ok(SearchVerdict::Exhausted),
        Status::Unknown => return Ok(SearchVerdict::BudgetExceeded),
    };
    let mut target = vec![group.zero(); dg.n()];
    for (c, part) in comps.iter().zip(&parts.parts) {
        for (&x, e) in c.iter().zip(part) {
            target[x] = e.clone();
        }
    }
    let labels = arc_labels_for_weights(group, dg, &target)?;
    let w = digraph_weights(group, dg, &labels)?;
    assert_eq!(w, target);
    assert!(all_distinct(&w), "digraph labeling is not irregular");
    Ok(SearchVerdict::Found(labels))
}

/// Arc labels giving each vertex its target weight; every weak component's
/// targets must sum to zero. Non-tree arcs get 0.
pub fn arc_labels_for_weights(group: &Group, dg: &Digraph, target: &[Element]) -> Result<ArcLabeling> {
    let adj = dg.weak_adjacency();
    let mut labels = vec![group.zero(); dg.arcs().len()];
    let mut seen = vec![false; dg.n()];
    for comp in dg.weak_components() {
        let root = comp[0];
        seen[root] = true;
        let mut order: Vec<(usize, Option<(usize, usize)>)> = vec![(root, None)];
        let mut i = 0;
        while i < order.len() {
            let x = order[i].0;
            i += 1;
            for &(y, a) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    order.push((y, Some((x, a))));
                }
            }
        }
        let mut current = vec![group.zero(); dg.n()];
        for &(x, link) in order.iter().rev() {
            let Some((p, a)) = link else { continue };
            let need = group.sub(&target[x], &current[x])?;
            // The arc counts +label at its tail and -label at its head.
            let label = if dg.arcs()[a].0 == x {
                need.clone()
            } else {
                group.neg(&need)?
            };
            current[x] = target[x].clone();
            current[p] = group.sub(&current[p], &need)?;
            labels[a] = label;
        }
        if current[root] != target[root] {
            return Err(Error::InvalidInstance("component targets do not sum to zero".into()));
        }
    }
    Ok(labels)
}

/// A distance magic labeling of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMagic {
    pub status: Status,
    /// Label of each vertex; class `i` holds consecutive vertices.
    pub labels: Option<VertexLabeling>,
    /// Common class sum `ν`.
    pub class_sum: Option<Element>,
    /// Magic constant `μ = ΣΓ - ν`.
    pub magic_constant: Option<Element>,
}

/// A `Γ`-distance magic labeling of `K_{sizes}` from a constant-sum
/// partition of `Γ`.
pub fn distance_magic_multipartite(group: &Group, sizes: &[usize], budget: Budget) -> Result<DistanceMagic> {
    let v = constant_sum_partition(group, sizes, true, budget)?;
    let (Some(nu), Some(w)) = (v.common_sum, v.verdict.witness) else {
        return Ok(DistanceMagic {
            status: v.verdict.status,
            labels: None,
            class_sum: None,
            magic_constant: None,
        });
    };
    let labels: VertexLabeling = w.parts.into_iter().flatten().collect();
    let mu = group.sub(&group.sum_all_elements(), &nu)?;
    let checked = verify_distance_magic(group, sizes, &labels);
    assert_eq!(
        checked.as_ref(),
        Some(&mu),
        "constant-sum labeling is not distance magic"
    );
    Ok(DistanceMagic {
        status: Status::Feasible,
        labels: Some(labels),
        class_sum: Some(nu),
        magic_constant: Some(mu),
    })
}

/// The magic constant, if the bijective labeling of `K_{sizes}` is distance
/// magic. Weights are summed over actual neighbors.
pub fn verify_distance_magic(group: &Group, sizes: &[usize], labels: &[Element]) -> Option<Element> {
    let graph = Graph::complete_multipartite(sizes);
    if labels.len() != group.order() || graph.n() != labels.len() {
        return None;
    }
    let distinct: ElementSet = labels.iter().cloned().collect();
    if distinct.len() != labels.len() || !labels.iter().all(|l| group.contains(l)) {
        return None;
    }
    let mut w = vec![group.zero(); graph.n()];
    for &(u, v) in graph.edges() {
        w[u] = group.add(&w[u], &labels[v]).ok()?;
        w[v] = group.add(&w[v], &labels[u]).ok()?;
    }
    let first = w.first()?.clone();
    w.iter().all(|x| *x == first).then_some(first)
}
