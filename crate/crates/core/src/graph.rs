//! Simple graphs, digraphs and rooted trees, with the generators used by the
//! labeling sweeps.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`. Edge order is kept as
/// given, since edge labelings are indexed by it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Graph> {
        Graph::new(raw.n, raw.edges)
    }
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) leaves the vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `adj[v]` lists `(neighbor, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(w, _) in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-colouring of the vertices of `component`, if one exists.
    pub fn two_colouring(&self, component: &[usize]) -> Option<Vec<(usize, bool)>> {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let &start = component.first()?;
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = colour[v].unwrap();
            for &(w, _) in &adj[v] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return None,
                    _ => {}
                }
            }
        }
        Some(component.iter().map(|&v| (v, colour[v].unwrap())).collect())
    }

    /// Breadth-first spanning tree of the component containing `root`:
    /// vertices in visit order with their parent vertex and tree edge.
    pub fn bfs_tree(&self, root: usize) -> Vec<(usize, Option<(usize, usize)>)> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        seen[root] = true;
        let mut order = vec![(root, None)];
        let mut i = 0;
        while i < order.len() {
            let v = order[i].0;
            i += 1;
            for &(w, e) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, Some((v, e))));
                }
            }
        }
        order
    }

    /// Whether the graph is a star `K_{1,leaves}` (a centre adjacent to every
    /// other vertex and no further edges).
    pub fn is_star_with_leaves(&self, leaves: usize) -> bool {
        self.n == leaves + 1 && self.edges.len() == leaves && (0..self.n).any(|c| self.degree(c) == leaves)
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()).unwrap()
    }

    /// `K_{m_1,...,m_t}`; class `i` holds consecutive vertices.
    pub fn complete_multipartite(sizes: &[usize]) -> Graph {
        let mut class = Vec::new();
        for (i, &m) in sizes.iter().enumerate() {
            class.extend(std::iter::repeat_n(i, m));
        }
        let n = class.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).unwrap()
    }

    /// Disjoint union, with the vertices of `other` shifted after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, edges).unwrap()
    }

    /// Upper-triangle adjacency bits, row by row.
    fn adjacency_bits(&self, perm: &[usize]) -> u64 {
        let n = self.n;
        let mut m = vec![false; n * n];
        for &(u, v) in &self.edges {
            let (a, b) = (perm[u], perm[v]);
            m[a * n + b] = true;
            m[b * n + a] = true;
        }
        let mut bits = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                bits = (bits << 1) | m[u * n + v] as u64;
            }
        }
        bits
    }

    /// The least adjacency bit string over all vertex relabelings. Two
    /// graphs on at most 11 vertices are isomorphic iff their forms agree.
    pub fn canonical_form(&self) -> u64 {
        assert!(self.n <= 11, "canonical forms are computed by brute force");
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| best = best.min(self.adjacency_bits(p)));
        best
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// One connected graph per isomorphism class on `n ≤ 6` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive graph enumeration is limited to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if edges.len() + 1 < n {
            continue;
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() && seen.insert(g.canonical_form()) {
            out.push(g);
        }
    }
    out
}

/// A random connected graph: a random spanning tree plus each remaining
/// pair with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges.into_iter().collect()).unwrap()
}

/// A directed graph without loops on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDigraph")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDigraph> for Digraph {
    type Error = Error;

    fn try_from(raw: RawDigraph) -> Result<Digraph> {
        Digraph::new(raw.n, raw.arcs)
    }
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "arc ({u}, {v}) leaves the vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
        }
        Ok(Digraph { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        self.underlying().components()
    }

    /// `adj[v]` lists `(neighbor, arc index)` ignoring direction.
    pub fn weak_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.arcs.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    fn underlying(&self) -> Graph {
        let mut set = BTreeSet::new();
        for &(u, v) in &self.arcs {
            set.insert((u.min(v), u.max(v)));
        }
        Graph::new(self.n, set.into_iter().collect()).unwrap()
    }

    /// A random digraph whose weak components have the given sizes.
    pub fn random_with_components(sizes: &[usize], extra: f64, seed: u64) -> Digraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut arcs = Vec::new();
        let mut base = 0;
        for &m in sizes {
            let g = random_connected_graph(m, extra, rng.gen());
            for &(u, v) in g.edges() {
                let (a, b) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
                arcs.push((a + base, b + base));
            }
            base += m;
        }
        Digraph::new(base, arcs).unwrap()
    }
}

/// A tree with a designated root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    children: Vec<Vec<usize>>,
    /// Edge from each non-root vertex to its parent.
    parent_edge: Vec<Option<usize>>,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::InvalidGraph(format!("root {root} is not a vertex")));
        }
        if graph.edge_count() + 1 != graph.n() || !graph.is_connected() {
            return Err(Error::InvalidGraph("not a tree".into()));
        }
        let mut children = vec![Vec::new(); graph.n()];
        let mut parent_edge = vec![None; graph.n()];
        for (v, link) in graph.bfs_tree(root) {
            if let Some((p, e)) = link {
                children[p].push(v);
                parent_edge[v] = Some(e);
            }
        }
        Ok(RootedTree {
            graph,
            root,
            children,
            parent_edge,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent_edge(&self, v: usize) -> Option<usize> {
        self.parent_edge[v]
    }

    /// Vertices with at least one child, in vertex order.
    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| !self.children[v].is_empty()).collect()
    }

    /// Every vertex that is not a leaf has at least `k` children.
    pub fn is_k_tree(&self, k: usize) -> bool {
        self.children.iter().all(|c| c.is_empty() || c.len() >= k)
    }
}

/// A random rooted `k`-tree on `n` vertices (root 0), or `None` when none
/// exists (`1 < n ≤ k`).
pub fn random_k_tree(n: usize, k: usize, seed: u64) -> Option<RootedTree> {
    assert!(k >= 1);
    if n == 0 || (n > 1 && n - 1 < k) {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut leaves = vec![0usize];
    let mut internal: Vec<usize> = Vec::new();
    let mut count = 1;
    while count < n {
        let left = n - count;
        // Either expand a leaf by k children, or hang one more child on an
        // internal vertex.
        let expand = left >= k && (internal.is_empty() || rng.gen_bool(0.5));
        let parent = if expand {
            let i = rng.gen_range(0..leaves.len());
            let p = leaves.swap_remove(i);
            internal.push(p);
            p
        } else {
            internal[rng.gen_range(0..internal.len())]
        };
        let take = if expand { k } else { 1 };
        for _ in 0..take {
            edges.push((parent, count));
            leaves.push(count);
            count += 1;
        }
    }
    let tree = RootedTree::new(Graph::new(n, edges).unwrap(), 0).unwrap();
    debug_assert!(tree.is_k_tree(k));
    Some(tree)
}
