//! Spanning trees of bounded degree or bounded total excess, and Hamiltonian paths.

use std::collections::BTreeMap;

use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A subset of the edges of an embedded graph, identified by edge id, on all of its
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSubgraph {
    vertex_count: usize,
    edges: BTreeMap<usize, (usize, usize)>,
}

impl SpanningSubgraph {
    pub fn new(g: &EmbeddedGraph, edge_ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut edges = BTreeMap::new();
        for id in edge_ids {
            if id >= g.edge_count() {
                return Err(Error::Argument(format!("edge id {id} out of range")));
            }
            edges.insert(id, g.edge(id).endpoints());
        }
        Ok(SpanningSubgraph {
            vertex_count: g.vertex_count(),
            edges,
        })
    }

    /// All edges of `g`.
    pub fn full(g: &EmbeddedGraph) -> Self {
        SpanningSubgraph::new(g, 0..g.edge_count()).expect("ids in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.keys().copied()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.edges.contains_key(&id)
    }

    pub fn endpoints(&self, id: usize) -> Option<(usize, usize)> {
        self.edges.get(&id).copied()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in self.edges.values() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_subgraph_of(&self, other: &SpanningSubgraph) -> bool {
        self.edges.keys().all(|id| other.contains(*id))
    }

    pub fn without_edge(&self, id: usize) -> SpanningSubgraph {
        let mut out = self.clone();
        out.edges.remove(&id);
        out
    }

    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.vertex_count);
        let mut comps = self.vertex_count;
        for &(u, v) in self.edges.values() {
            if dsu.union(u, v) {
                comps -= 1;
            }
        }
        comps
    }

    pub fn is_forest(&self) -> bool {
        self.component_count() + self.edge_count() == self.vertex_count
    }

    pub fn is_spanning_tree(&self) -> bool {
        self.is_forest() && self.component_count() == 1
    }

    pub fn as_graph(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count);
        for &(u, v) in self.edges.values() {
            g.add_edge(u, v).expect("edge of a simple graph");
        }
        g
    }
}

/// `Σ_v max(d_F(v) - k, 0)`.
pub fn total_excess(f: &SpanningSubgraph, k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::Argument("total excess needs k >= 1".into()));
    }
    Ok(f.degrees().into_iter().map(|d| d.saturating_sub(k)).sum())
}

#[derive(Debug, Clone, Copy)]
pub struct TreeSearchOptions {
    pub node_budget: u64,
}

impl Default for TreeSearchOptions {
    fn default() -> Self {
        TreeSearchOptions {
            node_budget: 100_000_000,
        }
    }
}

/// Union-find with rollback (union by size, no path compression).
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    fn rollback(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

struct TreeSearch<'a> {
    n: usize,
    k: usize,
    budget: usize,
    edges: &'a [(usize, (usize, usize))],
    degree: Vec<usize>,
    excess: usize,
    chosen: Vec<usize>,
    dsu: Dsu,
    nodes: u64,
    node_budget: u64,
}

impl TreeSearch<'_> {
    /// Can `chosen ∪ edges[from..]` still connect every vertex?
    fn still_connectable(&self, from: usize) -> bool {
        let mut dsu = Dsu::new(self.n);
        let mut comps = self.n;
        for &id in &self.chosen {
            let (u, v) = self.edges[id].1;
            if dsu.union(u, v) {
                comps -= 1;
            }
        }
        for &(_, (u, v)) in &self.edges[from..] {
            if dsu.union(u, v) {
                comps -= 1;
            }
        }
        comps == 1
    }

    fn run(&mut self, idx: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Error::ResourceExhausted(format!(
                "spanning tree search exceeded {} nodes",
                self.node_budget
            )));
        }
        if self.chosen.len() + 1 == self.n {
            return Ok(true);
        }
        if idx == self.edges.len() || self.edges.len() - idx < self.n - 1 - self.chosen.len() {
            return Ok(false);
        }
        if !self.still_connectable(idx) {
            return Ok(false);
        }
        let (u, v) = self.edges[idx].1;
        if self.dsu.find(u) != self.dsu.find(v) {
            let added =
                usize::from(self.degree[u] >= self.k) + usize::from(self.degree[v] >= self.k);
            if self.excess + added <= self.budget {
                self.dsu.union(u, v);
                self.degree[u] += 1;
                self.degree[v] += 1;
                self.excess += added;
                self.chosen.push(idx);
                if self.run(idx + 1)? {
                    return Ok(true);
                }
                self.chosen.pop();
                self.excess -= added;
                self.degree[u] -= 1;
                self.degree[v] -= 1;
                self.dsu.rollback();
            }
        }
        self.run(idx + 1)
    }
}

/// Spanning tree `T` with `total_excess(T, k) <= budget`, by branch and bound over edges in
/// lexicographic endpoint order (include before exclude). Returns the first such tree in
/// that order, or `NotFound` once the space is exhausted.
pub fn find_low_excess_tree(
    g: &EmbeddedGraph,
    k: usize,
    budget: usize,
    options: TreeSearchOptions,
) -> Result<SpanningSubgraph> {
    if k < 1 {
        return Err(Error::Argument("degree bound k must be >= 1".into()));
    }
    let mut edges: Vec<(usize, (usize, usize))> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(id, e)| (id, (e.u.min(e.v), e.u.max(e.v))))
        .collect();
    edges.sort_by_key(|&(_, uv)| uv);
    let n = g.vertex_count();
    if n == 1 {
        return SpanningSubgraph::new(g, []);
    }
    let mut search = TreeSearch {
        n,
        k,
        budget,
        edges: &edges,
        degree: vec![0; n],
        excess: 0,
        chosen: Vec::new(),
        dsu: Dsu::new(n),
        nodes: 0,
        node_budget: options.node_budget,
    };
    if search.run(0)? {
        let ids: Vec<usize> = search.chosen.iter().map(|&i| edges[i].0).collect();
        SpanningSubgraph::new(g, ids)
    } else {
        Err(Error::NotFound(format!(
            "no spanning tree with total excess <= {budget} over degree {k}"
        )))
    }
}

/// Removes the lexicographically smallest edge (by endpoint pair) of a spanning tree.
pub fn delete_edge_for_sphere(t: &SpanningSubgraph) -> Result<SpanningSubgraph> {
    if !t.is_spanning_tree() {
        return Err(Error::Precondition("expected a spanning tree".into()));
    }
    let smallest = t
        .edges
        .iter()
        .min_by_key(|(_, &(u, v))| (u.min(v), u.max(v)))
        .map(|(&id, _)| id);
    Ok(match smallest {
        Some(id) => t.without_edge(id),
        None => t.clone(),
    })
}

/// Hamiltonian path by backtracking from each start vertex in turn, neighbours in increasing
/// order. A partial path is abandoned as soon as some unvisited vertex can no longer be
/// reached, or more than one unvisited vertex would have to be the final one.
/// `Ok(None)` means no Hamiltonian path exists.
pub fn hamiltonian_path(g: &Graph, options: TreeSearchOptions) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut search = HamSearch {
        adj,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        nodes: 0,
        node_budget: options.node_budget,
    };
    for s in 0..n {
        search.visited[s] = true;
        search.path.push(s);
        if search.extend()? {
            return Ok(Some(search.path));
        }
        search.path.pop();
        search.visited[s] = false;
    }
    Ok(None)
}

struct HamSearch {
    adj: Vec<Vec<usize>>,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    node_budget: u64,
}

impl HamSearch {
    fn viable(&self) -> bool {
        let end = *self.path.last().unwrap();
        let remaining = self.adj.len() - self.path.len();
        let mut forced_ends = 0;
        for v in 0..self.adj.len() {
            if self.visited[v] {
                continue;
            }
            let free = self.adj[v].iter().filter(|&&w| !self.visited[w]).count();
            let touches_end = self.adj[v].contains(&end);
            let available = free + usize::from(touches_end);
            if available == 0 {
                return false;
            }
            if remaining > 1 && free == 0 {
                // Only reachable from the current end, and it cannot continue from there.
                return false;
            }
            if available == 1 && !touches_end {
                forced_ends += 1;
            }
        }
        forced_ends <= 1
    }

    fn extend(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Error::ResourceExhausted(format!(
                "Hamiltonian path search exceeded {} nodes",
                self.node_budget
            )));
        }
        if self.path.len() == self.adj.len() {
            return Ok(true);
        }
        if !self.viable() {
            return Ok(false);
        }
        let end = *self.path.last().unwrap();
        for i in 0..self.adj[end].len() {
            let w = self.adj[end][i];
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Ok(false)
    }
}

/// The edges of a vertex path, as a spanning subgraph of `g`.
pub fn path_subgraph(g: &EmbeddedGraph, path: &[usize]) -> Result<SpanningSubgraph> {
    let mut ids = Vec::with_capacity(path.len().saturating_sub(1));
    for w in path.windows(2) {
        ids.push(
            g.edge_between(w[0], w[1])
                .ok_or_else(|| Error::Argument(format!("{}-{} is not an edge", w[0], w[1])))?,
        );
    }
    SpanningSubgraph::new(g, ids)
}
