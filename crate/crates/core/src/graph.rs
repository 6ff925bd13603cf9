//! Plain undirected simple graphs on vertices `0..n`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// A path `0 - 1 - ... - (n-1)`.
    pub fn path(vertex_count: usize) -> Self {
        let mut g = Graph::new(vertex_count);
        for i in 1..vertex_count {
            g.adj[i - 1].insert(i);
            g.adj[i].insert(i - 1);
        }
        g
    }

    pub fn cycle(vertex_count: usize) -> Self {
        let mut g = Graph::path(vertex_count);
        if vertex_count >= 3 {
            g.adj[0].insert(vertex_count - 1);
            g.adj[vertex_count - 1].insert(0);
        }
        g
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut g = Graph::new(vertex_count);
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Star with one centre (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.adj[0].insert(v);
            g.adj[v].insert(0);
        }
        g
    }

    /// Adds `uv`. Loops and out-of-range endpoints are rejected; re-adding an edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::Argument(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::Argument(format!("loop at vertex {u}")));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.contains(&v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all: BTreeSet<usize> = (0..self.vertex_count()).collect();
        self.vertex_count() == 0 || self.is_connected_within(&all)
    }

    /// Whether `subset` is nonempty and induces a connected subgraph.
    pub fn is_connected_within(&self, subset: &BTreeSet<usize>) -> bool {
        let Some(&start) = subset.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if subset.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == subset.len()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Whether this is the path `0 - 1 - ... - (n-1)` exactly.
    pub fn is_canonical_path(&self) -> bool {
        *self == Graph::path(self.vertex_count())
    }

    /// Union of edge sets; both graphs must have the same vertex count.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.vertex_count() != other.vertex_count() {
            return Err(Error::Argument(
                "union of graphs with different vertex sets".into(),
            ));
        }
        let mut g = self.clone();
        for (u, v) in other.edges() {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Induced subgraph on the vertices not in `removed`, relabelled to `0..k` in increasing
    /// order. The second component maps old ids to new ids.
    pub fn without(&self, removed: &BTreeSet<usize>) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.vertex_count()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        (g, map)
    }

    /// Apply a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Bitmask adjacency for dense algorithms; requires at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.vertex_count() <= 64);
        self.adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }
}

/// Graph isomorphism test (VF2, backed by petgraph).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.vertex_count()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.vertex_count()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    petgraph::algo::is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

fn to_petgraph(g: &Graph) -> petgraph::graph::UnGraph<(), ()> {
    let edges: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (u as u32, v as u32))
        .collect();
    let mut pg = petgraph::graph::UnGraph::<(), ()>::with_capacity(g.vertex_count(), edges.len());
    for _ in 0..g.vertex_count() {
        pg.add_node(());
    }
    pg.extend_with_edges(edges);
    pg
}
