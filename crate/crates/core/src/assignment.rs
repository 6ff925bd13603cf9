//! Edge-assignments: injections from faces to boundary edges, built from a spanning tree.
//!
//! Faces that share a co-tree edge are joined in the face adjacency graph; a connected
//! unicyclic spanning subgraph of it has as many edges as vertices, and orienting every
//! vertex towards "its" edge gives the assignment.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::embedding::{EmbeddedGraph, FacialWalk};
use crate::error::{Error, Result};
use crate::spanning::SpanningSubgraph;

/// Injective map face id -> edge id with every image on the face's boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeAssignment {
    face_to_edge: Vec<usize>,
}

impl EdgeAssignment {
    pub fn new(face_to_edge: Vec<usize>) -> Self {
        EdgeAssignment { face_to_edge }
    }

    pub fn face_count(&self) -> usize {
        self.face_to_edge.len()
    }

    pub fn edge_of(&self, face: usize) -> usize {
        self.face_to_edge[face]
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.face_to_edge.iter().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.face_to_edge.iter().copied().enumerate()
    }

    /// Checks injectivity and boundary incidence against the faces of `g`.
    pub fn validate(&self, g: &EmbeddedGraph) -> Result<()> {
        let faces = g.faces();
        self.validate_with(g, &faces)
    }

    pub(crate) fn validate_with(&self, g: &EmbeddedGraph, faces: &[FacialWalk]) -> Result<()> {
        if self.face_to_edge.len() != faces.len() {
            return Err(Error::Argument(format!(
                "assignment covers {} faces, embedding has {}",
                self.face_to_edge.len(),
                faces.len()
            )));
        }
        let mut seen = BTreeMap::new();
        for (f, &id) in self.face_to_edge.iter().enumerate() {
            if id >= g.edge_count() {
                return Err(Error::Argument(format!(
                    "face {f} assigned unknown edge {id}"
                )));
            }
            if !faces[f].edges().contains(&id) {
                return Err(Error::Argument(format!(
                    "face {f} assigned edge {id}, which is not on its boundary"
                )));
            }
            if let Some(other) = seen.insert(id, f) {
                return Err(Error::Argument(format!(
                    "faces {other} and {f} are both assigned edge {id}"
                )));
            }
        }
        Ok(())
    }
}

/// A graph on face ids whose edges are labelled by the primal edge the two faces share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceAdjacencyGraph {
    face_count: usize,
    /// `(f, g, label)` with `f < g`, sorted.
    edges: Vec<(usize, usize, usize)>,
}

impl FaceAdjacencyGraph {
    pub fn new(face_count: usize, mut edges: Vec<(usize, usize, usize)>) -> Result<Self> {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0, e.2);
            }
            if e.1 >= face_count || e.0 == e.1 {
                return Err(Error::Argument(format!("bad face adjacency edge {e:?}")));
            }
        }
        edges.sort_unstable();
        Ok(FaceAdjacencyGraph { face_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.face_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|e| e.2).collect()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.face_count];
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(w, i)| (w, self.edges[i].2));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.face_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.face_count];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.face_count
    }

    /// No two edges join the same pair of faces.
    pub fn is_simple(&self) -> bool {
        self.edges
            .windows(2)
            .all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1))
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count() == self.face_count
    }
}

/// Faces on either side of every edge, indexed by edge id.
pub(crate) fn edge_sides(g: &EmbeddedGraph, faces: &[FacialWalk]) -> Vec<Vec<usize>> {
    let mut sides = vec![Vec::with_capacity(2); g.edge_count()];
    for (f, walk) in faces.iter().enumerate() {
        for id in walk.edges() {
            sides[id].push(f);
        }
    }
    sides
}

/// Faces joined across every edge not in `t`.
pub fn face_adjacency_graph(g: &EmbeddedGraph, t: &SpanningSubgraph) -> Result<FaceAdjacencyGraph> {
    let faces = g.faces();
    face_adjacency_with(g, &faces, t)
}

fn face_adjacency_with(
    g: &EmbeddedGraph,
    faces: &[FacialWalk],
    t: &SpanningSubgraph,
) -> Result<FaceAdjacencyGraph> {
    let sides = edge_sides(g, faces);
    let mut edges = Vec::new();
    for (id, s) in sides.iter().enumerate() {
        if t.contains(id) {
            continue;
        }
        if s.len() != 2 || s[0] == s[1] {
            return Err(Error::Precondition(format!(
                "edge {id} does not separate two distinct faces"
            )));
        }
        edges.push((s[0], s[1], id));
    }
    let tp = FaceAdjacencyGraph::new(faces.len(), edges)?;
    if !tp.is_connected() {
        return Err(Error::Invariant(
            "face adjacency graph is disconnected".into(),
        ));
    }
    if !tp.is_simple() {
        return Err(Error::Invariant(
            "face adjacency graph has parallel edges".into(),
        ));
    }
    Ok(tp)
}

/// Breadth-first spanning tree from face 0 (neighbours in increasing order) plus the
/// smallest non-tree edge.
pub fn unicyclic_spanning_subgraph(tp: &FaceAdjacencyGraph) -> Result<FaceAdjacencyGraph> {
    if tp.edge_count() < tp.vertex_count() {
        return Err(Error::Precondition(format!(
            "{} edges cannot carry a unicyclic subgraph on {} vertices",
            tp.edge_count(),
            tp.vertex_count()
        )));
    }
    if !tp.is_connected() {
        return Err(Error::Precondition(
            "face adjacency graph is disconnected".into(),
        ));
    }
    let adj = tp.adjacency();
    let mut in_tree = vec![false; tp.edge_count()];
    let mut seen = vec![false; tp.vertex_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &(w, i) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                in_tree[i] = true;
                queue.push_back(w);
            }
        }
    }
    let extra = in_tree
        .iter()
        .position(|t| !t)
        .ok_or_else(|| Error::Invariant("no non-tree edge available".into()))?;
    let edges = tp
        .edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| in_tree[i] || i == extra)
        .map(|(_, &e)| e)
        .collect();
    FaceAdjacencyGraph::new(tp.vertex_count(), edges)
}

/// Bijection vertex -> incident edge of a connected unicyclic graph.
///
/// Cycle vertices take the next cycle edge, walking the cycle from its smallest vertex
/// towards the smaller of that vertex's two cycle neighbours; every other vertex takes the
/// first edge of its shortest path to the cycle. Returns, for each vertex, the `(f, g,
/// label)` edge it is mapped to.
pub fn incidence_bijection(tpp: &FaceAdjacencyGraph) -> Result<Vec<(usize, usize, usize)>> {
    if !tpp.is_unicyclic() {
        return Err(Error::Precondition(
            "incidence bijection needs a connected unicyclic graph".into(),
        ));
    }
    let n = tpp.vertex_count();
    let adj = tpp.adjacency();
    // Strip leaves; what remains is the cycle.
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut on_cycle = vec![true; n];
    let mut leaves: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = leaves.pop_front() {
        on_cycle[v] = false;
        for &(w, _) in &adj[v] {
            if on_cycle[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    leaves.push_back(w);
                }
            }
        }
    }
    let mut sigma: Vec<Option<usize>> = vec![None; n];
    let start = (0..n)
        .find(|&v| on_cycle[v])
        .ok_or_else(|| Error::Invariant("unicyclic graph without a cycle".into()))?;
    let cycle_step = |v: usize, avoid: Option<usize>| -> (usize, usize) {
        adj[v]
            .iter()
            .copied()
            .filter(|&(w, i)| on_cycle[w] && Some(i) != avoid)
            .min()
            .expect("cycle vertices have two cycle neighbours")
    };
    let (mut next, mut via) = cycle_step(start, None);
    sigma[start] = Some(via);
    let mut cur = next;
    while cur != start {
        (next, via) = cycle_step(cur, Some(via));
        sigma[cur] = Some(via);
        cur = next;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| on_cycle[v]).collect();
    while let Some(u) = queue.pop_front() {
        for &(w, i) in &adj[u] {
            if sigma[w].is_none() {
                sigma[w] = Some(i);
                queue.push_back(w);
            }
        }
    }
    let out: Vec<(usize, usize, usize)> = sigma
        .into_iter()
        .map(|i| tpp.edges[i.expect("connected graph reaches every vertex")])
        .collect();
    let distinct: BTreeSet<_> = out.iter().collect();
    if distinct.len() != n {
        return Err(Error::Invariant("incidence map is not a bijection".into()));
    }
    Ok(out)
}

/// Every intermediate object of the edge-assignment construction.
#[derive(Debug, Clone)]
pub struct AssignmentConstruction {
    /// The forest the construction avoids: a spanning tree, or a spanning tree minus one
    /// edge on the sphere.
    pub avoided: SpanningSubgraph,
    pub face_adjacency: FaceAdjacencyGraph,
    pub unicyclic: FaceAdjacencyGraph,
    pub sigma: Vec<(usize, usize, usize)>,
    pub tau: EdgeAssignment,
}

/// Runs the construction for `t`. On the sphere `t` must be a spanning tree minus one edge;
/// on every other surface it must be a spanning tree.
pub fn construct(g: &EmbeddedGraph, t: &SpanningSubgraph) -> Result<AssignmentConstruction> {
    let faces = g.faces();
    if let Some(v) = crate::embedding::polyhedral_violation(g, &faces) {
        return Err(Error::Precondition(format!(
            "edge assignment needs a polyhedral embedding: {v}"
        )));
    }
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    if t.vertex_count() != g.vertex_count() {
        return Err(Error::Argument(
            "subgraph belongs to a different graph".into(),
        ));
    }
    if chi == 2 {
        if !(t.is_forest() && t.component_count() == 2) {
            return Err(Error::Precondition(
                "on the sphere the avoided subgraph must be a spanning tree minus one edge".into(),
            ));
        }
    } else if !t.is_spanning_tree() {
        return Err(Error::Precondition(
            "the avoided subgraph must be a spanning tree".into(),
        ));
    }
    let face_adjacency = face_adjacency_with(g, &faces, t)?;
    let unicyclic = unicyclic_spanning_subgraph(&face_adjacency)?;
    let sigma = incidence_bijection(&unicyclic)?;
    let tau = EdgeAssignment::new(sigma.iter().map(|e| e.2).collect());
    tau.validate_with(g, &faces)?;
    Ok(AssignmentConstruction {
        avoided: t.clone(),
        face_adjacency,
        unicyclic,
        sigma,
        tau,
    })
}

/// Edge-assignment whose image avoids `t`.
pub fn edge_assignment(g: &EmbeddedGraph, t: &SpanningSubgraph) -> Result<EdgeAssignment> {
    construct(g, t).map(|c| c.tau)
}

/// Starting from a spanning tree: on the sphere one tree edge is deleted first, elsewhere
/// the tree is used as is.
pub fn construct_from_tree(
    g: &EmbeddedGraph,
    tree: &SpanningSubgraph,
) -> Result<AssignmentConstruction> {
    if g.surface().chi == 2 {
        construct(g, &crate::spanning::delete_edge_for_sphere(tree)?)
    } else {
        construct(g, tree)
    }
}

/// `G` minus the image of `tau`.
pub fn residual_graph(g: &EmbeddedGraph, tau: &EdgeAssignment) -> Result<SpanningSubgraph> {
    tau.validate(g)?;
    let image = tau.image();
    SpanningSubgraph::new(g, (0..g.edge_count()).filter(|id| !image.contains(id)))
}
