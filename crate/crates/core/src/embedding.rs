//! Cellular embeddings of simple graphs on closed surfaces, stored as signed rotation systems.
//!
//! Every edge carries two darts, one per endpoint. Each vertex lists its darts in cyclic
//! order; an edge sign of `-` marks a twist in the local orientation, which is how
//! non-orientable surfaces are encoded.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(usize);

impl Dart {
    pub fn new(edge: usize, end: usize) -> Self {
        debug_assert!(end < 2);
        Dart(2 * edge + end)
    }

    pub fn from_index(index: usize) -> Self {
        Dart(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    /// Which endpoint of the edge this dart leaves from (0 or 1).
    pub fn end(self) -> usize {
        self.0 % 2
    }

    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    fn from_bool(positive: bool) -> Sign {
        if positive {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_positive() { "+" } else { "-" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    rotations: Vec<Vec<Dart>>,
    /// Position of each dart inside the rotation of its vertex.
    position: Vec<usize>,
}

/// One face boundary: the darts in traversal order together with the local-orientation
/// flag in force when each dart was left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacialWalk {
    pub darts: Vec<Dart>,
    pub flags: Vec<Sign>,
}

impl FacialWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in walk order (the tail of each dart).
    pub fn vertices(&self, g: &EmbeddedGraph) -> Vec<usize> {
        self.darts.iter().map(|&d| g.tail(d)).collect()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.edge()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInfo {
    pub chi: i64,
    pub orientable: bool,
}

impl SurfaceInfo {
    /// Euler genus, `2 - chi`.
    pub fn euler_genus(&self) -> i64 {
        2 - self.chi
    }

    pub fn name(&self) -> String {
        match (self.chi, self.orientable) {
            (2, _) => "sphere".into(),
            (1, false) => "projective plane".into(),
            (0, true) => "torus".into(),
            (0, false) => "Klein bottle".into(),
            (c, true) => format!("orientable genus {}", (2 - c) / 2),
            (c, false) => format!("non-orientable genus {}", 2 - c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyhedralViolation {
    /// A facial walk passes through `vertex` more than once.
    RepeatedVertex { face: usize, vertex: usize },
    /// Two faces meet in something other than nothing, a vertex, or an edge.
    BadIntersection {
        face_a: usize,
        face_b: usize,
        shared: Vec<usize>,
    },
}

impl fmt::Display for PolyhedralViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyhedralViolation::RepeatedVertex { face, vertex } => {
                write!(f, "face {face} is not a cycle: vertex {vertex} repeats")
            }
            PolyhedralViolation::BadIntersection {
                face_a,
                face_b,
                shared,
            } => write!(
                f,
                "faces {face_a} and {face_b} share vertices {shared:?} but not a single edge"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralReport {
    pub violation: Option<PolyhedralViolation>,
}

impl PolyhedralReport {
    pub fn is_polyhedral(&self) -> bool {
        self.violation.is_none()
    }
}

/// The dual embedding. Dual vertex `f` is face `f` of the primal (in tracing order);
/// dual edge `i` crosses primal edge `primal_edge[i]`.
#[derive(Debug, Clone)]
pub struct Dual {
    pub graph: EmbeddedGraph,
    pub primal_edge: Vec<usize>,
    pub faces: Vec<FacialWalk>,
}

impl EmbeddedGraph {
    /// Builds and validates an embedding. `rotations[v]` lists the ids of the edges incident
    /// with `v` in cyclic order.
    pub fn new(vertex_count: usize, edges: Vec<Edge>, rotations: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Structure("embedding with no vertices".into()));
        }
        if rotations.len() != vertex_count {
            return Err(Error::Structure(format!(
                "{} rotations given for {vertex_count} vertices",
                rotations.len()
            )));
        }
        let mut seen_pairs = BTreeSet::new();
        for (id, e) in edges.iter().enumerate() {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::Structure(format!(
                    "edge {id} has an endpoint out of range"
                )));
            }
            if e.u == e.v {
                return Err(Error::Structure(format!("edge {id} is a loop")));
            }
            if !seen_pairs.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::Structure(format!(
                    "edge {id} duplicates an earlier edge {}-{}",
                    e.u, e.v
                )));
            }
        }
        let mut dart_rotations = Vec::with_capacity(vertex_count);
        let mut position = vec![usize::MAX; 2 * edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for (i, &id) in rot.iter().enumerate() {
                let e = edges.get(id).ok_or_else(|| {
                    Error::Structure(format!("rotation of vertex {v} names unknown edge {id}"))
                })?;
                let d = if e.u == v {
                    Dart::new(id, 0)
                } else if e.v == v {
                    Dart::new(id, 1)
                } else {
                    return Err(Error::Structure(format!(
                        "rotation of vertex {v} names edge {id}, which is not incident with it"
                    )));
                };
                if position[d.index()] != usize::MAX {
                    return Err(Error::Structure(format!(
                        "edge {id} appears twice in the rotation of vertex {v}"
                    )));
                }
                position[d.index()] = i;
                darts.push(d);
            }
            dart_rotations.push(darts);
        }
        if let Some(missing) = position.iter().position(|&p| p == usize::MAX) {
            let d = Dart::from_index(missing);
            let e = edges[d.edge()];
            let v = if d.end() == 0 { e.u } else { e.v };
            return Err(Error::Structure(format!(
                "edge {} is missing from the rotation of vertex {v}",
                d.edge()
            )));
        }
        let g = EmbeddedGraph {
            vertex_count,
            edges,
            rotations: dart_rotations,
            position,
        };
        if !g.graph().is_connected() {
            return Err(Error::Structure("graph is not connected".into()));
        }
        Ok(g)
    }

    /// Builds an embedding from its list of face boundaries (vertex cycles). Orientation of
    /// the individual cycles does not matter; rotations and edge signs are inferred from the
    /// corners, and the result is sign-normalized. Edge ids follow lexicographic order of
    /// their endpoint pairs.
    pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut side_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for face in faces {
            if face.len() < 3 {
                return Err(Error::Structure(format!(
                    "face {face:?} has fewer than 3 vertices"
                )));
            }
            for i in 0..face.len() {
                let (a, b) = (face[i], face[(i + 1) % face.len()]);
                if a >= vertex_count || b >= vertex_count || a == b {
                    return Err(Error::Structure(format!("bad face {face:?}")));
                }
                *side_count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        if let Some((&(a, b), &c)) = side_count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::Structure(format!(
                "edge {a}-{b} borders {c} face sides instead of 2"
            )));
        }
        let edge_id: BTreeMap<(usize, usize), usize> = side_count
            .keys()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        let id_of = |a: usize, b: usize| edge_id[&(a.min(b), a.max(b))];

        // Link of each vertex: corners (prev, next) must chain into one cycle.
        let mut link: Vec<BTreeMap<usize, Vec<usize>>> = vec![BTreeMap::new(); vertex_count];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (prev, v, next) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
                link[v].entry(prev).or_default().push(next);
                link[v].entry(next).or_default().push(prev);
            }
        }
        let mut neighbor_rot: Vec<Vec<usize>> = Vec::with_capacity(vertex_count);
        for (v, l) in link.iter().enumerate() {
            let Some((&start, _)) = l.iter().next() else {
                return Err(Error::Structure(format!("vertex {v} lies on no face")));
            };
            if l.values().any(|adj| adj.len() != 2) {
                return Err(Error::Structure(format!(
                    "the link of vertex {v} is not a cycle"
                )));
            }
            let mut order = vec![start];
            let mut prev = start;
            let mut cur = *l[&start].iter().min().unwrap();
            while cur != start {
                order.push(cur);
                let adj = &l[&cur];
                let nxt = if adj[0] == prev { adj[1] } else { adj[0] };
                prev = cur;
                cur = nxt;
                if order.len() > l.len() {
                    break;
                }
            }
            if order.len() != l.len() {
                return Err(Error::Structure(format!(
                    "the link of vertex {v} splits into several cycles (not a surface)"
                )));
            }
            neighbor_rot.push(order);
        }
        let succ_is = |v: usize, from: usize, to: usize| -> bool {
            let rot = &neighbor_rot[v];
            let i = rot.iter().position(|&x| x == from).unwrap();
            rot[(i + 1) % rot.len()] == to
        };

        let mut edges: Vec<Edge> = edge_id
            .keys()
            .map(|&(u, v)| Edge {
                u,
                v,
                sign: Sign::Positive,
            })
            .collect();
        let mut signed = vec![false; edges.len()];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (t, u, v, w) = (
                    face[(i + k - 1) % k],
                    face[i],
                    face[(i + 1) % k],
                    face[(i + 2) % k],
                );
                let id = id_of(u, v);
                if signed[id] {
                    continue;
                }
                let at_u = Sign::from_bool(succ_is(u, t, v));
                let at_v = Sign::from_bool(succ_is(v, u, w));
                edges[id].sign = at_u.times(at_v);
                signed[id] = true;
            }
        }
        let rotations = neighbor_rot
            .iter()
            .enumerate()
            .map(|(v, rot)| rot.iter().map(|&w| id_of(v, w)).collect())
            .collect();
        let g = EmbeddedGraph::new(vertex_count, edges, rotations)?.normalized();

        let expected: BTreeSet<Vec<usize>> = faces.iter().map(|f| canonical_cycle(f)).collect();
        let traced: BTreeSet<Vec<usize>> = g
            .faces()
            .iter()
            .map(|w| canonical_cycle(&w.vertices(&g)))
            .collect();
        if expected != traced || g.faces().len() != faces.len() {
            return Err(Error::Structure(
                "face list does not describe a closed surface consistently".into(),
            ));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    /// Edge ids around `v` in rotation order.
    pub fn rotation_edges(&self, v: usize) -> Vec<usize> {
        self.rotations[v].iter().map(|d| d.edge()).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn tail(&self, d: Dart) -> usize {
        let e = &self.edges[d.edge()];
        if d.end() == 0 {
            e.u
        } else {
            e.v
        }
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.twin())
    }

    pub fn successor(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.tail(d)];
        rot[(self.position[d.index()] + 1) % rot.len()]
    }

    pub fn predecessor(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.tail(d)];
        rot[(self.position[d.index()] + rot.len() - 1) % rot.len()]
    }

    /// The id of edge `uv`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.rotations[u]
            .iter()
            .map(|d| d.edge())
            .find(|&id| self.edges[id].other(u) == v)
    }

    /// Underlying abstract graph.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count);
        for e in &self.edges {
            g.add_edge(e.u, e.v).expect("validated edge");
        }
        g
    }

    /// Traces every face once.
    ///
    /// A walk leaves along a dart with a local-orientation flag; crossing a negative edge
    /// flips the flag, and on arrival the next dart is the rotation successor of the
    /// arriving dart when the flag is positive, the predecessor otherwise. A state
    /// (dart, flag) and its reverse (twin, flag after crossing, negated) describe the same
    /// face traversed backwards, so both are retired together. Walks start at the smallest
    /// unused state, positive flag first.
    pub fn faces(&self) -> Vec<FacialWalk> {
        let m = self.edges.len();
        let state = |d: Dart, s: Sign| 2 * d.index() + usize::from(!s.is_positive());
        let mut used = vec![false; 4 * m];
        let mut faces = Vec::new();
        for start in 0..4 * m {
            if used[start] {
                continue;
            }
            let d0 = Dart::from_index(start / 2);
            let s0 = Sign::from_bool(start % 2 == 0);
            let (mut d, mut s) = (d0, s0);
            let mut walk = FacialWalk {
                darts: Vec::new(),
                flags: Vec::new(),
            };
            loop {
                let crossed = s.times(self.edges[d.edge()].sign);
                used[state(d, s)] = true;
                used[state(d.twin(), crossed.flip())] = true;
                walk.darts.push(d);
                walk.flags.push(s);
                let arrive = d.twin();
                d = if crossed.is_positive() {
                    self.successor(arrive)
                } else {
                    self.predecessor(arrive)
                };
                s = crossed;
                if d == d0 && s == s0 {
                    break;
                }
            }
            faces.push(walk);
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Vertex-flip potential that makes every edge of a BFS spanning tree positive.
    fn tree_potential(&self) -> Vec<Sign> {
        let mut phi = vec![None; self.vertex_count];
        phi[0] = Some(Sign::Positive);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &d in &self.rotations[u] {
                let e = &self.edges[d.edge()];
                let w = e.other(u);
                if phi[w].is_none() {
                    phi[w] = Some(phi[u].unwrap().times(e.sign));
                    queue.push_back(w);
                }
            }
        }
        phi.into_iter().map(|p| p.unwrap()).collect()
    }

    /// Orientable iff some set of vertex flips makes every sign positive.
    pub fn is_orientable(&self) -> bool {
        let phi = self.tree_potential();
        self.edges
            .iter()
            .all(|e| phi[e.u].times(e.sign).times(phi[e.v]).is_positive())
    }

    /// Flip vertices (reverse rotation, negate incident signs) so that a BFS spanning tree is
    /// all positive. Orientable embeddings come out with every sign positive.
    pub fn normalized(&self) -> EmbeddedGraph {
        let phi = self.tree_potential();
        let mut g = self.clone();
        for e in &mut g.edges {
            e.sign = phi[e.u].times(e.sign).times(phi[e.v]);
        }
        for (rotation, sign) in g.rotations.iter_mut().zip(&phi) {
            if !sign.is_positive() {
                rotation.reverse();
                for (i, d) in rotation.iter().enumerate() {
                    g.position[d.index()] = i;
                }
            }
        }
        g
    }

    /// Flip one vertex: reverse its rotation and negate the signs of its edges. The
    /// embedding (as a surface map) is unchanged.
    pub fn flip_vertex(&mut self, v: usize) {
        self.rotations[v].reverse();
        for (i, d) in self.rotations[v].iter().enumerate() {
            self.position[d.index()] = i;
            self.edges[d.edge()].sign = self.edges[d.edge()].sign.flip();
        }
    }

    pub fn surface(&self) -> SurfaceInfo {
        let f = self.face_count() as i64;
        SurfaceInfo {
            chi: self.vertex_count as i64 - self.edges.len() as i64 + f,
            orientable: self.is_orientable(),
        }
    }

    pub fn check_polyhedral(&self) -> PolyhedralReport {
        PolyhedralReport {
            violation: polyhedral_violation(self, &self.faces()),
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        self.check_polyhedral().is_polyhedral()
    }

    fn require_polyhedral(&self, what: &str) -> Result<Vec<FacialWalk>> {
        let faces = self.faces();
        match polyhedral_violation(self, &faces) {
            None => Ok(faces),
            Some(v) => Err(Error::Precondition(format!(
                "{what} needs a polyhedral embedding: {v}"
            ))),
        }
    }

    /// Geometric dual. Dual rotations follow facial-walk order, so each face carries the
    /// orientation it was traced with; a dual edge is positive exactly when the two faces
    /// it joins were traced with the same orientation as seen from a common endpoint.
    pub fn dual(&self) -> Result<Dual> {
        let faces = self.require_polyhedral("dual")?;
        let m = self.edges.len();
        // (face, walk orientation in the frame of endpoint u) per side of each edge.
        let mut sides: Vec<Vec<(usize, Sign)>> = vec![Vec::with_capacity(2); m];
        for (f, walk) in faces.iter().enumerate() {
            for (&d, &s) in walk.darts.iter().zip(&walk.flags) {
                let e = &self.edges[d.edge()];
                let q = if d.end() == 0 { s } else { s.times(e.sign) };
                sides[d.edge()].push((f, q));
            }
        }
        let mut edges = Vec::with_capacity(m);
        for (id, s) in sides.iter().enumerate() {
            if s.len() != 2 || s[0].0 == s[1].0 {
                return Err(Error::Invariant(format!(
                    "edge {id} does not separate two distinct faces"
                )));
            }
            let (a, b) = (s[0].0.min(s[1].0), s[0].0.max(s[1].0));
            edges.push(Edge {
                u: a,
                v: b,
                sign: s[0].1.times(s[1].1),
            });
        }
        let rotations = faces.iter().map(FacialWalk::edges).collect();
        let graph = EmbeddedGraph::new(faces.len(), edges, rotations)?;
        Ok(Dual {
            graph,
            primal_edge: (0..m).collect(),
            faces,
        })
    }

    /// Face subdivision as an abstract graph: vertex `v` stays `v`, face `f` becomes
    /// `vertex_count + f`.
    pub fn face_subdivision(&self) -> Result<Graph> {
        let faces = self.require_polyhedral("face subdivision")?;
        let n = self.vertex_count;
        let mut g = Graph::new(n + faces.len());
        for e in &self.edges {
            g.add_edge(e.u, e.v)?;
        }
        for (f, walk) in faces.iter().enumerate() {
            for v in walk.vertices(self) {
                g.add_edge(v, n + f)?;
            }
        }
        Ok(g)
    }

    /// The face subdivision with its natural triangulated embedding.
    pub fn face_subdivision_embedding(&self) -> Result<EmbeddedGraph> {
        let faces = self.require_polyhedral("face subdivision")?;
        let n = self.vertex_count;
        let mut triangles = Vec::new();
        for (f, walk) in faces.iter().enumerate() {
            let vs = walk.vertices(self);
            for i in 0..vs.len() {
                triangles.push(vec![vs[i], vs[(i + 1) % vs.len()], n + f]);
            }
        }
        EmbeddedGraph::from_faces(n + faces.len(), &triangles)
    }

    /// Union of the face subdivisions of the embedding and of its dual, on `V(G) ⊔ V(G*)`
    /// (face `f` is vertex `vertex_count + f`). Vertex-face incidences are shared by both
    /// subdivisions and appear once.
    pub fn radial_union(&self) -> Result<Graph> {
        let dual = self.dual()?;
        let n = self.vertex_count;
        let mut g = self.face_subdivision()?;
        for e in dual.graph.edges() {
            g.add_edge(n + e.u, n + e.v)?;
        }
        Ok(g)
    }

    /// Vertices of every face, in walk order.
    pub fn face_vertices(&self) -> Vec<Vec<usize>> {
        self.faces().iter().map(|w| w.vertices(self)).collect()
    }
}

pub fn trace_faces(g: &EmbeddedGraph) -> Vec<FacialWalk> {
    g.faces()
}

pub fn euler_characteristic(g: &EmbeddedGraph) -> SurfaceInfo {
    g.surface()
}

pub fn check_polyhedral(g: &EmbeddedGraph) -> PolyhedralReport {
    g.check_polyhedral()
}

pub(crate) fn polyhedral_violation(
    g: &EmbeddedGraph,
    faces: &[FacialWalk],
) -> Option<PolyhedralViolation> {
    let mut vertex_sets = Vec::with_capacity(faces.len());
    for (f, walk) in faces.iter().enumerate() {
        let mut set = BTreeSet::new();
        for v in walk.vertices(g) {
            if !set.insert(v) {
                return Some(PolyhedralViolation::RepeatedVertex { face: f, vertex: v });
            }
        }
        vertex_sets.push(set);
    }
    let edge_sets: Vec<BTreeSet<usize>> = faces
        .iter()
        .map(|w| w.edges().into_iter().collect())
        .collect();
    for a in 0..faces.len() {
        for b in a + 1..faces.len() {
            let shared: Vec<usize> = vertex_sets[a]
                .intersection(&vertex_sets[b])
                .copied()
                .collect();
            let fine = match shared.len() {
                0 | 1 => true,
                2 => edge_sets[a].intersection(&edge_sets[b]).any(|&id| {
                    let (u, v) = g.edges[id].endpoints();
                    (u.min(v), u.max(v)) == (shared[0], shared[1])
                }),
                _ => false,
            };
            if !fine {
                return Some(PolyhedralViolation::BadIntersection {
                    face_a: a,
                    face_b: b,
                    shared,
                });
            }
        }
    }
    None
}

/// Faces as canonical vertex cycles, independent of tracing order and orientation.
pub fn canonical_faces(g: &EmbeddedGraph) -> BTreeSet<Vec<usize>> {
    g.face_vertices()
        .iter()
        .map(|f| canonical_cycle(f))
        .collect()
}

/// Rotation to the smallest element, then the lexicographically smaller direction.
pub(crate) fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let Some(i) = (0..k).min_by_key(|&i| cycle[i]) else {
        return Vec::new();
    };
    let fwd: Vec<usize> = (0..k).map(|j| cycle[(i + j) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|j| cycle[(i + k - j) % k]).collect();
    fwd.min(bwd)
}
