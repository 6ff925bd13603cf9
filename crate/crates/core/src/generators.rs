//! Desk-scale corpus of polyhedral embeddings, and an exhaustive embedding search for small
//! graphs.
//!
//! Every generator describes its surface by a list of face boundaries and goes through
//! [`EmbeddedGraph::from_faces`], which infers rotations and signs and re-traces the faces
//! to confirm the description.

use std::collections::BTreeSet;

use crate::embedding::{Edge, EmbeddedGraph, Sign};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] = [
        Platonic::Tetrahedron,
        Platonic::Cube,
        Platonic::Octahedron,
        Platonic::Dodecahedron,
        Platonic::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }

    pub fn from_name(name: &str) -> Result<Platonic> {
        Platonic::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::Argument(format!("unknown platonic solid `{name}`")))
    }
}

pub fn platonic(which: Platonic) -> EmbeddedGraph {
    let (n, faces) = platonic_faces(which);
    EmbeddedGraph::from_faces(n, &faces).expect("platonic face lists are valid")
}

fn platonic_faces(which: Platonic) -> (usize, Vec<Vec<usize>>) {
    match which {
        Platonic::Tetrahedron => (
            4,
            vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]],
        ),
        Platonic::Cube => prism_faces(4),
        Platonic::Octahedron => {
            // 0/1 = ±x, 2/3 = ±y, 4/5 = ±z; one triangle per octant.
            let mut faces = Vec::new();
            for x in [0, 1] {
                for y in [2, 3] {
                    for z in [4, 5] {
                        faces.push(vec![x, y, z]);
                    }
                }
            }
            (6, faces)
        }
        Platonic::Dodecahedron => {
            // Outer pentagon a0..a4, middle 10-cycle b0..b9, inner pentagon c0..c4;
            // a_i ~ b_{2i}, b_{2i+1} ~ c_i.
            let a = |i: usize| i % 5;
            let b = |i: usize| 5 + i % 10;
            let c = |i: usize| 15 + i % 5;
            let mut faces = vec![(0..5).map(a).collect(), (0..5).map(c).collect()];
            for i in 0..5 {
                faces.push(vec![a(i), a(i + 1), b(2 * i + 2), b(2 * i + 1), b(2 * i)]);
                faces.push(vec![
                    b(2 * i + 1),
                    b(2 * i + 2),
                    b(2 * i + 3),
                    c(i + 1),
                    c(i),
                ]);
            }
            (20, faces)
        }
        Platonic::Icosahedron => (12, icosahedron_faces()),
    }
}

/// Top 0, upper ring 1..=5, lower ring 6..=10, bottom 11. Lower vertex `l_i` sits between
/// upper vertices `u_i` and `u_{i+1}`.
fn icosahedron_faces() -> Vec<Vec<usize>> {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, u(i), u(i + 1)]);
        faces.push(vec![u(i), u(i + 1), l(i)]);
        faces.push(vec![u(i + 1), l(i + 1), l(i)]);
        faces.push(vec![11, l(i), l(i + 1)]);
    }
    faces
}

fn prism_faces(n: usize) -> (usize, Vec<Vec<usize>>) {
    let top = |i: usize| i % n;
    let bottom = |i: usize| n + i % n;
    let mut faces = vec![
        (0..n).map(top).collect(),
        (0..n).rev().map(bottom).collect(),
    ];
    for i in 0..n {
        faces.push(vec![top(i), top(i + 1), bottom(i + 1), bottom(i)]);
    }
    (2 * n, faces)
}

/// `C_n × K_2` on the sphere.
pub fn prism(n: usize) -> Result<EmbeddedGraph> {
    if n < 3 {
        return Err(Error::Argument(format!("prism needs n >= 3, got {n}")));
    }
    let (v, faces) = prism_faces(n);
    EmbeddedGraph::from_faces(v, &faces)
}

fn grid_faces(m: usize, n: usize, twisted: bool) -> Vec<Vec<usize>> {
    let id = |i: usize, j: usize| (i % m) * n + j % n;
    let mut faces = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            if twisted && i == m - 1 {
                // The last row of squares closes up against row 0 read backwards.
                let mirror = |j: usize| (n - 1 - j % n) % n;
                faces.push(vec![id(i, j), id(i, j + 1), mirror(j + 1), mirror(j)]);
            } else {
                faces.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)]);
            }
        }
    }
    faces
}

/// `C_m × C_n` quadrangulating the torus.
pub fn toroidal_grid(m: usize, n: usize) -> Result<EmbeddedGraph> {
    if m < 3 || n < 3 {
        return Err(Error::Argument(format!(
            "toroidal grid needs m, n >= 3, got {m}x{n}"
        )));
    }
    EmbeddedGraph::from_faces(m * n, &grid_faces(m, n, false))
}

/// Quadrangulated Klein bottle: an `m × n` grid whose rows wrap normally and whose last
/// row is glued to the first with reversed orientation.
pub fn klein_grid(m: usize, n: usize) -> Result<EmbeddedGraph> {
    if m < 3 || n < 3 {
        return Err(Error::Argument(format!(
            "Klein grid needs m, n >= 3, got {m}x{n}"
        )));
    }
    EmbeddedGraph::from_faces(m * n, &grid_faces(m, n, true))
}

/// The triangular embedding of K6 in the projective plane, obtained as the antipodal
/// quotient of the icosahedron.
pub fn k6_projective() -> EmbeddedGraph {
    // u_i is antipodal to l_{i+2}; classes: top/bottom -> 0, {u_i, l_{i+2}} -> 1 + i.
    let class = |v: usize| match v {
        0 | 11 => 0,
        1..=5 => v,
        _ => 1 + (v - 6 + 3) % 5,
    };
    let mut seen = BTreeSet::new();
    let mut faces = Vec::new();
    for f in icosahedron_faces() {
        let q: Vec<usize> = f.iter().map(|&v| class(v)).collect();
        let key: BTreeSet<usize> = q.iter().copied().collect();
        if seen.insert(key) {
            faces.push(q);
        }
    }
    EmbeddedGraph::from_faces(6, &faces).expect("antipodal quotient is a valid map")
}

/// The triangular embedding of K7 on the torus: faces `{i, i+1, i+3}` and `{i, i+2, i+3}`
/// over Z_7.
pub fn k7_torus() -> EmbeddedGraph {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 3) % 7, (i + 2) % 7]);
    }
    EmbeddedGraph::from_faces(7, &faces).expect("K7 toroidal triangulation is valid")
}

/// Connected sum of two embeddings, cutting out face `face_a` of `a` and `face_b` of `b`
/// (face indices in tracing order) and gluing along the two boundary cycles. The faces must
/// have equal length. The Euler characteristic of the result is `chi(a) + chi(b) - 2`.
pub fn connected_sum(
    a: &EmbeddedGraph,
    face_a: usize,
    b: &EmbeddedGraph,
    face_b: usize,
) -> Result<EmbeddedGraph> {
    let fa = a.face_vertices();
    let fb = b.face_vertices();
    let (Some(ca), Some(cb)) = (fa.get(face_a), fb.get(face_b)) else {
        return Err(Error::Argument(
            "connected sum: face index out of range".into(),
        ));
    };
    if ca.len() != cb.len() {
        return Err(Error::Argument(format!(
            "connected sum needs faces of equal length, got {} and {}",
            ca.len(),
            cb.len()
        )));
    }
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; b.vertex_count()];
    for (x, y) in ca.iter().zip(cb) {
        map[*y] = *x;
    }
    let mut next = n;
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut faces: Vec<Vec<usize>> = Vec::new();
    faces.extend(
        fa.iter()
            .enumerate()
            .filter(|&(i, _)| i != face_a)
            .map(|(_, f)| f.clone()),
    );
    faces.extend(
        fb.iter()
            .enumerate()
            .filter(|&(i, _)| i != face_b)
            .map(|(_, f)| f.iter().map(|&v| map[v]).collect()),
    );
    EmbeddedGraph::from_faces(next, &faces)
}

/// Genus-2 surface: connected sum of two copies of `toroidal_grid(m, n)`.
pub fn double_torus(m: usize, n: usize) -> Result<EmbeddedGraph> {
    let t = toroidal_grid(m, n)?;
    connected_sum(&t, 0, &t, 0)
}

/// Non-orientable surface of Euler characteristic -2: a toroidal grid summed with a Klein
/// grid.
pub fn torus_klein_sum(m: usize, n: usize) -> Result<EmbeddedGraph> {
    connected_sum(&toroidal_grid(m, n)?, 0, &klein_grid(m, n)?, 0)
}

/// Genus-3 surface: two `3 × 3` toroidal grids attached to two far-apart faces of a `4 × 4`
/// one.
pub fn triple_torus() -> Result<EmbeddedGraph> {
    let middle = toroidal_grid(4, 4)?;
    let faces = middle.face_vertices();
    let far = faces
        .iter()
        .position(|f| {
            // No shared row and no shared column with face 0.
            f.iter()
                .all(|&v| faces[0].iter().all(|&w| v / 4 != w / 4 && v % 4 != w % 4))
        })
        .ok_or_else(|| Error::Invariant("no disjoint face in 4x4 grid".into()))?;
    let t = toroidal_grid(3, 3)?;
    let once = connected_sum(&middle, far, &t, 0)?;
    // Face 0 of the middle grid survives with the same vertex ids; find it again.
    let again = once
        .face_vertices()
        .iter()
        .position(|f| {
            crate::embedding::canonical_cycle(f) == crate::embedding::canonical_cycle(&faces[0])
        })
        .ok_or_else(|| Error::Invariant("lost face after connected sum".into()))?;
    connected_sum(&once, again, &t, 0)
}

/// A named instance of the standard corpus.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub embedding: EmbeddedGraph,
}

/// Parses `name` plus integer parameters, e.g. `("prism", [5])`, `("torus", [3, 4])`.
pub fn by_name(name: &str, params: &[usize]) -> Result<EmbeddedGraph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "`{name}` takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "tetrahedron" | "cube" | "octahedron" | "dodecahedron" | "icosahedron" => {
            want(0)?;
            Ok(platonic(Platonic::from_name(name)?))
        }
        "prism" => {
            want(1)?;
            prism(params[0])
        }
        "torus" | "toroidal-grid" => {
            want(2)?;
            toroidal_grid(params[0], params[1])
        }
        "klein" | "klein-grid" => {
            want(2)?;
            klein_grid(params[0], params[1])
        }
        "k6-projective" => {
            want(0)?;
            Ok(k6_projective())
        }
        "k7-torus" => {
            want(0)?;
            Ok(k7_torus())
        }
        "double-torus" => {
            want(2)?;
            double_torus(params[0], params[1])
        }
        "torus-klein" => {
            want(2)?;
            torus_klein_sum(params[0], params[1])
        }
        "triple-torus" => {
            want(0)?;
            triple_torus()
        }
        _ => Err(Error::Argument(format!("unknown generator `{name}`"))),
    }
}

/// Standard corpus: the five Platonic solids, prisms 3..=8, toroidal grids up to 4×5, two
/// Klein grids, the K6 and K7 triangulations, and two Euler characteristic -2 surfaces.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |name: String, g: EmbeddedGraph| out.push(Instance { name, embedding: g });
    for p in Platonic::ALL {
        push(p.name().into(), platonic(p));
    }
    for n in 3..=8 {
        push(format!("prism({n})"), prism(n).unwrap());
    }
    for (m, n) in [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5)] {
        push(format!("torus({m},{n})"), toroidal_grid(m, n).unwrap());
    }
    for (m, n) in [(3, 3), (4, 4)] {
        push(format!("klein({m},{n})"), klein_grid(m, n).unwrap());
    }
    push("k6-projective".into(), k6_projective());
    push("k7-torus".into(), k7_torus());
    push("double-torus(3,3)".into(), double_torus(3, 3).unwrap());
    push("torus-klein(3,3)".into(), torus_klein_sum(3, 3).unwrap());
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceClass {
    Orientable,
    NonOrientable,
    Any,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub surfaces: SurfaceClass,
    /// Maximum number of search nodes before giving up with `ResourceExhausted`.
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            surfaces: SurfaceClass::Any,
            node_budget: 100_000_000,
        }
    }
}

/// Exhaustive search for a cellular embedding of `g` with Euler characteristic `target_chi`
/// (optionally polyhedral). Returns the first hit in a fixed exploration order.
///
/// Faces are traced one at a time while rotations (and, for non-orientable surfaces, edge
/// signs) are chosen lazily the first time the walk needs them. Since faces are at least
/// triangles, the face count is `F` exactly when the total face-length excess over 3 is
/// `2|E| - 3F`; partial walks that already exceed that budget are cut off.
pub fn embedding_search(
    g: &Graph,
    target_chi: i64,
    require_polyhedral: bool,
    options: SearchOptions,
) -> Result<EmbeddedGraph> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Precondition(
            "embedding search needs a connected graph".into(),
        ));
    }
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let faces = target_chi - n + m;
    let not_found = || {
        Error::NotFound(format!(
            "no {}embedding with chi = {target_chi}",
            if require_polyhedral {
                "polyhedral "
            } else {
                ""
            }
        ))
    };
    if faces < 1 || 2 * m - 3 * faces < 0 {
        return Err(not_found());
    }
    let orientable_possible = target_chi % 2 == 0 && target_chi <= 2;
    let passes: Vec<bool> = match options.surfaces {
        SurfaceClass::Orientable if !orientable_possible => return Err(not_found()),
        SurfaceClass::Orientable => vec![false],
        SurfaceClass::NonOrientable => vec![true],
        SurfaceClass::Any if orientable_possible => vec![false, true],
        SurfaceClass::Any => vec![true],
    };
    let mut nodes = 0u64;
    for signed in passes {
        let mut search = RotationSearch::new(g, faces as usize, require_polyhedral, signed);
        search.budget = options.node_budget.saturating_sub(nodes);
        let hit = search.run()?;
        nodes += search.nodes;
        if let Some(emb) = hit {
            let emb = emb.normalized();
            let orientable = emb.is_orientable();
            let class_ok = match options.surfaces {
                SurfaceClass::Orientable => orientable,
                SurfaceClass::NonOrientable => !orientable,
                SurfaceClass::Any => true,
            };
            if class_ok {
                return Ok(emb);
            }
        }
    }
    Err(not_found())
}

struct ClosedFace {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<usize>,
}

struct RotationSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    darts_at: Vec<Vec<usize>>,
    target_faces: usize,
    excess_budget: usize,
    require_polyhedral: bool,
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    sign: Vec<Option<Sign>>,
    used: Vec<bool>,
    closed: Vec<ClosedFace>,
    closed_excess: usize,
    walk: Vec<(usize, Sign)>,
    nodes: u64,
    budget: u64,
}

enum Outcome {
    Found,
    Exhausted,
    Dead,
}

impl RotationSearch {
    fn new(g: &Graph, target_faces: usize, require_polyhedral: bool, signed: bool) -> Self {
        let edges = g.edges();
        let m = edges.len();
        let mut darts_at = vec![Vec::new(); g.vertex_count()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            darts_at[u].push(2 * id);
            darts_at[v].push(2 * id + 1);
        }
        let mut sign = vec![if signed { None } else { Some(Sign::Positive) }; m];
        if signed {
            // Switching classes: a spanning tree can always be made positive.
            let mut seen = vec![false; g.vertex_count()];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(u) = stack.pop() {
                for &d in &darts_at[u] {
                    let (a, b) = edges[d / 2];
                    let w = if a == u { b } else { a };
                    if !seen[w] {
                        seen[w] = true;
                        sign[d / 2] = Some(Sign::Positive);
                        stack.push(w);
                    }
                }
            }
        }
        RotationSearch {
            n: g.vertex_count(),
            edges,
            darts_at,
            target_faces,
            excess_budget: 2 * m - 3 * target_faces,
            require_polyhedral,
            succ: vec![None; 2 * m],
            pred: vec![None; 2 * m],
            sign,
            used: vec![false; 4 * m],
            closed: Vec::new(),
            closed_excess: 0,
            walk: Vec::new(),
            nodes: 0,
            budget: u64::MAX,
        }
    }

    fn tail(&self, d: usize) -> usize {
        let (u, v) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    fn state(d: usize, s: Sign) -> usize {
        2 * d + usize::from(!s.is_positive())
    }

    /// Whether `succ[x] = y` keeps the partial rotation extendable to one cycle.
    fn can_link(&self, x: usize, y: usize) -> bool {
        if self.succ[x].is_some() || self.pred[y].is_some() {
            return false;
        }
        let deg = self.darts_at[self.tail(x)].len();
        let mut len = 1;
        let mut cur = y;
        while cur != x {
            match self.succ[cur] {
                Some(nx) => {
                    cur = nx;
                    len += 1;
                }
                None => return true,
            }
        }
        len == deg
    }

    fn link(&mut self, x: usize, y: usize) {
        self.succ[x] = Some(y);
        self.pred[y] = Some(x);
    }

    fn unlink(&mut self, x: usize, y: usize) {
        self.succ[x] = None;
        self.pred[y] = None;
    }

    fn run(&mut self) -> Result<Option<EmbeddedGraph>> {
        match self.start_face() {
            Outcome::Found => Ok(Some(self.build())),
            Outcome::Dead => Ok(None),
            Outcome::Exhausted => Err(Error::ResourceExhausted(format!(
                "embedding search exceeded {} nodes",
                self.budget
            ))),
        }
    }

    fn build(&self) -> EmbeddedGraph {
        let edges = self
            .edges
            .iter()
            .zip(&self.sign)
            .map(|(&(u, v), s)| Edge {
                u,
                v,
                sign: s.unwrap_or(Sign::Positive),
            })
            .collect();
        let rotations = (0..self.n)
            .map(|v| {
                let first = self.darts_at[v][0];
                let mut rot = vec![first / 2];
                let mut cur = self.succ[first].expect("complete rotation");
                while cur != first {
                    rot.push(cur / 2);
                    cur = self.succ[cur].expect("complete rotation");
                }
                rot
            })
            .collect();
        EmbeddedGraph::new(self.n, edges, rotations).expect("search builds valid rotations")
    }

    fn start_face(&mut self) -> Outcome {
        let Some(st) = self.used.iter().position(|u| !u) else {
            return if self.closed.len() == self.target_faces {
                Outcome::Found
            } else {
                Outcome::Dead
            };
        };
        if self.closed.len() >= self.target_faces {
            return Outcome::Dead;
        }
        let d0 = st / 2;
        let s0 = if st % 2 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        self.enter(d0, s0, (d0, s0))
    }

    /// Append state `(d, s)` to the current walk and continue.
    fn enter(&mut self, d: usize, s: Sign, start: (usize, Sign)) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::Exhausted;
        }
        if self.used[Self::state(d, s)] {
            return Outcome::Dead;
        }
        let v = self.tail(d);
        if self.require_polyhedral && self.walk.iter().any(|&(x, _)| self.tail(x) == v) {
            return Outcome::Dead;
        }
        if self.closed_excess + (self.walk.len() + 1).saturating_sub(3) > self.excess_budget {
            return Outcome::Dead;
        }
        match self.sign[d / 2] {
            Some(sign) => self.cross(d, s, sign, start),
            None => {
                for choice in [Sign::Positive, Sign::Negative] {
                    self.sign[d / 2] = Some(choice);
                    let out = self.cross(d, s, choice, start);
                    if !matches!(out, Outcome::Dead) {
                        return out;
                    }
                }
                self.sign[d / 2] = None;
                Outcome::Dead
            }
        }
    }

    fn cross(&mut self, d: usize, s: Sign, edge_sign: Sign, start: (usize, Sign)) -> Outcome {
        let crossed = s.times(edge_sign);
        let here = Self::state(d, s);
        let back = Self::state(d ^ 1, crossed.flip());
        if here != back && self.used[back] {
            return Outcome::Dead;
        }
        self.used[here] = true;
        self.used[back] = true;
        self.walk.push((d, s));
        let out = self.advance(d ^ 1, crossed, start);
        self.walk.pop();
        self.used[here] = false;
        self.used[back] = false;
        out
    }

    /// Standing on arriving dart `x` with flag `s`: pick the next dart.
    fn advance(&mut self, x: usize, s: Sign, start: (usize, Sign)) -> Outcome {
        let known = if s.is_positive() {
            self.succ[x]
        } else {
            self.pred[x]
        };
        if let Some(next) = known {
            return self.step(next, s, start);
        }
        let w = self.tail(x);
        let candidates = self.darts_at[w].clone();
        for y in candidates {
            let (a, b) = if s.is_positive() { (x, y) } else { (y, x) };
            if !self.can_link(a, b) {
                continue;
            }
            self.link(a, b);
            let out = self.step(y, s, start);
            if !matches!(out, Outcome::Dead) {
                return out;
            }
            self.unlink(a, b);
        }
        Outcome::Dead
    }

    fn step(&mut self, next: usize, s: Sign, start: (usize, Sign)) -> Outcome {
        if (next, s) != start {
            return self.enter(next, s, start);
        }
        let len = self.walk.len();
        let excess = len.saturating_sub(3);
        if len < 3 || self.closed_excess + excess > self.excess_budget {
            return Outcome::Dead;
        }
        let face = ClosedFace {
            vertices: self.walk.iter().map(|&(d, _)| self.tail(d)).collect(),
            edges: self.walk.iter().map(|&(d, _)| d / 2).collect(),
        };
        if self.require_polyhedral && self.closed.iter().any(|c| !self.meets_well(c, &face)) {
            return Outcome::Dead;
        }
        let walk = std::mem::take(&mut self.walk);
        self.closed.push(face);
        self.closed_excess += excess;
        let out = self.start_face();
        self.closed_excess -= excess;
        self.closed.pop();
        self.walk = walk;
        out
    }

    fn meets_well(&self, a: &ClosedFace, b: &ClosedFace) -> bool {
        let shared: Vec<usize> = a.vertices.intersection(&b.vertices).copied().collect();
        match shared.len() {
            0 | 1 => true,
            2 => a.edges.intersection(&b.edges).any(|&id| {
                let (u, v) = self.edges[id];
                (u, v) == (shared[0], shared[1])
            }),
            _ => false,
        }
    }
}
