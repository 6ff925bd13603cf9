//! H-decompositions, tree- and path-decompositions, their verification, and the
//! constructions that turn an edge-assignment into decompositions of the dual and of the
//! face subdivision.

use std::collections::BTreeSet;
use std::fmt;

use crate::assignment::{self, AssignmentConstruction, EdgeAssignment};
use crate::embedding::{EmbeddedGraph, SurfaceInfo};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spanning::{self, SpanningSubgraph, TreeSearchOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionKind {
    /// Any host graph, edges covered by a bag or by a host edge, width = max bag size.
    General,
    /// Tree host, every edge inside a bag, width = max bag size - 1.
    Tree,
    /// Host is the path `0 - 1 - ... - (n-1)`, otherwise as `Tree`.
    Path,
}

impl DecompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            DecompositionKind::General => "general",
            DecompositionKind::Tree => "tree",
            DecompositionKind::Path => "path",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "general" => Some(DecompositionKind::General),
            "tree" => Some(DecompositionKind::Tree),
            "path" => Some(DecompositionKind::Path),
            _ => None,
        }
    }

    fn strict_edges(self) -> bool {
        self != DecompositionKind::General
    }
}

/// Bags indexed by the vertices of a host graph.
///
/// `removed` lists target vertices that have been taken out (an apex set): they are exempt
/// from the coverage conditions and may not occur in any bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub host: Graph,
    pub bags: Vec<BTreeSet<usize>>,
    pub removed: BTreeSet<usize>,
}

impl Decomposition {
    pub fn new(kind: DecompositionKind, host: Graph, bags: Vec<BTreeSet<usize>>) -> Result<Self> {
        if host.vertex_count() != bags.len() {
            return Err(Error::Argument(format!(
                "{} bags for a host with {} vertices",
                bags.len(),
                host.vertex_count()
            )));
        }
        Ok(Decomposition {
            kind,
            host,
            bags,
            removed: BTreeSet::new(),
        })
    }

    pub fn path(bags: Vec<BTreeSet<usize>>) -> Self {
        let host = Graph::path(bags.len());
        Decomposition::new(DecompositionKind::Path, host, bags).expect("one bag per path vertex")
    }

    /// Each vertex of `g` in its own bag, hosted by `g` itself.
    pub fn identity(g: &Graph) -> Self {
        let bags = (0..g.vertex_count()).map(|v| BTreeSet::from([v])).collect();
        Decomposition::new(DecompositionKind::General, g.clone(), bags).expect("sizes agree")
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn bag_size_sum(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).sum()
    }

    /// Max bag size for general decompositions, one less for tree and path decompositions.
    pub fn width(&self) -> Result<usize> {
        if self.bags.is_empty() {
            return Err(Error::Argument("width of an empty bag family".into()));
        }
        let max = self.max_bag_size();
        Ok(match self.kind {
            DecompositionKind::General => max,
            _ => max.saturating_sub(1),
        })
    }

    /// Same bags, viewed as a general H-decomposition.
    pub fn as_general(&self) -> Decomposition {
        Decomposition {
            kind: DecompositionKind::General,
            ..self.clone()
        }
    }

    /// Drops `s` from every bag and records it as removed.
    pub fn without(&self, s: &BTreeSet<usize>) -> Decomposition {
        let mut d = self.clone();
        for bag in &mut d.bags {
            bag.retain(|v| !s.contains(v));
        }
        d.removed.extend(s.iter().copied());
        d
    }

    pub fn support(&self, v: usize) -> BTreeSet<usize> {
        (0..self.bags.len())
            .filter(|&h| self.bags[h].contains(&v))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Host does not match the kind, or bag count differs from host order.
    HostShape(String),
    /// A bag contains a vertex outside the target or a removed vertex.
    BagOutOfRange { host_vertex: usize, vertex: usize },
    /// Vertex lies in no bag.
    D1 { vertex: usize },
    /// Edge neither inside a bag nor across a host edge.
    D2 { edge: (usize, usize) },
    /// Edge not inside any bag (tree and path decompositions).
    D2Prime { edge: (usize, usize) },
    /// Bags containing the vertex do not induce a connected subgraph of the host.
    D3 { vertex: usize },
}

impl Violation {
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::HostShape(_) => "host",
            Violation::BagOutOfRange { .. } => "range",
            Violation::D1 { .. } => "D1",
            Violation::D2 { .. } => "D2",
            Violation::D2Prime { .. } => "D2'",
            Violation::D3 { .. } => "D3",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HostShape(msg) => write!(f, "host: {msg}"),
            Violation::BagOutOfRange {
                host_vertex,
                vertex,
            } => {
                write!(
                    f,
                    "range: bag {host_vertex} holds vertex {vertex}, which is not in the target"
                )
            }
            Violation::D1 { vertex } => write!(f, "(D1) vertex {vertex} lies in no bag"),
            Violation::D2 { edge: (u, v) } => {
                write!(
                    f,
                    "(D2) edge {u}-{v} is covered neither by a bag nor by a host edge"
                )
            }
            Violation::D2Prime { edge: (u, v) } => {
                write!(f, "(D2') edge {u}-{v} lies in no single bag")
            }
            Violation::D3 { vertex } => {
                write!(
                    f,
                    "(D3) the bags containing vertex {vertex} are not connected in the host"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub violation: Option<Violation>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `d` against `target` (minus `d.removed`): host shape, then (D1), then (D2) or
/// (D2') depending on the kind, then (D3). Reports the first failure.
pub fn verify(d: &Decomposition, target: &Graph) -> Verification {
    Verification {
        violation: first_violation(d, target),
    }
}

fn first_violation(d: &Decomposition, target: &Graph) -> Option<Violation> {
    if d.bags.len() != d.host.vertex_count() {
        return Some(Violation::HostShape(format!(
            "{} bags for {} host vertices",
            d.bags.len(),
            d.host.vertex_count()
        )));
    }
    match d.kind {
        DecompositionKind::Tree if !d.host.is_tree() => {
            return Some(Violation::HostShape(
                "tree decomposition host is not a tree".into(),
            ));
        }
        DecompositionKind::Path if !d.host.is_canonical_path() => {
            return Some(Violation::HostShape(
                "path decomposition host is not a path".into(),
            ));
        }
        _ => {}
    }
    let n = target.vertex_count();
    let mut support = vec![BTreeSet::new(); n];
    for (h, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v >= n || d.removed.contains(&v) {
                return Some(Violation::BagOutOfRange {
                    host_vertex: h,
                    vertex: v,
                });
            }
            support[v].insert(h);
        }
    }
    let present = |v: usize| !d.removed.contains(&v);
    if let Some(v) = (0..n).find(|&v| present(v) && support[v].is_empty()) {
        return Some(Violation::D1 { vertex: v });
    }
    for (u, v) in target.edges() {
        if !present(u) || !present(v) {
            continue;
        }
        if support[u].intersection(&support[v]).next().is_some() {
            continue;
        }
        if d.kind.strict_edges() {
            return Some(Violation::D2Prime { edge: (u, v) });
        }
        let across = support[u]
            .iter()
            .any(|&h| d.host.neighbors(h).any(|h2| support[v].contains(&h2)));
        if !across {
            return Some(Violation::D2 { edge: (u, v) });
        }
    }
    (0..n)
        .find(|&v| present(v) && !d.host.is_connected_within(&support[v]))
        .map(|v| Violation::D3 { vertex: v })
}

/// A set of target vertices taken out of a decomposition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ApexSet(pub BTreeSet<usize>);

impl ApexSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, offset: usize) -> ApexSet {
        ApexSet(self.0.iter().map(|v| v + offset).collect())
    }
}

/// For every vertex `v` of `g`, the faces through `v` whose assigned edge avoids `v`.
/// Hosted by `g`, targeting the dual (face ids).
pub fn dual_bags(g: &EmbeddedGraph, tau: &EdgeAssignment) -> Result<Decomposition> {
    let faces = g.faces();
    tau.validate_with(g, &faces)?;
    let mut bags = vec![BTreeSet::new(); g.vertex_count()];
    for (f, walk) in faces.iter().enumerate() {
        let e = g.edge(tau.edge_of(f));
        for v in walk.vertices(g) {
            if v != e.u && v != e.v {
                bags[v].insert(f);
            }
        }
    }
    Decomposition::new(DecompositionKind::General, g.graph(), bags)
}

/// For each bag larger than `k`, its `|bag| - k` smallest members.
pub fn apex_set(d: &Decomposition, k: usize) -> ApexSet {
    let mut s = BTreeSet::new();
    for bag in &d.bags {
        if bag.len() > k {
            s.extend(bag.iter().take(bag.len() - k).copied());
        }
    }
    ApexSet(s)
}

/// Bags `⋃_{g ∈ d2.bag(h)} d1.bag(g)` on the host of `d2`; `d1` decomposes some graph `F`
/// over the host `G`, and `d2` decomposes `G`.
pub fn compose(d1: &Decomposition, d2: &Decomposition) -> Result<Decomposition> {
    let middle = d1.host.vertex_count();
    if !d2.removed.is_empty() {
        return Err(Error::Argument(
            "cannot compose over a decomposition with removed vertices".into(),
        ));
    }
    let mut covered = BTreeSet::new();
    for bag in &d2.bags {
        for &g in bag {
            if g >= middle {
                return Err(Error::Argument(format!(
                    "second decomposition mentions vertex {g}, but the first has only {middle} host vertices"
                )));
            }
            covered.insert(g);
        }
    }
    if covered.len() != middle {
        return Err(Error::Argument(
            "second decomposition does not cover the host of the first".into(),
        ));
    }
    let bags = d2
        .bags
        .iter()
        .map(|bag| {
            bag.iter()
                .flat_map(|&g| d1.bags[g].iter().copied())
                .collect()
        })
        .collect();
    Ok(Decomposition {
        kind: d2.kind,
        host: d2.host.clone(),
        bags,
        removed: d1.removed.clone(),
    })
}

/// Adds `s` to every bag.
pub fn augment(d: &Decomposition, s: &ApexSet) -> Decomposition {
    let mut out = d.clone();
    for bag in &mut out.bags {
        bag.extend(s.0.iter().copied());
    }
    out.removed.retain(|v| !s.0.contains(v));
    out
}

/// [`augment`], then verification against `target`.
pub fn augment_verified(d: &Decomposition, s: &ApexSet, target: &Graph) -> Result<Decomposition> {
    let out = augment(d, s);
    match verify(&out, target).violation {
        None => Ok(out),
        Some(v) => Err(Error::Invariant(format!(
            "augmented decomposition fails: {v}"
        ))),
    }
}

/// Bags `{v} ∪ G*_v`, with face `f` renamed `vertex_count + f`; targets the radial union.
pub fn fs_bags(g: &EmbeddedGraph, tau: &EdgeAssignment) -> Result<Decomposition> {
    let n = g.vertex_count();
    let mut d = dual_bags(g, tau)?;
    for (v, bag) in d.bags.iter_mut().enumerate() {
        *bag = std::iter::once(v)
            .chain(bag.iter().map(|f| n + f))
            .collect();
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMode {
    /// Spanning tree of low total excess over degree 3.
    Tree3,
    /// Hamiltonian path, excess measured over degree 2.
    HamPath,
}

impl TreeMode {
    pub fn degree(self) -> usize {
        match self {
            TreeMode::Tree3 => 3,
            TreeMode::HamPath => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TreeMode::Tree3 => "tree3",
            TreeMode::HamPath => "hampath",
        }
    }
}

/// Largest apex set the construction can produce on a surface of Euler characteristic
/// `chi`: `te(T, k) + 2 (|E(H_tau)| - |E(T)|)` with the tree's own excess bound.
pub fn apex_bound(chi: i64, mode: TreeMode) -> usize {
    let tree_excess = match mode {
        TreeMode::Tree3 => (-2 * chi - 1).max(0),
        TreeMode::HamPath => 0,
    };
    (tree_excess + 2 * (1 - chi).max(0)) as usize
}

/// Everything the dual construction produced.
#[derive(Debug, Clone)]
pub struct DualDecomposition {
    pub mode: TreeMode,
    pub surface: SurfaceInfo,
    /// The tree (or Hamiltonian path) found on `g`.
    pub tree: SpanningSubgraph,
    pub construction: AssignmentConstruction,
    pub residual: SpanningSubgraph,
    /// `G*_v` for every vertex.
    pub bags: Decomposition,
    pub apex: ApexSet,
    /// `bags` with the apex set removed.
    pub reduced: Decomposition,
    /// `te(T, k)` of the avoided forest.
    pub tree_excess: usize,
    /// `te(H_tau, k)`.
    pub residual_excess: usize,
}

impl DualDecomposition {
    pub fn tau(&self) -> &EdgeAssignment {
        &self.construction.tau
    }

    pub fn k(&self) -> usize {
        self.mode.degree()
    }

    /// `te(T, k) + 2 (|E(H_tau)| - |E(T)|)`, the estimate the residual excess must respect.
    pub fn excess_estimate(&self) -> i64 {
        let avoided = &self.construction.avoided;
        self.tree_excess as i64
            + 2 * (self.residual.edge_count() as i64 - avoided.edge_count() as i64)
    }
}

/// Tree (3-tree or low-excess tree, or a Hamiltonian path) -> edge deletion on the sphere ->
/// edge-assignment -> dual bags -> apex set.
pub fn dual_decomposition(
    g: &EmbeddedGraph,
    mode: TreeMode,
    options: TreeSearchOptions,
) -> Result<DualDecomposition> {
    let surface = g.surface();
    if !g.is_polyhedral() {
        return Err(Error::Precondition(
            "dual decomposition needs a polyhedral embedding".into(),
        ));
    }
    let k = mode.degree();
    let tree = match mode {
        TreeMode::Tree3 => {
            let budget = (-2 * surface.chi - 1).max(0) as usize;
            spanning::find_low_excess_tree(g, k, budget, options)?
        }
        TreeMode::HamPath => {
            let path = spanning::hamiltonian_path(&g.graph(), options)?
                .ok_or_else(|| Error::NotFound("graph has no Hamiltonian path".into()))?;
            spanning::path_subgraph(g, &path)?
        }
    };
    let construction = assignment::construct_from_tree(g, &tree)?;
    let residual = assignment::residual_graph(g, &construction.tau)?;
    let bags = dual_bags(g, &construction.tau)?;
    let apex = apex_set(&bags, k);
    let reduced = bags.without(&apex.0);
    let tree_excess = spanning::total_excess(&construction.avoided, k)?;
    let residual_excess = spanning::total_excess(&residual, k)?;
    Ok(DualDecomposition {
        mode,
        surface,
        tree,
        construction,
        residual,
        bags,
        apex,
        reduced,
        tree_excess,
        residual_excess,
    })
}

/// The dual construction re-read on the radial union.
#[derive(Debug, Clone)]
pub struct FsDecomposition {
    pub dual: DualDecomposition,
    /// `{v} ∪ G*_v` for every vertex.
    pub bags: Decomposition,
    /// Apex set in radial-union ids.
    pub apex: ApexSet,
    pub reduced: Decomposition,
}

pub fn fs_decomposition(
    g: &EmbeddedGraph,
    mode: TreeMode,
    options: TreeSearchOptions,
) -> Result<FsDecomposition> {
    let dual = dual_decomposition(g, mode, options)?;
    let bags = fs_bags(g, dual.tau())?;
    let apex = dual.apex.shifted(g.vertex_count());
    let reduced = bags.without(&apex.0);
    Ok(FsDecomposition {
        dual,
        bags,
        apex,
        reduced,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// H-width of the dual from H-width of the graph.
    HWidth,
    /// Pathwidth of the dual.
    Pathwidth,
    /// Treewidth of the face subdivision.
    FsTreewidth,
    /// Pathwidth of the face subdivision.
    FsPathwidth,
}

impl Theorem {
    pub fn label(self) -> &'static str {
        match self {
            Theorem::HWidth => "thm3",
            Theorem::Pathwidth => "thm4",
            Theorem::FsTreewidth => "thm5-tw",
            Theorem::FsPathwidth => "thm5-pw",
        }
    }

    fn targets_subdivision(self) -> bool {
        matches!(self, Theorem::FsTreewidth | Theorem::FsPathwidth)
    }
}

/// Upper bound on the width of the constructed decomposition, given the width `w` of the
/// input decomposition (max bag size for `HWidth`, width otherwise). The second value is
/// `false` for rows the construction yields but the published statements omit (pathwidth on
/// the sphere, and every Hamiltonian-path row).
pub fn theorem_bound(which: Theorem, chi: i64, w: usize, mode: TreeMode) -> (i64, bool) {
    let w = w as i64;
    let per_bag = mode.degree() as i64 + i64::from(which.targets_subdivision());
    let apex = apex_bound(chi, mode) as i64;
    let bound = match which {
        Theorem::HWidth => per_bag * w + apex,
        _ => per_bag * (w + 1) - 1 + apex,
    };
    let published = mode == TreeMode::Tree3 && !(which == Theorem::Pathwidth && chi == 2);
    (bound, published)
}

#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub theorem: Theorem,
    pub mode: TreeMode,
    pub surface: SurfaceInfo,
    pub input_width: usize,
    pub apex_size: usize,
    /// Decomposition of the dual (`HWidth`, `Pathwidth`) or of the radial union.
    pub decomposition: Decomposition,
    pub certified_width: usize,
    pub bound: i64,
    pub published_row: bool,
}

impl PipelineOutcome {
    pub fn within_bound(&self) -> bool {
        (self.certified_width as i64) <= self.bound
    }
}

/// Composes the dual (or face-subdivision) construction with `input`, a decomposition of
/// `g` of the kind the theorem expects, adds the apex set to every bag, verifies the result
/// and reports its width against the bound.
pub fn theorem_pipeline(
    g: &EmbeddedGraph,
    which: Theorem,
    input: &Decomposition,
    mode: TreeMode,
    options: TreeSearchOptions,
) -> Result<PipelineOutcome> {
    let kind_ok = match which {
        Theorem::HWidth => true,
        Theorem::Pathwidth | Theorem::FsPathwidth => input.kind == DecompositionKind::Path,
        Theorem::FsTreewidth => input.kind != DecompositionKind::General,
    };
    if !kind_ok {
        return Err(Error::Precondition(format!(
            "{} needs a {} decomposition as input",
            which.label(),
            if which == Theorem::FsTreewidth {
                "tree"
            } else {
                "path"
            }
        )));
    }
    let input = if which == Theorem::HWidth {
        input.as_general()
    } else {
        input.clone()
    };
    if let Some(v) = verify(&input, &g.graph()).violation {
        return Err(Error::Precondition(format!(
            "input decomposition is invalid: {v}"
        )));
    }
    let (reduced, apex, target, surface) = if which.targets_subdivision() {
        let fs = fs_decomposition(g, mode, options)?;
        (fs.reduced, fs.apex, g.radial_union()?, fs.dual.surface)
    } else {
        let dd = dual_decomposition(g, mode, options)?;
        (dd.reduced, dd.apex, g.dual()?.graph.graph(), dd.surface)
    };
    let composed = compose(&reduced, &input)?;
    let decomposition = augment_verified(&composed, &apex, &target)?;
    let input_width = input.width()?;
    let certified_width = decomposition.width()?;
    let (bound, published_row) = theorem_bound(which, surface.chi, input_width, mode);
    Ok(PipelineOutcome {
        theorem: which,
        mode,
        surface,
        input_width,
        apex_size: apex.len(),
        decomposition,
        certified_width,
        bound,
        published_row,
    })
}
