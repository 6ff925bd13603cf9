//! Exact pathwidth and treewidth by dynamic programming over vertex subsets.
//!
//! Pathwidth is computed as the vertex separation number. Treewidth is the minimum over
//! elimination orders of the largest back-degree, with `Q(S, v)` (the vertices outside
//! `S ∪ {v}` reachable from `v` through `S`) standing in for the fill-in neighbourhood.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::decomposition::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_VERTEX_LIMIT: usize = 22;
pub const ORACLE_VERTEX_LIMIT: usize = 9;
pub const LIMIT_ENV: &str = "SURFWIDTH_LIMIT";

/// Vertex limit for the subset solvers: `SURFWIDTH_LIMIT` if set and valid, else 22.
/// Capped at 30 so the DP table stays addressable.
pub fn vertex_limit() -> usize {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_VERTEX_LIMIT, |l| l.min(30))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WidthKind {
    Pathwidth,
    Treewidth,
}

impl WidthKind {
    pub fn name(self) -> &'static str {
        match self {
            WidthKind::Pathwidth => "pathwidth",
            WidthKind::Treewidth => "treewidth",
        }
    }
}

/// A vertex order together with the width it attains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthCertificate {
    pub kind: WidthKind,
    pub order: Vec<usize>,
    pub value: usize,
}

impl WidthCertificate {
    /// Recomputes the width `order` attains on `g`; errors if `order` is not a permutation
    /// of `g`'s vertices.
    pub fn evaluate(&self, g: &Graph) -> Result<usize> {
        check_permutation(&self.order, g.vertex_count())?;
        if g.vertex_count() > 64 {
            return Err(Error::ResourceExhausted(
                "certificates cover at most 64 vertices".into(),
            ));
        }
        let masks = g.adjacency_masks();
        Ok(match self.kind {
            WidthKind::Pathwidth => separation_of_order(&masks, &self.order),
            WidthKind::Treewidth => elimination_width_of_order(&masks, &self.order),
        })
    }
}

/// The width `order` attains on `g`, packaged as a certificate (not necessarily optimal).
pub fn certificate_for_order(
    g: &Graph,
    kind: WidthKind,
    order: Vec<usize>,
) -> Result<WidthCertificate> {
    let mut c = WidthCertificate {
        kind,
        order,
        value: 0,
    };
    c.value = c.evaluate(g)?;
    Ok(c)
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if order.len() != n || distinct.len() != n || distinct.iter().any(|&v| v >= n) {
        return Err(Error::Argument(format!(
            "certificate order is not a permutation of 0..{n}"
        )));
    }
    Ok(())
}

fn check_size(g: &Graph, limit: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::ResourceExhausted(format!(
            "{n} vertices exceed the solver limit of {limit} (set {LIMIT_ENV} to raise it)"
        )));
    }
    Ok(())
}

/// Prefix vertices with a neighbour outside the prefix.
fn boundary(masks: &[u64], set: u64) -> u32 {
    let mut count = 0;
    let mut rest = set;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[u] & !set != 0 {
            count += 1;
        }
    }
    count
}

/// Vertices outside `set ∪ {v}` reachable from `v` by paths whose interior lies in `set`.
fn eliminated_neighbourhood(masks: &[u64], set: u64, v: usize) -> u64 {
    let mut reached = 1u64 << v;
    let mut frontier = reached;
    let mut outside = 0u64;
    while frontier != 0 {
        let mut nb = 0u64;
        let mut rest = frontier;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nb |= masks[u];
        }
        outside |= nb & !set;
        frontier = nb & set & !reached;
        reached |= frontier;
    }
    outside & !(1u64 << v)
}

fn separation_of_order(masks: &[u64], order: &[usize]) -> usize {
    let mut set = 0u64;
    let mut best = 0;
    for &v in order {
        set |= 1 << v;
        best = best.max(boundary(masks, set) as usize);
    }
    best
}

fn elimination_width_of_order(masks: &[u64], order: &[usize]) -> usize {
    let mut set = 0u64;
    let mut best = 0;
    for &v in order {
        best = best.max(eliminated_neighbourhood(masks, set, v).count_ones() as usize);
        set |= 1 << v;
    }
    best
}

/// `cost(S, v)` is charged when `v` joins the prefix `S`; returns the optimal value and the
/// lexicographically smallest optimal order.
fn subset_dp(n: usize, cost: impl Fn(u64, usize) -> u32) -> (usize, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    let full: u64 = (1u64 << n) - 1;
    let mut best = vec![0u8; 1usize << n];
    for set in (0..full).rev() {
        let mut value = u8::MAX;
        let mut free = full & !set;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let next = set | (1 << v);
            let c = (cost(set, v) as u8).max(best[next as usize]);
            value = value.min(c);
        }
        best[set as usize] = value;
    }
    let mut order = Vec::with_capacity(n);
    let mut set = 0u64;
    while set != full {
        let target = best[set as usize];
        let v = (0..n)
            .find(|&v| {
                set & (1 << v) == 0 && {
                    let next = set | (1 << v);
                    (cost(set, v) as u8).max(best[next as usize]) == target
                }
            })
            .expect("an optimal move exists");
        order.push(v);
        set |= 1 << v;
    }
    (best[0] as usize, order)
}

pub fn pathwidth_exact(g: &Graph) -> Result<WidthCertificate> {
    pathwidth_exact_with_limit(g, vertex_limit())
}

pub fn pathwidth_exact_with_limit(g: &Graph, limit: usize) -> Result<WidthCertificate> {
    check_size(g, limit)?;
    let masks = g.adjacency_masks();
    let sizes: Vec<u8> = (0..1u64 << g.vertex_count())
        .map(|set| boundary(&masks, set) as u8)
        .collect();
    let (value, order) = subset_dp(g.vertex_count(), |set, v| {
        u32::from(sizes[(set | (1 << v)) as usize])
    });
    Ok(WidthCertificate {
        kind: WidthKind::Pathwidth,
        order,
        value,
    })
}

pub fn treewidth_exact(g: &Graph) -> Result<WidthCertificate> {
    treewidth_exact_with_limit(g, vertex_limit())
}

pub fn treewidth_exact_with_limit(g: &Graph, limit: usize) -> Result<WidthCertificate> {
    check_size(g, limit)?;
    let masks = g.adjacency_masks();
    let (value, order) = subset_dp(g.vertex_count(), |set, v| {
        eliminated_neighbourhood(&masks, set, v).count_ones()
    });
    Ok(WidthCertificate {
        kind: WidthKind::Treewidth,
        order,
        value,
    })
}

/// Vertex separation number by trying every order. Independent of the subset DP.
pub fn pathwidth_oracle(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(Error::ResourceExhausted(format!(
            "oracle handles at most {ORACLE_VERTEX_LIMIT} vertices, got {n}"
        )));
    }
    let best = (0..n)
        .permutations(n)
        .map(|order| {
            let mut placed = vec![false; n];
            let mut worst = 0;
            for &v in &order {
                placed[v] = true;
                let sep = (0..n)
                    .filter(|&u| placed[u] && g.neighbors(u).any(|w| !placed[w]))
                    .count();
                worst = worst.max(sep);
            }
            worst
        })
        .min()
        .unwrap_or(0);
    Ok(best)
}

/// Treewidth by trying every elimination order on an explicit fill-in graph.
pub fn treewidth_oracle(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(Error::ResourceExhausted(format!(
            "oracle handles at most {ORACLE_VERTEX_LIMIT} vertices, got {n}"
        )));
    }
    let best = (0..n)
        .permutations(n)
        .map(|order| {
            let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
            let mut worst = 0;
            for &v in &order {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                worst = worst.max(nb.len());
                for (&a, &b) in nb.iter().tuple_combinations() {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
                for &a in &nb {
                    adj[a].remove(&v);
                }
                adj[v].clear();
            }
            worst
        })
        .min()
        .unwrap_or(0);
    Ok(best)
}

/// Path decomposition (bag `i` = `{order[i]}` plus the boundary of the previous prefix) or
/// tree decomposition (bag of `v` = `v` plus its eliminated neighbourhood, attached to the
/// earliest-eliminated member of that neighbourhood).
pub fn decomposition_from_certificate(c: &WidthCertificate, g: &Graph) -> Result<Decomposition> {
    let value = c.evaluate(g)?;
    if value != c.value {
        return Err(Error::Argument(format!(
            "stale certificate: order attains {value} on this graph, certificate claims {}",
            c.value
        )));
    }
    let masks = g.adjacency_masks();
    let n = g.vertex_count();
    let to_set =
        |mask: u64| -> BTreeSet<usize> { (0..n).filter(|&v| mask & (1 << v) != 0).collect() };
    match c.kind {
        WidthKind::Pathwidth => {
            let mut set = 0u64;
            let mut bags = Vec::with_capacity(n);
            for &v in &c.order {
                let boundary_mask = (0..n)
                    .filter(|&u| set & (1 << u) != 0 && masks[u] & !set != 0)
                    .fold(0u64, |m, u| m | (1 << u));
                bags.push(to_set(boundary_mask | (1 << v)));
                set |= 1 << v;
            }
            Ok(Decomposition::path(bags))
        }
        WidthKind::Treewidth => {
            let mut position = vec![0; n];
            for (i, &v) in c.order.iter().enumerate() {
                position[v] = i;
            }
            let mut set = 0u64;
            let mut bags = Vec::with_capacity(n);
            let mut parent = vec![None; n];
            for (i, &v) in c.order.iter().enumerate() {
                let nb = eliminated_neighbourhood(&masks, set, v);
                bags.push(to_set(nb | (1 << v)));
                parent[i] = to_set(nb)
                    .into_iter()
                    .min_by_key(|&u| position[u])
                    .map(|u| position[u]);
                set |= 1 << v;
            }
            // Components of the order yield separate trees; chain their roots.
            let mut host = Graph::new(n);
            let mut previous_root = None;
            for (i, p) in parent.into_iter().enumerate() {
                match p {
                    Some(p) => {
                        host.add_edge(i, p)?;
                    }
                    None => {
                        if let Some(r) = previous_root {
                            host.add_edge(r, i)?;
                        }
                        previous_root = Some(i);
                    }
                }
            }
            Decomposition::new(DecompositionKind::Tree, host, bags)
        }
    }
}
