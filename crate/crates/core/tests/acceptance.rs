//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the libtest harness so
//! the lines always reach the output; exits non-zero if any criterion fails.
//!
//! Values checked against the library are recomputed here from first principles where the
//! library would otherwise be checking itself (face incidences, bag sizes, excesses, edge
//! coverage).

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfwidth::assignment;
use surfwidth::decomposition::{
    apex_bound, compose, dual_decomposition, fs_decomposition, theorem_pipeline, verify,
    Decomposition, DecompositionKind, Theorem, TreeMode, Violation,
};
use surfwidth::generators::{self, Instance, Platonic};
use surfwidth::graph::are_isomorphic;
use surfwidth::io;
use surfwidth::spanning::{self, TreeSearchOptions};
use surfwidth::widths::{self, WidthKind};
use surfwidth::{EmbeddedGraph, Graph};

/// Time limits, pinned.
const FACT_SUITE_LIMIT: Duration = Duration::from_secs(5);
const PATHWIDTH_SUITE_LIMIT: Duration = Duration::from_secs(300);
const COMPOSITION_TRIALS: usize = 200;
const COMPOSITION_SEED: u64 = 0x5eed_0001;
const MUTATION_SEED: u64 = 0x5eed_0002;
const WIDTH_LIMIT: usize = 22;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn options() -> TreeSearchOptions {
    TreeSearchOptions::default()
}

fn dual_graph(g: &EmbeddedGraph) -> Graph {
    g.dual().unwrap().graph.graph()
}

/// `Σ_v max(d(v) - k, 0)` from an edge list.
fn excess(n: usize, edges: impl Iterator<Item = (usize, usize)>, k: usize) -> usize {
    let mut deg = vec![0usize; n];
    for (u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().map(|d| d.saturating_sub(k)).sum()
}

/// The residual graph recomputed from tau: every edge id not in its image.
fn residual_ids(g: &EmbeddedGraph, tau: &[usize]) -> BTreeSet<usize> {
    let image: BTreeSet<usize> = tau.iter().copied().collect();
    (0..g.edge_count()).filter(|e| !image.contains(e)).collect()
}

fn tau_vec(a: &assignment::EdgeAssignment) -> Vec<usize> {
    a.iter().map(|(_, e)| e).collect()
}

/// Faces through `v` whose assigned edge misses `v`, from face vertex lists.
fn faces_avoiding(g: &EmbeddedGraph, tau: &[usize], v: usize) -> BTreeSet<usize> {
    g.face_vertices()
        .iter()
        .enumerate()
        .filter(|(f, vs)| {
            let e = g.edge(tau[*f]);
            vs.contains(&v) && e.u != v && e.v != v
        })
        .map(|(f, _)| f)
        .collect()
}

fn chi_offset(chi: i64, sphere_like: i64, torus: i64, negative: impl Fn(i64) -> i64) -> i64 {
    match chi {
        1 | 2 => sphere_like,
        0 => torus,
        c => negative(c),
    }
}

fn criterion_1(corpus: &[Instance]) -> Check {
    let start = Instant::now();
    for inst in corpus {
        let g = &inst.embedding;
        let d = g.dual().map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(d.graph.is_polyhedral(), || {
            format!("{}: dual not polyhedral", inst.name)
        })?;
        ensure(d.graph.surface() == g.surface(), || {
            format!("{}: surface changed", inst.name)
        })?;
        let dd = d.graph.dual().map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(are_isomorphic(&dd.graph.graph(), &g.graph()), || {
            format!("{}: dual of dual not isomorphic", inst.name)
        })?;
        ensure(dd.graph.surface() == g.surface(), || {
            format!("{}: surface changed twice", inst.name)
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < FACT_SUITE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} instances in {:.2?} (limit {FACT_SUITE_LIMIT:?})",
        corpus.len(),
        elapsed
    ))
}

fn criterion_2(corpus: &[Instance]) -> Check {
    let (mut sphere, mut other) = (0, 0);
    for inst in corpus {
        let g = &inst.embedding;
        let chi = g.surface().chi;
        let tree = spanning::find_low_excess_tree(g, 3, (-2 * chi - 1).max(0) as usize, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        let c =
            assignment::construct_from_tree(g, &tree).map_err(|e| format!("{}: {e}", inst.name))?;
        let h = residual_ids(g, &tau_vec(&c.tau));
        let t: BTreeSet<usize> = c.avoided.edge_ids().collect();
        if chi == 2 {
            ensure(
                t.len() + 1 == tree.edge_count() && t.is_subset(&tree.edge_ids().collect()),
                || {
                    format!(
                        "{}: avoided forest is not the tree minus one edge",
                        inst.name
                    )
                },
            )?;
            ensure(h == t, || {
                format!("{}: residual differs from the avoided forest", inst.name)
            })?;
            sphere += 1;
        } else {
            ensure(t.is_subset(&h), || {
                format!("{}: tree not inside the residual graph", inst.name)
            })?;
            ensure(h.len() as i64 == t.len() as i64 - chi + 1, || {
                format!(
                    "{}: |E(H)| = {}, |E(T)| = {}, chi = {chi}",
                    inst.name,
                    h.len(),
                    t.len()
                )
            })?;
            other += 1;
        }
    }
    Ok(format!(
        "{sphere} sphere instances with H = T, {other} others with |E(H)| = |E(T)| - chi + 1"
    ))
}

fn criterion_3(corpus: &[Instance]) -> Check {
    let mut vertices = 0;
    for inst in corpus {
        let g = &inst.embedding;
        let dd = dual_decomposition(g, TreeMode::Tree3, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        let tau = tau_vec(dd.tau());
        let h = residual_ids(g, &tau);
        for v in 0..g.vertex_count() {
            let oracle = faces_avoiding(g, &tau, v);
            let degree = h
                .iter()
                .filter(|&&e| g.edge(e).u == v || g.edge(e).v == v)
                .count();
            ensure(dd.bags.bags[v] == oracle, || {
                format!("{}: bag of {v} differs", inst.name)
            })?;
            ensure(oracle.len() == degree, || {
                format!(
                    "{}: vertex {v} has {} faces, residual degree {degree}",
                    inst.name,
                    oracle.len()
                )
            })?;
            vertices += 1;
        }
    }
    Ok(format!(
        "{vertices} vertices, |bag| = residual degree everywhere"
    ))
}

fn criterion_4(corpus: &[Instance]) -> Check {
    let mut negative = 0;
    for inst in corpus {
        let g = &inst.embedding;
        let chi = g.surface().chi;
        let dd = dual_decomposition(g, TreeMode::Tree3, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        let s = dd.apex.len() as i64;
        let limit = chi_offset(chi, 0, 2, |c| -4 * c + 1);
        ensure(s <= limit, || format!("{}: |S| = {s} > {limit}", inst.name))?;
        let max_bag = dd
            .bags
            .bags
            .iter()
            .map(|b| b.difference(&dd.apex.0).count())
            .max()
            .unwrap();
        ensure(max_bag <= 3, || {
            format!("{}: bag of size {max_bag} after apex removal", inst.name)
        })?;
        let tau = tau_vec(dd.tau());
        let h = residual_ids(g, &tau);
        let te_h = excess(
            g.vertex_count(),
            h.iter().map(|&e| g.edge(e).endpoints()),
            3,
        );
        let t: Vec<usize> = dd.construction.avoided.edge_ids().collect();
        let te_t = excess(
            g.vertex_count(),
            t.iter().map(|&e| g.edge(e).endpoints()),
            3,
        );
        ensure(s as usize <= te_h, || {
            format!("{}: |S| = {s} > te(H) = {te_h}", inst.name)
        })?;
        let chain = te_t as i64 + 2 * (h.len() as i64 - t.len() as i64);
        ensure(te_h as i64 <= chain, || {
            format!("{}: te(H) = {te_h} > {chain}", inst.name)
        })?;
        ensure(te_t as i64 <= (-2 * chi - 1).max(0), || {
            format!("{}: tree excess {te_t}", inst.name)
        })?;
        if chi < 0 {
            negative += 1;
        }
    }
    ensure(negative > 0, || {
        "no negative Euler characteristic instance".into()
    })?;
    Ok(format!(
        "{} instances ({negative} with chi < 0), bags <= 3, |S| and excess chain hold",
        corpus.len()
    ))
}

fn criterion_5(corpus: &[Instance]) -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for inst in corpus {
        let g = &inst.embedding;
        let graph = g.graph();
        let dual = dual_graph(g);
        if graph.vertex_count() > WIDTH_LIMIT || dual.vertex_count() > WIDTH_LIMIT {
            continue;
        }
        let chi = g.surface().chi;
        let pw_g =
            widths::pathwidth_exact_with_limit(&graph, WIDTH_LIMIT).map_err(|e| e.to_string())?;
        let pw_d =
            widths::pathwidth_exact_with_limit(&dual, WIDTH_LIMIT).map_err(|e| e.to_string())?;
        let p = pw_g.value as i64;
        let bound = 3 * p + chi_offset(chi, 2, 4, |c| -4 * c + 3);
        ensure(pw_d.value as i64 <= bound, || {
            format!("{}: pw(G*) = {} > {bound}", inst.name, pw_d.value)
        })?;
        let input =
            widths::decomposition_from_certificate(&pw_g, &graph).map_err(|e| e.to_string())?;
        let out = theorem_pipeline(g, Theorem::Pathwidth, &input, TreeMode::Tree3, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(out.bound == bound, || {
            format!("{}: pipeline bound {} != {bound}", inst.name, out.bound)
        })?;
        let d = &out.decomposition;
        ensure(
            d.kind == DecompositionKind::Path && verify(d, &dual).is_valid(),
            || format!("{}: certified decomposition does not verify", inst.name),
        )?;
        let width = d.bags.iter().map(BTreeSet::len).max().unwrap() as i64 - 1;
        ensure(width <= bound, || {
            format!("{}: certified width {width} > {bound}", inst.name)
        })?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < PATHWIDTH_SUITE_LIMIT, || {
        format!("took {elapsed:?}")
    })?;
    ensure(checked >= 20, || {
        format!("only {checked} instances within the size limit")
    })?;
    Ok(format!(
        "{checked} instances, exact pw(G*) and certified width within bound, {elapsed:.2?}"
    ))
}

fn criterion_6(corpus: &[Instance]) -> Check {
    let mut checked = Vec::new();
    for inst in corpus {
        let g = &inst.embedding;
        let sub = g.face_subdivision().map_err(|e| e.to_string())?;
        let radial = g.radial_union().map_err(|e| e.to_string())?;
        let chi = g.surface().chi;
        let fs = fs_decomposition(g, TreeMode::Tree3, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        let max = fs
            .bags
            .bags
            .iter()
            .map(|b| b.difference(&fs.apex.0).count())
            .max()
            .unwrap();
        ensure(max <= 4, || {
            format!("{}: radial bag of size {max}", inst.name)
        })?;
        ensure(verify(&fs.bags, &radial).is_valid(), || {
            format!("{}: radial bags fail", inst.name)
        })?;
        ensure(verify(&fs.reduced, &radial).is_valid(), || {
            format!("{}: reduced radial bags fail", inst.name)
        })?;
        if sub.vertex_count() > WIDTH_LIMIT {
            continue;
        }
        let graph = g.graph();
        for kind in [WidthKind::Treewidth, WidthKind::Pathwidth] {
            let (cert, exact_fs, which) = match kind {
                WidthKind::Treewidth => (
                    widths::treewidth_exact_with_limit(&graph, WIDTH_LIMIT),
                    widths::treewidth_exact_with_limit(&sub, WIDTH_LIMIT),
                    Theorem::FsTreewidth,
                ),
                WidthKind::Pathwidth => (
                    widths::pathwidth_exact_with_limit(&graph, WIDTH_LIMIT),
                    widths::pathwidth_exact_with_limit(&sub, WIDTH_LIMIT),
                    Theorem::FsPathwidth,
                ),
            };
            let cert = cert.map_err(|e| e.to_string())?;
            let exact_fs = exact_fs.map_err(|e| e.to_string())?.value as i64;
            let bound = 4 * cert.value as i64 + chi_offset(chi, 3, 5, |c| -4 * c + 4);
            ensure(exact_fs <= bound, || {
                format!(
                    "{}: {} of G^fs = {exact_fs} > {bound}",
                    inst.name,
                    kind.name()
                )
            })?;
            let input =
                widths::decomposition_from_certificate(&cert, &graph).map_err(|e| e.to_string())?;
            let out = theorem_pipeline(g, which, &input, TreeMode::Tree3, options())
                .map_err(|e| format!("{}: {e}", inst.name))?;
            ensure(
                out.bound == bound && (out.certified_width as i64) <= bound,
                || {
                    format!(
                        "{}: certified {} vs bound {bound}",
                        inst.name, out.certified_width
                    )
                },
            )?;
            ensure(verify(&out.decomposition, &sub).is_valid(), || {
                format!("{}: certified decomposition fails on G^fs", inst.name)
            })?;
        }
        checked.push(inst.name.clone());
    }
    ensure(
        checked.iter().any(|n| n == "tetrahedron") && checked.iter().any(|n| n == "prism(3)"),
        || format!("exact instances: {checked:?}"),
    )?;
    Ok(format!(
        "radial bags <= 4 on all, exact tw/pw of G^fs on {}",
        checked.join(", ")
    ))
}

/// Decompositions of `g` used as the second factor.
fn random_decomposition(g: &Graph, rng: &mut ChaCha8Rng) -> Decomposition {
    match rng.gen_range(0..4) {
        0 => Decomposition::identity(g),
        1 | 2 => {
            let mut order: Vec<usize> = (0..g.vertex_count()).collect();
            order.shuffle(rng);
            let kind = if rng.gen_bool(0.5) {
                WidthKind::Pathwidth
            } else {
                WidthKind::Treewidth
            };
            let c = widths::certificate_for_order(g, kind, order).unwrap();
            widths::decomposition_from_certificate(&c, g).unwrap()
        }
        _ => {
            // Arbitrary host: each vertex in its own bag plus random extra vertices.
            let mut d = Decomposition::identity(g);
            for bag in &mut d.bags {
                for _ in 0..rng.gen_range(0..3) {
                    bag.insert(rng.gen_range(0..g.vertex_count()));
                }
            }
            if verify(&d, g).is_valid() {
                d
            } else {
                Decomposition::identity(g)
            }
        }
    }
}

/// (D1), (D2)/(D2') and (D3) from scratch.
fn oracle_violations(d: &Decomposition, target: &Graph) -> BTreeSet<&'static str> {
    let mut out = BTreeSet::new();
    let support = |v: usize| -> Vec<usize> {
        (0..d.bags.len())
            .filter(|&h| d.bags[h].contains(&v))
            .collect()
    };
    let present = |v: usize| !d.removed.contains(&v);
    for v in (0..target.vertex_count()).filter(|&v| present(v)) {
        let s = support(v);
        if s.is_empty() {
            out.insert("D1");
            continue;
        }
        // Connectivity of the support by repeated relaxation.
        let mut reached = vec![s[0]];
        let mut changed = true;
        while changed {
            changed = false;
            for &h in &s {
                if !reached.contains(&h) && reached.iter().any(|&r| d.host.has_edge(r, h)) {
                    reached.push(h);
                    changed = true;
                }
            }
        }
        if reached.len() != s.len() {
            out.insert("D3");
        }
    }
    for (u, v) in target
        .edges()
        .into_iter()
        .filter(|&(u, v)| present(u) && present(v))
    {
        let (su, sv) = (support(u), support(v));
        let shared = su.iter().any(|h| sv.contains(h));
        let across = su
            .iter()
            .any(|&a| sv.iter().any(|&b| d.host.has_edge(a, b)));
        match d.kind {
            DecompositionKind::General if !shared && !across => {
                out.insert("D2");
            }
            DecompositionKind::Tree | DecompositionKind::Path if !shared => {
                out.insert("D2'");
            }
            _ => {}
        }
    }
    out
}

fn criterion_7(corpus: &[Instance]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(COMPOSITION_SEED);
    let mut kinds = [0usize; 3];
    for trial in 0..COMPOSITION_TRIALS {
        let inst = corpus.choose(&mut rng).unwrap();
        let g = &inst.embedding;
        let use_fs = rng.gen_bool(0.5);
        let (first, target) = if use_fs {
            let fs = fs_decomposition(g, TreeMode::Tree3, options()).unwrap();
            (fs.bags, g.radial_union().unwrap())
        } else {
            let dd = dual_decomposition(g, TreeMode::Tree3, options()).unwrap();
            (dd.bags, dual_graph(g))
        };
        let second = random_decomposition(&g.graph(), &mut rng);
        let composed = compose(&first, &second).map_err(|e| format!("trial {trial}: {e}"))?;
        let oracle = oracle_violations(&composed, &target);
        ensure(
            oracle.is_empty() && verify(&composed, &target).is_valid(),
            || {
                format!(
                    "trial {trial} ({}): composed decomposition fails {oracle:?}",
                    inst.name
                )
            },
        )?;
        let product = first.max_bag_size() * second.max_bag_size();
        let max = composed.bags.iter().map(BTreeSet::len).max().unwrap();
        ensure(max <= product, || {
            format!("trial {trial}: bag {max} > {product}")
        })?;
        ensure(composed.kind == second.kind, || {
            format!("trial {trial}: kind changed")
        })?;
        kinds[second.kind as usize] += 1;
    }
    ensure(kinds.iter().all(|&k| k > 0), || {
        format!("kinds exercised: {kinds:?}")
    })?;
    Ok(format!(
        "{COMPOSITION_TRIALS} trials (seed {COMPOSITION_SEED:#x}): general {}, tree {}, path {}",
        kinds[0], kinds[1], kinds[2]
    ))
}

fn criterion_8() -> Check {
    let mut graphs: Vec<(String, Graph)> = vec![
        (
            "tetrahedron".into(),
            generators::platonic(Platonic::Tetrahedron).graph(),
        ),
        ("prism(3)".into(), generators::prism(3).unwrap().graph()),
        ("cube".into(), generators::platonic(Platonic::Cube).graph()),
        (
            "octahedron".into(),
            generators::platonic(Platonic::Octahedron).graph(),
        ),
        ("k6-projective".into(), generators::k6_projective().graph()),
        ("k7-torus".into(), generators::k7_torus().graph()),
        ("K4".into(), Graph::complete(4)),
    ];
    for n in 3..=9 {
        graphs.push((format!("C{n}"), Graph::cycle(n)));
    }
    for leaves in 1..=8 {
        graphs.push((format!("star({leaves})"), Graph::star(leaves)));
    }
    for (name, g) in &graphs {
        let exact = widths::pathwidth_exact(g).map_err(|e| e.to_string())?.value;
        let oracle = widths::pathwidth_oracle(g).map_err(|e| e.to_string())?;
        ensure(exact == oracle, || {
            format!("{name}: exact {exact} vs oracle {oracle}")
        })?;
    }
    let q3 = generators::platonic(Platonic::Cube).graph();
    let fixed = [
        (
            "pw(K4)",
            widths::pathwidth_exact(&Graph::complete(4)).unwrap().value,
            3,
        ),
        (
            "pw(P5)",
            widths::pathwidth_exact(&Graph::path(5)).unwrap().value,
            1,
        ),
        (
            "pw(C5)",
            widths::pathwidth_exact(&Graph::cycle(5)).unwrap().value,
            2,
        ),
        ("pw(Q3)", widths::pathwidth_exact(&q3).unwrap().value, 4),
        ("tw(Q3)", widths::treewidth_exact(&q3).unwrap().value, 3),
        ("tw(Q3) oracle", widths::treewidth_oracle(&q3).unwrap(), 3),
    ];
    for (label, got, want) in fixed {
        ensure(got == want, || format!("{label} = {got}, expected {want}"))?;
    }
    Ok(format!(
        "{} graphs agree with the exhaustive oracle; 6 fixed values reproduced",
        graphs.len()
    ))
}

fn criterion_9(corpus: &[Instance]) -> Check {
    let mut names = Vec::new();
    for inst in corpus {
        if !(inst.name == "tetrahedron" || inst.name == "cube" || inst.name.starts_with("prism")) {
            continue;
        }
        let g = &inst.embedding;
        let graph = g.graph();
        let path = spanning::hamiltonian_path(&graph, options()).map_err(|e| e.to_string())?;
        let path = path.ok_or_else(|| format!("{}: no Hamiltonian path found", inst.name))?;
        ensure(path.windows(2).all(|w| graph.has_edge(w[0], w[1])), || {
            format!("{}: bad path", inst.name)
        })?;
        let dd = dual_decomposition(g, TreeMode::HamPath, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        let max = dd
            .bags
            .bags
            .iter()
            .map(|b| b.difference(&dd.apex.0).count())
            .max()
            .unwrap();
        ensure(max <= 2, || {
            format!("{}: bag {max} after apex removal", inst.name)
        })?;
        ensure(
            dd.apex.len() <= apex_bound(g.surface().chi, TreeMode::HamPath),
            || format!("{}: apex set {}", inst.name, dd.apex.len()),
        )?;
        let pw = widths::pathwidth_exact(&graph).map_err(|e| e.to_string())?;
        let input =
            widths::decomposition_from_certificate(&pw, &graph).map_err(|e| e.to_string())?;
        let out = theorem_pipeline(g, Theorem::Pathwidth, &input, TreeMode::HamPath, options())
            .map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(
            verify(&out.decomposition, &dual_graph(g)).is_valid(),
            || format!("{}: composed decomposition fails", inst.name),
        )?;
        let bound = 2 * pw.value + 3;
        ensure(out.certified_width <= bound, || {
            format!("{}: width {} > {bound}", inst.name, out.certified_width)
        })?;
        names.push(format!(
            "{} ({} <= {bound})",
            inst.name, out.certified_width
        ));
    }
    ensure(names.len() == 8, || format!("instances: {names:?}"))?;
    Ok(names.join(", "))
}

fn remove_one(d: &Decomposition, rng: &mut ChaCha8Rng) -> Option<Decomposition> {
    let nonempty: Vec<usize> = (0..d.bags.len())
        .filter(|&h| !d.bags[h].is_empty())
        .collect();
    let &h = nonempty.choose(rng)?;
    let v = *d.bags[h].iter().collect::<Vec<_>>().choose(rng)?;
    let mut out = d.clone();
    out.bags[h].remove(v);
    Some(out)
}

fn add_one(d: &Decomposition, n: usize, rng: &mut ChaCha8Rng) -> Decomposition {
    let mut out = d.clone();
    let h = rng.gen_range(0..d.bags.len());
    out.bags[h].insert(rng.gen_range(0..n));
    out
}

fn strip_vertex(d: &Decomposition, v: usize) -> Decomposition {
    let mut out = d.clone();
    for bag in &mut out.bags {
        bag.remove(&v);
    }
    out
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(MUTATION_SEED);
    let mut named: BTreeSet<&'static str> = BTreeSet::new();
    let mut rejected = 0;
    let cube = generators::platonic(Platonic::Cube);
    let torus = generators::toroidal_grid(3, 3).unwrap();
    let mut sources: Vec<(Decomposition, Graph)> = Vec::new();
    for g in [&cube, &torus] {
        let dd = dual_decomposition(g, TreeMode::Tree3, options()).unwrap();
        sources.push((dd.bags.clone(), dual_graph(g)));
        let graph = g.graph();
        for kind in [WidthKind::Pathwidth, WidthKind::Treewidth] {
            let mut order: Vec<usize> = (0..graph.vertex_count()).collect();
            order.shuffle(&mut rng);
            let c = widths::certificate_for_order(&graph, kind, order).unwrap();
            sources.push((
                widths::decomposition_from_certificate(&c, &graph).unwrap(),
                graph.clone(),
            ));
        }
    }
    for (d, target) in &sources {
        let text = io::write_dec(d);
        let parsed = io::parse_dec(&text).map_err(|e| e.to_string())?;
        ensure(verify(&parsed, target).is_valid(), || {
            "source decomposition invalid".into()
        })?;
        let n = target.vertex_count();
        for round in 0..60 {
            let mutated = match round % 3 {
                0 => remove_one(&parsed, &mut rng).unwrap(),
                1 => add_one(&parsed, n, &mut rng),
                _ => strip_vertex(&parsed, rng.gen_range(0..n)),
            };
            let mutated = io::parse_dec(&io::write_dec(&mutated)).map_err(|e| e.to_string())?;
            let oracle = oracle_violations(&mutated, target);
            match verify(&mutated, target).violation {
                None => ensure(oracle.is_empty(), || {
                    format!("missed violations {oracle:?}")
                })?,
                Some(v) => {
                    let cond = match v {
                        Violation::D1 { .. } => "D1",
                        Violation::D2 { .. } => "D2",
                        Violation::D2Prime { .. } => "D2'",
                        Violation::D3 { .. } => "D3",
                        other => return Err(format!("unexpected verdict {other}")),
                    };
                    ensure(oracle.contains(cond), || {
                        format!("named {cond}, oracle found {oracle:?}")
                    })?;
                    named.insert(cond);
                    rejected += 1;
                }
            }
        }
    }
    ensure(named.len() == 4, || format!("conditions named: {named:?}"))?;
    Ok(format!(
        "{rejected} mutations rejected (seed {MUTATION_SEED:#x}), named {named:?}"
    ))
}

fn main() -> ExitCode {
    let corpus = generators::corpus();
    let criteria: Vec<Criterion> = vec![
        (
            "duality facts on the corpus",
            Box::new(|| criterion_1(&corpus)),
        ),
        (
            "residual graph identities",
            Box::new(|| criterion_2(&corpus)),
        ),
        (
            "bag size equals residual degree",
            Box::new(|| criterion_3(&corpus)),
        ),
        (
            "apex set and bag bounds (tree mode)",
            Box::new(|| criterion_4(&corpus)),
        ),
        (
            "pathwidth of the dual, end to end",
            Box::new(|| criterion_5(&corpus)),
        ),
        (
            "face subdivision widths, end to end",
            Box::new(|| criterion_6(&corpus)),
        ),
        ("randomized compositions", Box::new(|| criterion_7(&corpus))),
        ("exact widths against oracles", Box::new(criterion_8)),
        ("Hamiltonian path mode", Box::new(|| criterion_9(&corpus))),
        ("mutation sensitivity", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {:>2}: PASS  {label}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {label}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
