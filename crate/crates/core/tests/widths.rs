use proptest::prelude::*;
use surfwidth::decomposition::verify;
use surfwidth::generators::{self, Platonic};
use surfwidth::widths::{
    certificate_for_order, decomposition_from_certificate, pathwidth_exact, pathwidth_oracle,
    treewidth_exact, treewidth_oracle, WidthKind,
};
use surfwidth::{Error, Graph};

/// Graph on `n` vertices whose edges are the set bits of `mask` over the pairs `i < j`.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            bit += 1;
        }
    }
    g
}

#[test]
fn fixed_values() {
    let cube = generators::platonic(Platonic::Cube).graph();
    assert_eq!(pathwidth_exact(&Graph::path(5)).unwrap().value, 1);
    assert_eq!(pathwidth_exact(&Graph::complete(4)).unwrap().value, 3);
    assert_eq!(pathwidth_exact(&cube).unwrap().value, 4);
    assert_eq!(treewidth_exact(&cube).unwrap().value, 3);
    assert_eq!(pathwidth_oracle(&Graph::cycle(5)).unwrap(), 2);
    let prism = generators::prism(3).unwrap().graph();
    assert_eq!(
        pathwidth_oracle(&prism).unwrap(),
        pathwidth_exact(&prism).unwrap().value
    );
}

#[test]
fn trees_have_treewidth_one() {
    for g in [Graph::star(6), Graph::path(9)] {
        assert_eq!(treewidth_exact(&g).unwrap().value, 1);
    }
    let mut t = Graph::new(7);
    for (u, v) in [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)] {
        t.add_edge(u, v).unwrap();
    }
    assert_eq!(treewidth_exact(&t).unwrap().value, 1);
    assert_eq!(pathwidth_exact(&t).unwrap().value, 1);
}

#[test]
fn certificates_of_the_corpus_convert() {
    for inst in generators::corpus() {
        let g = inst.embedding.graph();
        if g.vertex_count() > 16 {
            continue;
        }
        for c in [pathwidth_exact(&g).unwrap(), treewidth_exact(&g).unwrap()] {
            let d = decomposition_from_certificate(&c, &g).unwrap();
            assert!(verify(&d, &g).is_valid(), "{} {:?}", inst.name, c.kind);
            assert_eq!(d.width().unwrap(), c.value, "{}", inst.name);
        }
    }
}

#[test]
fn witness_is_lexicographically_first_optimum() {
    // Every order of K4 is optimal; the witness must be the identity.
    assert_eq!(
        pathwidth_exact(&Graph::complete(4)).unwrap().order,
        vec![0, 1, 2, 3]
    );
    assert_eq!(
        treewidth_exact(&Graph::complete(4)).unwrap().order,
        vec![0, 1, 2, 3]
    );
}

#[test]
fn certificate_errors() {
    let g = Graph::cycle(5);
    assert!(matches!(
        certificate_for_order(&g, WidthKind::Pathwidth, vec![0, 1, 2]),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        certificate_for_order(&g, WidthKind::Pathwidth, vec![0, 1, 2, 3, 3]),
        Err(Error::Argument(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dp_matches_oracles(n in 1usize..=7, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let pw = pathwidth_exact(&g).unwrap();
        let tw = treewidth_exact(&g).unwrap();
        prop_assert_eq!(pw.value, pathwidth_oracle(&g).unwrap());
        prop_assert_eq!(tw.value, treewidth_oracle(&g).unwrap());
        prop_assert!(tw.value <= pw.value);
    }

    #[test]
    fn witnesses_verify_with_exact_width(n in 1usize..=10, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        for c in [pathwidth_exact(&g).unwrap(), treewidth_exact(&g).unwrap()] {
            let d = decomposition_from_certificate(&c, &g).unwrap();
            prop_assert!(verify(&d, &g).is_valid());
            prop_assert_eq!(d.width().unwrap(), c.value);
        }
    }

    #[test]
    fn widths_are_relabelling_invariant(n in 2usize..=9, mask in any::<u64>(), seed in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(pathwidth_exact(&g).unwrap().value, pathwidth_exact(&h).unwrap().value);
        prop_assert_eq!(treewidth_exact(&g).unwrap().value, treewidth_exact(&h).unwrap().value);
    }

    #[test]
    fn any_order_bounds_the_optimum(n in 1usize..=9, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let order: Vec<usize> = (0..n).rev().collect();
        let pw = certificate_for_order(&g, WidthKind::Pathwidth, order.clone()).unwrap();
        let tw = certificate_for_order(&g, WidthKind::Treewidth, order).unwrap();
        prop_assert!(pathwidth_exact(&g).unwrap().value <= pw.value);
        prop_assert!(treewidth_exact(&g).unwrap().value <= tw.value);
        let d = decomposition_from_certificate(&tw, &g).unwrap();
        prop_assert!(verify(&d, &g).is_valid());
    }
}
