use lapco::canon::isomorphic;
use lapco::enumerate::enumerate_unicyclic;
use lapco::families::{build_bst, build_u, compose_cycle_trees, spider, FamilySpec, RootedTree};
use lapco::graph::{classify, Graph};
use lapco::poset::{compare, PosetRel};
use lapco::spectra::laplacian_coefficients;
use lapco::transforms::{
    balance_reduce, long_path_condition, path_shift, reduced_form, xi, TransformKind,
};
use proptest::prelude::*;

fn le(a: &Graph, b: &Graph) -> bool {
    compare(&laplacian_coefficients(a), &laplacian_coefficients(b))
        .unwrap()
        .is_le()
}

/// Tree hanging at cycle vertex `r`: children lists, not crossing the cycle.
fn hanging_children(g: &Graph, r: usize, on_cycle: &[bool]) -> Vec<Vec<usize>> {
    let mut children = vec![Vec::new(); g.order()];
    let mut seen = on_cycle.to_vec();
    let mut stack = vec![r];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                children[x].push(y);
                stack.push(y);
            }
        }
    }
    children
}

fn chain_len(children: &[Vec<usize>], mut x: usize) -> Option<usize> {
    let mut len = 1;
    while let [next] = children[x][..] {
        x = next;
        len += 1;
    }
    children[x].is_empty().then_some(len)
}

/// Every hanging tree has at most one branching vertex with balanced legs,
/// and at most one tree keeps that vertex off the cycle.
fn in_target_form(g: &Graph) -> bool {
    let report = classify(g);
    let mut on_cycle = vec![false; g.order()];
    for &c in &report.cycle_vertices {
        on_cycle[c] = true;
    }
    let mut off_cycle_centres = 0;
    for &r in &report.cycle_vertices {
        let children = hanging_children(g, r, &on_cycle);
        let branching: Vec<usize> = (0..g.order()).filter(|&v| children[v].len() >= 2).collect();
        match branching[..] {
            [] => {}
            [b] => {
                let legs: Option<Vec<usize>> = children[b]
                    .iter()
                    .map(|&c| chain_len(&children, c))
                    .collect();
                let Some(legs) = legs else { return false };
                if legs.iter().max().unwrap() - legs.iter().min().unwrap() > 1 {
                    return false;
                }
                if b != r {
                    off_cycle_centres += 1;
                }
            }
            _ => return false,
        }
    }
    off_cycle_centres <= 1
}

#[test]
fn xi_never_increases_under_long_path_condition() {
    let mut applied = 0;
    for n in 4..=9 {
        for m in enumerate_unicyclic(n, None, None).unwrap().members {
            let g = &m.graph;
            for &(a, b) in g.edges() {
                for (u, v) in [(a, b), (b, a)] {
                    let Ok(receipt) = xi(g, u, v) else { continue };
                    let after = &receipt.after;
                    assert_eq!(after.order(), g.order());
                    assert_eq!(after.size(), g.size());
                    assert_eq!(classify(after).leaf_count, m.leaves);
                    if long_path_condition(g, u, v).unwrap().holds() {
                        applied += 1;
                        assert!(le(after, g), "{:?} u={u} v={v}", g.edges());
                    }
                }
            }
        }
    }
    assert_eq!(applied, 283);
}

#[test]
fn xi_on_the_tail_edge() {
    let u1 = build_u(FamilySpec::new(10, 2, 3, 1)).unwrap();
    let u0 = build_u(FamilySpec::new(10, 2, 3, 0)).unwrap();
    let r = xi(&u1, 0, 3).unwrap();
    assert!(isomorphic(&r.after, &u0));
    assert_eq!(
        compare(
            &laplacian_coefficients(&r.after),
            &laplacian_coefficients(&u1)
        ),
        Ok(PosetRel::Incomparable)
    );
    // s = 1 < t = 3 here, so no inequality is promised
    assert!(!long_path_condition(&u1, 0, 3).unwrap().holds());
}

#[test]
fn reduction_reaches_target_form_below_input() {
    let mut reduced = 0;
    for n in 3..=10 {
        for m in enumerate_unicyclic(n, None, None).unwrap().members {
            let steps = balance_reduce(&m.graph).unwrap();
            let mut prev = m.graph.clone();
            for s in &steps {
                assert_eq!(s.before, prev);
                assert!(matches!(
                    s.kind,
                    TransformKind::Xi | TransformKind::PathShift
                ));
                assert_eq!(classify(&s.after).leaf_count, m.leaves);
                if s.kind == TransformKind::Xi {
                    let (u, v) = (s.touched[0], s.touched[1]);
                    assert!(long_path_condition(&s.before, u, v).unwrap().holds());
                }
                assert!(le(&s.after, &s.before));
                prev = s.after.clone();
            }
            assert!(
                in_target_form(&prev),
                "{:?} -> {:?}",
                m.graph.edges(),
                prev.edges()
            );
            assert!(balance_reduce(&prev).unwrap().is_empty());
            assert!(le(&prev, &m.graph));
            reduced += usize::from(!steps.is_empty());
        }
    }
    assert_eq!(reduced, 353);
}

#[test]
fn reduction_with_two_attachments() {
    // triangle; cycle vertex 0 carries a caterpillar, vertex 1 a pendant 3-spider
    let g = Graph::new(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (3, 4),
            (3, 5),
            (1, 6),
            (6, 7),
            (6, 8),
        ],
    )
    .unwrap();
    assert_eq!(classify(&g).leaf_count, 4);
    let after = reduced_form(&g).unwrap();
    assert!(in_target_form(&after));
    assert!(le(&after, &g));
    assert_eq!(classify(&after).leaf_count, 4);
}

#[test]
fn bst_shift_direction() {
    let b = build_bst(7, 2).unwrap();
    let legs = b.pendant_paths(0);
    let (p, q) = (legs[0].leaf, legs[1].leaf);
    let r = path_shift(&b, 0, p, q).unwrap();
    assert!(isomorphic(&r.after, &spider(&[4, 2])));
    assert!(le(&b, &r.after));
}

fn rooted_tree() -> impl Strategy<Value = RootedTree> {
    (1usize..=5)
        .prop_flat_map(|n| (1..n).map(|v| 0..v).collect::<Vec<_>>())
        .prop_map(|parents| {
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            RootedTree::new(Graph::new(parents.len() + 1, &edges).unwrap(), 0)
        })
}

proptest! {
    #[test]
    fn family_parameters_round_trip(g in 3usize..=6, l in 1usize..=4, p in 0usize..=3, extra in 0usize..=6) {
        let n = g + p + l + extra;
        let graph = build_u(FamilySpec::new(n, l, g, p)).unwrap();
        let r = classify(&graph);
        prop_assert_eq!(r.order, n);
        prop_assert!(r.is_unicyclic);
        prop_assert_eq!(r.girth, Some(g));
        prop_assert_eq!(r.leaf_count, l);
    }

    #[test]
    fn too_small_family_is_rejected(g in 3usize..=6, l in 1usize..=4, p in 0usize..=3) {
        prop_assert!(build_u(FamilySpec::new(g + p + l - 1, l, g, p)).is_err());
    }

    #[test]
    fn composition_is_unicyclic(trees in proptest::collection::vec(rooted_tree(), 3..=6)) {
        let g = trees.len();
        let graph = compose_cycle_trees(g, &trees).unwrap();
        let r = classify(&graph);
        prop_assert!(r.is_unicyclic);
        prop_assert_eq!(r.girth, Some(g));
        prop_assert_eq!(r.order, g + trees.iter().map(|t| t.order() - 1).sum::<usize>());
    }
}
