use lapco::enumerate::enumerate_unicyclic;
use lapco::families::{build_u, FamilySpec};
use lapco::forest::{coefficients_via_forests, forest_coefficient, spanning_tree_count};
use lapco::graph::{classify, Graph};
use lapco::poset::{compare, PosetRel};
use lapco::spectra::{laplacian_coefficients, laplacian_spectrum, lel, wiener_index};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Random connected graph: a random spanning tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
            let extra = proptest::collection::vec(proptest::bool::weighted(0.25), n * (n - 1) / 2);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            for ((a, b), keep) in pairs.zip(extra) {
                if keep && !edges.contains(&(a, b)) {
                    edges.push((a, b));
                }
            }
            Graph::new(n, &edges).unwrap()
        })
}

fn random_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| (1..n).map(|v| 0..v).collect::<Vec<_>>())
        .prop_map(|parents| {
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            Graph::new(parents.len() + 1, &edges).unwrap()
        })
}

/// Elementary symmetric polynomials e_0..e_m of `xs`.
fn elementary(xs: &[f64]) -> Vec<f64> {
    let mut e = vec![1.0];
    for &x in xs {
        e.push(0.0);
        for k in (1..e.len()).rev() {
            e[k] += e[k - 1] * x;
        }
    }
    e
}

fn check_sigma(g: &Graph) {
    let n = g.order();
    let c = laplacian_coefficients(g);
    let mu = laplacian_spectrum(g).mu;
    let e = elementary(&mu[..n - 1]);
    for k in 0..n {
        let exact: f64 = c.c[k].to_string().parse().unwrap();
        let rel = (e[k] - exact).abs() / exact.max(1.0);
        assert!(rel < 1e-6, "k = {k}: {} vs {exact}", e[k]);
    }
}

fn check_invariants(g: &Graph) {
    let n = g.order();
    let c = laplacian_coefficients(g);
    assert_eq!(c.c.len(), n + 1);
    assert_eq!(c.c[0], BigUint::from(1u32));
    assert_eq!(c.c[n], BigUint::from(0u32));
    assert_eq!(c.c[1], BigUint::from(2 * g.size()));
    assert_eq!(c.c[n - 1], BigUint::from(n) * spanning_tree_count(g));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forest_sums_agree_on_connected_graphs(g in connected_graph(8)) {
        prop_assert_eq!(coefficients_via_forests(&g).unwrap(), laplacian_coefficients(&g));
    }

    #[test]
    fn coefficient_identities(g in connected_graph(10)) {
        check_invariants(&g);
    }

    #[test]
    fn spectrum_symmetric_functions(g in connected_graph(10)) {
        check_sigma(&g);
    }

    #[test]
    fn wiener_matches_coefficient(t in random_tree(10)) {
        let n = t.order();
        prop_assert_eq!(
            laplacian_coefficients(&t).c[n - 2].clone(),
            BigUint::from(wiener_index(&t).unwrap())
        );
    }

    #[test]
    fn single_forest_coefficient_matches(g in connected_graph(7), k in 1usize..7) {
        let n = g.order();
        prop_assume!(k <= n);
        let sum = forest_coefficient(&g, k).unwrap();
        let c = laplacian_coefficients(&g);
        prop_assert_eq!(&sum.total, c.get(n - k));
    }
}

#[test]
fn sigma_on_all_small_unicyclic_graphs() {
    for n in 3..=10 {
        for m in enumerate_unicyclic(n, None, None).unwrap().members {
            check_sigma(&m.graph);
            check_invariants(&m.graph);
        }
    }
}

#[test]
fn energy_is_monotone_on_strict_pairs() {
    let mut pairs = 0;
    for n in 3..=8 {
        let members = enumerate_unicyclic(n, None, None).unwrap().members;
        let energy: Vec<f64> = members.iter().map(|m| lel(&m.graph)).collect();
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                if compare(&a.coeffs, &b.coeffs) == Ok(PosetRel::LessStrict) {
                    pairs += 1;
                    assert!(
                        energy[i] < energy[j] + 1e-8,
                        "n = {n}: {:?} vs {:?}",
                        a.graph,
                        b.graph
                    );
                }
            }
        }
    }
    assert!(pairs > 1000);
}

#[test]
fn counterexample_graphs() {
    let g1 = build_u(FamilySpec::new(10, 2, 3, 0)).unwrap();
    let g2 = build_u(FamilySpec::new(10, 2, 3, 1)).unwrap();
    let r = classify(&g1);
    assert!(r.is_unicyclic);
    assert_eq!(r.girth, Some(3));
    assert_eq!(r.leaf_count, 2);
    assert_eq!(
        coefficients_via_forests(&g1).unwrap(),
        laplacian_coefficients(&g1)
    );
    assert_eq!(
        coefficients_via_forests(&g2).unwrap(),
        laplacian_coefficients(&g2)
    );
    // regression values, no order between the two is implied
    assert!((lel(&g1) - 12.336766377275).abs() < 1e-8);
    assert!((lel(&g2) - 12.352346329023).abs() < 1e-8);
}

#[test]
fn wide_coefficients_stay_exact() {
    // a 30-vertex graph overflows nothing, and c_{n-1} = n * tau still holds
    let spec = FamilySpec::new(30, 4, 5, 3);
    let g = build_u(spec).unwrap();
    check_invariants(&g);
    let k30: Vec<(usize, usize)> = (0..30)
        .flat_map(|a| (a + 1..30).map(move |b| (a, b)))
        .collect();
    let k = Graph::new(30, &k30).unwrap();
    let c = laplacian_coefficients(&k);
    // c_{n-1}(K_n) = n * n^{n-2}
    assert_eq!(c.c[29], BigUint::from(30u32).pow(29));
}
