use degencount::acyclicity::{acyclic_orientations, is_alpha_acyclic_hypergraph, reachability_hypergraph};
use degencount::counting::copy_count;
use degencount::graph::{degeneracy_order, degeneracy_order_linear, orient_by_degeneracy};
use degencount::hom::{directed_hom_count, hom_count, hom_count_on, DispatchPath, Host, Policy};
use degencount::oracle::{brute_directed_hom, brute_hom, brute_inj};
use degencount::pattern::Pattern;
use degencount::{BigCount, Graph, Limits};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn pattern(max_n: usize) -> impl Strategy<Value = Pattern> {
    graph(max_n).prop_map(|g| Pattern::from_graph(&g).unwrap())
}

/// Largest minimum degree over all induced subgraphs.
fn degeneracy_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    (1u32..1 << n)
        .map(|s| {
            (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .map(|v| g.neighbors(v).iter().filter(|&&w| s >> w & 1 == 1).count())
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_matches_oracle(h in pattern(5), g in graph(9)) {
        let lim = Limits::default();
        let r = hom_count(&h, &g, Policy::Auto, &lim).unwrap();
        prop_assert_eq!(r.count, brute_hom(&h, &g, &lim).unwrap());
    }

    #[test]
    fn hom_is_invariant_under_relabelling(h in pattern(5), g in graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let lim = Limits::default();
        let mut perm: Vec<u32> = (0..g.n() as u32).collect();
        perm.shuffle(&mut degencount::generators::rng(seed));
        let a = hom_count(&h, &g, Policy::Auto, &lim).unwrap().count;
        let b = hom_count(&h, &g.relabel(&perm), Policy::Auto, &lim).unwrap().count;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn peels_reach_the_degeneracy(g in graph(10)) {
        let kappa = degeneracy_by_subsets(&g);
        for d in [degeneracy_order(&g), degeneracy_order_linear(&g)] {
            prop_assert_eq!(d.kappa, kappa);
            let gdir = orient_by_degeneracy(&g, &d).unwrap();
            prop_assert!(gdir.max_out_degree() <= kappa);
            prop_assert!(gdir.is_acyclic());
            prop_assert_eq!(gdir.arc_count(), g.m());
        }
    }

    #[test]
    fn directed_counts_sum_to_hom(h in pattern(5), g in graph(8)) {
        let lim = Limits::default();
        let d = degeneracy_order(&g);
        let gdir = orient_by_degeneracy(&g, &d).unwrap();
        let mut total = BigCount::from(0u32);
        for hdir in acyclic_orientations(&h, &lim).unwrap() {
            let expected = brute_directed_hom(&hdir, &gdir, &lim).unwrap();
            let (ok, _) = is_alpha_acyclic_hypergraph(&reachability_hypergraph(&hdir).unwrap()).unwrap();
            if ok {
                prop_assert_eq!(directed_hom_count(&hdir, &gdir).unwrap(), expected.clone());
            }
            total += expected;
        }
        prop_assert_eq!(total, brute_hom(&h, &g, &lim).unwrap());
    }

    #[test]
    fn join_trees_verify(h in pattern(6)) {
        let lim = Limits::default();
        for hdir in acyclic_orientations(&h, &lim).unwrap() {
            let f = reachability_hypergraph(&hdir).unwrap();
            if let (true, Some(tree)) = is_alpha_acyclic_hypergraph(&f).unwrap() {
                prop_assert!(tree.verify(&f));
            }
        }
    }

    #[test]
    fn copies_times_automorphisms_is_embeddings(h in pattern(4), g in graph(8)) {
        let lim = Limits::default();
        let auts = brute_inj(&h, &h.to_graph(), &lim).unwrap();
        let copies = copy_count(&h, &g, false, &lim).unwrap();
        prop_assert_eq!(copies * auts, brute_inj(&h, &g, &lim).unwrap());
    }
}

#[test]
fn shared_host_reports_engine_paths() {
    let g = degencount::generators::degen2(2000, &mut degencount::generators::rng(1));
    let host = Host::new(&g);
    let lim = Limits::default();
    let c5 = hom_count_on(&Pattern::cycle(5), &host, Policy::Auto, &lim).unwrap();
    assert_eq!(c5.meta.path, DispatchPath::AlphaAcyclic);
    assert_eq!(c5.meta.kappa, Some(2));
    // subdivided graphs are bipartite
    assert_eq!(c5.count, BigCount::from(0u32));
    let c4 = hom_count_on(&Pattern::cycle(4), &host, Policy::Auto, &lim).unwrap();
    assert_eq!(c4.count, super::closed_walks(&g, 4));
    let p4 = hom_count_on(&Pattern::path(4), &host, Policy::Auto, &lim).unwrap();
    assert_eq!(p4.meta.path, DispatchPath::Forest);
}
