mod common;

use graphpart::generate::{generate, GenKind, GenParams};
use graphpart::io::{format_certificate, format_dimacs, parse_certificate, parse_graph};
use graphpart::oracle::brute_pi_partition;
use graphpart::twosat::{brute_twosat, solve_twosat, Lit, TwoSatFormula};
use graphpart::*;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for w in u + 1..n {
                    if bits[i] {
                        edges.push((u, w));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn formula_strategy() -> impl Strategy<Value = TwoSatFormula> {
    let lit = (0..12usize, any::<bool>()).prop_map(|(v, p)| if p { Lit::pos(v) } else { Lit::neg(v) });
    proptest::collection::vec((lit.clone(), lit), 0..40).prop_map(|clauses| {
        let mut f = TwoSatFormula::new(12);
        for (a, b) in clauses {
            f.add(a, b);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn answers_match_oracle_and_certificates_verify(g in graph_strategy(9), k in 0usize..4) {
        for s in Solver::ALL {
            let (found, _) = s.run(&g, k);
            prop_assert_eq!(found.is_some(), s.oracle(&g, k).unwrap().is_some(), "{:?} k={}", s, k);
            if let Some(p) = found {
                prop_assert!(p.covers_exactly() && p.n() == g.n());
                prop_assert!(verify_certificate(&g, &p, s.problem(), k, s.bound_mode()));
            }
        }
    }

    #[test]
    fn monotone_in_k(g in graph_strategy(9), k in 0usize..4) {
        for s in Solver::ALL {
            if s.run(&g, k).0.is_some() {
                prop_assert!(s.run(&g, k + 1).0.is_some());
            }
        }
    }

    #[test]
    fn hereditary(g in graph_strategy(9), k in 0usize..4, pick in any::<prop::sample::Index>()) {
        prop_assume!(g.n() > 0);
        let h = g.delete_vertex(pick.index(g.n()));
        for s in Solver::ALL {
            if s.run(&g, k).0.is_some() {
                prop_assert!(s.run(&h, k).0.is_some());
            }
        }
    }

    #[test]
    fn one_cluster_is_split(g in graph_strategy(16)) {
        let split = brute_pi_partition(&g, &PropertySpec::clique(), &PropertySpec::edgeless()).unwrap().is_some();
        prop_assert_eq!(recognize_monopolar(&g, 1).is_some(), split);
    }

    #[test]
    fn twosat_matches_brute_force(f in formula_strategy()) {
        let fast = solve_twosat(&f);
        prop_assert_eq!(fast.is_some(), brute_twosat(&f).is_some());
        if let Some(a) = fast {
            prop_assert!(f.satisfied_by(&a));
        }
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(parse_graph(&format_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn certificate_text_round_trip(g in graph_strategy(9), k in 0usize..4) {
        if let Some(p) = recognize_subcoloring_ka(&g, k) {
            prop_assert_eq!(parse_certificate(&format_certificate(&p)).unwrap(), p);
        }
    }

    #[test]
    fn generator_is_deterministic(extra in 0usize..60, k in 1usize..4, p in 0.0f64..1.0, seed in any::<u64>(), kind in 0usize..3) {
        let kind = [GenKind::PlantedMonopolar, GenKind::PlantedSubcoloring, GenKind::Gnp][kind];
        let params = GenParams::new(kind, 10 * k + extra, k, p, seed);
        let (a, b) = (generate(&params).unwrap(), generate(&params).unwrap());
        prop_assert_eq!(&a.graph, &b.graph);
        prop_assert_eq!(&a.certificate, &b.certificate);
        if let Some(c) = &a.certificate {
            let problem = if kind == GenKind::PlantedMonopolar { Problem::Monopolar } else { Problem::Subcoloring };
            prop_assert!(verify_certificate(&a.graph, c, problem, k, BoundMode::ASide));
        }
    }

    #[test]
    fn batch_modes_agree(graphs in proptest::collection::vec(graph_strategy(8), 0..12), k in 0usize..3) {
        for s in Solver::ALL {
            let seq = recognize_batch(&graphs, s, k, Execution::Sequential);
            let par = recognize_batch(&graphs, s, k, Execution::Parallel);
            prop_assert_eq!(seq, par);
        }
    }

    #[test]
    fn total_certificates_cover_vertices(g in graph_strategy(10), k in 0usize..5) {
        if let Some(p) = recognize_subcoloring_total(&g, k) {
            let mut seen: Vec<usize> = p.a_clusters().iter().chain(p.b_clusters()).flatten().copied().collect();
            seen.sort_unstable();
            prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
            prop_assert!(p.cluster_count(BoundMode::Total) <= k);
        }
    }
}
