//! Small worked instances for every public operation. Expected values that
//! come from exhaustive search are asserted against the oracle first, then
//! against the solver.

mod common;

use common::{A1, A2, A3, B1, B2, B3, V};
use graphpart::cluster::cluster_decomposition;
use graphpart::exclusive::*;
use graphpart::generate::{generate, GenKind, GenParams};
use graphpart::graph::degree_sorted_order;
use graphpart::io::{format_certificate, parse_certificate, parse_graph};
use graphpart::monopolar::*;
use graphpart::oracle::*;
use graphpart::pattern::{find_induced_occurrence, PatternGraph};
use graphpart::subcoloring::*;
use graphpart::total::*;
use graphpart::twosat::{brute_twosat, solve_twosat, Lit, TwoSatFormula};
use graphpart::*;

#[test]
fn graph_construction() {
    let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!((k3.m(), k3.max_degree()), (3, 2));
    let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!((c4.m(), c4.max_degree()), (4, 2));
    assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]).unwrap().m(), 1);
}

#[test]
fn cluster_checks() {
    assert_eq!(cluster_decomposition(&Graph::complete(3), &[0, 1, 2]).unwrap(), vec![vec![0, 1, 2]]);
    let p = cluster_decomposition(&Graph::path(3), &[0, 1, 2]).unwrap_err();
    assert_eq!(p.path(), [0, 1, 2]);
    assert!(cluster_decomposition(&Graph::cycle(4), &[0, 1, 3]).is_err());
}

#[test]
fn certificate_checks() {
    let f2 = common::fig2_right();
    let p = Bipartition::from_clusters(7, vec![vec![A1, A3, B2, V]], vec![vec![A2], vec![B1], vec![B3]]);
    assert!(verify_certificate(&f2, &p, Problem::Monopolar, 1, BoundMode::ASide));
    let f3 = common::fig3_left();
    let p = Bipartition::from_clusters(10, vec![vec![0, 1, 2], vec![3, 4, 5]], (6..10).map(|b| vec![b]).collect());
    assert!(verify_certificate(&f3, &p, Problem::Monopolar, 2, BoundMode::ASide));
    let c4 = Graph::cycle(4);
    let p = Bipartition::from_sides(&c4, &[Side::A, Side::A, Side::B, Side::B]);
    assert!(!verify_certificate(&c4, &p, Problem::Monopolar, 1, BoundMode::ASide));
}

#[test]
fn induced_patterns() {
    assert!(find_induced_occurrence(&Graph::path(3), &PatternGraph::path(3), &[0, 1, 2]).is_some());
    assert!(find_induced_occurrence(&Graph::complete(3), &PatternGraph::path(3), &[0, 1, 2]).is_none());
    let all: Vec<usize> = (0..5).collect();
    assert!(find_induced_occurrence(&Graph::cycle(5), &PatternGraph::complete(3), &all).is_none());
}

#[test]
fn degree_order() {
    assert_eq!(degree_sorted_order(&Graph::star(3)), vec![1, 2, 3, 0]);
    assert_eq!(degree_sorted_order(&Graph::complete(3)), vec![0, 1, 2]);
    assert_eq!(degree_sorted_order(&Graph::path(3)), vec![0, 2, 1]);
}

#[test]
fn oracle_cases() {
    let p = brute_monopolar(&Graph::complete(3), 1).unwrap().unwrap();
    assert_eq!(p.a_vertices(), vec![0, 1, 2]);
    assert!(brute_monopolar(&Graph::cycle(4), 1).unwrap().is_none());
    let p = brute_monopolar(&Graph::cycle(4), 2).unwrap().unwrap();
    assert!(verify_certificate(&Graph::cycle(4), &p, Problem::Monopolar, 2, BoundMode::ASide));
    assert!(brute_subcoloring(&Graph::cycle(5), 1, BoundMode::ASide).unwrap().is_none());
    let p = brute_subcoloring(&Graph::cycle(5), 2, BoundMode::ASide).unwrap().unwrap();
    assert_eq!(p.a_clusters().len(), 2);
    assert!(brute_subcoloring(&Graph::cycle(4), 2, BoundMode::Total).unwrap().is_some());
    let (cl, ed) = (PropertySpec::clique(), PropertySpec::edgeless());
    let p = brute_pi_partition(&Graph::path(2), &cl, &ed).unwrap().unwrap();
    assert_eq!(p.a_vertices(), vec![0, 1]);
    assert!(brute_pi_partition(&Graph::path(3), &cl, &ed).unwrap().is_some());
    assert!(brute_pi_partition(&Graph::cycle(5), &cl, &ed).unwrap().is_none());
}

#[test]
fn inductive_base_cases() {
    let empty = Graph::empty(0);
    for s in Solver::ALL {
        assert_eq!(s.run(&empty, 0).0, Some(Bipartition::empty()));
    }
    assert!(recognize_monopolar_with(&Graph::complete(3), 1, OrderMode::DegreeSorted).0.is_some());
    assert!(brute_monopolar(&Graph::cycle(4), 1).unwrap().is_none());
    assert!(recognize_monopolar(&Graph::cycle(4), 1).is_none());
}

#[test]
fn monopolar_initial_constraints() {
    let [a, b] = initial_mono_constraints(&Graph::path(2), 1, &[0], &[], 1).unwrap();
    assert_eq!((a.a_perm, a.b_perm), (vec![1], vec![]));
    assert_eq!((b.a_perm, b.b_perm), (vec![], vec![1]));
    let [a, b] = initial_mono_constraints(&Graph::path(3), 2, &[0, 1], &[], 1).unwrap();
    assert_eq!((a.a_perm, b.b_perm), (vec![2], vec![2]));
    let f2 = common::fig2_right();
    let [a, b] = initial_mono_constraints(&f2, V, &[A1, A2, A3], &[B1, B2, B3], 1).unwrap();
    assert_eq!((a.a_perm, b.b_perm), (vec![V], vec![V]));
}

#[test]
fn monopolar_steps() {
    let f2 = common::fig2_right();
    let p = inductive_monopolar_step(&f2, V, &[A1, A2, A3], &[B1, B2, B3], 1).unwrap().unwrap();
    assert!(verify_certificate(&f2, &p, Problem::Monopolar, 1, BoundMode::ASide));
    assert!(brute_monopolar(&Graph::cycle(4), 1).unwrap().is_none());
    assert!(inductive_monopolar_step(&Graph::cycle(4), 3, &[0, 1], &[2], 1).unwrap().is_none());
    let p = inductive_monopolar_step(&Graph::complete(3), 2, &[0, 1], &[], 1).unwrap().unwrap();
    assert_eq!(p.a_vertices(), vec![0, 1, 2]);
}

#[test]
fn monopolar_whole_graphs() {
    let f3 = common::fig3_left();
    assert!(recognize_monopolar(&f3, 2).is_some());
    assert!(brute_monopolar(&f3, 1).unwrap().is_none());
    assert!(recognize_monopolar(&f3, 1).is_none());
    assert!(brute_monopolar(&Graph::cycle(5), 2).unwrap().is_some());
    assert!(recognize_monopolar(&Graph::cycle(5), 2).is_some());
}

#[test]
fn ramsey_bounds() {
    assert_eq!(ramsey_upper_bound(3, 3).unwrap(), 6);
    assert_eq!(ramsey_upper_bound(5, 1).unwrap(), 1);
    assert_eq!(ramsey_upper_bound(2, 4).unwrap(), 4);
}

#[test]
fn xp_steps() {
    let (cl, ed) = (PropertySpec::clique(), PropertySpec::edgeless());
    let p3 = Graph::path(3);
    let p = xp_inductive_step(&p3, 2, &[0, 1], &[], &cl, &ed, 2).unwrap().unwrap();
    assert!(cl.contains_induced(&p3, &p.a_vertices()) && ed.contains_induced(&p3, &p.b_vertices()));
    let p = xp_inductive_step(&Graph::path(2), 1, &[0], &[], &cl, &ed, 1).unwrap().unwrap();
    assert_eq!(p.a_vertices(), vec![0, 1]);
    let c5 = Graph::cycle(5);
    assert!(brute_pi_partition(&c5, &cl, &ed).unwrap().is_none());
    // Any valid start for C5 - 4 = P4: A = {1, 2}, B = {0, 3}.
    assert!(xp_inductive_step(&c5, 4, &[1, 2], &[0, 3], &cl, &ed, 2).unwrap().is_none());
}

#[test]
fn exclusive_recognition() {
    let tf = PropertySpec::triangle_free();
    let cl = PropertySpec::clique();
    let k4 = Graph::complete(4);
    assert!(brute_pi_partition(&k4, &tf, &cl).unwrap().is_some());
    assert!(recognize_exclusive(&k4, &tf, &cl, 3).unwrap().is_some());
    assert_eq!(recognize_exclusive(&Graph::empty(0), &cl, &PropertySpec::edgeless(), 2).unwrap(), Some(Bipartition::empty()));
}

#[test]
fn cluster_vs_forbidden() {
    let two_k4 = Graph::complete(4).disjoint_union(&Graph::complete(4));
    let p = recognize_cluster_vs_fsg(&two_k4, 2, &PropertySpec::triangle_free()).unwrap().unwrap();
    assert!(PropertySpec::cluster(Some(2)).contains_induced(&two_k4, &p.a_vertices()));
    assert!(PropertySpec::triangle_free().contains_induced(&two_k4, &p.b_vertices()));
    assert!(brute_monopolar(&Graph::cycle(4), 1).unwrap().is_none());
    assert!(recognize_cluster_vs_fsg(&Graph::cycle(4), 1, &PropertySpec::edgeless()).unwrap().is_none());
}

#[test]
fn small_forbidden_lists() {
    let cl = PropertySpec::clique();
    assert!(recognize_small_fsg(&Graph::empty(1), &cl, &PropertySpec::max_order(1)).unwrap().is_some());
    let c5 = Graph::cycle(5);
    assert!(brute_pi_partition(&c5, &cl, &PropertySpec::edgeless()).unwrap().is_none());
    assert!(recognize_small_fsg(&c5, &cl, &PropertySpec::edgeless()).unwrap().is_none());
}

#[test]
fn small_side_a() {
    let (any, ed) = (PropertySpec::any(), PropertySpec::edgeless());
    assert_eq!(brute_min_vertex_cover(&Graph::path(3)).unwrap(), 1);
    let p = recognize_bounded_a(&Graph::path(3), 2, &any, &ed).unwrap().unwrap();
    assert_eq!(p.a_vertices(), vec![1]);
    assert_eq!(brute_min_vertex_cover(&Graph::complete(3)).unwrap(), 2);
    assert!(recognize_bounded_a(&Graph::complete(3), 1, &any, &ed).unwrap().is_none());
    assert!(recognize_bounded_a(&Graph::path(2), 0, &any, &ed).unwrap().is_none());
}

#[test]
fn subcoloring_initial_constraints() {
    let cs = initial_group_constraints(&Graph::path(2), 1, &[vec![0]], &[], 1).unwrap();
    assert_eq!(cs.len(), 2);
    assert_eq!(cs[0].a_groups()[0], vec![0, 1]);
    assert!(!cs[1].is_a_group(cs[1].group_of(1)));
    assert_eq!(cs[1].b_groups()[cs[1].group_of(1) - 1], vec![1]);
    // v = 0 sees k + 2 = 3 B' clusters.
    let star = Graph::star(3);
    let cs = initial_group_constraints(&star, 0, &[], &[vec![1], vec![2], vec![3]], 1).unwrap();
    assert_eq!(cs.len(), 1);
    assert!(cs[0].is_a_group(cs[0].group_of(0)));
    let c5 = Graph::cycle(5);
    let cs = initial_group_constraints(&c5, 4, &[vec![0, 1], vec![3]], &[vec![2]], 2).unwrap();
    assert!(cs.len() <= 2 * 2 + 2);
    assert!(brute_subcoloring(&c5, 2, BoundMode::ASide).unwrap().is_some());
    assert!(inductive_subcoloring_step(&c5, 4, &[0, 1, 3], &[2], 2).unwrap().is_some());
}

#[test]
fn subcoloring_rules() {
    // Permanent P3 inside one A group.
    let p3 = Graph::path(3);
    let c = GroupConstraint::new(&p3, 1, &[vec![0, 1, 2]], &[], &[0, 1, 2]).unwrap();
    assert_eq!(apply_sub_rules(&p3, &c), SubOutcome::Rejected);

    // 0 shares an A group with permanent 1, which it misses, and sees the
    // permanent B vertex 2.
    let g = Graph::new(3, &[(0, 2)]).unwrap();
    let c = GroupConstraint::new(&g, 1, &[vec![0, 1]], &[vec![2]], &[2, 1]).unwrap();
    match apply_sub_rules(&g, &c) {
        SubOutcome::Reduced(next) => {
            assert_eq!(next.group_of(0), next.group_of(2));
            assert!(next.is_permanent(0));
        }
        other => panic!("unexpected {other:?}"),
    }

    // 2 sits in a B group next to permanent 3 of another B group; both A
    // groups are free of permanent vertices.
    let g = Graph::new(6, &[(0, 4), (1, 5), (2, 3), (4, 5)]).unwrap();
    let c = GroupConstraint::new(&g, 2, &[vec![0], vec![1]], &[vec![2], vec![3], vec![4, 5]], &[3]).unwrap();
    match apply_sub_rules(&g, &c) {
        SubOutcome::Branch(kids) => {
            assert_eq!(kids.len(), 2);
            assert!(kids.iter().all(|k| k.is_a_group(k.group_of(2)) && k.is_permanent(2)));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn subcoloring_steps() {
    let p = inductive_subcoloring_step(&Graph::complete(3), 2, &[0, 1], &[], 1).unwrap().unwrap();
    assert_eq!(p.a_vertices(), vec![0, 1, 2]);
    let c5 = Graph::cycle(5);
    assert!(brute_subcoloring(&c5, 1, BoundMode::ASide).unwrap().is_none());
    // C5 - 4 = P4 with a unipolar start.
    assert!(inductive_subcoloring_step(&c5, 4, &[1, 2], &[0, 3], 1).unwrap().is_none());
    let f3 = common::fig3_right();
    let p = inductive_subcoloring_step(&f3, 10, &[0, 1, 2, 3, 4, 5], &[6, 7, 8, 9], 2).unwrap().unwrap();
    assert!(verify_certificate(&f3, &p, Problem::Subcoloring, 2, BoundMode::ASide));
}

#[test]
fn subcoloring_whole_graphs() {
    let e = recognize_subcoloring_ka(&Graph::empty(5), 0).unwrap();
    assert_eq!((e.a_clusters().len(), e.b_clusters().len()), (0, 5));
    let g = Graph::cycle(5).disjoint_union(&Graph::empty(1));
    assert!(brute_subcoloring(&g, 2, BoundMode::ASide).unwrap().is_some());
    assert!(recognize_subcoloring_ka(&g, 2).is_some());
    let f3 = common::fig3_right();
    assert!(brute_subcoloring(&f3, 1, BoundMode::ASide).unwrap().is_none());
    assert!(recognize_subcoloring_ka(&f3, 1).is_none());
}

#[test]
fn total_rules() {
    let g = Graph::empty(3);
    let c = TotalConstraint::from_clusters(&g, &[vec![0], vec![1]], &[]).unwrap();
    assert_eq!(apply_total_rules(&g, &c, 1), TotalOutcome::Rejected);
    let g = Graph::new(5, &[(4, 0), (4, 1), (4, 2), (4, 3), (2, 3)]).unwrap();
    let c = TotalConstraint::from_clusters(&g, &[vec![0], vec![1]], &[vec![2, 3]]).unwrap();
    match apply_total_rules(&g, &c, 4) {
        TotalOutcome::Reduced(next) => assert_eq!(next.clusters(Side::B), vec![vec![2, 3, 4]]),
        other => panic!("unexpected {other:?}"),
    }
    let g = Graph::empty(2);
    let c = TotalConstraint::from_clusters(&g, &[vec![0]], &[]).unwrap();
    match apply_total_rules(&g, &c, 3) {
        TotalOutcome::Branch(kids) => {
            assert_eq!(kids.len(), 2);
            assert_eq!((kids[0].k1(), kids[0].k2()), (2, 0));
            assert_eq!((kids[1].k1(), kids[1].k2()), (1, 1));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn total_formulas() {
    let g = Graph::complete(2);
    let c = TotalConstraint::from_clusters(&g, &[vec![0, 1]], &[]).unwrap();
    let f = build_twosat(&g, &c).unwrap();
    assert_eq!(f.var_count, 0);
    assert!(solve_twosat(&f).is_some());
    let g = Graph::new(5, &[(2, 0), (2, 4), (3, 1), (3, 4), (2, 3)]).unwrap();
    let c = TotalConstraint::from_clusters(&g, &[vec![0], vec![1]], &[vec![4]]).unwrap();
    assert_eq!(build_twosat(&g, &c).unwrap().clauses, vec![(Lit::neg(0), Lit::neg(1))]);
    let g = Graph::new(4, &[(2, 0), (2, 1), (3, 0), (3, 1)]).unwrap();
    let c = TotalConstraint::from_clusters(&g, &[vec![0]], &[vec![1]]).unwrap();
    let f = build_twosat(&g, &c).unwrap();
    assert_eq!(f.clauses, vec![(Lit::neg(0), Lit::neg(1)), (Lit::pos(0), Lit::pos(1))]);
    let all = [[false, false], [false, true], [true, false], [true, true]];
    let ok: Vec<_> = all.iter().filter(|a| f.satisfied_by(&a[..])).collect();
    assert_eq!(ok, vec![&[false, true], &[true, false]]);
}

#[test]
fn twosat_cases() {
    let mut f = TwoSatFormula::new(2);
    f.add(Lit::pos(0), Lit::pos(1));
    f.add(Lit::neg(0), Lit::pos(1));
    assert!(solve_twosat(&f).unwrap()[1]);
    let mut f = TwoSatFormula::new(1);
    f.add(Lit::pos(0), Lit::pos(0));
    f.add(Lit::neg(0), Lit::neg(0));
    assert!(solve_twosat(&f).is_none());
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(12);
    for _ in 0..200 {
        let mut f = common::random_formula(&mut rng, 12, 30);
        f.var_count = 12;
        assert_eq!(solve_twosat(&f).is_some(), brute_twosat(&f).is_some());
    }
}

#[test]
fn total_whole_graphs() {
    assert!(brute_subcoloring(&Graph::cycle(4), 2, BoundMode::Total).unwrap().is_some());
    let p = recognize_subcoloring_total(&Graph::cycle(4), 2).unwrap();
    assert_eq!(p.cluster_count(BoundMode::Total), 2);
    assert!(brute_subcoloring(&Graph::cycle(5), 3, BoundMode::Total).unwrap().is_none());
    assert!(recognize_subcoloring_total(&Graph::cycle(5), 3).is_none());
    assert!(brute_subcoloring(&Graph::cycle(5), 4, BoundMode::Total).unwrap().is_some());
    assert!(recognize_subcoloring_total(&Graph::cycle(5), 4).is_some());
    assert!(recognize_subcoloring_total(&Graph::cycle(5), 2).is_none());
    let p = recognize_subcoloring_total(&Graph::complete(3), 1).unwrap();
    assert_eq!(p.a_vertices(), vec![0, 1, 2]);
}

#[test]
fn file_formats() {
    assert_eq!(parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap(), Graph::complete(3));
    assert_eq!(parse_graph("4\n0 1\n1 2\n2 3\n3 0").unwrap(), Graph::cycle(4));
    assert!(matches!(parse_graph("p edge 2 1\ne 1 3\n"), Err(Error::Parse { .. })));
    let p = Bipartition::from_clusters(3, vec![vec![0, 1, 2]], vec![]);
    assert_eq!(format_certificate(&p), "side A 0 0\nside A 0 1\nside A 0 2\n");
    assert_eq!(parse_certificate(&format_certificate(&p)).unwrap(), p);
    assert_eq!(format_certificate(&Bipartition::empty()), "");
    assert_eq!(parse_certificate("").unwrap(), Bipartition::empty());
    let twice: String = (0..6).map(|v| format!("side B {v} {v}\n")).collect::<String>() + "side A 0 5\n";
    assert!(matches!(parse_certificate(&twice), Err(Error::Coverage(_))));
}

#[test]
fn generators() {
    let m = generate(&GenParams::new(GenKind::PlantedMonopolar, 10, 2, 0.3, 7)).unwrap();
    assert!(verify_certificate(&m.graph, m.certificate.as_ref().unwrap(), Problem::Monopolar, 2, BoundMode::ASide));
    assert!(recognize_monopolar(&m.graph, 2).is_some());
    assert_eq!(generate(&GenParams::new(GenKind::Gnp, 5, 0, 0.0, 1)).unwrap().graph, Graph::empty(5));
    assert_eq!(generate(&GenParams::new(GenKind::Gnp, 4, 0, 1.0, 1)).unwrap().graph, Graph::complete(4));
}
