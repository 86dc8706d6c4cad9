mod common;

use common::oracle;
use domtie::cascade::{generate_cascade_from, sparsify_system, Coloring, SetSystem};
use domtie::dichotomy::{two_ind_or_steep, verify_result, DichotomyParams};
use domtie::graph::{generators, parse_graph};
use domtie::lp::{fractional_domination, AssignmentKind, FractionalAssignment};
use domtie::orientation::{orient_bounded_outdegree, OrientOutcome, Orientation};
use domtie::{ExactSolver, Graph, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn fractional_value_is_relabel_invariant((g, perm) in graph_and_perm(9)) {
        let a = fractional_domination(&g).unwrap();
        let b = fractional_domination(&g.permuted(&perm)).unwrap();
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn optimal_sets_are_feasible_fractional_points(g in graph(9)) {
        let s = ExactSolver::default();
        let a2 = s.two_independence_number(&g).unwrap();
        let gamma = s.domination_number(&g).unwrap();
        let pack = FractionalAssignment::characteristic(&g, &a2.witness, AssignmentKind::Packing);
        let dom = FractionalAssignment::characteristic(&g, &gamma.witness, AssignmentKind::Domination);
        prop_assert!(pack.verify(&g).is_ok());
        prop_assert!(dom.verify(&g).is_ok());
        let cert = fractional_domination(&g).unwrap();
        prop_assert!(pack.total() <= cert.value && cert.value <= dom.total());
    }

    #[test]
    fn assignment_text_round_trip(g in graph(8)) {
        let cert = fractional_domination(&g).unwrap();
        for x in [&cert.primal, &cert.dual] {
            let back = FractionalAssignment::parse(&x.to_text(), g.n(), x.kind).unwrap();
            prop_assert_eq!(&back, x);
        }
    }

    #[test]
    fn orientation_outcome_is_certified(g in graph(10), d in 1usize..=3) {
        match orient_bounded_outdegree(&g, d) {
            OrientOutcome::Oriented(o) => {
                prop_assert!(o.max_outdegree() <= d);
                prop_assert_eq!(o.arcs().len(), g.m());
                let back = Orientation::parse(&g, &o.to_text()).unwrap();
                prop_assert_eq!(back.arcs(), o.arcs());
                prop_assert!(orient_bounded_outdegree(&g, d + 1).orientation().is_some());
            }
            OrientOutcome::Dense(w) => {
                prop_assert_eq!(oracle::induced_edges(&g, &w.vertices), w.edges);
                prop_assert!(w.edges > d * w.vertices.len());
            }
        }
    }

    #[test]
    fn foundation_round_trip(f in graph(8), num_d in 1usize..=3) {
        let c = generate_cascade_from(&f, num_d).unwrap();
        let found = c.foundation();
        prop_assert_eq!(&found.graph, &f);
        prop_assert_eq!(found.host_vertices, (0..f.n()).collect::<Vec<_>>());
        let back = Coloring::parse(&c.coloring().to_text(), c.graph().n()).unwrap();
        prop_assert_eq!(&back, c.coloring());
        prop_assert_eq!(parse_graph(&c.graph().to_edge_list()).unwrap(), c.graph().clone());
    }

    #[test]
    fn slope_is_relabel_invariant(f in graph(7), seed in any::<u64>()) {
        let c = generate_cascade_from(&f, 2).unwrap();
        let h = c.graph();
        let mut perm: Vec<usize> = (0..h.n()).collect();
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut ChaCha8Rng::seed_from_u64(seed));
        let mut colors = c.coloring().colors().to_vec();
        for (v, &p) in perm.iter().enumerate() {
            colors[p] = c.coloring().color(v);
        }
        let moved = domtie::cascade::Cascade::new(h.permuted(&perm), Coloring::new(colors)).unwrap();
        let s = ExactSolver::default();
        prop_assert_eq!(c.slope(&s).unwrap(), moved.slope(&s).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn override_dichotomy_is_sound_and_deterministic(n in 5usize..=16, d in 1usize..=2, extra in 1usize..=3, seed in any::<u64>()) {
        let g = generators::bounded_outdegree(n, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let params = DichotomyParams::with_override(d + extra, 1, 1, d).unwrap();
        let s = ExactSolver::default();
        let Ok(a) = two_ind_or_steep(&g, &params, &s) else {
            return Ok(());
        };
        prop_assert!(verify_result(&g, &a, &s).is_ok());
        let t = &a.trace;
        if let Some(alpha_f) = t.alpha_f {
            prop_assert!(alpha_f <= 2 * t.alpha2);
        }
        prop_assert!(num_bigint::BigInt::from(t.f_edges - t.f_prime_edges) <= t.removed_bound);
        prop_assert_eq!(t.b, t.base.len());
        let b = two_ind_or_steep(&g, &params, &s).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sparsify_is_deterministic_per_seed(n in 6usize..=10, seed in any::<u64>()) {
        let members: Vec<Vec<usize>> = (0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v, (v + 1) % n])).collect();
        let members = members.into_iter().map(|mut m| { m.sort(); m.dedup(); m }).collect();
        let system = SetSystem::new(n, members).unwrap();
        let s = ExactSolver::default();
        let c = Rational::one();
        let a = sparsify_system(&system, &c, 3, seed, 8, &s);
        let b = sparsify_system(&system, &c, 3, seed, 8, &s);
        prop_assert_eq!(&a, &b);
        if let Ok(out) = a {
            prop_assert!(out.witness.verify(&system).is_ok());
        }
    }
}
