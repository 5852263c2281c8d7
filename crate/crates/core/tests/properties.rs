//! Oracle equivalence and invariants over random inputs.

mod common;

use cliquerich::census::binomial;
use cliquerich::netgen::derive_seeds;
use cliquerich::parallel::with_workers;
use cliquerich::rank::compare_clubs;
use cliquerich::report::to_json;
use cliquerich::{
    brute_force_census, exact_census, gen_er, gen_ws, pseudo_census, rank_vertices, rich_club,
    run_iteration, run_pipeline, select_threshold_for_size, super_rich_club, swap_distance,
    weighted_participation_coefficient, CensusMode, ClubReport, Coefficient, GenSpec, Graph,
    ParticipationTable, PercentileSchedule, PipelineTrace, RankComparison,
};
use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn graph_strategy(max_n: usize, weighted: bool) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 2..=max_n, 0.1f64..0.9)
        .prop_map(move |(seed, n, p)| random_graph(&mut rng(seed), n, p, weighted.then_some(20)))
}

fn same_counts(a: &ParticipationTable, b: &ParticipationTable) -> bool {
    a.total == b.total && a.vertex_counts == b.vertex_counts && a.edge_counts == b.edge_counts
}

#[test]
fn exact_matches_oracle_on_seeded_er_graphs() {
    for seed in 0..50 {
        let g = random_graph(&mut rng(seed), 12, 0.4, None);
        for k in 3..=5 {
            let fast = exact_census(&g, k).unwrap();
            let slow = brute_force_census(&g, k, CensusMode::Exact).unwrap();
            assert_eq!(fast, slow, "seed {seed}, k {k}");
        }
    }
}

#[test]
fn pseudo_matches_oracle_with_random_thresholds() {
    for seed in 0..50 {
        let mut r = rng(1000 + seed);
        let n = r.gen_range(5..=12);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p, Some(10));
        for k in 2..=5.min(n) {
            // thresholds on existing weights exercise ties at the median
            let threshold = match r.gen_range(0..3) {
                0 => 0.0,
                1 => r.gen_range(1..=10) as f64,
                _ => r.gen_range(0.0..10.5),
            };
            let fast = pseudo_census(&g, k, threshold).unwrap();
            let slow = brute_force_census(&g, k, CensusMode::Pseudo { threshold }).unwrap();
            assert_eq!(fast, slow, "seed {seed}, k {k}, w {threshold}");
        }
    }
}

#[test]
fn census_is_identical_across_worker_counts() {
    let g = random_graph(&mut rng(7), 60, 0.4, Some(50));
    let exact = with_workers(1, || exact_census(&g, 4).unwrap());
    let pseudo = with_workers(1, || pseudo_census(&g, 4, 25.0).unwrap());
    for workers in [2, 3, 4, 8] {
        assert_eq!(
            with_workers(workers, || exact_census(&g, 4).unwrap()),
            exact
        );
        assert_eq!(
            with_workers(workers, || pseudo_census(&g, 4, 25.0).unwrap()),
            pseudo
        );
    }
}

#[test]
fn netgen_seed_sweep() {
    for seed in 0..1000u64 {
        let n = 5 + (seed as usize % 40);
        let density = [0.1, 0.25, 0.5, 0.75, 0.9, 1.0][seed as usize % 6];
        let er = GenSpec::er(n, density, seed);
        let g = gen_er(&er).unwrap();
        let pairs = binomial(n, 2) as f64;
        assert!((g.density().unwrap() - density).abs() <= 1.0 / pairs + 1e-12);
        assert_eq!(g.edge_count(), er.er_edge_count());
        assert_eq!(gen_er(&er).unwrap(), g);

        let ws = GenSpec::ws(n, density, 0.1, seed);
        let ring = ws.ring_degree();
        if ring < 2 || ring >= n {
            assert!(gen_ws(&ws).is_err());
            continue;
        }
        let h = gen_ws(&ws).unwrap();
        assert_eq!(
            h.edge_count(),
            n * ws.ring_degree() / 2,
            "n {n} δ {density}"
        );
        assert_eq!(gen_ws(&ws).unwrap(), h);
        for e in g.edges().iter().chain(h.edges()) {
            assert!(e.u < e.v && e.weight == 1.0);
        }
    }
}

#[test]
fn derived_seed_streams_differ() {
    let a = derive_seeds(9, 0, 100);
    let b = derive_seeds(9, 1, 100);
    assert_eq!(a, derive_seeds(9, 0, 100));
    assert!(a.iter().all(|s| !b.contains(s)));
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(value: &T) {
    let text = to_json(value).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, value);
}

#[test]
fn reports_round_trip_through_json() {
    let g = random_graph(&mut rng(3), 30, 0.4, Some(9));
    let exact = exact_census(&g, 3).unwrap();
    round_trip::<ParticipationTable>(&exact);
    round_trip::<ParticipationTable>(&pseudo_census(&g, 4, 4.0).unwrap());
    round_trip::<ClubReport>(&rich_club(&g, 5));
    round_trip::<ClubReport>(&rich_club(&Graph::empty(3), 0));
    round_trip::<ClubReport>(&super_rich_club(&g, 3, 2, &exact).unwrap());
    round_trip::<ClubReport>(&cliquerich::edge_club(&g, 3, 1, &exact).unwrap());
    round_trip::<PipelineTrace>(&run_pipeline(&g, 4, &PercentileSchedule::default()).unwrap());
    round_trip::<RankComparison>(&compare_clubs(&g, &exact, 8).unwrap());
    round_trip::<GenSpec>(&GenSpec::ws(40, 0.5, 0.1, 11));
}

#[test]
fn pipeline_edges_are_nested_and_weighted_by_participation() {
    for seed in 0..20 {
        let mut r = rng(500 + seed);
        let n = r.gen_range(8..=30);
        let p = r.gen_range(0.3..0.7);
        let g = random_graph(&mut r, n, p, Some(100));
        if g.edge_count() == 0 {
            continue;
        }
        let (next, rec) = run_iteration(&g, 4, 50.0).unwrap();
        let table = pseudo_census(&g, 4, rec.threshold).unwrap();
        assert_eq!(rec.total, table.total);
        for e in next.edges() {
            assert!(g.has_edge(e.u, e.v));
            assert_eq!(e.weight, table.edge(e.u, e.v) as f64);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake_identities(g in graph_strategy(14, false), k in 2usize..=5) {
        prop_assume!(k <= g.n());
        let t = exact_census(&g, k).unwrap();
        let vsum: u64 = t.vertex_counts.iter().sum();
        let esum: u64 = t.edge_counts.iter().map(|e| e.count).sum();
        prop_assert_eq!(vsum, k as u64 * t.total);
        prop_assert_eq!(esum as u128, binomial(k, 2) * t.total as u128);
    }

    #[test]
    fn pairs_are_edges(g in graph_strategy(20, false)) {
        let t = exact_census(&g, 2).unwrap();
        let degrees: Vec<u64> = g.degrees().iter().map(|&d| d as u64).collect();
        prop_assert_eq!(&t.vertex_counts, &degrees);
        prop_assert!(t.edge_counts.iter().all(|e| e.count == 1));
        prop_assert_eq!(t.total as usize, g.edge_count());
        for j in -1..=g.n() as i64 {
            let a = rich_club(&g, j);
            let b = super_rich_club(&g, 2, j, &t).unwrap();
            prop_assert_eq!(a.members, b.members);
            prop_assert_eq!(a.coefficient, b.coefficient);
        }
    }

    #[test]
    fn pseudo_is_monotone_in_threshold(
        g in graph_strategy(12, true),
        k in 2usize..=5,
        w1 in 0.0f64..21.0,
        w2 in 0.0f64..21.0,
    ) {
        prop_assume!(k <= g.n());
        let (lo, hi) = if w1 <= w2 { (w1, w2) } else { (w2, w1) };
        let a = pseudo_census(&g, k, lo).unwrap();
        let b = pseudo_census(&g, k, hi).unwrap();
        prop_assert!(b.total <= a.total);
        for v in 0..g.n() {
            prop_assert!(b.vertex(v) <= a.vertex(v));
        }
    }

    #[test]
    fn cliques_are_pseudo_subsets(g in graph_strategy(12, true), k in 2usize..=5) {
        prop_assume!(k <= g.n());
        let w = g.max_weight().map_or(0.0, |_| {
            g.edges().iter().map(|e| e.weight).fold(f64::INFINITY, f64::min)
        });
        let exact = exact_census(&g, k).unwrap();
        let pseudo = pseudo_census(&g, k, w).unwrap();
        prop_assert!(pseudo.total >= exact.total);
        for v in 0..g.n() {
            prop_assert!(pseudo.vertex(v) >= exact.vertex(v));
        }
    }

    #[test]
    fn club_membership_shrinks_with_threshold(g in graph_strategy(16, false), k in 2usize..=4) {
        prop_assume!(k <= g.n());
        let t = exact_census(&g, k).unwrap();
        let max = t.vertex_counts.iter().copied().max().unwrap_or(0) as i64;
        for j in -1..=max {
            let outer = super_rich_club(&g, k, j, &t).unwrap().members;
            let inner = super_rich_club(&g, k, j + 1, &t).unwrap().members;
            prop_assert!(inner.iter().all(|v| outer.contains(v)));
            let outer = rich_club(&g, j).members;
            let inner = rich_club(&g, j + 1).members;
            prop_assert!(inner.iter().all(|v| outer.contains(v)));
        }
    }

    #[test]
    fn uniform_weight_scaling(g in graph_strategy(11, true), k in 2usize..=5, w in 0u32..=20) {
        prop_assume!(k <= g.n());
        let c = 2.5;
        let scaled = Graph::from_edges(
            g.n(),
            g.edges().iter().map(|e| (e.u, e.v, e.weight * c)),
        )
        .unwrap();
        let a = pseudo_census(&g, k, w as f64).unwrap();
        let b = pseudo_census(&scaled, k, w as f64 * c).unwrap();
        prop_assert!(same_counts(&a, &b));
        let members: Vec<usize> = (0..g.n()).step_by(2).collect();
        let cw = weighted_participation_coefficient(&g, &members, w as f64).unwrap();
        let cws = weighted_participation_coefficient(&scaled, &members, w as f64 * c).unwrap();
        match (cw, cws) {
            (Coefficient::Defined(x), Coefficient::Defined(y)) => prop_assert!((x - y).abs() < 1e-12),
            (x, y) => prop_assert_eq!(x, y),
        }
    }

    #[test]
    fn swap_distance_is_a_metric(seed in any::<u64>(), n in 0usize..40) {
        let mut r = rng(seed);
        let mut perm = || {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut r);
            p
        };
        let (a, b, c) = (perm(), perm(), perm());
        let d = |x: &[usize], y: &[usize]| swap_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &a), 0);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        if a != b {
            prop_assert!(d(&a, &b) > 0);
        }
        let rev: Vec<usize> = a.iter().rev().copied().collect();
        prop_assert_eq!(d(&a, &rev) as u128, binomial(n, 2));
    }

    #[test]
    fn ranking_is_a_sorted_permutation(scores in prop::collection::vec(0u64..6, 0..30)) {
        let order = rank_vertices(&scores);
        let mut seen = order.clone();
        seen.sort();
        prop_assert_eq!(seen, (0..scores.len()).collect::<Vec<_>>());
        for w in order.windows(2) {
            let (a, b) = (w[0], w[1]);
            prop_assert!(scores[a] > scores[b] || (scores[a] == scores[b] && a < b));
        }
    }

    #[test]
    fn threshold_selection_is_closest_without_splitting_ties(
        scores in prop::collection::vec(0u64..8, 1..30),
        target in 0usize..32,
    ) {
        let j = select_threshold_for_size(&scores, target);
        let size = |t: i64| scores.iter().filter(|&&s| t < 0 || s as i64 > t).count();
        let chosen = size(j);
        for t in -1..=8 {
            prop_assert!(chosen.abs_diff(target) <= size(t).abs_diff(target));
            if size(t).abs_diff(target) == chosen.abs_diff(target) {
                prop_assert!(chosen <= size(t));
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(15, true)) {
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back, g.clone());
        let dense = Graph::from_dense_matrix(&g.to_dense_matrix()).unwrap();
        prop_assert_eq!(dense.edges(), g.edges());
    }
}
