//! Worked examples on the bundled fixtures.

mod common;

use cliquerich::census::binomial;
use cliquerich::fixtures::fixture;
use cliquerich::rank::rank_vertices;
use cliquerich::{
    brute_force_census, edge_club, exact_census, median_pair_weight, pseudo_census, rich_club,
    run_iteration, run_pipeline, select_threshold_for_size, super_rich_club,
    weighted_participation_coefficient, CensusMode, Coefficient, Graph, HaltReason,
    PercentileSchedule,
};
use common::*;

fn ids(g: &Graph, labels: &[&str]) -> Vec<usize> {
    labels
        .iter()
        .map(|l| g.vertex_by_label(l).unwrap())
        .collect()
}

#[test]
fn fig1_density_and_induced_club() {
    let g = fixture("fig1_G").unwrap();
    assert!((g.density().unwrap() - 1.0 / 7.0).abs() < 1e-15);
    let sub = g.induced_subgraph(&ids(&g, &["v1", "v3", "v5"])).unwrap();
    assert_eq!((sub.graph.n(), sub.graph.edge_count()), (3, 0));
}

#[test]
fn fig1_rich_clubs() {
    let expected = [
        ("fig1_G", 0.0),
        ("fig1_Gprime", 1.0 / 3.0),
        ("fig1_Gdoubleprime", 1.0),
    ];
    for (name, phi) in expected {
        let g = fixture(name).unwrap();
        let club = rich_club(&g, 4);
        assert_eq!(
            label_set(&g, &club.members),
            strings(&["v1", "v3", "v5"]),
            "{name}"
        );
        let got = club.coefficient.value().unwrap();
        assert!((got - phi).abs() < 1e-12, "{name}: {got}");
    }
}

#[test]
fn fig2_super_rich_club() {
    let g = fixture("fig2").unwrap();
    let t = exact_census(&g, 3).unwrap();
    let club = super_rich_club(&g, 3, 2, &t).unwrap();
    assert_eq!(
        label_set(&g, &club.members),
        strings(&["v2", "v3", "v4", "v5", "v7", "v8", "v9", "v10"])
    );
    // two internal K4 blocks, no edges between them: 12 / C(8,2)
    assert_eq!(club.coefficient, Coefficient::Defined(12.0 / 28.0));
    assert_eq!(club.member_edges.len(), 12);
    assert!(club.member_edges.iter().all(|e| e.weight == 2.0));
    // degree-based club differs: v1..v6 at j = 3
    assert_eq!(
        label_set(&g, &rich_club(&g, 3).members),
        strings(&["v1", "v2", "v3", "v4", "v5", "v6"])
    );
    assert_eq!(brute_force_census(&g, 3, CensusMode::Exact).unwrap(), t);
}

#[test]
fn fig2_threshold_for_size_keeps_tie_block() {
    let g = fixture("fig2").unwrap();
    let t = exact_census(&g, 3).unwrap();
    let j = select_threshold_for_size(&t.vertex_counts, 6);
    assert_eq!(j, 2);
    assert_eq!(t.vertex_counts.iter().filter(|&&c| c as i64 > j).count(), 8);
}

#[test]
fn fig2_rankings_differ() {
    let g = fixture("fig2").unwrap();
    let t = exact_census(&g, 3).unwrap();
    let degrees: Vec<u64> = g.degrees().iter().map(|&d| d as u64).collect();
    let by_degree = rank_vertices(&degrees);
    let by_part = rank_vertices(&t.vertex_counts);
    let v1 = g.vertex_by_label("v1").unwrap();
    let v6 = g.vertex_by_label("v6").unwrap();
    assert_eq!(&by_degree[..2], &[v1, v6]);
    assert!(by_part.iter().position(|&v| v == v1).unwrap() >= 8);
    assert!(by_part.iter().position(|&v| v == v6).unwrap() >= 8);
}

#[test]
fn fig3_rich_edge_club() {
    let g = fixture("fig3").unwrap();
    let t = exact_census(&g, 3).unwrap();
    let [u1, u2, u3, u5] = ids(&g, &["u1", "u2", "u3", "u5"])[..] else {
        unreachable!()
    };
    assert_eq!(t.edge(u1, u2), 3);
    assert_eq!(t.edge(u3, u5), 3);
    let club = edge_club(&g, 3, 2, &t).unwrap();
    assert_eq!(
        label_set(&g, &club.members),
        strings(&["u1", "u2", "u3", "u5"])
    );
    assert_eq!(club.member_edges.len(), 2);
    // eight triangles in the fixture
    assert_eq!(t.total, 8);
    assert_eq!(club.coefficient, Coefficient::Defined(6.0 / (3.0 * 8.0)));
}

#[test]
fn fig5_pseudo_examples() {
    for name in ["fig5_exact", "fig5_pseudo_a", "fig5_pseudo_b"] {
        let g = fixture(name).unwrap();
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(median_pair_weight(&g, &all, 5).unwrap(), 1.0, "{name}");
        assert_eq!(pseudo_census(&g, 5, 1.0).unwrap().total, 1, "{name}");
    }
    assert_eq!(
        exact_census(&fixture("fig5_exact").unwrap(), 5)
            .unwrap()
            .total,
        1
    );
    assert_eq!(
        exact_census(&fixture("fig5_pseudo_a").unwrap(), 5)
            .unwrap()
            .total,
        0
    );
}

#[test]
fn fig6_medians_and_classification() {
    let top = fixture("fig6_top").unwrap();
    let bottom = fixture("fig6_bottom").unwrap();
    let all: Vec<usize> = (0..5).collect();
    assert_eq!(median_pair_weight(&top, &all, 5).unwrap(), 200.0);
    assert_eq!(median_pair_weight(&bottom, &all, 5).unwrap(), 70.0);
    assert_eq!(pseudo_census(&top, 5, 200.0).unwrap().total, 1);
    assert_eq!(pseudo_census(&bottom, 5, 200.0).unwrap().total, 0);
    assert_eq!(pseudo_census(&top, 5, 200.0 + 1e-9).unwrap().total, 0);
    let max = top.max_weight().unwrap();
    assert_eq!(pseudo_census(&top, 5, max + 1.0).unwrap().total, 0);
}

#[test]
fn fig6_weighted_participation() {
    let g = fixture("fig6_top").unwrap();
    let c = weighted_participation_coefficient(&g, &ids(&g, &["a", "d", "e"]), 0.0).unwrap();
    assert_eq!(c, Coefficient::Defined((1000.0 + 300.0 + 225.0) / 2245.0));
}

#[test]
fn fig6_first_iteration_rejects_top() {
    let g = fixture("fig6_top").unwrap();
    let (next, rec) = run_iteration(&g, 5, 50.0).unwrap();
    assert_eq!(rec.threshold, 225.0);
    assert_eq!(rec.total, 0);
    assert_eq!(next.edge_count(), 0);
}

#[test]
fn two_k6_supernodes() {
    let g = fixture("two_k6_chaff").unwrap();
    let trace = run_pipeline(&g, 5, &PercentileSchedule::default()).unwrap();
    assert_eq!(trace.supernodes, (0..12).collect::<Vec<_>>());
    assert_eq!(trace.halt, HaltReason::Converged);
    assert_eq!(trace.iterations[0].total, 12);
    for v in 12..32 {
        assert!(trace
            .iterations
            .iter()
            .all(|r| r.vertex_participation[v] == 0));
    }
}

#[test]
fn k6_oracle_closed_form() {
    let t = brute_force_census(&Graph::complete(6), 4, CensusMode::Exact).unwrap();
    assert_eq!(t.total as u128, binomial(6, 4));
}
