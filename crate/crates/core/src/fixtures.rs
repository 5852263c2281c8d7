//! Built-in example graphs, transcribed from the worked figures they are
//! named after. Vertices carry the figure's labels; unnamed vertices are
//! labelled after the vertex they hang from (`v1.a`) or by their drawing
//! index (`x4`).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(name, description)` of every bundled fixture.
pub const FIXTURES: &[(&str, &str)] = &[
    (
        "fig1_G",
        "rich-club example, members {v1,v3,v5} at j=4, coefficient 0",
    ),
    ("fig1_Gprime", "fig1_G plus edge {v1,v5}, coefficient 1/3"),
    (
        "fig1_Gdoubleprime",
        "fig1_G plus triangle v1,v3,v5, coefficient 1",
    ),
    (
        "fig2",
        "Super rich-club example, two K4 blocks with xi(v,3)=3",
    ),
    ("fig3", "rich edge-club example, edges {u1,u2} and {u3,u5}"),
    ("fig5_exact", "exact K5"),
    ("fig5_pseudo_a", "K5 without {n1,n4} and {n0,n4}"),
    (
        "fig5_pseudo_b",
        "K5 without {n0,n4},{n2,n3},{n2,n4},{n0,n3}",
    ),
    ("fig6_top", "weighted pseudo-K5 with upper median 200"),
    ("fig6_bottom", "weighted 5-set with upper median 70"),
    ("two_k6_chaff", "two disjoint K6 plus 20 isolated vertices"),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

fn labelled(labels: &[&str], edges: &[(&str, &str, f64)]) -> Graph {
    let idx = |l: &str| {
        labels
            .iter()
            .position(|x| *x == l)
            .unwrap_or_else(|| panic!("fixture label {l}"))
    };
    Graph::from_edges(
        labels.len(),
        edges.iter().map(|&(a, b, w)| (idx(a), idx(b), w)),
    )
    .and_then(|g| g.with_labels(labels.iter().map(|s| s.to_string()).collect()))
    .expect("fixture is a valid graph")
}

fn unit<'a>(pairs: &[(&'a str, &'a str)]) -> Vec<(&'a str, &'a str, f64)> {
    pairs.iter().map(|&(a, b)| (a, b, 1.0)).collect()
}

const FIG1_LABELS: &[&str] = &[
    "v0", "v1", "v2", "v3", "v4", "v5", "v6", "v1.a", "v1.b", "v1.c", "v5.a", "v5.b", "v5.c",
    "v3.a", "v3.b",
];

const FIG1_EDGES: &[(&str, &str)] = &[
    ("v0", "v1"),
    ("v0", "v5"),
    ("v1", "v2"),
    ("v3", "v4"),
    ("v3", "v2"),
    ("v6", "v3"),
    ("v5", "v4"),
    ("v1", "v1.a"),
    ("v1", "v1.b"),
    ("v1", "v1.c"),
    ("v5", "v5.a"),
    ("v5", "v5.b"),
    ("v5", "v5.c"),
    ("v3", "v3.a"),
    ("v3", "v3.b"),
];

fn fig1(extra: &[(&'static str, &'static str)]) -> Graph {
    let mut pairs = FIG1_EDGES.to_vec();
    pairs.extend_from_slice(extra);
    labelled(FIG1_LABELS, &unit(&pairs))
}

fn fig2() -> Graph {
    let labels = [
        "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "v1.a", "v1.b", "v1.c",
        "v6.a", "v6.b", "v6.c",
    ];
    let pairs = [
        ("v1", "v2"),
        ("v1", "v3"),
        ("v1", "v6"),
        ("v2", "v4"),
        ("v3", "v5"),
        ("v4", "v6"),
        ("v6", "v5"),
        ("v1", "v1.a"),
        ("v1", "v1.b"),
        ("v1", "v1.c"),
        ("v6", "v6.a"),
        ("v6", "v6.b"),
        ("v6", "v6.c"),
        // block {v2, v4, v7, v8}
        ("v2", "v7"),
        ("v2", "v8"),
        ("v7", "v8"),
        ("v4", "v8"),
        ("v7", "v4"),
        // block {v3, v5, v9, v10}
        ("v3", "v9"),
        ("v3", "v10"),
        ("v9", "v5"),
        ("v5", "v10"),
        ("v9", "v10"),
    ];
    labelled(&labels, &unit(&pairs))
}

fn fig3() -> Graph {
    let labels = [
        "u1", "u2", "u3", "u4", "u5", "x0", "x4", "x6", "x7", "x8", "x10", "x11",
    ];
    let pairs = [
        ("x0", "u4"),
        ("u4", "u1"),
        ("x0", "u1"),
        ("u1", "u5"),
        ("u5", "u3"),
        ("u1", "u3"),
        ("u3", "x6"),
        ("u3", "x7"),
        ("u1", "x4"),
        ("u1", "x8"),
        ("u2", "x4"),
        ("u2", "x8"),
        ("x10", "x11"),
        ("x11", "u2"),
        ("u2", "x10"),
        ("u4", "u2"),
        ("u1", "u2"),
        ("u5", "x6"),
        ("u5", "x7"),
    ];
    labelled(&labels, &unit(&pairs))
}

const FIG5_LABELS: &[&str] = &["n0", "n1", "n2", "n3", "n4"];

fn fig5(pairs: &[(&'static str, &'static str)]) -> Graph {
    labelled(FIG5_LABELS, &unit(pairs))
}

fn matrix(labels: &[&str], text: &str) -> Graph {
    Graph::from_dense_matrix(text)
        .and_then(|g| g.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        .expect("fixture matrix is valid")
}

/// Weighted 5-vertex fixture whose upper-median pair weight is 200.
pub const FIG6_TOP_MATRIX: &str = "\
0 0 120 1000 300
0 0 400 0 0
120 400 0 0 200
1000 0 0 0 225
300 0 200 225 0
";

/// Weighted 5-vertex fixture whose upper-median pair weight is 70.
pub const FIG6_BOTTOM_MATRIX: &str = "\
0 5 0.5 100 0
5 0 70 6.99 0
0.5 70 0 500 111.22
100 6.99 500 0 98
0 0 111.22 98 0
";

fn two_k6_chaff() -> Graph {
    let mut edges = Vec::new();
    for base in [0, 6] {
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((base + u, base + v));
            }
        }
    }
    Graph::unweighted(32, edges).expect("valid fixture")
}

/// Looks up a bundled fixture by name.
pub fn fixture(name: &str) -> Result<Graph> {
    Ok(match name {
        "fig1_G" => fig1(&[]),
        "fig1_Gprime" => fig1(&[("v1", "v5")]),
        "fig1_Gdoubleprime" => fig1(&[("v1", "v5"), ("v1", "v3"), ("v3", "v5")]),
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig5_exact" => {
            Graph::complete(5).with_labels(FIG5_LABELS.iter().map(|s| s.to_string()).collect())?
        }
        "fig5_pseudo_a" => fig5(&[
            ("n0", "n1"),
            ("n0", "n3"),
            ("n0", "n2"),
            ("n1", "n2"),
            ("n1", "n3"),
            ("n2", "n3"),
            ("n2", "n4"),
            ("n3", "n4"),
        ]),
        "fig5_pseudo_b" => fig5(&[
            ("n0", "n1"),
            ("n0", "n2"),
            ("n1", "n2"),
            ("n1", "n3"),
            ("n1", "n4"),
            ("n3", "n4"),
        ]),
        "fig6_top" => matrix(&["a", "b", "c", "d", "e"], FIG6_TOP_MATRIX),
        "fig6_bottom" => matrix(&["u", "v", "x", "y", "z"], FIG6_BOTTOM_MATRIX),
        "two_k6_chaff" => two_k6_chaff(),
        other => return Err(Error::UnknownFixture(other.to_string())),
    })
}
