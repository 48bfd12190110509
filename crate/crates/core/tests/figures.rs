//! Worked graph examples with printed eigenvalues and exponentials.

mod common;

use common::rational;
use zeon::spectra::{self, Spectrum};
use zeon::{oracle, Graph, Labeling, Zeon};

fn seven_vertex() -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=6).map(|i| (i, 7)).collect();
    edges.extend([(1, 3), (1, 4), (1, 6), (2, 6), (3, 5), (4, 5), (5, 6)]);
    Graph::from_edges(7, &edges).unwrap()
}

fn ten_vertex() -> Graph {
    Graph::from_edges(
        10,
        &[
            (1, 2),
            (1, 4),
            (1, 6),
            (1, 8),
            (1, 9),
            (1, 10),
            (6, 8),
            (6, 9),
            (8, 9),
            (9, 10),
            (2, 5),
            (5, 9),
            (2, 3),
            (4, 7),
        ],
    )
    .unwrap()
}

/// `label(v) + Σ (−1)^{|I|} count(I) / ϰ_v(I)` over DFS cycles at `v`.
fn eigenvalue_from_cycles(g: &Graph, lab: &Labeling, v: usize) -> Zeon {
    let mut out = Zeon::scalar(lab.value(v));
    for (b, n) in &oracle::all_cycles(g, v).table {
        let sign = if b.grade() % 2 == 0 { 1.0 } else { -1.0 };
        out += &Zeon::term(*b, sign * *n as f64 / spectra::kappa_factor(lab, v, *b));
    }
    out
}

fn seven_lambda() -> Zeon {
    rational(
        6.0,
        &[
            (&[1, 7], 1, 2),
            (&[2, 7], 1, 4),
            (&[3, 7], 1, 3),
            (&[4, 7], 1, 3),
            (&[5, 7], 1, 2),
            (&[6, 7], 1, 2),
            (&[1, 3, 7], -1, 3),
            (&[1, 4, 7], -1, 3),
            (&[1, 6, 7], -1, 2),
            (&[2, 6, 7], -1, 4),
            (&[3, 5, 7], -1, 3),
            (&[4, 5, 7], -1, 3),
            (&[5, 6, 7], -1, 2),
            (&[1, 2, 6, 7], 1, 8),
            (&[1, 3, 4, 7], 1, 9),
            (&[1, 3, 5, 7], 1, 6),
            (&[1, 3, 6, 7], 1, 6),
            (&[1, 4, 5, 7], 1, 6),
            (&[1, 4, 6, 7], 1, 6),
            (&[1, 5, 6, 7], 1, 4),
            (&[2, 5, 6, 7], 1, 8),
            (&[3, 4, 5, 7], 1, 9),
            (&[3, 5, 6, 7], 1, 6),
            (&[4, 5, 6, 7], 1, 6),
            (&[1, 2, 3, 6, 7], -1, 24),
            (&[1, 2, 4, 6, 7], -1, 24),
            (&[1, 3, 4, 5, 7], -2, 9),
            (&[1, 3, 5, 6, 7], -1, 3),
            (&[1, 4, 5, 6, 7], -1, 3),
            (&[2, 3, 5, 6, 7], -1, 24),
            (&[2, 4, 5, 6, 7], -1, 24),
            (&[1, 2, 3, 5, 6, 7], 1, 24),
            (&[1, 2, 4, 5, 6, 7], 1, 24),
            (&[1, 3, 4, 5, 6, 7], 1, 6),
            (&[1, 2, 3, 4, 5, 6, 7], -1, 36),
        ],
    )
}

fn seven_exp_diagonal() -> Zeon {
    rational(
        1.0,
        &[
            (&[1, 7], 1, 2),
            (&[2, 7], 1, 2),
            (&[3, 7], 1, 2),
            (&[4, 7], 1, 2),
            (&[5, 7], 1, 2),
            (&[6, 7], 1, 2),
            (&[1, 3, 7], 1, 3),
            (&[1, 4, 7], 1, 3),
            (&[1, 6, 7], 1, 3),
            (&[2, 6, 7], 1, 3),
            (&[3, 5, 7], 1, 3),
            (&[4, 5, 7], 1, 3),
            (&[5, 6, 7], 1, 3),
            (&[1, 2, 6, 7], 1, 12),
            (&[1, 3, 4, 7], 1, 12),
            (&[1, 3, 5, 7], 1, 12),
            (&[1, 3, 6, 7], 1, 12),
            (&[1, 4, 5, 7], 1, 12),
            (&[1, 4, 6, 7], 1, 12),
            (&[1, 5, 6, 7], 1, 12),
            (&[2, 5, 6, 7], 1, 12),
            (&[3, 4, 5, 7], 1, 12),
            (&[3, 5, 6, 7], 1, 12),
            (&[4, 5, 6, 7], 1, 12),
            (&[1, 2, 3, 6, 7], 1, 60),
            (&[1, 2, 4, 6, 7], 1, 60),
            (&[1, 3, 4, 5, 7], 1, 15),
            (&[1, 3, 5, 6, 7], 1, 15),
            (&[1, 4, 5, 6, 7], 1, 15),
            (&[2, 3, 5, 6, 7], 1, 60),
            (&[2, 4, 5, 6, 7], 1, 60),
            (&[1, 2, 3, 5, 6, 7], 1, 180),
            (&[1, 2, 4, 5, 6, 7], 1, 180),
            (&[1, 3, 4, 5, 6, 7], 1, 60),
            (&[1, 2, 3, 4, 5, 6, 7], 1, 630),
        ],
    )
}

fn ten_lambda_6() -> Zeon {
    rational(
        6.0,
        &[
            (&[1, 2], 1, 3),
            (&[1, 4], 1, 4),
            (&[1, 6], 1, 3),
            (&[1, 8], 1, 3),
            (&[1, 9], 1, 1),
            (&[1, 10], 1, 4),
            (&[1, 6, 8], -2, 9),
            (&[1, 6, 9], -2, 3),
            (&[1, 8, 9], -2, 3),
            (&[1, 9, 10], -1, 2),
            (&[1, 2, 5, 9], 1, 6),
            (&[1, 6, 8, 9], 2, 3),
            (&[1, 6, 9, 10], 1, 6),
            (&[1, 8, 9, 10], 1, 6),
            (&[1, 2, 5, 6, 9], -1, 18),
            (&[1, 2, 5, 8, 9], -1, 18),
            (&[1, 2, 5, 9, 10], -1, 24),
            (&[1, 6, 8, 9, 10], -1, 9),
            (&[1, 2, 5, 6, 8, 9], 1, 27),
        ],
    )
}

fn ten_lambda_5() -> Zeon {
    rational(
        5.0,
        &[
            (&[1, 9], -1, 1),
            (&[5, 9], 1, 3),
            (&[6, 9], 1, 2),
            (&[8, 9], 1, 2),
            (&[9, 10], 1, 3),
            (&[1, 6, 9], 1, 1),
            (&[1, 8, 9], 1, 1),
            (&[1, 9, 10], 2, 3),
            (&[6, 8, 9], -1, 2),
            (&[1, 2, 5, 9], -1, 3),
            (&[1, 6, 8, 9], -3, 2),
            (&[1, 6, 9, 10], -1, 3),
            (&[1, 8, 9, 10], -1, 3),
            (&[1, 2, 5, 6, 9], 1, 6),
            (&[1, 2, 5, 8, 9], 1, 6),
            (&[1, 2, 5, 9, 10], 1, 9),
            (&[1, 6, 8, 9, 10], 1, 3),
            (&[1, 2, 5, 6, 8, 9], -1, 6),
        ],
    )
}

#[test]
fn seven_vertex_reconstruction_is_consistent() {
    let g = seven_vertex();
    assert_eq!(g.degrees(), vec![4, 2, 3, 3, 4, 4, 6]);
    let lab = Labeling::degree(&g);
    assert!(lab.is_unique(7));
    assert!(eigenvalue_from_cycles(&g, &lab, 7).dist(&seven_lambda()) < 1e-12);
}

#[test]
fn seven_vertex_eigenvalue() {
    let g = seven_vertex();
    let lambda = Spectrum::laplacian(&g, &Labeling::degree(&g)).unwrap().eigenvalue(7).unwrap();
    assert!(lambda.dist(&seven_lambda()) < 1e-9, "{lambda}");
}

#[test]
fn seven_vertex_exponential_diagonal() {
    let g = seven_vertex();
    let e = spectra::nilpotent_adjacency(&g).unwrap().exp().unwrap();
    assert!(e[(6, 6)].dist(&seven_exp_diagonal()) < 1e-12, "{}", e[(6, 6)]);
    let from_exp = spectra::cycle_census_from_exp(&g, 7).unwrap();
    assert!(from_exp.same_counts(&oracle::all_cycles(&g, 7)));
}

#[test]
fn ten_vertex_reconstruction_is_consistent() {
    let g = ten_vertex();
    let lab = Labeling::degree(&g);
    assert_eq!(g.degree(1), 6);
    assert_eq!(g.degree(9), 5);
    assert!(lab.is_unique(1) && lab.is_unique(9));
    assert!(eigenvalue_from_cycles(&g, &lab, 1).dist(&ten_lambda_6()) < 1e-12);
    assert!(eigenvalue_from_cycles(&g, &lab, 9).dist(&ten_lambda_5()) < 1e-12);
}

#[test]
fn ten_vertex_eigenvalues() {
    let g = ten_vertex();
    let spec = Spectrum::laplacian(&g, &Labeling::degree(&g)).unwrap();
    let l6 = spec.eigenvalue(1).unwrap();
    assert!(l6.dist(&ten_lambda_6()) < 1e-9, "{l6}");
    let l5 = spec.eigenvalue(9).unwrap();
    assert!(l5.dist(&ten_lambda_5()) < 1e-9, "{l5}");
}

#[test]
fn ten_vertex_repeated_degree_is_rejected() {
    let g = ten_vertex();
    let spec = Spectrum::laplacian(&g, &Labeling::degree(&g)).unwrap();
    // Vertices 2 and 6 share degree 3.
    assert!(spec.eigenvalue(2).is_err());
}
