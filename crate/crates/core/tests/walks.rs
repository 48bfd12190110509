//! Walk censuses on random graphs against depth-first enumeration.

mod common;

use proptest::prelude::*;
use zeon::spectra::{self, Spectrum};
use zeon::verify::{self, VerifyOptions};
use zeon::{oracle, Graph, Labeling, Zeon};

fn graph(max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_m, 0.2f64..0.9, any::<u64>()).prop_map(|(m, p, seed)| Graph::random(m, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn path_totals_are_symmetric(g in graph(7), k in 1usize..7) {
        let k = k.min(g.m());
        for i in 1..=g.m() {
            for j in i + 1..=g.m() {
                prop_assert_eq!(oracle::paths(&g, i, j, k).total(), oracle::paths(&g, j, i, k).total());
            }
        }
    }

    #[test]
    fn exponential_diagonal_counts_cycles(g in graph(7)) {
        for v in 1..=g.m() {
            let c = spectra::cycle_census_from_exp(&g, v).unwrap();
            prop_assert!(c.same_counts(&oracle::all_cycles(&g, v)));
        }
    }

    #[test]
    fn symmetric_powers_split(g in graph(6)) {
        prop_assert!(verify::check_symmetric_nil_structure(&g).is_ok());
    }

    #[test]
    fn eigenvalue_dual_part_squares_to_zero(g in graph(7), perm_seed in any::<u64>()) {
        let mut f: Vec<f64> = (1..=g.m()).map(|i| i as f64).collect();
        let k = (perm_seed as usize) % g.m();
        f.rotate_left(k);
        let lab = Labeling::f(f).unwrap();
        let spec = Spectrum::laplacian(&g, &lab).unwrap();
        for v in 1..=g.m() {
            let (lambda, mu) = spec.eigenpair(v).unwrap();
            let d = lambda.dual_part();
            prop_assert!(d.pow(2).is_zero());
            prop_assert!((&Zeon::generator(v) * &d).is_zero());
            let r = spec.matrix.mul_vec(&mu).unwrap().sub(&mu.scale(&lambda));
            prop_assert!(r.max_abs() < 1e-8);
            let back = spectra::eigenvalue_from_eigenvector(&g, &lab, v, &mu);
            prop_assert!(back.dist(&lambda) < 1e-9);
        }
    }

    #[test]
    fn row_sums_hold(g in graph(8)) {
        for v in 1..=g.m() {
            prop_assert!(spectra::row_sum(&g, v).unwrap().all_ok());
        }
    }
}

#[test]
fn random_corpus_verifies() {
    for g in common::random_corpus().iter().take(12) {
        let r = verify::verify_graph(g, &VerifyOptions::default()).unwrap();
        assert!(r.all_passed(), "{g:?}: {:?}", r.first_failure());
    }
}

#[test]
fn q_expectation_matches_cycle_formula() {
    for g in common::random_corpus().iter().take(10) {
        let q = Labeling::identity_q(g.m());
        for v in 1..=g.m() {
            let got = spectra::q_expectation(g, &q, v).unwrap();
            let want = spectra::q_expectation_formula(g, &q, v);
            assert!(got.dist(&want) < 1e-8, "{g:?} v={v}");
        }
    }
}

#[test]
fn small_graph_counts() {
    assert_eq!(Graph::non_isomorphic(5).len(), 34);
    assert_eq!(Graph::all_labeled(5).count(), 1024);
    let k5 = Graph::complete(5);
    assert_eq!(oracle::cycles(&k5, 1, 5).total(), 24);
    let c = spectra::walk_census_from_powers(&k5, 5, 1, 1).unwrap();
    assert_eq!(c.total(), 24);
}
