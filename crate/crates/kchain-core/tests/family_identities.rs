//! Cross-module identities over the whole subchain family at desk scale.
//! Wider sweeps (the formal acceptance runs) live in the CLI crate.

use std::collections::BTreeMap;

use kchain_core::chain_graphs::{
    build_subchain, end_degree_sum, enumerate_all_subchains, laplacian, ChainSpec,
};
use kchain_core::closed_forms::{
    gutman_chain, kirchhoff_subchain, mult_deg_kirchhoff_chain, spanning_trees_subchain,
    wiener_subchain,
};
use kchain_core::exact_linalg::resistance_matrix;
use kchain_core::invariant_oracles::full_report;
use kchain_core::spectral::decompose;
use kchain_core::{BigInt, Rational};

#[test]
fn oracles_equal_closed_forms_on_small_family() {
    for n in 1..=4 {
        for spec in enumerate_all_subchains(n).unwrap() {
            let report = full_report(&spec).unwrap();
            let d = end_degree_sum(&spec).value();
            let r = spec.r();
            assert_eq!(
                report.kirchhoff,
                kirchhoff_subchain(n, r, d).unwrap(),
                "kirchhoff mismatch at {spec:?}"
            );
            assert_eq!(
                report.spanning_trees,
                spanning_trees_subchain(n, r, d).unwrap(),
                "spanning trees mismatch at {spec:?}"
            );
            assert_eq!(
                BigInt::from(report.wiener),
                wiener_subchain(n, r),
                "wiener mismatch at {spec:?}"
            );
            if r == 0 {
                assert_eq!(report.mult_deg_kirchhoff, mult_deg_kirchhoff_chain(n));
                assert_eq!(BigInt::from(report.gutman), gutman_chain(n));
            }
        }
    }
}

#[test]
fn kirchhoff_depends_only_on_deletion_summary() {
    for n in 1..=5 {
        let mut by_summary: BTreeMap<(usize, u8), Rational> = BTreeMap::new();
        for spec in enumerate_all_subchains(n).unwrap() {
            let key = (spec.r(), end_degree_sum(&spec).value());
            let kf = full_report(&spec).unwrap().kirchhoff;
            match by_summary.get(&key) {
                None => {
                    by_summary.insert(key, kf);
                }
                Some(prev) => assert_eq!(*prev, kf, "summary {key:?} not well-defined at n={n}"),
            }
        }
    }
}

#[test]
fn wiener_depends_only_on_deletion_count() {
    for n in 1..=6 {
        for spec in enumerate_all_subchains(n).unwrap() {
            let g = build_subchain(&spec);
            let w = kchain_core::invariant_oracles::wiener(&g).unwrap();
            assert_eq!(BigInt::from(w), wiener_subchain(n, spec.r()));
        }
    }
}

#[test]
fn block_product_identity_over_all_deletion_sets() {
    for n in 1..=6 {
        for spec in enumerate_all_subchains(n).unwrap() {
            // decompose checks the characteristic-polynomial product
            // identity internally and errors on violation.
            decompose(&spec).unwrap();
        }
    }
}

#[test]
fn resistance_is_a_metric_on_the_family() {
    for n in 1..=6 {
        for spec in enumerate_all_subchains(n).unwrap() {
            let g = build_subchain(&spec);
            let r = resistance_matrix(&laplacian(&g).to_rational()).unwrap();
            let v = g.num_vertices();
            for i in 0..v {
                assert!(num_traits::Zero::is_zero(&r[i][i]));
                for j in i + 1..v {
                    assert_eq!(r[i][j], r[j][i]);
                    assert!(
                        !num_traits::Zero::is_zero(&r[i][j]),
                        "distinct vertices at resistance 0"
                    );
                }
            }
            for i in 0..v {
                for j in 0..v {
                    for k in 0..v {
                        if i != j && j != k && i != k {
                            assert!(
                                r[i][j] <= &r[i][k] + &r[k][j],
                                "triangle inequality fails at {spec:?} ({i},{j},{k})"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn connectivity_is_exhaustive_at_desk_scale() {
    for n in 1..=8 {
        for spec in enumerate_all_subchains(n).unwrap() {
            assert!(build_subchain(&spec).is_connected(), "disconnected {spec:?}");
        }
    }
}

#[test]
fn ground_vertex_choice_does_not_change_spanning_trees() {
    for spec in [
        ChainSpec::new(3, []).unwrap(),
        ChainSpec::new(3, [1, 2, 4]).unwrap(),
        ChainSpec::new(4, [2, 3]).unwrap(),
    ] {
        let l = laplacian(&build_subchain(&spec));
        let reference = l.delete_row_col(0).det();
        for k in 1..l.size() {
            assert_eq!(l.delete_row_col(k).det(), reference);
        }
    }
}
