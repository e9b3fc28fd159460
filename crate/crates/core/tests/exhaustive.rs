//! Exhaustive sweeps over all labelled digraphs at small orders.

use dicrit::{
    chi, criticality, enumerate_digraphs, extreme_colouring, is_vertex_critical,
    labelled_digraph_count, verify_theorem_up_to, VerifyOptions,
};
use rayon::prelude::*;

#[test]
fn critical_implies_vertex_critical_up_to_n4() {
    for n in 1..=4 {
        for g in enumerate_digraphs(n, false).unwrap() {
            let c = criticality(&g);
            if c.critical {
                assert!(c.vertex_critical, "digraph: {}", g.to_text());
            }
        }
    }
}

#[test]
fn critical_implies_vertex_critical_at_n5() {
    let count = labelled_digraph_count(5);
    let failures: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|code| {
            let g = dicrit::enumerate::digraph_from_code(5, code);
            let c = criticality(&g);
            if c.critical && !c.vertex_critical {
                Some(g.to_text())
            } else {
                None
            }
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn vertex_critical_in_bound_digraphs_have_two_singletons_up_to_n4() {
    // Every vertex-critical digraph with n <= 2k - 2 must have at least
    // two singleton classes in any extreme colouring, and at least k
    // vertices overall.
    for n in 1..=4 {
        for g in enumerate_digraphs(n, false).unwrap() {
            let k = chi(&g);
            if !is_vertex_critical(&g) {
                continue;
            }
            assert!(g.n() >= k);
            if g.n() + 2 <= 2 * k {
                assert!(
                    extreme_colouring(&g).singleton_count() >= 2,
                    "digraph: {}",
                    g.to_text()
                );
            }
        }
    }
}

#[test]
fn verify_full_trace_up_to_n4() {
    let report = verify_theorem_up_to(&VerifyOptions {
        max_n: 4,
        full_trace: true,
        jobs: 2,
        ..Default::default()
    })
    .unwrap();
    assert!(report.pass);
    assert!(report
        .instances
        .iter()
        .all(|i| i.trace_pass == Some(true)));
    assert_eq!(
        report.counts.iter().map(|c| c.scanned).collect::<Vec<_>>(),
        vec![1, 1, 4, 64, 4096]
    );
}

#[test]
fn verify_dedup_counts_match_known_census() {
    let report = verify_theorem_up_to(&VerifyOptions {
        max_n: 5,
        dedup: true,
        jobs: 2,
        ..Default::default()
    })
    .unwrap();
    assert!(report.pass);
    assert_eq!(
        report.counts.iter().map(|c| c.scanned).collect::<Vec<_>>(),
        vec![1, 1, 3, 16, 218, 9608]
    );
}
