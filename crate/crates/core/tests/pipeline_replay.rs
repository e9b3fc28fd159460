//! End-to-end runs of the proof replay on hand-checked instances.

use dicrit::{
    bidirected_complete, bidirected_join, directed_cycle, run_proof_pipeline, Digraph,
    PipelineError, PipelineMode,
};

#[test]
fn digon_replay() {
    let trace = run_proof_pipeline(&bidirected_complete(2), PipelineMode::Strict).unwrap();
    assert!(trace.steps_pass && trace.conclusive);
    assert_eq!(trace.k, 2);
    assert_eq!(trace.singleton_count, 2);
    assert_eq!(trace.matching_number, 0);
    assert_eq!(trace.component_count, 2);
    assert_eq!(trace.complement_components.len(), 2);
}

#[test]
fn k3_replay_matches_hand_computation() {
    let trace = run_proof_pipeline(&bidirected_complete(3), PipelineMode::Strict).unwrap();
    assert_eq!((trace.n, trace.k), (3, 3));
    // All classes are singletons, so U = V and W is empty.
    assert_eq!(trace.u_set.to_vec(), vec![0, 1, 2]);
    assert!(trace.w_set.is_empty());
    // Every pair is a digon: the auxiliary graph has no edges, everything
    // is missed, and each vertex is its own component.
    assert!(trace.aux_edges.is_empty());
    assert_eq!(trace.d_set.to_vec(), vec![0, 1, 2]);
    assert!(trace.a_set.is_empty() && trace.c_set.is_empty());
    assert_eq!(trace.component_count, 3);
    // chi(G[D_i]) = 1 = (1 + 1) / 2 for each singleton component.
    assert_eq!(trace.chi_components, vec![1, 1, 1]);
    assert!(trace.eq_chi_components.iter().all(|e| e.pass));
    // The complement is three isolated vertices.
    assert_eq!(trace.complement_components.len(), 3);
    assert!(trace.steps_pass);
}

#[test]
fn joined_triangles_replay_matches_hand_computation() {
    let g = bidirected_join(&directed_cycle(3), &directed_cycle(3));
    let trace = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
    assert_eq!((trace.n, trace.k), (6, 4));
    // Extreme colouring splits each triangle 2 + 1.
    assert_eq!(trace.singleton_count, 2);
    assert_eq!(trace.u_set.to_vec(), vec![0, 1, 2, 3, 4, 5]);
    // H is two disjoint undirected triangles.
    assert_eq!(
        trace.aux_edges,
        vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    );
    assert_eq!(trace.matching_number, 2); // (6 + 0 - 2) / 2
    assert_eq!(trace.component_count, 2);
    assert_eq!(trace.chi_components, vec![2, 2]); // (3 + 1) / 2 each
    assert!(trace.a_empty);
    assert_eq!(trace.complement_components.len(), 2);
    assert!(trace.steps_pass);
}

#[test]
fn every_missed_vertex_gets_an_optimal_colouring_with_its_singleton() {
    let g = bidirected_join(&directed_cycle(3), &directed_cycle(3));
    let trace = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
    assert_eq!(trace.missed_vertex_checks.len(), 6);
    for check in &trace.missed_vertex_checks {
        assert!(check.valid_colouring);
        assert_eq!(check.class_count, 4);
        assert!(check.has_missed_singleton);
        assert_eq!(check.matching.len(), 2);
    }
}

#[test]
fn join_of_digon_and_triangle_replay() {
    // k = 4 on n = 5 <= 2k - 2 = 6.
    let g = bidirected_join(&bidirected_complete(2), &directed_cycle(3));
    let trace = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
    assert_eq!((trace.n, trace.k), (5, 4));
    assert!(trace.steps_pass);
    assert!(trace.complement_components.len() >= 2);
}

#[test]
fn bound_violation_is_reported_with_the_failing_hypothesis() {
    let err = run_proof_pipeline(&directed_cycle(5), PipelineMode::Strict).unwrap_err();
    match err {
        PipelineError::HypothesesNotMet {
            n,
            k,
            vertex_critical,
            within_bound,
        } => {
            assert_eq!((n, k), (5, 2));
            assert!(vertex_critical);
            assert!(!within_bound);
            let msg = format!("{}", PipelineError::HypothesesNotMet { n, k, vertex_critical, within_bound });
            assert!(msg.contains("hypotheses not met"));
            assert!(msg.contains("2k - 2"));
        }
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn non_critical_input_is_rejected_in_strict_mode() {
    // Bidirected K3 plus an isolated vertex is not vertex-critical.
    let g = Digraph::new(4, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]);
    let err = run_proof_pipeline(&g, PipelineMode::Strict).unwrap_err();
    assert!(matches!(
        err,
        PipelineError::HypothesesNotMet {
            vertex_critical: false,
            ..
        }
    ));
}

#[test]
fn exploratory_mode_labels_traces_non_conclusive() {
    let g = directed_cycle(4);
    let trace = run_proof_pipeline(&g, PipelineMode::Exploratory).unwrap();
    assert!(!trace.conclusive);
    assert!(trace.vertex_critical);
    assert!(!trace.within_bound);
    assert!(!trace.steps_pass);

    // On an instance satisfying the hypotheses, exploratory output agrees
    // with the strict trace except for the conclusive flag.
    let g = bidirected_complete(3);
    let strict = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
    let explore = run_proof_pipeline(&g, PipelineMode::Exploratory).unwrap();
    assert!(strict.conclusive && !explore.conclusive);
    assert_eq!(strict.steps_pass, explore.steps_pass);
    assert_eq!(strict.d_set, explore.d_set);
}

#[test]
fn traces_serialize_deterministically() {
    let g = bidirected_join(&directed_cycle(3), &directed_cycle(3));
    let a = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
    let b = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
    let ser = |t: &dicrit::ProofTrace| serde_json::to_string(t).unwrap();
    assert_eq!(ser(&a), ser(&b));
}
