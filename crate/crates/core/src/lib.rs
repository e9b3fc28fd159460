//! Exact solvers and verifiers around the dichromatic number of digraphs.
//!
//! The centrepiece is a desk-scale, fully mechanical check of one fact:
//! **every vertex-critical digraph with dichromatic number `k` on at most
//! `2k - 2` vertices has a disconnected complement.** The crate provides
//!
//! - [`Digraph`] and [`UGraph`] with a line-oriented text format,
//!   complements, induced subdigraphs, acyclicity and weak components;
//! - an exact dichromatic-number solver ([`chi`]) with witness and
//!   extreme colourings ([`extreme_colouring`]);
//! - vertex- and arc-criticality checkers ([`criticality`]);
//! - maximum matching by blossom contraction ([`max_matching`]) and the
//!   Gallai-Edmonds decomposition with certificate verification
//!   ([`ge_decompose`], [`verify_ge_structure`]);
//! - a step-by-step proof replay producing a checkable [`ProofTrace`]
//!   ([`run_proof_pipeline`]);
//! - exhaustive enumeration of small digraphs and a theorem verifier over
//!   all of them ([`verify_theorem_up_to`]);
//! - brute-force reference implementations ([`oracle`]) that everything
//!   above is tested against.
//!
//! ```
//! use dicrit::{bidirected_complete, run_proof_pipeline, PipelineMode};
//!
//! let g = bidirected_complete(3);
//! let trace = run_proof_pipeline(&g, PipelineMode::Strict).unwrap();
//! assert!(trace.steps_pass);
//! assert_eq!(trace.complement_components.len(), 3);
//! ```

pub mod colouring;
pub mod criticality;
pub mod dichromatic;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod gallai_edmonds;
pub mod generators;
pub mod matching;
pub mod oracle;
pub mod pipeline;
pub mod ugraph;
pub mod verify;
pub mod vertex_set;

pub use colouring::{matching_to_colouring, Colouring, ColouringError};
pub use criticality::{criticality, is_critical, is_vertex_critical, Criticality};
pub use dichromatic::{
    chi, chi_with_witness, exchange_extremality_check, extreme_colouring, is_colourable,
    ExtremalityError,
};
pub use digraph::Digraph;
pub use enumerate::{
    canonical_form, enumerate_digraphs, labelled_digraph_count, EnumerateError,
    MAX_ENUMERATION_ORDER,
};
pub use error::ParseError;
pub use gallai_edmonds::{
    ge_decompose, is_factor_critical, verify_ge_structure, CertCheck, CertificateError,
    CertificateReport, GallaiEdmonds,
};
pub use generators::{bidirected_complete, bidirected_join, directed_cycle};
pub use matching::{max_matching, max_matching_missing, matching_number, Matching, MatchingError};
pub use pipeline::{
    build_auxiliary_graph, run_proof_pipeline, AuxiliaryGraph, EquationCheck, MissedVertexCheck,
    PipelineError, PipelineMode, ProofTrace,
};
pub use ugraph::UGraph;
pub use verify::{
    verify_theorem_up_to, Counterexample, InstanceSummary, OrderCounts, ScanMode,
    VerificationReport, VerifyOptions,
};
pub use vertex_set::VertexSet;
