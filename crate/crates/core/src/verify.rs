//! Exhaustive verification at small orders: every vertex-critical digraph
//! on `n <= 2k - 2` vertices must have a disconnected complement.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::criticality::vertex_critical_with_chi;
use crate::dichromatic::chi;
use crate::digraph::Digraph;
use crate::enumerate::{
    canonical_extensions, canonical_level, code_of, digraph_from_code, enumerate_digraphs,
    labelled_digraph_count, EnumerateError, MAX_ENUMERATION_ORDER,
};
use crate::pipeline::{run_proof_pipeline, PipelineError, PipelineMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Count vertex-critical digraphs at every order (the default).
    Census,
    /// Only look for counterexamples: digraphs whose complement is already
    /// disconnected cannot violate the theorem and are skipped wholesale,
    /// so the vertex-critical census column stays empty.
    HuntOnly,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Check every order `0..=max_n`. At most [`MAX_ENUMERATION_ORDER`].
    pub max_n: usize,
    /// Enumerate one representative per isomorphism class instead of all
    /// labelled digraphs.
    pub dedup: bool,
    /// Worker count; 1 means fully sequential.
    pub jobs: usize,
    /// Run the whole proof pipeline on every in-bound instance instead of
    /// only checking the complement.
    pub full_trace: bool,
    pub scan: ScanMode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 4,
            dedup: false,
            jobs: 1,
            full_trace: false,
            scan: ScanMode::Census,
        }
    }
}

/// Counts for one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub n: usize,
    pub scanned: u64,
    /// `None` under [`ScanMode::HuntOnly`], where the census is skipped.
    pub vertex_critical: Option<u64>,
    /// Vertex-critical digraphs with `n <= 2k - 2`.
    pub in_bound: u64,
    /// In-bound instances whose checks all passed.
    pub verified: u64,
}

/// One verified in-bound instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub k: usize,
    pub code: u64,
    pub digraph: String,
    pub complement_components: usize,
    /// Present when the full pipeline ran.
    pub trace_pass: Option<bool>,
}

/// A theorem violation. The list must stay empty; anything in it would be
/// a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: usize,
    pub code: u64,
    pub digraph: String,
    pub complement_components: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub max_n: usize,
    pub dedup: bool,
    pub full_trace: bool,
    pub counts: Vec<OrderCounts>,
    pub instances: Vec<InstanceSummary>,
    pub counterexamples: Vec<Counterexample>,
    /// True exactly when the counterexample list is empty.
    pub pass: bool,
    #[serde(skip)]
    pub elapsed_per_order: Vec<(usize, Duration)>,
    #[serde(skip)]
    pub elapsed_total: Duration,
}

#[derive(Debug, Clone, Default)]
struct Partial {
    scanned: u64,
    vertex_critical: u64,
    in_bound: u64,
    verified: u64,
    instances: Vec<InstanceSummary>,
    counterexamples: Vec<Counterexample>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.scanned += other.scanned;
        self.vertex_critical += other.vertex_critical;
        self.in_bound += other.in_bound;
        self.verified += other.verified;
        self.instances.extend(other.instances);
        self.counterexamples.extend(other.counterexamples);
    }
}

/// Scans every digraph up to `max_n` and checks the theorem on each
/// vertex-critical one within the bound. The report is deterministic for
/// fixed options: shard results are merged and re-sorted by arc code.
pub fn verify_theorem_up_to(opts: &VerifyOptions) -> Result<VerificationReport, EnumerateError> {
    if opts.max_n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::UnsupportedOrder {
            n: opts.max_n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut instances = Vec::new();
    let mut counterexamples = Vec::new();
    let mut elapsed_per_order = Vec::new();

    for n in 0..=opts.max_n {
        let order_start = Instant::now();
        let mut partial = scan_order(n, opts);
        partial.instances.sort_by_key(|i| i.code);
        partial.counterexamples.sort_by_key(|c| c.code);
        counts.push(OrderCounts {
            n,
            scanned: partial.scanned,
            vertex_critical: match opts.scan {
                ScanMode::Census => Some(partial.vertex_critical),
                ScanMode::HuntOnly => None,
            },
            in_bound: partial.in_bound,
            verified: partial.verified,
        });
        instances.extend(partial.instances);
        counterexamples.extend(partial.counterexamples);
        elapsed_per_order.push((n, order_start.elapsed()));
    }

    let pass = counterexamples.is_empty();
    Ok(VerificationReport {
        max_n: opts.max_n,
        dedup: opts.dedup,
        full_trace: opts.full_trace,
        counts,
        instances,
        counterexamples,
        pass,
        elapsed_per_order,
        elapsed_total: start.elapsed(),
    })
}

fn scan_order(n: usize, opts: &VerifyOptions) -> Partial {
    if opts.jobs <= 1 {
        let mut partial = Partial::default();
        for g in enumerate_digraphs(n, opts.dedup).expect("order checked by caller") {
            scan_one(&g, opts, &mut partial);
        }
        return partial;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("worker pool");
    pool.install(|| {
        if opts.dedup && n >= 2 {
            // Shard over the canonical digraphs one order down; each
            // worker extends and filters its own parents.
            let parents = canonical_level(n - 1);
            parents
                .par_iter()
                .map(|parent| {
                    let mut partial = Partial::default();
                    for g in canonical_extensions(parent) {
                        scan_one(&g, opts, &mut partial);
                    }
                    partial
                })
                .reduce(Partial::default, |mut a, b| {
                    a.absorb(b);
                    a
                })
        } else if n >= 2 {
            // Shard the code space by fixing the low arc-code bits.
            let bits = n * (n - 1);
            let shard_bits = shard_bits_for(opts.jobs, bits);
            let shards = 1u64 << shard_bits;
            let per_shard = labelled_digraph_count(n) >> shard_bits;
            (0..shards)
                .into_par_iter()
                .map(|shard| {
                    let mut partial = Partial::default();
                    for high in 0..per_shard {
                        let code = shard | high << shard_bits;
                        scan_one(&digraph_from_code(n, code), opts, &mut partial);
                    }
                    partial
                })
                .reduce(Partial::default, |mut a, b| {
                    a.absorb(b);
                    a
                })
        } else {
            let mut partial = Partial::default();
            for g in enumerate_digraphs(n, opts.dedup).expect("order checked by caller") {
                scan_one(&g, opts, &mut partial);
            }
            partial
        }
    })
}

fn shard_bits_for(jobs: usize, bits: usize) -> usize {
    // A few shards per worker keeps the load even.
    let mut shard_bits = 0;
    while 1usize << shard_bits < 4 * jobs {
        shard_bits += 1;
    }
    shard_bits.min(bits)
}

fn scan_one(g: &Digraph, opts: &VerifyOptions, partial: &mut Partial) {
    partial.scanned += 1;
    let n = g.n();
    if n == 0 {
        return;
    }
    if opts.scan == ScanMode::HuntOnly && g.complement().weak_components().len() >= 2 {
        return;
    }
    let k = chi(g);
    if !vertex_critical_with_chi(g, k) {
        return;
    }
    partial.vertex_critical += 1;
    if n + 2 > 2 * k {
        return;
    }
    partial.in_bound += 1;

    let components = g.complement().weak_components().len();
    let mut failures = Vec::new();
    if components < 2 {
        failures.push("complement is connected".to_string());
    }
    if n < k {
        failures.push(format!("n = {n} smaller than chi = {k}"));
    }
    let trace_pass = if opts.full_trace {
        match run_proof_pipeline(g, PipelineMode::Strict) {
            Ok(trace) => Some(trace.steps_pass),
            Err(PipelineError::TheoremViolation { trace }) => {
                let failed: Vec<&str> = failed_steps(&trace);
                failures.push(format!("pipeline checks failed: {}", failed.join(", ")));
                Some(false)
            }
            Err(err) => {
                failures.push(format!("pipeline refused hypotheses: {err}"));
                Some(false)
            }
        }
    } else {
        None
    };

    let code = code_of(g);
    if failures.is_empty() {
        partial.verified += 1;
        partial.instances.push(InstanceSummary {
            n,
            k,
            code,
            digraph: g.to_text(),
            complement_components: components,
            trace_pass,
        });
    } else {
        partial.counterexamples.push(Counterexample {
            n,
            k,
            code,
            digraph: g.to_text(),
            complement_components: components,
            detail: failures.join("; "),
        });
    }
}

fn failed_steps(trace: &crate::pipeline::ProofTrace) -> Vec<&'static str> {
    let mut failed = Vec::new();
    if !trace.singletons_ok {
        failed.push("extreme-colouring");
    }
    if !trace.exchange_stable {
        failed.push("exchange-stability");
    }
    if !trace.missed_ok {
        failed.push("missed-vertex-colourings");
    }
    if !trace.eq_chi_c.pass || !trace.c_size_even {
        failed.push("chi-c");
    }
    if !trace.eq_chi_components.iter().all(|e| e.pass) || !trace.component_sizes_odd {
        failed.push("chi-components");
    }
    if !trace.component_count_ok {
        failed.push("component-count");
    }
    if !trace.separation_ok {
        failed.push("separation");
    }
    if !trace.eq_chi_without_a.pass || !trace.additivity_ok {
        failed.push("chi-without-a");
    }
    if !trace.eq_chi_total.pass || !trace.eq_chi_u.pass {
        failed.push("chi-total");
    }
    if !trace.chi_preserved || !trace.a_empty {
        failed.push("a-empty");
    }
    if !trace.disconnected {
        failed.push("disconnected");
    }
    failed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bidirected_complete;

    #[test]
    fn verify_up_to_three_passes() {
        let report = verify_theorem_up_to(&VerifyOptions {
            max_n: 3,
            ..Default::default()
        })
        .unwrap();
        assert!(report.pass);
        assert_eq!(
            report.counts.iter().map(|c| c.scanned).collect::<Vec<_>>(),
            vec![1, 1, 4, 64]
        );
        // The bidirected K3 shows up among the verified instances.
        let k3 = bidirected_complete(3).to_text();
        assert!(report.instances.iter().any(|i| i.digraph == k3));
        // n = 2 contributes exactly the digon.
        assert_eq!(report.counts[2].in_bound, 1);
        assert_eq!(report.counts[2].vertex_critical, Some(1));
    }

    #[test]
    fn hunt_mode_finds_no_counterexamples_either() {
        let report = verify_theorem_up_to(&VerifyOptions {
            max_n: 4,
            scan: ScanMode::HuntOnly,
            ..Default::default()
        })
        .unwrap();
        assert!(report.pass);
        assert!(report.counts.iter().all(|c| c.vertex_critical.is_none()));
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn parallel_and_sequential_reports_agree() {
        let seq = verify_theorem_up_to(&VerifyOptions {
            max_n: 4,
            full_trace: true,
            ..Default::default()
        })
        .unwrap();
        let par = verify_theorem_up_to(&VerifyOptions {
            max_n: 4,
            full_trace: true,
            jobs: 3,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(seq.counts, par.counts);
        assert_eq!(seq.instances, par.instances);
        assert_eq!(seq.counterexamples, par.counterexamples);
        assert!(seq.pass);
    }

    #[test]
    fn dedup_census_is_smaller_but_consistent() {
        let labelled = verify_theorem_up_to(&VerifyOptions {
            max_n: 3,
            ..Default::default()
        })
        .unwrap();
        let dedup = verify_theorem_up_to(&VerifyOptions {
            max_n: 3,
            dedup: true,
            ..Default::default()
        })
        .unwrap();
        assert!(dedup.pass);
        assert_eq!(
            dedup.counts.iter().map(|c| c.scanned).collect::<Vec<_>>(),
            vec![1, 1, 3, 16]
        );
        // Same number of isomorphism classes among verified instances.
        use crate::enumerate::canonical_form;
        use std::collections::HashSet;
        let classes: HashSet<String> = labelled
            .instances
            .iter()
            .map(|i| canonical_form(&i.digraph.parse().unwrap()).to_text())
            .collect();
        let dedup_classes: HashSet<String> =
            dedup.instances.iter().map(|i| i.digraph.clone()).collect();
        assert_eq!(classes, dedup_classes);
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(verify_theorem_up_to(&VerifyOptions {
            max_n: 9,
            ..Default::default()
        })
        .is_err());
    }
}
