//! Text and JSON rendering for every subcommand.
//!
//! Text output is line-oriented and stable; structured output is a single
//! self-describing JSON document per invocation, serialized with sorted
//! keys so that parsing and re-serializing reproduces it byte for byte.

use std::fmt::Write as _;

use dicrit::{
    Colouring, CertificateReport, Criticality, GallaiEdmonds, ProofTrace, UGraph,
    VerificationReport, VertexSet,
};
use serde_json::{json, Value};

pub const FORMAT_VERSION: u64 = 1;

pub fn print_json(doc: Value) {
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable document"));
}

fn classes_inline(c: &Colouring) -> String {
    if c.class_count() == 0 {
        return "(none)".to_string();
    }
    c.classes()
        .iter()
        .map(|class| class.to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn set_or_empty(s: VertexSet) -> String {
    if s.is_empty() {
        "(empty)".to_string()
    } else {
        s.to_string()
    }
}

pub fn chi_text(k: usize, witness: &Colouring) -> String {
    let mut out = format!("chi = {k}\n");
    let lines = witness.to_string();
    if !lines.is_empty() {
        out.push_str(&lines);
        out.push('\n');
    }
    out
}

pub fn chi_json(n: usize, k: usize, witness: &Colouring) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "kind": "chi",
        "n": n,
        "chi": k,
        "colouring": witness,
    })
}

pub fn critical_text(c: &Criticality) -> String {
    format!(
        "chi = {}\nvertex-critical: {}\ncritical: {}\n",
        c.k,
        yes_no(c.vertex_critical),
        yes_no(c.critical)
    )
}

pub fn critical_json(n: usize, c: &Criticality) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "kind": "criticality",
        "n": n,
        "chi": c.k,
        "vertex_critical": c.vertex_critical,
        "critical": c.critical,
    })
}

pub fn ge_text(h: &UGraph, nu: usize, dec: &GallaiEdmonds, cert: &CertificateReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", h.n());
    let _ = writeln!(out, "nu = {nu}");
    let _ = writeln!(out, "D: {}", set_or_empty(dec.d_set));
    let _ = writeln!(out, "A: {}", set_or_empty(dec.a_set));
    let _ = writeln!(out, "C: {}", set_or_empty(dec.c_set));
    let _ = writeln!(out, "c = {}", dec.component_count());
    for (i, comp) in dec.components.iter().enumerate() {
        let _ = writeln!(out, "component {}: {comp}", i + 1);
    }
    for check in &cert.checks {
        let _ = writeln!(out, "check {}: {} ({})", check.name, pass_fail(check.pass), check.detail);
    }
    let _ = writeln!(out, "verdict: {}", if cert.pass { "PASS" } else { "FAIL" });
    out
}

pub fn ge_json(h: &UGraph, nu: usize, dec: &GallaiEdmonds, cert: &CertificateReport) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "kind": "gallai_edmonds",
        "n": h.n(),
        "nu": nu,
        "d": dec.d_set,
        "a": dec.a_set,
        "c": dec.c_set,
        "components": dec.components,
        "component_count": dec.component_count(),
        "certificate": cert,
    })
}

pub fn trace_text(t: &ProofTrace) -> String {
    let mut out = String::new();
    let bound = 2 * t.k as i64 - 2;
    let _ = writeln!(
        out,
        "proof replay: n = {}, k = {}, bound 2k - 2 = {bound}{}",
        t.n,
        t.k,
        if t.conclusive { "" } else { " (exploratory)" }
    );
    let _ = writeln!(
        out,
        "hypotheses: vertex-critical {}, within bound {}",
        yes_no(t.vertex_critical),
        yes_no(t.within_bound)
    );

    let _ = writeln!(
        out,
        "step extreme-colouring: {} (singletons = {})",
        pass_fail(t.singletons_ok),
        t.singleton_count
    );
    let _ = writeln!(out, "  P = {}", classes_inline(&t.extreme));
    let _ = writeln!(out, "step exchange-stability: {}", pass_fail(t.exchange_stable));
    let _ = writeln!(out, "step auxiliary-graph: recorded");
    let _ = writeln!(out, "  U = {}", set_or_empty(t.u_set));
    let _ = writeln!(out, "  W = {}", set_or_empty(t.w_set));
    let edges = if t.aux_edges.is_empty() {
        "(none)".to_string()
    } else {
        t.aux_edges
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "  H edges = {edges}");
    let _ = writeln!(out, "step gallai-edmonds: recorded");
    let _ = writeln!(out, "  D = {}", set_or_empty(t.d_set));
    let _ = writeln!(out, "  A = {}", set_or_empty(t.a_set));
    let _ = writeln!(out, "  C = {}", set_or_empty(t.c_set));
    let comps = t
        .components
        .iter()
        .map(|c| format!("[{c}]"))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(
        out,
        "  components = {}",
        if comps.is_empty() { "(none)".to_string() } else { comps }
    );
    let _ = writeln!(out, "  c = {}", t.component_count);
    let _ = writeln!(out, "  nu = {}", t.matching_number);

    let _ = writeln!(
        out,
        "step missed-vertex-colourings: {} ({} of {})",
        pass_fail(t.missed_ok),
        t.missed_vertex_checks.iter().filter(|c| c.pass).count(),
        t.missed_vertex_checks.len()
    );
    for check in &t.missed_vertex_checks {
        let matching = if check.matching.is_empty() {
            "(none)".to_string()
        } else {
            check
                .matching
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(
            out,
            "  u = {}: matching {matching}; optimal colouring with {{{}}}: {}",
            check.missed,
            check.missed,
            yes_no(check.pass)
        );
    }

    let _ = writeln!(
        out,
        "step chi-restricted-to-C: {} (chi(G[C]) = {}, |C| = {})",
        pass_fail(t.eq_chi_c.pass && t.c_size_even),
        t.chi_c,
        t.c_set.len()
    );
    let _ = writeln!(
        out,
        "step chi-restricted-to-components: {}",
        pass_fail(t.eq_chi_components.iter().all(|e| e.pass) && t.component_sizes_odd)
    );
    for (i, (comp, chi_i)) in t.components.iter().zip(&t.chi_components).enumerate() {
        let _ = writeln!(
            out,
            "  D_{}: chi(G[D_{}]) = {chi_i}, |D_{}| = {}",
            i + 1,
            i + 1,
            i + 1,
            comp.len()
        );
    }
    let _ = writeln!(
        out,
        "step component-count: {} (c = {})",
        pass_fail(t.component_count_ok),
        t.component_count
    );
    match t.separation_violation {
        None => {
            let _ = writeln!(
                out,
                "step separation: {} (no complement arc between a component and the rest outside A)",
                pass_fail(t.separation_ok)
            );
        }
        Some((u, v)) => {
            let _ = writeln!(
                out,
                "step separation: {} (complement arc between {u} and {v})",
                pass_fail(t.separation_ok)
            );
        }
    }
    let _ = writeln!(
        out,
        "step chi-without-A: {} (chi(G - A) = {}, chi(G[W]) + (|C| + |D| + c)/2 = {} + {})",
        pass_fail(t.eq_chi_without_a.pass && t.additivity_ok),
        t.chi_without_a,
        t.chi_w,
        (t.c_set.len() + t.d_set.len() + t.component_count) / 2
    );
    let _ = writeln!(
        out,
        "step chi-decomposition: {} (chi(G) = {}, chi(G[U]) = {}, |U| - nu = {})",
        pass_fail(t.eq_chi_total.pass && t.eq_chi_u.pass),
        t.k,
        t.chi_u,
        t.u_set.len() - t.matching_number
    );
    let _ = writeln!(
        out,
        "step a-empty: {} (chi(G - A) = {}, chi(G) = {}, A {})",
        pass_fail(t.chi_preserved && t.a_empty),
        t.chi_without_a,
        t.k,
        if t.a_empty { "empty" } else { "non-empty" }
    );
    let _ = writeln!(
        out,
        "step disconnected-complement: {}",
        pass_fail(t.disconnected)
    );

    let verdict = if t.conclusive {
        if t.steps_pass { "PASS".to_string() } else { "VIOLATION".to_string() }
    } else {
        format!("EXPLORATORY (steps pass: {})", yes_no(t.steps_pass))
    };
    let _ = writeln!(out, "verdict: {verdict}");
    let _ = writeln!(out, "complement components: {}", t.complement_components.len());
    out
}

pub fn trace_json(t: &ProofTrace) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "kind": "proof_trace",
        "trace": t,
    })
}

pub fn verify_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theorem check up to n = {} ({})",
        report.max_n,
        if report.dedup {
            "one representative per isomorphism class"
        } else {
            "all labelled digraphs"
        }
    );
    let _ = writeln!(
        out,
        "{:>4}  {:>10}  {:>15}  {:>8}  {:>8}",
        "n", "scanned", "vertex-critical", "in-bound", "verified"
    );
    for c in &report.counts {
        let vc = c
            .vertex_critical
            .map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{:>4}  {:>10}  {:>15}  {:>8}  {:>8}",
            c.n, c.scanned, vc, c.in_bound, c.verified
        );
    }
    let _ = writeln!(out, "counterexamples: {}", report.counterexamples.len());
    for cx in &report.counterexamples {
        let _ = writeln!(
            out,
            "counterexample (n = {}, k = {}): {} [{}]",
            cx.n,
            cx.k,
            cx.digraph.replace('\n', "; "),
            cx.detail
        );
    }
    let _ = writeln!(out, "verdict: {}", if report.pass { "PASS" } else { "FAIL" });
    out
}

pub fn verify_json(report: &VerificationReport) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "kind": "verification",
        "report": report,
    })
}

pub fn digraph_json(g: &dicrit::Digraph) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "kind": "digraph",
        "n": g.n(),
        "arcs": g.arcs(),
        "text": g.to_text(),
    })
}
