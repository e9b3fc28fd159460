//! The Gallai-Edmonds decomposition and its certificate checks.
//!
//! For an undirected graph `H`, the decomposition splits the vertices into
//! `D` (missed by at least one maximum matching), `A` (vertices outside `D`
//! with a neighbour in `D`) and `C` (everything else). The structure
//! certified here: `H[C]` has a perfect matching, every component of
//! `H[D]` is factor-critical, and every maximum matching has size
//! `(|V| + |A| - c) / 2` where `c` counts the components of `H[D]`.

use serde::Serialize;
use thiserror::Error;

use crate::matching::{matching_number, max_matching};
use crate::ugraph::UGraph;
use crate::vertex_set::VertexSet;

/// The decomposition triple plus the components of `H[D]`, all in the host
/// graph's labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    pub d_set: VertexSet,
    pub a_set: VertexSet,
    pub c_set: VertexSet,
    /// Connected components of `H[D]`, ordered by smallest member.
    pub components: Vec<VertexSet>,
}

impl GallaiEdmonds {
    /// The component count `c`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// Computes the decomposition directly from its definition: `v` lands in
/// `D` exactly when deleting it does not drop the matching number. That is
/// `n + 1` matching computations, which is the simple and obviously correct
/// route at the graph sizes this crate works with; the matching engine
/// itself is checked against an exhaustive oracle in the tests.
pub fn ge_decompose(h: &UGraph) -> GallaiEdmonds {
    let nu = matching_number(h);
    let mut d_set = VertexSet::EMPTY;
    for v in 0..h.n() {
        if matching_number(&h.without_vertex(v)) == nu {
            d_set.insert(v);
        }
    }
    let mut a_set = VertexSet::EMPTY;
    for v in h.vertices().minus(d_set).iter() {
        if h.adj_mask(v) & d_set.mask() != 0 {
            a_set.insert(v);
        }
    }
    let c_set = h.vertices().minus(d_set).minus(a_set);
    let components = h.components_within(d_set);
    GallaiEdmonds {
        d_set,
        a_set,
        c_set,
        components,
    }
}

/// One pass/fail line of a certificate report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// The outcome of [`verify_ge_structure`]: each structural claim checked
/// separately, plus the conjunction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub checks: Vec<CertCheck>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("decomposition does not partition the vertex set: {detail}")]
    NotAPartition { detail: String },
    #[error("recorded components disagree with the components of H[D]")]
    ComponentsMismatch,
}

/// Certifies a decomposition against its host graph.
///
/// Checks, in order: `H[C]` has a perfect matching; every component of
/// `H[D]` is factor-critical (deleting any single vertex leaves a perfect
/// matching, hence each component has a near-perfect matching); and the
/// matching number equals `(|V| + |A| - c) / 2` exactly.
pub fn verify_ge_structure(
    h: &UGraph,
    dec: &GallaiEdmonds,
) -> Result<CertificateReport, CertificateError> {
    check_partition(h, dec)?;

    let mut checks = Vec::new();

    let c_sub = h.induced(dec.c_set);
    let nu_c = matching_number(&c_sub);
    let perfect_on_c = 2 * nu_c == dec.c_set.len();
    checks.push(CertCheck {
        name: "perfect-matching-on-C",
        pass: perfect_on_c,
        detail: format!("|C| = {}, matching covers {}", dec.c_set.len(), 2 * nu_c),
    });

    let mut all_factor_critical = true;
    for comp in &dec.components {
        if !is_factor_critical(&h.induced(*comp)) {
            all_factor_critical = false;
        }
    }
    checks.push(CertCheck {
        name: "factor-critical-components",
        pass: all_factor_critical,
        detail: format!("{} component(s) of H[D]", dec.components.len()),
    });

    let nu = matching_number(h);
    let c = dec.component_count();
    let size_formula = 2 * nu == h.n() + dec.a_set.len() - c;
    checks.push(CertCheck {
        name: "matching-size-formula",
        pass: size_formula,
        detail: format!(
            "2*nu = {}, |V| + |A| - c = {} + {} - {}",
            2 * nu,
            h.n(),
            dec.a_set.len(),
            c
        ),
    });

    let pass = checks.iter().all(|c| c.pass);
    Ok(CertificateReport { checks, pass })
}

/// True if deleting any one vertex leaves a graph with a perfect matching.
/// Checked by definition, one matching computation per vertex.
pub fn is_factor_critical(g: &UGraph) -> bool {
    if g.n() % 2 == 0 {
        return false;
    }
    (0..g.n()).all(|v| {
        let sub = g.without_vertex(v);
        2 * matching_number(&sub) == sub.n()
    })
}

/// True if the given maximum matching covers `C` perfectly and misses at
/// most one vertex inside each component of `H[D]`, using only edges that
/// stay inside the respective part.
pub fn matching_respects_decomposition(
    h: &UGraph,
    dec: &GallaiEdmonds,
    matching: &crate::Matching,
) -> bool {
    let inside = |set: VertexSet| {
        matching
            .edges()
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .count()
    };
    if 2 * inside(dec.c_set) != dec.c_set.len() {
        return false;
    }
    dec.components
        .iter()
        .all(|&comp| 2 * inside(comp) == comp.len() - 1 && comp.len() % 2 == 1)
        && max_matching(h).len() == matching.len()
}

fn check_partition(h: &UGraph, dec: &GallaiEdmonds) -> Result<(), CertificateError> {
    let all = dec.d_set.union(dec.a_set).union(dec.c_set);
    let disjoint = dec.d_set.is_disjoint_from(dec.a_set)
        && dec.d_set.is_disjoint_from(dec.c_set)
        && dec.a_set.is_disjoint_from(dec.c_set);
    if all != h.vertices() || !disjoint {
        return Err(CertificateError::NotAPartition {
            detail: format!(
                "D = {}, A = {}, C = {} over {} vertices",
                dec.d_set,
                dec.a_set,
                dec.c_set,
                h.n()
            ),
        });
    }
    let mut covered = VertexSet::EMPTY;
    for comp in &dec.components {
        if !comp.is_disjoint_from(covered) {
            return Err(CertificateError::ComponentsMismatch);
        }
        covered = covered.union(*comp);
    }
    if covered != dec.d_set || dec.components != h.components_within(dec.d_set) {
        return Err(CertificateError::ComponentsMismatch);
    }
    Ok(())
}
