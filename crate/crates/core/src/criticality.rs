//! Vertex-criticality and arc-criticality checkers.
//!
//! Single deletions suffice for both checks. Every proper induced
//! subdigraph is contained in some `G - v`, and chi never increases when
//! passing to an induced subdigraph, so `chi(G - v) < chi(G)` for all `v`
//! already covers all proper induced subdigraphs. Likewise every proper
//! subdigraph is contained in some `G - e` or some `G - v`, and removing
//! an isolated vertex cannot lower chi on two or more vertices, so the
//! arc checks plus an isolated-vertex scan cover all proper subdigraphs.

use serde::Serialize;

use crate::dichromatic::{chi, is_colourable};
use crate::digraph::Digraph;

/// Both criticality verdicts for one digraph, sharing a single chi
/// computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Criticality {
    pub k: usize,
    pub vertex_critical: bool,
    pub critical: bool,
}

pub fn criticality(g: &Digraph) -> Criticality {
    let k = chi(g);
    Criticality {
        k,
        vertex_critical: vertex_critical_with_chi(g, k),
        critical: critical_with_chi(g, k),
    }
}

/// True if every single-vertex deletion lowers the dichromatic number.
pub fn is_vertex_critical(g: &Digraph) -> bool {
    assert!(g.n() >= 1, "criticality is defined for non-empty digraphs");
    vertex_critical_with_chi(g, chi(g))
}

/// True if every single-arc deletion lowers the dichromatic number and no
/// vertex is isolated (a lone vertex being the one digraph that is its own
/// only induced subdigraph).
pub fn is_critical(g: &Digraph) -> bool {
    assert!(g.n() >= 1, "criticality is defined for non-empty digraphs");
    critical_with_chi(g, chi(g))
}

/// `chi(G - v) < k` is equivalent to `G - v` being (k-1)-colourable, so
/// each deletion needs one bounded search instead of a full chi run.
pub(crate) fn vertex_critical_with_chi(g: &Digraph, k: usize) -> bool {
    g.n() >= 1 && (0..g.n()).all(|v| is_colourable(&g.without_vertex(v), k - 1))
}

pub(crate) fn critical_with_chi(g: &Digraph, k: usize) -> bool {
    if g.n() == 0 {
        return false;
    }
    if g.n() > 1 && (0..g.n()).any(|v| g.out_mask(v) | g.in_mask(v) == 0) {
        return false;
    }
    g.arcs()
        .into_iter()
        .all(|(u, v)| is_colourable(&g.without_arc(u, v), k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bidirected_complete, directed_cycle};

    #[test]
    fn single_vertex_is_critical() {
        let g = Digraph::empty(1);
        let c = criticality(&g);
        assert_eq!(c.k, 1);
        assert!(c.vertex_critical);
        assert!(c.critical);
    }

    #[test]
    fn directed_cycles_are_2_critical() {
        for n in 2..=6 {
            let c = criticality(&directed_cycle(n));
            assert_eq!(c.k, 2);
            assert!(c.vertex_critical, "C{n}");
            assert!(c.critical, "C{n}");
        }
    }

    #[test]
    fn bidirected_complete_is_k_critical() {
        for k in 1..=5 {
            let c = criticality(&bidirected_complete(k));
            assert_eq!(c.k, k);
            assert!(c.vertex_critical);
            assert!(c.critical);
        }
    }

    #[test]
    fn pendant_arc_breaks_arc_criticality() {
        // A digon with an extra arc hanging off it: removing the extra arc
        // keeps chi at 2.
        let g = Digraph::new(3, [(0, 1), (1, 0), (1, 2)]);
        let c = criticality(&g);
        assert_eq!(c.k, 2);
        assert!(!c.critical);
        assert!(!c.vertex_critical);
    }

    #[test]
    fn isolated_vertex_breaks_criticality() {
        let g = Digraph::new(3, [(0, 1), (1, 0)]);
        assert!(!is_critical(&g));
        assert!(!is_vertex_critical(&g));
    }

    #[test]
    fn cycle_with_chord_is_not_vertex_critical() {
        let g = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]);
        assert_eq!(chi(&g), 2);
        assert!(!is_vertex_critical(&g));
    }
}
