//! Generators for the digraph families used as test and verification
//! instances.

use crate::digraph::Digraph;

/// The bidirected complete digraph on `k` vertices: every pair of distinct
/// vertices joined by a digon. Its dichromatic number is `k`, since no two
/// vertices can share a colour class.
pub fn bidirected_complete(k: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..k {
        for v in 0..k {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(k, arcs)
}

/// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`. Requires `n >= 2`
/// (a 1-cycle would be a loop).
pub fn directed_cycle(n: usize) -> Digraph {
    assert!(n >= 2, "a directed cycle needs at least 2 vertices");
    Digraph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The bidirected join: both digraphs side by side, plus both arcs between
/// every cross pair. The complement of a join is the disjoint union of the
/// complements, and chi adds across the two parts because every cross pair
/// is a digon.
pub fn bidirected_join(g1: &Digraph, g2: &Digraph) -> Digraph {
    let mut g = g1.disjoint_union(g2);
    let mut arcs = g.arcs();
    for u in 0..g1.n() {
        for v in g1.n()..g.n() {
            arcs.push((u, v));
            arcs.push((v, u));
        }
    }
    g = Digraph::new(g.n(), arcs);
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dichromatic::chi;

    #[test]
    fn bidirected_complete_examples() {
        assert_eq!(bidirected_complete(2), Digraph::new(2, [(0, 1), (1, 0)]));
        assert_eq!(bidirected_complete(0), Digraph::empty(0));
        assert_eq!(bidirected_complete(4).arc_count(), 12);
    }

    #[test]
    fn directed_cycle_examples() {
        assert_eq!(directed_cycle(3), Digraph::new(3, [(0, 1), (1, 2), (2, 0)]));
        assert_eq!(directed_cycle(2), bidirected_complete(2));
    }

    #[test]
    fn join_complement_is_disjoint_union_of_complements() {
        let a = directed_cycle(3);
        let b = Digraph::new(2, [(0, 1)]);
        let join = bidirected_join(&a, &b);
        assert_eq!(
            join.complement(),
            a.complement().disjoint_union(&b.complement())
        );
    }

    #[test]
    fn join_of_triangles() {
        let g = bidirected_join(&directed_cycle(3), &directed_cycle(3));
        assert_eq!(g.n(), 6);
        assert_eq!(g.arc_count(), 6 + 18);
        assert_eq!(chi(&g), 4);
        assert_eq!(g.complement().weak_components().len(), 2);
    }
}
