//! Brute-force reference implementations.
//!
//! Everything here recomputes a quantity by exhaustive enumeration, on a
//! code path deliberately disjoint from the production solvers, so the
//! test suites can compare the two. None of it is fit for anything beyond
//! desk-scale inputs, which is exactly where it is used.

use std::collections::HashMap;

use itertools::Itertools;

use crate::digraph::Digraph;
use crate::gallai_edmonds::GallaiEdmonds;
use crate::ugraph::UGraph;
use crate::vertex_set::VertexSet;

/// Acyclicity of `g[class]` checked by trying every vertex ordering and
/// looking for one with all arcs pointing forward.
pub fn acyclic_by_orderings(g: &Digraph, class: VertexSet) -> bool {
    let verts = class.to_vec();
    if verts.len() <= 1 {
        return true;
    }
    verts.iter().permutations(verts.len()).any(|order| {
        order.iter().enumerate().all(|(i, &&u)| {
            order[..i]
                .iter()
                .all(|&&earlier| !g.has_arc(u, earlier))
        })
    })
}

/// Visits every set partition of `0..n` as a class-index assignment
/// (restricted growth string).
pub fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut assign = vec![0usize; n];
    fn descend(assign: &mut Vec<usize>, i: usize, max_used: usize, f: &mut impl FnMut(&[usize])) {
        if i == assign.len() {
            f(assign);
            return;
        }
        for class in 0..=max_used + 1 {
            assign[i] = class;
            descend(assign, i + 1, max_used.max(class), f);
        }
    }
    if n == 0 {
        f(&assign);
    } else {
        assign[0] = 0;
        descend(&mut assign, 1, 0, f);
    }
}

fn classes_of_assignment(assign: &[usize]) -> Vec<VertexSet> {
    let count = assign.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![VertexSet::EMPTY; count];
    for (v, &c) in assign.iter().enumerate() {
        classes[c].insert(v);
    }
    classes
}

/// The dichromatic number by minimizing over all set partitions, with
/// acyclicity itself checked by ordering enumeration.
pub fn chi_by_partitions(g: &Digraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = g.n();
    for_each_partition(g.n(), &mut |assign| {
        let classes = classes_of_assignment(assign);
        if classes.len() < best && classes.iter().all(|&c| acyclic_by_orderings(g, c)) {
            best = classes.len();
        }
    });
    best
}

/// The minimum singleton count among all optimal colourings, by a second
/// exhaustive pass over set partitions.
pub fn min_singletons_by_partitions(g: &Digraph) -> usize {
    let k = chi_by_partitions(g);
    let mut best = g.n() + 1;
    for_each_partition(g.n(), &mut |assign| {
        let classes = classes_of_assignment(assign);
        if classes.len() != k {
            return;
        }
        let singles = classes.iter().filter(|c| c.len() == 1).count();
        if singles < best && classes.iter().all(|&c| acyclic_by_orderings(g, c)) {
            best = singles;
        }
    });
    best
}

/// Maximum matching size by enumerating every subset of the edge set and
/// keeping the largest one that is a matching. Only sensible for very
/// small edge counts.
pub fn max_matching_by_edge_subsets(h: &UGraph) -> usize {
    let edges = h.edges();
    assert!(edges.len() <= 20, "edge-subset oracle limited to 20 edges");
    let mut best = 0;
    for subset in 0u64..1 << edges.len() {
        let mut covered = 0u64;
        let mut size = 0;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                let bits = 1 << u | 1 << v;
                if covered & bits != 0 {
                    ok = false;
                    break;
                }
                covered |= bits;
                size += 1;
            }
        }
        if ok && size > best {
            best = size;
        }
    }
    best
}

/// Visits every matching once, by deciding for the lowest-labelled free
/// vertex whether it stays exposed or which free neighbour it pairs with.
pub fn for_each_matching(h: &UGraph, f: &mut impl FnMut(&[(usize, usize)])) {
    fn descend(
        h: &UGraph,
        free: u64,
        current: &mut Vec<(usize, usize)>,
        f: &mut impl FnMut(&[(usize, usize)]),
    ) {
        if free == 0 {
            f(current);
            return;
        }
        let u = free.trailing_zeros() as usize;
        let without_u = free & !(1 << u);
        descend(h, without_u, current, f);
        let mut nbrs = h.adj_mask(u) & without_u;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            current.push((u, v));
            descend(h, without_u & !(1 << v), current, f);
            current.pop();
        }
    }
    let mut current = Vec::new();
    descend(h, h.vertices().mask(), &mut current, f);
}

/// All maximum matchings, as sorted edge lists.
pub fn all_maximum_matchings(h: &UGraph) -> Vec<Vec<(usize, usize)>> {
    let mut best = 0;
    let mut found: Vec<Vec<(usize, usize)>> = Vec::new();
    for_each_matching(h, &mut |m| {
        if m.len() > best {
            best = m.len();
            found.clear();
        }
        if m.len() == best {
            let mut sorted = m.to_vec();
            sorted.sort_unstable();
            found.push(sorted);
        }
    });
    found
}

/// Matching number by memoized recursion over the set of free vertices.
/// Independent of both the blossom engine and the matching enumerator.
pub fn matching_number_by_recursion(h: &UGraph) -> usize {
    fn go(h: &UGraph, free: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if free == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&free) {
            return v;
        }
        let u = free.trailing_zeros() as usize;
        let without_u = free & !(1 << u);
        let mut best = go(h, without_u, memo);
        let mut nbrs = h.adj_mask(u) & without_u;
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + go(h, without_u & !(1 << v), memo));
        }
        memo.insert(free, best);
        best
    }
    go(h, h.vertices().mask(), &mut HashMap::new())
}

/// The Gallai-Edmonds decomposition straight from its definition: `D` is
/// the set of vertices missed by at least one maximum matching, taken over
/// the exhaustively enumerated family of maximum matchings.
pub fn ge_by_definition(h: &UGraph) -> GallaiEdmonds {
    let mut d_set = VertexSet::EMPTY;
    for m in all_maximum_matchings(h) {
        let covered: VertexSet = m.iter().flat_map(|&(u, v)| [u, v]).collect();
        d_set = d_set.union(h.vertices().minus(covered));
    }
    let mut a_set = VertexSet::EMPTY;
    for v in h.vertices().minus(d_set).iter() {
        if h.adj_mask(v) & d_set.mask() != 0 {
            a_set.insert(v);
        }
    }
    GallaiEdmonds {
        d_set,
        a_set,
        c_set: h.vertices().minus(d_set).minus(a_set),
        components: h.components_within(d_set),
    }
}
