//! Exhaustive enumeration of small labelled digraphs, with optional
//! isomorphism rejection.
//!
//! Every loopless digraph on `n` vertices is identified with its arc code:
//! one bit per ordered pair, in the fixed order given by [`pair_order`].
//! Pairs are grouped by their larger endpoint, so the code of the
//! subdigraph induced by the first `m` vertices is a prefix of the full
//! code. Labelled enumeration walks all `2^(n(n-1))` codes in increasing
//! order.
//!
//! Deduplicated enumeration yields the canonical representative of each
//! isomorphism class, where the canonical form is the lexicographically
//! least code over all relabellings. The prefix structure makes the
//! canonical forms closed under deleting the last vertex (a smaller
//! relabelled prefix would extend to a smaller full code), so canonical
//! digraphs on `m + 1` vertices are found by extending canonical digraphs
//! on `m` vertices and keeping the extensions that are themselves
//! canonical.

use itertools::Itertools;
use thiserror::Error;

use crate::digraph::Digraph;

/// Largest order supported by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration order {n} out of supported range 0..={max}")]
    UnsupportedOrder { n: usize, max: usize },
}

/// The fixed ordered-pair sequence behind all arc codes: for each vertex
/// `m = 1..n`, the pairs `(0, m), (m, 0), (1, m), (m, 1), ..`.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n.saturating_sub(1) * n);
    for m in 1..n {
        for j in 0..m {
            pairs.push((j, m));
            pairs.push((m, j));
        }
    }
    pairs
}

/// Number of labelled loopless digraphs on `n` vertices: `2^(n(n-1))`.
pub fn labelled_digraph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1))
}

/// The arc code of `g` under [`pair_order`].
pub fn code_of(g: &Digraph) -> u64 {
    let mut code = 0u64;
    for (i, (u, v)) in pair_order(g.n()).into_iter().enumerate() {
        if g.has_arc(u, v) {
            code |= 1 << i;
        }
    }
    code
}

/// The digraph with the given arc code.
pub fn digraph_from_code(n: usize, code: u64) -> Digraph {
    let pairs = pair_order(n);
    Digraph::new(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| code >> i & 1 == 1)
            .map(|(_, &p)| p),
    )
}

/// True if no relabelling yields a lexicographically smaller code. The
/// scan compares codes bit by bit and stops at the first difference, so
/// most non-canonical candidates are rejected after a few pairs.
fn is_canonical(g: &Digraph, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> bool {
    // perms hold the inverse relabelling: position i is the original
    // vertex placed at new label i.
    for q in perms {
        for &(a, b) in pairs {
            let ours = g.has_arc(a, b);
            let theirs = g.has_arc(q[a], q[b]);
            if ours != theirs {
                if ours {
                    return false;
                }
                break;
            }
        }
    }
    true
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// The canonical representative of `g`'s isomorphism class: the
/// relabelling whose arc-indicator sequence is lexicographically least,
/// earlier pairs weighing more.
pub fn canonical_form(g: &Digraph) -> Digraph {
    let n = g.n();
    let pairs = pair_order(n);
    let bits = pairs.len();
    let mut best: Option<(u64, u64)> = None; // (lex key, arc code)
    for q in all_perms(n) {
        let mut key = 0u64;
        let mut code = 0u64;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if g.has_arc(q[a], q[b]) {
                key |= 1 << (bits - 1 - i);
                code |= 1 << i;
            }
        }
        if best.is_none_or(|(k, _)| key < k) {
            best = Some((key, code));
        }
    }
    digraph_from_code(n, best.map_or(0, |(_, code)| code))
}

/// All canonical digraphs on exactly `m` vertices, built level by level.
pub(crate) fn canonical_level(m: usize) -> Vec<Digraph> {
    if m == 0 {
        return vec![Digraph::empty(0)];
    }
    let mut level = vec![Digraph::empty(1)];
    for size in 2..=m {
        let pairs = pair_order(size);
        let perms = all_perms(size);
        let mut next = Vec::new();
        for parent in &level {
            for child in extensions(parent) {
                if is_canonical(&child, &pairs, &perms) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    level
}

/// All `2^(2m)` ways of attaching one new vertex to a digraph on `m`
/// vertices, in extension-code order (consistent with [`pair_order`]).
pub(crate) fn extensions(parent: &Digraph) -> impl Iterator<Item = Digraph> + '_ {
    let m = parent.n();
    let base: Vec<(usize, usize)> = parent.arcs();
    (0u64..1 << (2 * m)).map(move |ext| {
        let mut arcs = base.clone();
        for j in 0..m {
            if ext >> (2 * j) & 1 == 1 {
                arcs.push((j, m));
            }
            if ext >> (2 * j + 1) & 1 == 1 {
                arcs.push((m, j));
            }
        }
        Digraph::new(m + 1, arcs)
    })
}

/// Canonical children of a canonical digraph, one vertex larger.
pub(crate) fn canonical_extensions(parent: &Digraph) -> Vec<Digraph> {
    let size = parent.n() + 1;
    let pairs = pair_order(size);
    let perms = all_perms(size);
    extensions(parent)
        .filter(|child| is_canonical(child, &pairs, &perms))
        .collect()
}

/// Streams every loopless digraph on `n` vertices: all `2^(n(n-1))`
/// labelled ones in increasing code order, or one canonical representative
/// per isomorphism class when `dedup` is set.
pub fn enumerate_digraphs(
    n: usize,
    dedup: bool,
) -> Result<DigraphEnumeration, EnumerateError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::UnsupportedOrder {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(if dedup && n >= 2 {
        // Parents stay small (9608 at n = 6); the last level is streamed.
        DigraphEnumeration::Canonical {
            parents: canonical_level(n - 1),
            parent_idx: 0,
            pending: Vec::new(),
        }
    } else if dedup || n == 0 {
        DigraphEnumeration::Labelled {
            n: n.min(1),
            next: 0,
            count: 1,
        }
    } else {
        DigraphEnumeration::Labelled {
            n,
            next: 0,
            count: labelled_digraph_count(n),
        }
    })
}

#[derive(Debug)]
pub enum DigraphEnumeration {
    Labelled {
        n: usize,
        next: u64,
        count: u64,
    },
    Canonical {
        parents: Vec<Digraph>,
        parent_idx: usize,
        pending: Vec<Digraph>,
    },
}

impl Iterator for DigraphEnumeration {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        match self {
            DigraphEnumeration::Labelled { n, next, count } => {
                if next == count {
                    return None;
                }
                let g = digraph_from_code(*n, *next);
                *next += 1;
                Some(g)
            }
            DigraphEnumeration::Canonical {
                parents,
                parent_idx,
                pending,
            } => loop {
                if let Some(g) = pending.pop() {
                    return Some(g);
                }
                if *parent_idx == parents.len() {
                    return None;
                }
                let mut batch = canonical_extensions(&parents[*parent_idx]);
                *parent_idx += 1;
                batch.reverse();
                *pending = batch;
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_counts() {
        for (n, expect) in [(0usize, 1u64), (1, 1), (2, 4), (3, 64), (4, 4096)] {
            assert_eq!(labelled_digraph_count(n), expect);
            assert_eq!(
                enumerate_digraphs(n, false).unwrap().count() as u64,
                expect
            );
        }
    }

    #[test]
    fn rejects_out_of_range_order() {
        assert_eq!(
            enumerate_digraphs(7, false).unwrap_err(),
            EnumerateError::UnsupportedOrder { n: 7, max: 6 }
        );
    }

    #[test]
    fn code_round_trip() {
        for code in 0..64u64 {
            let g = digraph_from_code(3, code);
            assert_eq!(code_of(&g), code);
        }
    }

    #[test]
    fn canonical_counts_match_known_values() {
        // Digraphs on n nodes up to isomorphism: 1, 1, 3, 16, 218, 9608.
        for (n, expect) in [(0usize, 1usize), (1, 1), (2, 3), (3, 16), (4, 218), (5, 9608)] {
            assert_eq!(
                enumerate_digraphs(n, true).unwrap().count(),
                expect,
                "n = {n}"
            );
        }
    }

    #[test]
    fn canonical_stream_agrees_with_labelled_canonicalization() {
        use std::collections::HashSet;
        for n in 0..=3 {
            let from_stream: HashSet<String> = enumerate_digraphs(n, true)
                .unwrap()
                .map(|g| g.to_text())
                .collect();
            let from_labelled: HashSet<String> = enumerate_digraphs(n, false)
                .unwrap()
                .map(|g| canonical_form(&g).to_text())
                .collect();
            assert_eq!(from_stream, from_labelled, "n = {n}");
        }
    }

    #[test]
    fn canonical_forms_are_isomorphism_invariants() {
        let g = digraph_from_code(4, 0b1010_0110_0101);
        let relabelled = Digraph::new(
            4,
            g.arcs().iter().map(|&(u, v)| ((u + 1) % 4, (v + 1) % 4)),
        );
        assert_eq!(canonical_form(&g), canonical_form(&relabelled));
    }

    #[test]
    fn two_single_arc_digraphs_are_isomorphic() {
        // n = 2 has 4 labelled digraphs but only 3 classes.
        let a = Digraph::new(2, [(0, 1)]);
        let b = Digraph::new(2, [(1, 0)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }
}
