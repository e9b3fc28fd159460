use thiserror::Error;

use crate::ugraph::UGraph;
use crate::vertex_set::VertexSet;

/// A set of pairwise vertex-disjoint edges, normalized to `(u, v)` with
/// `u < v` and sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("vertex {vertex} is covered by more than one edge")]
    SharedEndpoint { vertex: usize },
    #[error("edge ({u}, {u2}) is a loop", u2 = u)]
    Loop { u: usize },
    #[error("vertex {vertex} is not missed by any maximum matching")]
    NotMissable { vertex: usize },
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> Result<Self, MatchingError> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        let mut covered = VertexSet::EMPTY;
        for (u, v) in edges {
            if u == v {
                return Err(MatchingError::Loop { u });
            }
            for w in [u, v] {
                if covered.contains(w) {
                    return Err(MatchingError::SharedEndpoint { vertex: w });
                }
                covered.insert(w);
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(Matching { edges: norm })
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertices covered by some edge.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Vertices of `within` exposed by the matching.
    pub fn missed(&self, within: VertexSet) -> VertexSet {
        within.minus(self.covered())
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// True if every edge is an edge of `h`.
    pub fn is_matching_of(&self, h: &UGraph) -> bool {
        self.edges.iter().all(|&(u, v)| v < h.n() && h.has_edge(u, v))
    }

    /// Edges relabelled through `labels` (new vertex `i` becomes
    /// `labels[i]`), renormalized.
    pub fn relabelled(&self, labels: &[usize]) -> Matching {
        Matching::new(self.edges.iter().map(|&(u, v)| (labels[u], labels[v])))
            .expect("relabelling keeps endpoints disjoint")
    }
}

/// Maximum-cardinality matching by Edmonds' blossom-contraction search.
///
/// Repeatedly grows an alternating tree from each exposed vertex, shrinking
/// any odd cycle it meets to its base, until no augmenting path remains.
/// The result is deterministic: roots are tried in ascending vertex order
/// and neighbourhoods are scanned in ascending order.
pub fn max_matching(h: &UGraph) -> Matching {
    let mut search = BlossomSearch::new(h);
    for root in 0..h.n() {
        if search.mate[root].is_none() {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    let mut edges = Vec::new();
    for v in 0..h.n() {
        if let Some(m) = search.mate[v] {
            if v < m {
                edges.push((v, m));
            }
        }
    }
    Matching { edges }
}

/// The matching number.
pub fn matching_number(h: &UGraph) -> usize {
    max_matching(h).len()
}

/// A maximum matching of `h` that misses `u`, which exists exactly when
/// some maximum matching of `h` misses `u`. Computed as a maximum matching
/// of `h - u`; if that is smaller than the matching number of `h`, the
/// vertex is covered by every maximum matching and an error is returned.
pub fn max_matching_missing(h: &UGraph, u: usize) -> Result<Matching, MatchingError> {
    assert!(u < h.n(), "vertex {u} out of range");
    let nu = max_matching(h).len();
    let mut rest = h.vertices();
    rest.remove(u);
    let sub = max_matching(&h.induced(rest));
    if sub.len() != nu {
        return Err(MatchingError::NotMissable { vertex: u });
    }
    Ok(sub.relabelled(&rest.to_vec()))
}

struct BlossomSearch<'a> {
    h: &'a UGraph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
}

impl<'a> BlossomSearch<'a> {
    fn new(h: &'a UGraph) -> Self {
        let n = h.n();
        BlossomSearch {
            h,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
        }
    }

    /// Common ancestor of the blossom bases of `a` and `b` in the
    /// alternating tree.
    fn lca(&self, a: usize, b: usize) -> usize {
        let mut on_path = vec![false; self.h.n()];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            match self.mate[v] {
                None => break,
                Some(m) => v = self.parent[m].expect("matched tree vertex has a parent"),
            }
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if on_path[v] {
                return v;
            }
            v = self.parent[self.mate[v].expect("odd cycle walk stays matched")]
                .expect("matched tree vertex has a parent");
        }
    }

    /// Walks from `v` down to the blossom base `b`, marking every blossom
    /// on the way and rethreading parent pointers across the odd cycle.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path alternates");
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("matched tree vertex has a parent");
        }
    }

    fn contract_blossom(&mut self, v: usize, to: usize, queue: &mut Vec<usize>) {
        let b = self.lca(v, to);
        let mut in_blossom = vec![false; self.h.n()];
        self.mark_path(v, b, to, &mut in_blossom);
        self.mark_path(to, b, v, &mut in_blossom);
        for i in 0..self.h.n() {
            if in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.in_tree[i] {
                    self.in_tree[i] = true;
                    queue.push(i);
                }
            }
        }
    }

    /// Grows an alternating tree from the exposed `root`; returns the
    /// exposed endpoint of an augmenting path if one is found.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.h.n();
        self.parent = vec![None; n];
        self.base = (0..n).collect();
        self.in_tree = vec![false; n];
        self.in_tree[root] = true;

        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for to in VertexSet::from_mask(self.h.adj_mask(v)).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_even = to == root
                    || self
                        .mate[to]
                        .is_some_and(|m| self.parent[m].is_some());
                if to_is_even {
                    self.contract_blossom(v, to, &mut queue);
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.in_tree[m] = true;
                            queue.push(m);
                        }
                    }
                }
            }
        }
        None
    }

    /// Flips matched and unmatched edges along the path ending at the
    /// exposed vertex `end`.
    fn augment(&mut self, end: usize) {
        let mut v = Some(end);
        while let Some(cur) = v {
            let pv = self.parent[cur].expect("augmenting path reaches the root");
            let next = self.mate[pv];
            self.mate[cur] = Some(pv);
            self.mate[pv] = Some(cur);
            v = next;
        }
    }
}
