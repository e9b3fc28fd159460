use std::fmt;
use std::str::FromStr;

use crate::digraph::{parse_header, parse_pair};
use crate::error::ParseError;
use crate::vertex_set::VertexSet;

/// A simple loopless undirected graph on vertices `0..n`, `n <= 64`,
/// stored as one adjacency bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UGraph {
    n: usize,
    adj: Vec<u64>,
}

impl UGraph {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= crate::Digraph::MAX_VERTICES,
            "vertex count {n} exceeds the supported maximum"
        );
        UGraph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list; panics on loops, duplicates, or
    /// out-of-range endpoints (the text parser reports those as errors).
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            assert!(u != v, "loop at vertex {u} is not allowed");
            assert!(!g.has_edge(u, v), "duplicate edge ({u}, {v})");
            g.add_edge(u, v);
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bitmask.
    pub fn adj_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_mask(self.adj[u]).iter() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// The subgraph induced by `s`, relabelled onto `0..s.len()` with new
    /// label `i` for the `i`-th smallest member of `s`.
    pub fn induced(&self, s: VertexSet) -> UGraph {
        assert!(
            s.is_subset_of(self.vertices()),
            "induced set {s:?} not within vertex range 0..{}",
            self.n
        );
        let verts = s.to_vec();
        let mut g = UGraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i < j && self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn without_vertex(&self, v: usize) -> UGraph {
        let mut s = self.vertices();
        s.remove(v);
        self.induced(s)
    }

    /// Connected components, each as a vertex set, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the subgraph induced by `s`, in the host
    /// graph's labels, ordered by smallest member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        assert!(s.is_subset_of(self.vertices()));
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in s.iter() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grown |= self.adj[u] & s.mask();
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(VertexSet::from_mask(comp));
        }
        comps
    }

    /// Canonical text form: `graph n` header, then one `u v` line per edge
    /// with `u < v`, in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}", self.n);
        for (u, v) in self.edges() {
            s.push('\n');
            s.push_str(&format!("{u} {v}"));
        }
        s
    }
}

impl fmt::Display for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl FromStr for UGraph {
    type Err = ParseError;

    /// Parses the undirected counterpart of the digraph format: a
    /// `graph n` header followed by one `u v` edge per significant line.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut g: Option<UGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            match g {
                None => {
                    let header = parse_header(line, content, "graph")?;
                    g = Some(UGraph::empty(header.n()));
                }
                Some(ref mut g) => {
                    let (u, v) = parse_pair(line, content, g.n)?;
                    if u == v {
                        return Err(ParseError::SelfLoop { line, vertex: u });
                    }
                    if g.has_edge(u, v) {
                        return Err(ParseError::Duplicate {
                            line,
                            what: "edge",
                            a: u.min(v),
                            b: u.max(v),
                        });
                    }
                    g.add_edge(u, v);
                }
            }
        }
        g.ok_or(ParseError::MissingHeader { expected: "graph" })
    }
}
