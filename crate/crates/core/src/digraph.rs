use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::vertex_set::VertexSet;

/// A loopless digraph on vertices `0..n`, at most one arc per ordered pair.
///
/// Adjacency is one bitmask row per vertex in each direction, so arc
/// membership tests and neighbourhood scans are single word operations.
/// This caps the vertex count at [`Digraph::MAX_VERTICES`], which is far
/// beyond what the exact solvers can chew through anyway.
///
/// Values are immutable after construction; all operations return fresh
/// digraphs and are safe to call from concurrent workers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub const MAX_VERTICES: usize = 64;

    /// The digraph on `n` vertices with no arcs.
    ///
    /// Panics if `n` exceeds [`Digraph::MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= Self::MAX_VERTICES,
            "vertex count {n} exceeds the supported maximum of {}",
            Self::MAX_VERTICES
        );
        Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        }
    }

    /// Builds a digraph from an arc list.
    ///
    /// Panics on a loop, a duplicate arc, or an out-of-range endpoint;
    /// those are programmer errors here. Untrusted input goes through the
    /// text parser instead, which reports them as distinct [`ParseError`]s.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in arcs {
            assert!(u < n && v < n, "arc ({u}, {v}) out of range for n = {n}");
            assert!(u != v, "loop at vertex {u} is not allowed");
            assert!(!g.has_arc(u, v), "duplicate arc ({u}, {v})");
            g.add_arc(u, v);
        }
        g
    }

    fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// Out-neighbourhood of `u` as a bitmask.
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    /// In-neighbourhood of `u` as a bitmask.
    pub fn in_mask(&self, u: usize) -> u64 {
        self.inn[u]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in VertexSet::from_mask(self.out[u]).iter() {
                arcs.push((u, v));
            }
        }
        arcs
    }

    /// True if both `(u, v)` and `(v, u)` are arcs.
    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// The complement: same vertices, an ordered pair of distinct vertices
    /// is an arc exactly when it is not an arc here. Loops stay excluded.
    pub fn complement(&self) -> Digraph {
        let full = VertexSet::full(self.n).mask();
        let mut g = Digraph::empty(self.n);
        for u in 0..self.n {
            g.out[u] = !self.out[u] & full & !(1 << u);
            g.inn[u] = !self.inn[u] & full & !(1 << u);
        }
        g
    }

    /// The subdigraph induced by `s`, relabelled onto `0..s.len()`.
    ///
    /// New label `i` is the `i`-th smallest member of `s`, so the label map
    /// back to the host digraph is exactly `s.to_vec()`.
    pub fn induced(&self, s: VertexSet) -> Digraph {
        assert!(
            s.is_subset_of(self.vertices()),
            "induced set {s:?} not within vertex range 0..{}",
            self.n
        );
        let verts = s.to_vec();
        let mut g = Digraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    g.add_arc(i, j);
                }
            }
        }
        g
    }

    /// The induced subdigraph on all vertices except `v`.
    pub fn without_vertex(&self, v: usize) -> Digraph {
        let mut s = self.vertices();
        s.remove(v);
        self.induced(s)
    }

    /// A copy with the arc `(u, v)` removed.
    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        assert!(self.has_arc(u, v), "arc ({u}, {v}) not present");
        let mut g = self.clone();
        g.out[u] &= !(1 << v);
        g.inn[v] &= !(1 << u);
        g
    }

    /// True if the digraph has no directed cycle. A digon counts as a
    /// directed 2-cycle.
    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_within(self.vertices().mask())
    }

    /// Acyclicity of the subdigraph induced by the vertices in `sub`,
    /// by repeatedly deleting vertices with no in-arc from `sub`.
    pub(crate) fn is_acyclic_within(&self, sub: u64) -> bool {
        let mut alive = sub;
        while alive != 0 {
            let mut removable = 0u64;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.inn[v] & alive == 0 {
                    removable |= 1 << v;
                }
            }
            if removable == 0 {
                return false;
            }
            alive &= !removable;
        }
        true
    }

    /// Connected components of the underlying undirected graph, each as a
    /// vertex set, ordered by smallest member. The digraph is disconnected
    /// exactly when this has length at least 2; the 0-vertex digraph has
    /// no components.
    pub fn weak_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
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
                    grown |= self.out[u] | self.inn[u];
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

    /// Disjoint union: `other`'s vertices are shifted up by `self.n()`,
    /// and no arcs run between the two parts.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let n = self.n + other.n;
        let mut g = Digraph::empty(n);
        for u in 0..self.n {
            g.out[u] = self.out[u];
            g.inn[u] = self.inn[u];
        }
        for u in 0..other.n {
            g.out[self.n + u] = other.out[u] << self.n;
            g.inn[self.n + u] = other.inn[u] << self.n;
        }
        g
    }

    /// Canonical text form: `digraph n` header, then one `u v` line per
    /// arc in lexicographic order. Inverse of the parser.
    pub fn to_text(&self) -> String {
        let mut s = format!("digraph {}", self.n);
        for (u, v) in self.arcs() {
            s.push('\n');
            s.push_str(&format!("{u} {v}"));
        }
        s
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

impl FromStr for Digraph {
    type Err = ParseError;

    /// Parses the line-oriented text format.
    ///
    /// The first significant line is `digraph n`; every following
    /// significant line is one arc `u v` with 0-indexed endpoints.
    /// `#` starts a comment that runs to the end of the line; blank
    /// lines are skipped.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut g: Option<Digraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            match g {
                None => {
                    g = Some(parse_header(line, content, "digraph")?);
                }
                Some(ref mut g) => {
                    let (u, v) = parse_pair(line, content, g.n)?;
                    if u == v {
                        return Err(ParseError::SelfLoop { line, vertex: u });
                    }
                    if g.has_arc(u, v) {
                        return Err(ParseError::Duplicate {
                            line,
                            what: "arc",
                            a: u,
                            b: v,
                        });
                    }
                    g.add_arc(u, v);
                }
            }
        }
        g.ok_or(ParseError::MissingHeader { expected: "digraph" })
    }
}

pub(crate) fn parse_header(
    line: usize,
    content: &str,
    expected: &'static str,
) -> Result<Digraph, ParseError> {
    let mut words = content.split_whitespace();
    let kind = words.next().unwrap_or("");
    let count = words.next();
    if kind != expected {
        if (kind == "graph" || kind == "digraph") && count.is_some() {
            return Err(ParseError::WrongKind {
                line,
                expected,
                found: kind.to_string(),
            });
        }
        return Err(ParseError::BadHeader {
            line,
            text: content.to_string(),
            expected,
        });
    }
    let n: usize = match (count, words.next()) {
        (Some(c), None) => c.parse().map_err(|_| ParseError::BadHeader {
            line,
            text: content.to_string(),
            expected,
        })?,
        _ => {
            return Err(ParseError::BadHeader {
                line,
                text: content.to_string(),
                expected,
            })
        }
    };
    if n > Digraph::MAX_VERTICES {
        return Err(ParseError::TooManyVertices {
            n,
            max: Digraph::MAX_VERTICES,
        });
    }
    Ok(Digraph::empty(n))
}

pub(crate) fn parse_pair(line: usize, content: &str, n: usize) -> Result<(usize, usize), ParseError> {
    let bad = || ParseError::BadPair {
        line,
        text: content.to_string(),
    };
    let mut words = content.split_whitespace();
    let u: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let v: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if words.next().is_some() {
        return Err(bad());
    }
    for w in [u, v] {
        if w >= n {
            return Err(ParseError::OutOfRange { line, vertex: w, n });
        }
    }
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digon() -> Digraph {
        Digraph::new(2, [(0, 1), (1, 0)])
    }

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)])
    }

    #[test]
    fn parse_digon_and_c3() {
        let g: Digraph = "digraph 2\n0 1\n1 0".parse().unwrap();
        assert_eq!(g, digon());
        let g: Digraph = "digraph 3\n0 1\n1 2\n2 0".parse().unwrap();
        assert_eq!(g, c3());
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g: Digraph = "# header comment\ndigraph 2\n\n0 1 # an arc\n1 0\n".parse().unwrap();
        assert_eq!(g, digon());
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(
            "digraph 2\n0 0".parse::<Digraph>(),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            "digraph 2\n0 1\n0 1".parse::<Digraph>(),
            Err(ParseError::Duplicate {
                line: 3,
                what: "arc",
                a: 0,
                b: 1
            })
        );
        assert_eq!(
            "digraph 2\n0 2".parse::<Digraph>(),
            Err(ParseError::OutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        );
        assert!(matches!(
            "dgraph 2".parse::<Digraph>(),
            Err(ParseError::BadHeader { .. })
        ));
        assert!(matches!(
            "graph 2\n0 1".parse::<Digraph>(),
            Err(ParseError::WrongKind { .. })
        ));
        assert!(matches!(
            "".parse::<Digraph>(),
            Err(ParseError::MissingHeader { .. })
        ));
        assert!(matches!(
            "digraph 65".parse::<Digraph>(),
            Err(ParseError::TooManyVertices { n: 65, max: 64 })
        ));
    }

    #[test]
    fn serialize_round_trip() {
        assert_eq!(digon().to_text(), "digraph 2\n0 1\n1 0");
        assert_eq!(Digraph::empty(1).to_text(), "digraph 1");
        let g = c3();
        assert_eq!(g.to_text().parse::<Digraph>().unwrap(), g);
    }

    #[test]
    fn complement_examples() {
        // Empty on 2 vertices -> digon; all non-loop pairs flip on.
        assert_eq!(Digraph::empty(2).complement(), digon());
        // Directed C3 flips to the reversed triangle.
        assert_eq!(c3().complement(), Digraph::new(3, [(1, 0), (2, 1), (0, 2)]));
        // Involution.
        assert_eq!(c3().complement().complement(), c3());
    }

    #[test]
    fn induced_subdigraph() {
        let g = c3();
        assert_eq!(g.induced(VertexSet::EMPTY), Digraph::empty(0));
        assert_eq!(g.induced(g.vertices()), g);
        // Digon plus isolated vertex, restricted to the digon's endpoints.
        let h = Digraph::new(3, [(0, 2), (2, 0)]);
        let s: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(h.induced(s), digon());
    }

    #[test]
    fn acyclicity() {
        assert!(Digraph::empty(4).is_acyclic());
        assert!(!digon().is_acyclic());
        assert!(!c3().is_acyclic());
        for (u, v) in c3().arcs() {
            assert!(c3().without_arc(u, v).is_acyclic());
        }
    }

    #[test]
    fn weak_components_examples() {
        assert_eq!(digon().weak_components().len(), 1);
        assert_eq!(Digraph::empty(3).weak_components().len(), 3);
        assert_eq!(Digraph::empty(0).weak_components().len(), 0);
        let two = c3().disjoint_union(&c3());
        let comps = two.weak_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);
    }

    #[test]
    fn disjoint_union_examples() {
        let g = c3().disjoint_union(&Digraph::empty(0));
        assert_eq!(g, c3());
        let iso = Digraph::empty(1).disjoint_union(&Digraph::empty(1));
        assert_eq!(iso, Digraph::empty(2));
        let mixed = c3().disjoint_union(&digon());
        assert_eq!(mixed.weak_components().len(), 2);
        assert_eq!(mixed.arc_count(), 5);
    }
}
