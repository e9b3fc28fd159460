use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

/// A partition of some vertex set into non-empty classes, kept in
/// canonical order (classes sorted by smallest member).
///
/// Whether each class induces an acyclic subdigraph is a property relative
/// to a host digraph; see [`Colouring::is_valid_for`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Colouring {
    classes: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colour classes must be non-empty")]
    EmptyClass,
    #[error("vertex {vertex} appears in more than one class")]
    OverlappingClasses { vertex: usize },
    #[error("matched pair ({u}, {v}) lies outside the coloured set")]
    PairOutsideSet { u: usize, v: usize },
    #[error("vertex {vertex} is matched twice")]
    SharedEndpoint { vertex: usize },
    #[error("matched pair ({u}, {v}) is a digon, so the pair cannot form a colour class")]
    DigonPair { u: usize, v: usize },
}

impl Colouring {
    /// The colouring of the empty vertex set: no classes at all.
    pub fn empty() -> Self {
        Colouring { classes: Vec::new() }
    }

    pub fn new(classes: Vec<VertexSet>) -> Result<Self, ColouringError> {
        let mut seen = VertexSet::EMPTY;
        for class in &classes {
            if class.is_empty() {
                return Err(ColouringError::EmptyClass);
            }
            if let Some(v) = class.intersection(seen).smallest() {
                return Err(ColouringError::OverlappingClasses { vertex: v });
            }
            seen = seen.union(*class);
        }
        Ok(Self::from_disjoint(classes))
    }

    /// Canonicalizes classes already known to be non-empty and disjoint.
    pub(crate) fn from_disjoint(mut classes: Vec<VertexSet>) -> Self {
        classes.sort_by_key(|c| c.smallest());
        Colouring { classes }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The union of all classes.
    pub fn ground(&self) -> VertexSet {
        self.classes
            .iter()
            .fold(VertexSet::EMPTY, |acc, c| acc.union(*c))
    }

    /// Number of classes of size exactly 1.
    pub fn singleton_count(&self) -> usize {
        self.classes.iter().filter(|c| c.len() == 1).count()
    }

    pub fn has_class(&self, class: VertexSet) -> bool {
        self.classes.contains(&class)
    }

    /// The classes intersected with `s`, empties dropped; the result is a
    /// colouring of `ground() ∩ s`.
    pub fn restrict(&self, s: VertexSet) -> Colouring {
        let classes = self
            .classes
            .iter()
            .map(|c| c.intersection(s))
            .filter(|c| !c.is_empty())
            .collect();
        Colouring::from_disjoint(classes)
    }

    /// Combines colourings of disjoint vertex sets.
    pub fn union(&self, other: &Colouring) -> Colouring {
        assert!(
            self.ground().is_disjoint_from(other.ground()),
            "colourings overlap on {:?}",
            self.ground().intersection(other.ground())
        );
        let mut classes = self.classes.clone();
        classes.extend_from_slice(&other.classes);
        Colouring::from_disjoint(classes)
    }

    /// True if the classes partition all of `V(g)` and every class induces
    /// an acyclic subdigraph.
    pub fn is_valid_for(&self, g: &Digraph) -> bool {
        self.is_valid_on(g, g.vertices())
    }

    /// True if the classes partition `ground` and every class induces an
    /// acyclic subdigraph of `g`.
    pub fn is_valid_on(&self, g: &Digraph, ground: VertexSet) -> bool {
        self.ground() == ground
            && self.classes.iter().map(|c| c.len()).sum::<usize>() == ground.len()
            && self
                .classes
                .iter()
                .all(|c| g.is_acyclic_within(c.mask()))
    }
}

impl fmt::Display for Colouring {
    /// One line per class: the sorted vertex list, classes ordered by
    /// smallest member.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{class}")?;
        }
        Ok(())
    }
}

/// Turns a matching of the auxiliary graph on `members` into a colouring
/// of those vertices: one class of size 2 per matched pair, one singleton
/// per exposed vertex.
///
/// Each matched pair must induce at most one arc of `g`; a matched digon
/// means the auxiliary graph was built wrongly and is rejected.
pub fn matching_to_colouring(
    g: &Digraph,
    members: VertexSet,
    pairs: &[(usize, usize)],
) -> Result<Colouring, ColouringError> {
    let mut classes = Vec::with_capacity(members.len());
    let mut covered = VertexSet::EMPTY;
    for &(u, v) in pairs {
        if !members.contains(u) || !members.contains(v) || u == v {
            return Err(ColouringError::PairOutsideSet { u, v });
        }
        for w in [u, v] {
            if covered.contains(w) {
                return Err(ColouringError::SharedEndpoint { vertex: w });
            }
            covered.insert(w);
        }
        if g.is_digon(u, v) {
            return Err(ColouringError::DigonPair { u, v });
        }
        classes.push([u, v].into_iter().collect());
    }
    for v in members.minus(covered).iter() {
        classes.push(VertexSet::singleton(v));
    }
    Ok(Colouring::from_disjoint(classes))
}
