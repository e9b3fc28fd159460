use dicrit::{Digraph, UGraph};
use rand::Rng;

pub fn random_digraph(rng: &mut impl Rng, n: usize, arc_prob: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(arc_prob) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs)
}

pub fn random_ugraph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> UGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    UGraph::new(n, edges)
}
