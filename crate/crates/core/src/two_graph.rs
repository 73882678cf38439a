//! Two-graphs: the switching-class invariant of a graph.
//!
//! The two-graph associated with a graph is the set of vertex triples that
//! induce an odd number of edges. It is invariant under Seidel switching,
//! and two graphs on the same labelled vertex set have equal two-graphs
//! exactly when one is a switch of the other; `switching_witness` makes
//! that effective by recovering the switching set.

use serde::Serialize;

use crate::graph::{Graph, GraphError, VertexSet};

/// A two-graph: a set of coherent 3-subsets of {0, …, n−1}.
///
/// Triples are stored sorted, so equality is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoGraph {
    n: usize,
    triples: Vec<[usize; 3]>,
}

impl TwoGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn contains(&self, triple: [usize; 3]) -> bool {
        let mut t = triple;
        t.sort_unstable();
        self.triples.binary_search(&t).is_ok()
    }

    /// Checks the defining axiom: every 4-subset of points contains an even
    /// number of member triples. Exhaustive over all C(n,4) subsets.
    pub fn satisfies_even_intersection(&self) -> bool {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    for d in (c + 1)..self.n {
                        let count = usize::from(self.contains([a, b, c]))
                            + usize::from(self.contains([a, b, d]))
                            + usize::from(self.contains([a, c, d]))
                            + usize::from(self.contains([b, c, d]));
                        if count % 2 != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Returns λ if the two-graph is a 2-(n,3,λ) design: every pair of
    /// points lies in exactly λ triples.
    pub fn regularity(&self) -> Option<usize> {
        if self.n < 2 {
            return None;
        }
        let mut pair_counts = vec![0usize; self.n * self.n];
        for t in &self.triples {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                pair_counts[t[i] * self.n + t[j]] += 1;
            }
        }
        let lambda = pair_counts[1];
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if pair_counts[i * self.n + j] != lambda {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Triple count plus regularity parameter, for the JSON report.
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "points": self.n,
            "triples": self.triples.len(),
            "regular_lambda": self.regularity(),
        })
    }
}

/// The two-graph associated with a graph: all 3-subsets inducing 1 or 3
/// edges.
pub fn associated_two_graph(g: &Graph) -> TwoGraph {
    let n = g.n();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let edges = usize::from(g.has_edge(a, b))
                    + usize::from(g.has_edge(a, c))
                    + usize::from(g.has_edge(b, c));
                if edges % 2 == 1 {
                    triples.push([a, b, c]);
                }
            }
        }
    }
    TwoGraph { n, triples }
}

/// Finds a switching set `Y` with `switch(g1, Y) = g2`, if one exists.
///
/// The sign of vertex 0 is fixed to +1 and the remaining signs are forced
/// by the first Seidel row (off-diagonal Seidel entries are ±1, so the
/// propagation is total); the candidate is then verified on every pair.
/// Returns `None` when the graphs are not switching equivalent, which by
/// the two-graph correspondence happens exactly when their associated
/// two-graphs differ.
pub fn switching_witness(g1: &Graph, g2: &Graph) -> Result<Option<VertexSet>, GraphError> {
    if g1.n() != g2.n() {
        return Err(GraphError::OrderMismatch {
            left: g1.n(),
            right: g2.n(),
        });
    }
    let n = g1.n();
    if n == 0 {
        return Ok(Some(VertexSet::EMPTY));
    }
    // d[j] = −1 iff j ∈ Y; s2[0][j] = d[0]·d[j]·s1[0][j] with d[0] = +1
    let mut mask = 0u64;
    for j in 1..n {
        if g1.has_edge(0, j) != g2.has_edge(0, j) {
            mask |= 1 << j;
        }
    }
    let y = VertexSet::from_mask(mask);
    if &g1.switch(y) == g2 {
        Ok(Some(y))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_graph_has_empty_two_graph() {
        let t = associated_two_graph(&Graph::empty(5).unwrap());
        assert!(t.triples().is_empty());
        assert_eq!(t.regularity(), Some(0));
        assert!(t.satisfies_even_intersection());
    }

    #[test]
    fn triangle_gives_the_single_triple() {
        let t = associated_two_graph(&Graph::complete(3).unwrap());
        assert_eq!(t.triples(), &[[0, 1, 2]]);
        assert!(t.satisfies_even_intersection());
    }

    #[test]
    fn path_with_isolated_vertex_is_not_regular() {
        // P3 plus an isolated vertex: pairs lie in unequal triple counts
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let t = associated_two_graph(&g);
        assert_eq!(t.regularity(), None);
        assert!(t.satisfies_even_intersection());
    }

    #[test]
    fn switching_preserves_the_two_graph() {
        let g = Graph::cycle(7).unwrap();
        let y = VertexSet::from_indices(&[1, 2, 5]).unwrap();
        assert_eq!(associated_two_graph(&g), associated_two_graph(&g.switch(y)));
    }

    #[test]
    fn witness_for_identical_graphs_is_empty() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(switching_witness(&g, &g).unwrap(), Some(VertexSet::EMPTY));
    }

    #[test]
    fn witness_recovers_a_switching_set() {
        let g = Graph::cycle(8).unwrap();
        let y = VertexSet::from_indices(&[0, 2, 3, 7]).unwrap();
        let h = g.switch(y);
        let w = switching_witness(&g, &h).unwrap().expect("equivalent");
        assert_eq!(g.switch(w), h);
        // the witness is y or its complement
        assert!(w == y || w == y.complement_within(8));
    }

    #[test]
    fn non_equivalent_graphs_have_no_witness() {
        let k3 = Graph::complete(3).unwrap();
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(switching_witness(&k3, &e3).unwrap(), None);
        assert_ne!(associated_two_graph(&k3), associated_two_graph(&e3));
    }

    #[test]
    fn witness_rejects_order_mismatch() {
        let g = Graph::empty(3).unwrap();
        let h = Graph::empty(4).unwrap();
        assert!(switching_witness(&g, &h).is_err());
    }
}
