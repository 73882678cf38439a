//! The end-to-end construction: the 36-vertex orthogonality graph Γ on V₁,
//! the exhaustive search for class-union switching sets, and the edge-type
//! classification of the switched graph's complement.
//!
//! The switching sets of interest are unions of 6 of the 12 projective
//! point classes of V₁ (18 vertices each). There are C(12,6) = 924 of
//! them; all are scanned, and the ones whose switch is an srg(36,21,12,12)
//! are kept. Since switching by a set and by its complement agree, valid
//! sets come in complementary pairs; the lexicographically least valid
//! class selection is used as the canonical witness everywhere.

use itertools::Itertools;
use serde::Serialize;

use crate::geometry::{self, ProjPoint, Vector3};
use crate::gf4::Gf4;
use crate::graph::{Graph, SrgOutcome, SrgParams, VertexSet};

/// The fixed target parameters after switching.
pub const GAMMA_PARAMS: SrgParams = SrgParams::new(36, 15, 6, 6);
pub const GAMMA_PRIME_PARAMS: SrgParams = SrgParams::new(36, 21, 12, 12);
pub const COMPLEMENT_PARAMS: SrgParams = SrgParams::new(36, 14, 4, 6);

/// V₁ with its projective classes and the orthogonality graph Γ.
///
/// Vertex i of every graph in this crate's pipeline is `vectors()[i]`, in
/// lexicographic coordinate order; two distinct vertices are adjacent in Γ
/// exactly when the alternating form vanishes on them.
pub struct GammaConstruction {
    vectors: Vec<Vector3>,
    classes: Vec<ProjPoint>,
    class_of: Vec<usize>,
    class_vertices: Vec<VertexSet>,
    graph: Graph,
}

impl GammaConstruction {
    pub fn new() -> Self {
        let vectors = geometry::enumerate_v1();
        let classes = geometry::proj_points(&vectors).expect("V1 is scalar-closed");
        let class_of: Vec<usize> = vectors
            .iter()
            .map(|&x| {
                classes
                    .iter()
                    .position(|c| c.contains(x))
                    .expect("V1 vector in some class")
            })
            .collect();
        let mut class_vertices = vec![VertexSet::EMPTY; classes.len()];
        for (vertex, &class) in class_of.iter().enumerate() {
            class_vertices[class] =
                VertexSet::from_mask(class_vertices[class].mask() | (1 << vertex));
        }
        let n = vectors.len();
        let mut graph = Graph::empty(n).expect("36 <= 64");
        for u in 0..n {
            for v in (u + 1)..n {
                if geometry::alternating(vectors[u], vectors[v]) == Gf4::ZERO {
                    graph.add_edge(u, v).expect("in range");
                }
            }
        }
        GammaConstruction {
            vectors,
            classes,
            class_of,
            class_vertices,
            graph,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vectors(&self) -> &[Vector3] {
        &self.vectors
    }

    pub fn classes(&self) -> &[ProjPoint] {
        &self.classes
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.class_of[vertex]
    }

    /// The 3 vertices forming projective class `class`.
    pub fn class_vertex_set(&self, class: usize) -> VertexSet {
        self.class_vertices[class]
    }

    /// Union of the given classes as a vertex set.
    pub fn union_of_classes(&self, class_indices: &[usize]) -> VertexSet {
        let mask = class_indices
            .iter()
            .fold(0u64, |acc, &c| acc | self.class_vertices[c].mask());
        VertexSet::from_mask(mask)
    }

    pub fn hermitian_between(&self, u: usize, v: usize) -> Gf4 {
        geometry::hermitian(self.vectors[u], self.vectors[v])
    }
}

impl Default for GammaConstruction {
    fn default() -> Self {
        Self::new()
    }
}

/// The orthogonality graph Γ on V₁ in the canonical vertex order.
pub fn build_gamma() -> Graph {
    GammaConstruction::new().graph
}

/// One examined 6-class switching candidate.
#[derive(Debug, Clone, Serialize)]
pub struct SwitchCandidate {
    /// Indices into the 12 projective classes, ascending.
    pub class_indices: Vec<usize>,
    /// The union of those classes: 18 vertices.
    #[serde(serialize_with = "serialize_vertex_set")]
    pub vertex_set: VertexSet,
    /// Degree of the switched graph if it is regular.
    pub regular_degree: Option<usize>,
    /// Parameters of the switched graph if it is strongly regular.
    pub result_params: Option<SrgParams>,
}

fn serialize_vertex_set<S: serde::Serializer>(v: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize as _;
    v.indices().serialize(ser)
}

impl SwitchCandidate {
    /// Whether switching produced the srg(36,21,12,12).
    pub fn is_target(&self) -> bool {
        self.result_params == Some(GAMMA_PRIME_PARAMS)
    }
}

/// Examines all C(12,6) = 924 unions of 6 projective classes, in
/// lexicographic order of the class-index selections.
pub fn scan_switch_candidates(construction: &GammaConstruction) -> Vec<SwitchCandidate> {
    let class_count = construction.classes().len();
    (0..class_count)
        .combinations(6)
        .map(|class_indices| {
            let vertex_set = construction.union_of_classes(&class_indices);
            let switched = construction.graph().switch(vertex_set);
            let regular_degree = switched.is_regular();
            let result_params = match switched.check_srg() {
                SrgOutcome::Srg(p) => Some(p),
                _ => None,
            };
            SwitchCandidate {
                class_indices,
                vertex_set,
                regular_degree,
                result_params,
            }
        })
        .collect()
}

/// The candidates whose switch verifies as srg(36,21,12,12).
pub fn find_switch_sets(construction: &GammaConstruction) -> Vec<SwitchCandidate> {
    scan_switch_candidates(construction)
        .into_iter()
        .filter(SwitchCandidate::is_target)
        .collect()
}

/// The canonical switching witness: the first valid candidate in the
/// lexicographic scan order (class indices follow class representatives,
/// so this tie-break is reproducible).
pub fn canonical_switch_candidate(construction: &GammaConstruction) -> Option<SwitchCandidate> {
    scan_switch_candidates(construction)
        .into_iter()
        .find(SwitchCandidate::is_target)
}

/// Neighbour structure of one vertex of the switched graph, split by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NeighbourSplit {
    /// Neighbours on the vertex's own side; all must satisfy h ∈ {0, 1}.
    pub same_side: usize,
    /// Neighbours across; all must satisfy h ∈ {ω, ω̄}.
    pub cross_side: usize,
    /// Whether every neighbour satisfied the hermitian condition of its side.
    pub hermitian_conditions_hold: bool,
}

/// Checks, for every vertex u, that its switched-graph neighbourhood splits
/// into same-side neighbours with h(x,u) ∈ {0,1} and cross-side neighbours
/// with h(x,u) ∈ {ω,ω̄}, returning the (necessarily uniform) split when the
/// counts match `expected` for all vertices.
pub fn neighbour_splits(
    construction: &GammaConstruction,
    gamma_prime: &Graph,
    w: VertexSet,
) -> Vec<NeighbourSplit> {
    let n = gamma_prime.n();
    (0..n)
        .map(|u| {
            let mut split = NeighbourSplit {
                same_side: 0,
                cross_side: 0,
                hermitian_conditions_hold: true,
            };
            for x in 0..n {
                if x == u || !gamma_prime.has_edge(u, x) {
                    continue;
                }
                let h = construction.hermitian_between(x, u);
                if w.contains(x) == w.contains(u) {
                    split.same_side += 1;
                    if !(h == Gf4::ZERO || h == Gf4::ONE) {
                        split.hermitian_conditions_hold = false;
                    }
                } else {
                    split.cross_side += 1;
                    if !(h == Gf4::OMEGA || h == Gf4::OMEGA_BAR) {
                        split.hermitian_conditions_hold = false;
                    }
                }
            }
            split
        })
        .collect()
}

/// Edge-type tally of the complement of the switched graph.
///
/// Every complement edge must be one of: both ends in W with h ∈ {ω, ω̄};
/// both ends in the other side with h ∈ {ω, ω̄}; or one end on each side
/// with h = 1. All three conditions are conjugation-closed, so they do not
/// depend on the orientation of the pair.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeTypeTally {
    /// Both endpoints in W, h(u,v) ∈ {ω, ω̄}.
    pub both_in_w: usize,
    /// Both endpoints outside W, h(u,v) ∈ {ω, ω̄}.
    pub both_outside_w: usize,
    /// One endpoint on each side, h(u,v) = 1.
    pub crossing: usize,
    /// Complement edges matching none of the three types.
    pub violations: Vec<(usize, usize)>,
}

impl EdgeTypeTally {
    pub fn total_classified(&self) -> usize {
        self.both_in_w + self.both_outside_w + self.crossing
    }
}

pub fn classify_complement_edges(
    construction: &GammaConstruction,
    gamma_prime: &Graph,
    w: VertexSet,
) -> EdgeTypeTally {
    let complement = gamma_prime.complement();
    let mut tally = EdgeTypeTally {
        both_in_w: 0,
        both_outside_w: 0,
        crossing: 0,
        violations: Vec::new(),
    };
    for (u, v) in complement.edges() {
        let h = construction.hermitian_between(u, v);
        let omega_like = h == Gf4::OMEGA || h == Gf4::OMEGA_BAR;
        match (w.contains(u), w.contains(v)) {
            (true, true) if omega_like => tally.both_in_w += 1,
            (false, false) if omega_like => tally.both_outside_w += 1,
            (a, b) if a != b && h == Gf4::ONE => tally.crossing += 1,
            _ => tally.violations.push((u, v)),
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    fn construction() -> GammaConstruction {
        GammaConstruction::new()
    }

    #[test]
    fn gamma_is_srg_36_15_6_6() {
        let gamma = build_gamma();
        assert_eq!(gamma.check_srg(), SrgOutcome::Srg(GAMMA_PARAMS));
        for v in 0..36 {
            assert_eq!(gamma.degree(v), 15);
        }
    }

    #[test]
    fn vertex_not_adjacent_to_its_scalar_multiples() {
        let c = construction();
        for u in 0..36 {
            for m in [Gf4::OMEGA, Gf4::OMEGA_BAR] {
                let scaled = c.vectors()[u].scale(m);
                let v = c.vectors().iter().position(|&x| x == scaled).unwrap();
                assert!(!c.graph().has_edge(u, v));
            }
        }
    }

    #[test]
    fn class_bookkeeping_is_consistent() {
        let c = construction();
        assert_eq!(c.classes().len(), 12);
        for class in 0..12 {
            let set = c.class_vertex_set(class);
            assert_eq!(set.len(), 3);
            for v in set.indices() {
                assert_eq!(c.class_of(v), class);
            }
        }
        let all = c.union_of_classes(&(0..12).collect::<Vec<_>>());
        assert_eq!(all.len(), 36);
    }

    #[test]
    fn scan_examines_all_924_candidates() {
        let c = construction();
        let scan = scan_switch_candidates(&c);
        assert_eq!(scan.len(), 924);
        assert!(scan.iter().all(|cand| cand.vertex_set.len() == 18));
        // scan order is lexicographic on class indices
        assert_eq!(scan[0].class_indices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(scan[923].class_indices, vec![6, 7, 8, 9, 10, 11]);
    }

    #[test]
    fn a_valid_switching_set_exists() {
        let c = construction();
        let valid = find_switch_sets(&c);
        assert!(!valid.is_empty());
        for cand in &valid {
            assert_eq!(cand.regular_degree, Some(21));
            assert_eq!(cand.result_params, Some(GAMMA_PRIME_PARAMS));
        }
        // complement selection of a valid candidate is valid too
        let first = &valid[0];
        let complement_classes: Vec<usize> = (0..12)
            .filter(|c| !first.class_indices.contains(c))
            .collect();
        assert!(valid.iter().any(|c| c.class_indices == complement_classes));
    }

    #[test]
    fn canonical_candidate_is_lexicographically_least() {
        let c = construction();
        let canonical = canonical_switch_candidate(&c).unwrap();
        let valid = find_switch_sets(&c);
        assert_eq!(canonical.class_indices, valid[0].class_indices);
        for cand in &valid[1..] {
            assert!(canonical.class_indices < cand.class_indices);
        }
    }

    #[test]
    fn neighbour_splits_are_9_plus_12() {
        let c = construction();
        let cand = canonical_switch_candidate(&c).unwrap();
        let gamma_prime = c.graph().switch(cand.vertex_set);
        let splits = neighbour_splits(&c, &gamma_prime, cand.vertex_set);
        for split in splits {
            assert_eq!(split.same_side, 9);
            assert_eq!(split.cross_side, 12);
            assert!(split.hermitian_conditions_hold);
        }
    }

    #[test]
    fn complement_edge_trichotomy() {
        let c = construction();
        let cand = canonical_switch_candidate(&c).unwrap();
        let gamma_prime = c.graph().switch(cand.vertex_set);
        let tally = classify_complement_edges(&c, &gamma_prime, cand.vertex_set);
        assert!(tally.violations.is_empty());
        assert_eq!(tally.total_classified(), 252);
        assert_eq!(
            (tally.both_in_w, tally.both_outside_w, tally.crossing),
            (72, 72, 108)
        );
    }

    #[test]
    fn complement_is_srg_36_14_4_6() {
        let c = construction();
        let cand = canonical_switch_candidate(&c).unwrap();
        let complement = c.graph().switch(cand.vertex_set).complement();
        assert_eq!(complement.check_srg(), SrgOutcome::Srg(COMPLEMENT_PARAMS));
        assert_eq!(GAMMA_PRIME_PARAMS.complement(), COMPLEMENT_PARAMS);
    }

    #[test]
    fn complement_of_gamma_is_srg_36_20_10_12() {
        let gamma = build_gamma();
        assert_eq!(
            gamma.complement().check_srg().params(),
            Some(GAMMA_PARAMS.complement())
        );
        assert_eq!(GAMMA_PARAMS.complement().as_tuple(), (36, 20, 10, 12));
    }
}
