//! Small dense graphs with one machine word per adjacency row.
//!
//! Graphs hold at most 64 vertices; a row is a `u64` neighbour bitmask.
//! That covers the 36-vertex graphs this crate is about with headroom, and
//! keeps the hot kernels (common-neighbour counts, switching, automorphism
//! search) at a popcount or an XOR per row.
//!
//! Strong regularity is decided twice: a combinatorial pair count, then the
//! exact integer matrix identity A² = kI + λA + μ(J−I−A) together with
//! AJ = JA = kJ. The two routes must agree; a disagreement is a bug in this
//! crate and panics rather than returning a quiet wrong answer.

use serde::Serialize;

use crate::seidel::IntMatrix;

/// Hard cap on the vertex count: one `u64` bitmask row per vertex.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("graphs have different vertex counts: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}

/// A set of vertex indices, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: Self = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self, GraphError> {
        let mut mask = 0u64;
        for &v in indices {
            if v >= MAX_VERTICES {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: MAX_VERTICES,
                });
            }
            mask |= 1 << v;
        }
        Ok(VertexSet(mask))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    /// Complement within the first `n` vertices.
    pub fn complement_within(self, n: usize) -> Self {
        VertexSet(!self.0 & full_mask(n))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&v| self.contains(v)).collect()
    }
}

const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Parameters (n, k, λ, μ) of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// Feasibility identity k(k−λ−1) = (n−k−1)μ, a counting fact every SRG
    /// satisfies.
    pub fn is_feasible(self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }

    /// Parameters of the complement graph. The intermediate n − 2k can be
    /// negative even though the final values never are.
    pub fn complement(self) -> SrgParams {
        let (n, k, l, m) = (self.n as i64, self.k as i64, self.lambda as i64, self.mu as i64);
        let lambda = n - 2 * k + m - 2;
        let mu = n - 2 * k + l;
        debug_assert!(lambda >= 0 && mu >= 0);
        SrgParams {
            n: self.n,
            k: self.n - self.k - 1,
            lambda: lambda as usize,
            mu: mu as usize,
        }
    }

    pub fn as_tuple(self) -> (usize, usize, usize, usize) {
        (self.n, self.k, self.lambda, self.mu)
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "srg({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Outcome of the strong-regularity check, distinguishing why a graph is
/// not strongly regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgOutcome {
    Srg(SrgParams),
    /// Vertices do not all have the same degree.
    NotRegular,
    /// Regular, but common-neighbour counts are not constant per pair type.
    RegularNotStrong,
    /// Complete and null graphs are excluded by definition.
    CompleteOrNull,
}

impl SrgOutcome {
    pub fn params(self) -> Option<SrgParams> {
        match self {
            SrgOutcome::Srg(p) => Some(p),
            _ => None,
        }
    }
}

/// An undirected loopless graph on an ordered vertex list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            g.rows[i] = full_mask(n) & !(1 << i);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n)?;
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    /// Flips one pair: edge becomes non-edge and vice versa.
    pub fn toggle_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.rows[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// The complement graph: off-diagonal adjacency flipped.
    pub fn complement(&self) -> Graph {
        let mask = full_mask(self.n);
        let rows = (0..self.n)
            .map(|i| !self.rows[i] & mask & !(1 << i))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Seidel switching with respect to `y`: pairs crossing between `y` and
    /// its complement are flipped, pairs inside either side are untouched.
    /// Switching w.r.t. `y` and w.r.t. its complement coincide.
    pub fn switch(&self, y: VertexSet) -> Graph {
        let mask = full_mask(self.n);
        let y = y.mask() & mask;
        let rows = (0..self.n)
            .map(|i| {
                let flip = if (y >> i) & 1 == 1 { !y } else { y };
                self.rows[i] ^ (flip & mask & !(1 << i))
            })
            .collect();
        Graph { n: self.n, rows }
    }

    /// Relabels vertices: in the image, `perm(u)` and `perm(v)` are adjacent
    /// iff `u` and `v` are adjacent here.
    pub fn relabel(&self, perm: &crate::perm::Permutation) -> Result<Graph, GraphError> {
        if perm.degree() != self.n {
            return Err(GraphError::OrderMismatch {
                left: self.n,
                right: perm.degree(),
            });
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm.apply(u), perm.apply(v))?;
        }
        Ok(g)
    }

    /// Adjacency matrix as an exact integer matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| i64::from(self.has_edge(i, j)))
    }

    /// Seidel matrix: 0 on the diagonal, −1 for edges, +1 for non-edges.
    pub fn seidel_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                0
            } else if self.has_edge(i, j) {
                -1
            } else {
                1
            }
        })
    }

    /// Strong-regularity check. Pair counting decides; when it reports an
    /// SRG, the exact matrix identities (A² = kI + λA + μ(J−I−A) and
    /// AJ = JA = kJ) are evaluated as an independent confirmation and any
    /// disagreement panics.
    pub fn check_srg(&self) -> SrgOutcome {
        let outcome = srg_scan_rows(&self.rows, self.n);
        if let SrgOutcome::Srg(params) = outcome {
            assert!(
                self.srg_matrix_identity_holds(params),
                "internal inconsistency: pair counting reports {params} but the \
                 matrix identity fails"
            );
            debug_assert!(params.is_feasible());
        }
        outcome
    }

    /// Exact evaluation of A² = kI + λA + μ(J−I−A) and AJ = JA = kJ.
    pub fn srg_matrix_identity_holds(&self, params: SrgParams) -> bool {
        if params.n != self.n {
            return false;
        }
        let n = self.n;
        let a = self.adjacency_matrix();
        let a2 = a.mul(&a);
        let (k, l, m) = (params.k as i64, params.lambda as i64, params.mu as i64);
        let expected = IntMatrix::identity(n)
            .scale(k)
            .add(&a.scale(l))
            .add(&IntMatrix::ones(n).sub(&IntMatrix::identity(n)).sub(&a).scale(m));
        if a2 != expected {
            return false;
        }
        let j = IntMatrix::ones(n);
        a.mul(&j) == j.scale(k) && j.mul(&a) == j.scale(k)
    }

    /// JSON view: order plus the full 0/1 adjacency matrix.
    pub fn to_json(&self) -> serde_json::Value {
        let adjacency: Vec<Vec<u8>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.has_edge(i, j))).collect())
            .collect();
        serde_json::json!({ "n": self.n, "adjacency": adjacency })
    }
}

/// Combinatorial strong-regularity scan on raw adjacency rows.
///
/// Shared by [`Graph::check_srg`] and the exhaustive small-graph driver,
/// which cannot afford a heap allocation per candidate graph.
pub(crate) fn srg_scan_rows(rows: &[u64], n: usize) -> SrgOutcome {
    if n == 0 {
        return SrgOutcome::CompleteOrNull;
    }
    let k = rows[0].count_ones() as usize;
    for &row in &rows[1..] {
        if row.count_ones() as usize != k {
            return SrgOutcome::NotRegular;
        }
    }
    if k == 0 || k == n - 1 {
        return SrgOutcome::CompleteOrNull;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let common = (rows[i] & rows[j]).count_ones() as usize;
            let slot = if (rows[i] >> j) & 1 == 1 {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c == common => {}
                Some(_) => return SrgOutcome::RegularNotStrong,
            }
        }
    }
    // 0 < k < n−1 guarantees both an adjacent and a non-adjacent pair exist.
    SrgOutcome::Srg(SrgParams::new(n, k, lambda.unwrap(), mu.unwrap()))
}
