//! Construction and machine verification of the rank-3 strongly regular
//! graph srg(36,14,4,6) — the graph whose automorphism group is G₂(2) —
//! from the unitary geometry on GF(4)³.
//!
//! The pipeline: enumerate the 36 vectors with h(x,x) = 1, build the
//! orthogonality graph Γ = srg(36,15,6,6), search the 924 unions of 6
//! projective point classes for a Seidel switching set turning Γ into an
//! srg(36,21,12,12), and verify the complement, the edge-type trichotomy,
//! the two-graph invariants, the exact Seidel matrix identities and the
//! automorphism group orders (51840 and 12096) with their rank-3 actions.
//!
//! [`verify::run_full_verification`] executes every claim and returns a
//! machine-readable report.

pub mod aut;
pub mod geometry;
pub mod gf4;
pub mod graph;
pub mod graph6;
pub mod perm;
pub mod pipeline;
pub mod seidel;
pub mod two_graph;
pub mod verify;

pub use aut::{automorphism_group, count_automorphisms_backtrack, rank_and_subdegrees, AutOptions};
pub use geometry::{alternating, enumerate_v1, hermitian, proj_points, ProjPoint, Vector3};
pub use gf4::Gf4;
pub use graph::{Graph, GraphError, SrgOutcome, SrgParams, VertexSet};
pub use perm::{PermGroup, Permutation};
pub use pipeline::{build_gamma, GammaConstruction, SwitchCandidate};
pub use two_graph::{associated_two_graph, switching_witness, TwoGraph};
pub use verify::{run_full_verification, VerificationReport, VerifyOptions};
