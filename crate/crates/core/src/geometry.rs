//! The unitary geometry on GF(4)³: hermitian form, alternating trace form,
//! the 36-vector set V₁ and its projective point classes.
//!
//! The hermitian form is evaluated with the identity Gram matrix,
//! h(x,y) = Σᵢ xᵢ·conj(yᵢ). Every non-degenerate hermitian form on GF(4)³
//! is equivalent to this one, so nothing is lost by fixing it; it also makes
//! h(x,x) equal to the support weight of x mod 2, which keeps the vertex
//! enumeration easy to audit.
//!
//! Vectors are ordered lexicographically on their coordinate codes. All
//! downstream graphs, matrices and reports inherit that order, so repeated
//! runs are byte-reproducible.

use serde::Serialize;

use crate::gf4::Gf4;

/// A vector in GF(4)³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector3([Gf4; 3]);

impl Vector3 {
    pub const ZERO: Self = Vector3([Gf4::ZERO; 3]);

    pub const fn new(coords: [Gf4; 3]) -> Self {
        Vector3(coords)
    }

    pub const fn coords(self) -> [Gf4; 3] {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Number of nonzero coordinates.
    pub fn weight(self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    /// Componentwise sum (the GF(2)-space structure of V).
    pub fn add(self, rhs: Self) -> Self {
        Vector3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }

    /// Scalar multiple c·x.
    pub fn scale(self, c: Gf4) -> Self {
        Vector3([c * self.0[0], c * self.0[1], c * self.0[2]])
    }

    /// 6-bit code packing the three coordinate codes, first coordinate most
    /// significant. Defines the lexicographic vector order.
    pub fn lex_code(self) -> u8 {
        (self.0[0].code() << 4) | (self.0[1].code() << 2) | self.0[2].code()
    }

    pub fn from_lex_code(code: u8) -> Self {
        assert!(code < 64);
        Vector3([
            Gf4::new((code >> 4) & 3),
            Gf4::new((code >> 2) & 3),
            Gf4::new(code & 3),
        ])
    }

    /// All 64 vectors of GF(4)³ in lexicographic order.
    pub fn all() -> impl Iterator<Item = Vector3> {
        (0u8..64).map(Vector3::from_lex_code)
    }

    /// Rendering like `(1,w,0)` with the field's text symbols.
    pub fn render(self) -> String {
        format!(
            "({},{},{})",
            self.0[0].symbol(),
            self.0[1].symbol(),
            self.0[2].symbol()
        )
    }

    /// Coordinates as one-character strings, for JSON export.
    pub fn symbols(self) -> [String; 3] {
        [
            self.0[0].symbol().to_string(),
            self.0[1].symbol().to_string(),
            self.0[2].symbol().to_string(),
        ]
    }
}

/// Hermitian form with identity Gram matrix: h(x,y) = Σ xᵢ·conj(yᵢ).
///
/// Linear in the first argument, conjugate-symmetric: h(y,x) = conj(h(x,y)).
pub fn hermitian(x: Vector3, y: Vector3) -> Gf4 {
    let (x, y) = (x.coords(), y.coords());
    x[0] * y[0].conj() + x[1] * y[1].conj() + x[2] * y[2].conj()
}

/// The alternating GF(2)-bilinear form s(x,y) = h(x,y) + h(y,x) = trace h(x,y).
///
/// Takes values in {0, 1} ⊂ GF(4) and vanishes on the diagonal.
pub fn alternating(x: Vector3, y: Vector3) -> Gf4 {
    hermitian(x, y).trace()
}

/// All 36 vectors with h(x,x) = 1, in lexicographic order.
///
/// With the identity Gram matrix h(x,x) is the support weight mod 2, so
/// these are exactly the vectors of odd weight: 9 of weight 1 and 27 of
/// weight 3.
pub fn enumerate_v1() -> Vec<Vector3> {
    Vector3::all()
        .filter(|&x| hermitian(x, x) == Gf4::ONE)
        .collect()
}

/// A projective point: the class {x, ωx, ω̄x} of a nonzero vector.
///
/// The representative is the unique member whose first nonzero coordinate
/// equals 1; members are listed in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjPoint {
    representative: [String; 3],
    #[serde(skip)]
    rep_vector: Vector3,
    #[serde(skip)]
    member_vectors: [Vector3; 3],
}

impl ProjPoint {
    pub fn representative(&self) -> Vector3 {
        self.rep_vector
    }

    pub fn members(&self) -> [Vector3; 3] {
        self.member_vectors
    }

    pub fn contains(&self, x: Vector3) -> bool {
        self.member_vectors.contains(&x)
    }
}

/// Canonical projective representative of a nonzero vector: scale so the
/// first nonzero coordinate is 1.
pub fn proj_representative(x: Vector3) -> Vector3 {
    debug_assert!(!x.is_zero());
    let lead = x.coords().into_iter().find(|c| !c.is_zero()).unwrap();
    x.scale(lead.inverse().unwrap())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("input contains the zero vector")]
    ZeroVector,
    #[error("input is not closed under nonzero scalar multiplication: missing {0}")]
    NotScalarClosed(String),
}

/// Partitions a scalar-closed set of nonzero vectors into projective points.
///
/// Classes are returned sorted by their canonical representative, so the
/// class order (and hence every class index in exports) is deterministic.
pub fn proj_points(vectors: &[Vector3]) -> Result<Vec<ProjPoint>, GeometryError> {
    use std::collections::BTreeSet;
    let set: BTreeSet<Vector3> = vectors.iter().copied().collect();
    if set.contains(&Vector3::ZERO) {
        return Err(GeometryError::ZeroVector);
    }
    for &x in &set {
        for c in [Gf4::OMEGA, Gf4::OMEGA_BAR] {
            if !set.contains(&x.scale(c)) {
                return Err(GeometryError::NotScalarClosed(x.scale(c).render()));
            }
        }
    }
    let mut reps: Vec<Vector3> = set.iter().map(|&x| proj_representative(x)).collect();
    reps.sort();
    reps.dedup();
    Ok(reps
        .into_iter()
        .map(|rep| {
            let mut members = [rep, rep.scale(Gf4::OMEGA), rep.scale(Gf4::OMEGA_BAR)];
            members.sort();
            ProjPoint {
                representative: rep.symbols(),
                rep_vector: rep,
                member_vectors: members,
            }
        })
        .collect())
}

/// The isotropic projective points of the whole space: classes of nonzero x
/// with h(x,x) = 0.
pub fn isotropic_points() -> Vec<ProjPoint> {
    let vectors: Vec<Vector3> = Vector3::all()
        .filter(|&x| !x.is_zero() && hermitian(x, x) == Gf4::ZERO)
        .collect();
    proj_points(&vectors).expect("isotropic set is scalar-closed")
}

/// One V₁ vector in the JSON export: coordinates, class index and the class
/// representative.
#[derive(Debug, Serialize)]
pub struct V1Entry {
    pub index: usize,
    pub coords: [String; 3],
    pub class_index: usize,
    pub class_representative: [String; 3],
}

/// JSON-exportable description of V₁ and its 12 projective classes.
pub fn v1_export() -> Vec<V1Entry> {
    let v1 = enumerate_v1();
    let classes = proj_points(&v1).expect("V1 is scalar-closed");
    v1.iter()
        .enumerate()
        .map(|(index, &x)| {
            let class_index = classes
                .iter()
                .position(|p| p.contains(x))
                .expect("every V1 vector lies in a class");
            V1Entry {
                index,
                coords: x.symbols(),
                class_index,
                class_representative: classes[class_index].representative.clone(),
            }
        })
        .collect()
}
