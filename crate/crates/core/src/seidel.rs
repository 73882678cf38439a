//! Exact integer matrices and the Seidel-matrix identity suite for the
//! 36-vertex construction.
//!
//! Everything here is integer arithmetic on dense n×n matrices; no floating
//! point is involved anywhere, so every identity below is decided exactly.

use serde::Serialize;

use crate::graph::{Graph, GraphError, VertexSet};

/// Dense n×n matrix over i64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i64::from(i == j))
    }

    /// The all-ones matrix J.
    pub fn ones(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![1; n * n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Rows as vectors, for JSON export.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Plain-text dump with aligned entries, one row per line.
    pub fn render_text(&self) -> String {
        let width = self
            .data
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{:>width$}", self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }
}

/// Per-row entry counts of a Seidel matrix: (zeros, minus ones, plus ones).
/// Returns the common profile if every row agrees, else `None`.
pub fn uniform_row_profile(s: &IntMatrix) -> Option<(usize, usize, usize)> {
    let mut profile = None;
    for i in 0..s.n() {
        let mut counts = (0, 0, 0);
        for j in 0..s.n() {
            match s.get(i, j) {
                0 => counts.0 += 1,
                -1 => counts.1 += 1,
                1 => counts.2 += 1,
                _ => return None,
            }
        }
        match profile {
            None => profile = Some(counts),
            Some(p) if p == counts => {}
            Some(_) => return None,
        }
    }
    profile
}

/// One evaluated identity in the Seidel suite.
#[derive(Debug, Clone, Serialize)]
pub struct SeidelIdentity {
    /// Stable identifier, `eq-1` … `eq-9` plus recorded variants.
    pub id: &'static str,
    /// The identity as evaluated.
    pub statement: &'static str,
    pub holds: bool,
    /// Erratum note when the circulated form of the identity differs from
    /// the evaluated one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

/// Result of evaluating the full identity chain eq-1 … eq-9 on a 36-vertex
/// graph and its switch.
#[derive(Debug, Clone, Serialize)]
pub struct SeidelReport {
    pub identities: Vec<SeidelIdentity>,
}

impl SeidelReport {
    /// True when every identity (with its noted corrections) holds and the
    /// recorded inconsistent variants indeed fail.
    pub fn all_consistent(&self) -> bool {
        self.identities.iter().all(|i| {
            if i.id.ends_with("-as-printed") {
                !i.holds
            } else {
                i.holds
            }
        })
    }

    pub fn get(&self, id: &str) -> Option<&SeidelIdentity> {
        self.identities.iter().find(|i| i.id == id)
    }
}

/// Evaluates the identity chain that certifies the switching argument on a
/// 36-vertex graph `gamma` with switching set `w`:
///
/// * eq-1: 2A = J − I − S
/// * eq-2: (2A)² = 36I + 24J
/// * eq-3: (J − I − S)² = 36I + 24J
/// * eq-4: SJ = JS = 5J
/// * eq-5: S² = 35I − 2S (the +2S variant is evaluated and recorded too)
/// * eq-6: S′ = DSD
/// * eq-7: S′² = 35I − 2S′
/// * eq-8: S′ = J − I − 2A′
/// * eq-9: JA′ = A′J = 21J
///
/// All arithmetic is exact. Requires a 36-vertex graph.
pub fn verify_seidel_identities(gamma: &Graph, w: VertexSet) -> Result<SeidelReport, GraphError> {
    if gamma.n() != 36 {
        return Err(GraphError::OrderMismatch {
            left: gamma.n(),
            right: 36,
        });
    }
    let n = 36;
    let gamma_prime = gamma.switch(w);

    let a = gamma.adjacency_matrix();
    let s = gamma.seidel_matrix();
    let a_prime = gamma_prime.adjacency_matrix();
    let s_prime = gamma_prime.seidel_matrix();
    let i = IntMatrix::identity(n);
    let j = IntMatrix::ones(n);
    let d = IntMatrix::from_fn(n, |r, c| {
        if r != c {
            0
        } else if w.contains(r) {
            -1
        } else {
            1
        }
    });

    let two_a = a.scale(2);
    let j_minus_i_minus_s = j.sub(&i).sub(&s);
    let rhs_36i_24j = i.scale(36).add(&j.scale(24));
    let dsd = d.mul(&s).mul(&d);
    let s2 = s.mul(&s);
    let sp2 = s_prime.mul(&s_prime);

    let identities = vec![
        SeidelIdentity {
            id: "eq-1",
            statement: "2A = J - I - S",
            holds: two_a == j_minus_i_minus_s,
            note: Some("circulated form reads 2A = J - I - B; B denotes the Seidel matrix S"),
        },
        SeidelIdentity {
            id: "eq-2",
            statement: "(2A)^2 = 36I + 24J",
            holds: two_a.mul(&two_a) == rhs_36i_24j,
            note: None,
        },
        SeidelIdentity {
            id: "eq-3",
            statement: "(J - I - S)^2 = 36I + 24J",
            holds: j_minus_i_minus_s.mul(&j_minus_i_minus_s) == rhs_36i_24j,
            note: None,
        },
        SeidelIdentity {
            id: "eq-4",
            statement: "SJ = JS = 5J",
            holds: s.mul(&j) == j.scale(5) && j.mul(&s) == j.scale(5),
            note: None,
        },
        SeidelIdentity {
            id: "eq-5",
            statement: "S^2 = 35I - 2S",
            holds: s2 == i.scale(35).sub(&s.scale(2)),
            note: Some(
                "circulated form reads S^2 = 35I + 2S; expanding eq-3 with eq-4 forces the \
                 -2S sign, which is also the only sign compatible with eq-6 and eq-7",
            ),
        },
        SeidelIdentity {
            id: "eq-5-as-printed",
            statement: "S^2 = 35I + 2S",
            holds: s2 == i.scale(35).add(&s.scale(2)),
            note: Some("recorded to document the sign erratum; expected to fail"),
        },
        SeidelIdentity {
            id: "eq-6",
            statement: "S' = DSD",
            holds: s_prime == dsd,
            note: Some(
                "circulated form squares the left-hand side; switching conjugates the Seidel \
                 matrix by D, so the unsquared form is the consistent one",
            ),
        },
        SeidelIdentity {
            id: "eq-7",
            statement: "S'^2 = 35I - 2S'",
            holds: sp2 == i.scale(35).sub(&s_prime.scale(2)),
            note: None,
        },
        SeidelIdentity {
            id: "eq-8",
            statement: "S' = J - I - 2A'",
            holds: s_prime == j.sub(&i).sub(&a_prime.scale(2)),
            note: None,
        },
        SeidelIdentity {
            id: "eq-9",
            statement: "JA' = A'J = 21J",
            holds: j.mul(&a_prime) == j.scale(21) && a_prime.mul(&j) == j.scale(21),
            note: None,
        },
    ];

    Ok(SeidelReport { identities })
}
