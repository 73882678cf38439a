//! Arithmetic in the four-element field GF(4) = {0, 1, ω, ω̄}.
//!
//! Elements are stored as 2-bit codes: 0, 1, 2 (ω), 3 (ω̄), where ω is a
//! primitive cube root of unity satisfying ω² = ω + 1. Addition is bitwise
//! XOR (the field has characteristic 2), multiplication is a 16-entry table.
//!
//! ```text
//! ·  | 0  1  ω  ω̄
//! ---+------------
//! 0  | 0  0  0  0
//! 1  | 0  1  ω  ω̄
//! ω  | 0  ω  ω̄  1
//! ω̄  | 0  ω̄  1  ω
//! ```
//!
//! The Frobenius map x ↦ x² is the unique non-trivial field automorphism;
//! it fixes the prime subfield {0, 1} and swaps ω and ω̄. On top of it sit
//! the relative trace x + x² (into GF(2)) and norm x·x² used by the
//! hermitian form in [`crate::geometry`].
//!
//! Elements render as `0`, `1`, `w`, `W` in text output.

use std::fmt;
use std::ops::{Add, Mul};

/// An element of GF(4), wrapping the 2-bit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

const MUL_TABLE: [[u8; 4]; 4] = [
    [0, 0, 0, 0], // 0 · x
    [0, 1, 2, 3], // 1 · x
    [0, 2, 3, 1], // ω · x
    [0, 3, 1, 2], // ω̄ · x
];

impl Gf4 {
    pub const ZERO: Self = Gf4(0);
    pub const ONE: Self = Gf4(1);
    pub const OMEGA: Self = Gf4(2);
    pub const OMEGA_BAR: Self = Gf4(3);

    /// All four elements in code order.
    pub const ELEMENTS: [Self; 4] = [Self::ZERO, Self::ONE, Self::OMEGA, Self::OMEGA_BAR];

    /// Builds an element from its 2-bit code.
    ///
    /// Panics if `code > 3`.
    pub const fn new(code: u8) -> Self {
        assert!(code < 4, "GF(4) codes are 0..=3");
        Gf4(code)
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Field addition; XOR of the codes.
    pub const fn add(self, rhs: Self) -> Self {
        Gf4(self.0 ^ rhs.0)
    }

    /// Field multiplication via lookup table.
    pub const fn mul(self, rhs: Self) -> Self {
        Gf4(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }

    /// The Frobenius automorphism x ↦ x². Involutory; fixes 0 and 1.
    pub const fn conj(self) -> Self {
        match self.0 {
            2 => Gf4(3),
            3 => Gf4(2),
            c => Gf4(c),
        }
    }

    /// Trace into the prime field: x + x². Always 0 or 1.
    pub const fn trace(self) -> Self {
        self.add(self.conj())
    }

    /// Norm onto the prime field: x · x² = x³. Equals 1 iff x ≠ 0.
    pub const fn norm(self) -> Self {
        self.mul(self.conj())
    }

    /// Multiplicative inverse; `None` for zero.
    pub const fn inverse(self) -> Option<Self> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            _ => Some(Gf4(2)),
        }
    }

    /// Single-character rendering used in reports: `0`, `1`, `w`, `W`.
    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [Gf4; 4] = Gf4::ELEMENTS;

    #[test]
    fn addition_examples() {
        assert_eq!(Gf4::OMEGA + Gf4::OMEGA_BAR, Gf4::ONE);
        assert_eq!(Gf4::ONE + Gf4::ONE, Gf4::ZERO);
        for x in ALL {
            assert_eq!(x + Gf4::ZERO, x);
            assert_eq!(x + x, Gf4::ZERO);
        }
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA, Gf4::OMEGA_BAR);
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA_BAR, Gf4::ONE);
        for x in ALL {
            assert_eq!(x * Gf4::ZERO, Gf4::ZERO);
            assert_eq!(x * Gf4::ONE, x);
        }
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Gf4::OMEGA.conj(), Gf4::OMEGA_BAR);
        assert_eq!(Gf4::ONE.conj(), Gf4::ONE);
        assert_eq!(Gf4::OMEGA_BAR.conj().conj(), Gf4::OMEGA_BAR);
        // conj fixes exactly the prime subfield
        for x in ALL {
            assert_eq!(x.conj() == x, x == Gf4::ZERO || x == Gf4::ONE);
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Gf4::OMEGA.trace(), Gf4::ONE);
        assert_eq!(Gf4::ONE.trace(), Gf4::ZERO);
        assert_eq!(Gf4::ZERO.trace(), Gf4::ZERO);
    }

    /// Exhaustive field axioms over all element tuples.
    #[test]
    fn field_axioms_exhaustive() {
        for a in ALL {
            for b in ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
        // additive inverse is the element itself; multiplicative inverses exist
        for a in ALL {
            assert_eq!(a + a, Gf4::ZERO);
            match a.inverse() {
                Some(inv) => assert_eq!(a * inv, Gf4::ONE),
                None => assert!(a.is_zero()),
            }
        }
        // nonzero elements form a cyclic group of order 3
        for a in ALL {
            if !a.is_zero() {
                assert_eq!(a * a * a, Gf4::ONE);
            }
        }
    }

    /// conj is a field automorphism, checked on all 16 pairs.
    #[test]
    fn conj_is_automorphism() {
        for a in ALL {
            for b in ALL {
                assert_eq!((a + b).conj(), a.conj() + b.conj());
                assert_eq!((a * b).conj(), a.conj() * b.conj());
            }
        }
    }

    #[test]
    fn trace_and_norm_land_in_prime_field() {
        for a in ALL {
            assert!(a.trace() == Gf4::ZERO || a.trace() == Gf4::ONE);
            assert!(a.norm() == Gf4::ZERO || a.norm() == Gf4::ONE);
            assert_eq!(a.norm() == Gf4::ONE, !a.is_zero());
        }
    }

    #[test]
    fn rendering() {
        let rendered: String = ALL.iter().map(|x| x.symbol()).collect();
        assert_eq!(rendered, "01wW");
    }
}
