//! Elements of the elementary abelian 2-group `T0 = <h_a(-1)>` of the
//! simply connected group, in the basis `h_i = h_{a_i}(-1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rootsystem::MAX_RANK;

/// A vector over GF(2) of length `rank`; bit `i - 1` is the exponent of `h_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusVector {
    bits: u16,
    rank: u8,
}

impl TorusVector {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        TorusVector {
            bits: 0,
            rank: rank as u8,
        }
    }

    pub fn from_bits(rank: usize, bits: u16) -> Self {
        assert!(rank <= MAX_RANK);
        TorusVector {
            bits: bits & mask(rank),
            rank: rank as u8,
        }
    }

    /// Builds `h_{i1} h_{i2} ...` from 1-based indices. Repeated indices cancel.
    pub fn from_indices(rank: usize, indices: &[usize]) -> Self {
        let mut t = Self::zero(rank);
        for &i in indices {
            assert!(i >= 1 && i <= rank, "index {i} out of range 1..={rank}");
            t.bits ^= 1 << (i - 1);
        }
        t
    }

    /// Reduces an integer coordinate vector mod 2.
    pub fn from_coords(coords: &[i32]) -> Self {
        let mut t = Self::zero(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                t.bits |= 1 << i;
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Whether `h_i` (1-based) occurs.
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.rank() && self.bits & (1 << (i - 1)) != 0
    }

    /// 1-based indices of the `h_i` that occur.
    pub fn indices(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.contains(i)).collect()
    }

    pub fn coords(&self) -> Vec<i32> {
        (0..self.rank())
            .map(|i| ((self.bits >> i) & 1) as i32)
            .collect()
    }

    /// Bit string with `h_1` first, e.g. `"1010101"` for `h1h3h5h7`.
    pub fn bit_string(&self) -> String {
        (0..self.rank())
            .map(|i| if self.bits & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }
}

fn mask(rank: usize) -> u16 {
    if rank >= 16 {
        u16::MAX
    } else {
        (1u16 << rank) - 1
    }
}

impl std::ops::Add for TorusVector {
    type Output = TorusVector;

    fn add(self, rhs: TorusVector) -> TorusVector {
        debug_assert_eq!(self.rank, rhs.rank);
        TorusVector {
            bits: self.bits ^ rhs.bits,
            rank: self.rank,
        }
    }
}

impl std::ops::AddAssign for TorusVector {
    fn add_assign(&mut self, rhs: TorusVector) {
        debug_assert_eq!(self.rank, rhs.rank);
        self.bits ^= rhs.bits;
    }
}

/// Renders as a product `h1h3h5`, or `1` for the identity.
impl fmt::Display for TorusVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "h{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TorusVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_cancel_in_pairs() {
        let t = TorusVector::from_indices(7, &[1, 3, 6, 1, 3, 6]);
        assert!(t.is_zero());
        assert_eq!(t.to_string(), "1");
    }

    #[test]
    fn display_and_bits() {
        let t = TorusVector::from_indices(7, &[1, 3, 5]);
        assert_eq!(t.to_string(), "h1h3h5");
        assert_eq!(t.bit_string(), "1010100");
        assert_eq!(
            TorusVector::from_coords(&[-1, -2, -3, -4, -2, -3, -2]),
            TorusVector::from_indices(7, &[1, 3, 6])
        );
    }

    #[test]
    fn addition_is_xor() {
        let a = TorusVector::from_indices(4, &[2, 4]);
        let b = TorusVector::from_indices(4, &[2]);
        assert_eq!(a + b, TorusVector::from_indices(4, &[4]));
        assert_eq!(a + a, TorusVector::zero(4));
    }
}
