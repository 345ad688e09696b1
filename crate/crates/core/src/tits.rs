//! The group `N0 = <m_a(1)>` as pairs `(w, t)` standing for `m_w h(t)`, where `m_w` is the
//! product of the simple lifts `m_i = m_{a_i}(1)` along a reduced word of `w` and `h(t)` is in
//! `T0 = <h_a(-1)>`, written in simple-coroot coordinates mod 2.
//!
//! Multiplication only uses `m_i^2 = h_i`, the braid relations among the `m_i`, and the action
//! `m_i h(t) m_i^{-1} = h(s_i t)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{CocharacterLattice, RootSystem, RootSystemType, MAX_RANK};
use crate::torus::TorusVector;
use crate::weyl::WeylElement;

pub type SpinSignature = TorusVector;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TitsElement {
    w: WeylElement,
    t: TorusVector,
}

/// Per-type data for the fold rule.
struct FoldTables {
    cartan: [[i32; MAX_RANK]; MAX_RANK],
    /// bit `j` of `row_parity[i]` is set iff `<a_i, a_j^vee>` is odd
    row_parity: [u16; MAX_RANK],
}

impl FoldTables {
    fn new(ty: RootSystemType) -> Self {
        let cartan = ty.cartan_array();
        let mut row_parity = [0u16; MAX_RANK];
        for i in 0..ty.rank() {
            for j in 0..ty.rank() {
                if cartan[i][j].rem_euclid(2) == 1 {
                    row_parity[i] |= 1 << j;
                }
            }
        }
        FoldTables { cartan, row_parity }
    }

    /// `(w, t) <- (w, t) * m_i`, 0-based `i`.
    fn step(&self, w: &mut WeylElement, t: &mut u16, i: usize) {
        // m_w h(t) m_i = m_w m_i h(s_i t)
        if (*t & self.row_parity[i]).count_ones() % 2 == 1 {
            *t ^= 1 << i;
        }
        // m_w m_i = m_{w s_i} h_i when the length drops
        if w.column_is_negative(i) {
            *t ^= 1 << i;
        }
        w.right_mul_simple(&self.cartan, i);
    }
}

impl TitsElement {
    pub fn new(w: WeylElement, t: TorusVector) -> Result<Self> {
        if t.rank() != w.rank() {
            return Err(Error::domain(format!(
                "torus vector of rank {} paired with W({})",
                t.rank(),
                w.ty()
            )));
        }
        Ok(TitsElement { w, t })
    }

    pub fn identity(ty: RootSystemType) -> Self {
        TitsElement {
            w: WeylElement::identity(ty),
            t: TorusVector::zero(ty.rank()),
        }
    }

    /// The torus element `h(t)`.
    pub fn torus(ty: RootSystemType, t: TorusVector) -> Result<Self> {
        Self::new(WeylElement::identity(ty), t)
    }

    /// The lift `m_w`.
    pub fn lift(w: WeylElement) -> Self {
        TitsElement {
            w,
            t: TorusVector::zero(w.rank()),
        }
    }

    /// `m_{i1} m_{i2} ...` for an arbitrary (not necessarily reduced) word, letters 1-based.
    pub fn from_word(ty: RootSystemType, word: &[usize]) -> Result<Self> {
        let tables = FoldTables::new(ty);
        let mut w = WeylElement::identity(ty);
        let mut t = 0u16;
        for &i in word {
            if i == 0 || i > ty.rank() {
                return Err(Error::domain(format!(
                    "letter {i} outside 1..={}",
                    ty.rank()
                )));
            }
            tables.step(&mut w, &mut t, i - 1);
        }
        Ok(TitsElement {
            w,
            t: TorusVector::from_bits(ty.rank(), t),
        })
    }

    pub fn w(&self) -> WeylElement {
        self.w
    }

    pub fn t(&self) -> TorusVector {
        self.t
    }

    pub fn ty(&self) -> RootSystemType {
        self.w.ty()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ty() != other.ty() {
            return Err(Error::domain(format!(
                "cannot multiply elements over {} and {}",
                self.ty(),
                other.ty()
            )));
        }
        let tables = FoldTables::new(self.ty());
        Ok(self.mul_with(&tables, &other.w.reduced_word().letters, other.t))
    }

    fn mul_with(&self, tables: &FoldTables, word: &[usize], tail: TorusVector) -> Self {
        let mut w = self.w;
        let mut t = self.t.bits();
        for &i in word {
            tables.step(&mut w, &mut t, i - 1);
        }
        TitsElement {
            w,
            t: TorusVector::from_bits(w.rank(), t) + tail,
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let tables = FoldTables::new(self.ty());
        let mut result = Self::identity(self.ty());
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_with(&tables, &base.w.reduced_word().letters, base.t);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_with(&tables, &base.w.reduced_word().letters, base.t);
            }
        }
        result
    }

    /// `g^k` by repeated multiplication with one fixed reduced word; faster than
    /// [`pow`](Self::pow) for the small exponents met in practice.
    pub fn pow_linear(&self, k: u64) -> Self {
        let tables = FoldTables::new(self.ty());
        let word = self.w.reduced_word().letters;
        let mut result = Self::identity(self.ty());
        for _ in 0..k {
            result = result.mul_with(&tables, &word, self.t);
        }
        result
    }

    /// Order of `g`; either the order `d` of `w` or `2d`.
    pub fn order_of(&self) -> u64 {
        let d = self.w.order() as u64;
        if self.pow(d).t.is_zero() {
            d
        } else {
            2 * d
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(self.order_of() - 1)
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.t.is_zero()
    }
}

impl fmt::Debug for TitsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{}] h({})", self.w.reduced_word(), self.t)
    }
}

/// `g^d` for any representative `g` of an elliptic `w` of order `d`.
pub fn spin_signature(w: &WeylElement) -> Result<SpinSignature> {
    if !w.is_elliptic() {
        return Err(Error::domain(
            "spin signature requested for a non-elliptic element; its representatives need not share an order",
        ));
    }
    Ok(TitsElement::lift(*w).pow_linear(w.order() as u64).t)
}

/// Whether representatives of `w` in the group with cocharacter lattice `L` have order `d` (+1) or `2d` (-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Spin {
    Plus,
    Minus,
}

impl Spin {
    pub fn from_trivial(trivial: bool) -> Self {
        if trivial {
            Spin::Plus
        } else {
            Spin::Minus
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Spin::Plus => 1,
            Spin::Minus => -1,
        }
    }
}

impl From<Spin> for i8 {
    fn from(s: Spin) -> i8 {
        s.sign()
    }
}

impl TryFrom<i8> for Spin {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Spin::Plus),
            -1 => Ok(Spin::Minus),
            _ => Err(format!("spin must be 1 or -1, got {v}")),
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

pub fn spin_from_signature(signature: SpinSignature, lattice: &CocharacterLattice) -> Result<Spin> {
    Ok(Spin::from_trivial(lattice.reduces_trivially(signature)?))
}

pub fn spin(w: &WeylElement, lattice: &CocharacterLattice) -> Result<Spin> {
    spin_from_signature(spin_signature(w)?, lattice)
}

/// Order, signature and spin for every isogeny type.
#[derive(Clone, Debug, Serialize)]
pub struct SpinResult {
    #[serde(rename = "type")]
    pub ty: RootSystemType,
    pub order: u32,
    pub signature: String,
    pub signature_bits: String,
    pub spins: Vec<LatticeSpin>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpin {
    pub lattice: String,
    pub spin: Spin,
    pub representative_order: u64,
}

impl SpinResult {
    pub fn spin_for(&self, label: &str) -> Option<Spin> {
        self.spins
            .iter()
            .find(|s| s.lattice == label)
            .map(|s| s.spin)
    }
}

pub fn spin_result(rs: &RootSystem, w: &WeylElement) -> Result<SpinResult> {
    let signature = spin_signature(w)?;
    let order = w.order();
    let spins = rs
        .lattices()
        .iter()
        .map(|l| {
            let spin = spin_from_signature(signature, l)?;
            Ok(LatticeSpin {
                lattice: l.label(),
                spin,
                representative_order: order as u64 * if spin == Spin::Plus { 1 } else { 2 },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpinResult {
        ty: rs.ty(),
        order,
        signature: signature.to_string(),
        signature_bits: signature.bit_string(),
        spins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn simple_lift_squares_to_h_i() {
        let t = ty("B3");
        for i in 1..=3 {
            let m = TitsElement::lift(WeylElement::simple_reflection(t, i).unwrap());
            let sq = m.mul(&m).unwrap();
            assert!(sq.w().is_identity());
            assert_eq!(sq.t(), TorusVector::from_indices(3, &[i]));
            assert_eq!(m.order_of(), 4);
        }
    }

    #[test]
    fn a3_coxeter_fourth_power() {
        let g = TitsElement::lift(WeylElement::coxeter(ty("A3")));
        let p = g.pow(4);
        assert!(p.w().is_identity());
        assert_eq!(p.t(), TorusVector::from_indices(3, &[1, 3]));
    }

    #[test]
    fn a2_coxeter_lift_has_order_three() {
        assert_eq!(
            TitsElement::lift(WeylElement::coxeter(ty("A2"))).order_of(),
            3
        );
    }

    #[test]
    fn non_elliptic_rejected() {
        assert!(spin_signature(&WeylElement::identity(ty("A2"))).is_err());
    }

    #[test]
    fn words_of_longest_a2_agree() {
        let a = TitsElement::from_word(ty("A2"), &[1, 2, 1]).unwrap();
        let b = TitsElement::from_word(ty("A2"), &[2, 1, 2]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_and_pow_agree() {
        let g = TitsElement::new(
            WeylElement::random(ty("D5"), 3),
            TorusVector::from_indices(5, &[2, 5]),
        )
        .unwrap();
        assert!(g.mul(&g.inverse()).unwrap().is_identity());
        assert_eq!(g.pow(5), g.pow_linear(5));
    }
}
