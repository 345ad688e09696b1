//! Weyl group elements as integer matrices on the simple-root basis.
//!
//! Column `j` of the matrix of `w` holds the coordinates of `w(a_j)`.

mod enumerate;

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{format_cyclotomic, IntPoly};
use crate::rootsystem::{CartanArray, Root, RootSystem, RootSystemType, MAX_RANK};

pub use enumerate::{elliptic_classes_exhaustive, EllipticClass, ExhaustiveClasses};

const S: usize = MAX_RANK;

/// Upper bound on element orders for ranks up to `MAX_RANK` (the order of a Coxeter
/// element of `A_12` is 13, of a product of cycles at most lcm of a partition of 13).
const MAX_ORDER: u32 = 1_000;

/// An element of the Weyl group of a fixed root system type.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    ty: RootSystemType,
    a: [i16; S * S],
}

/// A reduced expression `s_{i1} s_{i2} ... s_{il}`, letters 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `det(tI - w)`, monic of degree `rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharPoly {
    poly: IntPoly,
}

impl CharPoly {
    pub fn from_poly(poly: IntPoly) -> Self {
        CharPoly { poly }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Coefficients in ascending degree order, length `rank + 1`.
    pub fn coeffs(&self) -> &[i64] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// Multiplicities of the cyclotomic factors `Phi_m`.
    pub fn cyclotomic_factors(&self) -> BTreeMap<u32, u32> {
        self.poly.cyclotomic_factorization(MAX_ORDER).expect(
            "characteristic polynomial of a finite-order matrix is a product of cyclotomics",
        )
    }

    /// `Phi2^2*Phi6` style rendering.
    pub fn factored(&self) -> String {
        format_cyclotomic(&self.cyclotomic_factors())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({})", self.factored())
    }
}

impl WeylElement {
    pub fn identity(ty: RootSystemType) -> Self {
        let mut a = [0i16; S * S];
        for i in 0..ty.rank() {
            a[i * S + i] = 1;
        }
        WeylElement { ty, a }
    }

    /// `s_i`, 1-based.
    pub fn simple_reflection(ty: RootSystemType, i: usize) -> Result<Self> {
        check_letter(ty, i)?;
        let mut w = Self::identity(ty);
        w.right_mul_simple(&ty.cartan_array(), i - 1);
        Ok(w)
    }

    /// Product `s_{i1} s_{i2} ...` of simple reflections, letters 1-based.
    pub fn from_word(ty: RootSystemType, word: &[usize]) -> Result<Self> {
        let cartan = ty.cartan_array();
        let mut w = Self::identity(ty);
        for &i in word {
            check_letter(ty, i)?;
            w.right_mul_simple(&cartan, i - 1);
        }
        Ok(w)
    }

    /// `s_1 s_2 ... s_n`.
    pub fn coxeter(ty: RootSystemType) -> Self {
        let word: Vec<usize> = (1..=ty.rank()).collect();
        Self::from_word(ty, &word).expect("valid letters")
    }

    /// The longest element.
    pub fn longest(ty: RootSystemType) -> Self {
        let cartan = ty.cartan_array();
        let mut w = Self::identity(ty);
        while let Some(i) = (0..ty.rank()).find(|&i| !w.column_is_negative(i)) {
            w.right_mul_simple(&cartan, i);
        }
        w
    }

    /// `-I` if it lies in the Weyl group (i.e. the longest element acts as `-1`).
    pub fn minus_identity(ty: RootSystemType) -> Option<Self> {
        let w0 = Self::longest(ty);
        w0.is_minus_identity().then_some(w0)
    }

    /// Product of a uniformly random word of length `4 |Phi^+|` or one more, reproducible from `seed`.
    pub fn random(ty: RootSystemType, seed: u64) -> Self {
        Self::random_with(ty, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn random_with<R: Rng + ?Sized>(ty: RootSystemType, rng: &mut R) -> Self {
        let cartan = ty.cartan_array();
        let mut w = Self::identity(ty);
        // the extra letter keeps both cosets of the rotation subgroup reachable
        for _ in 0..4 * ty.num_positive_roots() + rng.gen_range(0..2) {
            w.right_mul_simple(&cartan, rng.gen_range(0..ty.rank()));
        }
        w
    }

    /// Builds an element from its matrix, checking that it permutes the roots of `rs`.
    pub fn from_rows(rs: &RootSystem, rows: &[Vec<i32>]) -> Result<Self> {
        let n = rs.rank();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain(format!("expected a {n}x{n} matrix")));
        }
        let mut w = Self::identity(rs.ty());
        for r in 0..n {
            for c in 0..n {
                w.a[r * S + c] = i16::try_from(rows[r][c])
                    .map_err(|_| Error::domain("matrix entry out of range"))?;
            }
        }
        for root in rs.roots() {
            if !rs.is_root(&w.act(root.coords())) {
                return Err(Error::domain("matrix does not permute the roots"));
            }
        }
        Ok(w)
    }

    pub fn ty(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Entry in row `r`, column `c` (0-based).
    pub fn entry(&self, r: usize, c: usize) -> i32 {
        self.a[r * S + c] as i32
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// `w(a_j)` for 0-based `j`.
    pub fn column(&self, j: usize) -> Vec<i32> {
        (0..self.rank()).map(|r| self.entry(r, j)).collect()
    }

    /// Applies `w` to a vector in simple-root coordinates.
    pub fn act(&self, x: &[i32]) -> Vec<i32> {
        let n = self.rank();
        (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c) * x[c]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ty)
    }

    pub fn is_minus_identity(&self) -> bool {
        let n = self.rank();
        (0..n).all(|r| (0..n).all(|c| self.entry(r, c) == if r == c { -1 } else { 0 }))
    }

    fn same_type(&self, other: &Self) -> Result<()> {
        if self.ty != other.ty {
            return Err(Error::domain(format!(
                "cannot combine elements of W({}) and W({})",
                self.ty, other.ty
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_type(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut out = WeylElement {
            ty: self.ty,
            a: [0; S * S],
        };
        for r in 0..n {
            for k in 0..n {
                let x = self.a[r * S + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out.a[r * S + c] += x * other.a[k * S + c];
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let cartan = self.ty.cartan_array();
        let mut w = Self::identity(self.ty);
        for &i in self.reduced_word().letters.iter().rev() {
            w.right_mul_simple(&cartan, i - 1);
        }
        w
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut result = Self::identity(self.ty);
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        result
    }

    /// `u w u^{-1}`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        self.same_type(u)?;
        Ok(u.mul_unchecked(self).mul_unchecked(&u.inverse()))
    }

    /// `self <- self * s_i` (0-based `i`).
    pub(crate) fn right_mul_simple(&mut self, cartan: &CartanArray, i: usize) {
        let n = self.rank();
        for r in 0..n {
            let ci = self.a[r * S + i];
            if ci == 0 {
                continue;
            }
            for j in 0..n {
                let aji = cartan[j][i] as i16;
                if aji != 0 {
                    self.a[r * S + j] -= aji * ci;
                }
            }
        }
    }

    /// `self <- s_i * self` (0-based `i`).
    pub(crate) fn left_mul_simple(&mut self, cartan: &CartanArray, i: usize) {
        let n = self.rank();
        let mut row = [0i16; S];
        for j in 0..n {
            let aji = cartan[j][i] as i16;
            if aji == 0 {
                continue;
            }
            for c in 0..n {
                row[c] += aji * self.a[j * S + c];
            }
        }
        for c in 0..n {
            self.a[i * S + c] -= row[c];
        }
    }

    /// Whether `w(a_i)` is a negative root (0-based `i`), i.e. `l(w s_i) < l(w)`.
    /// Whether `l(w s_i) < l(w)`, 1-based `i`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (1..=self.rank()).contains(&i) && self.column_is_negative(i - 1)
    }

    pub(crate) fn column_is_negative(&self, i: usize) -> bool {
        (0..self.rank()).any(|r| self.a[r * S + i] < 0)
    }

    /// A reduced word, found by stripping right descents (smallest index first).
    pub fn reduced_word(&self) -> ReducedWord {
        let cartan = self.ty.cartan_array();
        let mut w = *self;
        let mut letters = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| w.column_is_negative(i)) {
            w.right_mul_simple(&cartan, i);
            letters.push(i + 1);
        }
        letters.reverse();
        ReducedWord { letters }
    }

    /// Length `l(w)`: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    pub fn det(&self) -> i64 {
        bareiss_det(self.as_i64(false), self.rank())
    }

    fn as_i64(&self, minus_identity: bool) -> [[i64; S]; S] {
        let mut m = [[0i64; S]; S];
        for r in 0..self.rank() {
            for c in 0..self.rank() {
                m[r][c] = self.entry(r, c) as i64;
            }
            if minus_identity {
                m[r][r] -= 1;
            }
        }
        m
    }

    /// Characteristic polynomial by the division-free Berkowitz algorithm.
    pub fn char_poly(&self) -> CharPoly {
        let n = self.rank();
        let m = self.as_i64(false);
        // descending coefficients of det(tI - A_r) for leading principal submatrices
        let mut v: Vec<i64> = vec![1];
        for r in 0..n {
            let mut c = vec![0i64; r + 2];
            c[0] = 1;
            c[1] = -m[r][r];
            // s = A_{r-1}^k S, starting from the column above the diagonal
            let mut s: Vec<i64> = (0..r).map(|i| m[i][r]).collect();
            for k in 2..=r + 1 {
                let rs: i64 = (0..r).map(|j| m[r][j] * s[j]).sum();
                c[k] = -rs;
                s = (0..r)
                    .map(|i| (0..r).map(|j| m[i][j] * s[j]).sum())
                    .collect();
            }
            v = (0..=r + 1)
                .map(|k| {
                    (0..=k.min(r))
                        .filter(|&j| j < v.len())
                        .map(|j| c[k - j] * v[j])
                        .sum()
                })
                .collect();
        }
        v.reverse();
        CharPoly {
            poly: IntPoly::new(v),
        }
    }

    /// No eigenvalue 1: `det(w - I) != 0`.
    pub fn is_elliptic(&self) -> bool {
        bareiss_det(self.as_i64(true), self.rank()) != 0
    }

    pub fn order(&self) -> u32 {
        let id = Self::identity(self.ty);
        let mut p = *self;
        for d in 1..=MAX_ORDER {
            if p == id {
                return d;
            }
            p = p.mul_unchecked(self);
        }
        unreachable!("Weyl group element of order above {MAX_ORDER}")
    }

    /// Residues `r` in `1..d` with `w^r` elliptic, where `d` is the order of `w`.
    pub fn elliptic_powers(&self) -> Result<Vec<u32>> {
        if !self.is_elliptic() {
            return Err(Error::domain(
                "elliptic powers requested for a non-elliptic element",
            ));
        }
        let factors = self.char_poly().cyclotomic_factors();
        let d = self.order();
        Ok((1..d)
            .filter(|r| factors.keys().all(|m| r % m != 0))
            .collect())
    }

    /// Whether some power of `w` equals `-I`.
    pub fn is_linked_to_minus_identity(&self) -> Result<bool> {
        if !self.ty.has_minus_identity() {
            return Err(Error::domain(format!("-I is not in W({})", self.ty)));
        }
        let mut p = *self;
        for _ in 0..self.order() {
            if p.is_minus_identity() {
                return Ok(true);
            }
            p = p.mul_unchecked(self);
        }
        Ok(false)
    }
}

fn check_letter(ty: RootSystemType, i: usize) -> Result<()> {
    if i == 0 || i > ty.rank() {
        return Err(Error::domain(format!(
            "simple reflection index {i} outside 1..={} for {ty}",
            ty.rank()
        )));
    }
    Ok(())
}

fn bareiss_det(mut m: [[i64; S]; S], n: usize) -> i64 {
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({})[{}]", self.ty, self.reduced_word())
    }
}

#[derive(Serialize)]
struct WeylElementRepr {
    #[serde(rename = "type")]
    ty: String,
    matrix: Vec<Vec<i32>>,
    word: Vec<usize>,
}

impl Serialize for WeylElement {
    fn serialize<Ser: serde::Serializer>(
        &self,
        s: Ser,
    ) -> std::result::Result<Ser::Ok, Ser::Error> {
        WeylElementRepr {
            ty: self.ty.to_string(),
            matrix: self.rows(),
            word: self.reduced_word().letters,
        }
        .serialize(s)
    }
}

impl RootSystem {
    /// The reflection `s_a` as a Weyl group element.
    pub fn reflection(&self, alpha: &Root) -> Result<WeylElement> {
        self.root(alpha.coords())?;
        let n = self.rank();
        let mut w = WeylElement::identity(self.ty());
        for j in 0..n {
            let p = self.pairing(self.simple_root(j + 1).coords(), alpha);
            for r in 0..n {
                w.a[r * S + j] -= (p * alpha.coords()[r]) as i16;
            }
        }
        Ok(w)
    }

    /// Product of reflections in the given roots, left to right.
    pub fn product_of_reflections(&self, roots: &[Root]) -> Result<WeylElement> {
        let mut w = WeylElement::identity(self.ty());
        for r in roots {
            w = w.mul_unchecked(&self.reflection(r)?);
        }
        Ok(w)
    }

    pub fn act_on_root(&self, w: &WeylElement, alpha: &Root) -> Result<Root> {
        if w.ty() != self.ty() {
            return Err(Error::domain(format!(
                "element of W({}) acting on {}",
                w.ty(),
                self.ty()
            )));
        }
        self.root(alpha.coords())?;
        Ok(self.root(&w.act(alpha.coords()))?.clone())
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|r| w.act(r.coords()).iter().any(|&c| c < 0))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn simple_reflection_is_involution() {
        let t = ty("F4");
        for i in 1..=4 {
            let s = WeylElement::simple_reflection(t, i).unwrap();
            assert!(s.pow(2).is_identity());
            assert_eq!(s.reduced_word().letters, vec![i]);
            assert_eq!(s.det(), -1);
        }
    }

    #[test]
    fn left_and_right_multiplication_agree_with_matrix_product() {
        let t = ty("E6");
        let cartan = t.cartan_array();
        let w = WeylElement::random(t, 7);
        for i in 0..6 {
            let s = WeylElement::simple_reflection(t, i + 1).unwrap();
            let mut l = w;
            l.left_mul_simple(&cartan, i);
            assert_eq!(l, s.mul(&w).unwrap());
            let mut r = w;
            r.right_mul_simple(&cartan, i);
            assert_eq!(r, w.mul(&s).unwrap());
        }
    }

    #[test]
    fn coxeter_orders() {
        assert_eq!(WeylElement::coxeter(ty("A2")).order(), 3);
        assert_eq!(WeylElement::coxeter(ty("B2")).order(), 4);
        assert_eq!(WeylElement::coxeter(ty("G2")).order(), 6);
        assert_eq!(WeylElement::coxeter(ty("E8")).order(), 30);
    }

    #[test]
    fn longest_and_minus_identity() {
        assert!(WeylElement::minus_identity(ty("A2")).is_none());
        assert!(WeylElement::minus_identity(ty("E6")).is_none());
        assert!(WeylElement::minus_identity(ty("D5")).is_none());
        let f4 = WeylElement::minus_identity(ty("F4")).unwrap();
        assert_eq!(f4.length(), 24);
        assert_eq!(WeylElement::longest(ty("A2")).length(), 3);
    }

    #[test]
    fn mixed_types_rejected() {
        let a = WeylElement::identity(ty("B3"));
        let b = WeylElement::identity(ty("C3"));
        assert!(matches!(a.mul(&b), Err(Error::Domain(_))));
    }

    #[test]
    fn bad_letter_rejected() {
        assert!(WeylElement::from_word(ty("A3"), &[1, 4]).is_err());
        assert!(WeylElement::from_word(ty("A3"), &[0]).is_err());
    }

    #[test]
    fn g2_elliptic_powers() {
        let w = WeylElement::coxeter(ty("G2"));
        assert_eq!(w.elliptic_powers().unwrap(), vec![1, 2, 3, 4, 5]);
        assert!(w.is_linked_to_minus_identity().unwrap());
    }

    #[test]
    fn non_elliptic_powers_error() {
        let s = WeylElement::simple_reflection(ty("A3"), 1).unwrap();
        assert!(!s.is_elliptic());
        assert!(s.elliptic_powers().is_err());
    }

    #[test]
    fn reflections_match_simple_reflections() {
        let rs = RootSystem::build(ty("C3"));
        for i in 1..=3 {
            assert_eq!(
                rs.reflection(rs.simple_root(i)).unwrap(),
                WeylElement::simple_reflection(rs.ty(), i).unwrap()
            );
        }
    }
}
