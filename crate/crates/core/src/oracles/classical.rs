//! Explicit matrix realizations of universal groups: `SL(n+1)` for `A_n` and `Sp(2n)` for `C_n`,
//! plus checks shared with the spin groups.

use std::fmt;

use super::matrix::Mat;
use crate::error::{Error, Result};
use crate::rootsystem::{Family, RootSystem, RootSystemType};
use crate::tits::{spin, spin_signature, Spin, TitsElement};
use crate::torus::TorusVector;
use crate::weyl::WeylElement;

/// A group with chosen images of the `m_{a_i}(1)`.
pub trait Realization {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn ty(&self) -> RootSystemType;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `m_{a_i}(1)`, 1-based.
    fn m(&self, i: usize) -> &Self::Elem;
    /// `h_{a_i}(-1)` built directly from the torus, when the realization has one.
    fn h(&self, i: usize) -> Option<Self::Elem>;

    fn word(&self, word: &[usize]) -> Self::Elem {
        word.iter()
            .fold(self.identity(), |acc, &i| self.mul(&acc, self.m(i)))
    }

    fn pow(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        (0..k).fold(self.identity(), |acc, _| self.mul(&acc, a))
    }

    /// `h(t) = prod_{t_i = 1} m_i^2`.
    fn torus(&self, t: TorusVector) -> Self::Elem {
        t.indices().iter().fold(self.identity(), |acc, &i| {
            let sq = self.mul(self.m(i), self.m(i));
            self.mul(&acc, &sq)
        })
    }

    fn tits_image(&self, g: &TitsElement) -> Self::Elem {
        let w = self.word(&g.w().reduced_word().letters);
        self.mul(&w, &self.torus(g.t()))
    }
}

/// Checks `m_i^2 = h_i`, `m_i^4 = 1`, commuting of orthogonal simple roots, `(m_i m_j)^3 = 1`
/// on single bonds and `(m_j m_k)^4 = (m_k m_j)^4 = h_k` on double bonds with `a_k` short.
pub fn check_generators<R: Realization>(r: &R) -> Result<u64> {
    let ty = r.ty();
    let rs = RootSystem::build(ty);
    let n = ty.rank();
    let mut checks = 0;
    let id = r.identity();
    for i in 1..=n {
        let sq = r.mul(r.m(i), r.m(i));
        if let Some(h) = r.h(i) {
            if sq != h {
                return Err(Error::Mismatch(format!(
                    "m_{i}^2 differs from h_{i} in {ty}"
                )));
            }
        }
        if r.mul(&sq, &sq) != id {
            return Err(Error::Mismatch(format!(
                "m_{i} does not have order dividing 4 in {ty}"
            )));
        }
        checks += 1;
    }
    for j in 1..=n {
        for k in 1..=n {
            if j == k {
                continue;
            }
            let (mj, mk) = (r.m(j), r.m(k));
            let jk = r.mul(mj, mk);
            let bond = rs.cartan()[j - 1][k - 1] * rs.cartan()[k - 1][j - 1];
            let ok = match bond {
                0 => jk == r.mul(mk, mj),
                1 => r.pow(&jk, 3) == id,
                2 if !rs.simple_root(k).is_long() => {
                    let hk = r.mul(mk, mk);
                    r.pow(&jk, 4) == hk && r.pow(&r.mul(mk, mj), 4) == hk
                }
                _ => true,
            };
            if !ok {
                return Err(Error::Mismatch(format!(
                    "braid relation between m_{j} and m_{k} fails in {ty}"
                )));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// Checks the realization against the Tits model on each word.
pub fn check_tits_words<R: Realization>(r: &R, words: &[Vec<usize>]) -> Result<u64> {
    for word in words {
        let t = TitsElement::from_word(r.ty(), word)?;
        if r.word(word) != r.tits_image(&t) {
            return Err(Error::Mismatch(format!(
                "Tits model disagrees with {} on word {word:?}",
                r.ty()
            )));
        }
    }
    Ok(words.len() as u64)
}

/// Universal spin of an elliptic `w` from the order of an explicit representative,
/// compared with the Tits model.
pub fn classical_spin_check<R: Realization>(r: &R, w: &WeylElement) -> Result<Spin> {
    if w.ty() != r.ty() {
        return Err(Error::domain(
            "element and realization have different types",
        ));
    }
    let signature = spin_signature(w)?;
    let g0 = r.word(&w.reduced_word().letters);
    let power = r.pow(&g0, w.order() as u64);
    if power != r.torus(signature) {
        return Err(Error::Mismatch(format!(
            "g0^d disagrees with the signature {signature} in {}",
            r.ty()
        )));
    }
    let got = Spin::from_trivial(power == r.identity());
    let rs = RootSystem::build(r.ty());
    let expected = spin(w, &rs.universal_lattice())?;
    if got != expected {
        return Err(Error::Mismatch(format!(
            "universal spin {got} from matrices, {expected} from the Tits model"
        )));
    }
    Ok(got)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    /// `SL(n+1)` for `A_n`.
    Special,
    /// `Sp(2n)` for `C_n`.
    Symplectic,
}

/// `SL(n+1)` or `Sp(2n)` over the integers.
#[derive(Clone, Debug)]
pub struct ClassicalGroup {
    ty: RootSystemType,
    kind: ClassicalKind,
    m: Vec<Mat>,
    h: Vec<Mat>,
}

fn m_from_pair(e: &Mat, f: &Mat) -> Result<Mat> {
    let x = Mat::exp_nilpotent(e)?;
    let y = Mat::exp_nilpotent(&f.scale(-1))?;
    Ok(x.mul(&y).mul(&x))
}

impl ClassicalGroup {
    pub fn new(ty: RootSystemType) -> Result<Self> {
        let n = ty.rank();
        let (kind, dim) = match ty.family() {
            Family::A => (ClassicalKind::Special, n + 1),
            Family::C => (ClassicalKind::Symplectic, 2 * n),
            _ => {
                return Err(Error::Unsupported(format!(
                    "no matrix realization for {ty}; use the spin groups for B and D"
                )))
            }
        };
        let mut m = Vec::with_capacity(n);
        let mut h = Vec::with_capacity(n);
        for i in 0..n {
            // 0-based matrix indices; for Sp the basis is e_1..e_n, f_1..f_n
            let (e, f, diag): (Mat, Mat, Vec<usize>) = match kind {
                ClassicalKind::Special => (
                    Mat::unit(dim, i, i + 1),
                    Mat::unit(dim, i + 1, i),
                    vec![i, i + 1],
                ),
                ClassicalKind::Symplectic if i + 1 < n => (
                    Mat::unit(dim, i, i + 1).sub(&Mat::unit(dim, n + i + 1, n + i)),
                    Mat::unit(dim, i + 1, i).sub(&Mat::unit(dim, n + i, n + i + 1)),
                    vec![i, i + 1, n + i, n + i + 1],
                ),
                ClassicalKind::Symplectic => (
                    Mat::unit(dim, n - 1, 2 * n - 1),
                    Mat::unit(dim, 2 * n - 1, n - 1),
                    vec![n - 1, 2 * n - 1],
                ),
            };
            m.push(m_from_pair(&e, &f)?);
            let mut d = vec![1; dim];
            for k in diag {
                d[k] = -1;
            }
            h.push(Mat::diagonal(&d));
        }
        Ok(ClassicalGroup { ty, kind, m, h })
    }

    pub fn kind(&self) -> ClassicalKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.m[0].dim()
    }

    /// Whether every generator preserves the standard symplectic form (always true for `SL`).
    pub fn preserves_form(&self) -> bool {
        if self.kind == ClassicalKind::Special {
            return true;
        }
        let n = self.ty.rank();
        let mut j = Mat::zero(2 * n);
        for i in 0..n {
            j = j
                .add(&Mat::unit(2 * n, i, n + i))
                .sub(&Mat::unit(2 * n, n + i, i));
        }
        self.m.iter().all(|g| transpose(g).mul(&j).mul(g) == j)
    }
}

fn transpose(m: &Mat) -> Mat {
    let n = m.dim();
    let mut t = Mat::zero(n);
    for r in 0..n {
        for c in 0..n {
            if m.get(c, r) != 0 {
                t = t.add(&Mat::unit(n, r, c).scale(m.get(c, r)));
            }
        }
    }
    t
}

impl Realization for ClassicalGroup {
    type Elem = Mat;

    fn ty(&self) -> RootSystemType {
        self.ty
    }

    fn identity(&self) -> Mat {
        Mat::identity(self.dim())
    }

    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        a.mul(b)
    }

    fn m(&self, i: usize) -> &Mat {
        &self.m[i - 1]
    }

    fn h(&self, i: usize) -> Option<Mat> {
        Some(self.h[i - 1].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn generators_satisfy_relations() {
        for t in ["A1", "A3", "A4", "C2", "C3", "C4"] {
            let g = ClassicalGroup::new(ty(t)).unwrap();
            assert!(g.preserves_form());
            assert!(check_generators(&g).unwrap() > 0);
        }
    }

    #[test]
    fn sl_even_coxeter_power_is_minus_identity() {
        // SL(4): g0^4 = -I
        let g = ClassicalGroup::new(ty("A3")).unwrap();
        let w = WeylElement::coxeter(ty("A3"));
        let g0 = g.word(&w.reduced_word().letters);
        assert_eq!(g.pow(&g0, 4), Mat::identity(4).scale(-1));
        assert_eq!(classical_spin_check(&g, &w).unwrap(), Spin::Minus);
    }

    #[test]
    fn symplectic_minus_identity_has_universal_spin_minus() {
        let t = ty("C3");
        let g = ClassicalGroup::new(t).unwrap();
        let w = WeylElement::minus_identity(t).unwrap();
        assert_eq!(classical_spin_check(&g, &w).unwrap(), Spin::Minus);
    }

    #[test]
    fn other_types_unsupported() {
        assert!(matches!(
            ClassicalGroup::new(ty("B3")),
            Err(Error::Unsupported(_))
        ));
    }
}
