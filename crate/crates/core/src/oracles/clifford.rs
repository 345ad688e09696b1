//! Spin groups inside the Clifford algebra over a prime field, realizing the universal
//! groups of types `B_n` (`Spin(2n+1)`) and `D_n` (`Spin(2n)`) at small rank.
//!
//! The quadratic space has an orthogonal basis `a_i` (square 1), `b_i` (square -1) and, for
//! `B_n`, `w` (square 1). The isotropic vectors `u_i = a_i + b_i`, `v_i = (a_i - b_i)/2` carry
//! the weights `e_i` and `-e_i`; the root element for `e_i - e_j` is `u_i v_j`, for
//! `e_i + e_j` it is `u_i u_j`, for `e_i` it is `u_i w`, and so on. Each squares to zero, so
//! `x_a(1) = 1 + X_a`.

use super::classical::Realization;
use crate::error::{Error, Result};
use crate::rootsystem::{Family, Root, RootSystem, RootSystemType};

/// Largest ranks with an algebra of dimension at most 1024.
pub const MAX_B_RANK: usize = 4;
pub const MAX_D_RANK: usize = 5;

pub const DEFAULT_PRIME: u64 = 1_000_000_007;

/// Element of the Clifford algebra, dense in the basis of blades (bitmasks of generators).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElement(Vec<u64>);

#[derive(Clone, Debug)]
pub struct SpinGroup {
    ty: RootSystemType,
    p: u64,
    /// Generators with square -1.
    neg_mask: u32,
    dim: usize,
    m: Vec<CliffordElement>,
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Rejects characteristic 2 and non-prime moduli.
pub fn check_characteristic(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::config(
            "characteristic 2 is excluded: there T0 = {1} and every elliptic element has spin 1",
        ));
    }
    if !is_prime(p) {
        return Err(Error::config(format!("{p} is not a prime")));
    }
    Ok(())
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl SpinGroup {
    pub fn new(ty: RootSystemType, p: u64) -> Result<Self> {
        check_characteristic(p)?;
        let n = ty.rank();
        let nvec = match ty.family() {
            Family::B if n <= MAX_B_RANK => 2 * n + 1,
            Family::D if n <= MAX_D_RANK => 2 * n,
            Family::B | Family::D => {
                return Err(Error::Unsupported(format!(
                    "spin group of {ty} is above the Clifford size bound"
                )))
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "no spin group realization for {ty}"
                )))
            }
        };
        let neg_mask = (0..n).fold(0u32, |m, i| m | 1 << (2 * i + 1));
        let mut g = SpinGroup {
            ty,
            p,
            neg_mask,
            dim: 1 << nvec,
            m: Vec::new(),
        };
        let rs = RootSystem::build(ty);
        g.m = (1..=n)
            .map(|i| g.m_root(&rs, rs.simple_root(i)))
            .collect::<Result<_>>()?;
        Ok(g)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn one(&self) -> CliffordElement {
        let mut v = vec![0; self.dim];
        v[0] = 1;
        CliffordElement(v)
    }

    fn blade_sign(&self, a: u32, b: u32) -> bool {
        let mut swaps = 0u32;
        let mut x = a >> 1;
        while x != 0 {
            swaps += (x & b).count_ones();
            x >>= 1;
        }
        swaps += (a & b & self.neg_mask).count_ones();
        swaps % 2 == 1
    }

    pub fn product(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let v = (a as u128 * b as u128 % p as u128) as u64;
                let k = i ^ j;
                out[k] = if self.blade_sign(i as u32, j as u32) {
                    (out[k] + p - v) % p
                } else {
                    (out[k] + v) % p
                };
            }
        }
        CliffordElement(out)
    }

    fn lin(&self, terms: &[(usize, u64)]) -> CliffordElement {
        let mut v = vec![0; self.dim];
        for &(k, c) in terms {
            v[k] = (v[k] + c) % self.p;
        }
        CliffordElement(v)
    }

    fn add(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        CliffordElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        )
    }

    fn scale(&self, x: &CliffordElement, c: u64) -> CliffordElement {
        CliffordElement(
            x.0.iter()
                .map(|&a| (a as u128 * c as u128 % self.p as u128) as u64)
                .collect(),
        )
    }

    /// Vector of weight `e_i` (`sign = 1`) or `-e_i` (`sign = -1`).
    fn isotropic(&self, i: usize, sign: i32) -> CliffordElement {
        let (a, b) = (1usize << (2 * i), 1usize << (2 * i + 1));
        if sign > 0 {
            self.lin(&[(a, 1), (b, 1)])
        } else {
            let half = pow_mod(2, self.p - 2, self.p);
            self.lin(&[(a, half), (b, self.p - half)])
        }
    }

    /// Orthonormal coordinates of a root given in simple coordinates.
    fn epsilon(&self, c: &[i32]) -> Vec<i32> {
        let n = c.len();
        let mut v: Vec<i32> = (0..n)
            .map(|k| c[k] - if k > 0 { c[k - 1] } else { 0 })
            .collect();
        if self.ty.family() == Family::D {
            // a_{n-1} = e_{n-1} - e_n, a_n = e_{n-1} + e_n
            v[n - 2] = c[n - 2] - c[n - 3] + c[n - 1];
            v[n - 1] = c[n - 1] - c[n - 2];
        }
        v
    }

    fn root_element(&self, coords: &[i32]) -> Result<CliffordElement> {
        let v = self.epsilon(coords);
        let support: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
        match support[..] {
            [i, j] => Ok(self.product(&self.isotropic(i, v[i]), &self.isotropic(j, v[j]))),
            [i] if self.ty.family() == Family::B => {
                let w = self.lin(&[(1 << (2 * self.ty.rank()), 1)]);
                Ok(self.product(&self.isotropic(i, v[i]), &w))
            }
            _ => Err(Error::invariant(format!(
                "{coords:?} has orthonormal coordinates {v:?}"
            ))),
        }
    }

    /// `m_a(1) = x_a(1) x_{-a}(-1) x_a(1)` with `X_{-a}` scaled so that `[X_a, X_{-a}] = H`, `[H, X_a] = 2 X_a`.
    fn m_root(&self, rs: &RootSystem, alpha: &Root) -> Result<CliffordElement> {
        let p = self.p;
        let x = self.root_element(alpha.coords())?;
        let y = self.root_element(alpha.neg().coords())?;
        let comm = |a: &CliffordElement, b: &CliffordElement| {
            let ba = self.product(b, a);
            self.add(&self.product(a, b), &self.scale(&ba, p - 1))
        };
        let h = comm(&x, &y);
        let hx = comm(&h, &x);
        let k =
            x.0.iter()
                .zip(&hx.0)
                .find(|(a, _)| **a != 0)
                .map(|(a, b)| (*b as u128 * pow_mod(*a, p - 2, p) as u128 % p as u128) as u64)
                .ok_or_else(|| Error::invariant("zero root element"))?;
        if k == 0 || hx != self.scale(&x, k) {
            return Err(Error::invariant(format!(
                "root elements of {alpha} do not span sl2 in {}",
                rs.ty()
            )));
        }
        let y = self.scale(&y, 2 * pow_mod(k, p - 2, p) % p);
        let xa = self.add(&self.one(), &x);
        let xb = self.add(&self.one(), &self.scale(&y, p - 1));
        Ok(self.product(&self.product(&xa, &xb), &xa))
    }

    /// The central element `-1`.
    pub fn minus_one(&self) -> CliffordElement {
        self.scale(&self.one(), self.p - 1)
    }
}

impl Realization for SpinGroup {
    type Elem = CliffordElement;

    fn ty(&self) -> RootSystemType {
        self.ty
    }

    fn identity(&self) -> CliffordElement {
        self.one()
    }

    fn mul(&self, a: &CliffordElement, b: &CliffordElement) -> CliffordElement {
        self.product(a, b)
    }

    fn m(&self, i: usize) -> &CliffordElement {
        &self.m[i - 1]
    }

    fn h(&self, _i: usize) -> Option<CliffordElement> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::classical::{check_generators, classical_spin_check};
    use super::*;
    use crate::tits::Spin;
    use crate::weyl::WeylElement;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn characteristic_two_rejected() {
        assert!(matches!(SpinGroup::new(ty("B3"), 2), Err(Error::Config(_))));
        assert!(matches!(check_characteristic(9), Err(Error::Config(_))));
    }

    #[test]
    fn rank_bound() {
        assert!(matches!(
            SpinGroup::new(ty("B7"), DEFAULT_PRIME),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            SpinGroup::new(ty("D6"), DEFAULT_PRIME),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn generators_satisfy_relations() {
        for t in ["B2", "B3", "D4"] {
            let g = SpinGroup::new(ty(t), DEFAULT_PRIME).unwrap();
            assert!(check_generators(&g).unwrap() > 0, "{t}");
        }
    }

    #[test]
    fn b3_coxeter_has_spin_plus() {
        let g = SpinGroup::new(ty("B3"), DEFAULT_PRIME).unwrap();
        let w = WeylElement::coxeter(ty("B3"));
        assert_eq!(classical_spin_check(&g, &w).unwrap(), Spin::Plus);
        let w2 = WeylElement::coxeter(ty("B2"));
        let g2 = SpinGroup::new(ty("B2"), DEFAULT_PRIME).unwrap();
        assert_eq!(classical_spin_check(&g2, &w2).unwrap(), Spin::Minus);
    }
}
