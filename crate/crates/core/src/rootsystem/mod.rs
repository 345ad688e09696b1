//! Root systems of types A-G in simple-root coordinates.
//!
//! Node numbering (1-based):
//!
//! * `A_n`: the chain `1 - 2 - ... - n`.
//! * `B_n`: chain with `a_n` short, `C_n`: chain with `a_n` long.
//! * `D_n`: chain `1 - ... - (n-2)`, with `n-1` and `n` both attached to `n-2`.
//! * `E_6`: chain `1-2-3-5-6`, node 4 attached to 3.
//! * `E_7`: chain `1-2-3-4-6-7`, node 5 attached to 4.
//! * `E_8`: chain `1-2-3-4-5-7-8`, node 6 attached to 5.
//! * `F_4`: `1 - 2 => 3 - 4`, nodes 1 and 2 long.
//! * `G_2`: `a_1` long, `a_2` short.
//!
//! This differs from Bourbaki for E and G. Bourbaki index of our node `i`:
//! E6 `[1, 3, 4, 2, 5, 6]`, E7 `[7, 6, 5, 4, 2, 3, 1]`, E8 `[8, 7, 6, 5, 4, 2, 3, 1]`, G2 `[2, 1]`.

mod lattice;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::torus::TorusVector;

pub use lattice::{CocharacterLattice, LatticeKind};

/// Largest rank handled anywhere in the crate. Fixed-size buffers elsewhere depend on it.
pub const MAX_RANK: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

/// Cartan type of an irreducible root system, e.g. `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::B | Family::C => (2..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::config(format!(
                "no root system of type {}{rank} (supported ranks: A 1-{MAX_RANK}, B/C 2-{MAX_RANK}, D 4-{MAX_RANK}, E 6-8, F 4, G 2)",
                family.letter()
            )));
        }
        Ok(RootSystemType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::B | Family::C, _) => (1u128 << n) * fact(n),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1_152,
            (Family::G, _) => 12,
        }
    }

    /// Whether `-I` lies in the Weyl group.
    pub fn has_minus_identity(&self) -> bool {
        match self.family {
            Family::A => self.rank == 1,
            Family::D => self.rank.is_multiple_of(2),
            Family::E => self.rank != 6,
            _ => true,
        }
    }

    /// Cartan matrix `A[j][i] = <a_j, a_i^vee>` in a fixed-size buffer, without building roots.
    pub(crate) fn cartan_array(&self) -> CartanArray {
        let g = gram_matrix(*self);
        let mut a = [[0i32; MAX_RANK]; MAX_RANK];
        for j in 0..self.rank {
            for i in 0..self.rank {
                a[j][i] = (2 * g[j][i] / g[i][i]) as i32;
            }
        }
        a
    }
}

pub(crate) type CartanArray = [[i32; MAX_RANK]; MAX_RANK];

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::config(format!("unknown root system type {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::config(format!("bad rank in root system type {s:?}")))?;
        RootSystemType::new(family, rank)
    }
}

impl TryFrom<String> for RootSystemType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RootSystemType> for String {
    fn from(t: RootSystemType) -> String {
        t.to_string()
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    coords: Vec<i32>,
    long: bool,
}

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn is_long(&self) -> bool {
        self.long
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// The root `-self`.
    pub fn neg(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
            long: self.long,
        }
    }

    /// `Some(i)` (1-based) if this is the simple root `a_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.coords.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i + 1),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({self})")
    }
}

impl fmt::Display for Root {
    /// `-2a1-3a2-4a3-2a4` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An irreducible reduced root system with a fixed ordering of its roots:
/// positive roots by increasing height (ties in decreasing lexicographic order, so `roots()[i]` is
/// `a_{i+1}` for `i < n`), then their negatives.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootSystemType,
    /// Symmetric Gram matrix of the simple roots, normalised so short roots have `(a, a) = 2`.
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    highest: usize,
    highest_short: usize,
}

pub(crate) fn gram_matrix(ty: RootSystemType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match ty.family {
        Family::A | Family::D | Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            match ty.family {
                Family::A => (1..n).for_each(|i| link(&mut g, i, i + 1, -1)),
                Family::D => {
                    (1..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
                    link(&mut g, n - 2, n, -1);
                }
                _ => {
                    let edges: &[(usize, usize)] = match n {
                        6 => &[(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)],
                        7 => &[(1, 2), (2, 3), (3, 4), (4, 6), (6, 7), (4, 5)],
                        _ => &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 7), (7, 8), (5, 6)],
                    };
                    for &(i, j) in edges {
                        link(&mut g, i, j, -1);
                    }
                }
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            (1..n).for_each(|i| link(&mut g, i, i + 1, -2));
        }
        Family::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            (1..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
            link(&mut g, n - 1, n, -2);
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -2);
            link(&mut g, 3, 4, -1);
        }
        Family::G => {
            g[0][0] = 6;
            g[1][1] = 2;
            link(&mut g, 1, 2, -3);
        }
    }
    g
}

impl RootSystem {
    /// Builds the root system by closing the simple roots under simple reflections.
    pub fn build(ty: RootSystemType) -> RootSystem {
        let n = ty.rank;
        let gram = gram_matrix(ty);
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| (2 * gram[j][i] / gram[i][i]) as i32)
                    .collect()
            })
            .collect();

        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..n {
                let pairing: i32 = (0..n).map(|j| x[j] * cartan[j][i]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut y = x.clone();
                y[i] -= pairing;
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut positive: Vec<Vec<i32>> = seen
            .into_keys()
            .filter(|x| x.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let max_norm = (0..n).map(|i| gram[i][i]).max().unwrap();
        let norm = |x: &[i32]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += x[i] as i64 * gram[i][j] * x[j] as i64;
                }
            }
            s
        };
        let mut roots: Vec<Root> = positive
            .iter()
            .map(|c| Root {
                coords: c.clone(),
                long: norm(c) == max_norm,
            })
            .collect();
        let negatives: Vec<Root> = roots.iter().map(Root::neg).collect();
        roots.extend(negatives);
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();
        let npos = positive.len();
        let highest = npos - 1;
        let highest_short = (0..npos).rev().find(|&k| !roots[k].long).unwrap_or(highest);
        RootSystem {
            ty,
            gram,
            cartan,
            roots,
            index,
            highest,
            highest_short,
        }
    }

    pub fn from_type_str(s: &str) -> Result<RootSystem> {
        Ok(RootSystem::build(s.parse()?))
    }

    pub fn ty(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `cartan()[j][i] = <a_j, a_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    /// Highest short root; equals the highest root in simply laced types.
    pub fn highest_short_root(&self) -> &Root {
        &self.roots[self.highest_short]
    }

    /// Simple root `a_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &Root {
        assert!(i >= 1 && i <= self.rank());
        let mut e = vec![0; self.rank()];
        e[i - 1] = 1;
        &self.roots[self.index[&e]]
    }

    /// Position of `coords` in [`roots`](Self::roots), if it is a root.
    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i32]) -> bool {
        self.index.contains_key(coords)
    }

    /// Looks up a root by its coordinates.
    pub fn root(&self, coords: &[i32]) -> Result<&Root> {
        self.index_of(coords)
            .map(|k| &self.roots[k])
            .ok_or_else(|| Error::domain(format!("{coords:?} is not a root of {}", self.ty)))
    }

    /// Symmetric bilinear form `(x, y)` with short roots of squared length 2.
    pub fn inner(&self, x: &[i32], y: &[i32]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] as i64 * self.gram[i][j] * y[j] as i64;
            }
        }
        s
    }

    /// `<x, a^vee> = 2 (x, a) / (a, a)` for a root `a`.
    pub fn pairing(&self, x: &[i32], alpha: &Root) -> i32 {
        let num = 2 * self.inner(x, &alpha.coords);
        let den = self.inner(&alpha.coords, &alpha.coords);
        debug_assert_eq!(num % den, 0);
        (num / den) as i32
    }

    /// Reflection `s_a(x) = x - <x, a^vee> a`.
    pub fn reflect(&self, alpha: &Root, x: &[i32]) -> Vec<i32> {
        let p = self.pairing(x, alpha);
        x.iter()
            .zip(&alpha.coords)
            .map(|(xi, ai)| xi - p * ai)
            .collect()
    }

    /// Coordinates of `a^vee` in the basis of simple coroots.
    pub fn coroot(&self, alpha: &Root) -> Result<Vec<i32>> {
        self.root(&alpha.coords)?;
        let norm = self.inner(&alpha.coords, &alpha.coords);
        let n = self.rank();
        (0..n)
            .map(|i| {
                let num = alpha.coords[i] as i64 * self.gram[i][i];
                if num % norm != 0 {
                    return Err(Error::invariant(format!(
                        "coroot of {alpha} is not integral"
                    )));
                }
                Ok((num / norm) as i32)
            })
            .collect()
    }

    /// `h_a(-1)` as an element of `T0`: the coroot of `a` reduced mod 2.
    pub fn coroot_mod2(&self, alpha: &Root) -> Result<TorusVector> {
        Ok(TorusVector::from_coords(&self.coroot(alpha)?))
    }

    /// The `a`-string through `b`: `(p, q)` with `b - p a, ..., b + q a` all roots.
    pub fn root_chain(&self, alpha: &Root, beta: &Root) -> Result<(u32, u32)> {
        self.root(&alpha.coords)?;
        self.root(&beta.coords)?;
        if alpha.coords == beta.coords || alpha.neg().coords == beta.coords {
            return Err(Error::domain(format!(
                "root chain of {alpha} through the proportional root {beta}"
            )));
        }
        let step = |sign: i32| -> u32 {
            let mut k = 0;
            loop {
                let next: Vec<i32> = beta
                    .coords
                    .iter()
                    .zip(&alpha.coords)
                    .map(|(b, a)| b + sign * (k + 1) * a)
                    .collect();
                if !self.is_root(&next) {
                    return k as u32;
                }
                k += 1;
            }
        };
        Ok((step(-1), step(1)))
    }

    /// A basis of the 2-torsion of the center of the simply connected group, as vectors
    /// `t` with `h(t)` central: `sum_i A[j][i] t_i = 0 mod 2` for every `j`.
    pub fn center_two_torsion(&self) -> Vec<TorusVector> {
        let n = self.rank();
        // rows: equations j, columns: unknowns i
        let mut rows: Vec<u16> = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| self.cartan[j][i].rem_euclid(2) == 1)
                    .fold(0u16, |m, i| m | (1 << i))
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if let Some(p) = (r..n).find(|&k| rows[k] >> c & 1 == 1) {
                rows.swap(r, p);
                for k in 0..n {
                    if k != r && rows[k] >> c & 1 == 1 {
                        rows[k] ^= rows[r];
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut bits = 1u16 << f;
                for (k, &pc) in pivots.iter().enumerate() {
                    if rows[k] >> f & 1 == 1 {
                        bits |= 1 << pc;
                    }
                }
                TorusVector::from_bits(n, bits)
            })
            .collect()
    }

    /// All nonzero elements of the span of [`center_two_torsion`](Self::center_two_torsion), sorted.
    pub fn central_involutions(&self) -> Vec<TorusVector> {
        let basis = self.center_two_torsion();
        let mut out: Vec<TorusVector> = (1u32..1 << basis.len())
            .map(|mask| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .fold(TorusVector::zero(self.rank()), |acc, (_, &b)| acc + b)
            })
            .collect();
        out.sort();
        out
    }

    /// Whether `h(t)` lies in the center of the simply connected group.
    pub fn is_central(&self, t: TorusVector) -> bool {
        (0..self.rank()).all(|j| {
            let s: i32 = t.indices().iter().map(|&i| self.cartan[j][i - 1]).sum();
            s.rem_euclid(2) == 0
        })
    }

    /// Orders of the invariant factors of the fundamental group `P^vee / Q^vee`
    /// (diagonal of the Smith normal form of the Cartan matrix, ones dropped).
    pub fn fundamental_group(&self) -> Vec<i64> {
        let m: Vec<Vec<i64>> = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        lattice::smith_diagonal(m)
            .into_iter()
            .filter(|&d| d != 1)
            .collect()
    }

    /// Canonical JSON document: type, Cartan matrix and roots as integer arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.ty.to_string(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "roots": self.roots.iter().map(|r| r.coords.clone()).collect::<Vec<_>>(),
            "long": self.roots.iter().map(|r| r.long).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!("A1".parse::<RootSystemType>().is_ok());
        assert!("B1".parse::<RootSystemType>().is_err());
        assert!("D3".parse::<RootSystemType>().is_err());
        assert!("E9".parse::<RootSystemType>().is_err());
        assert!("F5".parse::<RootSystemType>().is_err());
        assert!("X3".parse::<RootSystemType>().is_err());
        assert_eq!("e_7".parse::<RootSystemType>().unwrap().to_string(), "E7");
    }

    #[test]
    fn small_root_counts() {
        assert_eq!(rs("A1").roots().len(), 2);
        assert_eq!(rs("B3").roots().len(), 18);
        assert_eq!(rs("B3").num_positive(), 9);
        let g2 = rs("G2");
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.roots().iter().filter(|r| r.is_long()).count(), 6);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("E6").highest_root().coords(), &[1, 2, 3, 2, 2, 1]);
        assert_eq!(rs("E7").highest_root().coords(), &[1, 2, 3, 4, 2, 3, 2]);
        assert_eq!(rs("E8").highest_root().coords(), &[2, 3, 4, 5, 6, 3, 4, 2]);
        assert_eq!(rs("F4").highest_root().coords(), &[2, 3, 4, 2]);
        assert_eq!(rs("C4").highest_root().coords(), &[2, 2, 2, 1]);
        assert_eq!(rs("B4").highest_short_root().coords(), &[1, 1, 1, 1]);
        assert_eq!(rs("G2").highest_root().coords(), &[2, 3]);
    }

    #[test]
    fn e7_negative_highest_coroot() {
        let e7 = rs("E7");
        let r = e7.highest_root().neg();
        assert_eq!(e7.coroot(&r).unwrap(), vec![-1, -2, -3, -4, -2, -3, -2]);
    }

    #[test]
    fn coroot_of_non_root_is_domain_error() {
        let b3 = rs("B3");
        let fake = Root {
            coords: vec![1, 1, 5],
            long: false,
        };
        assert!(matches!(b3.coroot(&fake), Err(Error::Domain(_))));
    }

    #[test]
    fn chain_between_adjacent_simple_roots() {
        let a3 = rs("A3");
        let (p, q) = a3.root_chain(a3.simple_root(1), a3.simple_root(2)).unwrap();
        assert_eq!((p, q), (0, 1));
        assert!(a3
            .root_chain(a3.simple_root(1), &a3.simple_root(1).neg())
            .is_err());
    }

    #[test]
    fn centers() {
        assert_eq!(
            rs("B5").central_involutions(),
            vec![TorusVector::from_indices(5, &[5])]
        );
        assert!(rs("E6").central_involutions().is_empty());
        assert_eq!(
            rs("E7").central_involutions(),
            vec![TorusVector::from_indices(7, &[1, 3, 5])]
        );
        assert_eq!(rs("D4").central_involutions().len(), 3);
    }

    #[test]
    fn fundamental_groups() {
        assert_eq!(rs("A5").fundamental_group(), vec![6]);
        assert_eq!(rs("D6").fundamental_group(), vec![2, 2]);
        assert_eq!(rs("D5").fundamental_group(), vec![4]);
        assert!(rs("E8").fundamental_group().is_empty());
        assert_eq!(rs("E7").fundamental_group(), vec![2]);
    }
}
