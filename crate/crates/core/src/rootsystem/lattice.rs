//! Cocharacter lattices `Q^vee <= L <= P^vee`, one for each isogeny type.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::RootSystem;
use crate::error::{Error, Result};
use crate::torus::TorusVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Universal,
    Adjoint,
    Intermediate,
}

/// A lattice between the coroot and coweight lattices, given by a basis in simple-coroot coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct CocharacterLattice {
    kind: LatticeKind,
    /// Position in [`RootSystem::lattices`]; 0 is universal, the last one adjoint.
    index: usize,
    /// `|L / Q^vee|`
    order: usize,
    columns: Vec<Vec<Rational64>>,
}

impl fmt::Debug for CocharacterLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CocharacterLattice({}, |L/Q| = {})",
            self.label(),
            self.order
        )
    }
}

impl CocharacterLattice {
    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Index of the coroot lattice in `L`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Basis vectors (the columns of the basis matrix) in simple-coroot coordinates.
    pub fn columns(&self) -> &[Vec<Rational64>] {
        &self.columns
    }

    pub fn label(&self) -> String {
        match self.kind {
            LatticeKind::Universal => "universal".into(),
            LatticeKind::Adjoint => "adjoint".into(),
            LatticeKind::Intermediate => format!("intermediate-{}", self.index),
        }
    }

    /// Checks `Q^vee <= L <= P^vee`.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let n = rs.rank();
        for i in 0..n {
            let mut e = vec![0i32; n];
            e[i] = 1;
            solve_integral(&self.columns, &e).map_err(|_| {
                Error::invariant(format!(
                    "lattice {} does not contain the coroot of a{}",
                    self.label(),
                    i + 1
                ))
            })?;
        }
        for col in &self.columns {
            for j in 0..n {
                let pairing: Rational64 = (0..n)
                    .map(|i| col[i] * Rational64::from(rs.cartan()[j][i] as i64))
                    .sum();
                if !pairing.is_integer() {
                    return Err(Error::invariant(format!(
                        "lattice {} pairs non-integrally with a{}",
                        self.label(),
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `h(t)` is trivial in the torus of the group with this cocharacter lattice:
    /// `sum t_i a_i^vee` must lie in `2L`.
    pub fn reduces_trivially(&self, t: TorusVector) -> Result<bool> {
        let x = solve_integral(&self.columns, &t.coords()).map_err(|_| {
            Error::invariant(format!(
                "{t} is not an integral combination of the basis of {}",
                self.label()
            ))
        })?;
        Ok(x.iter().all(|v| v % 2 == 0))
    }
}

/// Solves `sum_c x_c columns[c] = v` and requires an integral solution.
fn solve_integral(columns: &[Vec<Rational64>], v: &[i32]) -> std::result::Result<Vec<i64>, ()> {
    let n = v.len();
    // augmented rows
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational64> = columns.iter().map(|c| c[r]).collect();
            row.push(Rational64::from(v[r] as i64));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).ok_or(())?;
        m.swap(c, p);
        let inv = Rational64::one() / m[c][c];
        for k in c..=n {
            m[c][k] *= inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in c..=n {
                    let d = f * m[c][k];
                    m[r][k] -= d;
                }
            }
        }
    }
    m.iter()
        .map(|row| {
            if row[n].is_integer() {
                Ok(row[n].to_integer())
            } else {
                Err(())
            }
        })
        .collect()
}

fn inverse(a: &[Vec<i32>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational64> =
                a[r].iter().map(|&x| Rational64::from(x as i64)).collect();
            row.extend((0..n).map(|k| {
                if k == r {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !m[r][c].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(c, p);
        let inv = Rational64::one() / m[c][c];
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..2 * n {
                    let d = f * m[c][k];
                    m[r][k] -= d;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

type Coset = Vec<Rational64>;

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

fn add_coset(a: &Coset, b: &Coset) -> Coset {
    a.iter().zip(b).map(|(x, y)| frac(*x + *y)).collect()
}

fn closure(gens: &BTreeSet<Coset>, zero: &Coset) -> BTreeSet<Coset> {
    let mut set: BTreeSet<Coset> = BTreeSet::new();
    set.insert(zero.clone());
    let mut frontier = vec![zero.clone()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = add_coset(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Row-style Hermite reduction of integer vectors; returns a basis of their span.
fn lattice_basis(mut rows: Vec<Vec<i64>>, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&r) = nz.first() {
                    let mut row = rows.swap_remove(r);
                    if row[c] < 0 {
                        row.iter_mut().for_each(|x| *x = -*x);
                    }
                    out.push(row);
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&r| rows[r][c].abs()).unwrap();
            let pivot = rows[p].clone();
            for &r in &nz {
                if r != p {
                    let q = rows[r][c] / pivot[c];
                    for k in 0..n {
                        rows[r][k] -= q * pivot[k];
                    }
                }
            }
        }
    }
    out
}

/// Diagonal of the Smith normal form of an integer matrix (absolute values, zeros kept).
pub(crate) fn smith_diagonal(mut a: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(0, rows.min(cols) - t));
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / a[t][t];
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / a[t][t];
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % a[t][t] != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

impl RootSystem {
    /// Every lattice between `Q^vee` and `P^vee`, ordered by `|L/Q^vee|` (universal first, adjoint last).
    pub fn lattices(&self) -> Vec<CocharacterLattice> {
        let n = self.rank();
        let coweights = inverse(self.cartan());
        let zero: Coset = vec![Rational64::zero(); n];
        let gens: BTreeSet<Coset> = (0..n)
            .map(|i| (0..n).map(|r| frac(coweights[r][i])).collect())
            .collect();
        let group = closure(&gens, &zero);

        let mut subgroups: BTreeSet<BTreeSet<Coset>> = group
            .iter()
            .map(|g| closure(&std::iter::once(g.clone()).collect(), &zero))
            .collect();
        loop {
            let list: Vec<_> = subgroups.iter().cloned().collect();
            let mut grew = false;
            for a in &list {
                for b in &list {
                    let joined = closure(&a.union(b).cloned().collect(), &zero);
                    grew |= subgroups.insert(joined);
                }
            }
            if !grew {
                break;
            }
        }
        let mut subgroups: Vec<BTreeSet<Coset>> = subgroups.into_iter().collect();
        subgroups.sort_by_key(|s| s.len());

        let total = group.len();
        subgroups
            .iter()
            .enumerate()
            .map(|(index, h)| {
                let kind = if h.len() == 1 {
                    LatticeKind::Universal
                } else if h.len() == total {
                    LatticeKind::Adjoint
                } else {
                    LatticeKind::Intermediate
                };
                let columns = if kind == LatticeKind::Universal {
                    (0..n)
                        .map(|c| {
                            (0..n)
                                .map(|r| {
                                    if r == c {
                                        Rational64::one()
                                    } else {
                                        Rational64::zero()
                                    }
                                })
                                .collect()
                        })
                        .collect()
                } else {
                    let den = h.iter().flatten().fold(1i64, |l, x| lcm(l, *x.denom()));
                    let mut rows: Vec<Vec<i64>> = (0..n)
                        .map(|c| (0..n).map(|r| if r == c { den } else { 0 }).collect())
                        .collect();
                    rows.extend(
                        h.iter()
                            .map(|x| x.iter().map(|v| (*v * den).to_integer()).collect()),
                    );
                    lattice_basis(rows, n)
                        .into_iter()
                        .map(|row| row.into_iter().map(|v| Rational64::new(v, den)).collect())
                        .collect()
                };
                CocharacterLattice {
                    kind,
                    index,
                    order: h.len(),
                    columns,
                }
            })
            .collect()
    }

    pub fn universal_lattice(&self) -> CocharacterLattice {
        self.lattices().swap_remove(0)
    }

    pub fn adjoint_lattice(&self) -> CocharacterLattice {
        self.lattices().pop().expect("at least one lattice")
    }

    /// Looks up a lattice by `universal`, `adjoint`, or its index in [`lattices`](Self::lattices).
    pub fn lattice(&self, selector: &str) -> Result<CocharacterLattice> {
        let all = self.lattices();
        let found = match selector.trim().to_ascii_lowercase().as_str() {
            "universal" | "sc" | "simply-connected" => all.into_iter().next(),
            "adjoint" | "ad" => all.into_iter().last(),
            s => {
                let k: usize = s
                    .trim_start_matches("intermediate-")
                    .parse()
                    .map_err(|_| Error::config(format!("unknown lattice selector {selector:?}")))?;
                all.into_iter().nth(k)
            }
        };
        found.ok_or_else(|| Error::config(format!("no lattice {selector:?} for {}", self.ty())))
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn lattice_counts() {
        // subgroups of Z/n, Z/2 x Z/2, Z/4
        assert_eq!(rs("A5").lattices().len(), 4);
        assert_eq!(rs("D4").lattices().len(), 5);
        assert_eq!(rs("D5").lattices().len(), 3);
        assert_eq!(rs("E8").lattices().len(), 1);
        assert_eq!(rs("E8").lattices()[0].kind(), LatticeKind::Universal);
    }

    #[test]
    fn lattices_are_valid() {
        for s in [
            "A1", "A3", "A5", "B3", "C4", "D4", "D6", "D7", "E6", "E7", "F4", "G2",
        ] {
            let r = rs(s);
            for l in r.lattices() {
                l.validate(&r).unwrap();
            }
        }
    }

    #[test]
    fn adjoint_is_coweight_lattice() {
        let r = rs("E7");
        let adj = r.adjoint_lattice();
        assert_eq!(adj.kind(), LatticeKind::Adjoint);
        assert_eq!(adj.order(), 2);
    }

    #[test]
    fn reductions() {
        let b4 = rs("B4");
        let t = TorusVector::from_indices(4, &[4]);
        assert!(b4.adjoint_lattice().reduces_trivially(t).unwrap());
        assert!(!b4.universal_lattice().reduces_trivially(t).unwrap());
        let e7 = rs("E7");
        let c = TorusVector::from_indices(7, &[1, 3, 5]);
        assert!(!e7.universal_lattice().reduces_trivially(c).unwrap());
        assert!(e7.adjoint_lattice().reduces_trivially(c).unwrap());
        assert!(e7
            .universal_lattice()
            .reduces_trivially(TorusVector::zero(7))
            .unwrap());
    }

    #[test]
    fn non_central_never_trivial_in_adjoint() {
        let c3 = rs("C3");
        let t = TorusVector::from_indices(3, &[1]);
        // h_1 is not central, so its lift is not in 2 P^vee ... unless the basis is broken
        assert!(!c3.adjoint_lattice().reduces_trivially(t).unwrap_or(true));
    }

    #[test]
    fn selector_parsing() {
        let a3 = rs("A3");
        assert_eq!(
            a3.lattice("universal").unwrap().kind(),
            LatticeKind::Universal
        );
        assert_eq!(a3.lattice("1").unwrap().kind(), LatticeKind::Intermediate);
        assert_eq!(a3.lattice("intermediate-1").unwrap().order(), 2);
        assert!(a3.lattice("7").is_err());
        assert!(a3.lattice("bogus").is_err());
    }

    #[test]
    fn smith_of_d_even() {
        assert_eq!(smith_diagonal(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }
}
