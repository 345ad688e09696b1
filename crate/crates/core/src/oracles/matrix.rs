//! Exact integer matrices: dense for the classical realizations, column-sparse for the
//! adjoint representation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    a: Vec<i64>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat {
            n,
            a: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    /// `E_{r,c}` with 0-based indices.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zero(n);
        m.a[r * n + c] = 1;
        m
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.a[i * d.len() + i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.a[r * self.n + c]
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += x * o.a[k * n + j];
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u64) -> Mat {
        let mut out = Self::identity(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// `exp(x)` for nilpotent `x` whose divided powers are integral.
    pub fn exp_nilpotent(x: &Mat) -> Result<Mat> {
        let mut out = Self::identity(x.n);
        let mut term = Self::identity(x.n);
        for k in 1..=x.n as i64 + 1 {
            term = term.mul(x);
            if term.is_zero() {
                return Ok(out);
            }
            if term.a.iter().any(|v| v % k != 0) {
                return Err(Error::invariant(
                    "divided power of a nilpotent matrix is not integral",
                ));
            }
            term = Mat {
                n: x.n,
                a: term.a.iter().map(|v| v / k).collect(),
            };
            out = out.add(&term);
        }
        Err(Error::invariant("matrix is not nilpotent"))
    }
}

/// Square matrix stored by columns, each a sorted list of `(row, value)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    n: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMat {
    pub fn zero(n: usize) -> Self {
        SparseMat {
            n,
            cols: vec![Vec::new(); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            n,
            cols: (0..n).map(|i| vec![(i as u32, 1)]).collect(),
        }
    }

    pub fn from_columns(n: usize, cols: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|c| {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for (r, v) in c {
                    *acc.entry(r as u32).or_default() += v;
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMat { n, cols }
    }

    pub fn diagonal(d: &[i64]) -> Self {
        Self::from_columns(
            d.len(),
            d.iter().enumerate().map(|(i, &x)| vec![(i, x)]).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn column(&self, c: usize) -> &[(u32, i64)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.cols[c]
            .iter()
            .find(|&&(i, _)| i as usize == r)
            .map_or(0, |&(_, v)| v)
    }

    pub fn mul(&self, o: &SparseMat) -> SparseMat {
        let cols = o
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for &(k, x) in col {
                    for &(r, y) in &self.cols[k as usize] {
                        *acc.entry(r).or_default() += x * y;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMat { n: self.n, cols }
    }

    pub fn add(&self, o: &SparseMat) -> SparseMat {
        let cols = self
            .cols
            .iter()
            .zip(&o.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<u32, i64> = a.iter().copied().collect();
                for &(r, v) in b {
                    *acc.entry(r).or_default() += v;
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMat { n: self.n, cols }
    }

    pub fn scale(&self, k: i64) -> SparseMat {
        if k == 0 {
            return Self::zero(self.n);
        }
        SparseMat {
            n: self.n,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|&(r, v)| (r, v * k)).collect())
                .collect(),
        }
    }

    pub fn pow(&self, k: u64) -> SparseMat {
        let mut out = Self::identity(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(i, c)| c.len() == 1 && c[0] == (i as u32, 1))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// `exp(x)` for nilpotent `x` with integral divided powers.
    pub fn exp_nilpotent(x: &SparseMat) -> Result<SparseMat> {
        let mut out = Self::identity(x.n);
        let mut term = Self::identity(x.n);
        for k in 1..=x.n as i64 + 1 {
            term = x.mul(&term);
            if term.is_zero() {
                return Ok(out);
            }
            if term.cols.iter().flatten().any(|&(_, v)| v % k != 0) {
                return Err(Error::invariant(
                    "divided power of a nilpotent matrix is not integral",
                ));
            }
            term.cols.iter_mut().flatten().for_each(|e| e.1 /= k);
            out = out.add(&term);
        }
        Err(Error::invariant("matrix is not nilpotent"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_exponentials() {
        let e = Mat::unit(2, 0, 1);
        let f = Mat::unit(2, 1, 0);
        let x = Mat::exp_nilpotent(&e).unwrap();
        let y = Mat::exp_nilpotent(&f.scale(-1)).unwrap();
        let m = x.mul(&y).mul(&x);
        assert_eq!(
            m,
            Mat {
                n: 2,
                a: vec![0, 1, -1, 0]
            }
        );
        assert_eq!(m.pow(2), Mat::diagonal(&[-1, -1]));
        assert!(m.pow(4).is_identity());
    }

    #[test]
    fn sparse_matches_dense() {
        let a = SparseMat::from_columns(3, vec![vec![(1, 2)], vec![(2, 1), (0, -1)], vec![(0, 3)]]);
        let b = a.mul(&a);
        let dense = |s: &SparseMat| {
            (0..3)
                .flat_map(|r| (0..3).map(move |c| (r, c)))
                .map(|(r, c)| s.get(r, c))
                .collect::<Vec<_>>()
        };
        let da = Mat { n: 3, a: dense(&a) };
        assert_eq!(dense(&b), da.mul(&da).a);
        let nil = SparseMat::from_columns(3, vec![vec![(1, 1)], vec![(2, 2)], vec![]]);
        let e = SparseMat::exp_nilpotent(&nil).unwrap();
        assert_eq!(e.get(2, 0), 1);
    }
}
