//! Chevalley basis of the simple Lie algebra and the adjoint group elements `x_a`, `m_a`, `h_a(-1)`.
//!
//! Signs: positive roots are ordered by height, then lexicographically. For each non-simple
//! positive root `xi`, the extraspecial pair `(a, b)` has `a` the first simple root with
//! `xi - a` a root, and `N(a, b) = +(p + 1)`. Every other constant follows from
//! `N(r, s) = -N(s, r)`, `N(-r, -s) = -N(r, s)`, the cyclic rule for `r + s + t = 0` and the
//! four-root identity for `r + s - a - b = 0`.

use std::collections::HashMap;

use serde::Serialize;

use super::matrix::SparseMat;
use crate::error::{Error, Result};
use crate::rootsystem::{Root, RootSystem, RootSystemType};
use crate::tits::{spin_signature, Spin, TitsElement};
use crate::torus::TorusVector;
use crate::weyl::WeylElement;

pub struct StructureConstants {
    ty: RootSystemType,
    nroots: usize,
    /// `n[a * nroots + b]`, zero when `a + b` is not a root.
    n: Vec<i64>,
}

fn ratio(num: i64, den: i64) -> Result<i64> {
    if den == 0 || num % den != 0 {
        return Err(Error::invariant(format!(
            "structure constant {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

struct Builder<'a> {
    rs: &'a RootSystem,
    nroots: usize,
    npos: usize,
    pos: Vec<i64>,
    neg_of: Vec<usize>,
    sum: Vec<Option<usize>>,
}

impl Builder<'_> {
    fn norm(&self, i: usize) -> i64 {
        let c = self.rs.roots()[i].coords();
        self.rs.inner(c, c)
    }

    fn is_pos(&self, i: usize) -> bool {
        i < self.npos
    }

    fn pos_entry(&self, x: usize, y: usize) -> Result<i64> {
        let v = self.pos[x * self.npos + y];
        if v == 0 {
            return Err(Error::invariant(
                "structure constant requested before it was fixed",
            ));
        }
        Ok(v)
    }

    /// `N(x, y)` for arbitrary roots with `x + y` a root, from the positive table.
    fn get(&self, x: usize, y: usize) -> Result<i64> {
        let z =
            self.sum[x * self.nroots + y].ok_or_else(|| Error::invariant("sum is not a root"))?;
        match (self.is_pos(x), self.is_pos(y)) {
            (true, true) => self.pos_entry(x, y),
            (false, false) => Ok(-self.get(self.neg_of[x], self.neg_of[y])?),
            (false, true) => Ok(-self.get(y, x)?),
            (true, false) => {
                if self.is_pos(z) {
                    // x + y = z, so (-y) + z = x with both positive
                    ratio(
                        -self.norm(z) * self.pos_entry(self.neg_of[y], z)?,
                        self.norm(x),
                    )
                } else {
                    let t = self.neg_of[z];
                    ratio(self.norm(t) * self.pos_entry(t, x)?, self.norm(y))
                }
            }
        }
    }
}

impl StructureConstants {
    pub fn compute(rs: &RootSystem) -> Result<Self> {
        let roots = rs.roots();
        let nroots = roots.len();
        let npos = rs.num_positive();
        let n = rs.rank();
        let index = |c: &[i32]| rs.index_of(c);
        let neg_of: Vec<usize> = roots
            .iter()
            .map(|r| index(r.neg().coords()).expect("negatives"))
            .collect();
        let mut sum = vec![None; nroots * nroots];
        for (a, ra) in roots.iter().enumerate() {
            for (b, rb) in roots.iter().enumerate() {
                let s: Vec<i32> = ra
                    .coords()
                    .iter()
                    .zip(rb.coords())
                    .map(|(x, y)| x + y)
                    .collect();
                sum[a * nroots + b] = index(&s);
            }
        }
        let mut bld = Builder {
            rs,
            nroots,
            npos,
            pos: vec![0; npos * npos],
            neg_of,
            sum,
        };
        for xi in n..npos {
            let pairs: Vec<(usize, usize)> = (0..npos)
                .filter_map(|r| {
                    let s = bld.sum[xi * nroots + bld.neg_of[r]]?;
                    (s < npos).then_some((r, s))
                })
                .collect();
            let &(a, b) = pairs
                .iter()
                .find(|&&(r, _)| r < n)
                .ok_or_else(|| Error::invariant("no extraspecial pair"))?;
            let p = rs.root_chain(&roots[a], &roots[b])?.0 as i64;
            bld.pos[a * npos + b] = p + 1;
            bld.pos[b * npos + a] = -(p + 1);
            let nab = p + 1;
            for &(r, s) in &pairs {
                if r == a || r == b || r > s {
                    continue;
                }
                let (na, nb) = (bld.neg_of[a], bld.neg_of[b]);
                let mut num = 0i64;
                let mut terms: Vec<(i64, i64)> = Vec::new();
                if let Some(sa) = bld.sum[s * nroots + na] {
                    terms.push((bld.get(s, na)? * bld.get(r, nb)?, bld.norm(sa)));
                }
                if let Some(ra) = bld.sum[r * nroots + na] {
                    terms.push((bld.get(na, r)? * bld.get(s, nb)?, bld.norm(ra)));
                }
                let den: i64 = terms.iter().map(|t| t.1).product::<i64>().max(1);
                for (v, d) in &terms {
                    num += v * (den / d);
                }
                let value = ratio(bld.norm(xi) * num, den * nab)?;
                bld.pos[r * npos + s] = value;
                bld.pos[s * npos + r] = -value;
            }
        }
        let mut table = vec![0; nroots * nroots];
        for a in 0..nroots {
            for b in 0..nroots {
                if bld.sum[a * nroots + b].is_some() {
                    table[a * nroots + b] = bld.get(a, b)?;
                }
            }
        }
        let sc = StructureConstants {
            ty: rs.ty(),
            nroots,
            n: table,
        };
        sc.check(rs, &bld.neg_of)?;
        Ok(sc)
    }

    /// Magnitudes `p + 1`, antisymmetry and `N(-a, -b) = -N(a, b)`.
    fn check(&self, rs: &RootSystem, neg_of: &[usize]) -> Result<()> {
        let roots = rs.roots();
        for a in 0..self.nroots {
            for b in 0..self.nroots {
                let v = self.n[a * self.nroots + b];
                if v == 0 {
                    continue;
                }
                let p = rs.root_chain(&roots[a], &roots[b])?.0 as i64;
                if v.abs() != p + 1
                    || self.n[b * self.nroots + a] != -v
                    || self.n[neg_of[a] * self.nroots + neg_of[b]] != -v
                {
                    return Err(Error::invariant(format!(
                        "structure constant N({}, {}) = {v} violates the Chevalley identities",
                        roots[a], roots[b]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ty(&self) -> RootSystemType {
        self.ty
    }

    /// `N(a, b)` by root index, zero when `a + b` is not a root.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.nroots + b]
    }

    /// Number of ordered pairs with `a + b` a root.
    pub fn len(&self) -> usize {
        self.n.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn max_abs(&self) -> i64 {
        self.n.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// The Lie algebra with basis `e_a` (root order) followed by the simple coroots `h_1..h_n`.
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    sc: StructureConstants,
    coroots: Vec<Vec<i32>>,
    neg_of: Vec<usize>,
    sum: HashMap<(usize, usize), usize>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let sc = StructureConstants::compute(rs)?;
        let roots = rs.roots();
        let coroots = roots
            .iter()
            .map(|r| rs.coroot(r))
            .collect::<Result<Vec<_>>>()?;
        let neg_of = roots
            .iter()
            .map(|r| rs.index_of(r.neg().coords()).expect("negatives"))
            .collect();
        let mut sum = HashMap::new();
        for (a, ra) in roots.iter().enumerate() {
            for (b, rb) in roots.iter().enumerate() {
                let s: Vec<i32> = ra
                    .coords()
                    .iter()
                    .zip(rb.coords())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(c) = rs.index_of(&s) {
                    sum.insert((a, b), c);
                }
            }
        }
        Ok(ChevalleyAlgebra {
            rs: rs.clone(),
            sc,
            coroots,
            neg_of,
            sum,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn dim(&self) -> usize {
        self.rs.roots().len() + self.rs.rank()
    }

    fn nroots(&self) -> usize {
        self.rs.roots().len()
    }

    /// `[x, y]` for basis elements, as a sparse vector.
    pub fn bracket(&self, x: usize, y: usize) -> Vec<(usize, i64)> {
        let nr = self.nroots();
        let roots = self.rs.roots();
        match (x < nr, y < nr) {
            (false, false) => vec![],
            (false, true) => {
                let i = x - nr;
                let v = self
                    .rs
                    .pairing(roots[y].coords(), self.rs.simple_root(i + 1))
                    as i64;
                if v == 0 {
                    vec![]
                } else {
                    vec![(y, v)]
                }
            }
            (true, false) => self
                .bracket(y, x)
                .into_iter()
                .map(|(k, v)| (k, -v))
                .collect(),
            (true, true) => {
                if self.neg_of[x] == y {
                    self.coroots[x]
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c != 0)
                        .map(|(i, &c)| (nr + i, c as i64))
                        .collect()
                } else if let Some(&s) = self.sum.get(&(x, y)) {
                    vec![(s, self.sc.get(x, y))]
                } else {
                    vec![]
                }
            }
        }
    }

    fn bracket_vec(&self, x: usize, v: &[(usize, i64)]) -> Vec<(usize, i64)> {
        v.iter()
            .flat_map(|&(k, c)| self.bracket(x, k).into_iter().map(move |(j, d)| (j, c * d)))
            .collect()
    }

    /// Checks antisymmetry and the Jacobi identity on all basis triples; returns the number
    /// of triples checked.
    pub fn check_jacobi(&self) -> Result<u64> {
        let dim = self.dim();
        let mut acc = vec![0i64; dim];
        let mut count = 0u64;
        for a in 0..dim {
            for b in a + 1..dim {
                let ab = self.bracket(a, b);
                let mut ba = self.bracket(b, a);
                ba.iter_mut().for_each(|e| e.1 = -e.1);
                if sorted(ab.clone()) != sorted(ba) {
                    return Err(Error::invariant(format!(
                        "bracket not antisymmetric on basis {a}, {b}"
                    )));
                }
                for c in b + 1..dim {
                    let terms = [
                        self.bracket_vec(a, &self.bracket(b, c)),
                        self.bracket_vec(b, &self.bracket(c, a)),
                        self.bracket_vec(c, &ab),
                    ];
                    let touched: Vec<usize> = terms.iter().flatten().map(|e| e.0).collect();
                    for &(k, v) in terms.iter().flatten() {
                        acc[k] += v;
                    }
                    if touched.iter().any(|&k| acc[k] != 0) {
                        return Err(Error::invariant(format!(
                            "Jacobi identity fails on basis {a}, {b}, {c}"
                        )));
                    }
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// `ad(e_a)` for the root with index `a`.
    pub fn ad_root(&self, a: usize) -> SparseMat {
        let dim = self.dim();
        SparseMat::from_columns(dim, (0..dim).map(|b| self.bracket(a, b)).collect())
    }
}

fn sorted(mut v: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    v.sort_unstable();
    v
}

/// Adjoint images of `x_a(l)`, `m_a(1)` and `h_a(-1)`.
pub struct AdjointGroup {
    alg: ChevalleyAlgebra,
    m: Vec<SparseMat>,
    m_inv: Vec<SparseMat>,
}

impl AdjointGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let alg = ChevalleyAlgebra::new(rs)?;
        let nr = rs.roots().len();
        let mut m = Vec::with_capacity(nr);
        let mut m_inv = Vec::with_capacity(nr);
        for a in 0..nr {
            let x = Self::x_with(&alg, a, 1)?;
            let y = Self::x_with(&alg, alg.neg_of[a], -1)?;
            m.push(x.mul(&y).mul(&x));
            let xi = Self::x_with(&alg, a, -1)?;
            let yi = Self::x_with(&alg, alg.neg_of[a], 1)?;
            m_inv.push(xi.mul(&yi).mul(&xi));
        }
        Ok(AdjointGroup { alg, m, m_inv })
    }

    fn x_with(alg: &ChevalleyAlgebra, a: usize, lambda: i64) -> Result<SparseMat> {
        SparseMat::exp_nilpotent(&alg.ad_root(a).scale(lambda))
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.alg.rs
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn index(&self, alpha: &Root) -> Result<usize> {
        self.alg
            .rs
            .index_of(alpha.coords())
            .ok_or_else(|| Error::domain(format!("{alpha} is not a root")))
    }

    /// `x_a(l) = exp(l ad e_a)`.
    pub fn x(&self, alpha: &Root, lambda: i64) -> Result<SparseMat> {
        Self::x_with(&self.alg, self.index(alpha)?, lambda)
    }

    /// `m_a(1) = x_a(1) x_{-a}(-1) x_a(1)`.
    pub fn m(&self, alpha: &Root) -> Result<&SparseMat> {
        Ok(&self.m[self.index(alpha)?])
    }

    /// `m_a(-1) = m_a(1)^{-1}`.
    pub fn m_inv(&self, alpha: &Root) -> Result<&SparseMat> {
        Ok(&self.m_inv[self.index(alpha)?])
    }

    pub fn m_simple(&self, i: usize) -> &SparseMat {
        let rs = &self.alg.rs;
        &self.m[rs
            .index_of(rs.simple_root(i).coords())
            .expect("simple root")]
    }

    /// The sign `c` in `m_a m_b m_a^-1 = m_{s_a b}(c)`, read off from `Ad(m_a) e_b = c e_{s_a b}`
    /// (which gives `m_a x_b(l) m_a^-1 = x_{s_a b}(c l)`). The same sign must appear on `e_{-b}`,
    /// and the conjugate is compared with `m_{s_a b}(c)`.
    pub fn cr1_sign(&self, alpha: &Root, beta: &Root) -> Result<i8> {
        let rs = self.root_system();
        let gamma = rs.root(&rs.reflect(alpha, beta.coords()))?;
        let ma = self.m(alpha)?;
        let c = ma.get(self.index(gamma)?, self.index(beta)?);
        let c_neg = ma.get(self.index(&gamma.neg())?, self.index(&beta.neg())?);
        if c.abs() != 1 || c != c_neg {
            return Err(mismatch(format!(
                "m_({alpha}) sends e_({beta}) and e_(-{beta}) with signs {c}, {c_neg}"
            )));
        }
        let want = if c == 1 {
            self.m(gamma)?
        } else {
            self.m_inv(gamma)?
        };
        if ma.mul(self.m(beta)?).mul(self.m_inv(alpha)?) != *want {
            return Err(mismatch(format!("(CR1) fails for {alpha}, {beta}")));
        }
        Ok(c as i8)
    }

    /// `h(t)` for `t = sum t_i a_i^vee mod 2`: `e_b` scaled by `(-1)^<b, t>`, trivial on the Cartan part.
    pub fn torus(&self, t: TorusVector) -> SparseMat {
        let rs = &self.alg.rs;
        let mut d: Vec<i64> = rs
            .roots()
            .iter()
            .map(|b| {
                let e: i32 = t
                    .indices()
                    .iter()
                    .map(|&i| rs.pairing(b.coords(), rs.simple_root(i)))
                    .sum();
                if e.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        d.extend(std::iter::repeat_n(1, rs.rank()));
        SparseMat::diagonal(&d)
    }

    /// `h_a(-1)` built from the coroot of `a`: `e_b` scaled by `(-1)^<b, a^vee>`.
    pub fn h_minus_one(&self, alpha: &Root) -> SparseMat {
        let rs = &self.alg.rs;
        let mut d: Vec<i64> = rs
            .roots()
            .iter()
            .map(|b| {
                if rs.pairing(b.coords(), alpha) % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        d.extend(std::iter::repeat_n(1, rs.rank()));
        SparseMat::diagonal(&d)
    }

    /// Product of `m_{a_i}(1)` along a word.
    pub fn word(&self, word: &[usize]) -> SparseMat {
        word.iter()
            .fold(SparseMat::identity(self.dim()), |acc, &i| {
                acc.mul(self.m_simple(i))
            })
    }

    /// Adjoint image of a Tits-model element `m_w h(t)`.
    pub fn tits_image(&self, g: &TitsElement) -> SparseMat {
        self.word(&g.w().reduced_word().letters)
            .mul(&self.torus(g.t()))
    }

    /// Checks that `m_a(1)` permutes root vectors up to sign along `s_a` and acts as `s_a`
    /// on the coroot block. Returns the signs `c` with `m_a e_b = c e_{s_a b}`.
    pub fn monomial_signs(&self, alpha: &Root) -> Result<Vec<i8>> {
        let rs = &self.alg.rs;
        let m = self.m(alpha)?;
        let nr = rs.roots().len();
        let mut signs = Vec::with_capacity(nr);
        for (b, beta) in rs.roots().iter().enumerate() {
            let target = rs
                .index_of(&rs.reflect(alpha, beta.coords()))
                .expect("reflection of a root");
            match m.column(b) {
                [(r, v)] if *r as usize == target && v.abs() == 1 => signs.push(*v as i8),
                col => {
                    return Err(Error::Mismatch(format!(
                        "m_({alpha}) sends e_({beta}) to {col:?}, not a signed root vector at {}",
                        rs.roots()[target]
                    )))
                }
            }
        }
        let acor = rs.coroot(alpha)?;
        for i in 0..rs.rank() {
            let p = rs.pairing(alpha.coords(), rs.simple_root(i + 1)) as i64;
            let mut want: Vec<(usize, i64)> = vec![(nr + i, 1)];
            want.extend(
                acor.iter()
                    .enumerate()
                    .map(|(k, &c)| (nr + k, -p * c as i64)),
            );
            let want = SparseMat::from_columns(1 + nr + rs.rank(), vec![want]);
            if m.column(nr + i) != want.column(0) {
                return Err(Error::Mismatch(format!(
                    "m_({alpha}) does not act as the reflection on h_{}",
                    i + 1
                )));
            }
        }
        Ok(signs)
    }
}

/// Counts from [`verify_relations`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub jacobi_triples: u64,
    pub monomial_roots: u64,
    pub cr1_pairs: u64,
    pub cr1_negative_signs: u64,
    pub cr2_pairs: u64,
    pub commuting_pairs: u64,
    pub single_bond_pairs: u64,
    pub double_bond_pairs: u64,
    /// Orthogonal pairs whose sum is a root; there `m_a m_b m_a^-1 = m_b(-1)`.
    pub orthogonal_chain_pairs: u64,
    /// The double-bond identity is an equality of adjoint images, i.e. it holds modulo the center.
    pub note: String,
}

fn mismatch(what: String) -> Error {
    Error::Mismatch(what)
}

/// Checks the Chevalley relations in the adjoint representation: Jacobi (when `jacobi`),
/// monomiality of every `m_a`, (CR1) with its sign, (CR2), commuting of orthogonal roots
/// with trivial chains, and the lifted braid relations. `max_pairs` root pairs are examined
/// (all of them when there are fewer), spread evenly over all ordered pairs.
pub fn verify_relations(rs: &RootSystem, max_pairs: usize, jacobi: bool) -> Result<RelationReport> {
    let g = AdjointGroup::new(rs)?;
    let mut rep = RelationReport {
        ty: rs.ty().to_string(),
        note: "double-bond identities are checked on adjoint images, so modulo the center".into(),
        ..Default::default()
    };
    if jacobi {
        rep.jacobi_triples = g.algebra().check_jacobi()?;
    }
    let roots = rs.roots();
    for a in roots {
        g.monomial_signs(a)?;
        if g.m(a)?.mul(g.m(a)?) != g.h_minus_one(a) {
            return Err(mismatch(format!("m_({a})^2 differs from h_({a})(-1)")));
        }
        if !g.m(a)?.mul(g.m_inv(a)?).is_identity() {
            return Err(mismatch(format!(
                "m_({a})(-1) is not the inverse of m_({a})(1)"
            )));
        }
        rep.monomial_roots += 1;
    }
    let total = roots.len() * roots.len();
    let count = max_pairs.clamp(1, total);
    for k in (0..count).map(|j| j * total / count) {
        let (alpha, beta) = (&roots[k / roots.len()], &roots[k % roots.len()]);
        let (ma, mai, mb) = (g.m(alpha)?, g.m_inv(alpha)?, g.m(beta)?);
        let gamma = rs.root(&rs.reflect(alpha, beta.coords()))?;
        let c = g.cr1_sign(alpha, beta)?;
        rep.cr1_pairs += 1;
        if c == -1 {
            rep.cr1_negative_signs += 1;
        }
        if ma.mul(&g.h_minus_one(beta)).mul(mai) != g.h_minus_one(gamma) {
            return Err(mismatch(format!("(CR2) fails for {alpha}, {beta}")));
        }
        rep.cr2_pairs += 1;
        if alpha == beta || *alpha == beta.neg() {
            continue;
        }
        let bond = rs.pairing(alpha.coords(), beta) * rs.pairing(beta.coords(), alpha);
        if bond == 0 && rs.root_chain(alpha, beta)? == (0, 0) {
            if c != 1 || ma.mul(mb) != mb.mul(ma) {
                return Err(mismatch(format!(
                    "m_({alpha}) and m_({beta}) do not commute"
                )));
            }
            rep.commuting_pairs += 1;
        } else if bond == 0 {
            if c != -1 {
                return Err(mismatch(format!(
                    "c({alpha}, {beta}) = 1 for orthogonal roots with a nontrivial chain"
                )));
            }
            rep.orthogonal_chain_pairs += 1;
        }
        // sign rules along an obtuse bond: c(a,b) = -c(b,a) and c(a,b) c(a, s_a b) = -1 for
        // single bonds; c(a,b) c(a, s_a b) = 1 for double bonds with a short
        if rs.inner(alpha.coords(), beta.coords()) < 0
            && (bond == 1 || (bond == 2 && !alpha.is_long()))
        {
            let want = if bond == 1 { -1 } else { 1 };
            if c * g.cr1_sign(alpha, gamma)? != want {
                return Err(mismatch(format!(
                    "c({alpha}, {beta}) c({alpha}, {gamma}) is not {want}"
                )));
            }
            if bond == 1 && g.cr1_sign(beta, alpha)? != -c {
                return Err(mismatch(format!(
                    "c({alpha}, {beta}) and c({beta}, {alpha}) are not opposite"
                )));
            }
        }
        let ab = ma.mul(mb);
        match bond {
            1 if !ab.pow(3).is_identity() => {
                return Err(mismatch(format!("(m_({alpha}) m_({beta}))^3 is not 1")));
            }
            1 => rep.single_bond_pairs += 1,
            2 if beta.is_long() => {}
            2 => {
                let h = g.h_minus_one(beta);
                if ab.pow(4) != h || mb.mul(ma).pow(4) != h {
                    return Err(mismatch(format!(
                        "(m_({alpha}) m_({beta}))^4 is not h_({beta})(-1)"
                    )));
                }
                rep.double_bond_pairs += 1;
            }
            _ => {}
        }
    }
    Ok(rep)
}

/// Adjoint spin of an elliptic element, computed from matrices and compared with the Tits model.
pub fn adjoint_spin_check(g: &AdjointGroup, w: &WeylElement) -> Result<Spin> {
    let rs = g.root_system();
    if w.ty() != rs.ty() {
        return Err(Error::domain(
            "element and adjoint group have different types",
        ));
    }
    let signature = spin_signature(w)?;
    let g0 = g.word(&w.reduced_word().letters);
    let power = g0.pow(w.order() as u64);
    if power != g.torus(signature) {
        return Err(mismatch(format!(
            "adjoint image of g0^d disagrees with the signature {signature} for {}",
            w.reduced_word()
        )));
    }
    let spin = Spin::from_trivial(power.is_identity());
    let expected = crate::tits::spin(w, &rs.adjoint_lattice())?;
    if spin != expected {
        return Err(mismatch(format!(
            "adjoint spin {spin} from matrices, {expected} from the Tits model"
        )));
    }
    Ok(spin)
}

/// Checks that products of `m_i` along each word match the adjoint image of the Tits-model product.
pub fn check_tits_model(g: &AdjointGroup, words: &[Vec<usize>]) -> Result<u64> {
    let ty = g.root_system().ty();
    for word in words {
        let t = TitsElement::from_word(ty, word)?;
        if g.word(word) != g.tits_image(&t) {
            return Err(mismatch(format!(
                "Tits model disagrees with adjoint matrices on word {word:?}"
            )));
        }
    }
    Ok(words.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn magnitudes() {
        let a2 = StructureConstants::compute(&rs("A2")).unwrap();
        assert_eq!(a2.get(0, 1), -a2.get(1, 0));
        assert_eq!(a2.get(0, 1).abs(), 1);
        for t in ["A4", "D4", "E6"] {
            assert_eq!(StructureConstants::compute(&rs(t)).unwrap().max_abs(), 1);
        }
        let g2 = StructureConstants::compute(&rs("G2")).unwrap();
        assert_eq!(g2.max_abs(), 3);
        assert!(g2.n.iter().any(|v| v.abs() == 2));
    }

    #[test]
    fn jacobi_small_types() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let alg = ChevalleyAlgebra::new(&rs(t)).unwrap();
            assert!(alg.check_jacobi().unwrap() > 0, "{t}");
        }
    }

    #[test]
    fn m_sends_e_alpha_to_minus_e_neg_alpha() {
        let r = rs("B2");
        let g = AdjointGroup::new(&r).unwrap();
        for a in r.roots() {
            let signs = g.monomial_signs(a).unwrap();
            let k = r.index_of(a.coords()).unwrap();
            assert_eq!(signs[k], -1);
        }
    }

    #[test]
    fn relations_in_rank_two_and_three() {
        for t in ["A2", "B2", "G2", "B3", "C3"] {
            let rep = verify_relations(&rs(t), usize::MAX, true).unwrap();
            assert!(rep.cr1_pairs > 0);
        }
    }
}
