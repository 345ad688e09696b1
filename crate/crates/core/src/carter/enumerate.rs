//! Elliptic class atlases: exhaustive enumeration, construction from partition diagrams
//! for the classical types, and random sampling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::names;
use super::CarterDiagram;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::rootsystem::{CocharacterLattice, Family, Root, RootSystem, RootSystemType};
use crate::tits::{spin_from_signature, spin_signature, LatticeSpin, Spin};
use crate::weyl::{elliptic_classes_exhaustive, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Exhaustive,
    Diagram,
    Sampling,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Strategy::Auto => "auto",
            Strategy::Exhaustive => "exhaustive",
            Strategy::Diagram => "diagram",
            Strategy::Sampling => "sampling",
        };
        f.write_str(s)
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "diagram" => Ok(Strategy::Diagram),
            "sampling" => Ok(Strategy::Sampling),
            _ => Err(Error::config(format!("unknown strategy {s:?}"))),
        }
    }
}

/// Work caps for the enumeration strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest Weyl group enumerated element by element.
    pub max_group_order: u64,
    /// Elliptic elements to collect when sampling.
    pub samples: u64,
    /// Random elements drawn before sampling gives up.
    pub max_draws: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_group_order: 3_000_000,
            samples: 100_000,
            max_draws: 10_000_000,
        }
    }
}

/// One elliptic conjugacy class (or, when sampling, one characteristic polynomial bucket).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassRecord {
    #[serde(rename = "type")]
    pub ty: RootSystemType,
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
    pub order: u32,
    pub char_poly: String,
    pub char_poly_factors: String,
    pub signature: String,
    pub signature_bits: String,
    pub adjoint_spin: Spin,
    pub universal_spin: Spin,
    pub spins: Vec<LatticeSpin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linked_to_minus_identity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_size: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    /// Reduced word of the representative.
    pub representative: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram: Option<Vec<Vec<i32>>>,
    pub strategy: Strategy,
}

impl ClassRecord {
    pub fn representative_element(&self) -> Result<WeylElement> {
        WeylElement::from_word(self.ty, &self.representative)
    }

    /// Whether `name` is this class's name or one of its aliases, up to notation.
    pub fn matches_name(&self, name: &str) -> bool {
        let family = Some(self.ty.family());
        std::iter::once(&self.name)
            .chain(&self.aliases)
            .any(|n| names::same_name(n, name, family))
    }

    pub fn spin_for(&self, lattice: &str) -> Option<Spin> {
        self.spins
            .iter()
            .find(|s| s.lattice == lattice)
            .map(|s| s.spin)
    }
}

pub(crate) struct Lattices {
    all: Vec<CocharacterLattice>,
}

impl Lattices {
    pub(crate) fn new(rs: &RootSystem) -> Self {
        Lattices { all: rs.lattices() }
    }
}

pub(crate) fn make_record(
    rs: &RootSystem,
    lattices: &Lattices,
    w: &WeylElement,
    name: String,
    diagram: Option<&[Root]>,
    strategy: Strategy,
) -> Result<ClassRecord> {
    let signature = spin_signature(w)?;
    let order = w.order();
    let spins = lattices
        .all
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
    let universal_spin = spins.first().expect("at least one lattice").spin;
    let adjoint_spin = spins.last().expect("at least one lattice").spin;
    let cp = w.char_poly();
    let mut aliases = Vec::new();
    if w.is_minus_identity() {
        aliases.push("-I".to_string());
        let a1n = format!("A1^{}", rs.rank());
        if !names::same_name(&name, &a1n, Some(rs.ty().family())) {
            aliases.push(a1n);
        }
    }
    Ok(ClassRecord {
        ty: rs.ty(),
        name,
        aliases,
        order,
        char_poly: cp.to_string(),
        char_poly_factors: cp.factored(),
        signature: signature.to_string(),
        signature_bits: signature.bit_string(),
        adjoint_spin,
        universal_spin,
        spins,
        linked_to_minus_identity: w.is_linked_to_minus_identity().ok(),
        class_size: None,
        samples: None,
        representative: w.reduced_word().letters,
        diagram: diagram.map(|d| d.iter().map(|r| r.coords().to_vec()).collect()),
        strategy,
    })
}

/// Partitions of `n` with parts in decreasing order, `[n]` first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Splits a chain `b_1, ..., b_m` of type B or C (special root last) into components of the
/// given sizes. The first component of size `p` is `b_{p-1}, ..., b_1, -theta` where `theta`
/// is the highest short root (B) or highest root (C) of the chain; the rest recurses on
/// `b_{p+1}, ..., b_m`.
fn split_chain(
    rs: &RootSystem,
    chain: &[Root],
    parts: &[usize],
    long_special: bool,
) -> Result<Vec<Root>> {
    let m = chain.len();
    let Some((&p, rest)) = parts.split_first() else {
        return Ok(vec![]);
    };
    if p == m {
        return Ok(chain.to_vec());
    }
    let zero = vec![0; rs.rank()];
    let theta = if long_special {
        let twice = chain[..m - 1]
            .iter()
            .fold(zero.clone(), |acc, r| add(&acc, r.coords()));
        add(&add(&twice, &twice), chain[m - 1].coords())
    } else {
        chain.iter().fold(zero, |acc, r| add(&acc, r.coords()))
    };
    let neg_theta = rs.root(&theta)?.neg();
    let mut out: Vec<Root> = chain[..p - 1].iter().rev().cloned().collect();
    out.push(neg_theta);
    out.extend(split_chain(rs, &chain[p..], rest, long_special)?);
    Ok(out)
}

fn check_partition(rs: &RootSystem, parts: &[usize]) -> Result<()> {
    if parts.iter().sum::<usize>() != rs.rank() || parts.contains(&0) {
        return Err(Error::domain(format!(
            "{parts:?} is not a partition of {}",
            rs.rank()
        )));
    }
    Ok(())
}

/// Diagram `B_{n_1} x ... x B_{n_r}` in `B_n`; its element has characteristic polynomial
/// `prod (t^{n_i} + 1)`.
pub fn b_partition_diagram(rs: &RootSystem, parts: &[usize]) -> Result<CarterDiagram> {
    if rs.ty().family() != Family::B {
        return Err(Error::domain("B partition diagram in a non-B root system"));
    }
    check_partition(rs, parts)?;
    let chain: Vec<Root> = (1..=rs.rank()).map(|i| rs.simple_root(i).clone()).collect();
    CarterDiagram::new(rs, split_chain(rs, &chain, parts, false)?)
}

/// Diagram `C_{n_1} x ... x C_{n_r}` in `C_n` (with `C_1 = A_1`).
pub fn c_partition_diagram(rs: &RootSystem, parts: &[usize]) -> Result<CarterDiagram> {
    if rs.ty().family() != Family::C {
        return Err(Error::domain("C partition diagram in a non-C root system"));
    }
    check_partition(rs, parts)?;
    let chain: Vec<Root> = (1..=rs.rank()).map(|i| rs.simple_root(i).clone()).collect();
    CarterDiagram::new(rs, split_chain(rs, &chain, parts, true)?)
}

/// Simple coordinates of a vector given in the orthonormal basis of `D_n`
/// (`a_i = e_i - e_{i+1}` for `i < n`, `a_n = e_{n-1} + e_n`).
fn d_from_orthonormal(v: &[i32]) -> Vec<i32> {
    let n = v.len();
    let mut s = 0;
    let mut c = vec![0; n];
    for k in 0..n - 2 {
        s += v[k];
        c[k] = s;
    }
    let s1 = s + v[n - 2];
    c[n - 2] = (s1 - v[n - 1]) / 2;
    c[n - 1] = (s1 + v[n - 1]) / 2;
    c
}

/// Diagram for the elliptic class of `D_n` with characteristic polynomial `prod (t^{n_i} + 1)`
/// (an even number of parts). Parts are paired in decreasing order; a pair `(a, b)` on
/// coordinates `p_1..p_a, q_1..q_b` gives the roots `e_{p_k} - e_{p_{k+1}}`,
/// `e_{q_k} - e_{q_{k+1}}`, `e_{p_a} - e_{q_b}` and `e_{p_a} + e_{q_b}`.
pub fn d_partition_diagram(rs: &RootSystem, parts: &[usize]) -> Result<CarterDiagram> {
    if rs.ty().family() != Family::D {
        return Err(Error::domain("D partition diagram in a non-D root system"));
    }
    check_partition(rs, parts)?;
    if parts.len() % 2 == 1 {
        return Err(Error::domain(
            "elliptic classes of D_n have an even number of parts",
        ));
    }
    let n = rs.rank();
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let unit = |i: usize, j: usize, sign: i32| {
        let mut v = vec![0; n];
        v[i] += 1;
        v[j] += sign;
        d_from_orthonormal(&v)
    };
    let mut roots = Vec::new();
    let mut start = 0;
    for pair in sorted.chunks(2) {
        let (a, b) = (pair[0], pair[1]);
        let p: Vec<usize> = (start..start + a).collect();
        let q: Vec<usize> = (start + a..start + a + b).collect();
        for k in 0..a - 1 {
            roots.push(unit(p[k], p[k + 1], -1));
        }
        for k in 0..b - 1 {
            roots.push(unit(q[k], q[k + 1], -1));
        }
        roots.push(unit(p[a - 1], q[b - 1], -1));
        roots.push(unit(p[a - 1], q[b - 1], 1));
        start += a + b;
    }
    CarterDiagram::from_coords(rs, &roots)
}

/// Class name derived from the characteristic polynomial, when it determines the class.
fn name_from_char_poly(ty: RootSystemType, w: &WeylElement) -> Option<String> {
    let cp = w.char_poly();
    match ty.family() {
        Family::A => Some(format!("A{}", ty.rank())),
        Family::B => names::partition_from_char_poly(&cp).map(|p| names::b_class_name(&p)),
        Family::C => names::partition_from_char_poly(&cp).map(|p| names::c_class_name(&p)),
        Family::D => names::partition_from_char_poly(&cp).map(|p| names::d_class_name(&p)),
        _ => {
            let factored = cp.factored();
            let hits: Vec<&str> = names::exceptional_table(ty)
                .iter()
                .filter(|(_, f)| *f == factored)
                .map(|(n, _)| *n)
                .collect();
            match hits.as_slice() {
                [one] => Some(one.to_string()),
                _ => None,
            }
        }
    }
}

fn partition_diagram(rs: &RootSystem, parts: &[usize]) -> Result<Option<CarterDiagram>> {
    Ok(match rs.ty().family() {
        Family::A => Some(CarterDiagram::simple(rs)),
        Family::B => Some(b_partition_diagram(rs, parts)?),
        Family::C => Some(c_partition_diagram(rs, parts)?),
        Family::D => Some(d_partition_diagram(rs, parts)?),
        _ => None,
    })
}

fn exhaustive(rs: &RootSystem, budget: &Budget) -> Result<Vec<ClassRecord>> {
    let ty = rs.ty();
    let found = elliptic_classes_exhaustive(ty, budget.max_group_order)?;
    let lattices = Lattices::new(rs);
    let mut labels: Vec<Option<(String, Option<Vec<Root>>)>> = vec![None; found.classes.len()];
    for (name, roots) in names::named_root_lists(rs) {
        let w = rs.product_of_reflections(&roots)?;
        let idx = found.class_of(&w).ok_or_else(|| {
            Error::invariant(format!("named diagram {name} is not elliptic in {ty}"))
        })?;
        if labels[idx].is_some() {
            return Err(Error::invariant(format!(
                "two named diagrams land in one class of {ty}"
            )));
        }
        labels[idx] = Some((name, Some(roots)));
    }
    let mut records = Vec::with_capacity(found.classes.len());
    for (idx, class) in found.classes.iter().enumerate() {
        let w = &class.representative;
        let (name, roots) = match labels[idx].take() {
            Some(l) => l,
            None => {
                let name = name_from_char_poly(ty, w).ok_or_else(|| {
                    Error::invariant(format!(
                        "no name for class {} of {ty}",
                        w.char_poly().factored()
                    ))
                })?;
                let parts = names::partition_from_char_poly(&w.char_poly()).unwrap_or_default();
                let diagram = partition_diagram(rs, &parts)?;
                if let Some(d) = &diagram {
                    if found.class_of(&d.element(rs)) != Some(idx) {
                        return Err(Error::invariant(format!(
                            "diagram {name} misses its class in {ty}"
                        )));
                    }
                }
                (name, diagram.map(|d| d.nodes().to_vec()))
            }
        };
        let mut rec = make_record(
            rs,
            &lattices,
            w,
            name,
            roots.as_deref(),
            Strategy::Exhaustive,
        )?;
        rec.class_size = Some(class.size);
        records.push(rec);
    }
    if ty.family() == Family::E && ty.rank() == 7 {
        label_e7_indices(&mut records, |w| found.class_of(w))?;
    }
    let names: std::collections::HashSet<&str> = records.iter().map(|r| r.name.as_str()).collect();
    if names.len() != records.len() {
        return Err(Error::invariant(format!("duplicate class names in {ty}")));
    }
    Ok(records)
}

/// Carter's indices `w_2, w_3, w_4` for `A3^2xA1, A5xA2, A7`, and `w_10` for the other class
/// linked to `w_2`.
fn label_e7_indices(
    records: &mut [ClassRecord],
    class_of: impl Fn(&WeylElement) -> Option<usize>,
) -> Result<()> {
    for (alias, name) in [("w2", "A3^2xA1"), ("w3", "A5xA2"), ("w4", "A7")] {
        if let Some(r) = records.iter_mut().find(|r| r.name == name) {
            r.aliases.push(alias.to_string());
        }
    }
    let Some(w2) = records.iter().position(|r| r.name == "A3^2xA1") else {
        return Ok(());
    };
    let mut linked = Vec::new();
    for (i, r) in records.iter().enumerate() {
        if i == w2 {
            continue;
        }
        let w = r.representative_element()?;
        if (1..w.order()).any(|k| class_of(&w.pow(k as u64)) == Some(w2)) {
            linked.push(i);
        }
    }
    if let [i] = linked[..] {
        records[i].aliases.push("w10".to_string());
    }
    Ok(())
}

fn from_diagrams(rs: &RootSystem) -> Result<Vec<ClassRecord>> {
    let ty = rs.ty();
    let n = rs.rank();
    let lattices = Lattices::new(rs);
    let parts_list: Vec<Vec<usize>> = match ty.family() {
        Family::A => vec![vec![n]],
        Family::B | Family::C => partitions(n),
        Family::D => partitions(n)
            .into_iter()
            .filter(|p| p.len() % 2 == 0)
            .collect(),
        _ => {
            return Err(Error::Unsupported(format!(
                "no diagram construction for type {ty}"
            )))
        }
    };
    let mut records = Vec::new();
    for parts in parts_list {
        let d = partition_diagram(rs, &parts)?.expect("classical type");
        let w = d.element(rs);
        let expected = match ty.family() {
            Family::A => format!("A{n}"),
            _ => name_from_char_poly(ty, &w).unwrap_or_default(),
        };
        let want = match ty.family() {
            Family::A => WeylElement::coxeter(ty).char_poly(),
            _ => w.char_poly(),
        };
        let got_parts = names::partition_from_char_poly(&w.char_poly());
        if w.char_poly() != want
            || (ty.family() != Family::A && got_parts.as_deref() != Some(&parts[..]))
        {
            return Err(Error::invariant(format!(
                "diagram for {parts:?} has characteristic polynomial {}",
                w.char_poly()
            )));
        }
        records.push(make_record(
            rs,
            &lattices,
            &w,
            expected,
            Some(d.nodes()),
            Strategy::Diagram,
        )?);
    }
    Ok(records)
}

/// Counts of a sampling run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SamplingReport {
    #[serde(rename = "type")]
    pub ty: RootSystemType,
    pub seed: u64,
    pub draws: u64,
    pub elliptic: u64,
    /// Elliptic samples whose spin signature is not trivial.
    pub nontrivial_signatures: u64,
    /// Elliptic samples whose spin in some isogeny type differs from their bucket's first sample.
    pub inconsistent_spins: u64,
    pub buckets: Vec<ClassRecord>,
}

/// Draws uniform-ish random elements until `budget.samples` elliptic ones are found,
/// bucketing them by characteristic polynomial.
pub fn sample_elliptic(ty: RootSystemType, budget: &Budget, seed: u64) -> Result<SamplingReport> {
    let rs = RootSystem::build(ty);
    let lattices = Lattices::new(&rs);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut buckets: BTreeMap<Vec<i64>, ClassRecord> = BTreeMap::new();
    let (mut draws, mut elliptic, mut nontrivial, mut inconsistent) = (0u64, 0u64, 0u64, 0u64);
    while elliptic < budget.samples {
        if draws >= budget.max_draws {
            return Err(Error::Budget {
                what: format!(
                    "{draws} random draws gave {elliptic} of {} elliptic samples in {ty}",
                    budget.samples
                ),
                completed: elliptic,
            });
        }
        draws += 1;
        let w = WeylElement::random_with(ty, &mut rng);
        if !w.is_elliptic() {
            continue;
        }
        elliptic += 1;
        let signature = spin_signature(&w)?;
        if !signature.is_zero() {
            nontrivial += 1;
        }
        let cp = w.char_poly();
        match buckets.get_mut(cp.coeffs()) {
            Some(rec) => {
                *rec.samples.as_mut().expect("sampled") += 1;
                for (l, s) in lattices.all.iter().zip(&rec.spins) {
                    if spin_from_signature(signature, l)? != s.spin {
                        inconsistent += 1;
                        break;
                    }
                }
            }
            None => {
                let name = name_from_char_poly(ty, &w).unwrap_or_else(|| cp.factored());
                let mut rec = make_record(&rs, &lattices, &w, name, None, Strategy::Sampling)?;
                rec.samples = Some(1);
                buckets.insert(cp.coeffs().to_vec(), rec);
            }
        }
    }
    let mut records: Vec<ClassRecord> = buckets.into_values().collect();
    sort_records(&mut records);
    Ok(SamplingReport {
        ty,
        seed,
        draws,
        elliptic,
        nontrivial_signatures: nontrivial,
        inconsistent_spins: inconsistent,
        buckets: records,
    })
}

/// A random element with characteristic polynomial `target`, for types too large to enumerate.
pub fn sample_with_char_poly(
    ty: RootSystemType,
    target: &IntPoly,
    seed: u64,
    max_draws: u64,
) -> Result<WeylElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // a random walk on the Cayley graph, a few steps per draw
    let mut w = WeylElement::random_with(ty, &mut rng);
    for _ in 0..max_draws {
        for _ in 0..ty.rank() + 1 {
            let i = rng.gen_range(1..=ty.rank());
            w = w.mul(&WeylElement::simple_reflection(ty, i)?)?;
        }
        if w.char_poly().coeffs() == target.coeffs() {
            return Ok(w);
        }
    }
    Err(Error::Budget {
        what: format!("no element of {ty} with characteristic polynomial {target} found"),
        completed: max_draws,
    })
}

fn sort_records(records: &mut [ClassRecord]) {
    records.sort_by(|a, b| b.order.cmp(&a.order).then_with(|| a.name.cmp(&b.name)));
}

/// The strategy `Auto` resolves to for a type under a budget.
pub fn resolve_strategy(ty: RootSystemType, budget: &Budget) -> Strategy {
    if ty.weyl_group_order() <= budget.max_group_order as u128 {
        Strategy::Exhaustive
    } else if matches!(ty.family(), Family::A | Family::B | Family::C | Family::D) {
        Strategy::Diagram
    } else {
        Strategy::Sampling
    }
}

/// All elliptic classes of `W(ty)` with their spins. Sampling returns one record per
/// characteristic polynomial bucket.
pub fn enumerate_elliptic_classes(
    ty: RootSystemType,
    strategy: Strategy,
    budget: &Budget,
    seed: u64,
) -> Result<Vec<ClassRecord>> {
    let rs = RootSystem::build(ty);
    let strategy = if strategy == Strategy::Auto {
        resolve_strategy(ty, budget)
    } else {
        strategy
    };
    let mut records = match strategy {
        Strategy::Exhaustive => exhaustive(&rs, budget)?,
        Strategy::Diagram => from_diagrams(&rs)?,
        Strategy::Sampling => sample_elliptic(ty, budget, seed)?.buckets,
        Strategy::Auto => unreachable!(),
    };
    sort_records(&mut records);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(9).len(), 30);
        assert_eq!(partitions(4)[0], vec![4]);
    }

    #[test]
    fn classical_diagrams_have_expected_char_polys() {
        for (ty, filter_even) in [("B6", false), ("C6", false), ("D6", true), ("D7", true)] {
            let r = rs(ty);
            for parts in partitions(r.rank()) {
                if filter_even && parts.len() % 2 == 1 {
                    continue;
                }
                let d = partition_diagram(&r, &parts).unwrap().unwrap();
                assert!(d.is_full_rank());
                let cp = d.element(&r).char_poly();
                assert_eq!(
                    names::partition_from_char_poly(&cp),
                    Some(parts.clone()),
                    "{ty} {parts:?}"
                );
            }
        }
    }

    #[test]
    fn b_diagram_components() {
        let r = rs("B7");
        let d = b_partition_diagram(&r, &[3, 3, 1]).unwrap();
        assert_eq!(d.name(), "B3^2xB1");
        let c = c_partition_diagram(&rs("C6"), &[2, 4]).unwrap();
        assert_eq!(c.name(), "C4xC2");
    }

    #[test]
    fn exhaustive_and_diagram_agree() {
        for ty in ["B4", "C4", "D5", "A4"] {
            let t: RootSystemType = ty.parse().unwrap();
            let a =
                enumerate_elliptic_classes(t, Strategy::Exhaustive, &Budget::default(), 0).unwrap();
            let b =
                enumerate_elliptic_classes(t, Strategy::Diagram, &Budget::default(), 0).unwrap();
            assert_eq!(a.len(), b.len(), "{ty}");
            for (x, y) in a.iter().zip(&b) {
                assert_eq!(x.name, y.name);
                assert_eq!(x.char_poly, y.char_poly);
                assert_eq!(
                    x.spins.iter().map(|s| s.spin).collect::<Vec<_>>(),
                    y.spins.iter().map(|s| s.spin).collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn exceptional_names_assigned() {
        let f4 = enumerate_elliptic_classes(
            "F4".parse().unwrap(),
            Strategy::Exhaustive,
            &Budget::default(),
            0,
        )
        .unwrap();
        let mut names: Vec<&str> = f4.iter().map(|r| r.name.as_str()).collect();
        names.sort();
        assert_eq!(
            names,
            ["A1^4", "A2xA~2", "A3xA~1", "B4", "C3xA1", "D4", "D4(a1)", "F4", "F4(a1)"]
        );
        let g2 = enumerate_elliptic_classes(
            "G2".parse().unwrap(),
            Strategy::Auto,
            &Budget::default(),
            0,
        )
        .unwrap();
        assert_eq!(g2.len(), 3);
    }

    #[test]
    fn sampling_buckets_match_classes() {
        let budget = Budget {
            samples: 2000,
            ..Budget::default()
        };
        let report = sample_elliptic("B4".parse().unwrap(), &budget, 7).unwrap();
        assert_eq!(report.elliptic, 2000);
        assert_eq!(report.buckets.len(), 5);
        assert_eq!(report.inconsistent_spins, 0);
        assert_eq!(
            report
                .buckets
                .iter()
                .map(|b| b.samples.unwrap())
                .sum::<u64>(),
            2000
        );
    }

    #[test]
    fn sampling_budget_exhaustion() {
        let budget = Budget {
            samples: 10,
            max_draws: 5,
            ..Budget::default()
        };
        assert!(matches!(
            sample_elliptic("A3".parse().unwrap(), &budget, 1),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn record_json_round_trip() {
        let recs = enumerate_elliptic_classes(
            "C3".parse().unwrap(),
            Strategy::Diagram,
            &Budget::default(),
            0,
        )
        .unwrap();
        for r in recs {
            let s = serde_json::to_string(&r).unwrap();
            let back: ClassRecord = serde_json::from_str(&s).unwrap();
            assert_eq!(back, r);
        }
    }
}
