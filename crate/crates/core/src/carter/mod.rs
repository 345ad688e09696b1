//! Carter diagrams: ordered lists of linearly independent roots whose reflection product
//! is a given Weyl group element, their components, spin labelings and closed-form
//! signature predictions for the classical types.

mod chart;
mod enumerate;
pub mod names;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsystem::{Family, Root, RootSystem, RootSystemType};
use crate::torus::TorusVector;
use crate::weyl::WeylElement;

pub use chart::{expected_class_count, expected_spins, verify_final_chart, ChartReport, ChartRow};
pub use enumerate::{
    b_partition_diagram, c_partition_diagram, d_partition_diagram, enumerate_elliptic_classes,
    partitions, resolve_strategy, sample_elliptic, sample_with_char_poly, Budget, ClassRecord,
    SamplingReport, Strategy,
};

/// Dynkin type of a connected component, or `Other` for graphs that are not Dynkin diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentKind {
    A(usize),
    /// A chain of short roots in a non simply laced system.
    ATilde(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    Other(usize),
}

impl ComponentKind {
    pub fn rank(&self) -> usize {
        match *self {
            ComponentKind::A(m)
            | ComponentKind::ATilde(m)
            | ComponentKind::B(m)
            | ComponentKind::C(m)
            | ComponentKind::D(m)
            | ComponentKind::E(m)
            | ComponentKind::Other(m) => m,
            ComponentKind::F4 => 4,
            ComponentKind::G2 => 2,
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::A(m) => write!(f, "A{m}"),
            ComponentKind::ATilde(m) => write!(f, "A~{m}"),
            ComponentKind::B(m) => write!(f, "B{m}"),
            ComponentKind::C(m) => write!(f, "C{m}"),
            ComponentKind::D(m) => write!(f, "D{m}"),
            ComponentKind::E(m) => write!(f, "E{m}"),
            ComponentKind::F4 => write!(f, "F4"),
            ComponentKind::G2 => write!(f, "G2"),
            ComponentKind::Other(m) => write!(f, "Gamma{m}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct CarterDiagram {
    ty: RootSystemType,
    nodes: Vec<Root>,
    /// `bonds[i][j] = <b_i, b_j^vee> <b_j, b_i^vee>`
    bonds: Vec<Vec<u8>>,
}

impl fmt::Debug for CarterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CarterDiagram({} in {}: {:?})",
            self.name(),
            self.ty,
            self.nodes
        )
    }
}

/// Rank of a list of integer vectors.
fn integer_rank(rows: &[Vec<i32>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i64, |g, &x| gcd(g, x));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl CarterDiagram {
    /// The diagram on the given roots, in the given order.
    pub fn new(rs: &RootSystem, roots: Vec<Root>) -> Result<Self> {
        let roots: Vec<Root> = roots
            .iter()
            .map(|r| rs.root(r.coords()).cloned())
            .collect::<Result<_>>()?;
        let coords: Vec<Vec<i32>> = roots.iter().map(|r| r.coords().to_vec()).collect();
        if integer_rank(&coords) != roots.len() {
            return Err(Error::domain("diagram roots are linearly dependent"));
        }
        let bonds = roots
            .iter()
            .map(|a| {
                roots
                    .iter()
                    .map(|b| {
                        if a == b {
                            0
                        } else {
                            (rs.pairing(a.coords(), b) * rs.pairing(b.coords(), a)) as u8
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(CarterDiagram {
            ty: rs.ty(),
            nodes: roots,
            bonds,
        })
    }

    pub fn from_coords(rs: &RootSystem, roots: &[Vec<i32>]) -> Result<Self> {
        let roots = roots
            .iter()
            .map(|c| rs.root(c).cloned())
            .collect::<Result<Vec<_>>>()?;
        Self::new(rs, roots)
    }

    /// The Dynkin diagram itself.
    pub fn simple(rs: &RootSystem) -> Self {
        let roots = (1..=rs.rank()).map(|i| rs.simple_root(i).clone()).collect();
        Self::new(rs, roots).expect("simple roots are independent")
    }

    pub fn ty(&self) -> RootSystemType {
        self.ty
    }

    pub fn nodes(&self) -> &[Root] {
        &self.nodes
    }

    pub fn bonds(&self) -> &[Vec<u8>] {
        &self.bonds
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Whether the node count equals the rank, i.e. the product element is elliptic.
    pub fn is_full_rank(&self) -> bool {
        self.nodes.len() == self.ty.rank()
    }

    /// Product of the node reflections in node order.
    pub fn element(&self, rs: &RootSystem) -> WeylElement {
        rs.product_of_reflections(&self.nodes)
            .expect("nodes are roots of rs")
    }

    /// `h_b(-1)` for every node `b`, in simple-coroot coordinates mod 2.
    pub fn spin_labeling(&self, rs: &RootSystem) -> Vec<TorusVector> {
        self.nodes
            .iter()
            .map(|b| rs.coroot_mod2(b).expect("nodes are roots of rs"))
            .collect()
    }

    /// Connected components as lists of node positions, each in node order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = vec![];
            while let Some(v) = stack.pop() {
                members.push(v);
                for u in 0..n {
                    if self.bonds[v][u] > 0 && comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The subdiagram on the given node positions.
    pub fn subdiagram(&self, positions: &[usize]) -> CarterDiagram {
        CarterDiagram {
            ty: self.ty,
            nodes: positions.iter().map(|&p| self.nodes[p].clone()).collect(),
            bonds: positions
                .iter()
                .map(|&a| positions.iter().map(|&b| self.bonds[a][b]).collect())
                .collect(),
        }
    }

    fn neighbours(&self, v: usize, within: &[usize]) -> Vec<usize> {
        within
            .iter()
            .copied()
            .filter(|&u| self.bonds[v][u] > 0)
            .collect()
    }

    /// Node positions of a chain-shaped component, from one end to the other.
    fn chain_order(&self, comp: &[usize]) -> Option<Vec<usize>> {
        if comp.len() == 1 {
            return Some(comp.to_vec());
        }
        let ends: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| self.neighbours(v, comp).len() == 1)
            .collect();
        if ends.len() != 2 || comp.iter().any(|&v| self.neighbours(v, comp).len() > 2) {
            return None;
        }
        let mut order = vec![ends[0]];
        let mut prev = usize::MAX;
        let mut cur = ends[0];
        while order.len() < comp.len() {
            let next = self
                .neighbours(cur, comp)
                .into_iter()
                .find(|&u| u != prev)?;
            prev = cur;
            cur = next;
            order.push(cur);
        }
        Some(order)
    }

    /// Dynkin type of one component.
    pub fn component_kind(&self, comp: &[usize]) -> ComponentKind {
        let m = comp.len();
        let edges: usize = comp
            .iter()
            .map(|&v| self.neighbours(v, comp).len())
            .sum::<usize>()
            / 2;
        if edges + 1 != m {
            return ComponentKind::Other(m);
        }
        let long = |v: usize| self.nodes[v].is_long();
        let simply_laced_ambient = self.ty.family().is_simply_laced();
        if m == 1 {
            let v = comp[0];
            return match (long(v) || simply_laced_ambient, self.ty.family()) {
                (true, _) => ComponentKind::A(1),
                (false, Family::B) => ComponentKind::B(1),
                (false, _) => ComponentKind::ATilde(1),
            };
        }
        let max_bond = comp
            .iter()
            .flat_map(|&a| comp.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.bonds[a][b])
            .max();
        match max_bond {
            Some(3) => return ComponentKind::G2,
            Some(2) => {
                let Some(order) = self.chain_order(comp) else {
                    return ComponentKind::Other(m);
                };
                let shorts: Vec<usize> = (0..m).filter(|&k| !long(order[k])).collect();
                let longs = m - shorts.len();
                if m == 2 {
                    return if self.ty.family() == Family::C {
                        ComponentKind::C(2)
                    } else {
                        ComponentKind::B(2)
                    };
                }
                let at_end = |ks: &[usize]| ks.len() == 1 && (ks[0] == 0 || ks[0] == m - 1);
                let long_pos: Vec<usize> = (0..m).filter(|&k| long(order[k])).collect();
                return if at_end(&shorts) {
                    ComponentKind::B(m)
                } else if at_end(&long_pos) {
                    ComponentKind::C(m)
                } else if m == 4 && longs == 2 {
                    ComponentKind::F4
                } else {
                    ComponentKind::Other(m)
                };
            }
            _ => {}
        }
        // simply laced tree
        let all_short = comp.iter().all(|&v| !long(v)) && !simply_laced_ambient;
        if self.chain_order(comp).is_some() {
            return if all_short {
                ComponentKind::ATilde(m)
            } else {
                ComponentKind::A(m)
            };
        }
        let branch: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| self.neighbours(v, comp).len() == 3)
            .collect();
        if branch.len() != 1 || comp.iter().any(|&v| self.neighbours(v, comp).len() > 3) {
            return ComponentKind::Other(m);
        }
        let centre = branch[0];
        let mut arms: Vec<usize> = self
            .neighbours(centre, comp)
            .into_iter()
            .map(|start| {
                let mut len = 1;
                let (mut prev, mut cur) = (centre, start);
                loop {
                    let next: Vec<usize> = self
                        .neighbours(cur, comp)
                        .into_iter()
                        .filter(|&u| u != prev)
                        .collect();
                    match next.first() {
                        Some(&u) => {
                            prev = cur;
                            cur = u;
                            len += 1;
                        }
                        None => return len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => ComponentKind::D(m),
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => ComponentKind::E(m),
            _ => ComponentKind::Other(m),
        }
    }

    /// Structural name such as `A3^2xA1` or `C2xC4` (components ordered by decreasing rank).
    pub fn name(&self) -> String {
        let kinds: Vec<String> = self
            .components()
            .iter()
            .map(|c| self.component_kind(c).to_string())
            .collect();
        names::join_components(kinds)
    }

    /// Order of the product element of each component.
    fn component_orders(&self, rs: &RootSystem) -> Vec<u32> {
        self.components()
            .iter()
            .map(|c| self.subdiagram(c).element(rs).order())
            .collect()
    }

    /// 2-adic valuation of the order of the product element.
    pub fn content(&self, rs: &RootSystem) -> u32 {
        self.element(rs).order().trailing_zeros()
    }

    pub fn decomposition(&self, rs: &RootSystem) -> ComponentDecomposition {
        let order = self.element(rs).order();
        let content = order.trailing_zeros();
        let components = self
            .components()
            .into_iter()
            .zip(self.component_orders(rs))
            .map(|(nodes, d)| ComponentInfo {
                kind: self.component_kind(&nodes),
                nodes,
                order: d,
                content: d.trailing_zeros(),
                relevant: d.trailing_zeros() == content,
            })
            .collect();
        ComponentDecomposition {
            order,
            content,
            components,
        }
    }

    /// Components whose content equals the content of the whole diagram.
    pub fn relevant_components(&self, rs: &RootSystem) -> Vec<Vec<usize>> {
        self.decomposition(rs)
            .components
            .into_iter()
            .filter(|c| c.relevant)
            .map(|c| c.nodes)
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentInfo {
    pub nodes: Vec<usize>,
    pub kind: ComponentKind,
    pub order: u32,
    pub content: u32,
    pub relevant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentDecomposition {
    pub order: u32,
    pub content: u32,
    pub components: Vec<ComponentInfo>,
}

/// Exponent `e` with signature `h_n^e` for an elliptic element of `W(B_n)` whose
/// characteristic polynomial is `prod (t^{n_i} + 1)`.
pub fn b_exponent(parts: &[usize]) -> u32 {
    let d = parts.iter().fold(1u64, |l, &p| lcm(l, 2 * p as u64));
    let r = parts.len();
    let f = parts
        .iter()
        .filter(|&&p| (2 * p as u64).trailing_zeros() == d.trailing_zeros())
        .filter(|&&p| p % 4 == 1 || p % 4 == 2)
        .count() as u32;
    if d % 4 == 2 && (r % 4 == 2 || r % 4 == 3) {
        f + 1
    } else {
        f
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a as i64, b as i64) as u64 * b
}

/// Closed-form spin signature of the product element of a diagram, following the
/// component analysis for types A, B, C and the B-embedding for type D.
pub fn predict_signature(rs: &RootSystem, d: &CarterDiagram) -> Result<TorusVector> {
    let n = rs.rank();
    if !d.is_full_rank() {
        return Err(Error::domain(
            "signature prediction needs an elliptic diagram",
        ));
    }
    let dec = d.decomposition(rs);
    match rs.ty().family() {
        Family::A => {
            if dec.components.len() != 1 || dec.components[0].kind != ComponentKind::A(n) {
                return Err(Error::domain(
                    "type A elliptic diagrams are single A_n chains",
                ));
            }
            if n.is_multiple_of(2) {
                return Ok(TorusVector::zero(n));
            }
            let order = d
                .chain_order(&dec.components[0].nodes)
                .expect("A_n is a chain");
            let labels = d.spin_labeling(rs);
            Ok(order
                .iter()
                .step_by(2)
                .fold(TorusVector::zero(n), |acc, &v| acc + labels[v]))
        }
        Family::B => {
            let mut f = 0;
            for c in &dec.components {
                let ComponentKind::B(m) = c.kind else {
                    return Err(Error::domain(format!(
                        "component {} is not of type B",
                        c.kind
                    )));
                };
                if c.relevant && (m % 4 == 1 || m % 4 == 2) {
                    f += 1;
                }
            }
            let r = dec.components.len();
            let e = if dec.order % 4 == 2 && (r % 4 == 2 || r % 4 == 3) {
                f + 1
            } else {
                f
            };
            Ok(if e % 2 == 1 {
                TorusVector::from_indices(n, &[n])
            } else {
                TorusVector::zero(n)
            })
        }
        Family::C => {
            let labels = d.spin_labeling(rs);
            let mut sig = TorusVector::zero(n);
            for c in &dec.components {
                let m = match c.kind {
                    ComponentKind::C(m) => m,
                    ComponentKind::A(1) => 1,
                    other => {
                        return Err(Error::domain(format!("component {other} is not of type C")))
                    }
                };
                if !c.relevant {
                    continue;
                }
                let mut order = d.chain_order(&c.nodes).expect("C_m is a chain");
                if m > 1 && d.nodes[order[0]].is_long() {
                    order.reverse();
                }
                for &v in order.iter().step_by(2) {
                    sig += labels[v];
                }
            }
            Ok(sig)
        }
        Family::D => {
            let parts =
                names::partition_from_char_poly(&d.element(rs).char_poly()).ok_or_else(|| {
                    Error::domain("characteristic polynomial is not a product of t^k + 1")
                })?;
            let e = b_exponent(&parts);
            Ok(if e % 2 == 1 {
                TorusVector::from_indices(n, &[n - 1, n])
            } else {
                TorusVector::zero(n)
            })
        }
        _ => Err(Error::Unsupported(format!(
            "no closed-form signature for type {}",
            rs.ty()
        ))),
    }
}

/// Signature read off a spin labeling, valid when every component is a Dynkin diagram of
/// type A, C or D and nodes in different components have trivial root chains through each
/// other (so the lifts of different components commute).
///
/// A relevant `A_m` with `m` odd contributes the labels of every other node starting at an
/// end; `C_m` every other node starting at the short end; `D_m` with `m = 2, 3 mod 4` its two
/// short legs. Anything else returns `None`.
pub fn labeling_signature(rs: &RootSystem, d: &CarterDiagram) -> Option<TorusVector> {
    let comps = d.components();
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            for &x in a {
                for &y in b {
                    if rs.root_chain(&d.nodes[x], &d.nodes[y]).ok()? != (0, 0) {
                        return None;
                    }
                }
            }
        }
    }
    let labels = d.spin_labeling(rs);
    let dec = d.decomposition(rs);
    let mut sig = TorusVector::zero(rs.rank());
    for c in dec.components.iter().filter(|c| c.relevant) {
        match c.kind {
            ComponentKind::A(m) | ComponentKind::ATilde(m) => {
                if m % 2 == 1 {
                    let order = d.chain_order(&c.nodes)?;
                    for &v in order.iter().step_by(2) {
                        sig += labels[v];
                    }
                }
            }
            ComponentKind::C(_) => {
                let mut order = d.chain_order(&c.nodes)?;
                if d.nodes[order[0]].is_long() {
                    order.reverse();
                }
                for &v in order.iter().step_by(2) {
                    sig += labels[v];
                }
            }
            ComponentKind::D(m) => {
                if m % 4 == 2 || m % 4 == 3 {
                    let leaves: Vec<usize> = c
                        .nodes
                        .iter()
                        .copied()
                        .filter(|&v| d.neighbours(v, &c.nodes).len() == 1)
                        .filter(|&v| {
                            let nb = d.neighbours(v, &c.nodes)[0];
                            d.neighbours(nb, &c.nodes).len() == 3
                        })
                        .collect();
                    // D4 has three short legs; m = 4 contributes nothing anyway
                    if leaves.len() != 2 {
                        return None;
                    }
                    sig = sig + labels[leaves[0]] + labels[leaves[1]];
                }
            }
            _ if c.order % 2 == 1 => {}
            _ => return None,
        }
    }
    Some(sig)
}

/// Signature bits keyed by node position, for reports.
pub fn labeling_table(rs: &RootSystem, d: &CarterDiagram) -> BTreeMap<usize, String> {
    d.spin_labeling(rs)
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            (
                k,
                format!(
                    "({})",
                    t.indices()
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn dynkin_diagram_gives_coxeter_element() {
        for s in ["A4", "B3", "C4", "D5", "E6", "F4", "G2"] {
            let r = rs(s);
            let d = CarterDiagram::simple(&r);
            assert_eq!(d.element(&r), WeylElement::coxeter(r.ty()));
            assert_eq!(d.name(), s);
        }
    }

    #[test]
    fn orthogonal_roots_give_minus_identity() {
        let r = rs("C3");
        // long roots 2e_i: 2a1+2a2+a3, 2a2+a3, a3
        let d =
            CarterDiagram::from_coords(&r, &[vec![2, 2, 1], vec![0, 2, 1], vec![0, 0, 1]]).unwrap();
        assert!(d.element(&r).is_minus_identity());
        assert_eq!(d.name(), "A1^3");
    }

    #[test]
    fn dependent_roots_rejected() {
        let r = rs("A3");
        assert!(
            CarterDiagram::from_coords(&r, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).is_err()
        );
    }

    #[test]
    fn single_node_is_not_elliptic() {
        let r = rs("B2");
        let d = CarterDiagram::from_coords(&r, &[vec![1, 0]]).unwrap();
        assert!(!d.is_full_rank());
        assert!(!d.element(&r).is_elliptic());
    }

    #[test]
    fn b_exponent_examples() {
        assert_eq!(b_exponent(&[3, 3, 1]), 2);
        assert_eq!(b_exponent(&[6, 1]), 1);
    }
}
