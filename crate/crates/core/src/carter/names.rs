//! Class names: partitions for the classical types, Carter's labels for the exceptional ones,
//! and a normal form for user-supplied names.

use std::collections::BTreeMap;

use crate::rootsystem::{Family, Root, RootSystem, RootSystemType};
use crate::weyl::CharPoly;

fn component_rank(name: &str) -> usize {
    let digits: String = name
        .chars()
        .skip_while(|c| !c.is_ascii_digit())
        .take_while(|c| c.is_ascii_digit())
        .collect();
    digits.parse().unwrap_or(0)
}

/// Joins component names into `A5xA2xA1` form: decreasing rank, equal names collected as powers.
pub fn join_components(parts: Vec<String>) -> String {
    let mut counts: BTreeMap<(std::cmp::Reverse<usize>, String), usize> = BTreeMap::new();
    for p in parts {
        for q in expand_token(&p) {
            *counts
                .entry((std::cmp::Reverse(component_rank(&q)), q))
                .or_default() += 1;
        }
    }
    counts
        .into_iter()
        .map(|((_, name), k)| if k == 1 { name } else { format!("{name}^{k}") })
        .collect::<Vec<_>>()
        .join("x")
}

/// `3A1` and `A1^3` both become three copies of `A1`.
fn expand_token(token: &str) -> Vec<String> {
    let lead: String = token.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rest = &token[lead.len()..];
    let (base, power) = match rest.rsplit_once('^') {
        Some((b, p)) => (b, p.parse::<usize>().unwrap_or(1)),
        None => (rest, 1),
    };
    let mult = lead.parse::<usize>().unwrap_or(1) * power;
    vec![base.to_string(); mult]
}

/// Partition `n_1 >= n_2 >= ...` with characteristic polynomial `prod (t^{n_i} + 1)`, if any.
pub fn partition_from_char_poly(cp: &CharPoly) -> Option<Vec<usize>> {
    let mut factors = cp.cyclotomic_factors();
    let mut parts = Vec::new();
    while let Some((&m, _)) = factors.iter().next_back() {
        if m % 2 == 1 && m > 1 {
            return None;
        }
        let k = if m == 1 { return None } else { m / 2 };
        // t^k + 1 = prod of Phi_d over d | 2k, d not dividing k
        for d in (1..=2 * k).filter(|d| (2 * k) % d == 0 && k % d != 0) {
            let e = factors.get_mut(&d)?;
            *e -= 1;
            if *e == 0 {
                factors.remove(&d);
            }
        }
        parts.push(k as usize);
    }
    Some(parts)
}

pub fn b_class_name(parts: &[usize]) -> String {
    join_components(parts.iter().map(|p| format!("B{p}")).collect())
}

pub fn c_class_name(parts: &[usize]) -> String {
    join_components(
        parts
            .iter()
            .map(|&p| {
                if p == 1 {
                    "A1".to_string()
                } else {
                    format!("C{p}")
                }
            })
            .collect(),
    )
}

/// Parts are paired off in decreasing order; `(a, b)` names `D_{a+b}(a_{b-1})`.
pub fn d_class_name(parts: &[usize]) -> String {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let comps = sorted
        .chunks(2)
        .map(|pair| match *pair {
            [1, 1] => "A1^2".to_string(),
            [2, 1] => "A3".to_string(),
            [a, 1] => format!("D{}", a + 1),
            [a, b] => format!("D{}(a{})", a + b, b - 1),
            _ => unreachable!("D partitions have an even number of parts"),
        })
        .collect();
    join_components(comps)
}

/// Carter labels of elliptic classes in exceptional types, keyed by characteristic polynomial.
/// Where two classes share a polynomial the entry lists both; they are separated by
/// [`named_root_lists`].
pub fn exceptional_table(ty: RootSystemType) -> &'static [(&'static str, &'static str)] {
    match (ty.family(), ty.rank()) {
        (Family::G, 2) => &[("G2", "Phi6"), ("A2", "Phi3"), ("A1xA~1", "Phi2^2")],
        (Family::F, 4) => &[
            ("F4", "Phi12"),
            ("B4", "Phi8"),
            ("F4(a1)", "Phi6^2"),
            ("D4(a1)", "Phi4^2"),
            ("A2xA~2", "Phi3^2"),
            ("C3xA1", "Phi2^2*Phi6"),
            ("D4", "Phi2^2*Phi6"),
            ("A3xA~1", "Phi2^2*Phi4"),
            ("A1^4", "Phi2^4"),
        ],
        (Family::E, 6) => &[
            ("E6", "Phi3*Phi12"),
            ("E6(a1)", "Phi9"),
            ("E6(a2)", "Phi3*Phi6^2"),
            ("A5xA1", "Phi2^2*Phi3*Phi6"),
            ("A2^3", "Phi3^3"),
        ],
        (Family::E, 7) => &[
            ("E7", "Phi2*Phi18"),
            ("E7(a1)", "Phi2*Phi14"),
            ("E7(a2)", "Phi2*Phi6*Phi12"),
            ("E7(a3)", "Phi2*Phi6*Phi10"),
            ("D6xA1", "Phi2^3*Phi10"),
            ("A7", "Phi2*Phi4*Phi8"),
            ("E7(a4)", "Phi2*Phi6^3"),
            ("D6(a2)xA1", "Phi2^3*Phi6^2"),
            ("A5xA2", "Phi2*Phi3^2*Phi6"),
            ("D4xA1^3", "Phi2^5*Phi6"),
            ("A3^2xA1", "Phi2^3*Phi4^2"),
            ("A1^7", "Phi2^7"),
        ],
        _ => &[],
    }
}

/// Named diagrams given as node lists; `0` stands for the negative highest root and `i > 0`
/// for the simple root `a_i`.
fn named_node_lists(ty: RootSystemType) -> &'static [(&'static str, &'static [usize])] {
    match (ty.family(), ty.rank()) {
        (Family::F, 4) => &[
            ("B4", &[0, 1, 2, 3]),
            ("C3xA1", &[0, 2, 3, 4]),
            ("A2xA~2", &[0, 1, 3, 4]),
            ("A3xA~1", &[0, 1, 2, 4]),
        ],
        (Family::E, 6) => &[
            ("A5xA1", &[1, 0, 4, 3, 5, 6]),
            ("A2^3", &[1, 2, 4, 0, 5, 6]),
        ],
        (Family::E, 7) => &[
            ("A7", &[1, 2, 3, 4, 6, 7, 0]),
            ("A5xA2", &[1, 2, 3, 4, 5, 7, 0]),
            ("A3^2xA1", &[1, 2, 3, 5, 6, 7, 0]),
            ("D6xA1", &[1, 3, 4, 5, 6, 7, 0]),
        ],
        (Family::E, 8) => &[
            ("A5xA2xA1", &[0, 1, 2, 3, 4, 6, 7, 8]),
            ("A7xA1", &[0, 1, 2, 3, 4, 5, 6, 8]),
        ],
        _ => &[],
    }
}

/// Root lists of named elliptic diagrams built from the extended Dynkin diagram, plus `D4`
/// in `F4` (the simple system of the long roots).
pub fn named_root_lists(rs: &RootSystem) -> Vec<(String, Vec<Root>)> {
    let mut out: Vec<(String, Vec<Root>)> = named_node_lists(rs.ty())
        .iter()
        .map(|(name, nodes)| {
            let roots = nodes
                .iter()
                .map(|&i| {
                    if i == 0 {
                        rs.highest_root().neg()
                    } else {
                        rs.simple_root(i).clone()
                    }
                })
                .collect();
            (name.to_string(), roots)
        })
        .collect();
    if rs.ty().family() == Family::F {
        out.push(("D4".to_string(), long_simple_system(rs)));
    }
    out
}

/// Positive long roots that are not sums of two positive long roots.
fn long_simple_system(rs: &RootSystem) -> Vec<Root> {
    let longs: Vec<&Root> = rs.positive_roots().iter().filter(|r| r.is_long()).collect();
    longs
        .iter()
        .filter(|r| {
            !longs.iter().any(|a| {
                let diff: Vec<i32> = r
                    .coords()
                    .iter()
                    .zip(a.coords())
                    .map(|(x, y)| x - y)
                    .collect();
                longs.iter().any(|b| b.coords() == diff.as_slice())
            })
        })
        .map(|r| (*r).clone())
        .collect()
}

/// Sorted list of components of a class name, so that `A1xA3^2`, `A₃²×A₁` and `2A3+A1` compare equal.
pub fn normalize_name(name: &str, family: Option<Family>) -> Vec<String> {
    let mut s = String::new();
    for c in name.chars() {
        match c {
            '₀'..='₉' => s.push(char::from_digit(c as u32 - '₀' as u32, 10).unwrap()),
            '⁰' => s.push_str("^0"),
            '¹' => s.push_str("^1"),
            '²' => s.push_str("^2"),
            '³' => s.push_str("^3"),
            '⁴'..='⁹' => {
                s.push('^');
                s.push(char::from_digit(c as u32 - '⁴' as u32 + 4, 10).unwrap())
            }
            'Ã' => s.push_str("A~"),
            '\u{303}' => s.push('~'),
            '×' | '*' | '+' | ',' => s.push('x'),
            '_' | '{' | '}' | ' ' | '$' | '\\' => {}
            _ => s.push(c),
        }
    }
    let s = s
        .replace("widetilde", "~")
        .replace("tilde", "~")
        .replace("times", "x");
    let mut out = Vec::new();
    for token in s.split(['x', 'X']).filter(|t| !t.is_empty()) {
        for mut comp in expand_token(token) {
            if let Some(first) = comp.get(..1) {
                comp = first.to_ascii_uppercase() + &comp[1..];
            }
            // the tilde may precede or follow the letter
            if let Some(rest) = comp.strip_prefix('~') {
                comp = format!("{}~{}", &rest[..1], &rest[1..]);
            }
            comp = match (family, comp.as_str()) {
                (Some(Family::B), "A~1") => "B1".to_string(),
                (Some(Family::C), "C1") => "A1".to_string(),
                _ => comp,
            };
            out.push(comp);
        }
    }
    out.sort();
    out
}

pub fn same_name(a: &str, b: &str, family: Option<Family>) -> bool {
    normalize_name(a, family) == normalize_name(b, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn cp(parts: &[usize]) -> CharPoly {
        CharPoly::from_poly(
            parts
                .iter()
                .fold(IntPoly::one(), |acc, &k| acc.mul(&IntPoly::binomial(k, 1))),
        )
    }

    #[test]
    fn partitions_round_trip() {
        for parts in [
            vec![3, 3, 1],
            vec![6, 1],
            vec![1, 1, 1, 1],
            vec![4, 2],
            vec![5, 3, 2, 2],
        ] {
            assert_eq!(partition_from_char_poly(&cp(&parts)), Some(parts));
        }
        let phi3 = CharPoly::from_poly(crate::poly::cyclotomic(3));
        assert_eq!(partition_from_char_poly(&phi3), None);
    }

    #[test]
    fn classical_names() {
        assert_eq!(b_class_name(&[3, 3, 1]), "B3^2xB1");
        assert_eq!(c_class_name(&[2, 1]), "C2xA1");
        assert_eq!(c_class_name(&[4, 2]), "C4xC2");
        assert_eq!(c_class_name(&[1, 1, 1]), "A1^3");
        assert_eq!(d_class_name(&[3, 1]), "D4");
        assert_eq!(d_class_name(&[2, 2]), "D4(a1)");
        assert_eq!(d_class_name(&[1, 1, 1, 1]), "A1^4");
        assert_eq!(d_class_name(&[3, 1, 1, 1]), "D4xA1^2");
        assert_eq!(d_class_name(&[2, 1, 1, 1]), "A3xA1^2");
    }

    #[test]
    fn normalization() {
        assert!(same_name("A1xA3^2", "A₃²×A₁", None));
        assert!(same_name("2A3+A1", "A3^2xA1", None));
        assert!(same_name("C2xC4", "C₄×C₂", None));
        assert!(same_name("A3xÃ1", "A3xA~1", None));
        assert!(same_name("A1xA5", "A₅×A₁", None));
        assert!(same_name("E7(a2)", "E₇(a₂)", None));
        assert!(same_name("A~1^3", "B1^3", Some(Family::B)));
        assert!(!same_name("A3xA1", "A3xA~1", None));
    }

    #[test]
    fn join_orders_by_rank() {
        let s = join_components(vec!["A1".into(), "A3".into(), "A3".into()]);
        assert_eq!(s, "A3^2xA1");
        assert_eq!(join_components(vec!["A~2".into(), "A2".into()]), "A2xA~2");
    }

    #[test]
    fn f4_long_simple_system_is_d4() {
        let rs = RootSystem::from_type_str("F4").unwrap();
        let roots = long_simple_system(&rs);
        assert_eq!(roots.len(), 4);
        let d = super::super::CarterDiagram::new(&rs, roots).unwrap();
        assert_eq!(d.name(), "D4");
    }
}
