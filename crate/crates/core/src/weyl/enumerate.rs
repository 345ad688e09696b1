//! Exhaustive enumeration of the elliptic conjugacy classes of a Weyl group.
//!
//! Elements are generated layer by layer in length order from the orbit of `2 rho`;
//! `w(2 rho)` identifies `w`. Elliptic elements are kept and merged into classes with a
//! union-find over conjugation by simple reflections.

use std::collections::HashMap;

use super::{WeylElement, S};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, RootSystemType};

type Key = [i16; S];

/// One elliptic conjugacy class: a representative of minimal length and the class size.
#[derive(Clone, Debug)]
pub struct EllipticClass {
    pub representative: WeylElement,
    pub size: u64,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index (shorter element) as the root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// The elliptic classes of a Weyl group together with a lookup from elliptic elements to classes.
pub struct ExhaustiveClasses {
    pub classes: Vec<EllipticClass>,
    rho2: Key,
    class_of_key: HashMap<Key, u32>,
}

impl ExhaustiveClasses {
    /// Position in `classes` of the class containing `w`, or `None` if `w` is not elliptic.
    pub fn class_of(&self, w: &WeylElement) -> Option<usize> {
        let mut key: Key = [0; S];
        let v = w.act(
            &self.rho2[..w.rank()]
                .iter()
                .map(|&x| x as i32)
                .collect::<Vec<_>>(),
        );
        for (k, x) in v.into_iter().enumerate() {
            key[k] = x as i16;
        }
        self.class_of_key.get(&key).map(|&c| c as usize)
    }
}

/// Enumerates all of `W(ty)` and returns its elliptic classes in order of the length of
/// their shortest elements. Fails with a budget error if `|W|` exceeds `max_elements`.
pub fn elliptic_classes_exhaustive(
    ty: RootSystemType,
    max_elements: u64,
) -> Result<ExhaustiveClasses> {
    let order = ty.weyl_group_order();
    if order > max_elements as u128 {
        return Err(Error::Budget {
            what: format!("|W({ty})| = {order} exceeds the element cap {max_elements}"),
            completed: 0,
        });
    }
    let n = ty.rank();
    let cartan = ty.cartan_array();
    let rs = RootSystem::build(ty);
    let mut rho2: Key = [0; S];
    for r in rs.positive_roots() {
        for (k, c) in r.coords().iter().enumerate() {
            rho2[k] += *c as i16;
        }
    }
    let pairing = |v: &Key, i: usize| -> i32 { (0..n).map(|j| v[j] as i32 * cartan[j][i]).sum() };
    let reflect = |v: &Key, i: usize| -> Key {
        let mut out = *v;
        out[i] -= pairing(v, i) as i16;
        out
    };

    let mut ell_keys: Vec<Key> = Vec::new();
    let mut ell_mats: Vec<i8> = Vec::new();
    let mut ell_index: HashMap<Key, u32> = HashMap::new();
    let mut visited: u64 = 0;

    let mut layer: Vec<(Key, WeylElement)> = vec![(rho2, WeylElement::identity(ty))];
    while !layer.is_empty() {
        let mut next: HashMap<Key, WeylElement> = HashMap::new();
        for (key, w) in &layer {
            visited += 1;
            if w.is_elliptic() {
                ell_index.insert(*key, ell_keys.len() as u32);
                ell_keys.push(*key);
                for r in 0..n {
                    for c in 0..n {
                        ell_mats.push(w.a[r * S + c] as i8);
                    }
                }
            }
            for i in 0..n {
                if pairing(key, i) > 0 {
                    let k2 = reflect(key, i);
                    next.entry(k2).or_insert_with(|| {
                        let mut w2 = *w;
                        w2.left_mul_simple(&cartan, i);
                        w2
                    });
                }
            }
        }
        let mut layer_vec: Vec<(Key, WeylElement)> = next.into_iter().collect();
        layer_vec.sort_unstable_by_key(|a| a.0);
        layer = layer_vec;
    }
    if visited as u128 != order {
        return Err(Error::invariant(format!(
            "enumerated {visited} elements of W({ty}), expected {order}"
        )));
    }

    let count = ell_keys.len();
    let mut uf = UnionFind {
        parent: (0..count as u32).collect(),
    };
    for idx in 0..count {
        let v = ell_keys[idx];
        let m = &ell_mats[idx * n * n..(idx + 1) * n * n];
        for i in 0..n {
            // s_i w s_i (2 rho) = s_i (w(2 rho) - 2 w(a_i))
            let mut shifted = v;
            for r in 0..n {
                shifted[r] -= 2 * m[r * n + i] as i16;
            }
            let conj = reflect(&shifted, i);
            let other = *ell_index
                .get(&conj)
                .ok_or_else(|| Error::invariant("conjugate of an elliptic element is missing"))?;
            uf.union(idx as u32, other);
        }
    }

    let mut sizes: HashMap<u32, u64> = HashMap::new();
    for idx in 0..count as u32 {
        *sizes.entry(uf.find(idx)).or_insert(0) += 1;
    }
    let mut roots: Vec<u32> = sizes.keys().copied().collect();
    roots.sort_unstable();
    let position: HashMap<u32, u32> = roots
        .iter()
        .enumerate()
        .map(|(k, &r)| (r, k as u32))
        .collect();
    let mut class_of_key = HashMap::with_capacity(count);
    for (idx, key) in ell_keys.iter().enumerate() {
        class_of_key.insert(*key, position[&uf.find(idx as u32)]);
    }
    let classes = roots
        .into_iter()
        .map(|root| {
            let m = &ell_mats[root as usize * n * n..(root as usize + 1) * n * n];
            let mut rep = WeylElement::identity(ty);
            for r in 0..n {
                for c in 0..n {
                    rep.a[r * S + c] = m[r * n + c] as i16;
                }
            }
            EllipticClass {
                representative: rep,
                size: sizes[&root],
            }
        })
        .collect();
    Ok(ExhaustiveClasses {
        classes,
        rho2,
        class_of_key,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(s: &str) -> Vec<EllipticClass> {
        elliptic_classes_exhaustive(s.parse().unwrap(), u64::MAX)
            .unwrap()
            .classes
    }

    #[test]
    fn class_lookup_is_conjugation_invariant() {
        let t = "B4".parse().unwrap();
        let all = elliptic_classes_exhaustive(t, u64::MAX).unwrap();
        for (k, c) in all.classes.iter().enumerate() {
            assert_eq!(all.class_of(&c.representative), Some(k));
            for seed in 0..5 {
                let u = WeylElement::random(t, seed);
                assert_eq!(
                    all.class_of(&c.representative.conjugate_by(&u).unwrap()),
                    Some(k)
                );
            }
        }
        assert_eq!(all.class_of(&WeylElement::identity(t)), None);
    }

    #[test]
    fn type_a_has_only_coxeter_class() {
        for s in ["A1", "A2", "A3", "A4", "A5"] {
            let c = classes(s);
            assert_eq!(c.len(), 1, "{s}");
            assert_eq!(
                c[0].representative.order() as usize,
                c[0].representative.rank() + 1
            );
        }
    }

    #[test]
    fn g2_and_f4_counts() {
        let g2 = classes("G2");
        assert_eq!(g2.len(), 3);
        assert_eq!(g2.iter().map(|c| c.size).sum::<u64>(), 5);
        assert_eq!(classes("F4").len(), 9);
    }

    #[test]
    fn b_counts_are_partition_counts() {
        // elliptic classes of W(B_n) <-> partitions of n
        assert_eq!(classes("B3").len(), 3);
        assert_eq!(classes("B4").len(), 5);
        assert_eq!(classes("C5").len(), 7);
        // D_n: partitions of n with an even number of parts
        assert_eq!(classes("D4").len(), 3);
        assert_eq!(classes("D5").len(), 3);
    }

    #[test]
    fn budget_is_enforced() {
        let err = elliptic_classes_exhaustive("E8".parse().unwrap(), 1_000_000)
            .err()
            .unwrap();
        assert!(matches!(err, Error::Budget { .. }));
    }
}
