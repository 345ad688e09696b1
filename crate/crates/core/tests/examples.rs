use weylspin::carter::{b_partition_diagram, c_partition_diagram};
use weylspin::poly::parse_factored;
use weylspin::{
    enumerate_elliptic_classes, predict_signature, spin, spin_signature, Budget, CarterDiagram,
    ClassRecord, IntPoly, RootSystem, Spin, Strategy, TitsElement, TorusVector, WeylElement,
};

fn rs(name: &str) -> RootSystem {
    RootSystem::from_type_str(name).unwrap()
}

fn poly(s: &str) -> IntPoly {
    parse_factored(s).unwrap()
}

fn h(rank: usize, indices: &[usize]) -> TorusVector {
    TorusVector::from_indices(rank, indices)
}

fn classes(name: &str) -> Vec<ClassRecord> {
    let rs = rs(name);
    enumerate_elliptic_classes(rs.ty(), Strategy::Auto, &Budget::default(), 0).unwrap()
}

fn class<'a>(records: &'a [ClassRecord], name: &str) -> &'a ClassRecord {
    records
        .iter()
        .find(|r| r.matches_name(name))
        .unwrap_or_else(|| panic!("no class {name}"))
}

#[test]
fn root_counts() {
    assert_eq!(rs("A1").roots().len(), 2);
    assert_eq!(rs("B3").roots().len(), 18);
    assert_eq!(rs("B3").num_positive(), 9);
    let g2 = rs("G2");
    assert_eq!(g2.roots().len(), 12);
    assert_eq!(g2.roots().iter().filter(|r| r.is_long()).count(), 6);
}

#[test]
fn coroots_of_negative_highest_roots() {
    let e7 = rs("E7");
    assert_eq!(
        e7.coroot(&e7.highest_root().neg()).unwrap(),
        vec![-1, -2, -3, -4, -2, -3, -2]
    );
    let c5 = rs("C5");
    assert_eq!(c5.coroot(&c5.highest_root().neg()).unwrap(), vec![-1; 5]);
    for (name, labels) in [
        ("E6", &[1, 3, 6][..]),
        ("E7", &[1, 3, 6]),
        ("E8", &[2, 4, 6]),
        ("F4", &[2, 4]),
        ("C4", &[1, 2, 3, 4]),
    ] {
        let r = rs(name);
        assert_eq!(
            r.coroot_mod2(&r.highest_root().neg()).unwrap(),
            h(r.rank(), labels),
            "{name}"
        );
    }
    let b6 = rs("B6");
    assert_eq!(
        b6.coroot_mod2(&b6.highest_short_root().neg()).unwrap(),
        h(6, &[6])
    );
}

#[test]
fn root_chains() {
    let d4 = rs("D4");
    let a1 = d4.simple_root(1);
    let a3 = d4.simple_root(3);
    assert_eq!(d4.root_chain(a1, a3).unwrap(), (0, 0));
    let a2 = d4.simple_root(2);
    let (p, q) = d4.root_chain(a1, a2).unwrap();
    assert_eq!(p + q, 1);
    assert!(d4.root_chain(a1, a1).is_err());
    // two orthogonal short roots of B3: e1 and e2 in orthonormal coordinates
    let b3 = rs("B3");
    let e2 = b3.root(&[0, 1, 1]).unwrap();
    let e3 = b3.root(&[0, 0, 1]).unwrap();
    assert_eq!(b3.inner(e2.coords(), e3.coords()), 0);
    assert_eq!(b3.root_chain(e3, e2).unwrap(), (1, 1));
}

#[test]
fn central_involutions() {
    assert_eq!(rs("B5").center_two_torsion(), vec![h(5, &[5])]);
    assert!(rs("E6").center_two_torsion().is_empty());
    assert_eq!(rs("E7").center_two_torsion(), vec![h(7, &[1, 3, 5])]);
}

#[test]
fn lattice_reduction() {
    let b4 = rs("B4");
    assert!(b4.adjoint_lattice().reduces_trivially(h(4, &[4])).unwrap());
    assert!(!b4
        .universal_lattice()
        .reduces_trivially(h(4, &[4]))
        .unwrap());
    let e7 = rs("E7");
    assert!(!e7
        .universal_lattice()
        .reduces_trivially(h(7, &[1, 3, 5]))
        .unwrap());
    assert!(e7
        .adjoint_lattice()
        .reduces_trivially(h(7, &[1, 3, 5]))
        .unwrap());
}

#[test]
fn weyl_elements() {
    let a2 = rs("A2").ty();
    assert_eq!(WeylElement::from_word(a2, &[1, 2]).unwrap().order(), 3);
    assert!(WeylElement::minus_identity(a2).is_none());
    assert_eq!(WeylElement::longest(a2).reduced_word().len(), 3);
    assert_eq!(WeylElement::coxeter(rs("B2").ty()).order(), 4);
    let g2 = WeylElement::coxeter(rs("G2").ty());
    assert_eq!(g2.order(), 6);
    assert_eq!(g2.elliptic_powers().unwrap(), vec![1, 2, 3, 4, 5]);
    assert_eq!(
        WeylElement::coxeter(rs("B6").ty()).char_poly().poly(),
        &poly("(t^6+1)")
    );
    assert_eq!(
        WeylElement::coxeter(rs("D6").ty()).char_poly().poly(),
        &poly("(t^5+1)(t+1)")
    );
    let e7 = WeylElement::coxeter(rs("E7").ty());
    assert!(e7.is_linked_to_minus_identity().unwrap());
    assert!(e7.pow(9).is_minus_identity());
    assert!(!WeylElement::simple_reflection(rs("A3").ty(), 1)
        .unwrap()
        .is_elliptic());
}

#[test]
fn tits_lifts() {
    let a3 = rs("A3").ty();
    let g = TitsElement::from_word(a3, &[1, 2, 3]).unwrap();
    assert_eq!(g.pow(4), TitsElement::torus(a3, h(3, &[1, 3])).unwrap());
    let m1 = TitsElement::from_word(a3, &[1]).unwrap();
    assert_eq!(
        m1.mul(&m1).unwrap(),
        TitsElement::torus(a3, h(3, &[1])).unwrap()
    );
    assert_eq!(m1.order_of(), 4);
    assert_eq!(
        TitsElement::from_word(rs("A2").ty(), &[1, 2])
            .unwrap()
            .order_of(),
        3
    );
    // both reduced words of the longest element of A2
    let a2 = rs("A2").ty();
    assert_eq!(
        TitsElement::from_word(a2, &[1, 2, 1]).unwrap(),
        TitsElement::from_word(a2, &[2, 1, 2]).unwrap()
    );
}

#[test]
fn signatures_of_minus_identity() {
    for n in 2usize..=9 {
        let b = rs(&format!("B{n}"));
        let k = n.div_ceil(2);
        let expected = if k % 2 == 1 { h(n, &[n]) } else { h(n, &[]) };
        assert_eq!(
            spin_signature(&WeylElement::minus_identity(b.ty()).unwrap()).unwrap(),
            expected,
            "B{n}"
        );
        let c = rs(&format!("C{n}"));
        let odd: Vec<usize> = (1..=2 * ((n - 1) / 2) + 1).step_by(2).collect();
        assert_eq!(
            spin_signature(&WeylElement::minus_identity(c.ty()).unwrap()).unwrap(),
            h(n, &odd),
            "C{n}"
        );
    }
    let e7 = rs("E7").ty();
    assert_eq!(
        spin_signature(&WeylElement::minus_identity(e7).unwrap()).unwrap(),
        h(7, &[1, 3, 5])
    );
}

#[test]
fn coxeter_spins_in_type_a() {
    for n in 2..=9 {
        let a = rs(&format!("A{}", n - 1));
        let w = WeylElement::coxeter(a.ty());
        let expected = if n % 2 == 0 { Spin::Minus } else { Spin::Plus };
        assert_eq!(
            spin(&w, &a.universal_lattice()).unwrap(),
            expected,
            "A{}",
            n - 1
        );
    }
}

#[test]
fn b_and_c_partition_diagrams() {
    let b7 = rs("B7");
    let d = b_partition_diagram(&b7, &[3, 3, 1]).unwrap();
    assert_eq!(d.element(&b7).char_poly().poly(), &poly("(t^3+1)^2(t+1)"));
    assert_eq!(predict_signature(&b7, &d).unwrap(), h(7, &[]));
    assert_eq!(spin_signature(&d.element(&b7)).unwrap(), h(7, &[]));
    let d = b_partition_diagram(&b7, &[6, 1]).unwrap();
    assert_eq!(predict_signature(&b7, &d).unwrap(), h(7, &[7]));
    assert_eq!(spin_signature(&d.element(&b7)).unwrap(), h(7, &[7]));

    let c6 = rs("C6");
    let d = c_partition_diagram(&c6, &[2, 4]).unwrap();
    assert_eq!(predict_signature(&c6, &d).unwrap(), h(6, &[3, 5]));
    assert_eq!(spin_signature(&d.element(&c6)).unwrap(), h(6, &[3, 5]));
    assert!(!d.element(&c6).is_linked_to_minus_identity().unwrap());
    assert_eq!(d.relevant_components(&c6).len(), 1);
    let c8 = rs("C8");
    let d = c_partition_diagram(&c8, &[2, 6]).unwrap();
    assert_eq!(predict_signature(&c8, &d).unwrap(), h(8, &[1, 3, 5, 7]));
    assert_eq!(
        spin_signature(&d.element(&c8)).unwrap(),
        h(8, &[1, 3, 5, 7])
    );
}

#[test]
fn diagrams_of_simple_and_orthogonal_roots() {
    let e6 = rs("E6");
    let simple = CarterDiagram::simple(&e6);
    assert_eq!(simple.element(&e6), WeylElement::coxeter(e6.ty()));
    let d4 = rs("D4");
    let orthogonal = CarterDiagram::from_coords(
        &d4,
        &[
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 2, 1, 1],
        ],
    )
    .unwrap();
    assert!(orthogonal.element(&d4).is_minus_identity());
    let single = CarterDiagram::from_coords(&d4, &[vec![1, 0, 0, 0]]).unwrap();
    assert!(!single.element(&d4).is_elliptic());
}

#[test]
fn exceptional_class_tables() {
    let f4 = classes("F4");
    assert_eq!(f4.len(), 9);
    let c = class(&f4, "A3xÃ1");
    assert_eq!(c.signature, "h4");
    assert_eq!(
        (c.adjoint_spin, c.universal_spin),
        (Spin::Minus, Spin::Minus)
    );
    assert_eq!(
        f4.iter().filter(|r| r.adjoint_spin == Spin::Minus).count(),
        1
    );

    let e6 = classes("E6");
    assert_eq!(e6.len(), 5);
    assert_eq!(class(&e6, "A1xA5").signature, "1");
    assert!(e6.iter().all(|r| r.universal_spin == Spin::Plus));

    let e7 = classes("E7");
    assert_eq!(e7.len(), 12);
    let plus: Vec<&str> = e7
        .iter()
        .filter(|r| r.universal_spin == Spin::Plus)
        .map(|r| r.name.as_str())
        .collect();
    assert_eq!(plus.len(), 3, "{plus:?}");
    for name in ["A7", "E7(a2)", "A1xA3^2"] {
        assert_eq!(class(&e7, name).universal_spin, Spin::Plus, "{name}");
    }

    let g2 = classes("G2");
    assert!(g2
        .iter()
        .all(|r| r.universal_spin == Spin::Plus && r.adjoint_spin == Spin::Plus));
}
