use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylspin::{
    spin, spin_signature, RootSystem, RootSystemType, TitsElement, TorusVector, WeylElement,
};

const TYPES: &[&str] = &["A4", "B4", "C5", "D5", "D6", "G2", "F4", "E6", "E7", "E8"];

fn ty(i: usize) -> RootSystemType {
    TYPES[i % TYPES.len()].parse().unwrap()
}

fn elliptic(ty: RootSystemType, rng: &mut ChaCha8Rng) -> WeylElement {
    loop {
        let w = WeylElement::random_with(ty, rng);
        if w.is_elliptic() {
            return w;
        }
    }
}

fn word(ty: RootSystemType, rng: &mut ChaCha8Rng, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(1..=ty.rank())).collect()
}

fn random_torus(ty: RootSystemType, rng: &mut ChaCha8Rng) -> TorusVector {
    TorusVector::from_bits(ty.rank(), rng.gen_range(0..1u16 << ty.rank()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_multiply_like_concatenation(t in 0..TYPES.len(), seed in any::<u64>(), a in 0usize..40, b in 0usize..40) {
        let ty = ty(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = word(ty, &mut rng, a);
        let v = word(ty, &mut rng, b);
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let product = TitsElement::from_word(ty, &u).unwrap().mul(&TitsElement::from_word(ty, &v).unwrap()).unwrap();
        prop_assert_eq!(product, TitsElement::from_word(ty, &uv).unwrap());
        prop_assert_eq!(product.w(), WeylElement::from_word(ty, &uv).unwrap());
    }

    #[test]
    fn tits_multiplication_is_associative(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ty = ty(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = || TitsElement::new(WeylElement::random_with(ty, &mut rng), TorusVector::zero(ty.rank())).unwrap();
        let (x, y, z) = (g(), g(), g());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert!(x.mul(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn signature_ignores_torus_part(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ty = ty(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = elliptic(ty, &mut rng);
        let sig = spin_signature(&w).unwrap();
        let g = TitsElement::new(w, random_torus(ty, &mut rng)).unwrap();
        let d = u64::from(w.order());
        prop_assert_eq!(g.pow(d), TitsElement::torus(ty, sig).unwrap());
        prop_assert_eq!(g.pow(d), g.pow_linear(d));
        prop_assert!(g.order_of() == d || g.order_of() == 2 * d);
    }

    #[test]
    fn signature_is_a_class_function(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ty = ty(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = elliptic(ty, &mut rng);
        let u = WeylElement::random_with(ty, &mut rng);
        let v = w.conjugate_by(&u).unwrap();
        prop_assert_eq!(v.char_poly(), w.char_poly());
        // g^d need not be central; conjugating g by m_u moves it by u.
        let mu = TitsElement::lift(u);
        let moved = mu.mul(&TitsElement::torus(ty, spin_signature(&w).unwrap()).unwrap()).unwrap().mul(&mu.inverse()).unwrap();
        prop_assert_eq!(TitsElement::torus(ty, spin_signature(&v).unwrap()).unwrap(), moved);
        let rs = RootSystem::build(ty);
        for lattice in rs.lattices() {
            prop_assert_eq!(spin(&v, &lattice).unwrap(), spin(&w, &lattice).unwrap());
        }
    }

    #[test]
    fn signature_of_a_power_is_the_power_of_the_lift(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ty = ty(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = elliptic(ty, &mut rng);
        let d = w.order();
        for k in 1..d {
            if gcd(k, d) == 1 {
                let wk = w.pow(u64::from(k));
                prop_assert!(wk.is_elliptic());
                // g^k lifts w^k, and (g^k)^d = (g^d)^k.
                let lifted = TitsElement::lift(w).pow(u64::from(k));
                prop_assert_eq!(lifted.pow(u64::from(d)).t(), TitsElement::lift(w).pow(u64::from(d) * u64::from(k)).t());
                prop_assert_eq!(spin_signature(&wk).unwrap(), lifted.pow(u64::from(d)).t());
            }
        }
    }

    #[test]
    fn lengths_and_determinants_agree(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ty = ty(t);
        let rs = RootSystem::build(ty);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = WeylElement::random_with(ty, &mut rng);
        let rw = w.reduced_word();
        prop_assert_eq!(rw.len(), w.length());
        prop_assert_eq!(rs.inversions(&w), w.length());
        prop_assert_eq!(w.det(), if w.length().is_multiple_of(2) { 1 } else { -1 });
        prop_assert_eq!(WeylElement::from_word(ty, &rw.letters).unwrap(), w);
        prop_assert_eq!(TitsElement::from_word(ty, &rw.letters).unwrap(), TitsElement::lift(w));
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
