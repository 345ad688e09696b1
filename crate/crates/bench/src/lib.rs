//! Fixtures shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylspin::{RootSystemType, WeylElement};

/// `n` elliptic elements of `W(ty)` drawn from a fixed seed.
pub fn elliptic_elements(ty: RootSystemType, n: usize, seed: u64) -> Vec<WeylElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let w = WeylElement::random_with(ty, &mut rng);
        if w.is_elliptic() {
            out.push(w);
        }
    }
    out
}

pub fn ty(s: &str) -> RootSystemType {
    s.parse().expect("benchmark type names are valid")
}
