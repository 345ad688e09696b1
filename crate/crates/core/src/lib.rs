#![allow(clippy::needless_range_loop)]

pub mod carter;
pub mod error;
pub mod oracles;
pub mod poly;
pub mod rootsystem;
pub mod tits;
pub mod torus;
pub mod verify;
pub mod weyl;

pub use carter::{
    enumerate_elliptic_classes, predict_signature, verify_final_chart, Budget, CarterDiagram,
    ClassRecord, Strategy,
};
pub use error::{Error, Result};
pub use poly::IntPoly;
pub use rootsystem::{
    CocharacterLattice, Family, LatticeKind, Root, RootSystem, RootSystemType, MAX_RANK,
};
pub use tits::{spin, spin_signature, Spin, SpinResult, SpinSignature, TitsElement};
pub use torus::TorusVector;
pub use weyl::{CharPoly, ReducedWord, WeylElement};
