//! Independent realizations of the groups used to cross-check the Tits model.

pub mod chevalley;
pub mod classical;
pub mod clifford;
pub mod matrix;

pub use chevalley::{
    adjoint_spin_check, check_tits_model, verify_relations, AdjointGroup, ChevalleyAlgebra,
    RelationReport, StructureConstants,
};
pub use classical::{classical_spin_check, ClassicalGroup, Realization};
pub use clifford::SpinGroup;
