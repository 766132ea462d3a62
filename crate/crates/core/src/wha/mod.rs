//! Weak Hopf algebras by structure constants: axiom checks, counital maps
//! and subalgebras, derived identities and the dual.

mod counital;
mod dual;
mod identities;
mod morphism;
mod presentation;
mod verify;

pub use counital::{counital_data, source_counital_matrix, target_counital_matrix, CounitalData};
pub(crate) use counital::{into_error, require};
pub use dual::{classify_ordinary_hopf, dualize, transpose_structure, HopfClassification};
pub use identities::{separability_element, verify_antipode_properties, verify_counital_identities};
pub use morphism::verify_algebra_map;
pub use presentation::{AlgebraPresentation, CoalgebraPresentation, WeakHopfPresentation};
pub use verify::verify_weak_hopf;
