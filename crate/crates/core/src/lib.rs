//! Exact computations with finite quantum groupoids (weak Hopf algebras).
//!
//! Everything is presented by structure constants over an exact field:
//!
//! * [`exactlin`]: rationals, prime fields, dense matrices, echelon forms,
//!   kernels and quotients.
//! * [`wha`]: algebra, coalgebra and weak Hopf presentations, exhaustive
//!   axiom checks, counital maps and subalgebras, the dual.
//! * [`groupoid`]: finite groupoids, `kG` and `(kG)*`.
//! * [`smash`]: module algebras, the two standard actions and the smash
//!   product over the relative tensor product `A ⊗_{H_t} H`.
//! * [`duality`]: the `H*`-action on `A#H`, the iterated smash product, the
//!   commutant `End(A#H)_A`, the mutually inverse maps between them and the
//!   trace-form radical.

pub mod duality;
pub mod error;
pub mod exactlin;
pub mod groupoid;
pub mod report;
pub mod smash;
pub mod wha;

pub use error::{Error, Result};
