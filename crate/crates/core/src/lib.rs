//! SLOCC invariants and semi-invariants of four-qubit pure states.
//!
//! Start with the runnable programs in `examples/`; each one walks through a
//! single capability of the crate.

pub mod error;
pub mod exact;
pub mod invariants;
pub mod ket;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod count;
pub mod nqubit;
pub mod oracle;
pub mod scalar;
pub mod state;
pub mod verify;

pub use error::{Error, Result};
pub use exact::GaussianRational;
pub use invariants::InvariantVector;
pub use scalar::Scalar;
pub use state::{apply_local, make_state, permute_qubits, ExactState, LocalOperation, LocalOperator, PureState, State};
