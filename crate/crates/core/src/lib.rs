//! Circular CNOT circuits and their cut-induced linear circuits.
//!
//! The crate models CNOT-only circuits whose wires are closed loops, derives
//! the stabiliser maps of the linear circuits obtained by cutting them through
//! parity systems over GF(2), and builds, strips and fault-injects ICM
//! (initialisation, CNOT, measurement) circuits. Independent Pauli and
//! statevector oracles live in [`oracle`].

pub mod circuit;
pub mod circularize;
pub mod cuts;
pub mod derive;
pub mod dot;
pub mod error;
pub mod gf2;
pub mod icm;
pub mod model;
pub mod oracle;
pub mod parity;
pub mod parse;
pub mod stabmap;

pub use circuit::{CircularCircuit, CnotGate, Gap, LinearCircuit, WireId};
pub use circularize::{circularize, cyclic_equal, JoinRecord};
pub use cuts::{enumerate_cut_points, linearize, validate_cut_set, CutPoint, CutSet, Direction};
pub use derive::{check_commutation_invariance, derive_transformations, search_cuts};
pub use error::{Error, Result};
pub use icm::{configure, gadget, inject_smgf, strip_and_circularize, translate_to_icm, ICMCircuit};
pub use model::{build_combined_model, build_model, BooleanModel, ModelKind};
pub use oracle::{oracle_map, propagate_pauli, PauliString};
pub use parity::{to_parity_system, ParitySystem};
pub use stabmap::StabiliserMap;
