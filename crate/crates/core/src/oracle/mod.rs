//! Verification oracles that share no code with the Boolean models: Pauli
//! propagation through CNOT lists and a small dense statevector simulator.

pub mod pauli;
pub mod statevector;

pub use pauli::{conjugate_cnot, equivalent_up_to_sign, oracle_map, propagate_pauli, Pauli, PauliString};
pub use statevector::{statevector_run, StateVector};
