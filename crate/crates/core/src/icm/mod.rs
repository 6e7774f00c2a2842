//! ICM circuits: qubit initialisations, CNOT gates and measurements.
//!
//! An [`ICMCircuit`] is a [`LinearCircuit`] plus one [`QubitConfig`] per
//! qubit. Gadgets, the Clifford+T translation, stripping back to circular
//! form and missing-gate fault injection build on it.

mod fault;
mod gadgets;
mod translate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circuit::LinearCircuit;
use crate::circularize::{circularize, CircularizeError, JoinRecord};
use crate::circuit::CircularCircuit;
use crate::error::{Error, Result};
use crate::oracle::statevector::{states, Qubit};
use crate::oracle::Pauli;

pub use fault::{inject_smgf, FaultPatch, FaultSpec};
pub use gadgets::{gadget, GadgetKind};
pub use translate::{simulate_translation, translate_to_icm, GateKind, Program, ProgramGate, Translation};

/// A single-qubit measurement or preparation basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    X,
    Y,
    Z,
    A,
}

impl Basis {
    /// Eigenstate reported by outcome `0` or `1`.
    pub fn eigenstate(self, outcome: u8) -> Qubit {
        match (self, outcome) {
            (Basis::Z, 0) => states::zero(),
            (Basis::Z, _) => states::one(),
            (Basis::X, 0) => states::plus(),
            (Basis::X, _) => states::minus(),
            (Basis::Y, 0) => states::y_plus(),
            (Basis::Y, _) => states::y_minus(),
            (Basis::A, 0) => states::a_plus(),
            (Basis::A, _) => states::a_minus(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Basis::X => "x",
            Basis::Y => "y",
            Basis::Z => "z",
            Basis::A => "a",
        }
    }

    pub fn parse(s: &str) -> Option<Basis> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Some(Basis::X),
            "y" => Some(Basis::Y),
            "z" => Some(Basis::Z),
            "a" => Some(Basis::A),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InitBasis {
    Zero,
    Plus,
    Y,
    A,
    /// A caller-supplied state bound by name.
    Input(String),
}

impl InitBasis {
    pub fn is_concrete(&self) -> bool {
        !matches!(self, InitBasis::Input(_))
    }

    pub fn state(&self) -> Option<Qubit> {
        match self {
            InitBasis::Zero => Some(states::zero()),
            InitBasis::Plus => Some(states::plus()),
            InitBasis::Y => Some(states::y_plus()),
            InitBasis::A => Some(states::a_plus()),
            InitBasis::Input(_) => None,
        }
    }
}

impl fmt::Display for InitBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitBasis::Zero => f.write_str("zero"),
            InitBasis::Plus => f.write_str("plus"),
            InitBasis::Y => f.write_str("y"),
            InitBasis::A => f.write_str("a"),
            InitBasis::Input(name) => write!(f, "in:{name}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeasBasis {
    X,
    Y,
    Z,
    A,
    /// Two selectable bases; the first is the one simulated.
    Configurable(Basis, Basis),
    None,
}

impl MeasBasis {
    pub fn primary(self) -> Option<Basis> {
        match self {
            MeasBasis::X => Some(Basis::X),
            MeasBasis::Y => Some(Basis::Y),
            MeasBasis::Z => Some(Basis::Z),
            MeasBasis::A => Some(Basis::A),
            MeasBasis::Configurable(b, _) => Some(b),
            MeasBasis::None => None,
        }
    }

    pub fn is_measured(self) -> bool {
        self != MeasBasis::None
    }
}

impl From<Basis> for MeasBasis {
    fn from(b: Basis) -> Self {
        match b {
            Basis::X => MeasBasis::X,
            Basis::Y => MeasBasis::Y,
            Basis::Z => MeasBasis::Z,
            Basis::A => MeasBasis::A,
        }
    }
}

impl fmt::Display for MeasBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasBasis::Configurable(a, b) => write!(f, "cfg:{}/{}", a.name(), b.name()),
            MeasBasis::None => f.write_str("none"),
            other => f.write_str(other.primary().unwrap().name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Input,
    Output,
    Ancilla,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QubitConfig {
    pub role: Role,
    pub init: InitBasis,
    pub meas: MeasBasis,
}

impl QubitConfig {
    pub fn input(name: impl Into<String>, meas: MeasBasis) -> Self {
        QubitConfig { role: Role::Input, init: InitBasis::Input(name.into()), meas }
    }

    pub fn output(init: InitBasis) -> Self {
        QubitConfig { role: Role::Output, init, meas: MeasBasis::None }
    }

    pub fn ancilla(init: InitBasis, meas: MeasBasis) -> Self {
        QubitConfig { role: Role::Ancilla, init, meas }
    }

    /// Role implied by the bases alone.
    pub fn inferred(init: InitBasis, meas: MeasBasis) -> Self {
        let role = match (&init, meas) {
            (InitBasis::Input(_), _) => Role::Input,
            (_, MeasBasis::None) => Role::Output,
            _ => Role::Ancilla,
        };
        QubitConfig { role, init, meas }
    }

    fn check(&self, qubit: usize) -> Result<()> {
        let bad = |reason: &str| Err(Error::InvalidAncillaConfig { qubit, reason: reason.to_string() });
        match self.role {
            Role::Input if self.init.is_concrete() => bad("input qubit needs a symbolic initialisation"),
            Role::Output | Role::Ancilla if !self.init.is_concrete() => bad("ancilla needs a concrete initialisation"),
            Role::Output if self.meas.is_measured() => bad("output-carrying ancilla cannot be measured"),
            Role::Ancilla if !self.meas.is_measured() => bad("ancilla must be measured unless it carries an output"),
            _ => Ok(()),
        }
    }
}

/// Pauli frame bookkeeping for a measurement whose nominal outcome is not 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Correction {
    pub measured: usize,
    pub nominal: u8,
    pub pauli: Pauli,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ICMCircuit {
    circuit: LinearCircuit,
    configs: Vec<QubitConfig>,
    corrections: Vec<Correction>,
}

/// Attaches one configuration per qubit of `l`.
pub fn configure(l: &LinearCircuit, configs: Vec<QubitConfig>) -> Result<ICMCircuit> {
    if configs.len() != l.qubit_count() {
        return Err(Error::CountMismatch { expected: l.qubit_count(), found: configs.len() });
    }
    for (q, cfg) in configs.iter().enumerate() {
        cfg.check(q)?;
    }
    Ok(ICMCircuit { circuit: l.clone(), configs, corrections: Vec::new() })
}

impl ICMCircuit {
    pub fn circuit(&self) -> &LinearCircuit {
        &self.circuit
    }

    pub fn configs(&self) -> &[QubitConfig] {
        &self.configs
    }

    pub fn corrections(&self) -> &[Correction] {
        &self.corrections
    }

    pub fn qubit_count(&self) -> usize {
        self.circuit.qubit_count()
    }

    pub fn with_corrections(mut self, corrections: Vec<Correction>) -> Self {
        self.corrections = corrections;
        self
    }

    pub fn measured_qubits(&self) -> Vec<usize> {
        (0..self.qubit_count()).filter(|&q| self.configs[q].meas.is_measured()).collect()
    }

    /// Outcome assumed for every measured qubit, in ascending qubit order.
    pub fn nominal_outcomes(&self) -> Vec<u8> {
        self.measured_qubits()
            .into_iter()
            .map(|q| self.corrections.iter().find(|c| c.measured == q).map_or(0, |c| c.nominal))
            .collect()
    }

    /// Qubits left unmeasured, in ascending order.
    pub fn output_qubits(&self) -> Vec<usize> {
        (0..self.qubit_count()).filter(|&q| !self.configs[q].meas.is_measured()).collect()
    }
}

/// Drops initialisations and measurements and circularizes the CNOT skeleton.
pub fn strip_and_circularize(icm: &ICMCircuit) -> std::result::Result<(CircularCircuit, JoinRecord), CircularizeError> {
    circularize(icm.circuit())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn role_checks() {
        let l = LinearCircuit::new(2, &[(1, 0)]).unwrap();
        let ok = vec![QubitConfig::input("in0", MeasBasis::Z), QubitConfig::output(InitBasis::Plus)];
        assert!(configure(&l, ok).is_ok());
        assert_eq!(configure(&l, vec![]).unwrap_err().code(), "CountMismatch");
        let unmeasured = vec![QubitConfig::input("in0", MeasBasis::Z), QubitConfig::ancilla(InitBasis::Plus, MeasBasis::None)];
        assert_eq!(configure(&l, unmeasured).unwrap_err().code(), "InvalidAncillaConfig");
        let symbolic = vec![QubitConfig::input("in0", MeasBasis::Z), QubitConfig::output(InitBasis::Input("x".into()))];
        assert_eq!(configure(&l, symbolic).unwrap_err().code(), "InvalidAncillaConfig");
    }

    #[test]
    fn basis_names() {
        assert_eq!(MeasBasis::Configurable(Basis::Z, Basis::X).to_string(), "cfg:z/x");
        assert_eq!(InitBasis::Input("phi".into()).to_string(), "in:phi");
        assert_eq!(MeasBasis::A.to_string(), "a");
    }
}
