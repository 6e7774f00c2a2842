use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{configure, Basis, Correction, ICMCircuit, InitBasis, MeasBasis, QubitConfig, Role};
use crate::circuit::LinearCircuit;
use crate::error::{Error, Result};
use crate::oracle::statevector::{gates, Matrix, Qubit, StateVector};
use crate::oracle::Pauli;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateKind {
    Cnot,
    T,
    Tdg,
    P,
    Pdg,
    V,
    H,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::Cnot => "cnot",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::P => "p",
            GateKind::Pdg => "pdg",
            GateKind::V => "v",
            GateKind::H => "h",
        }
    }

    pub fn arity(self) -> usize {
        if self == GateKind::Cnot {
            2
        } else {
            1
        }
    }

    pub fn matrix(self) -> Option<Matrix> {
        Some(match self {
            GateKind::Cnot => return None,
            GateKind::T => gates::t(),
            GateKind::Tdg => gates::tdg(),
            GateKind::P => gates::p(),
            GateKind::Pdg => gates::pdg(),
            GateKind::V => gates::v(),
            GateKind::H => gates::h(),
        })
    }
}

impl FromStr for GateKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "cnot" | "cx" => GateKind::Cnot,
            "t" => GateKind::T,
            "tdg" => GateKind::Tdg,
            "p" | "s" => GateKind::P,
            "pdg" | "sdg" => GateKind::Pdg,
            "v" => GateKind::V,
            "h" => GateKind::H,
            _ => return Err(Error::UnknownGate(s.to_string())),
        })
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramGate {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
}

/// A Clifford+T gate list over logical qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Program {
    pub qubits: usize,
    pub gates: Vec<ProgramGate>,
}

impl Program {
    pub fn new(qubits: usize) -> Self {
        Program { qubits, gates: Vec::new() }
    }

    pub fn push(&mut self, kind: GateKind, qubits: &[usize]) -> Result<()> {
        if qubits.len() != kind.arity() {
            return Err(Error::SizeMismatch { expected: kind.arity(), found: qubits.len() });
        }
        if let Some(&q) = qubits.iter().find(|&&q| q >= self.qubits) {
            return Err(Error::QubitOutOfRange { qubit: q, qubits: self.qubits });
        }
        if kind == GateKind::Cnot && qubits[0] == qubits[1] {
            return Err(Error::ControlEqualsTarget { gate: self.gates.len(), wire: qubits[0] });
        }
        self.gates.push(ProgramGate { kind, qubits: qubits.to_vec() });
        Ok(())
    }

    /// Appends a gate named by its mnemonic.
    pub fn push_named(&mut self, name: &str, qubits: &[usize]) -> Result<()> {
        self.push(name.parse()?, qubits)
    }

    /// The textbook Toffoli decomposition into CNOT, T, T†, P and H on
    /// controls 0, 1 and target 2.
    pub fn toffoli() -> Self {
        let mut p = Program::new(3);
        let steps: [(&str, &[usize]); 16] = [
            ("h", &[2]),
            ("cnot", &[1, 2]),
            ("tdg", &[2]),
            ("cnot", &[0, 2]),
            ("t", &[2]),
            ("cnot", &[1, 2]),
            ("tdg", &[2]),
            ("cnot", &[0, 2]),
            ("tdg", &[1]),
            ("t", &[2]),
            ("cnot", &[0, 1]),
            ("h", &[2]),
            ("tdg", &[1]),
            ("cnot", &[0, 1]),
            ("t", &[0]),
            ("p", &[1]),
        ];
        for (name, qs) in steps {
            p.push_named(name, qs).expect("static program");
        }
        p
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    /// Direct simulation on a product input state, without any gadgets.
    pub fn simulate(&self, inputs: &[Qubit]) -> Result<StateVector> {
        if inputs.len() != self.qubits {
            return Err(Error::SizeMismatch { expected: self.qubits, found: inputs.len() });
        }
        let mut s = StateVector::product(inputs)?;
        for g in &self.gates {
            match g.kind.matrix() {
                None => s.apply_cnot(g.qubits[0], g.qubits[1])?,
                Some(m) => s.apply_single(g.qubits[0], &m)?,
            }
        }
        Ok(s)
    }
}

/// Result of [`translate_to_icm`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Translation {
    pub icm: ICMCircuit,
    /// ICM qubit carrying each logical qubit at the end.
    pub outputs: Vec<usize>,
}

struct Builder {
    configs: Vec<QubitConfig>,
    gates: Vec<(usize, usize)>,
    corrections: Vec<Correction>,
    current: Vec<usize>,
}

impl Builder {
    fn fresh(&mut self, init: InitBasis) -> usize {
        self.configs.push(QubitConfig::output(init));
        self.configs.len() - 1
    }

    fn measure(&mut self, q: usize, meas: MeasBasis) {
        let cfg = &mut self.configs[q];
        cfg.meas = meas;
        if cfg.role == Role::Output {
            cfg.role = Role::Ancilla;
        }
    }

    /// Target-side teleportation onto a fresh control in `init`.
    fn rotate(&mut self, logical: usize, init: InitBasis, adjoint: bool) {
        let cur = self.current[logical];
        let fresh = self.fresh(init);
        self.gates.push((fresh, cur));
        if adjoint {
            self.measure(cur, MeasBasis::Configurable(Basis::Z, Basis::X));
            self.corrections.push(Correction { measured: cur, nominal: 1, pauli: Pauli::X, target: fresh });
        } else {
            self.measure(cur, MeasBasis::Z);
        }
        self.current[logical] = fresh;
    }

    fn v(&mut self, logical: usize) {
        let cur = self.current[logical];
        let fresh = self.fresh(InitBasis::Y);
        self.gates.push((cur, fresh));
        self.measure(cur, MeasBasis::X);
        self.current[logical] = fresh;
    }
}

/// Replaces every single-qubit gate by its teleported gadget. T†/P† reuse
/// the T/P structure with the complementary outcome; H becomes P†·V·P†.
pub fn translate_to_icm(program: &Program) -> Result<Translation> {
    let mut b = Builder {
        configs: (0..program.qubits).map(|q| QubitConfig::input(format!("in{q}"), MeasBasis::None)).collect(),
        gates: Vec::new(),
        corrections: Vec::new(),
        current: (0..program.qubits).collect(),
    };
    for g in &program.gates {
        let q = g.qubits[0];
        match g.kind {
            GateKind::Cnot => {
                let (c, t) = (b.current[g.qubits[0]], b.current[g.qubits[1]]);
                b.gates.push((c, t));
            }
            GateKind::T => b.rotate(q, InitBasis::A, false),
            GateKind::Tdg => b.rotate(q, InitBasis::A, true),
            GateKind::P => b.rotate(q, InitBasis::Y, false),
            GateKind::Pdg => b.rotate(q, InitBasis::Y, true),
            GateKind::V => b.v(q),
            GateKind::H => {
                b.rotate(q, InitBasis::Y, true);
                b.v(q);
                b.rotate(q, InitBasis::Y, true);
            }
        }
    }
    let l = LinearCircuit::new(b.configs.len(), &b.gates)?;
    let icm = configure(&l, b.configs)?.with_corrections(b.corrections);
    Ok(Translation { icm, outputs: b.current })
}

/// Simulates a translated program on product inputs, post-selecting every
/// nominal outcome and applying recorded corrections right after each
/// measurement. Qubits enter the state at their first gate and leave after
/// their last, so only the live width counts against the simulator limit.
/// The result lists the logical qubits in order.
pub fn simulate_translation(t: &Translation, inputs: &[Qubit]) -> Result<StateVector> {
    let icm = &t.icm;
    let n = icm.qubit_count();
    if inputs.len() != t.outputs.len() {
        return Err(Error::SizeMismatch { expected: t.outputs.len(), found: inputs.len() });
    }
    let bindings: BTreeMap<String, Qubit> =
        inputs.iter().enumerate().map(|(q, s)| (format!("in{q}"), *s)).collect();
    let gates = icm.circuit().gates();
    let mut last = vec![None; n];
    for (i, g) in gates.iter().enumerate() {
        last[g.control] = Some(i);
        last[g.target] = Some(i);
    }
    let mut state = StateVector::product(&[])?;
    // live[k] = ICM qubit held at state index k
    let mut live: Vec<usize> = Vec::new();
    let init_state = |q: usize| -> Result<Qubit> {
        match &icm.configs()[q].init {
            InitBasis::Input(name) => bindings.get(name).copied().ok_or_else(|| Error::UnboundInput(name.clone())),
            b => Ok(b.state().unwrap()),
        }
    };
    let index_of = |live: &[usize], q: usize| live.iter().position(|&l| l == q).unwrap();

    for (i, g) in gates.iter().enumerate() {
        for q in [g.control, g.target] {
            if !live.contains(&q) {
                state.append(init_state(q)?)?;
                live.push(q);
            }
        }
        state.apply_cnot(index_of(&live, g.control), index_of(&live, g.target))?;
        for q in [g.control, g.target] {
            let Some(basis) = icm.configs()[q].meas.primary() else { continue };
            if last[q] != Some(i) {
                continue;
            }
            let correction = icm.corrections().iter().find(|c| c.measured == q);
            let outcome = correction.map_or(0, |c| c.nominal);
            state.project_out(index_of(&live, q), &basis.eigenstate(outcome))?;
            live.retain(|&l| l != q);
            if let Some(c) = correction {
                let m = match c.pauli {
                    Pauli::X => gates::x(),
                    Pauli::Z => gates::z(),
                    Pauli::Y | Pauli::I => unreachable!("translation records X corrections only"),
                };
                state.apply_single(index_of(&live, c.target), &m)?;
            }
        }
    }
    for &q in &t.outputs {
        if !live.contains(&q) {
            state.append(init_state(q)?)?;
            live.push(q);
        }
    }
    if live.len() != t.outputs.len() {
        return Err(Error::SizeMismatch { expected: t.outputs.len(), found: live.len() });
    }
    let order: Vec<usize> = t.outputs.iter().map(|&q| index_of(&live, q)).collect();
    permute(&state, &order)
}

/// New state whose qubit `i` is qubit `order[i]` of `s`.
fn permute(s: &StateVector, order: &[usize]) -> Result<StateVector> {
    let amps = s.amplitudes();
    let mut out = vec![num_complex::Complex64::new(0.0, 0.0); amps.len()];
    for (i, a) in amps.iter().enumerate() {
        let j = order.iter().enumerate().fold(0usize, |acc, (new, &old)| acc | ((i >> old & 1) << new));
        out[j] = *a;
    }
    StateVector::from_amplitudes(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icm::{gadget, GadgetKind};
    use crate::oracle::statevector::states;

    #[test]
    fn single_t_is_the_t_gadget() {
        let mut p = Program::new(1);
        p.push(GateKind::T, &[0]).unwrap();
        let t = translate_to_icm(&p).unwrap();
        assert_eq!(t.icm, gadget(GadgetKind::T));
        assert_eq!(t.outputs, [1]);
    }

    #[test]
    fn hadamard_uses_three_gadgets() {
        let mut p = Program::new(1);
        p.push(GateKind::H, &[0]).unwrap();
        let t = translate_to_icm(&p).unwrap();
        assert_eq!(t.icm.qubit_count(), 4);
        assert_eq!(t.icm.corrections().len(), 2);
        let out = simulate_translation(&t, &[states::zero()]).unwrap();
        let want = StateVector::product(&[states::plus()]).unwrap();
        assert!((out.fidelity(&want).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unknown_gate_name() {
        let mut p = Program::new(1);
        assert_eq!(p.push_named("ccz", &[0]).unwrap_err().code(), "UnknownGate");
    }

    #[test]
    fn toffoli_counts() {
        let p = Program::toffoli();
        assert_eq!(p.count(GateKind::T) + p.count(GateKind::Tdg), 7);
        assert_eq!((p.count(GateKind::P), p.count(GateKind::H), p.count(GateKind::Cnot)), (1, 2, 6));
        assert_eq!(translate_to_icm(&p).unwrap().icm.qubit_count(), 17);
    }

    #[test]
    fn permutation_moves_bits() {
        let s = StateVector::product(&[states::one(), states::zero()]).unwrap();
        let p = permute(&s, &[1, 0]).unwrap();
        assert!((p.amplitudes()[2].re - 1.0).abs() < 1e-12);
    }
}
