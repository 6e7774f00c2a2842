use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circuit::LinearCircuit;
use crate::error::{Error, Result};
use crate::stabmap::StabiliserMap;

/// A signed Pauli string in symplectic form. `Y` is stored as `x && z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliString {
    pub x: Vec<bool>,
    pub z: Vec<bool>,
    pub negative: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { x: vec![false; n], z: vec![false; n], negative: false }
    }

    pub fn single(n: usize, qubit: usize, p: Pauli) -> Self {
        let mut s = Self::identity(n);
        s.set(qubit, p);
        s
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn get(&self, q: usize) -> Pauli {
        match (self.x[q], self.z[q]) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        self.x[q] = matches!(p, Pauli::X | Pauli::Y);
        self.z[q] = matches!(p, Pauli::Z | Pauli::Y);
    }

    /// Parses `[+-]?[IXYZ]*`.
    pub fn parse(text: &str) -> Result<Self> {
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let mut s = Self::identity(body.chars().count());
        for (q, ch) in body.chars().enumerate() {
            let p = match ch {
                'I' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                _ => return Err(Error::Syntax { line: 0, message: format!("bad Pauli letter {ch:?}") }),
            };
            s.set(q, p);
        }
        s.negative = negative;
        Ok(s)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for q in 0..self.len() {
            let ch = match self.get(q) {
                Pauli::I => 'I',
                Pauli::X => 'X',
                Pauli::Y => 'Y',
                Pauli::Z => 'Z',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

/// `CNOT · p · CNOT`.
pub fn conjugate_cnot(p: &PauliString, control: usize, target: usize) -> Result<PauliString> {
    let n = p.len();
    for q in [control, target] {
        if q >= n {
            return Err(Error::QubitOutOfRange { qubit: q, qubits: n });
        }
    }
    if control == target {
        return Err(Error::ControlEqualsTarget { gate: 0, wire: control });
    }
    let mut out = p.clone();
    let (xc, zc, xt, zt) = (p.x[control], p.z[control], p.x[target], p.z[target]);
    // phase update of the symplectic CNOT rule
    out.negative ^= xc && zt && !(xt ^ zc);
    out.x[target] ^= xc;
    out.z[control] ^= zt;
    Ok(out)
}

/// Conjugates `p` through the gates of `l` in time order.
pub fn propagate_pauli(l: &LinearCircuit, p: &PauliString) -> Result<PauliString> {
    if p.len() != l.qubit_count() {
        return Err(Error::SizeMismatch { expected: l.qubit_count(), found: p.len() });
    }
    l.gates().iter().try_fold(p.clone(), |acc, g| conjugate_cnot(&acc, g.control, g.target))
}

/// Sign-free stabiliser map of `l` by propagating every single-qubit X and Z.
pub fn oracle_map(l: &LinearCircuit) -> StabiliserMap {
    let n = l.qubit_count();
    let image = |p: Pauli, bits: fn(&PauliString) -> &Vec<bool>| -> Vec<BTreeSet<usize>> {
        (0..n)
            .map(|q| {
                let out = propagate_pauli(l, &PauliString::single(n, q, p)).expect("sized to the circuit");
                bits(&out).iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
            })
            .collect()
    };
    StabiliserMap { x: image(Pauli::X, |s| &s.x), z: image(Pauli::Z, |s| &s.z) }
}

pub fn equivalent_up_to_sign(a: &StabiliserMap, b: &StabiliserMap) -> Result<bool> {
    if a.x.len() != b.x.len() || a.z.len() != b.z.len() {
        return Err(Error::SizeMismatch { expected: a.x.len(), found: b.x.len() });
    }
    Ok(a.x == b.x && a.z == b.z)
}
