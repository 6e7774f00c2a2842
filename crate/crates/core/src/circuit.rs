//! Circular and linear CNOT circuits.
//!
//! A [`CircularCircuit`] has closed wires and a cyclic gate order: the gate at
//! position `n - 1` is followed again by the gate at position `0`. Every gate
//! leaves one symbol on each of its two wires, a control (`•`) and a target
//! (`⊕`). Between two cyclically adjacent symbols of a wire lies a [`Gap`],
//! the only place where the wire may be cut.
//!
//! A [`LinearCircuit`] is an ordinary left-to-right CNOT list. Linear circuits
//! obtained by cutting a circular one remember which arc of which wire each of
//! their qubits came from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WireId(pub usize);

impl WireId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for WireId {
    fn from(index: usize) -> Self {
        WireId(index)
    }
}

impl fmt::Display for WireId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnotGate {
    pub id: usize,
    pub control: WireId,
    pub target: WireId,
    /// Slot in the global cyclic order.
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolKind {
    Control,
    Target,
}

/// One gate symbol sitting on a wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub gate: usize,
    pub kind: SymbolKind,
    pub position: usize,
}

/// The gap following symbol `index` (clockwise) on `wire`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gap {
    pub wire: WireId,
    pub index: usize,
}

impl Gap {
    pub fn new(wire: usize, index: usize) -> Self {
        Gap { wire: WireId(wire), index }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}g{}", self.wire, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CircularSchema", into = "CircularSchema")]
pub struct CircularCircuit {
    wires: usize,
    gates: Vec<CnotGate>,
    symbols: Vec<Vec<Symbol>>,
}

#[derive(Serialize, Deserialize)]
struct CircularSchema {
    wires: usize,
    gates: Vec<(usize, usize)>,
}

impl TryFrom<CircularSchema> for CircularCircuit {
    type Error = Error;
    fn try_from(s: CircularSchema) -> Result<Self> {
        CircularCircuit::new(s.wires, &s.gates)
    }
}

impl From<CircularCircuit> for CircularSchema {
    fn from(c: CircularCircuit) -> Self {
        CircularSchema { wires: c.wires, gates: c.gate_pairs() }
    }
}

fn check_pair(gate: usize, control: usize, target: usize, wires: usize) -> Result<()> {
    for w in [control, target] {
        if w >= wires {
            return Err(Error::WireOutOfRange { wire: w, wires });
        }
    }
    if control == target {
        return Err(Error::ControlEqualsTarget { gate, wire: control });
    }
    Ok(())
}

impl CircularCircuit {
    /// Builds a circuit from `(control, target)` pairs listed in cyclic order.
    /// Gate ids and positions follow the listing order.
    pub fn new(wires: usize, gates: &[(usize, usize)]) -> Result<Self> {
        let mut built = Vec::with_capacity(gates.len());
        for (id, &(control, target)) in gates.iter().enumerate() {
            check_pair(id, control, target, wires)?;
            built.push(CnotGate { id, control: WireId(control), target: WireId(target), position: id });
        }
        Self::from_gates(wires, built)
    }

    /// Builds a circuit from explicit gates; they are sorted by position.
    pub fn from_gates(wires: usize, mut gates: Vec<CnotGate>) -> Result<Self> {
        gates.sort_by_key(|g| g.position);
        for pair in gates.windows(2) {
            if pair[0].position == pair[1].position {
                return Err(Error::Syntax {
                    line: 0,
                    message: format!("gates {} and {} share position {}", pair[0].id, pair[1].id, pair[0].position),
                });
            }
        }
        let mut symbols = vec![Vec::new(); wires];
        for g in &gates {
            check_pair(g.id, g.control.0, g.target.0, wires)?;
            symbols[g.control.0].push(Symbol { gate: g.id, kind: SymbolKind::Control, position: g.position });
            symbols[g.target.0].push(Symbol { gate: g.id, kind: SymbolKind::Target, position: g.position });
        }
        if let Some(wire) = symbols.iter().position(Vec::is_empty) {
            return Err(Error::EmptyWire { wire });
        }
        Ok(CircularCircuit { wires, gates, symbols })
    }

    pub fn wire_count(&self) -> usize {
        self.wires
    }

    /// Gates in cyclic order.
    pub fn gates(&self) -> &[CnotGate] {
        &self.gates
    }

    pub fn gate(&self, id: usize) -> Option<&CnotGate> {
        self.gates.iter().find(|g| g.id == id)
    }

    /// Index of gate `id` in the cyclic order.
    pub fn slot_of(&self, id: usize) -> Option<usize> {
        self.gates.iter().position(|g| g.id == id)
    }

    pub fn gate_pairs(&self) -> Vec<(usize, usize)> {
        self.gates.iter().map(|g| (g.control.0, g.target.0)).collect()
    }

    /// Symbols of `wire` in clockwise order.
    pub fn symbols(&self, wire: usize) -> &[Symbol] {
        &self.symbols[wire]
    }

    pub fn gap_count(&self, wire: usize) -> usize {
        self.symbols[wire].len()
    }

    pub fn total_gaps(&self) -> usize {
        self.symbols.iter().map(Vec::len).sum()
    }

    pub fn has_gap(&self, gap: Gap) -> bool {
        gap.wire.0 < self.wires && gap.index < self.symbols[gap.wire.0].len()
    }

    /// Index on `wire` of the symbol left by gate `gate`, if any.
    pub fn symbol_index(&self, wire: usize, gate: usize) -> Option<usize> {
        self.symbols[wire].iter().position(|s| s.gate == gate)
    }

    /// Number of angular slots. Angle `a` lies just before the gate in slot `a`.
    pub fn angle_count(&self) -> usize {
        self.gates.len()
    }

    /// The gap of `wire` spanning angle `angle`.
    pub fn gap_at(&self, wire: usize, angle: usize) -> Gap {
        let syms = &self.symbols[wire];
        let start = self.gates[angle % self.gates.len()].position;
        let index = syms.iter().rposition(|s| s.position < start).unwrap_or(syms.len() - 1);
        Gap::new(wire, index)
    }

    /// A copy with the slots of the gates `first` and `second` exchanged.
    pub fn with_swapped(&self, first: usize, second: usize) -> Result<Self> {
        let a = self.slot_of(first).ok_or_else(|| Error::UnknownGate(first.to_string()))?;
        let b = self.slot_of(second).ok_or_else(|| Error::UnknownGate(second.to_string()))?;
        let mut gates = self.gates.clone();
        let (pa, pb) = (gates[a].position, gates[b].position);
        gates[a].position = pb;
        gates[b].position = pa;
        Self::from_gates(self.wires, gates)
    }
}

/// Where a qubit of a cut-induced linear circuit came from: the clockwise arc
/// of `wire` running from the cut at `start` to the cut at `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcOrigin {
    pub wire: WireId,
    pub start: Gap,
    pub end: Gap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearQubit {
    pub origin: Option<ArcOrigin>,
    /// Cut endpoint at the start of traversal.
    pub input: Option<Gap>,
    /// Cut endpoint at the end of traversal.
    pub output: Option<Gap>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearGate {
    pub control: usize,
    pub target: usize,
    pub time: usize,
    /// Gate id in the circular circuit this gate was cut from.
    pub source: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearCircuit {
    qubits: Vec<LinearQubit>,
    gates: Vec<LinearGate>,
}

impl LinearCircuit {
    /// Plain linear circuit; time steps follow the listing order.
    pub fn new(qubits: usize, gates: &[(usize, usize)]) -> Result<Self> {
        let mut built = Vec::with_capacity(gates.len());
        for (time, &(control, target)) in gates.iter().enumerate() {
            check_pair(time, control, target, qubits)?;
            built.push(LinearGate { control, target, time, source: None });
        }
        let qubits = vec![LinearQubit { origin: None, input: None, output: None }; qubits];
        Ok(LinearCircuit { qubits, gates: built })
    }

    pub(crate) fn from_parts(qubits: Vec<LinearQubit>, gates: Vec<LinearGate>) -> Self {
        debug_assert!(gates.windows(2).all(|w| w[0].time < w[1].time));
        LinearCircuit { qubits, gates }
    }

    pub fn qubit_count(&self) -> usize {
        self.qubits.len()
    }

    pub fn qubits(&self) -> &[LinearQubit] {
        &self.qubits
    }

    pub fn gates(&self) -> &[LinearGate] {
        &self.gates
    }

    pub fn gate_pairs(&self) -> Vec<(usize, usize)> {
        self.gates.iter().map(|g| (g.control, g.target)).collect()
    }

    /// Time of the first gate touching `qubit`.
    pub fn first_time(&self, qubit: usize) -> Option<usize> {
        self.gates.iter().find(|g| g.control == qubit || g.target == qubit).map(|g| g.time)
    }

    pub fn touches(&self, qubit: usize) -> impl Iterator<Item = &LinearGate> + '_ {
        self.gates.iter().filter(move |g| g.control == qubit || g.target == qubit)
    }

    /// The same qubits with the gate at `index` removed.
    pub fn without_gate(&self, index: usize) -> LinearCircuit {
        let mut gates = self.gates.clone();
        gates.remove(index);
        LinearCircuit { qubits: self.qubits.clone(), gates }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> CircularCircuit {
        CircularCircuit::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn symbols_follow_positions() {
        let c = swap();
        let kinds: Vec<_> = c.symbols(0).iter().map(|s| s.kind).collect();
        assert_eq!(kinds, [SymbolKind::Control, SymbolKind::Target, SymbolKind::Control]);
        assert_eq!(c.total_gaps(), 6);
    }

    #[test]
    fn gap_at_wraps_before_first_gate() {
        let c = swap();
        assert_eq!(c.gap_at(0, 0), Gap::new(0, 2));
        assert_eq!(c.gap_at(1, 1), Gap::new(1, 0));
        assert_eq!(c.gap_at(1, 2), Gap::new(1, 1));
    }

    #[test]
    fn rejects_bad_gates() {
        assert_eq!(
            CircularCircuit::new(2, &[(0, 0)]).unwrap_err(),
            Error::ControlEqualsTarget { gate: 0, wire: 0 }
        );
        assert_eq!(CircularCircuit::new(2, &[(0, 2)]).unwrap_err().code(), "WireOutOfRange");
        assert_eq!(CircularCircuit::new(3, &[(0, 1)]).unwrap_err(), Error::EmptyWire { wire: 2 });
    }

    #[test]
    fn swapping_adjacent_slots() {
        let c = CircularCircuit::new(3, &[(0, 1), (0, 2)]).unwrap();
        let s = c.with_swapped(0, 1).unwrap();
        assert_eq!(s.gate_pairs(), [(0, 2), (0, 1)]);
    }

    #[test]
    fn serde_round_trip_validates() {
        let c = swap();
        let text = serde_json::to_string(&c).unwrap();
        let back: CircularCircuit = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<CircularCircuit>(r#"{"wires":2,"gates":[[0,0]]}"#).is_err());
    }
}
