use serde::{Deserialize, Serialize};

use super::{InitBasis, MeasBasis, QubitConfig};
use crate::circuit::{CircularCircuit, Gap};
use crate::cuts::CutSet;
use crate::derive::control_gaps;
use crate::error::Result;

/// A single missing gate: the gate acts as if its control were stuck at |0⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaultSpec {
    pub gate: usize,
}

/// Configuration of the ancilla isolating the faulty control.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultPatch {
    /// Cuts delimiting the ancilla arc, which holds only the control symbol.
    pub arc: (Gap, Gap),
    /// Gaps cut in addition to the base set.
    pub added: Vec<Gap>,
    pub config: QubitConfig,
}

/// Cuts out the faulty gate's control symbol so it can be pinned to |0⟩.
pub fn inject_smgf(c: &CircularCircuit, base: &CutSet, f: FaultSpec) -> Result<(CutSet, FaultPatch)> {
    let (before, after) = control_gaps(c, f.gate)?;
    let mut cuts = base.clone();
    let mut added = Vec::new();
    for gap in [before, after] {
        if cuts.insert(gap) {
            added.push(gap);
        }
    }
    let config = QubitConfig::ancilla(InitBasis::Zero, MeasBasis::Z);
    Ok((cuts, FaultPatch { arc: (before, after), added, config }))
}
