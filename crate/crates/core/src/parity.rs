//! Translation of Boolean models into GF(2) parity systems and their solution.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2::{BitRow, Gf2System, Solution};
use crate::model::{BooleanModel, Clause, SegmentId};

/// One row per clause over the model's variables, plus a constant column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySystem {
    variables: Vec<SegmentId>,
    system: Gf2System,
}

pub fn to_parity_system(m: &BooleanModel) -> Result<ParitySystem> {
    let mut system = Gf2System::new(m.variable_count());
    for clause in m.clauses() {
        match *clause {
            Clause::Cnot { before, after, crossing, .. } => system.push(&[before, after, crossing], false),
            Clause::Join { r, t, .. } => system.push(&[r, t], false),
            Clause::CombinedCnot { control_before: a, control_after: b, target_before: c, target_after: d, .. } => {
                match m.selector() {
                    None => return Err(Error::UnpinnedSelector),
                    // X flows control -> target, the control is untouched
                    Some(true) => {
                        system.push(&[a, c, d], false);
                        system.push(&[a, b], false);
                    }
                    // Z flows target -> control, the target is untouched
                    Some(false) => {
                        system.push(&[c, a, b], false);
                        system.push(&[c, d], false);
                    }
                }
            }
        }
    }
    let variables = m.segments().iter().map(|s| s.id).collect();
    Ok(ParitySystem { variables, system })
}

impl ParitySystem {
    pub fn variables(&self) -> &[SegmentId] {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn row_count(&self) -> usize {
        self.system.rows().len()
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn gf2(&self) -> &Gf2System {
        &self.system
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.system.satisfied_by(assignment)
    }

    /// Appends `var = value`.
    pub fn pin(&mut self, var: usize, value: bool) {
        self.system.push(&[var], value);
    }

    /// Rows as `0`/`1` strings with the constant column last.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in self.system.rows() {
            out.push_str(&format!("{row:?}\n"));
        }
        out
    }

    /// Solution space of the homogeneous system.
    pub fn kernel(&self) -> Vec<BitRow> {
        self.system.kernel()
    }

    /// Completes a partial assignment by elimination.
    pub fn propagate(&self, inputs: &BTreeMap<SegmentId, bool>) -> Result<BTreeMap<SegmentId, bool>> {
        let values = self.solve_pinned(inputs.iter().map(|(id, &v)| (self.index_of(*id), v)))?;
        Ok(self.variables.iter().copied().zip(values).collect())
    }

    pub(crate) fn index_of(&self, id: SegmentId) -> usize {
        self.variables.iter().position(|&v| v == id).expect("segment of this system")
    }

    /// Solves with the given `(variable, value)` pins.
    pub fn solve_pinned(&self, pins: impl IntoIterator<Item = (usize, bool)>) -> Result<Vec<bool>> {
        let mut system = self.system.clone();
        for (v, value) in pins {
            system.push(&[v], value);
        }
        match system.solve() {
            Solution::Unique(x) => Ok(x),
            Solution::Underdetermined { free } => Err(Error::Underdetermined { free: free.len() }),
            Solution::Inconsistent => Err(Error::Inconsistent),
        }
    }
}

/// Wrapper matching the operation name used throughout the docs.
pub fn propagate(s: &ParitySystem, inputs: &BTreeMap<SegmentId, bool>) -> Result<BTreeMap<SegmentId, bool>> {
    s.propagate(inputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::CircularCircuit;
    use crate::cuts::CutSet;
    use crate::model::{build_combined_model, build_model, ModelKind};

    fn swap() -> CircularCircuit {
        CircularCircuit::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn uncut_model_has_zero_solution_but_is_underdetermined() {
        let s = to_parity_system(&build_model(&swap(), ModelKind::X)).unwrap();
        assert!(s.is_satisfied_by(&[false; 9]));
        assert_eq!(s.propagate(&BTreeMap::new()).unwrap_err().code(), "Underdetermined");
    }

    #[test]
    fn unpinned_selector_is_rejected() {
        let m = build_combined_model(&swap());
        assert_eq!(to_parity_system(&m).unwrap_err(), Error::UnpinnedSelector);
        assert!(to_parity_system(&m.with_selector(true)).is_ok());
    }

    #[test]
    fn conflicting_pins_are_inconsistent() {
        let m = build_model(&swap(), ModelKind::X).apply_cuts(&CutSet::from_pairs(&[(0, 2), (1, 2)]).unwrap()).unwrap();
        let s = to_parity_system(&m).unwrap();
        assert_eq!(s.solve_pinned([(0, true), (0, false)]).unwrap_err(), Error::Inconsistent);
    }

    #[test]
    fn dump_has_constant_column() {
        let c = CircularCircuit::new(2, &[(0, 1)]).unwrap();
        let s = to_parity_system(&build_model(&c, ModelKind::X)).unwrap();
        assert_eq!(s.dump(), "1110\n0110\n");
    }
}
