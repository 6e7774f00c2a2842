//! Turning linear CNOT circuits back into circular ones.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::circuit::{CircularCircuit, LinearCircuit};
use crate::error::{Error, Result};

/// The endpoint pairing produced by [`circularize`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinRecord {
    /// `(consumer, producer)`: the input of `consumer` continues the output of `producer`.
    pub joins: Vec<(usize, usize)>,
    /// `(head, tail)` per circular wire: the output of `tail` loops back to the
    /// input of `head`. A self-loop has `head == tail`.
    pub loops: Vec<(usize, usize)>,
    /// Circular wire of every linear qubit.
    pub wire_of: Vec<usize>,
    /// Angle at which a radial cut restores the original gate order.
    pub start_angle: usize,
}

impl JoinRecord {
    pub fn cross_joins(&self) -> usize {
        self.joins.len()
    }
}

/// Failure of [`circularize`]: the joins were computed but some circular wire
/// ended up without gate symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularizeError {
    pub error: Error,
    pub join: JoinRecord,
}

/// Join qubit inputs to the outputs of earlier, idle qubits and close the
/// remaining chains into loops.
///
/// Qubits are visited from the highest index down. For qubit `q` with first
/// gate at time `min`, the partner is the highest-index qubit `p < q` whose
/// output is still free and which carries no gate at a time `>= min`.
pub fn circularize(l: &LinearCircuit) -> std::result::Result<(CircularCircuit, JoinRecord), CircularizeError> {
    let n = l.qubit_count();
    let last_time: Vec<Option<usize>> = (0..n).map(|q| l.touches(q).map(|g| g.time).max()).collect();
    let mut consumed = vec![false; n];
    let mut next: Vec<Option<usize>> = vec![None; n];
    let mut prev: Vec<Option<usize>> = vec![None; n];
    let mut joins = Vec::new();

    for q in (0..n).rev() {
        let min = l.first_time(q).unwrap_or(usize::MAX);
        let partner = (0..q).rev().find(|&p| !consumed[p] && last_time[p].is_none_or(|t| t < min));
        if let Some(p) = partner {
            consumed[p] = true;
            next[p] = Some(q);
            prev[q] = Some(p);
            joins.push((q, p));
        }
    }

    // chains start at qubits whose input was not joined
    let mut wire_of = vec![usize::MAX; n];
    let mut loops = Vec::new();
    for head in (0..n).filter(|&q| prev[q].is_none()) {
        let wire = loops.len();
        let mut tail = head;
        wire_of[head] = wire;
        while let Some(nx) = next[tail] {
            tail = nx;
            wire_of[tail] = wire;
        }
        loops.push((head, tail));
    }

    let join = JoinRecord { joins, loops, wire_of, start_angle: 0 };
    let pairs: Vec<(usize, usize)> =
        l.gates().iter().map(|g| (join.wire_of[g.control], join.wire_of[g.target])).collect();
    match CircularCircuit::new(join.loops.len(), &pairs) {
        Ok(c) => Ok((c, join)),
        Err(error) => Err(CircularizeError { error, join }),
    }
}

/// Whether `b` is a rotation of `a` after renaming `a`'s wires through `rename`.
pub fn cyclic_equal(a: &[(usize, usize)], b: &[(usize, usize)], rename: Option<&BTreeMap<usize, usize>>) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let map = |w: usize| rename.and_then(|m| m.get(&w).copied()).unwrap_or(w);
    let a: Vec<_> = a.iter().map(|&(c, t)| (map(c), map(t))).collect();
    (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
}

/// Renaming helper for callers holding a plain slice map.
pub fn renaming(wire_of: &[usize]) -> BTreeMap<usize, usize> {
    wire_of.iter().copied().enumerate().collect()
}

/// Circularize and report the first failure as a plain error.
pub fn circularize_checked(l: &LinearCircuit) -> Result<(CircularCircuit, JoinRecord)> {
    circularize(l).map_err(|e| e.error)
}
