//! Stabiliser transformations of cut circuits, read off the parity systems.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::circuit::{CircularCircuit, Gap, LinearCircuit};
use crate::cuts::{enumerate_cut_points, linearize, validate_cut_set, CutSet, Direction};
use crate::error::{Error, Result};
use crate::gf2::{span_basis, BitRow};
use crate::model::{build_combined_model, build_model, BooleanModel, ModelKind};
use crate::parity::{to_parity_system, ParitySystem};
use crate::stabmap::StabiliserMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub linear: LinearCircuit,
    pub angle: usize,
    pub direction: Direction,
    pub map: StabiliserMap,
}

/// Input and output variables of one qubit in one model.
#[derive(Debug, Clone, Copy)]
struct Ends {
    input: usize,
    output: usize,
}

fn ends(start_var: usize, end_var: usize, d: Direction) -> Ends {
    match d {
        Direction::Clockwise => Ends { input: start_var, output: end_var },
        Direction::CounterClockwise => Ends { input: end_var, output: start_var },
    }
}

/// Variables on the arc side of the cuts delimiting `(start, end)`.
fn arc_vars(m: &BooleanModel, start: Gap, end: Gap) -> (usize, usize) {
    (m.sides(start).expect("cut gap").1, m.sides(end).expect("cut gap").0)
}

/// For every reported qubit, the outputs set when its input alone is true.
/// `pins` are held fixed in every query; `None` entries of `qubits` are
/// skipped and read as empty outputs.
fn single_input_map(
    s: &ParitySystem,
    qubits: &[Option<Ends>],
    pins: &[(usize, bool)],
) -> Result<Vec<BTreeSet<usize>>> {
    let mut out = Vec::with_capacity(qubits.len());
    for (q, slot) in qubits.iter().enumerate() {
        if slot.is_none() {
            out.push(BTreeSet::new());
            continue;
        }
        let mut query: Vec<(usize, bool)> = pins.to_vec();
        query.extend(qubits.iter().enumerate().filter_map(|(p, e)| e.map(|e| (e.input, p == q))));
        let values = s.solve_pinned(query)?;
        out.push(
            qubits
                .iter()
                .enumerate()
                .filter_map(|(p, e)| e.filter(|e| values[e.output]).map(|_| p))
                .collect(),
        );
    }
    Ok(out)
}

fn qubit_ends(m: &BooleanModel, l: &LinearCircuit, d: Direction) -> Vec<Option<Ends>> {
    l.qubits()
        .iter()
        .map(|q| {
            let o = q.origin.expect("cut-induced circuit");
            let (s, e) = arc_vars(m, o.start, o.end);
            Some(ends(s, e, d))
        })
        .collect()
}

fn cut_system(c: &CircularCircuit, cuts: &CutSet, kind: ModelKind) -> Result<(BooleanModel, ParitySystem)> {
    let m = build_model(c, kind).apply_cuts(cuts)?;
    let s = to_parity_system(&m)?;
    Ok((m, s))
}

/// Validates `cuts`, linearizes in direction `d` and derives the X and Z parts
/// of the stabiliser map from the two cut models.
pub fn derive_transformations(c: &CircularCircuit, cuts: &CutSet, d: Direction) -> Result<Derivation> {
    let angle = validate_cut_set(c, cuts)?;
    let linear = linearize(c, cuts, d)?;
    let mut parts = Vec::with_capacity(2);
    for kind in [ModelKind::X, ModelKind::Z] {
        let (m, s) = cut_system(c, cuts, kind)?;
        parts.push(single_input_map(&s, &qubit_ends(&m, &linear, d), &[])?);
    }
    let z = parts.pop().unwrap();
    let x = parts.pop().unwrap();
    Ok(Derivation { linear, angle, direction: d, map: StabiliserMap { x, z } })
}

/// Same derivation through the combined model, once per selector value.
pub fn derive_combined(c: &CircularCircuit, cuts: &CutSet, d: Direction) -> Result<StabiliserMap> {
    validate_cut_set(c, cuts)?;
    let linear = linearize(c, cuts, d)?;
    let base = build_combined_model(c).apply_cuts(cuts)?;
    let mut parts = Vec::with_capacity(2);
    for selector in [true, false] {
        let m = base.clone().with_selector(selector);
        let s = to_parity_system(&m)?;
        parts.push(single_input_map(&s, &qubit_ends(&m, &linear, d), &[])?);
    }
    let z = parts.pop().unwrap();
    let x = parts.pop().unwrap();
    Ok(StabiliserMap { x, z })
}

/// Exchanges two cyclically adjacent gates and compares the solution spaces of
/// both models away from the swapped region.
pub fn check_commutation_invariance(c: &CircularCircuit, g1: usize, g2: usize) -> Result<bool> {
    let a = c.slot_of(g1).ok_or_else(|| Error::UnknownGate(g1.to_string()))?;
    let b = c.slot_of(g2).ok_or_else(|| Error::UnknownGate(g2.to_string()))?;
    let n = c.angle_count();
    let first = if (a + 1) % n == b && a != b {
        a
    } else if (b + 1) % n == a && a != b {
        b
    } else {
        return Err(Error::NotAdjacent { first: g1, second: g2 });
    };
    let swapped = c.with_swapped(g1, g2)?;
    let (early, late) = (c.gates()[first], c.gates()[(first + 1) % n]);
    let shared: Vec<usize> = [early.control.0, early.target.0]
        .into_iter()
        .filter(|&w| w == late.control.0 || w == late.target.0)
        .collect();
    // the gap between the two symbols on a shared wire, in either circuit
    let interior = |circ: &CircularCircuit, gate: usize| -> Vec<Gap> {
        shared.iter().map(|&w| Gap::new(w, circ.symbol_index(w, gate).unwrap())).collect()
    };
    let before_gaps = interior(c, early.id);
    let after_gaps = interior(&swapped, late.id);

    for kind in [ModelKind::X, ModelKind::Z] {
        let m1 = build_model(c, kind);
        let m2 = build_model(&swapped, kind);
        let keep1 = kept_segments(&m1, &before_gaps);
        let keep2 = kept_segments(&m2, &after_gaps);
        let key = |m: &BooleanModel, v: usize| {
            let s = &m.segments()[v];
            (s.id, s.start, s.end)
        };
        let ids1: Vec<_> = keep1.iter().map(|&v| key(&m1, v)).collect();
        let ids2: Vec<_> = keep2.iter().map(|&v| key(&m2, v)).collect();
        if ids1 != ids2 {
            return Ok(false);
        }
        if projected_span(&m1, &keep1)? != projected_span(&m2, &keep2)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn kept_segments(m: &BooleanModel, interior: &[Gap]) -> Vec<usize> {
    let dropped: BTreeSet<usize> = interior
        .iter()
        .flat_map(|&g| {
            let (r, t) = m.sides(g).unwrap();
            [r, t]
        })
        .collect();
    (0..m.variable_count()).filter(|v| !dropped.contains(v)).collect()
}

fn projected_span(m: &BooleanModel, keep: &[usize]) -> Result<Vec<BitRow>> {
    let kernel = to_parity_system(m)?.kernel();
    let projected: Vec<BitRow> = kernel
        .iter()
        .map(|v| BitRow::from_bits(&keep.iter().map(|&k| v.get(k)).collect::<Vec<_>>()))
        .collect();
    Ok(span_basis(&projected, keep.len()))
}

/// All `(cut set, direction)` pairs with at most `max_cuts` cuts deriving
/// `target`. Ordered by size, then lexicographically by gap, then direction.
pub fn search_cuts(c: &CircularCircuit, target: &StabiliserMap, max_cuts: usize) -> Result<Vec<(CutSet, Direction)>> {
    if max_cuts < c.wire_count() {
        return Err(Error::BudgetTooSmall { max_cuts, wires: c.wire_count() });
    }
    let gaps: Vec<Gap> = enumerate_cut_points(c).into_iter().map(|p| p.gap).collect();
    let size = target.qubit_count();
    let mut found = Vec::new();
    if size < c.wire_count() || size > max_cuts || size > gaps.len() {
        return Ok(found);
    }
    for combo in combinations(gaps.len(), size) {
        let cuts = CutSet::new(combo.iter().map(|&i| gaps[i]))?;
        if validate_cut_set(c, &cuts).is_err() {
            continue;
        }
        for d in Direction::BOTH {
            if derive_transformations(c, &cuts, d).is_ok_and(|r| r.map == *target) {
                found.push((cuts.clone(), d));
            }
        }
    }
    Ok(found)
}

/// Index subsets of `0..n` with `k` elements in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// The gaps on either side of the control symbol of `gate`: `(before, after)`.
pub fn control_gaps(c: &CircularCircuit, gate: usize) -> Result<(Gap, Gap)> {
    let g = c.gate(gate).ok_or_else(|| Error::UnknownGate(gate.to_string()))?;
    let w = g.control.0;
    let k = c.gap_count(w);
    let i = c.symbol_index(w, gate).unwrap();
    Ok((Gap::new(w, (i + k - 1) % k), Gap::new(w, i)))
}

/// Outcome of deriving a circuit with one gate's control stuck at |0⟩.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultDerivation {
    /// Base cuts plus the cuts isolating the faulty control.
    pub cuts: CutSet,
    /// Base qubit that already was the isolated control, if any.
    pub ancilla: Option<usize>,
    /// Base linearization with the faulty gate removed.
    pub reduced: LinearCircuit,
    /// Map over the base qubits.
    pub map: StabiliserMap,
}

/// Derives the map of the base linearization with `gate` missing. The control
/// symbol is cut out into an ancilla pinned to |0⟩ and the rest of its wire is
/// rejoined around it.
pub fn derive_with_fault(c: &CircularCircuit, base: &CutSet, gate: usize, d: Direction) -> Result<FaultDerivation> {
    let (before, after) = control_gaps(c, gate)?;
    validate_cut_set(c, base)?;
    let linear = linearize(c, base, d)?;
    let mut cuts = base.clone();
    cuts.insert(before);
    cuts.insert(after);
    let index = linear.gates().iter().position(|g| g.source == Some(gate)).expect("every gate is linearized");
    let reduced = linear.without_gate(index);

    let ancilla = linear.qubits().iter().position(|q| {
        let o = q.origin.unwrap();
        o.start == before && o.end == after
    });
    let mut parts = Vec::with_capacity(2);
    for kind in [ModelKind::X, ModelKind::Z] {
        let mut m = build_model(c, kind).apply_cuts(&cuts)?;
        let (left, _) = m.sides(before).unwrap();
        let (_, right) = m.sides(after).unwrap();
        let (anc_start, anc_end) = arc_vars(&m, before, after);
        let anc = ends(anc_start, anc_end, d);
        let pin = kind == ModelKind::Z;
        let qubits: Vec<Option<Ends>> = linear
            .qubits()
            .iter()
            .enumerate()
            .map(|(q, lq)| {
                if Some(q) == ancilla {
                    return None;
                }
                let o = lq.origin.unwrap();
                let (mut s, mut e) = arc_vars(&m, o.start, o.end);
                if o.start == before {
                    s = right;
                }
                if o.end == after {
                    e = left;
                }
                Some(ends(s, e, d))
            })
            .collect();
        if !base.contains(before) && !base.contains(after) {
            m.push_join(before, left, right);
        }
        let s = to_parity_system(&m)?;
        let mut map = single_input_map(&s, &qubits, &[(anc.input, pin)])?;
        if let Some(a) = ancilla {
            map[a] = BTreeSet::from([a]);
        }
        parts.push(map);
    }
    let z = parts.pop().unwrap();
    let x = parts.pop().unwrap();
    Ok(FaultDerivation { cuts, ancilla, reduced, map: StabiliserMap { x, z } })
}

/// Satisfying assignments of a small parity system, by enumeration.
pub fn enumerate_solutions(s: &ParitySystem) -> Vec<Vec<bool>> {
    let n = s.variable_count();
    assert!(n <= 20, "enumeration limited to 20 variables");
    (0u32..1 << n)
        .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|x| s.is_satisfied_by(x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> CircularCircuit {
        CircularCircuit::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap()
    }

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn swap_radial_cut_swaps() {
        let cuts = CutSet::from_pairs(&[(0, 2), (1, 2)]).unwrap();
        let r = derive_transformations(&swap(), &cuts, Direction::Clockwise).unwrap();
        assert_eq!(r.map.x, [set(&[1]), set(&[0])]);
        assert_eq!(r.map.z, [set(&[1]), set(&[0])]);
    }

    #[test]
    fn other_radial_cut_is_one_cnot() {
        let cuts = CutSet::from_pairs(&[(0, 1), (1, 1)]).unwrap();
        let r = derive_transformations(&swap(), &cuts, Direction::Clockwise).unwrap();
        // the two 0->1 gates cancel, leaving a CNOT controlled by qubit 1
        assert_eq!(r.map.x, [set(&[0]), set(&[0, 1])]);
        assert_eq!(r.map.z, [set(&[0, 1]), set(&[1])]);
    }

    #[test]
    fn combined_model_agrees() {
        let cuts = CutSet::from_pairs(&[(0, 0), (0, 1), (0, 2), (1, 2)]).unwrap();
        for d in Direction::BOTH {
            let r = derive_transformations(&swap(), &cuts, d).unwrap();
            assert_eq!(derive_combined(&swap(), &cuts, d).unwrap(), r.map);
        }
    }

    #[test]
    fn commutation_examples() {
        let shared_control = CircularCircuit::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(check_commutation_invariance(&shared_control, 0, 1).unwrap());
        let shared_target = CircularCircuit::new(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(check_commutation_invariance(&shared_target, 0, 1).unwrap());
        let chain = CircularCircuit::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!check_commutation_invariance(&chain, 0, 1).unwrap());
        let far = CircularCircuit::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(check_commutation_invariance(&far, 0, 1).is_ok());
        let four = CircularCircuit::new(4, &[(0, 1), (2, 3), (0, 2), (1, 3)]).unwrap();
        assert_eq!(check_commutation_invariance(&four, 0, 2).unwrap_err().code(), "NotAdjacent");
    }

    #[test]
    fn search_budget() {
        let target = StabiliserMap::identity(2);
        assert_eq!(search_cuts(&swap(), &target, 1).unwrap_err().code(), "BudgetTooSmall");
        let five = StabiliserMap::identity(5);
        assert!(search_cuts(&swap(), &five, 4).unwrap().is_empty());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
        assert_eq!(combinations(3, 0), [Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn fault_on_single_cnot_leaves_identity() {
        let c = CircularCircuit::new(2, &[(0, 1)]).unwrap();
        let base = CutSet::radial(&c, 0);
        let f = derive_with_fault(&c, &base, 0, Direction::Clockwise).unwrap();
        assert_eq!(f.cuts, base);
        assert_eq!(f.ancilla, Some(0));
        assert!(f.map.is_identity());
    }
}
