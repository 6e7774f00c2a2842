//! Boolean (XOR-clause) models of circular CNOT circuits.
//!
//! Each wire is split into segments. Which gate symbols split a wire depends
//! on the model:
//!
//! | model    | boundaries           | crossing symbol |
//! |----------|----------------------|-----------------|
//! | X        | gaps, targets `⊕`    | control `•`     |
//! | Z        | gaps, controls `•`   | target `⊕`      |
//! | Combined | gaps, both symbols   | none            |
//!
//! Every gate contributes one CNOT clause over the segments before and after
//! its splitting symbol and the segment running over its crossing symbol;
//! every gap contributes one join clause equating the segments on either side.
//! A cut removes the join of its gap.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circuit::{CircularCircuit, Gap, SymbolKind};
use crate::cuts::CutSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    X,
    Z,
    Combined,
}

impl ModelKind {
    fn splits(self, kind: SymbolKind) -> bool {
        match self {
            ModelKind::X => kind == SymbolKind::Target,
            ModelKind::Z => kind == SymbolKind::Control,
            ModelKind::Combined => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SegmentId {
    pub wire: usize,
    pub index: usize,
}

impl fmt::Display for SegmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}s{}", self.wire, self.index)
    }
}

/// A segment endpoint: a gap or the symbol with the given index on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Boundary {
    Gap(usize),
    Symbol(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub id: SegmentId,
    pub start: Boundary,
    pub end: Boundary,
    /// Symbol indices running through the segment without splitting it.
    pub crossing: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    /// `before + after + crossing = 0`
    Cnot { gate: usize, before: usize, after: usize, crossing: usize },
    /// `r + t = 0`
    Join { gap: Gap, r: usize, t: usize },
    /// Selector-gated clause of the combined model.
    CombinedCnot { gate: usize, control_before: usize, control_after: usize, target_before: usize, target_after: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanModel {
    kind: ModelKind,
    segments: Vec<Segment>,
    clauses: Vec<Clause>,
    /// Segments `(before, after)` on either side of every gap.
    sides: BTreeMap<Gap, (usize, usize)>,
    /// Clause index of every gap's join; `None` for dropped self-joins.
    gap_to_join: BTreeMap<Gap, Option<usize>>,
    cut: BTreeSet<Gap>,
    selector: Option<bool>,
}

struct WireSegments {
    /// Segment (global index) ending at each boundary position.
    ending_at_gap: Vec<usize>,
    starting_at_gap: Vec<usize>,
    /// Per symbol: (before, after) if it splits, otherwise the segment containing it.
    around_symbol: Vec<(usize, usize)>,
}

fn segment_wire(c: &CircularCircuit, kind: ModelKind, wire: usize, segments: &mut Vec<Segment>) -> WireSegments {
    let symbols = c.symbols(wire);
    let mut bounds = Vec::new();
    for (i, s) in symbols.iter().enumerate() {
        if kind.splits(s.kind) {
            bounds.push(Boundary::Symbol(i));
        }
        bounds.push(Boundary::Gap(i));
    }
    let base = segments.len();
    let m = bounds.len();
    let k = symbols.len();
    let mut ending_at_gap = vec![0; k];
    let mut starting_at_gap = vec![0; k];
    let mut around_symbol = vec![(0, 0); k];
    for j in 0..m {
        let (start, end) = (bounds[j], bounds[(j + 1) % m]);
        let mut crossing = Vec::new();
        // a non-splitting symbol i sits directly before Gap(i), after Gap(i - 1)
        if let (Boundary::Gap(g), Boundary::Gap(h)) = (start, end) {
            let i = (g + 1) % k;
            if i == h && !kind.splits(symbols[i].kind) {
                crossing.push(i);
                around_symbol[i] = (base + j, base + j);
            }
        }
        if let Boundary::Gap(g) = start {
            starting_at_gap[g] = base + j;
        }
        if let Boundary::Gap(g) = end {
            ending_at_gap[g] = base + j;
        }
        if let Boundary::Symbol(i) = end {
            around_symbol[i].0 = base + j;
        }
        if let Boundary::Symbol(i) = start {
            around_symbol[i].1 = base + j;
        }
        segments.push(Segment { id: SegmentId { wire, index: j }, start, end, crossing });
    }
    WireSegments { ending_at_gap, starting_at_gap, around_symbol }
}

fn build(c: &CircularCircuit, kind: ModelKind) -> BooleanModel {
    let mut segments = Vec::new();
    let per_wire: Vec<WireSegments> =
        (0..c.wire_count()).map(|w| segment_wire(c, kind, w, &mut segments)).collect();
    let mut clauses = Vec::new();
    for g in c.gates() {
        let (cw, tw) = (g.control.0, g.target.0);
        let ci = c.symbol_index(cw, g.id).unwrap();
        let ti = c.symbol_index(tw, g.id).unwrap();
        let (cb, ca) = per_wire[cw].around_symbol[ci];
        let (tb, ta) = per_wire[tw].around_symbol[ti];
        clauses.push(match kind {
            ModelKind::X => Clause::Cnot { gate: g.id, before: tb, after: ta, crossing: cb },
            ModelKind::Z => Clause::Cnot { gate: g.id, before: cb, after: ca, crossing: tb },
            ModelKind::Combined => Clause::CombinedCnot {
                gate: g.id,
                control_before: cb,
                control_after: ca,
                target_before: tb,
                target_after: ta,
            },
        });
    }
    let mut sides = BTreeMap::new();
    let mut gap_to_join = BTreeMap::new();
    for (w, ws) in per_wire.iter().enumerate() {
        for i in 0..c.gap_count(w) {
            let gap = Gap::new(w, i);
            let (r, t) = (ws.ending_at_gap[i], ws.starting_at_gap[i]);
            sides.insert(gap, (r, t));
            if r == t {
                gap_to_join.insert(gap, None);
            } else {
                gap_to_join.insert(gap, Some(clauses.len()));
                clauses.push(Clause::Join { gap, r, t });
            }
        }
    }
    BooleanModel { kind, segments, clauses, sides, gap_to_join, cut: BTreeSet::new(), selector: None }
}

/// X or Z model of `c`.
///
/// # Panics
/// When called with [`ModelKind::Combined`]; use [`build_combined_model`].
pub fn build_model(c: &CircularCircuit, kind: ModelKind) -> BooleanModel {
    assert_ne!(kind, ModelKind::Combined, "use build_combined_model");
    build(c, kind)
}

pub fn build_combined_model(c: &CircularCircuit) -> BooleanModel {
    build(c, ModelKind::Combined)
}

impl BooleanModel {
    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn variable_count(&self) -> usize {
        self.segments.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn cnot_clause_count(&self) -> usize {
        self.clauses.iter().filter(|c| !matches!(c, Clause::Join { .. })).count()
    }

    pub fn join_clause_count(&self) -> usize {
        self.clauses.iter().filter(|c| matches!(c, Clause::Join { .. })).count()
    }

    pub fn join_of(&self, gap: Gap) -> Option<usize> {
        self.gap_to_join.get(&gap).copied().flatten()
    }

    /// Variables `(before, after)` on either side of `gap`.
    pub fn sides(&self, gap: Gap) -> Option<(usize, usize)> {
        self.sides.get(&gap).copied()
    }

    pub fn cut_gaps(&self) -> &BTreeSet<Gap> {
        &self.cut
    }

    pub fn selector(&self) -> Option<bool> {
        self.selector
    }

    /// Pins the selector of a combined model: `true` tracks X, `false` tracks Z.
    pub fn with_selector(mut self, x: bool) -> Self {
        self.selector = Some(x);
        self
    }

    pub fn variable(&self, id: SegmentId) -> Option<usize> {
        self.segments.iter().position(|s| s.id == id)
    }

    pub fn segment_id(&self, var: usize) -> SegmentId {
        self.segments[var].id
    }

    /// Variables adjacent to cut endpoints.
    pub fn boundary_variables(&self) -> BTreeSet<usize> {
        self.cut.iter().flat_map(|g| {
            let (r, t) = self.sides[g];
            [r, t]
        })
        .collect()
    }

    /// Drops the join clauses of the cut gaps. Clause indices of the remaining
    /// clauses shift accordingly.
    pub fn apply_cuts(&self, cuts: &CutSet) -> Result<BooleanModel> {
        let mut out = self.clone();
        for gap in cuts.iter() {
            if !self.sides.contains_key(&gap) {
                return Err(Error::UnknownGap { wire: gap.wire.0, gap: gap.index });
            }
            if !out.cut.insert(gap) {
                return Err(Error::DuplicateCut { wire: gap.wire.0, gap: gap.index });
            }
        }
        out.clauses.retain(|c| !matches!(c, Clause::Join { gap, .. } if out.cut.contains(gap)));
        let mut map = BTreeMap::new();
        for (i, c) in out.clauses.iter().enumerate() {
            if let Clause::Join { gap, .. } = c {
                map.insert(*gap, i);
            }
        }
        for (gap, slot) in out.gap_to_join.iter_mut() {
            *slot = map.get(gap).copied();
        }
        Ok(out)
    }

    /// Adds a join clause between two arbitrary variables.
    pub(crate) fn push_join(&mut self, gap: Gap, r: usize, t: usize) {
        if r != t {
            self.clauses.push(Clause::Join { gap, r, t });
        }
    }

    /// One clause per line: `C <a> <b> <X>`, `J <r> <t>`, `F <a> <b> <c> <d>`.
    pub fn dump(&self) -> String {
        let name = |v: usize| self.segments[v].id.to_string();
        let mut out = String::new();
        for c in &self.clauses {
            let line = match *c {
                Clause::Cnot { before, after, crossing, .. } => {
                    format!("C {} {} {}", name(before), name(after), name(crossing))
                }
                Clause::Join { r, t, .. } => format!("J {} {}", name(r), name(t)),
                Clause::CombinedCnot { control_before, control_after, target_before, target_after, .. } => format!(
                    "F {} {} {} {}",
                    name(control_before),
                    name(control_after),
                    name(target_before),
                    name(target_after)
                ),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> CircularCircuit {
        CircularCircuit::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn swap_counts() {
        for kind in [ModelKind::X, ModelKind::Z] {
            let m = build_model(&swap(), kind);
            assert_eq!(m.variable_count(), 9);
            assert_eq!(m.cnot_clause_count(), 3);
            assert_eq!(m.join_clause_count(), 6);
        }
    }

    #[test]
    fn single_cnot_x_model_drops_control_self_join() {
        let c = CircularCircuit::new(2, &[(0, 1)]).unwrap();
        let m = build_model(&c, ModelKind::X);
        assert_eq!(m.variable_count(), 3);
        assert_eq!(m.cnot_clause_count(), 1);
        assert_eq!(m.join_clause_count(), 1);
        assert_eq!(m.join_of(Gap::new(0, 0)), None);
        assert!(m.join_of(Gap::new(1, 0)).is_some());
        let Clause::Cnot { before, after, crossing, .. } = m.clauses()[0] else { panic!() };
        assert_eq!(m.segment_id(crossing).wire, 0);
        assert_eq!((m.segment_id(before).wire, m.segment_id(after).wire), (1, 1));
        assert_ne!(before, after);
    }

    #[test]
    fn combined_model_splits_everywhere() {
        let m = build_combined_model(&swap());
        // two segments per symbol
        assert_eq!(m.variable_count(), 12);
        assert_eq!(m.cnot_clause_count(), 3);
        assert_eq!(m.join_clause_count(), 6);
    }

    #[test]
    fn cutting_twice_fails() {
        let m = build_model(&swap(), ModelKind::X);
        let cuts = CutSet::from_pairs(&[(0, 2), (1, 2)]).unwrap();
        let cut = m.apply_cuts(&cuts).unwrap();
        assert_eq!(cut.join_clause_count(), 4);
        assert_eq!(cut.variable_count(), 9);
        assert_eq!(cut.apply_cuts(&cuts).unwrap_err().code(), "DuplicateCut");
        let unknown = CutSet::from_pairs(&[(1, 7)]).unwrap();
        assert_eq!(m.apply_cuts(&unknown).unwrap_err().code(), "UnknownGap");
    }

    #[test]
    fn dump_names_segments() {
        let c = CircularCircuit::new(2, &[(0, 1)]).unwrap();
        let text = build_model(&c, ModelKind::X).dump();
        assert_eq!(text, "C w1s1 w1s0 w0s0\nJ w1s0 w1s1\n");
    }
}
