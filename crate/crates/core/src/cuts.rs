//! Cut points, cut-set validation and linearization of circular circuits.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circuit::{ArcOrigin, CircularCircuit, Gap, LinearCircuit, LinearGate, LinearQubit, WireId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CutPoint {
    pub gap: Gap,
}

impl From<Gap> for CutPoint {
    fn from(gap: Gap) -> Self {
        CutPoint { gap }
    }
}

/// A set of cut points, at most one per gap, ordered by `(wire, gap)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Gap>", into = "Vec<Gap>")]
pub struct CutSet {
    cuts: BTreeSet<Gap>,
}

impl TryFrom<Vec<Gap>> for CutSet {
    type Error = Error;
    fn try_from(gaps: Vec<Gap>) -> Result<Self> {
        CutSet::new(gaps)
    }
}

impl From<CutSet> for Vec<Gap> {
    fn from(c: CutSet) -> Self {
        c.cuts.into_iter().collect()
    }
}

impl CutSet {
    pub fn new(gaps: impl IntoIterator<Item = Gap>) -> Result<Self> {
        let mut cuts = BTreeSet::new();
        for gap in gaps {
            if !cuts.insert(gap) {
                return Err(Error::DuplicateCut { wire: gap.wire.0, gap: gap.index });
            }
        }
        Ok(CutSet { cuts })
    }

    /// Convenience constructor from `(wire, gap)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(w, g)| Gap::new(w, g)))
    }

    /// One cut per wire at `angle`.
    pub fn radial(c: &CircularCircuit, angle: usize) -> Self {
        CutSet { cuts: (0..c.wire_count()).map(|w| c.gap_at(w, angle)).collect() }
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn contains(&self, gap: Gap) -> bool {
        self.cuts.contains(&gap)
    }

    pub fn iter(&self) -> impl Iterator<Item = Gap> + '_ {
        self.cuts.iter().copied()
    }

    pub fn insert(&mut self, gap: Gap) -> bool {
        self.cuts.insert(gap)
    }

    /// Cut gaps on `wire`, ascending.
    pub fn on_wire(&self, wire: usize) -> Vec<usize> {
        self.cuts.iter().filter(|g| g.wire.0 == wire).map(|g| g.index).collect()
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cuts.iter().map(Gap::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    Clockwise,
    CounterClockwise,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Clockwise, Direction::CounterClockwise];

    pub fn short(self) -> &'static str {
        match self {
            Direction::Clockwise => "cw",
            Direction::CounterClockwise => "ccw",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

/// Every gap of `c`, ordered by `(wire, index)`.
pub fn enumerate_cut_points(c: &CircularCircuit) -> Vec<CutPoint> {
    (0..c.wire_count())
        .flat_map(|w| (0..c.gap_count(w)).map(move |i| CutPoint { gap: Gap::new(w, i) }))
        .collect()
}

/// Angles at which every wire is cut.
pub fn radial_angles(c: &CircularCircuit, cuts: &CutSet) -> Vec<usize> {
    (0..c.angle_count())
        .filter(|&a| (0..c.wire_count()).all(|w| cuts.contains(c.gap_at(w, a))))
        .collect()
}

fn check_gaps(c: &CircularCircuit, cuts: &CutSet) -> Result<()> {
    if cuts.is_empty() {
        return Err(Error::EmptyCutSet);
    }
    for gap in cuts.iter() {
        if !c.has_gap(gap) {
            return Err(Error::UnknownGap { wire: gap.wire.0, gap: gap.index });
        }
    }
    Ok(())
}

/// Accepts `cuts` when it contains a radial family and the induced
/// linearization is structurally sound. Returns the first radial angle.
pub fn validate_cut_set(c: &CircularCircuit, cuts: &CutSet) -> Result<usize> {
    check_gaps(c, cuts)?;
    let angles = radial_angles(c, cuts);
    let Some(&angle) = angles.first() else {
        // wires missing a cut at some angle; a wire missing at every angle is
        // listed, otherwise every wire that is ever missing
        let mut always = Vec::new();
        let mut sometimes = BTreeSet::new();
        for w in 0..c.wire_count() {
            let missing: Vec<_> = (0..c.angle_count()).filter(|&a| !cuts.contains(c.gap_at(w, a))).collect();
            if missing.len() == c.angle_count() {
                always.push(w);
            }
            if !missing.is_empty() {
                sometimes.insert(w);
            }
        }
        let wires = if always.is_empty() { sometimes.into_iter().collect() } else { always };
        return Err(Error::NoRadialCut { wires });
    };
    linearize_at(c, cuts, angle, Direction::Clockwise)?;
    Ok(angle)
}

/// Linearizes at the first radial angle of `cuts`.
pub fn linearize(c: &CircularCircuit, cuts: &CutSet, d: Direction) -> Result<LinearCircuit> {
    let angle = validate_cut_set(c, cuts)?;
    linearize_at(c, cuts, angle, d)
}

struct Arc {
    wire: usize,
    start: usize,
    end: usize,
    /// Symbol indices in clockwise order after `start`.
    symbols: Vec<usize>,
}

fn wire_arcs(c: &CircularCircuit, cuts: &CutSet, wire: usize, first: usize) -> Vec<Arc> {
    let k = c.gap_count(wire);
    let cut = cuts.on_wire(wire);
    let begin = cut.iter().position(|&g| g == first).unwrap_or(0);
    let order: Vec<usize> = (0..cut.len()).map(|i| cut[(begin + i) % cut.len()]).collect();
    order
        .iter()
        .enumerate()
        .map(|(i, &start)| {
            let end = order[(i + 1) % order.len()];
            let mut symbols = Vec::new();
            let mut s = (start + 1) % k;
            loop {
                symbols.push(s);
                if s == end {
                    break;
                }
                s = (s + 1) % k;
            }
            Arc { wire, start, end, symbols }
        })
        .collect()
}

/// Linearizes starting at `angle` without requiring the cut set to be radial
/// there; arcs running across the start or uncut wires are reported as
/// structural errors.
pub fn linearize_at(c: &CircularCircuit, cuts: &CutSet, angle: usize, d: Direction) -> Result<LinearCircuit> {
    check_gaps(c, cuts)?;
    let n = c.angle_count();
    let unrolled = |slot: usize| (slot + n - angle % n) % n;
    let slot_of_pos = |pos: usize| c.gates().iter().position(|g| g.position == pos).unwrap();

    let mut qubits = Vec::new();
    // (wire, symbol index) -> qubit
    let mut owner: Vec<Vec<usize>> = (0..c.wire_count()).map(|w| vec![usize::MAX; c.gap_count(w)]).collect();
    for (w, owned) in owner.iter_mut().enumerate() {
        if cuts.on_wire(w).is_empty() {
            return Err(Error::ClosedWire { wire: w });
        }
        let first = c.gap_at(w, angle).index;
        for arc in wire_arcs(c, cuts, w, first) {
            let times: Vec<usize> =
                arc.symbols.iter().map(|&s| unrolled(slot_of_pos(c.symbols(w)[s].position))).collect();
            if times.windows(2).any(|t| t[0] > t[1]) {
                return Err(Error::StraddlingArc { wire: w });
            }
            let q = qubits.len();
            for &s in &arc.symbols {
                owned[s] = q;
            }
            let (start, end) = (Gap::new(arc.wire, arc.start), Gap::new(arc.wire, arc.end));
            let (input, output) = match d {
                Direction::Clockwise => (start, end),
                Direction::CounterClockwise => (end, start),
            };
            qubits.push(LinearQubit {
                origin: Some(ArcOrigin { wire: WireId(w), start, end }),
                input: Some(input),
                output: Some(output),
            });
        }
    }

    let mut slots: Vec<usize> = (0..n).map(|i| (angle + i) % n).collect();
    if d == Direction::CounterClockwise {
        slots.reverse();
    }
    let gates = slots
        .iter()
        .enumerate()
        .map(|(time, &slot)| {
            let g = &c.gates()[slot];
            let ci = c.symbol_index(g.control.0, g.id).unwrap();
            let ti = c.symbol_index(g.target.0, g.id).unwrap();
            LinearGate { control: owner[g.control.0][ci], target: owner[g.target.0][ti], time, source: Some(g.id) }
        })
        .collect();
    Ok(LinearCircuit::from_parts(qubits, gates))
}
