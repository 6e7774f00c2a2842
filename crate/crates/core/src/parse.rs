//! Line-oriented text formats.
//!
//! Statements are separated by newlines or `;`, and `#` starts a comment.
//!
//! ```text
//! circular            # or: linear
//! wires 2
//! cnot 0 1            # control, target
//!
//! cut 0 2             # wire, gap
//! direction cw        # or: ccw
//!
//! icm
//! wires 2
//! cnot 1 0
//! init 0 in:phi       # zero | plus | y | a | in:<name>
//! init 1 plus
//! measure 0 z         # x | y | z | a | cfg:<b1>/<b2> | none
//! correct 0 1 x 1     # measured, nominal outcome, pauli, target
//!
//! program
//! qubits 1
//! h 0                 # cnot t tdg p pdg v h
//!
//! smgf 1              # gate id
//! ```

use std::fmt::Write as _;

use crate::circuit::{CircularCircuit, LinearCircuit};
use crate::cuts::{CutSet, Direction};
use crate::error::{Error, Result};
use crate::icm::{configure, Basis, Correction, FaultSpec, ICMCircuit, InitBasis, MeasBasis, Program, QubitConfig};
use crate::oracle::Pauli;
use crate::Gap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedCircuit {
    Linear(LinearCircuit),
    Circular(CircularCircuit),
}

struct Stmt<'a> {
    line: usize,
    words: Vec<&'a str>,
}

impl Stmt<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, message: message.into() }
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.words.len() != n + 1 {
            return Err(self.err(format!("`{}` takes {n} argument(s)", self.words[0])));
        }
        Ok(())
    }

    fn num(&self, i: usize) -> Result<usize> {
        self.words[i].parse().map_err(|_| self.err(format!("expected a number, found `{}`", self.words[i])))
    }
}

fn statements(text: &str) -> Vec<Stmt<'_>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        for part in body.split(';') {
            let words: Vec<&str> = part.split_whitespace().collect();
            if !words.is_empty() {
                out.push(Stmt { line: n + 1, words });
            }
        }
    }
    out
}

/// Splits off the header statement and the `wires`/`qubits` count.
fn header<'a>(stmts: &'a [Stmt<'a>], accepted: &[&str]) -> Result<(&'a str, usize, &'a [Stmt<'a>])> {
    let first = stmts.first().ok_or(Error::Syntax { line: 1, message: "empty input".into() })?;
    if first.words.len() != 1 || !accepted.contains(&first.words[0]) {
        return Err(first.err(format!("expected header {}", accepted.join(" or "))));
    }
    let count = stmts.get(1).ok_or_else(|| first.err("missing `wires` statement"))?;
    if !matches!(count.words[0], "wires" | "qubits") {
        return Err(count.err("expected `wires <n>`"));
    }
    count.arity(1)?;
    Ok((first.words[0], count.num(1)?, &stmts[2..]))
}

fn cnot(s: &Stmt<'_>) -> Result<(usize, usize)> {
    s.arity(2)?;
    Ok((s.num(1)?, s.num(2)?))
}

pub fn parse_circuit(text: &str) -> Result<ParsedCircuit> {
    let stmts = statements(text);
    let (kind, wires, body) = header(&stmts, &["linear", "circular"])?;
    let mut gates = Vec::new();
    for s in body {
        match s.words[0] {
            "cnot" => gates.push(cnot(s)?),
            other => return Err(s.err(format!("unknown statement `{other}`"))),
        }
    }
    Ok(match kind {
        "linear" => ParsedCircuit::Linear(LinearCircuit::new(wires, &gates)?),
        _ => ParsedCircuit::Circular(CircularCircuit::new(wires, &gates)?),
    })
}

pub fn parse_cuts(text: &str) -> Result<(CutSet, Option<Direction>)> {
    let mut gaps = Vec::new();
    let mut direction = None;
    for s in statements(text) {
        match s.words[0] {
            "cut" => {
                s.arity(2)?;
                gaps.push(Gap::new(s.num(1)?, s.num(2)?));
            }
            "direction" => {
                s.arity(1)?;
                direction = Some(match s.words[1] {
                    "cw" => Direction::Clockwise,
                    "ccw" => Direction::CounterClockwise,
                    other => return Err(s.err(format!("unknown direction `{other}`"))),
                });
            }
            other => return Err(s.err(format!("unknown statement `{other}`"))),
        }
    }
    Ok((CutSet::new(gaps)?, direction))
}

fn parse_init(s: &Stmt<'_>, word: &str) -> Result<InitBasis> {
    Ok(match word {
        "zero" | "0" => InitBasis::Zero,
        "plus" | "+" => InitBasis::Plus,
        "y" => InitBasis::Y,
        "a" => InitBasis::A,
        _ => match word.strip_prefix("in:") {
            Some(name) if !name.is_empty() => InitBasis::Input(name.to_string()),
            _ => return Err(s.err(format!("unknown initialisation `{word}`"))),
        },
    })
}

fn parse_meas(s: &Stmt<'_>, word: &str) -> Result<MeasBasis> {
    if word == "none" {
        return Ok(MeasBasis::None);
    }
    if let Some(pair) = word.strip_prefix("cfg:") {
        let (a, b) = pair.split_once('/').ok_or_else(|| s.err("expected `cfg:<b1>/<b2>`"))?;
        let a = Basis::parse(a).ok_or_else(|| s.err(format!("unknown basis `{a}`")))?;
        let b = Basis::parse(b).ok_or_else(|| s.err(format!("unknown basis `{b}`")))?;
        return Ok(MeasBasis::Configurable(a, b));
    }
    Basis::parse(word).map(MeasBasis::from).ok_or_else(|| s.err(format!("unknown measurement `{word}`")))
}

pub fn parse_icm(text: &str) -> Result<ICMCircuit> {
    let stmts = statements(text);
    let (_, qubits, body) = header(&stmts, &["icm", "linear"])?;
    let mut gates = Vec::new();
    let mut inits: Vec<Option<InitBasis>> = vec![None; qubits];
    let mut meas = vec![MeasBasis::None; qubits];
    let mut corrections = Vec::new();
    let qubit = |s: &Stmt<'_>, i: usize| -> Result<usize> {
        let q = s.num(i)?;
        if q >= qubits {
            return Err(Error::QubitOutOfRange { qubit: q, qubits });
        }
        Ok(q)
    };
    for s in body {
        match s.words[0] {
            "cnot" => gates.push(cnot(s)?),
            "init" => {
                s.arity(2)?;
                inits[qubit(s, 1)?] = Some(parse_init(s, s.words[2])?);
            }
            "measure" => {
                s.arity(2)?;
                meas[qubit(s, 1)?] = parse_meas(s, s.words[2])?;
            }
            "correct" => {
                s.arity(4)?;
                let pauli = match s.words[3] {
                    "x" => Pauli::X,
                    "z" => Pauli::Z,
                    other => return Err(s.err(format!("unknown correction `{other}`"))),
                };
                let nominal = s.num(2)?;
                if nominal > 1 {
                    return Err(s.err("outcome must be 0 or 1"));
                }
                corrections.push(Correction { measured: qubit(s, 1)?, nominal: nominal as u8, pauli, target: qubit(s, 4)? });
            }
            other => return Err(s.err(format!("unknown statement `{other}`"))),
        }
    }
    let l = LinearCircuit::new(qubits, &gates)?;
    let configs = inits
        .into_iter()
        .zip(meas)
        .enumerate()
        .map(|(q, (init, meas))| {
            let init = init.ok_or(Error::Syntax { line: 0, message: format!("qubit {q} has no `init`") })?;
            Ok(QubitConfig::inferred(init, meas))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(configure(&l, configs)?.with_corrections(corrections))
}

pub fn parse_program(text: &str) -> Result<Program> {
    let stmts = statements(text);
    let (_, qubits, body) = header(&stmts, &["program"])?;
    let mut p = Program::new(qubits);
    for s in body {
        let args = (1..s.words.len()).map(|i| s.num(i)).collect::<Result<Vec<_>>>()?;
        p.push_named(s.words[0], &args)?;
    }
    Ok(p)
}

pub fn parse_fault(text: &str) -> Result<FaultSpec> {
    let stmts = statements(text);
    match stmts.as_slice() {
        [s] if s.words[0] == "smgf" => {
            s.arity(1)?;
            Ok(FaultSpec { gate: s.num(1)? })
        }
        [s, ..] => Err(s.err("expected a single `smgf <gate>` statement")),
        [] => Err(Error::Syntax { line: 1, message: "empty fault spec".into() }),
    }
}

fn gate_lines(out: &mut String, pairs: &[(usize, usize)]) {
    for (c, t) in pairs {
        let _ = writeln!(out, "cnot {c} {t}");
    }
}

pub fn format_linear(l: &LinearCircuit) -> String {
    let mut out = format!("linear\nwires {}\n", l.qubit_count());
    gate_lines(&mut out, &l.gate_pairs());
    out
}

pub fn format_circular(c: &CircularCircuit) -> String {
    let mut out = format!("circular\nwires {}\n", c.wire_count());
    gate_lines(&mut out, &c.gate_pairs());
    out
}

pub fn format_cuts(cuts: &CutSet, d: Option<Direction>) -> String {
    let mut out = String::new();
    for g in cuts.iter() {
        let _ = writeln!(out, "cut {} {}", g.wire, g.index);
    }
    if let Some(d) = d {
        let _ = writeln!(out, "direction {d}");
    }
    out
}

pub fn format_icm(icm: &ICMCircuit) -> String {
    let mut out = format!("icm\nwires {}\n", icm.qubit_count());
    gate_lines(&mut out, &icm.circuit().gate_pairs());
    for (q, cfg) in icm.configs().iter().enumerate() {
        let _ = writeln!(out, "init {q} {}", cfg.init);
    }
    for (q, cfg) in icm.configs().iter().enumerate() {
        if cfg.meas.is_measured() {
            let _ = writeln!(out, "measure {q} {}", cfg.meas);
        }
    }
    for c in icm.corrections() {
        let p = if c.pauli == Pauli::X { "x" } else { "z" };
        let _ = writeln!(out, "correct {} {} {p} {}", c.measured, c.nominal, c.target);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icm::{gadget, translate_to_icm, GadgetKind};

    #[test]
    fn linear_swap() {
        let ParsedCircuit::Linear(l) = parse_circuit("linear; wires 2; cnot 0 1; cnot 1 0; cnot 0 1").unwrap() else {
            panic!()
        };
        assert_eq!(l.gate_pairs(), [(0, 1), (1, 0), (0, 1)]);
        let ParsedCircuit::Linear(l) = parse_circuit("linear; wires 1").unwrap() else { panic!() };
        assert_eq!((l.qubit_count(), l.gates().len()), (1, 0));
    }

    #[test]
    fn errors_carry_codes_and_lines() {
        assert_eq!(parse_circuit("linear; wires 2; cnot 0 0").unwrap_err().code(), "ControlEqualsTarget");
        assert_eq!(parse_circuit("linear\nwires 2\ncnot 0 5").unwrap_err().code(), "WireOutOfRange");
        assert_eq!(parse_circuit("circular; wires 1").unwrap_err().code(), "EmptyWire");
        assert_eq!(
            parse_circuit("linear\nwires 2\n\ntoffoli 0 1").unwrap_err(),
            Error::Syntax { line: 4, message: "unknown statement `toffoli`".into() }
        );
        assert_eq!(parse_circuit("wires 2").unwrap_err().code(), "Syntax");
    }

    #[test]
    fn cuts_and_direction() {
        let (cuts, d) = parse_cuts("cut 0 2 # radial\ncut 1 2\ndirection ccw").unwrap();
        assert_eq!(cuts, CutSet::from_pairs(&[(0, 2), (1, 2)]).unwrap());
        assert_eq!(d, Some(Direction::CounterClockwise));
        assert_eq!(parse_cuts(&format_cuts(&cuts, d)).unwrap(), (cuts, d));
        assert_eq!(parse_cuts("cut 0 1; cut 0 1").unwrap_err().code(), "DuplicateCut");
    }

    #[test]
    fn icm_round_trip() {
        for k in GadgetKind::ALL {
            let g = gadget(k);
            assert_eq!(parse_icm(&format_icm(&g)).unwrap(), g, "{k}");
        }
        let t = translate_to_icm(&crate::icm::Program::toffoli()).unwrap();
        assert_eq!(parse_icm(&format_icm(&t.icm)).unwrap(), t.icm);
        assert_eq!(parse_icm("icm; wires 1; measure 0 z").unwrap_err().code(), "Syntax");
    }

    #[test]
    fn programs_and_faults() {
        let p = parse_program("program; qubits 2; h 0; cnot 0 1; tdg 1").unwrap();
        assert_eq!(p.gates.len(), 3);
        assert_eq!(parse_program("program; qubits 1; rz 0").unwrap_err().code(), "UnknownGate");
        assert_eq!(parse_fault("smgf 2").unwrap(), FaultSpec { gate: 2 });
        assert!(parse_fault("smgf").is_err());
    }
}
