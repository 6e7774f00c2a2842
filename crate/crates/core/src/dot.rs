//! Graphviz export.

use std::fmt::Write as _;

use crate::circuit::{CircularCircuit, LinearCircuit, SymbolKind};
use crate::cuts::CutSet;

/// Linear circuit: one chain of symbol nodes per qubit, one edge per gate.
pub fn linear_dot(l: &LinearCircuit) -> String {
    let mut out = String::from("digraph linear {\n  rankdir=LR;\n");
    for q in 0..l.qubit_count() {
        let mut chain = vec![format!("q{q}_in")];
        let _ = writeln!(out, "  q{q}_in [shape=plaintext,label=\"q{q}\"];");
        for g in l.touches(q) {
            let node = format!("q{q}_t{}", g.time);
            let label = if g.control == q { "•" } else { "⊕" };
            let _ = writeln!(out, "  {node} [shape=circle,label=\"{label}\"];");
            chain.push(node);
        }
        let _ = writeln!(out, "  q{q}_out [shape=plaintext,label=\"\"];");
        chain.push(format!("q{q}_out"));
        let _ = writeln!(out, "  {} [arrowhead=none];", chain.join(" -> "));
    }
    for g in l.gates() {
        let _ = writeln!(out, "  q{}_t{t} -> q{}_t{t} [color=blue];", g.control, g.target, t = g.time);
    }
    out.push_str("}\n");
    out
}

/// Circular circuit: a cycle of symbol and gap nodes per wire, one edge per
/// gate. Cut gaps are drawn as red boxes.
pub fn circular_dot(c: &CircularCircuit, cuts: Option<&CutSet>) -> String {
    let mut out = String::from("digraph circular {\n");
    for w in 0..c.wire_count() {
        let mut cycle = Vec::new();
        for (i, s) in c.symbols(w).iter().enumerate() {
            let label = if s.kind == SymbolKind::Control { "•" } else { "⊕" };
            let _ = writeln!(out, "  w{w}s{i} [shape=circle,label=\"{label}\"];");
            let gap = crate::circuit::Gap::new(w, i);
            let style = if cuts.is_some_and(|k| k.contains(gap)) {
                "shape=box,color=red,label=\"cut\""
            } else {
                "shape=point"
            };
            let _ = writeln!(out, "  {gap} [{style}];");
            cycle.push(format!("w{w}s{i}"));
            cycle.push(gap.to_string());
        }
        cycle.push(cycle[0].clone());
        let _ = writeln!(out, "  {} [arrowhead=none];", cycle.join(" -> "));
    }
    for g in c.gates() {
        let ci = c.symbol_index(g.control.0, g.id).unwrap();
        let ti = c.symbol_index(g.target.0, g.id).unwrap();
        let _ = writeln!(out, "  w{}s{ci} -> w{}s{ti} [color=blue,label=\"{}\"];", g.control, g.target, g.id);
    }
    out.push_str("}\n");
    out
}
