//! Sign-free stabiliser maps: where a single X or Z on each input ends up.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StabiliserMap {
    /// `x[q]`: output qubits carrying X after propagating X from input `q`.
    pub x: Vec<BTreeSet<usize>>,
    /// `z[q]`: output qubits carrying Z after propagating Z from input `q`.
    pub z: Vec<BTreeSet<usize>>,
}

impl StabiliserMap {
    pub fn identity(qubits: usize) -> Self {
        let sets: Vec<BTreeSet<usize>> = (0..qubits).map(|q| BTreeSet::from([q])).collect();
        StabiliserMap { x: sets.clone(), z: sets }
    }

    pub fn qubit_count(&self) -> usize {
        self.x.len()
    }

    /// Map of applying `self` first, then `next`.
    pub fn then(&self, next: &StabiliserMap) -> StabiliserMap {
        let compose = |first: &[BTreeSet<usize>], second: &[BTreeSet<usize>]| -> Vec<BTreeSet<usize>> {
            first
                .iter()
                .map(|outs| {
                    let mut acc = BTreeSet::new();
                    for &o in outs {
                        for &p in &second[o] {
                            if !acc.insert(p) {
                                acc.remove(&p);
                            }
                        }
                    }
                    acc
                })
                .collect()
        };
        StabiliserMap { x: compose(&self.x, &next.x), z: compose(&self.z, &next.z) }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.qubit_count())
    }

    /// Restriction to the listed qubits, renumbered in list order.
    pub fn restrict(&self, keep: &[usize]) -> StabiliserMap {
        let pos = |q: usize| keep.iter().position(|&k| k == q);
        let pick = |sets: &[BTreeSet<usize>]| -> Vec<BTreeSet<usize>> {
            keep.iter().map(|&q| sets[q].iter().filter_map(|&o| pos(o)).collect()).collect()
        };
        StabiliserMap { x: pick(&self.x), z: pick(&self.z) }
    }

    /// Report lines `X<q> -> X{...}` then `Z<q> -> Z{...}`.
    pub fn report(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut x: Vec<Option<BTreeSet<usize>>> = Vec::new();
        let mut z: Vec<Option<BTreeSet<usize>>> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| Error::Syntax { line: n + 1, message: message.to_string() };
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| err("expected `->`"))?;
            let (lhs, rhs) = (lhs.trim(), rhs.trim());
            let kind = lhs.chars().next().ok_or_else(|| err("missing Pauli kind"))?;
            let q: usize = lhs[1..].parse().map_err(|_| err("bad qubit index"))?;
            let body = rhs
                .strip_prefix(kind)
                .and_then(|r| r.strip_prefix('{'))
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| err("expected `K{...}` with matching kind"))?;
            let set = body
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err("bad output index")))
                .collect::<Result<BTreeSet<_>>>()?;
            let table = match kind {
                'X' => &mut x,
                'Z' => &mut z,
                _ => return Err(err("Pauli kind must be X or Z")),
            };
            if table.len() <= q {
                table.resize(q + 1, None);
            }
            table[q] = Some(set);
        }
        let n = x.len().max(z.len());
        let finish = |t: Vec<Option<BTreeSet<usize>>>, name: char| -> Result<Vec<BTreeSet<usize>>> {
            let mut t = t;
            t.resize(n, None);
            t.into_iter()
                .enumerate()
                .map(|(q, s)| s.ok_or_else(|| Error::Syntax { line: 0, message: format!("missing {name}{q}") }))
                .collect()
        };
        let map = StabiliserMap { x: finish(x, 'X')?, z: finish(z, 'Z')? };
        if map.x.iter().chain(&map.z).flatten().any(|&o| o >= n) {
            return Err(Error::Syntax { line: 0, message: "output index out of range".into() });
        }
        Ok(map)
    }
}

fn set_str(s: &BTreeSet<usize>) -> String {
    s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for StabiliserMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, s) in self.x.iter().enumerate() {
            writeln!(f, "X{q} -> X{{{}}}", set_str(s))?;
        }
        for (q, s) in self.z.iter().enumerate() {
            writeln!(f, "Z{q} -> Z{{{}}}", set_str(s))?;
        }
        Ok(())
    }
}
