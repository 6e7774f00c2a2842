//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use circular_cnot::circuit::{CircularCircuit, LinearCircuit};
use circular_cnot::cuts::CutSet;
use circular_cnot::model::{BooleanModel, Clause};
use circular_cnot::stabmap::StabiliserMap;
use num_complex::Complex64;

pub fn swap() -> CircularCircuit {
    CircularCircuit::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap()
}

pub fn single_cnot() -> CircularCircuit {
    CircularCircuit::new(2, &[(0, 1)]).unwrap()
}

/// The four worked cut sets of the circular SWAP, with expected qubit counts.
pub fn swap_cut_fixtures() -> Vec<(&'static str, CutSet, usize)> {
    vec![
        ("swap", CutSet::from_pairs(&[(0, 2), (1, 2)]).unwrap(), 2),
        ("single-cnot", CutSet::from_pairs(&[(0, 1), (1, 1)]).unwrap(), 2),
        ("teleported-cnot", CutSet::from_pairs(&[(0, 0), (0, 1), (0, 2), (1, 2)]).unwrap(), 4),
        ("selective-destination", CutSet::from_pairs(&[(0, 1), (0, 2), (1, 0), (1, 1)]).unwrap(), 4),
    ]
}

pub fn set(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}

pub fn swap_map() -> StabiliserMap {
    StabiliserMap { x: vec![set(&[1]), set(&[0])], z: vec![set(&[1]), set(&[0])] }
}

/// CNOT with control `c` and target `t` on two qubits.
pub fn cnot_map(c: usize, t: usize) -> StabiliserMap {
    let mut m = StabiliserMap::identity(2);
    m.x[c] = set(&[c, t]);
    m.z[t] = set(&[c, t]);
    m
}

/// Every circuit with `wires` wires and `gates` gates in which each wire is
/// used, keeping only the lexicographically smallest wire relabeling.
pub fn canonical_circuits(wires: usize, gates: usize) -> Vec<CircularCircuit> {
    let pairs: Vec<(usize, usize)> =
        (0..wires).flat_map(|c| (0..wires).filter(move |&t| t != c).map(move |t| (c, t))).collect();
    let perms = permutations(wires);
    let mut out = Vec::new();
    let mut idx = vec![0usize; gates];
    loop {
        let list: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        let used: BTreeSet<usize> = list.iter().flat_map(|&(c, t)| [c, t]).collect();
        if used.len() == wires {
            let minimal = perms.iter().all(|p| {
                let renamed: Vec<(usize, usize)> = list.iter().map(|&(c, t)| (p[c], p[t])).collect();
                list <= renamed
            });
            if minimal {
                out.push(CircularCircuit::new(wires, &list).unwrap());
            }
        }
        let Some(k) = (0..gates).rev().find(|&k| idx[k] + 1 < pairs.len()) else { break };
        idx[k] += 1;
        idx[k + 1..].fill(0);
    }
    out
}

/// The exhaustive family: 2 or 3 wires, 1 to 4 gates.
pub fn small_family() -> Vec<CircularCircuit> {
    let mut out = Vec::new();
    for wires in 2..=3 {
        for gates in 1..=4 {
            out.extend(canonical_circuits(wires, gates));
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every non-empty cut subset of at most `max` gaps.
pub fn cut_subsets(c: &CircularCircuit, max: usize) -> Vec<CutSet> {
    let gaps: Vec<_> = circular_cnot::cuts::enumerate_cut_points(c).into_iter().map(|p| p.gap).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << gaps.len() {
        if mask.count_ones() as usize <= max {
            out.push(CutSet::new((0..gaps.len()).filter(|i| mask >> i & 1 == 1).map(|i| gaps[i])).unwrap());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Dense unitary oracle: conjugates Pauli matrices by the circuit's permutation
// matrix and identifies the resulting Pauli string by dense comparison.

type Mat = Vec<Vec<Complex64>>;

fn pauli_1q(k: usize) -> [[Complex64; 2]; 2] {
    let (o, z, i) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
    match k {
        0 => [[o, z], [z, o]],
        1 => [[z, o], [o, z]],
        2 => [[z, -i], [i, z]],
        _ => [[o, z], [z, -o]],
    }
}

/// Tensor product; letter `q` of `word` acts on qubit `q` (bit `q`).
fn pauli_matrix(word: &[usize]) -> Mat {
    let dim = 1 << word.len();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            let mut v = Complex64::new(1.0, 0.0);
            for (q, &k) in word.iter().enumerate() {
                v *= pauli_1q(k)[r >> q & 1][c >> q & 1];
            }
            *cell = v;
        }
    }
    m
}

fn permutation(l: &LinearCircuit) -> Vec<usize> {
    (0..1usize << l.qubit_count())
        .map(|mut b| {
            for g in l.gates() {
                if b >> g.control & 1 == 1 {
                    b ^= 1 << g.target;
                }
            }
            b
        })
        .collect()
}

/// `U P U†` identified as a Pauli word (0=I, 1=X, 2=Y, 3=Z) up to phase.
/// Every candidate is compared entry by entry against the full matrix.
pub fn unitary_conjugate(l: &LinearCircuit, word: &[usize]) -> Vec<usize> {
    let n = l.qubit_count();
    assert!(n <= 4);
    let perm = permutation(l);
    let p = pauli_matrix(word);
    let dim = 1 << n;
    // (U P U†)[perm[r]][perm[c]] = P[r][c]
    let mut conj = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for r in 0..dim {
        for c in 0..dim {
            conj[perm[r]][perm[c]] = p[r][c];
        }
    }
    // the nonzero pattern of row 0 fixes the X part; scan the Z part
    let xmask = (0..dim).find(|&c| conj[0][c].norm() > 0.5).unwrap();
    for zmask in 0..dim {
        let cand: Vec<usize> = (0..n)
            .map(|q| match (xmask >> q & 1, zmask >> q & 1) {
                (0, 0) => 0,
                (1, 0) => 1,
                (1, 1) => 2,
                _ => 3,
            })
            .collect();
        let m = pauli_matrix(&cand);
        let phase = conj[0][xmask] / m[0][xmask];
        let same = (0..dim).all(|r| (0..dim).all(|c| (conj[r][c] - phase * m[r][c]).norm() < 1e-9));
        if same {
            return cand;
        }
    }
    panic!("conjugate is not a Pauli string");
}

/// Stabiliser map of `l` by dense conjugation.
pub fn unitary_map(l: &LinearCircuit) -> StabiliserMap {
    let n = l.qubit_count();
    let image = |letter: usize, bit: fn(usize) -> bool| -> Vec<BTreeSet<usize>> {
        (0..n)
            .map(|q| {
                let mut word = vec![0; n];
                word[q] = letter;
                let out = unitary_conjugate(l, &word);
                (0..n).filter(|&i| bit(out[i])).collect()
            })
            .collect()
    };
    StabiliserMap { x: image(1, |k| k == 1 || k == 2), z: image(3, |k| k == 2 || k == 3) }
}

// ---------------------------------------------------------------------------
// Clause-incidence isomorphism between a model and a named clause listing.

#[derive(Debug, Clone, Copy)]
pub enum Named<'a> {
    C(&'a str, &'a str, &'a str),
    J(&'a str, &'a str),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    C(BTreeSet<usize>, usize),
    J(BTreeSet<usize>),
}

fn model_shapes(m: &BooleanModel) -> Vec<Shape> {
    let mut out: Vec<Shape> = m
        .clauses()
        .iter()
        .map(|c| match *c {
            Clause::Cnot { before, after, crossing, .. } => Shape::C([before, after].into(), crossing),
            Clause::Join { r, t, .. } => Shape::J([r, t].into()),
            Clause::CombinedCnot { .. } => panic!("X or Z model expected"),
        })
        .collect();
    out.sort();
    out
}

/// A bijection from the listing's variable names to model variables under
/// which the clause multisets coincide, if one exists. CNOT clauses are listed
/// as `C(crossing, split, split)`; the split pair and join pairs are unordered.
pub fn isomorphism<'a>(m: &BooleanModel, listing: &[Named<'a>]) -> Option<BTreeMap<&'a str, usize>> {
    let mut names: Vec<&str> = Vec::new();
    for c in listing {
        let vs: Vec<&str> = match *c {
            Named::C(x, a, b) => vec![x, a, b],
            Named::J(r, t) => vec![r, t],
        };
        for v in vs {
            if !names.contains(&v) {
                names.push(v);
            }
        }
    }
    if names.len() != m.variable_count() || listing.len() != m.clauses().len() {
        return None;
    }
    let target = model_shapes(m);
    let mut assign: Vec<Option<usize>> = vec![None; names.len()];
    let mut used = vec![false; names.len()];
    let idx = |n: &str| names.iter().position(|&x| x == n).unwrap();
    let shape = |c: &Named, assign: &[Option<usize>]| -> Option<Shape> {
        Some(match *c {
            Named::C(x, a, b) => Shape::C([assign[idx(a)]?, assign[idx(b)]?].into(), assign[idx(x)]?),
            Named::J(r, t) => Shape::J([assign[idx(r)]?, assign[idx(t)]?].into()),
        })
    };
    // every fully assigned clause must occur in the model
    let partial_ok = |assign: &[Option<usize>]| {
        listing.iter().filter_map(|c| shape(c, assign)).all(|s| target.binary_search(&s).is_ok())
    };
    let complete = |assign: &[Option<usize>]| {
        let mut all: Vec<Shape> = listing.iter().filter_map(|c| shape(c, assign)).collect();
        all.sort();
        all == target
    };
    fn search(
        k: usize,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        partial_ok: &dyn Fn(&[Option<usize>]) -> bool,
        complete: &dyn Fn(&[Option<usize>]) -> bool,
    ) -> bool {
        if k == assign.len() {
            return complete(assign);
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                assign[k] = Some(v);
                if partial_ok(assign) && search(k + 1, assign, used, partial_ok, complete) {
                    return true;
                }
                used[v] = false;
                assign[k] = None;
            }
        }
        false
    }
    if search(0, &mut assign, &mut used, &partial_ok, &complete) {
        Some(names.iter().zip(assign).map(|(&n, v)| (n, v.unwrap())).collect())
    } else {
        None
    }
}

pub fn swap_x_listing() -> Vec<Named<'static>> {
    use Named::{C, J};
    vec![
        C("A", "e", "f"),
        C("G", "b", "c"),
        C("D", "h", "i"),
        J("A", "D"),
        J("A", "b"),
        J("c", "D"),
        J("e", "i"),
        J("f", "G"),
        J("G", "h"),
    ]
}

pub fn swap_z_listing() -> Vec<Named<'static>> {
    use Named::{C, J};
    vec![
        C("P", "k", "l"),
        C("M", "q", "r"),
        C("S", "n", "o"),
        J("k", "o"),
        J("l", "M"),
        J("M", "n"),
        J("P", "S"),
        J("P", "q"),
        J("r", "S"),
    ]
}
