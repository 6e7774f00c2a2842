use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::icm::{ICMCircuit, InitBasis};

pub const MAX_QUBITS: usize = 14;
const ZERO_PROBABILITY: f64 = 1e-12;

pub type Qubit = [Complex64; 2];
pub type Matrix = [[Complex64; 2]; 2];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Named single-qubit states and gates.
pub mod states {
    use super::*;

    pub fn zero() -> Qubit {
        [c(1.0, 0.0), c(0.0, 0.0)]
    }
    pub fn one() -> Qubit {
        [c(0.0, 0.0), c(1.0, 0.0)]
    }
    pub fn plus() -> Qubit {
        [c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]
    }
    pub fn minus() -> Qubit {
        [c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)]
    }
    /// (|0⟩ + i|1⟩)/√2
    pub fn y_plus() -> Qubit {
        [c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)]
    }
    pub fn y_minus() -> Qubit {
        [c(FRAC_1_SQRT_2, 0.0), c(0.0, -FRAC_1_SQRT_2)]
    }
    /// (|0⟩ + e^{iπ/4}|1⟩)/√2
    pub fn a_plus() -> Qubit {
        [c(FRAC_1_SQRT_2, 0.0), Complex64::from_polar(FRAC_1_SQRT_2, std::f64::consts::FRAC_PI_4)]
    }
    pub fn a_minus() -> Qubit {
        [c(FRAC_1_SQRT_2, 0.0), -Complex64::from_polar(FRAC_1_SQRT_2, std::f64::consts::FRAC_PI_4)]
    }
}

pub mod gates {
    use super::*;

    pub fn x() -> Matrix {
        [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
    }
    pub fn z() -> Matrix {
        diag(c(1.0, 0.0), c(-1.0, 0.0))
    }
    pub fn h() -> Matrix {
        let s = c(FRAC_1_SQRT_2, 0.0);
        [[s, s], [s, -s]]
    }
    pub fn p() -> Matrix {
        diag(c(1.0, 0.0), c(0.0, 1.0))
    }
    pub fn pdg() -> Matrix {
        diag(c(1.0, 0.0), c(0.0, -1.0))
    }
    pub fn t() -> Matrix {
        diag(c(1.0, 0.0), Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4))
    }
    pub fn tdg() -> Matrix {
        diag(c(1.0, 0.0), Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4))
    }
    /// R_x(-π/2) = (1/√2)[[1, i], [i, 1]]
    pub fn v() -> Matrix {
        let (r, i) = (c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2));
        [[r, i], [i, r]]
    }

    fn diag(a: Complex64, b: Complex64) -> Matrix {
        [[a, c(0.0, 0.0)], [c(0.0, 0.0), b]]
    }

    pub fn apply(m: &Matrix, q: &Qubit) -> Qubit {
        [m[0][0] * q[0] + m[0][1] * q[1], m[1][0] * q[0] + m[1][1] * q[1]]
    }
}

/// Dense state of up to [`MAX_QUBITS`] qubits; qubit `i` is bit `i` of the
/// amplitude index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zero(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut amps = vec![c(0.0, 0.0); 1 << n];
        amps[0] = c(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    pub fn product(qubits: &[Qubit]) -> Result<Self> {
        check_size(qubits.len())?;
        let mut s = StateVector { n: 0, amps: vec![c(1.0, 0.0)] };
        for q in qubits {
            s.append(*q)?;
        }
        Ok(s)
    }

    /// Normalises the given amplitudes.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let n = amps.len().trailing_zeros() as usize;
        if amps.len() != 1 << n {
            return Err(Error::SizeMismatch { expected: 1 << n, found: amps.len() });
        }
        check_size(n)?;
        let mut s = StateVector { n, amps };
        let norm = s.norm();
        if norm < ZERO_PROBABILITY {
            return Err(Error::ZeroProbabilityOutcome { qubit: 0 });
        }
        s.scale(1.0 / norm);
        Ok(s)
    }

    pub fn qubit_count(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    fn scale(&mut self, k: f64) {
        for a in &mut self.amps {
            *a *= k;
        }
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n {
            return Err(Error::QubitOutOfRange { qubit: q, qubits: self.n });
        }
        Ok(())
    }

    /// Tensors a new qubit in as index `n`.
    pub fn append(&mut self, q: Qubit) -> Result<usize> {
        check_size(self.n + 1)?;
        let mut amps = Vec::with_capacity(self.amps.len() * 2);
        amps.extend(self.amps.iter().map(|a| a * q[0]));
        amps.extend(self.amps.iter().map(|a| a * q[1]));
        self.amps = amps;
        self.n += 1;
        Ok(self.n - 1)
    }

    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::ControlEqualsTarget { gate: 0, wire: control });
        }
        let (cm, tm) = (1usize << control, 1usize << target);
        for i in 0..self.amps.len() {
            if i & cm != 0 && i & tm == 0 {
                self.amps.swap(i, i | tm);
            }
        }
        Ok(())
    }

    pub fn apply_single(&mut self, q: usize, m: &Matrix) -> Result<()> {
        self.check_qubit(q)?;
        let bit = 1usize << q;
        for i in (0..self.amps.len()).filter(|i| i & bit == 0) {
            let out = gates::apply(m, &[self.amps[i], self.amps[i | bit]]);
            self.amps[i] = out[0];
            self.amps[i | bit] = out[1];
        }
        Ok(())
    }

    /// Projects qubit `q` onto `outcome`, removes it and renormalises.
    /// Returns the outcome probability.
    pub fn project_out(&mut self, q: usize, outcome: &Qubit) -> Result<f64> {
        self.check_qubit(q)?;
        let bit = 1usize << q;
        let low = bit - 1;
        let (b0, b1) = (outcome[0].conj(), outcome[1].conj());
        let amps: Vec<Complex64> = (0..self.amps.len() / 2)
            .map(|j| {
                let i = (j & low) | ((j & !low) << 1);
                b0 * self.amps[i] + b1 * self.amps[i | bit]
            })
            .collect();
        let p: f64 = amps.iter().map(Complex64::norm_sqr).sum();
        if p < ZERO_PROBABILITY {
            return Err(Error::ZeroProbabilityOutcome { qubit: q });
        }
        self.amps = amps;
        self.n -= 1;
        self.scale(1.0 / p.sqrt());
        Ok(p)
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        let overlap: Complex64 = self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum();
        Ok(overlap.norm_sqr())
    }

    /// One `index: re im` line per amplitude.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, a) in self.amps.iter().enumerate() {
            let _ = writeln!(out, "{i:0width$b}: {:+.6} {:+.6}", a.re, a.im, width = self.n.max(1));
        }
        out
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        return Err(Error::TooManyQubits { qubits: n, limit: MAX_QUBITS });
    }
    Ok(())
}

/// Initialises every qubit of `icm`, applies its CNOTs, then post-selects each
/// measured qubit (ascending index) on the eigenstate selected by its entry in
/// `outcomes`. The result holds the unmeasured qubits in ascending order.
pub fn statevector_run(icm: &ICMCircuit, bindings: &BTreeMap<String, Qubit>, outcomes: &[u8]) -> Result<StateVector> {
    let n = icm.qubit_count();
    check_size(n)?;
    let inits = icm
        .configs()
        .iter()
        .map(|cfg| match &cfg.init {
            InitBasis::Input(name) => bindings.get(name).copied().ok_or_else(|| Error::UnboundInput(name.clone())),
            basis => Ok(basis.state().expect("concrete basis")),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut s = StateVector::product(&inits)?;
    for g in icm.circuit().gates() {
        s.apply_cnot(g.control, g.target)?;
    }
    let measured: Vec<usize> = (0..n).filter(|&q| icm.configs()[q].meas.primary().is_some()).collect();
    if outcomes.len() != measured.len() {
        return Err(Error::SizeMismatch { expected: measured.len(), found: outcomes.len() });
    }
    // project from the highest index down so lower indices stay valid
    for (&q, &bit) in measured.iter().zip(outcomes).rev() {
        let basis = icm.configs()[q].meas.primary().unwrap();
        s.project_out(q, &basis.eigenstate(bit))?;
    }
    Ok(s)
}
