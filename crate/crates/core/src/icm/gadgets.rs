use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{configure, Basis, ICMCircuit, InitBasis, MeasBasis, QubitConfig};
use crate::circuit::LinearCircuit;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GadgetKind {
    Teleport,
    T,
    P,
    V,
    Bell,
    MeasureZ,
    RemoteCnot,
    Sdt,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 8] = [
        GadgetKind::Teleport,
        GadgetKind::T,
        GadgetKind::P,
        GadgetKind::V,
        GadgetKind::Bell,
        GadgetKind::MeasureZ,
        GadgetKind::RemoteCnot,
        GadgetKind::Sdt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Teleport => "teleport",
            GadgetKind::T => "t",
            GadgetKind::P => "p",
            GadgetKind::V => "v",
            GadgetKind::Bell => "bell",
            GadgetKind::MeasureZ => "measurez",
            GadgetKind::RemoteCnot => "remotecnot",
            GadgetKind::Sdt => "sdt",
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.to_ascii_lowercase();
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .ok_or_else(|| Error::UnknownGate(s.to_string()))
    }
}

/// Fixed ICM template of each gadget. Symbolic inputs are named `in0`, `in1`
/// in ascending qubit order.
pub fn gadget(kind: GadgetKind) -> ICMCircuit {
    use InitBasis::{Plus, Zero};
    let input = |i: usize, meas| QubitConfig::input(format!("in{i}"), meas);
    let (n, gates, configs): (usize, &[(usize, usize)], Vec<QubitConfig>) = match kind {
        GadgetKind::Teleport => (2, &[(1, 0)], vec![input(0, MeasBasis::Z), QubitConfig::output(Plus)]),
        GadgetKind::T => (2, &[(1, 0)], vec![input(0, MeasBasis::Z), QubitConfig::output(InitBasis::A)]),
        GadgetKind::P => (2, &[(1, 0)], vec![input(0, MeasBasis::Z), QubitConfig::output(InitBasis::Y)]),
        GadgetKind::V => (2, &[(0, 1)], vec![input(0, MeasBasis::X), QubitConfig::output(InitBasis::Y)]),
        GadgetKind::Bell => (2, &[(0, 1)], vec![QubitConfig::output(Plus), QubitConfig::output(Zero)]),
        GadgetKind::MeasureZ => {
            (2, &[(0, 1)], vec![input(0, MeasBasis::None), QubitConfig::ancilla(Zero, MeasBasis::Z)])
        }
        GadgetKind::RemoteCnot => (
            4,
            &[(1, 0), (2, 1), (1, 3)],
            vec![
                input(0, MeasBasis::Z),
                QubitConfig::ancilla(Plus, MeasBasis::X),
                input(1, MeasBasis::None),
                QubitConfig::output(Zero),
            ],
        ),
        GadgetKind::Sdt => (
            4,
            &[(3, 1), (0, 1), (2, 0)],
            vec![
                input(0, MeasBasis::Configurable(Basis::Z, Basis::X)),
                QubitConfig::ancilla(Zero, MeasBasis::Configurable(Basis::X, Basis::Z)),
                QubitConfig::output(Plus),
                QubitConfig::output(Plus),
            ],
        ),
    };
    let l = LinearCircuit::new(n, gates).expect("static gadget layout");
    configure(&l, configs).expect("static gadget configuration")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let t = gadget(GadgetKind::T);
        assert_eq!((t.qubit_count(), t.circuit().gates().len()), (2, 1));
        assert_eq!(t.configs()[1].init, InitBasis::A);
        assert_eq!(t.configs()[0].meas, MeasBasis::Z);
        let sdt = gadget(GadgetKind::Sdt);
        assert_eq!((sdt.qubit_count(), sdt.circuit().gates().len()), (4, 3));
        let inits: Vec<_> = sdt.configs().iter().map(|c| c.init.to_string()).collect();
        assert_eq!(inits, ["in:in0", "zero", "plus", "plus"]);
    }

    #[test]
    fn names_round_trip() {
        for k in GadgetKind::ALL {
            assert_eq!(k.name().parse::<GadgetKind>().unwrap(), k);
        }
        assert!("toffoli".parse::<GadgetKind>().is_err());
    }
}
