use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as stable machine-readable codes (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("gate {gate}: control and target are both wire {wire}")]
    ControlEqualsTarget { gate: usize, wire: usize },
    #[error("wire {wire} out of range for a circuit with {wires} wires")]
    WireOutOfRange { wire: usize, wires: usize },
    #[error("wire {wire} carries no gate symbol")]
    EmptyWire { wire: usize },
    #[error("wire {wire} has no gap {gap}")]
    UnknownGap { wire: usize, gap: usize },
    #[error("cut set is empty")]
    EmptyCutSet,
    #[error("gap {gap} on wire {wire} is cut twice")]
    DuplicateCut { wire: usize, gap: usize },
    #[error("no radial cut: at every angle some wire lacks a cut (wires {wires:?} are never co-radial)")]
    NoRadialCut { wires: Vec<usize> },
    #[error("wire {wire} has an arc running across the traversal start")]
    StraddlingArc { wire: usize },
    #[error("wire {wire} is not cut")]
    ClosedWire { wire: usize },
    #[error("combined model has no pinned selector")]
    UnpinnedSelector,
    #[error("parity system leaves {free} variable(s) free")]
    Underdetermined { free: usize },
    #[error("parity system is inconsistent")]
    Inconsistent,
    #[error("gates {first} and {second} are not adjacent in cyclic order")]
    NotAdjacent { first: usize, second: usize },
    #[error("unknown gate {0}")]
    UnknownGate(String),
    #[error("cut budget {max_cuts} is smaller than the wire count {wires}")]
    BudgetTooSmall { max_cuts: usize, wires: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("qubit {qubit} out of range for {qubits} qubits")]
    QubitOutOfRange { qubit: usize, qubits: usize },
    #[error("post-selected outcome on qubit {qubit} has zero probability")]
    ZeroProbabilityOutcome { qubit: usize },
    #[error("{qubits} qubits exceed the statevector limit of {limit}")]
    TooManyQubits { qubits: usize, limit: usize },
    #[error("expected {expected} qubit configs, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("qubit {qubit}: {reason}")]
    InvalidAncillaConfig { qubit: usize, reason: String },
    #[error("no binding for symbolic input {0}")]
    UnboundInput(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "Syntax",
            Error::ControlEqualsTarget { .. } => "ControlEqualsTarget",
            Error::WireOutOfRange { .. } => "WireOutOfRange",
            Error::EmptyWire { .. } => "EmptyWire",
            Error::UnknownGap { .. } => "UnknownGap",
            Error::EmptyCutSet => "EmptyCutSet",
            Error::DuplicateCut { .. } => "DuplicateCut",
            Error::NoRadialCut { .. } => "NoRadialCut",
            Error::StraddlingArc { .. } => "StraddlingArc",
            Error::ClosedWire { .. } => "ClosedWire",
            Error::UnpinnedSelector => "UnpinnedSelector",
            Error::Underdetermined { .. } => "Underdetermined",
            Error::Inconsistent => "Inconsistent",
            Error::NotAdjacent { .. } => "NotAdjacent",
            Error::UnknownGate(_) => "UnknownGate",
            Error::BudgetTooSmall { .. } => "BudgetTooSmall",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::QubitOutOfRange { .. } => "QubitOutOfRange",
            Error::ZeroProbabilityOutcome { .. } => "ZeroProbabilityOutcome",
            Error::TooManyQubits { .. } => "TooManyQubits",
            Error::CountMismatch { .. } => "CountMismatch",
            Error::InvalidAncillaConfig { .. } => "InvalidAncillaConfig",
            Error::UnboundInput(_) => "UnboundInput",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
