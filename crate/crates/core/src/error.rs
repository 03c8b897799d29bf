use num_bigint::BigUint;
use thiserror::Error;

/// Problems building or parsing a link diagram. Arc numbers are 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("arc x{arc} is never referenced (labels must cover 1..={max})")]
    ArcGap { arc: usize, max: usize },
    #[error("arc x{arc} is the outgoing under-arc of crossings c{first} and c{second}")]
    DuplicateUnderOut {
        arc: usize,
        first: usize,
        second: usize,
    },
    #[error("arc x{arc} is the incoming under-arc of crossings c{first} and c{second}")]
    DuplicateUnderIn {
        arc: usize,
        first: usize,
        second: usize,
    },
    #[error("arc x{arc} leaves an under-crossing but never enters one")]
    OpenStrand { arc: usize },
    #[error("arc x{arc} is out of range (diagram has {arc_count} arcs)")]
    ArcOutOfRange { arc: usize, arc_count: usize },
    #[error("crossing c{crossing} does not exist (diagram has {count} crossings)")]
    CrossingOutOfRange { crossing: usize, count: usize },
    #[error("diagram has no arcs")]
    Empty,
    #[error("empty diagram is not expressible as a PD code; use a relations file with `circles:`")]
    EmptyPd,
    #[error("malformed PD quadruple at byte {offset}: {message}")]
    MalformedQuadruple { offset: usize, message: String },
    #[error("PD edge {edge} occurs {count} times (expected 2)")]
    EdgeMultiplicity { edge: u64, count: usize },
    #[error("no orientation of the over-strands is consistent (conflict at crossing {crossing})")]
    InconsistentOrientation { crossing: usize },
    #[error("unknown catalog link `{0}`")]
    UnknownLink(String),
    #[error("crossing c{crossing} is not a removable kink")]
    NotAKink { crossing: usize },
    #[error("crossings c{first} and c{second} do not form a removable bigon")]
    NotABigon { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("axiom 1 fails: {x} ▷ {x} ≠ {x}")]
    Axiom1Violation { x: usize },
    #[error("axiom 2 fails: column {y} is not a bijection")]
    Axiom2Violation { y: usize },
    #[error("axiom 3 fails at (x, y, z) = ({x}, {y}, {z})")]
    Axiom3Violation { x: usize, y: usize, z: usize },
    #[error("{t} is not a unit modulo {n}")]
    NotAUnit { t: u64, n: u64 },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("table entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        order: usize,
    },
    #[error("table is not square: expected {expected} entries in row {row}, got {got}")]
    NotSquare {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("quandle must have at least one element")]
    EmptyTable,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{count} colorings exceed the enumeration cap of {cap}")]
    CapExceeded { count: BigUint, cap: u64 },
    #[error("system has {got} columns but the presentation has {expected} arcs")]
    ShapeMismatch { expected: usize, got: usize },
}

/// Any error the crate produces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}
