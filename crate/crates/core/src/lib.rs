//! Quandle coloring invariants of oriented link diagrams.
//!
//! The crate reads link diagrams (relations files or PD codes), extracts the
//! fundamental quandle presentation, and counts colorings by finite quandles.
//! Alexander quandles over ℤₙ take an exact route through the integer Smith
//! normal form of the coloring system; any other finite quandle goes through
//! a backtracking search, which doubles as an oracle for the linear route.
//!
//! The linear algebra in [`matrix`] and [`smith`] is generic over the integer
//! scalar (anything implementing `num_integer::Integer + num_traits::Signed`);
//! the aliases below fix it to arbitrary precision, which is what the solver
//! uses.

pub mod diagram;
pub mod error;
pub mod invariants;
pub mod matrix;
pub mod presentation;
pub mod quandle;
pub mod smith;
pub mod solver;
mod unionfind;

pub use diagram::{ArcId, Crossing, LinkDiagram, Sign, Validation};
pub use error::{DiagramError, Error, QuandleError, SolverError};
pub use invariants::{
    compare, counting_invariant, involutory_analysis, phi_polynomial, CompareCell,
    DistinguishabilityReport, PhiPolynomial, TPolicy, Verdict,
};
pub use presentation::{CrossingRelation, QuandlePresentation};
pub use quandle::{AlexanderParams, FiniteQuandle};
pub use solver::{Coloring, ColoringSystem, DEFAULT_CAP};

/// Integer matrix with arbitrary-precision entries.
pub type IntMatrix = matrix::Matrix<num_bigint::BigInt>;
/// Smith decomposition over arbitrary-precision integers.
pub type BigSmithForm = smith::SmithForm<num_bigint::BigInt>;
/// Machine-word matrix, for small systems and cross-checks.
pub type I64Matrix = matrix::Matrix<i64>;
/// Smith decomposition over `i64`; may overflow on large systems.
pub type I64SmithForm = smith::SmithForm<i64>;
