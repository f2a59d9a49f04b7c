//! Exact symbolic computation for the quantum queer supergroup `U_v(q_n)`,
//! its differential-operator and tensor supermodules, the formal-series
//! module realizing its regular representation, and the queer q-Schur
//! superalgebras acting on degree-r tensor space.
//!
//! Everything is computed over `Q(v)` with arbitrary-precision rational
//! coefficients; all verification suites are exact.

pub mod coeff;
pub mod diffops;
pub mod error;
pub mod matidx;
pub mod qpoly;
pub mod report;
pub mod schur;
pub mod tensormod;
pub mod uword;
pub mod verify;
pub mod vmod;

pub use coeff::{LaurentPoly, RatScalar};
pub use error::{Error, Result};
pub use matidx::{SuperIndex, SuperMatrix};
pub use qpoly::QPolyElement;
pub use tensormod::TensorElement;
pub use uword::{GenKind, GenSymbol, GeneratorWord, WordCombination};
pub use vmod::VElement;
