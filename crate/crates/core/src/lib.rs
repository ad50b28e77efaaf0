//! Exact-arithmetic toolkit for multimodular and related discrete convex
//! functions on integer lattices.
//!
//! The crate offers definition-level property checkers that return violation
//! witnesses, the triangular change of variables linking the difference and
//! cumulative viewpoints, function operations (shifts, scalings, sums,
//! projections, infimal convolution), descent-based minimization with a
//! brute-force oracle, seeded random generators, closure-law campaigns, and
//! deterministic reproduction scenarios.
//!
//! Every value is an exact rational or `+inf`; there is no floating point in
//! any verdict path. Functions live on finite boxes and are `+inf` outside,
//! which keeps every box-restricted function a legitimate lattice function.

pub mod checks;
pub mod error;
pub mod fixtures;
pub mod function;
pub mod harness;
pub mod io;
pub mod lattice;
pub mod minimize;
pub mod ops;
pub mod scalar;
pub mod transforms;
pub mod value;
pub mod witness;

pub use error::{Error, Result};
pub use function::{
    materialize, Evaluate, IndicatorSet, Piece, QuadraticFunction, SeparableFunction,
    TableFunction,
};
pub use lattice::{IntBox, Point};
pub use scalar::{Rat, Scalar};
pub use value::{Finite, Infinite, Value};
pub use witness::{Verdict, Witness, WitnessKind};
