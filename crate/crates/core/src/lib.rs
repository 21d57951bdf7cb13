//! Lefschetz properties of artinian monomial quotients of `k[x, y]`.
//!
//! The crate decides the strong Lefschetz property in every characteristic
//! through closed-form determinants of binomial matrices, cross-checks those
//! closed forms against exact elimination and lattice-path counts, handles
//! non-monomial ideals through Gröbner bases, and relates the bivariate
//! picture to the weak Lefschetz property in three variables.

pub mod arith;
pub mod codim3;
pub mod enumerate;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod macaulay;
pub mod maps;
pub mod par;
pub mod parse;
pub mod slp;
pub mod sweep;

pub use error::{Error, Result};
pub use ideal::{HilbertFunction, Monomial2, MonomialIdeal2, WidthFunction};
pub use par::Execution;
