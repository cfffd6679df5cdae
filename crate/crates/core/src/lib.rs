//! Hall algebras of quiver representations and of two-periodic complexes of
//! projectives over small prime fields, computed exactly.

pub mod chi;
pub mod complex;
pub mod dh;
pub mod diagram;
pub mod error;
pub mod field;
pub mod hall;
pub mod json;
pub mod matrix;
pub mod quiver;
pub mod rep;
pub mod verify;

pub use error::{Budget, Error, Result};
pub use field::Coeff;
pub use quiver::{KClass, Quiver};
