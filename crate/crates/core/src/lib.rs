//! Exact character-level computations with FI♯-modules and
//! representation stability of symmetric group representations.

pub mod characters;
pub mod charpoly;
pub mod error;
pub mod fi;
pub mod oracle;
pub mod partition;
pub mod regression;

pub use characters::{ClassFunction, SnRep};
pub use charpoly::{CharPolynomial, UniPoly};
pub use error::{Error, Result};
pub use fi::{CharSequence, FiSharpModule};
pub use oracle::{GradedPieceReport, RationalMatrix};
pub use partition::Partition;
