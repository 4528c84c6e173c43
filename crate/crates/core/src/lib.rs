//! Symbolic computation in conic algebras, cubic Jordan matrix algebras and
//! the F4-graded Lie algebra built from them.

pub mod conic;
pub mod dsl;
pub mod endo;
pub mod error;
pub mod jordan;
pub mod lie;
pub mod oracle;
pub mod ring;
pub mod roots;
pub mod suites;

pub use error::{Error, Result};
