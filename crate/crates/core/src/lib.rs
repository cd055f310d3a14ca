//! Exact computations with type-I Lie superalgebras and their Kac modules.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod induction;
pub mod linalg;
pub mod module;
pub mod roots;
pub mod uea;

pub use error::{Error, Result};
