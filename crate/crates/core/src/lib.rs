//! Exact computations with symmetric Frobenius algebras, Morita contexts,
//! homotopy fixed points of the trivial SO(2)-action and Calabi-Yau categories.

pub mod algebra;
pub mod cycat;
pub mod error;
pub mod exactlin;
pub mod fixedpoint;
pub mod io;
pub mod random;
pub mod skeletal;
pub mod sweep;

pub use error::{Error, Result};
pub use exactlin::{Rat, RatMatrix};
