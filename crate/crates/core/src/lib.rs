pub mod error;
pub mod qfield;

pub use error::{Error, Result};
pub mod series;
pub mod target;
pub mod trees;
pub mod solver;
pub mod eulerchi;
