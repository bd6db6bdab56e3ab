pub mod domination;
pub mod error;
pub mod graph;
pub mod io;

pub use error::{Error, Result};
pub mod bounds;
pub mod cells;
pub mod harness;
pub mod par;
pub mod product;
