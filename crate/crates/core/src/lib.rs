pub mod arith;
pub mod cli;
pub mod criterion;
pub mod error;
pub mod ext_classical;
pub mod homspace;
pub mod linalg;
pub mod loubert;
pub mod partitions;
pub mod sweep;
pub mod tableaux;

pub use error::{Error, Result};
