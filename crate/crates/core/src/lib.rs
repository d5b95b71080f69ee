pub mod arith;
pub mod certify;
pub mod error;
pub mod exec;
pub mod ring;
pub mod simplicial;

pub use error::{Error, Result};
