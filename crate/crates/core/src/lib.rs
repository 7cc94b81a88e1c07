pub mod abgroup;
pub mod algmod;
pub mod arith;
pub mod braided;
pub mod check;
pub mod cli;
pub mod cochain;
pub mod diagram;
pub mod error;
pub mod json;
pub mod linalg;
pub mod monoidal;
pub mod witt;

pub use error::{Error, Result};
