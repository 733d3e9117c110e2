pub mod combinat;
pub mod equivalence;
pub mod error;
pub mod operators;
pub mod qsym;
pub mod rsk;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
