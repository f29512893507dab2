//! Free subgroup rank of Lie groups through the strong orthogonal rank of
//! root systems.

pub mod cli;
pub mod clique;
pub mod error;
pub mod groups;
pub mod matrixcheck;
pub mod realforms;
pub mod roots;
pub mod sork;
pub mod tables;

pub use error::{Error, Result};
