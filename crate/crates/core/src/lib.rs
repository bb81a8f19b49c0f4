pub mod cli;
pub mod dimension;
pub mod error;
pub mod ideals;
pub mod mesh;
pub mod polyring;
pub mod ratlinalg;
pub mod refine;

pub use error::{Error, Result};
