pub mod algnum;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod exactpoly;
pub mod linalg;
pub mod realize;
pub mod thurston;

pub use error::{Error, Result};
