pub mod cyclotomic;
pub mod error;
pub mod generalized_d;
pub mod hidden_variables;
pub mod mermin;
pub mod qudit_ops;
pub mod report;

pub use error::{Error, Result};
