pub mod dualgraph;
pub mod error;
pub mod ideal;
pub mod polyring;
pub mod presentations;
pub mod report;
pub mod ulrich;

pub use error::{Error, Result};
