//! File formats, dataset ingestion, the parallel classifier and the
//! command-line front end built on `intrinsic-core`.

pub mod cli;
pub mod codec;
pub mod dataset;
pub mod error;
pub mod oracle;
pub mod pool;
pub mod render;
pub mod table;

pub use error::{Error, Result};
