pub mod cli_io;
pub mod config_model;
pub mod contact;
pub mod degree_model;
pub mod experiments;
pub mod error;
pub mod graph_structure;
pub mod rng;
pub mod series;

pub use error::{Error, Result};
