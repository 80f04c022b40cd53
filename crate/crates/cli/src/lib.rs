//! Reports, reference tables and range verification on top of
//! [`aseries_core`], rendered as text, CSV or JSON.

pub mod appendix;
pub mod commands;
mod error;
pub mod render;
pub mod tables;

pub use commands::{cmd_appendix, cmd_classify, cmd_repr, cmd_table, cmd_verify};
pub use error::CliError;
pub use render::{OutputFormat, SeriesRecord, SeriesReport};

pub use aseries_core as core;
