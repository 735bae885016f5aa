//! File formats, JSON documents and subcommands for the `raag` tool.

pub mod commands;
pub mod formats;
pub mod golden;
pub mod json;

pub use commands::{CliError, Report, Status};
pub use formats::{
    detect_format, parse_dgraph, parse_edge_list, parse_input, parse_profile_spec, write_dgraph, write_edge_list,
    write_profile_spec, Input, InputFormat, ParseError, Parsed,
};
