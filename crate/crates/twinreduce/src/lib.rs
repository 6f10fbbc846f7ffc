//! File formats, JSON documents and group-graph pipelines around
//! `twinreduce-core`, plus the `twinreduce` command-line tool.

mod error;
pub mod graph6;
pub mod groups;
pub mod json;
pub mod text;

pub use error::FormatError;
pub use graph6::{parse_graph6, write_graph6};
pub use text::{
    parse_edge_list, parse_generators, parse_partition, parse_trace, write_edge_list, write_generators,
    write_partition, write_trace,
};

use twinreduce_core::Graph;

/// Reads a graph in edge-list form when the first content line starts with
/// `n `, and as graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.starts_with("n ") => parse_edge_list(text),
        Some(line) => parse_graph6(line),
        None => Err(FormatError::Invalid("no graph in input".into())),
    }
}
