//! Library half of the `numgame` binary, so that commands can be driven
//! from tests with in-memory input and output.

pub mod commands;
pub mod graph_file;
pub mod trace;

pub use commands::{run, Cli};
pub use graph_file::{load_graph, parse_graph, print_graph, GraphFileError};
pub use trace::TraceFile;
