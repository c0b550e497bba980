//! File formats, report rendering and the `cheeger` command line.

mod command;
mod document;
mod render;

pub use command::{run, run_from_args, Cli, Command, CorpusCommand};
pub use document::{
    parse_complex_file, parse_graph_document, parse_graph_file, ComplexDocument, GraphDocument,
    InputFormat,
};
pub use render::{
    render_report, round_real, CutDocument, ExpectationDocument, RenderMode, ReportDocument,
    WitnessDocument,
};
