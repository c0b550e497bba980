//! Read a complex from a text or JSON file and print the JSON report.
//!
//! `cargo run --example load_file -- path/to/complex.txt`; with no argument
//! a small built-in text document is used.

use simplicial_cheeger::cli::{
    parse_complex_file, render_report, InputFormat, RenderMode, ReportDocument,
};
use simplicial_cheeger::{full_report, ReportOptions};

const SAMPLE: &str = "\
# boundary of a tetrahedron on named vertices
a b c
a b d
a c d
b c d
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bytes = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    let doc = parse_complex_file(&bytes, InputFormat::Auto)?;
    let x = doc.to_complex()?;
    let report = full_report(&x, &ReportOptions::default())?;
    let out = ReportDocument::new(&report, &x, doc.name.clone(), &doc.expected);
    print!("{}", render_report(&out, RenderMode::Json));
    Ok(())
}
