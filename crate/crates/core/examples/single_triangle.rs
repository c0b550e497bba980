//! The single triangle: its embedded graph is K3 and the spectral lower
//! bound on H is attained.

use simplicial_cheeger::cli::{render_report, RenderMode, ReportDocument};
use simplicial_cheeger::{full_report, ReportOptions, SimplicialComplex};

fn main() -> Result<(), simplicial_cheeger::Error> {
    let triangle = SimplicialComplex::from_facets([[0u64, 1, 2]])?;
    let report = full_report(&triangle, &ReportOptions::default())?;
    let doc = ReportDocument::new(
        &report,
        &triangle,
        Some("triangle".into()),
        &Default::default(),
    );
    print!("{}", render_report(&doc, RenderMode::Human));
    Ok(())
}
