//! Report documents and their human and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cheeger::{BoundReport, EmbeddedSummary, InequalityCheck, Verdict, Verdicts};
use crate::complex::{ComplexProfile, SimplicialComplex};
use crate::corpus::{Expected, Provenance, Quantity};
use crate::rational::Rational;
use crate::spectral::IRRATIONAL_TOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RenderMode {
    #[default]
    Human,
    Json,
}

/// Rounds to 12 significant digits; values within 1e-12 of zero become 0.
pub fn round_real(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        return 0.0;
    }
    round_significant(x)
}

pub(super) fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutDocument {
    pub side_a: Vec<String>,
    pub complement: Vec<String>,
    pub crossing: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub side_b: Vec<String>,
    pub boundary_edges: usize,
    pub crossing_faces: usize,
    pub checks: Vec<InequalityCheck>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectationDocument {
    pub value: Quantity,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Agreement with the computed value, when there is one to compare.
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub profile: ComplexProfile,
    pub k: usize,
    pub embedded: EmbeddedSummary,
    pub eigenvalues: Vec<f64>,
    pub residual_bound: f64,
    pub lambda: f64,
    pub lower_bound: Option<f64>,
    #[serde(rename = "H")]
    pub h: Option<CutDocument>,
    pub witness: Option<WitnessDocument>,
    pub graph_h: Option<Rational>,
    pub graph_bounds: Option<[f64; 2]>,
    pub verdicts: Verdicts,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, ExpectationDocument>,
}

fn names(complex: &SimplicialComplex, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| complex.label(v).to_string()).collect()
}

impl ReportDocument {
    pub fn new(
        report: &BoundReport,
        complex: &SimplicialComplex,
        name: Option<String>,
        expected: &BTreeMap<String, Expected>,
    ) -> Self {
        let h = report.exact_h.as_ref().map(|cut| CutDocument {
            side_a: names(complex, &cut.side_a),
            complement: names(complex, &cut.complement()),
            crossing: cut.crossing,
            value: cut.value.clone(),
        });
        let witness = report.witness.as_ref().map(|w| WitnessDocument {
            side_b: w.side_b.iter().map(|f| complex.face_name(f)).collect(),
            boundary_edges: w.boundary_edges,
            crossing_faces: w.crossing_faces,
            checks: w.checks.clone(),
        });
        let mut doc = ReportDocument {
            name,
            profile: report.profile,
            k: report.k,
            embedded: report.embedded.clone(),
            eigenvalues: report
                .spectrum
                .eigenvalues
                .iter()
                .map(|&x| round_real(x))
                .collect(),
            residual_bound: round_significant(report.spectrum.residual_bound),
            lambda: round_real(report.lambda),
            lower_bound: report.lower_bound.map(round_real),
            h,
            witness,
            graph_h: report.graph_h.clone(),
            graph_bounds: report
                .graph_bounds
                .map(|(lo, hi)| [round_real(lo), round_real(hi)]),
            verdicts: report.verdicts.clone(),
            expected: BTreeMap::new(),
        };
        doc.expected = expected
            .iter()
            .map(|(key, e)| {
                let matches = doc.compare(key, &e.value, report);
                (
                    key.clone(),
                    ExpectationDocument {
                        value: e.value.clone(),
                        provenance: e.provenance,
                        note: e.note.clone(),
                        matches,
                    },
                )
            })
            .collect();
        doc
    }

    fn compare(&self, key: &str, value: &Quantity, report: &BoundReport) -> Option<bool> {
        let observed: Quantity = match key {
            "H" => Quantity::Rational(report.exact_h.as_ref()?.value.clone()),
            "h_graph" => Quantity::Rational(report.graph_h.clone()?),
            "lambda" => Quantity::Number(report.lambda),
            "bound" => Quantity::Number(report.lower_bound?),
            "D" => Quantity::Number(report.profile.degree_d? as f64),
            "delta_min" => Quantity::Number(report.profile.delta_min as f64),
            "num_codim1" => Quantity::Number(report.profile.num_codim1 as f64),
            "num_vertices" => Quantity::Number(report.profile.num_vertices as f64),
            "degree" => Quantity::Number(report.embedded.regular_degree? as f64),
            _ => return None,
        };
        match (value, &observed) {
            (Quantity::Rational(a), Quantity::Rational(b)) => Some(a == b),
            _ => Some((value.as_f64()? - observed.as_f64()?).abs() <= IRRATIONAL_TOL),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::Fail => "FAIL".into(),
        Verdict::Vacuous => "pass (vacuous)".into(),
        Verdict::NotApplicable(why) => format!("not applicable ({why})"),
        Verdict::Skipped(why) => format!("skipped ({why})"),
    }
}

fn real(x: f64) -> String {
    format!("{}", round_real(x))
}

fn set(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

/// Rows of `key = value` with keys right-aligned.
struct Table(Vec<(String, String)>);

impl Table {
    fn row(&mut self, key: &str, value: impl Into<String>) {
        self.0.push((key.to_string(), value.into()));
    }

    fn render(&self, out: &mut String) {
        let width = self
            .0
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        for (k, v) in &self.0 {
            let _ = writeln!(out, "{k:>width$} = {v}");
        }
    }
}

pub fn render_report(doc: &ReportDocument, mode: RenderMode) -> String {
    match mode {
        RenderMode::Json => doc.to_json(),
        RenderMode::Human => render_human(doc),
    }
}

fn render_human(doc: &ReportDocument) -> String {
    let p = &doc.profile;
    let mut out = String::new();
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "{name}");
    }
    let mut t = Table(Vec::new());
    t.row("n", p.n.to_string());
    t.row("|V|", p.num_vertices.to_string());
    t.row("|W|", p.num_codim1.to_string());
    t.row(
        "D",
        p.degree_d.map_or("not constant".into(), |d| d.to_string()),
    );
    t.row("delta_min", p.delta_min.to_string());
    t.row("k", doc.k.to_string());
    let e = &doc.embedded;
    t.row(
        "embedded",
        format!(
            "{} vertices, {} edges, {}, {}",
            e.order,
            e.edges,
            e.regular_degree
                .map_or("not regular".into(), |d| format!("{d}-regular")),
            if e.connected {
                "connected"
            } else {
                "disconnected"
            }
        ),
    );
    t.row("lambda", real(doc.lambda));
    if let Some(b) = doc.lower_bound {
        t.row("bound", real(b));
    }
    match &doc.h {
        Some(cut) => {
            t.row("H", cut.value.to_string());
            t.row("A", set(&cut.side_a));
            t.row("crossing", cut.crossing.to_string());
        }
        None => t.row("H", "not computed"),
    }
    if let Some(h) = &doc.graph_h {
        t.row("h(G)", h.to_string());
    }
    if let Some([lo, hi]) = doc.graph_bounds {
        t.row("d - lambda", real(lo));
        t.row("2 sqrt(2d(d - lambda))", real(hi));
    }
    t.render(&mut out);

    if let Some(w) = &doc.witness {
        let _ = writeln!(out);
        let _ = writeln!(out, "witness B = {}", set(&w.side_b));
        let mut t = Table(Vec::new());
        for c in &w.checks {
            t.row(
                &c.name,
                format!(
                    "{} <= {}: {}",
                    c.lhs,
                    c.rhs,
                    if c.holds { "holds" } else { "FAILS" }
                ),
            );
        }
        t.render(&mut out);
    }

    let v = &doc.verdicts;
    let _ = writeln!(out);
    let mut t = Table(Vec::new());
    t.row("bound", verdict_text(&v.bound));
    if let Some(eq) = v.equality {
        t.row("equality", if eq { "yes" } else { "no" });
    }
    t.row("witness", verdict_text(&v.witness));
    t.row(
        "minimizers connected",
        verdict_text(&v.minimizers_connected),
    );
    t.row("graph cheeger", verdict_text(&v.graph_cheeger));
    for (k, v) in &t.0 {
        let _ = writeln!(out, "{k}: {v}");
    }

    if !doc.expected.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "expected values:");
        let mut t = Table(Vec::new());
        for (key, e) in &doc.expected {
            let value = match &e.value {
                Quantity::Rational(r) => r.to_string(),
                Quantity::Number(x) => real(*x),
                Quantity::Text(s) => s.clone(),
            };
            let status = match e.matches {
                Some(true) => "matches",
                Some(false) => "DIFFERS",
                None => "not compared",
            };
            let prov = match e.provenance {
                Provenance::Published => "published",
                Provenance::Computed => "computed",
                Provenance::Elementary => "elementary",
            };
            t.row(key, format!("{value} [{prov}, {status}]"));
        }
        t.render(&mut out);
    }
    out
}
