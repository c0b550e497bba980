//! Transfer a minimizing vertex cut of a complex to an edge cut of its
//! embedded graph and print the inequalities that witness the bound.

use simplicial_cheeger::corpus::{gen_boundary_simplex, gen_capped_antiprism};
use simplicial_cheeger::{exact_h, witness_b, SearchOptions, SimplicialComplex};

fn show(name: &str, x: &SimplicialComplex) -> Result<(), simplicial_cheeger::Error> {
    let cut = exact_h(x, &SearchOptions::default())?;
    let w = witness_b(x, &cut.side_a)?;
    let b: Vec<String> = w
        .side_b
        .iter()
        .map(|f| format!("[{}]", x.face_name(f)))
        .collect();
    println!(
        "{name}: A = {}, B = {}",
        x.subset_name(&cut.side_a),
        b.join(" ")
    );
    for c in &w.checks {
        println!(
            "  {:<28} {} <= {}  {}",
            c.name,
            c.lhs,
            c.rhs,
            if c.holds { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}

fn main() -> Result<(), simplicial_cheeger::Error> {
    show("capped-antiprism-3", &gen_capped_antiprism(3)?)?;
    show("boundary-simplex-5", &gen_boundary_simplex(5)?)?;
    Ok(())
}
