//! Exact H by exhaustive search, with every minimizing vertex set.

use simplicial_cheeger::cheeger::all_minimizers;
use simplicial_cheeger::corpus::{gen_bipyramid, gen_capped_antiprism, gen_complete_skeleton};
use simplicial_cheeger::{exact_h, SearchOptions, SimplicialComplex};

fn main() -> Result<(), simplicial_cheeger::Error> {
    let opts = SearchOptions {
        workers: 4,
        ..SearchOptions::default()
    };
    let named: Vec<(&str, SimplicialComplex)> = vec![
        ("bipyramid-6", gen_bipyramid(6)?),
        ("capped-antiprism-3", gen_capped_antiprism(3)?),
        ("complete-skeleton-5", gen_complete_skeleton(5)?),
    ];
    for (name, x) in &named {
        let cut = exact_h(x, &opts)?;
        println!(
            "{name}: H = {} at A = {} ({} crossing triangles)",
            cut.value,
            x.subset_name(&cut.side_a),
            cut.crossing
        );
        let all: Vec<String> = all_minimizers(x, &opts)?
            .iter()
            .map(|c| x.subset_name(&c.side_a))
            .collect();
        println!("  minimizers: {}", all.join(" "));
    }
    Ok(())
}
