//! The partition constant: minimum over partitions of V into n + 1 blocks
//! of `|V|` times the number of n-faces meeting every block, divided by the
//! product of block sizes. Compared with H on a few small complexes.

use simplicial_cheeger::cheeger::prt_minimizer;
use simplicial_cheeger::corpus::resolve;
use simplicial_cheeger::{exact_h, SearchOptions};

fn main() -> Result<(), simplicial_cheeger::Error> {
    let opts = SearchOptions::default();
    for name in [
        "simplex-closure-2",
        "boundary-simplex-3",
        "bipyramid-4",
        "capped-antiprism-3",
    ] {
        let x = resolve(name)?.complex()?;
        let p = prt_minimizer(&x, &opts)?;
        let blocks: Vec<String> = p.blocks.iter().map(|b| x.subset_name(b)).collect();
        println!(
            "{name}: partition h = {} ({} rainbow faces, blocks {}), H = {}",
            p.value,
            p.rainbow_faces,
            blocks.join(" "),
            exact_h(&x, &opts)?.value
        );
    }
    Ok(())
}
