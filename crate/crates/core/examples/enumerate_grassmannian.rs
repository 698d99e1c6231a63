//! Enumerate G for a few (p, n), compare with the Gaussian binomial and show
//! the text format of subspaces.

use grasslab::grassmann::build_index;
use grasslab::subspace::subspaces_to_text;
use grasslab::gaussian_binomial;

fn main() -> grasslab::Result<()> {
    for (p, n) in [(2, 1), (2, 2), (3, 2), (2, 3)] {
        let g = build_index(p, n)?;
        let (adj, dist) = g.expected_degrees();
        println!(
            "G({p},{n}): {:>5} elements (Gaussian binomial {:>5}), adjacency degree {adj}, distant degree {dist}",
            g.len(),
            gaussian_binomial(p as u64, 2 * n, n)
        );
    }
    let g = build_index(2, 2)?;
    println!("\nfirst three elements of G(2,2) in canonical order:\n");
    print!("{}", subspaces_to_text(&g.elements()[..3]));
    Ok(())
}
