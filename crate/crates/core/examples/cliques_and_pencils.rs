//! Stars, tops and pencils, checked against a generic maximal-clique search.

use std::collections::BTreeSet;

use grasslab::grassmann::{
    build_index, maximal_adjacency_cliques, maximal_cliques, pencil, pencils_from_cliques,
    pencils_from_flags, star, top,
};
use grasslab::{Field, Subspace};

fn main() -> grasslab::Result<()> {
    let g = build_index(2, 2)?;
    let f = Field::gf2();
    let m = Subspace::parse(f, 4, &["1000"])?;
    let n = Subspace::parse(f, 4, &["1000", "0100", "0010"])?;

    let s = star(&g, &m)?;
    let t = top(&g, &n)?;
    println!("star with centre {m:?}: {} members", s.members.len());
    println!("top with carrier {n:?}: {} members", t.members.len());
    let p = pencil(&g, &m, &n)?;
    let members: Vec<_> = p.members.iter().map(|&h| g.element(h)).collect();
    println!("pencil [{m:?}, {n:?}] = {members:?}");

    let labelled: BTreeSet<Vec<usize>> =
        maximal_adjacency_cliques(&g).into_iter().map(|c| c.members).collect();
    let generic: BTreeSet<Vec<usize>> = maximal_cliques(g.adjacency_rows()).into_iter().collect();
    println!(
        "\n{} stars and tops, {} maximal cliques by search, identical: {}",
        labelled.len(),
        generic.len(),
        labelled == generic
    );
    let a = pencils_from_flags(&g);
    let b = pencils_from_cliques(&g);
    println!("{} pencils from flags, {} from clique intersections, identical: {}", a.len(), b.len(), a == b);
    Ok(())
}
