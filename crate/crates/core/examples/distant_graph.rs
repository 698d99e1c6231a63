//! The distant graph: diameters, and adjacency recovered from distance alone.

use grasslab::grassmann::{
    adjacency_from_distant, adjacency_witness, build_index, graph_metrics, Relation,
};
use grasslab::{Field, Subspace};

fn main() -> grasslab::Result<()> {
    for (p, n) in [(2, 2), (3, 2), (2, 3)] {
        let g = build_index(p, n)?;
        let adj = graph_metrics(&g, Relation::Adjacency);
        let dist = graph_metrics(&g, Relation::Distant);
        let rebuilt = adjacency_from_distant(g.distant_rows()) == g.adjacency_rows();
        println!(
            "G({p},{n}): Grassmann diameter {}, distant diameter {}, adjacency rebuilt from distance: {rebuilt}",
            adj.diameter, dist.diameter
        );
    }

    let g = build_index(2, 2)?;
    let f = Field::gf2();
    let a = g.handle_of(&Subspace::parse(f, 4, &["1000", "0100"])?)?;
    let b = g.handle_of(&Subspace::parse(f, 4, &["1000", "0010"])?)?;
    if let Some(c) = adjacency_witness(g.distant_rows(), a, b) {
        println!(
            "\n{:?} ~ {:?}: everything distant from {:?} is distant from one of them",
            g.element(a),
            g.element(b),
            g.element(c)
        );
    }
    Ok(())
}
