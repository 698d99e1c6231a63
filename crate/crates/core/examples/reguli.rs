//! Reguli through mutually distant triples, their directrices, and the
//! characterization through the distant graph alone.

use grasslab::grassmann::build_index;
use grasslab::reguli::{
    directrices, is_partial_regulus, is_regulus, reguli_from_triples, regulus_through,
    satisfies_distant_conditions, second_kind_family, subline_coverage, DistantGraph,
};
use grasslab::ringline::Frame;
use grasslab::{Field, Subspace};

fn main() -> grasslab::Result<()> {
    let f = Field::gf2();
    let g = build_index(2, 2)?;
    let h = |rows: &[&str]| g.handle_of(&Subspace::parse(f, 4, rows)?);
    let (u, v, e) = (h(&["1000", "0100"])?, h(&["0010", "0001"])?, h(&["1011", "0110"])?);

    let r = regulus_through(&g, u, v, e)?;
    println!("regulus through {:?}, {:?}, {:?}:", g.element(u), g.element(v), g.element(e));
    for &m in &r.members {
        println!("  member    {:?}", g.element(m));
    }
    for line in &r.directrices {
        let hits = subline_coverage(&g, &r, line)?;
        println!("  directrix {line:?} meets the members in {} distinct points", hits.len());
    }

    let std = second_kind_family(&g, &Frame::standard(f, 2))?;
    println!("\nstandard family is a regulus: {}", is_regulus(&g, &std.members));
    println!("its directrices: {:?}", directrices(&g, &std.members)?);

    let all = reguli_from_triples(&g)?;
    println!("\n{} reguli in G(2,2), every distant triple in exactly one", all.len());

    let g3 = build_index(3, 2)?;
    let graph = DistantGraph::from_index(&g3);
    let r3 = second_kind_family(&g3, &Frame::standard(Field::new(3)?, 2))?;
    let part = &r3.members[..3];
    println!(
        "G(3,2): three of four members: partial {}, regulus {}, distant-graph test {}",
        is_partial_regulus(&g3, part),
        is_regulus(&g3, part),
        satisfies_distant_conditions(&graph, part)
    );
    println!(
        "G(3,2): all four members: regulus {}, distant-graph test {}",
        is_regulus(&g3, &r3.members),
        satisfies_distant_conditions(&graph, &r3.members)
    );
    Ok(())
}
