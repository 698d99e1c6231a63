//! Permutations of G induced by linear maps and by the duality X -> X^perp.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grasslab::grassmann::{
    build_index, image_of, induced_map, maximal_adjacency_cliques, relation_violation, CliqueKind,
    InducedMap,
};
use grasslab::ringline::random_invertible;

fn main() -> grasslab::Result<()> {
    let g = build_index(2, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let m = random_invertible(&mut rng, g.field(), 4);
    let perm = induced_map(&g, InducedMap::Linear(&m))?;
    println!("map\n{m}\npreserves both relations: {}", relation_violation(&g, &perm).is_none());

    let dual = induced_map(&g, InducedMap::Duality)?;
    let cliques = maximal_adjacency_cliques(&g);
    let tops: Vec<_> = cliques.iter().filter(|c| c.kind == CliqueKind::Top).map(|c| c.members.clone()).collect();
    let swapped = cliques
        .iter()
        .filter(|c| c.kind == CliqueKind::Star)
        .all(|c| tops.contains(&image_of(&dual, c)));
    println!(
        "duality preserves both relations: {}, sends every star to a top: {swapped}",
        relation_violation(&g, &dual).is_none()
    );
    Ok(())
}
