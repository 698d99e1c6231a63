//! The Grassmannian G of n-subspaces of GF(p)^{2n} with its Grassmann graph
//! (adjacency) and distant graph.

mod automorph;
mod cliques;
mod index;
mod metrics;

pub use automorph::{image_of, induced_map, is_permutation, relation_violation, InducedMap};
pub use cliques::{
    maximal_adjacency_cliques, maximal_cliques, pencil, pencils_from_cliques, pencils_from_flags,
    star, top, CliqueKind, CliqueLabel, Pencil,
};
pub use index::{
    build_index, is_adjacent, is_adjacent_by_sum, is_distant, GrassmannianIndex, Handle,
    Relation, MAX_ELEMENTS, MAX_N,
};
pub(crate) use index::check_size;
pub use metrics::{
    adjacency_from_distant, adjacency_witness, adjacent_via_distant, bfs_distances,
    distant_via_grassmann_distance, grassmann_distance, graph_metrics, GraphMetrics,
};
