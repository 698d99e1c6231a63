//! Distances in the Grassmann and distant graphs, and the two ways each
//! relation can be recovered from the other.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{GrassmannianIndex, Handle, Relation};
use crate::error::Result;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub connected: bool,
    /// Largest finite distance.
    pub diameter: usize,
    /// Per element, the largest finite distance to any other element.
    pub eccentricities: Vec<usize>,
}

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(rows: &[FixedBitSet], source: Handle) -> Vec<Option<usize>> {
    let size = rows.len();
    let mut dist = vec![None; size];
    let mut seen = FixedBitSet::with_capacity(size);
    let mut frontier = FixedBitSet::with_capacity(size);
    dist[source] = Some(0);
    seen.insert(source);
    frontier.insert(source);
    let mut level = 0;
    while !frontier.is_clear() {
        level += 1;
        let mut next = FixedBitSet::with_capacity(size);
        for v in frontier.ones() {
            next.union_with(&rows[v]);
        }
        next.difference_with(&seen);
        for v in next.ones() {
            dist[v] = Some(level);
        }
        seen.union_with(&next);
        frontier = next;
    }
    dist
}

pub fn graph_metrics(index: &GrassmannianIndex, relation: Relation) -> GraphMetrics {
    let rows = index.rows(relation);
    let mut connected = true;
    let eccentricities: Vec<usize> = index
        .handles()
        .map(|h| {
            let d = bfs_distances(rows, h);
            connected &= d.iter().all(Option::is_some);
            d.into_iter().flatten().max().unwrap_or(0)
        })
        .collect();
    let diameter = eccentricities.iter().copied().max().unwrap_or(0);
    GraphMetrics { connected, diameter, eccentricities }
}

pub fn grassmann_distance(index: &GrassmannianIndex, a: Handle, b: Handle) -> Option<usize> {
    bfs_distances(index.adjacency_rows(), a)[b]
}

/// Distant iff the Grassmann-graph distance equals n.
pub fn distant_via_grassmann_distance(
    index: &GrassmannianIndex,
    x: &Subspace,
    y: &Subspace,
) -> Result<bool> {
    let (a, b) = (index.handle_of(x)?, index.handle_of(y)?);
    Ok(grassmann_distance(index, a, b) == Some(index.n()))
}

/// An element `C ∉ {A, B}` such that everything distant from `C` is distant
/// from `A` or from `B`. Such a witness exists exactly when `A` and `B` are
/// adjacent.
pub fn adjacency_witness(distant: &[FixedBitSet], a: Handle, b: Handle) -> Option<Handle> {
    if a == b {
        return None;
    }
    let mut either = distant[a].clone();
    either.union_with(&distant[b]);
    (0..distant.len()).find(|&c| c != a && c != b && distant[c].is_subset(&either))
}

pub fn adjacent_via_distant(index: &GrassmannianIndex, a: &Subspace, b: &Subspace) -> Result<bool> {
    let (ha, hb) = (index.handle_of(a)?, index.handle_of(b)?);
    Ok(adjacency_witness(index.distant_rows(), ha, hb).is_some())
}

/// Adjacency rows reconstructed from the distant rows alone.
pub fn adjacency_from_distant(distant: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let size = distant.len();
    let mut rows = vec![FixedBitSet::with_capacity(size); size];
    for a in 0..size {
        for b in a + 1..size {
            if adjacency_witness(distant, a, b).is_some() {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::grassmann::build_index;

    fn s(rows: &[&str]) -> Subspace {
        Subspace::parse(Field::gf2(), 4, rows).unwrap()
    }

    #[test]
    fn metrics_2_2() {
        let g = build_index(2, 2).unwrap();
        let adj = graph_metrics(&g, Relation::Adjacency);
        assert!(adj.connected);
        assert_eq!(adj.diameter, 2);
        let dist = graph_metrics(&g, Relation::Distant);
        assert!(dist.connected);
        assert_eq!(dist.diameter, 2);
        assert_eq!(dist.eccentricities.len(), 35);
    }

    #[test]
    fn metrics_2_3_adjacency() {
        let g = build_index(2, 3).unwrap();
        assert_eq!(graph_metrics(&g, Relation::Adjacency).diameter, 3);
    }

    #[test]
    fn distance_examples() {
        let g = build_index(2, 2).unwrap();
        let (u, v) = (s(&["1000", "0100"]), s(&["0010", "0001"]));
        let (hu, hv) = (g.handle_of(&u).unwrap(), g.handle_of(&v).unwrap());
        assert_eq!(grassmann_distance(&g, hu, hv), Some(2));
        assert!(distant_via_grassmann_distance(&g, &u, &v).unwrap());
        assert!(!distant_via_grassmann_distance(&g, &u, &u).unwrap());
        assert!(!distant_via_grassmann_distance(&g, &u, &s(&["1000", "0010"])).unwrap());
    }

    #[test]
    fn witness_examples() {
        let g = build_index(2, 2).unwrap();
        let a = g.handle_of(&s(&["1000", "0100"])).unwrap();
        let b = g.handle_of(&s(&["1000", "0010"])).unwrap();
        let c = g.handle_of(&s(&["1000", "0110"])).unwrap();
        // C is a witness: check it by brute force over all X.
        for x in g.handles() {
            if g.distant(x, c) {
                assert!(g.distant(x, a) || g.distant(x, b));
            }
        }
        assert!(adjacency_witness(g.distant_rows(), a, b).is_some());
        let far = g.handle_of(&s(&["0010", "0001"])).unwrap();
        assert_eq!(adjacency_witness(g.distant_rows(), a, far), None);
        assert_eq!(adjacency_witness(g.distant_rows(), a, a), None);
        assert_eq!(adjacency_from_distant(g.distant_rows()), g.adjacency_rows());
    }
}
