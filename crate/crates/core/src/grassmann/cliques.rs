//! Stars, tops and pencils, and the generic maximal-clique search used to
//! cross-check that stars and tops are the only maximal adjacency cliques.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{GrassmannianIndex, Handle};
use crate::error::{Error, Result};
use crate::subspace::{enumerate_subspaces, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueKind {
    /// All elements containing an (n-1)-subspace, the centre.
    Star,
    /// All elements contained in an (n+1)-subspace, the carrier.
    Top,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueLabel {
    pub kind: CliqueKind,
    /// Centre of a star or carrier of a top.
    pub carrier: Subspace,
    /// Sorted member handles.
    pub members: Vec<Handle>,
}

impl CliqueLabel {
    pub fn member_set(&self, size: usize) -> FixedBitSet {
        to_bitset(size, &self.members)
    }
}

pub(crate) fn to_bitset(size: usize, members: &[Handle]) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(size);
    members.iter().for_each(|&h| set.insert(h));
    set
}

pub fn star(index: &GrassmannianIndex, centre: &Subspace) -> Result<CliqueLabel> {
    index.check_ambient(centre)?;
    let expected = index.n() - 1;
    if centre.dim() != expected {
        return Err(Error::BadCentreDimension { expected, got: centre.dim() });
    }
    let pts = index.points().point_set(centre);
    let members = index.handles().filter(|&h| pts.is_subset(index.point_set(h))).collect();
    Ok(CliqueLabel { kind: CliqueKind::Star, carrier: centre.clone(), members })
}

pub fn top(index: &GrassmannianIndex, carrier: &Subspace) -> Result<CliqueLabel> {
    index.check_ambient(carrier)?;
    let expected = index.n() + 1;
    if carrier.dim() != expected {
        return Err(Error::BadCarrierDimension { expected, got: carrier.dim() });
    }
    let pts = index.points().point_set(carrier);
    let members = index.handles().filter(|&h| index.point_set(h).is_subset(&pts)).collect();
    Ok(CliqueLabel { kind: CliqueKind::Top, carrier: carrier.clone(), members })
}

/// Every star followed by every top, each group in canonical order of the
/// centre or carrier.
pub fn maximal_adjacency_cliques(index: &GrassmannianIndex) -> Vec<CliqueLabel> {
    let (f, n, d) = (index.field(), index.n(), index.ambient());
    let stars = enumerate_subspaces(f, d, n - 1)
        .into_iter()
        .map(|m| star(index, &m).expect("centre has dimension n-1"));
    let tops = enumerate_subspaces(f, d, n + 1)
        .into_iter()
        .map(|c| top(index, &c).expect("carrier has dimension n+1"));
    stars.chain(tops).collect()
}

/// All maximal cliques of an undirected graph given by symmetric, irreflexive
/// bit-rows, found by Bron–Kerbosch with pivoting. Each clique is sorted, and
/// the list is sorted lexicographically.
pub fn maximal_cliques(rows: &[FixedBitSet]) -> Vec<Vec<Handle>> {
    let size = rows.len();
    let mut out = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(size);
    candidates.insert_range(..);
    let excluded = FixedBitSet::with_capacity(size);
    bron_kerbosch(rows, &mut Vec::new(), candidates, excluded, &mut out);
    out.iter_mut().for_each(|c| c.sort_unstable());
    out.sort();
    out
}

fn bron_kerbosch(
    rows: &[FixedBitSet],
    clique: &mut Vec<Handle>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Vec<Handle>>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            out.push(clique.clone());
        }
        return;
    }
    // pivot: the vertex of P ∪ X with most neighbours in P
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| rows[u].intersection_count(&candidates))
        .expect("nonempty");
    let mut todo = candidates.clone();
    todo.difference_with(&rows[pivot]);
    for v in todo.ones() {
        let mut next_p = candidates.clone();
        next_p.intersect_with(&rows[v]);
        let mut next_x = excluded.clone();
        next_x.intersect_with(&rows[v]);
        clique.push(v);
        bron_kerbosch(rows, clique, next_p, next_x, out);
        clique.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}

/// The elements strictly between an (n-1)-subspace and an (n+1)-subspace.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pencil {
    pub members: Vec<Handle>,
    pub lower: Subspace,
    pub upper: Subspace,
}

pub fn pencil(index: &GrassmannianIndex, lower: &Subspace, upper: &Subspace) -> Result<Pencil> {
    index.check_ambient(lower)?;
    index.check_ambient(upper)?;
    let n = index.n();
    if lower.dim() + 1 != n || upper.dim() != n + 1 || !upper.contains(lower)? {
        return Err(Error::BadFlag);
    }
    let lo = index.points().point_set(lower);
    let hi = index.points().point_set(upper);
    let members = index
        .handles()
        .filter(|&h| lo.is_subset(index.point_set(h)) && index.point_set(h).is_subset(&hi))
        .collect();
    Ok(Pencil { members, lower: lower.clone(), upper: upper.clone() })
}

/// All pencils, one per flag (M, N), sorted by member list.
pub fn pencils_from_flags(index: &GrassmannianIndex) -> Vec<Pencil> {
    let (f, n, d) = (index.field(), index.n(), index.ambient());
    let uppers = enumerate_subspaces(f, d, n + 1);
    let mut out = Vec::new();
    for lower in enumerate_subspaces(f, d, n - 1) {
        for upper in &uppers {
            if upper.contains(&lower).expect("same ambient") {
                out.push(pencil(index, &lower, upper).expect("valid flag"));
            }
        }
    }
    out.sort();
    out
}

/// Intersections with at least two elements of distinct maximal adjacency
/// cliques, each turned into a pencil by reading off M = X ∩ Y and N = X + Y
/// from two of its members. Sorted by member list, duplicates removed.
pub fn pencils_from_cliques(index: &GrassmannianIndex) -> Vec<Pencil> {
    pencils_from_clique_sets(index, &maximal_adjacency_cliques(index))
}

pub(crate) fn pencils_from_clique_sets(
    index: &GrassmannianIndex,
    cliques: &[CliqueLabel],
) -> Vec<Pencil> {
    let sets: Vec<FixedBitSet> = cliques.iter().map(|c| c.member_set(index.len())).collect();
    let mut seen = BTreeSet::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let mut common = sets[i].clone();
            common.intersect_with(&sets[j]);
            if common.count_ones(..) >= 2 {
                seen.insert(common.ones().collect::<Vec<_>>());
            }
        }
    }
    seen.into_iter()
        .map(|members| {
            let (x, y) = (index.element(members[0]), index.element(members[1]));
            Pencil {
                lower: x.intersect(y).expect("same ambient"),
                upper: x.sum(y).expect("same ambient"),
                members,
            }
        })
        .collect()
}
