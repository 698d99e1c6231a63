use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::subspace::{enumerate_subspaces, gaussian_binomial, PointTable, Subspace};

/// Position of an element in the canonical order of the Grassmannian.
pub type Handle = usize;

/// Largest Grassmannian `build_index` will materialize.
pub const MAX_ELEMENTS: u64 = 100_000;

/// Largest half-dimension accepted by `build_index`.
pub const MAX_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Grassmann graph: the intersection is a hyperplane of both.
    Adjacency,
    /// Distant graph: complementary subspaces.
    Distant,
}

/// All n-subspaces of GF(p)^{2n} in canonical order, with both relations
/// stored as one bit-row per element.
///
/// Every element also carries its set of points (as indices into a
/// [`PointTable`]) so that incidence questions such as "do X and Y meet"
/// reduce to bit operations.
#[derive(Clone, Debug)]
pub struct GrassmannianIndex {
    field: Field,
    n: usize,
    elements: Vec<Subspace>,
    lookup: HashMap<Subspace, Handle>,
    points: PointTable,
    point_sets: Vec<FixedBitSet>,
    adjacency: Vec<FixedBitSet>,
    distant: Vec<FixedBitSet>,
}

/// Enumerates G for GF(p)^{2n} and computes both relations.
pub fn build_index(p: u32, n: usize) -> Result<GrassmannianIndex> {
    GrassmannianIndex::build(Field::new(p)?, n)
}

pub(crate) fn check_size(field: Field, n: usize) -> Result<u64> {
    if n == 0 || n > MAX_N {
        return Err(Error::ResourceLimit(format!("n = {n} outside 1..={MAX_N}")));
    }
    let count = gaussian_binomial(field.p() as u64, 2 * n, n);
    if count > MAX_ELEMENTS {
        return Err(Error::ResourceLimit(format!(
            "G({}, {n}) has {count} elements, limit is {MAX_ELEMENTS}",
            field.p()
        )));
    }
    Ok(count)
}

impl GrassmannianIndex {
    pub fn build(field: Field, n: usize) -> Result<Self> {
        check_size(field, n)?;
        Ok(Self::from_elements(field, n, enumerate_subspaces(field, 2 * n, n)))
    }

    /// Builds the index over an already enumerated, canonically ordered
    /// element list.
    pub(crate) fn from_elements(field: Field, n: usize, elements: Vec<Subspace>) -> Self {
        let points = PointTable::new(field, 2 * n);
        let point_sets: Vec<FixedBitSet> = elements.iter().map(|e| points.point_set(e)).collect();
        let size = elements.len();
        let mut adjacency = vec![FixedBitSet::with_capacity(size); size];
        let mut distant = vec![FixedBitSet::with_capacity(size); size];
        let hyperplane_points = field.projective_points(n - 1);
        for i in 0..size {
            for j in i + 1..size {
                let common = point_sets[i].intersection_count(&point_sets[j]);
                if common == hyperplane_points {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
                if common == 0 {
                    distant[i].insert(j);
                    distant[j].insert(i);
                }
            }
        }
        let lookup = elements.iter().cloned().enumerate().map(|(h, e)| (e, h)).collect();
        GrassmannianIndex { field, n, elements, lookup, points, point_sets, adjacency, distant }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> usize {
        2 * self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn handles(&self) -> std::ops::Range<Handle> {
        0..self.elements.len()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn element(&self, h: Handle) -> &Subspace {
        &self.elements[h]
    }

    pub fn points(&self) -> &PointTable {
        &self.points
    }

    pub fn point_set(&self, h: Handle) -> &FixedBitSet {
        &self.point_sets[h]
    }

    /// Checks that `s` is a subspace of the same ambient space.
    pub fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field || s.ambient() != self.ambient() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn handle_of(&self, s: &Subspace) -> Result<Handle> {
        self.lookup.get(s).copied().ok_or_else(|| {
            Error::NotInGrassmannian(format!(
                "{s:?} (dim {} in ambient {}) is not an element of G({}, {})",
                s.dim(),
                s.ambient(),
                self.field.p(),
                self.n
            ))
        })
    }

    #[inline]
    pub fn adjacent(&self, a: Handle, b: Handle) -> bool {
        self.adjacency[a].contains(b)
    }

    #[inline]
    pub fn distant(&self, a: Handle, b: Handle) -> bool {
        self.distant[a].contains(b)
    }

    pub fn adjacency_rows(&self) -> &[FixedBitSet] {
        &self.adjacency
    }

    pub fn distant_rows(&self) -> &[FixedBitSet] {
        &self.distant
    }

    pub fn rows(&self, relation: Relation) -> &[FixedBitSet] {
        match relation {
            Relation::Adjacency => &self.adjacency,
            Relation::Distant => &self.distant,
        }
    }

    /// Dimension of `X ∩ Y`, read off the number of common points.
    pub fn meet_dim(&self, a: Handle, b: Handle) -> usize {
        self.dim_of_point_count(self.point_sets[a].intersection_count(&self.point_sets[b]))
    }

    pub(crate) fn dim_of_point_count(&self, count: usize) -> usize {
        (0..=self.ambient())
            .find(|&k| self.field.projective_points(k) == count)
            .expect("point count of a subspace")
    }

    /// The point `X ∩ Y` when the intersection is 1-dimensional.
    pub fn meet_point(&self, a: Handle, b: Handle) -> Option<usize> {
        let mut common = self.point_sets[a].clone();
        common.intersect_with(&self.point_sets[b]);
        if common.count_ones(..) == 1 {
            common.ones().next()
        } else {
            None
        }
    }

    /// Whether a set of points (e.g. a line) meets the element `h`.
    pub fn meets(&self, h: Handle, points: &FixedBitSet) -> bool {
        !self.point_sets[h].is_disjoint(points)
    }

    /// Degrees predicted by the closed formulas for G(p, n).
    pub fn expected_degrees(&self) -> (usize, usize) {
        let f = self.field;
        let adj = f.projective_points(self.n) * (f.projective_points(self.n + 1) - 1);
        let dist = f.order().pow((self.n * self.n) as u32);
        (adj, dist)
    }
}

fn check_pair(x: &Subspace, y: &Subspace) -> Result<()> {
    for s in [x, y] {
        if s.ambient() != 2 * s.dim() || s.dim() == 0 {
            return Err(Error::NotInGrassmannian(format!(
                "{s:?} has dim {} in ambient {}",
                s.dim(),
                s.ambient()
            )));
        }
    }
    if x.field() != y.field() || x.ambient() != y.ambient() {
        return Err(Error::AmbientMismatch);
    }
    Ok(())
}

/// `dim X/(X∩Y) = dim Y/(X∩Y) = 1`.
pub fn is_adjacent(x: &Subspace, y: &Subspace) -> Result<bool> {
    check_pair(x, y)?;
    let meet = x.intersect(y)?.dim();
    Ok(x.dim() - meet == 1 && y.dim() - meet == 1)
}

/// The sum-based form of adjacency: `dim (X+Y)/X = dim (X+Y)/Y = 1`.
pub fn is_adjacent_by_sum(x: &Subspace, y: &Subspace) -> Result<bool> {
    check_pair(x, y)?;
    let join = x.sum(y)?.dim();
    Ok(join - x.dim() == 1 && join - y.dim() == 1)
}

/// `X ⊕ Y = V`.
pub fn is_distant(x: &Subspace, y: &Subspace) -> Result<bool> {
    check_pair(x, y)?;
    Ok(x.intersect(y)?.is_zero() && x.sum(y)?.dim() == x.ambient())
}
