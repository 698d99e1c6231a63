//! Permutations of G induced by invertible linear maps of V and by the
//! duality X ↦ X^⊥.
//!
//! Over a prime field the only field automorphism is the identity, so every
//! semilinear map of V is linear and these two kinds cover the collineations
//! and correlations.

use super::{CliqueLabel, GrassmannianIndex, Handle};
use crate::error::{Error, Result};
use crate::gf::FpMatrix;

#[derive(Clone, Debug)]
pub enum InducedMap<'a> {
    /// `X ↦ X·g` for an invertible 2n×2n matrix `g`.
    Linear(&'a FpMatrix),
    /// `X ↦ X^⊥` for the standard dot product.
    Duality,
}

/// The permutation `perm[h]` = handle of the image of element `h`.
pub fn induced_map(index: &GrassmannianIndex, map: InducedMap<'_>) -> Result<Vec<Handle>> {
    match map {
        InducedMap::Linear(g) => {
            if g.field() != index.field() || g.rows() != index.ambient() || !g.is_square() {
                return Err(Error::DimensionMismatch(format!(
                    "{g:?} does not act on a space of dimension {}",
                    index.ambient()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::Singular);
            }
            index.elements().iter().map(|x| index.handle_of(&x.map(g)?)).collect()
        }
        InducedMap::Duality => index
            .elements()
            .iter()
            .map(|x| index.handle_of(&x.annihilator()))
            .collect(),
    }
}

pub fn is_permutation(perm: &[Handle]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&h| h < perm.len() && !std::mem::replace(&mut seen[h], true))
}

/// Whether `perm` maps both relations onto themselves. Returns the first
/// offending pair otherwise.
pub fn relation_violation(index: &GrassmannianIndex, perm: &[Handle]) -> Option<(Handle, Handle)> {
    for a in index.handles() {
        for b in a + 1..index.len() {
            let (x, y) = (perm[a], perm[b]);
            if index.adjacent(a, b) != index.adjacent(x, y) || index.distant(a, b) != index.distant(x, y)
            {
                return Some((a, b));
            }
        }
    }
    None
}

/// Sorted image of a clique's member set.
pub fn image_of(perm: &[Handle], clique: &CliqueLabel) -> Vec<Handle> {
    let mut out: Vec<Handle> = clique.members.iter().map(|&h| perm[h]).collect();
    out.sort_unstable();
    out
}
