//! The projective line over the matrix ring R = M_n(GF(p)) and its
//! identification with G.
//!
//! A point R(α, β) is the left-equivalence class of an admissible pair of
//! n×n matrices, i.e. one with `rank (α | β) = n`. It is stored as the RREF of
//! the n×2n block row, which is the same for every representative.
//!
//! Matrices act on the right throughout: a vector `u` is a row and `u^α` is
//! `u·α`. A group element ψ = [[α, β], [γ, δ]] of GL(2, R) sends
//! R(a, b) to R(a·α + b·γ, a·β + b·δ), and `act(ψ1·ψ2, x) = act(ψ2, act(ψ1, x))`.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FpMatrix};
use crate::grassmann::{is_distant, GrassmannianIndex, Handle};
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingPoint {
    block: FpMatrix,
}

impl RingPoint {
    pub fn from_block(block: &FpMatrix) -> Result<Self> {
        let n = block.rows();
        if block.cols() != 2 * n || n == 0 {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} is not an n x 2n block row",
                block.rows(),
                block.cols()
            )));
        }
        let red = block.rref();
        if red.rank < n {
            return Err(Error::NotAdmissible);
        }
        Ok(RingPoint { block: red.matrix })
    }

    /// R(I, 0).
    pub fn origin(field: Field, n: usize) -> Self {
        make_point(&FpMatrix::identity(field, n), &FpMatrix::zeros(field, n, n))
            .expect("admissible")
    }

    /// R(0, I).
    pub fn infinity(field: Field, n: usize) -> Self {
        make_point(&FpMatrix::zeros(field, n, n), &FpMatrix::identity(field, n))
            .expect("admissible")
    }

    /// Canonical n×2n block row.
    pub fn block(&self) -> &FpMatrix {
        &self.block
    }

    pub fn n(&self) -> usize {
        self.block.rows()
    }

    pub fn field(&self) -> Field {
        self.block.field()
    }

    /// α of the canonical representative.
    pub fn alpha(&self) -> FpMatrix {
        self.block.select_cols(0..self.n())
    }

    /// β of the canonical representative.
    pub fn beta(&self) -> FpMatrix {
        self.block.select_cols(self.n()..2 * self.n())
    }

    /// Points are distant iff stacking their block rows gives an element of
    /// GL(2, R).
    pub fn is_distant(&self, other: &RingPoint) -> bool {
        self.block
            .vstack(&other.block)
            .map(|m| m.is_invertible())
            .unwrap_or(false)
    }
}

impl std::fmt::Debug for RingPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "R{:?}", Subspace::row_space(&self.block))
    }
}

/// R(α, β), rejecting pairs whose block row is not of full rank.
pub fn make_point(alpha: &FpMatrix, beta: &FpMatrix) -> Result<RingPoint> {
    let n = alpha.rows();
    for m in [alpha, beta] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n} blocks, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    RingPoint::from_block(&alpha.hstack(beta)?)
}

/// Every point of P(M_n(GF(p))), found by running over all pairs (α, β) and
/// keeping the admissible ones. Sorted and deduplicated.
pub fn all_ring_points(field: Field, n: usize) -> Result<Vec<RingPoint>> {
    let entries = 2 * n * n;
    let total = (field.order() as u64).checked_pow(entries as u32).unwrap_or(u64::MAX);
    if total > 1 << 22 {
        return Err(Error::ResourceLimit(format!("{total} pairs to scan")));
    }
    let mut seen = BTreeSet::new();
    let mut digits = vec![0u8; entries];
    for _ in 0..total {
        let block = FpMatrix::from_rows(
            field,
            2 * n,
            &digits.chunks(2 * n).collect::<Vec<_>>(),
        )?;
        if let Ok(pt) = RingPoint::from_block(&block) {
            seen.insert(pt);
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < field.p() {
                break;
            }
            *d = 0;
        }
    }
    Ok(seen.into_iter().collect())
}

/// Coordinates on V given by two distant elements U, U′ of G and an
/// isomorphism λ: U → U′, written as an n×n matrix with respect to the
/// canonical bases of U and U′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    u: Subspace,
    u_prime: Subspace,
    lambda: FpMatrix,
    /// Rows: basis of U, then the λ-images of that basis.
    matrix: FpMatrix,
    inverse: FpMatrix,
}

impl Frame {
    pub fn new(u: Subspace, u_prime: Subspace, lambda: FpMatrix) -> Result<Self> {
        let n = u.dim();
        let bad = |m: &str| Err(Error::BadFrame(m.to_string()));
        if u.ambient() != 2 * n || u_prime.dim() != n || u_prime.ambient() != 2 * n || n == 0 {
            return bad("U and U' must be n-subspaces of a 2n-space");
        }
        if !is_distant(&u, &u_prime)? {
            return bad("U and U' are not distant");
        }
        if lambda.rows() != n || lambda.cols() != n || lambda.field() != u.field() {
            return bad("lambda must be an n x n matrix over the same field");
        }
        if !lambda.is_invertible() {
            return bad("lambda is singular");
        }
        let matrix = u.basis().vstack(&lambda.matmul(u_prime.basis())?)?;
        let inverse = matrix.invert()?;
        Ok(Frame { u, u_prime, lambda, matrix, inverse })
    }

    /// U = first n unit vectors, U′ = last n, λ = identity.
    pub fn standard(field: Field, n: usize) -> Self {
        let id = FpMatrix::identity(field, 2 * n);
        Frame::new(
            Subspace::row_space(&id.select_rows(0..n)),
            Subspace::row_space(&id.select_rows(n..2 * n)),
            FpMatrix::identity(field, n),
        )
        .expect("standard frame is valid")
    }

    pub fn u(&self) -> &Subspace {
        &self.u
    }

    pub fn u_prime(&self) -> &Subspace {
        &self.u_prime
    }

    pub fn lambda(&self) -> &FpMatrix {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.u.dim()
    }

    pub fn field(&self) -> Field {
        self.u.field()
    }

    /// The 2n×2n matrix whose rows are the frame basis `u_i` then `u_i^λ`.
    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    /// Coordinates of `u ∈ U` in the canonical basis of U.
    pub fn coords_in_u(&self, u: &[u8]) -> Option<Vec<u8>> {
        self.u.basis().solve_left(u)
    }

    /// `u^λ` for a vector `u ∈ U`.
    pub fn apply_lambda(&self, u: &[u8]) -> Option<Vec<u8>> {
        let x = self.coords_in_u(u)?;
        let y = self.lambda.apply_row(&x).ok()?;
        self.u_prime.basis().apply_row(&y).ok()
    }

    /// Frame coordinates `(x0, x1)` of a vector `v = x0·B_U + x1·λ·B_U′`.
    pub fn coordinates(&self, v: &[u8]) -> Result<Vec<u8>> {
        self.inverse.apply_row(v)
    }
}

/// `U^(α, β) = {u^α + u^{βλ} : u ∈ U}`. In the standard frame this is the
/// row space of `(α | β)`.
pub fn phi(pt: &RingPoint, frame: &Frame) -> Result<Subspace> {
    if pt.field() != frame.field() || pt.n() != frame.n() {
        return Err(Error::BadFrame("frame does not match the ring point".into()));
    }
    Ok(Subspace::row_space(&pt.block.matmul(frame.matrix())?))
}

/// Inverse of `phi` for a fixed frame.
pub fn phi_inverse(x: &Subspace, frame: &Frame) -> Result<RingPoint> {
    RingPoint::from_block(&x.basis().matmul(&frame.inverse)?)
}

/// Element of GL(2, R), stored as the invertible 2n×2n matrix
/// [[α, β], [γ, δ]].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gl2Element {
    matrix: FpMatrix,
}

impl Gl2Element {
    pub fn from_matrix(matrix: FpMatrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch("expected a 2n x 2n matrix".into()));
        }
        if !matrix.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Gl2Element { matrix })
    }

    pub fn from_blocks(
        alpha: &FpMatrix,
        beta: &FpMatrix,
        gamma: &FpMatrix,
        delta: &FpMatrix,
    ) -> Result<Self> {
        Self::from_matrix(alpha.hstack(beta)?.vstack(&gamma.hstack(delta)?)?)
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Gl2Element { matrix: FpMatrix::identity(field, 2 * n) }
    }

    /// [[0, I], [I, 0]].
    pub fn swap(field: Field, n: usize) -> Self {
        let (z, i) = (FpMatrix::zeros(field, n, n), FpMatrix::identity(field, n));
        Self::from_blocks(&z, &i, &i, &z).expect("invertible")
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> Self {
        Gl2Element { matrix: random_invertible(rng, field, 2 * n) }
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows() / 2
    }

    pub fn compose(&self, other: &Gl2Element) -> Gl2Element {
        Gl2Element { matrix: self.matrix.matmul(&other.matrix).expect("same shape") }
    }

    pub fn inverse(&self) -> Gl2Element {
        Gl2Element { matrix: self.matrix.invert().expect("invertible") }
    }
}

impl std::fmt::Debug for Gl2Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GL2{:?}", self.matrix)
    }
}

pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, field: Field, size: usize) -> FpMatrix {
    loop {
        let data = (0..size * size).map(|_| rng.gen_range(0..field.p()) as i64).collect();
        let m = FpMatrix::from_vec(field, size, size, data).expect("shape");
        if m.is_invertible() {
            return m;
        }
    }
}

/// Every invertible 2n×2n matrix, for tiny cases only.
pub fn all_gl2(field: Field, n: usize) -> Result<Vec<Gl2Element>> {
    let size = 2 * n;
    let entries = size * size;
    let total = (field.order() as u64).checked_pow(entries as u32).unwrap_or(u64::MAX);
    if total > 1 << 20 {
        return Err(Error::ResourceLimit(format!("{total} matrices to scan")));
    }
    let mut out = Vec::new();
    let mut digits = vec![0u8; entries];
    for _ in 0..total {
        let m = FpMatrix::from_rows(field, size, &digits.chunks(size).collect::<Vec<_>>())?;
        if let Ok(g) = Gl2Element::from_matrix(m) {
            out.push(g);
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < field.p() {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

/// `R(α, β) ↦ R(α·α′ + β·γ′, α·β′ + β·δ′)`.
pub fn act(psi: &Gl2Element, pt: &RingPoint) -> Result<RingPoint> {
    if psi.matrix.field() != pt.field() || psi.n() != pt.n() {
        return Err(Error::DimensionMismatch("group element and point differ in n or p".into()));
    }
    RingPoint::from_block(&pt.block.matmul(&psi.matrix)?)
}

/// ψ̂: `u0 + u1^λ ↦ (u0^α + u1^γ) + (u0^β + u1^δ)^λ`, as a 2n×2n matrix
/// acting on row vectors of V.
pub fn hat(psi: &Gl2Element, frame: &Frame) -> Result<FpMatrix> {
    if psi.n() != frame.n() || psi.matrix.field() != frame.field() {
        return Err(Error::DimensionMismatch("group element and frame differ in n or p".into()));
    }
    frame.inverse.matmul(&psi.matrix)?.matmul(frame.matrix())
}

/// A ψ taking `a` to R(I, 0) and `b` to R(0, I), when the two are distant.
pub fn distant_witness(a: &RingPoint, b: &RingPoint) -> Option<Gl2Element> {
    let m = a.block.vstack(&b.block).ok()?;
    Gl2Element::from_matrix(m).ok().map(|g| g.inverse())
}

/// A ψ taking (R(I,0), R(0,I), R(I,I)) to (a, b, c), when the three points
/// are mutually distant.
pub fn triple_witness(a: &RingPoint, b: &RingPoint, c: &RingPoint) -> Option<Gl2Element> {
    if !(a.is_distant(b) && a.is_distant(c) && b.is_distant(c)) {
        return None;
    }
    let n = a.n();
    let stacked = a.block.vstack(&b.block).ok()?;
    // c = X·a + Y·b with X, Y invertible since c is distant from both.
    let xy = c.block.matmul(&stacked.invert().ok()?).ok()?;
    let (x, y) = (xy.select_cols(0..n), xy.select_cols(n..2 * n));
    let top = x.matmul(&a.block).ok()?;
    let bottom = y.matmul(&b.block).ok()?;
    Gl2Element::from_matrix(top.vstack(&bottom).ok()?).ok()
}

/// `R(ι⁻¹αι, ι⁻¹βι)`: the point of the ring line of another frame that
/// corresponds to `pt` under the ring isomorphism induced by `ι: U → Ũ`.
pub fn conjugate_point(pt: &RingPoint, iota: &FpMatrix) -> Result<RingPoint> {
    let inv = iota.invert()?;
    let a = inv.matmul(&pt.alpha())?.matmul(iota)?;
    let b = inv.matmul(&pt.beta())?.matmul(iota)?;
    make_point(&a, &b)
}

/// The linear automorphism `u0 + u1^λ ↦ u0^ι + u1^{ιλ̃}` of V which carries
/// `phi(pt, from)` to `phi(conjugate_point(pt, ι), to)`.
pub fn frame_transfer(from: &Frame, to: &Frame, iota: &FpMatrix) -> Result<FpMatrix> {
    let n = from.n();
    let z = FpMatrix::zeros(from.field(), n, n);
    let diag = iota.hstack(&z)?.vstack(&z.hstack(iota)?)?;
    from.inverse.matmul(&diag)?.matmul(to.matrix())
}

/// The embedded projective line over the centre: R(x·I, y·I) for the p+1
/// points (x : y) of PG(1, p). Sorted.
pub fn standard_z_chain(field: Field, n: usize) -> Vec<RingPoint> {
    let id = FpMatrix::identity(field, n);
    let mut pts: Vec<RingPoint> = projective_line(field)
        .into_iter()
        .map(|(x, y)| make_point(&id.scale(x), &id.scale(y)).expect("admissible"))
        .collect();
    pts.sort();
    pts
}

/// Representatives (x, y) of the points of PG(1, p): (1, 0) then (x, 1).
pub fn projective_line(field: Field) -> Vec<(u8, u8)> {
    std::iter::once((1, 0)).chain(field.elements().map(|x| (x, 1))).collect()
}

/// Images of the standard chain under each ψ of `sample`, each chain sorted,
/// the list sorted and deduplicated.
pub fn z_chains(field: Field, n: usize, sample: &[Gl2Element]) -> Result<Vec<Vec<RingPoint>>> {
    let base = standard_z_chain(field, n);
    let mut out = BTreeSet::new();
    for psi in sample {
        let mut chain = base.iter().map(|pt| act(psi, pt)).collect::<Result<Vec<_>>>()?;
        chain.sort();
        out.insert(chain);
    }
    Ok(out.into_iter().collect())
}

/// Sorted handles of the phi-image of a chain.
pub fn chain_handles(
    index: &GrassmannianIndex,
    chain: &[RingPoint],
    frame: &Frame,
) -> Result<Vec<Handle>> {
    let mut hs = chain
        .iter()
        .map(|pt| index.handle_of(&phi(pt, frame)?))
        .collect::<Result<Vec<_>>>()?;
    hs.sort_unstable();
    Ok(hs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub ring_points: usize,
    pub grassmannian: usize,
    pub injective: bool,
    pub surjective: bool,
    pub distant_pairs_ring: usize,
    pub distant_pairs_grassmannian: usize,
    /// Pairs where ring distance and complementarity of the images differ.
    pub distance_mismatches: Vec<(RingPointLabel, RingPointLabel)>,
}

impl PhiReport {
    pub fn ok(&self) -> bool {
        self.ring_points == self.grassmannian
            && self.injective
            && self.surjective
            && self.distant_pairs_ring == self.distant_pairs_grassmannian
            && self.distance_mismatches.is_empty()
    }
}

/// Block row of a point, written as digit strings.
pub type RingPointLabel = String;

fn label(pt: &RingPoint) -> RingPointLabel {
    format!("{:?}", pt)
}

/// Checks that phi is a bijection from P(R) onto G which matches the two
/// distant relations.
pub fn phi_is_bijective(index: &GrassmannianIndex, frame: &Frame) -> Result<PhiReport> {
    let pts = all_ring_points(index.field(), index.n())?;
    let images = pts
        .iter()
        .map(|pt| index.handle_of(&phi(pt, frame)?))
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<Handle> = images.iter().copied().collect();
    let mut ring_pairs = 0;
    let mut mismatches = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let ring = pts[i].is_distant(&pts[j]);
            ring_pairs += usize::from(ring);
            if ring != index.distant(images[i], images[j]) {
                mismatches.push((label(&pts[i]), label(&pts[j])));
            }
        }
    }
    let grass_pairs = index
        .handles()
        .map(|h| index.distant_rows()[h].count_ones(..))
        .sum::<usize>()
        / 2;
    Ok(PhiReport {
        ring_points: pts.len(),
        grassmannian: index.len(),
        injective: distinct.len() == pts.len(),
        surjective: distinct.len() == index.len(),
        distant_pairs_ring: ring_pairs,
        distant_pairs_grassmannian: grass_pairs,
        distance_mismatches: mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::build_index;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F2: Field = Field::gf2();

    fn m(rows: &[&str]) -> FpMatrix {
        FpMatrix::parse(F2, rows).unwrap()
    }

    fn s(rows: &[&str]) -> Subspace {
        Subspace::parse(F2, 4, rows).unwrap()
    }

    #[test]
    fn make_point_examples() {
        let (i, z) = (FpMatrix::identity(F2, 2), FpMatrix::zeros(F2, 2, 2));
        assert_eq!(make_point(&i, &z).unwrap(), RingPoint::origin(F2, 2));
        assert_eq!(make_point(&z, &z), Err(Error::NotAdmissible));
        assert_eq!(make_point(&i, &i).unwrap().block(), &m(&["1010", "0101"]));
        assert!(matches!(
            make_point(&i, &FpMatrix::identity(F2, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn left_multiplication_invariance() {
        let pts = all_ring_points(F2, 2).unwrap();
        let gl2: Vec<FpMatrix> = (0..16u8)
            .map(|b| m(&[&format!("{}{}", b >> 3 & 1, b >> 2 & 1), &format!("{}{}", b >> 1 & 1, b & 1)]))
            .filter(|g| g.is_invertible())
            .collect();
        assert_eq!(gl2.len(), 6);
        for pt in &pts {
            for g in &gl2 {
                let moved = make_point(&g.matmul(&pt.alpha()).unwrap(), &g.matmul(&pt.beta()).unwrap());
                assert_eq!(moved.as_ref(), Ok(pt));
            }
        }
    }

    #[test]
    fn phi_standard_frame() {
        let fr = Frame::standard(F2, 2);
        let (i, z) = (FpMatrix::identity(F2, 2), FpMatrix::zeros(F2, 2, 2));
        assert_eq!(phi(&make_point(&i, &z).unwrap(), &fr).unwrap(), s(&["1000", "0100"]));
        assert_eq!(phi(&make_point(&z, &i).unwrap(), &fr).unwrap(), s(&["0010", "0001"]));
        assert_eq!(phi(&make_point(&i, &i).unwrap(), &fr).unwrap(), s(&["1010", "0101"]));
    }

    #[test]
    fn bad_frames() {
        let u = s(&["1000", "0100"]);
        let i = FpMatrix::identity(F2, 2);
        assert!(matches!(
            Frame::new(u.clone(), s(&["1000", "0010"]), i.clone()),
            Err(Error::BadFrame(_))
        ));
        assert!(matches!(
            Frame::new(u.clone(), s(&["0010", "0001"]), m(&["11", "11"])),
            Err(Error::BadFrame(_))
        ));
        assert!(matches!(Frame::new(u.clone(), s(&["0010"]), i), Err(Error::BadFrame(_))));
    }

    #[test]
    fn phi_bijective_small() {
        let g = build_index(2, 2).unwrap();
        let r = phi_is_bijective(&g, &Frame::standard(F2, 2)).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.ring_points, 35);
        assert_eq!(r.distant_pairs_ring, 280);
    }

    #[test]
    fn act_examples() {
        let fr = Frame::standard(F2, 2);
        let id = Gl2Element::identity(F2, 2);
        assert!(hat(&id, &fr).unwrap().is_identity());
        for pt in all_ring_points(F2, 2).unwrap() {
            assert_eq!(act(&id, &pt).unwrap(), pt);
        }
        let sw = Gl2Element::swap(F2, 2);
        assert_eq!(act(&sw, &RingPoint::origin(F2, 2)).unwrap(), RingPoint::infinity(F2, 2));
        let h = hat(&sw, &fr).unwrap();
        assert_eq!(fr.u().map(&h).unwrap(), *fr.u_prime());
        assert_eq!(fr.u_prime().map(&h).unwrap(), *fr.u());
    }

    #[test]
    fn action_law_and_equivariance_with_other_frame() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f3 = Field::gf3();
        let fr = Frame::new(
            Subspace::parse(f3, 4, &["1021", "0112"]).unwrap(),
            Subspace::parse(f3, 4, &["0010", "0001"]).unwrap(),
            FpMatrix::parse(f3, &["12", "01"]).unwrap(),
        )
        .unwrap();
        let pts = all_ring_points(f3, 2).unwrap();
        assert_eq!(pts.len(), 130);
        for _ in 0..10 {
            let (a, b) = (Gl2Element::random(&mut rng, f3, 2), Gl2Element::random(&mut rng, f3, 2));
            let ab = a.compose(&b);
            assert_eq!(
                hat(&ab, &fr).unwrap(),
                hat(&a, &fr).unwrap().matmul(&hat(&b, &fr).unwrap()).unwrap()
            );
            let ha = hat(&a, &fr).unwrap();
            for pt in pts.iter().step_by(7) {
                assert_eq!(act(&ab, pt).unwrap(), act(&b, &act(&a, pt).unwrap()).unwrap());
                assert_eq!(
                    phi(&act(&a, pt).unwrap(), &fr).unwrap(),
                    phi(pt, &fr).unwrap().map(&ha).unwrap()
                );
            }
        }
    }

    #[test]
    fn phi_inverse_roundtrip() {
        let f3 = Field::gf3();
        let fr = Frame::new(
            Subspace::parse(f3, 4, &["1100", "0011"]).unwrap(),
            Subspace::parse(f3, 4, &["1000", "0010"]).unwrap(),
            FpMatrix::parse(f3, &["20", "11"]).unwrap(),
        )
        .unwrap();
        for pt in all_ring_points(f3, 2).unwrap() {
            assert_eq!(phi_inverse(&phi(&pt, &fr).unwrap(), &fr).unwrap(), pt);
        }
    }

    #[test]
    fn standard_chain() {
        let c = standard_z_chain(F2, 2);
        assert_eq!(c.len(), 3);
        let (i, z) = (FpMatrix::identity(F2, 2), FpMatrix::zeros(F2, 2, 2));
        for (a, b) in [(&i, &z), (&z, &i), (&i, &i)] {
            assert!(c.contains(&make_point(a, b).unwrap()));
        }
        assert_eq!(standard_z_chain(Field::gf3(), 2).len(), 4);
        let fr = Frame::standard(F2, 2);
        let imgs: BTreeSet<Subspace> = c.iter().map(|p| phi(p, &fr).unwrap()).collect();
        let want: BTreeSet<Subspace> =
            [s(&["1000", "0100"]), s(&["0010", "0001"]), s(&["1010", "0101"])].into();
        assert_eq!(imgs, want);
        for a in &c {
            for b in &c {
                assert_eq!(a.is_distant(b), a != b);
            }
        }
    }

    #[test]
    fn witnesses() {
        let pts = all_ring_points(F2, 2).unwrap();
        let (o, inf) = (RingPoint::origin(F2, 2), RingPoint::infinity(F2, 2));
        let unit = make_point(&FpMatrix::identity(F2, 2), &FpMatrix::identity(F2, 2)).unwrap();
        for a in &pts {
            for b in &pts {
                let w = distant_witness(a, b);
                assert_eq!(w.is_some(), a.is_distant(b));
                if let Some(w) = w {
                    assert_eq!(act(&w, a).unwrap(), o);
                    assert_eq!(act(&w, b).unwrap(), inf);
                }
            }
        }
        let (a, b, c) = (&pts[0], &pts[34], &pts[20]);
        if a.is_distant(b) && b.is_distant(c) && a.is_distant(c) {
            let w = triple_witness(a, b, c).unwrap();
            assert_eq!(act(&w, &o).unwrap(), *a);
            assert_eq!(act(&w, &inf).unwrap(), *b);
            assert_eq!(act(&w, &unit).unwrap(), *c);
        }
        assert!(triple_witness(&o, &o, &inf).is_none());
    }

    #[test]
    fn z_chains_identity_and_gl4_orbit() {
        let id = Gl2Element::identity(F2, 2);
        assert_eq!(z_chains(F2, 2, &[id]).unwrap(), vec![standard_z_chain(F2, 2)]);
        let group = all_gl2(F2, 2).unwrap();
        assert_eq!(group.len(), 20160);
        let chains = z_chains(F2, 2, &group).unwrap();
        assert_eq!(chains.len(), 560);
        assert!(chains.iter().all(|c| c.len() == 3));
    }
}
