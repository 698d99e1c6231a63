//! Subspaces of GF(p)^d in canonical form.
//!
//! A [`Subspace`] is stored as the trimmed reduced row echelon form of any of
//! its bases, so two values are equal exactly when they describe the same
//! subspace. Points are 1-dimensional subspaces and lines are 2-dimensional
//! ones; there is no separate projective type.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::gf::{format_digits, parse_digits, Field, FpMatrix};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: FpMatrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { basis: FpMatrix::zeros(field, 0, ambient) }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace { basis: FpMatrix::identity(field, ambient) }
    }

    /// Row space of `m`.
    pub fn row_space(m: &FpMatrix) -> Self {
        Subspace { basis: m.rref().trimmed() }
    }

    pub fn span<V: AsRef<[u8]>>(field: Field, ambient: usize, vectors: &[V]) -> Result<Self> {
        Ok(Self::row_space(&FpMatrix::from_rows(field, ambient, vectors)?))
    }

    /// Span of vectors written as digit strings, e.g. `["1000", "0100"]`.
    pub fn parse(field: Field, ambient: usize, rows: &[&str]) -> Result<Self> {
        let vs = rows.iter().map(|r| parse_digits(field, r)).collect::<Result<Vec<_>>>()?;
        Self::span(field, ambient, &vs)
    }

    /// Wraps a matrix that is already trimmed RREF; fails otherwise.
    pub fn from_canonical_basis(basis: FpMatrix) -> Result<Self> {
        let red = basis.rref();
        if red.rank != basis.rows() || red.matrix != basis {
            return Err(Error::Parse(format!("{basis:?} is not a trimmed RREF basis")));
        }
        Ok(Subspace { basis })
    }

    #[inline]
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() || self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        // X ∩ Y = (X^⊥ + Y^⊥)^⊥ for a non-degenerate form.
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Whether `other ≤ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.basis.row_iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        if v.len() != self.ambient() {
            return false;
        }
        // Reduce by pivots; v is in the span iff the remainder is zero.
        let f = self.field();
        let mut rest = v.to_vec();
        for row in self.basis.row_iter() {
            let pc = row.iter().position(|&a| a != 0).expect("trimmed basis");
            let factor = rest[pc];
            if factor != 0 {
                for (r, &b) in rest.iter_mut().zip(row) {
                    *r = f.sub(*r, f.mul(factor, b));
                }
            }
        }
        rest.iter().all(|&a| a == 0)
    }

    /// Orthogonal complement with respect to the standard dot product.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.field(), self.ambient());
        }
        Subspace { basis: self.basis.kernel() }
    }

    pub fn is_complement_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.dim() + other.dim() == self.ambient()
            && self.basis.vstack(&other.basis)?.rank() == self.ambient())
    }

    /// Image under `v ↦ v·g` for a `d×d` matrix `g`.
    pub fn map(&self, g: &FpMatrix) -> Result<Self> {
        if g.rows() != self.ambient() || g.cols() != self.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map on a space of dimension {}",
                g.rows(),
                g.cols(),
                self.ambient()
            )));
        }
        Ok(Self::row_space(&self.basis.matmul(g)?))
    }

    /// All `p^dim` vectors of the subspace, zero first.
    pub fn vectors(&self) -> Vec<Vec<u8>> {
        let f = self.field();
        let p = f.order();
        let total = p.pow(self.dim() as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0u8; self.dim()];
        for _ in 0..total {
            out.push(combine(f, &self.basis, &coeffs));
            for c in coeffs.iter_mut().rev() {
                *c += 1;
                if (*c as usize) < p {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    /// The points (1-dimensional subspaces) contained in `self`, each given
    /// by its normalized spanning vector (first nonzero entry equal to 1).
    pub fn point_vectors(&self) -> Vec<Vec<u8>> {
        let mut pts: Vec<Vec<u8>> = self
            .vectors()
            .into_iter()
            .filter(|v| leading(v).is_some_and(|a| a == 1))
            .collect();
        pts.sort();
        pts
    }

    /// Text block: header `p d`, then one basis row per line as `d` digits.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.field().p(), self.ambient());
        for r in self.basis.row_iter() {
            s.push_str(&format_digits(r));
            s.push('\n');
        }
        s
    }

    pub fn from_text(block: &str) -> Result<Self> {
        let mut lines = block.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty subspace block".into()))?;
        let (field, d) = parse_header_pd(header)?;
        let rows: Vec<Vec<u8>> = lines
            .map(|l| {
                let v = parse_digits(field, l)?;
                if v.len() != d {
                    return Err(Error::Parse(format!("row {l:?} does not have {d} digits")));
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        Self::span(field, d, &rows)
    }
}

fn parse_header_pd(header: &str) -> Result<(Field, usize)> {
    let nums: Vec<u32> = header
        .split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{header:?}: {e}"))))
        .collect::<Result<_>>()?;
    match nums[..] {
        [p, d] => Ok((Field::new(p)?, d as usize)),
        _ => Err(Error::Parse(format!("expected header \"p d\", got {header:?}"))),
    }
}

/// Serializes subspaces as text blocks separated by blank lines.
pub fn subspaces_to_text(spaces: &[Subspace]) -> String {
    spaces.iter().map(Subspace::to_text).collect::<Vec<_>>().join("\n")
}

pub fn subspaces_from_text(text: &str) -> Result<Vec<Subspace>> {
    split_blocks(text).into_iter().map(Subspace::from_text).collect()
}

pub(crate) fn split_blocks(text: &str) -> Vec<&str> {
    let mut blocks = Vec::new();
    let mut start: Option<usize> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if line.trim().is_empty() {
            if let Some(s) = start.take() {
                blocks.push(&text[s..offset]);
            }
        } else if start.is_none() {
            start = Some(offset);
        }
        offset += line.len();
    }
    if let Some(s) = start {
        blocks.push(&text[s..]);
    }
    blocks
}

fn leading(v: &[u8]) -> Option<u8> {
    v.iter().copied().find(|&a| a != 0)
}

fn combine(f: Field, basis: &FpMatrix, coeffs: &[u8]) -> Vec<u8> {
    let mut v = vec![0u8; basis.cols()];
    for (row, &c) in basis.row_iter().zip(coeffs) {
        if c != 0 {
            for (x, &b) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, b));
            }
        }
    }
    v
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
pub fn normalize(f: Field, v: &[u8]) -> Option<Vec<u8>> {
    let lead = leading(v)?;
    let s = f.inv(lead)?;
    Some(v.iter().map(|&a| f.mul(a, s)).collect())
}

/// Number of k-dimensional subspaces of a d-dimensional space over GF(q).
pub fn gaussian_binomial(q: u64, d: usize, k: usize) -> u64 {
    if k > d {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((d - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    (num / den) as u64
}

/// Every k-dimensional subspace of GF(p)^d exactly once, sorted by their
/// canonical bases.
///
/// Generated from RREF pivot profiles: each choice of k pivot columns and
/// each filling of the free positions gives a distinct canonical basis.
pub fn enumerate_subspaces(field: Field, d: usize, k: usize) -> Vec<Subspace> {
    assert!(k <= d, "k = {k} exceeds ambient dimension {d}");
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        enumerate_profile(field, d, &pivots, &mut out);
        // next k-combination of 0..d
        let Some(i) = (0..k).rev().find(|&i| pivots[i] < d - k + i) else {
            break;
        };
        pivots[i] += 1;
        for j in i + 1..k {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    out.sort();
    out
}

fn enumerate_profile(field: Field, d: usize, pivots: &[usize], out: &mut Vec<Subspace>) {
    let k = pivots.len();
    let free: Vec<(usize, usize)> = (0..k)
        .flat_map(|r| {
            (pivots[r] + 1..d)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (r, c))
        })
        .collect();
    let p = field.p();
    let mut values = vec![0u8; free.len()];
    loop {
        let mut data = vec![0u8; k * d];
        for (r, &pc) in pivots.iter().enumerate() {
            data[r * d + pc] = 1;
        }
        for (&(r, c), &v) in free.iter().zip(&values) {
            data[r * d + c] = v;
        }
        out.push(Subspace { basis: FpMatrix::from_residues(field, k, d, data) });
        let Some(i) = (0..values.len()).rev().find(|&i| values[i] + 1 < p) else {
            break;
        };
        values[i] += 1;
        values[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
}

/// Index of the points of PG(d-1, p), used to represent subspaces as point
/// sets for fast incidence queries.
#[derive(Clone, Debug)]
pub struct PointTable {
    field: Field,
    ambient: usize,
    points: Vec<Vec<u8>>,
    by_code: Vec<u32>,
}

impl PointTable {
    pub fn new(field: Field, ambient: usize) -> Self {
        let points: Vec<Vec<u8>> = enumerate_subspaces(field, ambient, 1)
            .into_iter()
            .map(|s| s.basis().row(0).to_vec())
            .collect();
        let size = field.order().pow(ambient as u32);
        let mut by_code = vec![u32::MAX; size];
        for (i, v) in points.iter().enumerate() {
            by_code[encode(field, v)] = i as u32;
        }
        PointTable { field, ambient, points, by_code }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[u8] {
        &self.points[i]
    }

    pub fn point(&self, i: usize) -> Subspace {
        Subspace {
            basis: FpMatrix::from_residues(self.field, 1, self.ambient, self.points[i].clone()),
        }
    }

    /// Index of the point spanned by the nonzero vector `v`.
    pub fn index_of(&self, v: &[u8]) -> Option<usize> {
        let n = normalize(self.field, v)?;
        let i = self.by_code[encode(self.field, &n)];
        (i != u32::MAX).then_some(i as usize)
    }

    pub fn point_set(&self, s: &Subspace) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        for v in s.point_vectors() {
            set.insert(self.index_of(&v).expect("normalized vector is a point"));
        }
        set
    }

    /// Points of the line joining two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> FixedBitSet {
        let f = self.field;
        let mut set = FixedBitSet::with_capacity(self.len());
        set.insert(a);
        set.insert(b);
        let (va, vb) = (&self.points[a], &self.points[b]);
        for c in 1..f.p() {
            let v: Vec<u8> = va.iter().zip(vb).map(|(&x, &y)| f.add(x, f.mul(c, y))).collect();
            if let Some(i) = self.index_of(&v) {
                set.insert(i);
            }
        }
        set
    }
}

fn encode(f: Field, v: &[u8]) -> usize {
    v.iter().fold(0usize, |acc, &a| acc * f.order() + a as usize)
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, r) in self.basis.row_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_digits(r))?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Field = Field::gf2();

    fn s(rows: &[&str]) -> Subspace {
        Subspace::parse(F2, rows[0].len(), rows).unwrap()
    }

    /// Independent membership oracle: enumerate every vector of `a` and test
    /// whether it is a combination of `b`'s rows by brute force.
    fn brute_intersection(a: &Subspace, b: &Subspace) -> Vec<Vec<u8>> {
        let bv = b.vectors();
        let mut out: Vec<Vec<u8>> = a.vectors().into_iter().filter(|v| bv.contains(v)).collect();
        out.sort();
        out
    }

    #[test]
    fn span_examples() {
        let x = s(&["1000", "0100"]);
        assert_eq!(x.dim(), 2);
        assert_eq!(x.basis(), &FpMatrix::parse(F2, &["1000", "0100"]).unwrap());
        let z = Subspace::span::<Vec<u8>>(F2, 4, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(z, Subspace::zero(F2, 4));
        assert_eq!(s(&["1100", "0110", "1010"]).dim(), 2);
        assert!(matches!(
            Subspace::span(F2, 4, &[vec![1u8, 0, 0]]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn sum_examples() {
        let x = s(&["1000", "0100"]);
        assert_eq!(x.sum(&x).unwrap(), x);
        assert_eq!(x.sum(&s(&["0010", "0001"])).unwrap(), Subspace::full(F2, 4));
        let y = x.sum(&s(&["1000", "0010"])).unwrap();
        assert_eq!(y, s(&["1000", "0100", "0010"]));
        assert_eq!(y.dim(), 3);
        assert_eq!(x.sum(&Subspace::zero(F2, 3)), Err(Error::AmbientMismatch));
    }

    #[test]
    fn intersect_examples() {
        let x = s(&["1000", "0100"]);
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert!(x.intersect(&s(&["0010", "0001"])).unwrap().is_zero());
        assert_eq!(x.intersect(&s(&["1000", "0010"])).unwrap(), s(&["1000"]));
        assert_eq!(
            x.intersect(&Subspace::zero(Field::gf3(), 4)),
            Err(Error::AmbientMismatch)
        );
    }

    #[test]
    fn contains_examples() {
        let v = Subspace::full(F2, 4);
        assert!(v.contains(&s(&["1010", "0001"])).unwrap());
        assert!(!s(&["1000"]).contains(&s(&["0100"])).unwrap());
        assert!(s(&["1010", "0110"]).contains(&s(&["1100"])).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(Subspace::zero(F2, 4).annihilator(), Subspace::full(F2, 4));
        assert_eq!(s(&["1000", "0100"]).annihilator(), s(&["0010", "0001"]));
        // Self-dual: 1010·1010 = 0, 1010·0101 = 0, 0101·0101 = 0 in char 2.
        let x = s(&["1010", "0101"]);
        assert_eq!(x.annihilator(), x);
        assert!(Subspace::full(F2, 4).annihilator().is_zero());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_subspaces(F2, 4, 2).len(), 35);
        assert_eq!(enumerate_subspaces(Field::gf3(), 4, 2).len(), 130);
        assert_eq!(enumerate_subspaces(F2, 4, 0), vec![Subspace::zero(F2, 4)]);
        assert_eq!(enumerate_subspaces(F2, 4, 4), vec![Subspace::full(F2, 4)]);
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(2, 4, 2), 15 * 7 / 3);
        assert_eq!(gaussian_binomial(3, 4, 2), 130);
        assert_eq!(gaussian_binomial(2, 6, 3), 1395);
        assert_eq!(gaussian_binomial(2, 4, 0), 1);
        assert_eq!(gaussian_binomial(2, 3, 4), 0);
    }

    /// Brute force over all k-tuples of vectors: collect the distinct spans.
    fn brute_count(field: Field, d: usize, k: usize) -> usize {
        let all = Subspace::full(field, d).vectors();
        let mut seen = std::collections::BTreeSet::new();
        let mut idx = vec![0usize; k];
        loop {
            let rows: Vec<&Vec<u8>> = idx.iter().map(|&i| &all[i]).collect();
            let sp = Subspace::span(field, d, &rows).unwrap();
            if sp.dim() == k {
                seen.insert(sp);
            }
            let Some(i) = (0..k).rev().find(|&i| idx[i] + 1 < all.len()) else {
                break;
            };
            idx[i] += 1;
            idx[i + 1..].iter_mut().for_each(|x| *x = 0);
        }
        seen.len()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        assert_eq!(brute_count(F2, 4, 2), 35);
        assert_eq!(brute_count(Field::gf3(), 4, 2), 130);
        assert_eq!(brute_count(F2, 3, 1), 7);
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomial() {
        for p in [2u32, 3] {
            let f = Field::new(p).unwrap();
            for d in 0..=6 {
                if p == 3 && d == 6 {
                    continue;
                }
                for k in 0..=d {
                    let all = enumerate_subspaces(f, d, k);
                    assert_eq!(all.len() as u64, gaussian_binomial(p as u64, d, k), "{p} {d} {k}");
                    assert!(all.windows(2).all(|w| w[0] < w[1]));
                    assert!(all.iter().all(|x| x.dim() == k && x.ambient() == d));
                }
            }
        }
        // GF(3)^6 middle layer is the largest: check it alone.
        assert_eq!(enumerate_subspaces(Field::gf3(), 6, 3).len(), 33880);
    }

    #[test]
    fn dimension_formula_and_intersection_oracle() {
        let all: Vec<Subspace> = (0..=4).flat_map(|k| enumerate_subspaces(F2, 4, k)).collect();
        for a in &all {
            for b in &all {
                let sum = a.sum(b).unwrap();
                let int = a.intersect(b).unwrap();
                assert_eq!(sum.dim() + int.dim(), a.dim() + b.dim());
                assert_eq!(int.vectors().len(), brute_intersection(a, b).len());
                let mut iv = int.vectors();
                iv.sort();
                assert_eq!(iv, brute_intersection(a, b));
            }
        }
    }

    #[test]
    fn duality_exhaustive_gf2_4() {
        let all: Vec<Subspace> = (0..=4).flat_map(|k| enumerate_subspaces(F2, 4, k)).collect();
        for a in &all {
            let aa = a.annihilator();
            assert_eq!(aa.dim(), 4 - a.dim());
            assert_eq!(aa.annihilator(), *a);
            for b in &all {
                assert_eq!(
                    a.contains(b).unwrap(),
                    b.annihilator().contains(&aa).unwrap()
                );
                assert_eq!(
                    a.sum(b).unwrap().annihilator(),
                    aa.intersect(&b.annihilator()).unwrap()
                );
            }
        }
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let x = Subspace::parse(Field::gf3(), 4, &["1021", "0112"]).unwrap();
        assert_eq!(x.to_text(), "3 4\n1021\n0112\n");
        assert_eq!(Subspace::from_text(&x.to_text()).unwrap(), x);
        let list = vec![x.clone(), Subspace::zero(Field::gf3(), 4), x.annihilator()];
        assert_eq!(subspaces_from_text(&subspaces_to_text(&list)).unwrap(), list);
        assert!(Subspace::from_text("3 4\n1021\n012\n").is_err());
        assert!(Subspace::from_text("3 4\n1031\n").is_err());
        assert!(Subspace::from_text("4 4\n1001\n").is_err());
        assert!(Subspace::from_text("").is_err());
    }

    #[test]
    fn point_table_and_point_sets() {
        let t = PointTable::new(F2, 4);
        assert_eq!(t.len(), 15);
        let x = s(&["1000", "0100"]);
        let ps = t.point_set(&x);
        assert_eq!(ps.count_ones(..), 3);
        let a = t.index_of(&[1, 0, 0, 0]).unwrap();
        let b = t.index_of(&[0, 1, 0, 0]).unwrap();
        assert_eq!(t.line_through(a, b), ps);
        let t3 = PointTable::new(Field::gf3(), 4);
        assert_eq!(t3.len(), 40);
        assert_eq!(t3.index_of(&[0, 2, 1, 0]), t3.index_of(&[0, 1, 2, 0]));
        assert_eq!(t3.index_of(&[0, 0, 0, 0]), None);
    }
}
