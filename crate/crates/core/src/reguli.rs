//! Z-reguli in G: the second-kind families of a Segre frame, closure of a
//! mutually distant triple, directrices, the regulus predicates and their
//! characterization through the distant graph alone.
//!
//! Sets of elements are passed as slices of handles into a
//! [`GrassmannianIndex`]; any order is accepted and results are sorted.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FpMatrix;
use crate::grassmann::{adjacency_from_distant, GrassmannianIndex, Handle};
use crate::ringline::{projective_line, Frame};
use crate::subspace::{enumerate_subspaces, Subspace};

/// U, U′ and λ: U → U′. The same data as a ring-line frame.
pub type SegreFrame = Frame;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Regulus {
    /// Sorted member handles.
    pub members: Vec<Handle>,
    /// Sorted lines meeting every member.
    pub directrices: Vec<Subspace>,
}

/// `L_u = {r·u + s·u^λ}`.
pub fn first_kind_line(frame: &SegreFrame, u: &[u8]) -> Result<Subspace> {
    if u.iter().all(|&a| a == 0) {
        return Err(Error::ZeroVector);
    }
    let image = frame
        .apply_lambda(u)
        .ok_or_else(|| Error::DimensionMismatch("vector does not lie in U".into()))?;
    Subspace::span(frame.field(), 2 * frame.n(), &[u, &image[..]])
}

/// One first-kind line per point of U, sorted.
pub fn first_kind_lines(frame: &SegreFrame) -> Vec<Subspace> {
    let mut lines: Vec<Subspace> = frame
        .u()
        .point_vectors()
        .iter()
        .map(|u| first_kind_line(frame, u).expect("nonzero vector of U"))
        .collect();
    lines.sort();
    lines
}

/// `T^(x,y) = {x·u + y·u^λ : u ∈ U}` for the p+1 points (x : y), sorted.
pub fn second_kind_members(frame: &SegreFrame) -> Vec<Subspace> {
    let f = frame.field();
    let basis: Vec<Vec<u8>> = frame.u().basis().row_iter().map(<[u8]>::to_vec).collect();
    let images: Vec<Vec<u8>> =
        basis.iter().map(|u| frame.apply_lambda(u).expect("basis of U")).collect();
    let mut out: Vec<Subspace> = projective_line(f)
        .into_iter()
        .map(|(x, y)| {
            let rows: Vec<Vec<u8>> = basis
                .iter()
                .zip(&images)
                .map(|(u, w)| u.iter().zip(w).map(|(&a, &b)| f.add(f.mul(x, a), f.mul(y, b))).collect())
                .collect();
            Subspace::span(f, 2 * frame.n(), &rows).expect("same length")
        })
        .collect();
    out.sort();
    out
}

pub fn second_kind_family(index: &GrassmannianIndex, frame: &SegreFrame) -> Result<Regulus> {
    if frame.field() != index.field() || frame.n() != index.n() {
        return Err(Error::BadFrame("frame does not match the index".into()));
    }
    let mut members = second_kind_members(frame)
        .iter()
        .map(|t| index.handle_of(t))
        .collect::<Result<Vec<_>>>()?;
    members.sort_unstable();
    Ok(Regulus { members, directrices: first_kind_lines(frame) })
}

/// The frame (E0, E1, λ) whose `T^(1,1)` is E2.
pub fn frame_through(e0: &Subspace, e1: &Subspace, e2: &Subspace) -> Result<SegreFrame> {
    let n = e0.dim();
    let stacked = e0.basis().vstack(e1.basis())?;
    let split = stacked.invert().map_err(|_| Error::NotMutuallyDistant)?;
    // rows of E2 written as X·B0 + Y·B1
    let xy = e2.basis().matmul(&split)?;
    if e2.dim() != n {
        return Err(Error::NotMutuallyDistant);
    }
    let (x, y) = (xy.select_cols(0..n), xy.select_cols(n..2 * n));
    let x_inv = x.invert().map_err(|_| Error::NotMutuallyDistant)?;
    let lambda = x_inv.matmul(&y)?;
    Frame::new(e0.clone(), e1.clone(), lambda).map_err(|_| Error::NotMutuallyDistant)
}

/// The unique Z-regulus through three mutually distant elements.
pub fn regulus_through(
    index: &GrassmannianIndex,
    h0: Handle,
    h1: Handle,
    h2: Handle,
) -> Result<Regulus> {
    if !(index.distant(h0, h1) && index.distant(h0, h2) && index.distant(h1, h2)) {
        return Err(Error::NotMutuallyDistant);
    }
    let frame = frame_through(index.element(h0), index.element(h1), index.element(h2))?;
    second_kind_family(index, &frame)
}

/// For each point of `a`, the two points in which the unique line through it
/// meeting `b` and `c` does so. `b` and `c` must be distant.
fn transversal_points(index: &GrassmannianIndex, a: Handle, b: Handle, c: Handle) -> Vec<(usize, usize)> {
    let n = index.n();
    let (bb, bc) = (index.element(b).basis(), index.element(c).basis());
    let split = bb.vstack(bc).and_then(|m| m.invert()).expect("distant pair");
    let pts = index.points();
    index
        .point_set(a)
        .ones()
        .map(|i| {
            let coords = split.apply_row(pts.vector(i)).expect("ambient length");
            let e1 = bb.apply_row(&coords[..n]).expect("n coordinates");
            let e2 = bc.apply_row(&coords[n..]).expect("n coordinates");
            (pts.index_of(&e1).expect("nonzero"), pts.index_of(&e2).expect("nonzero"))
        })
        .collect()
}

fn sorted_distinct(s: &[Handle]) -> Option<Vec<Handle>> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    (v.len() == s.len()).then_some(v)
}

fn pairwise_distant(index: &GrassmannianIndex, s: &[Handle]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| index.distant(a, b)))
}

/// Lines meeting every member, one through each point of the first member.
pub fn directrices(index: &GrassmannianIndex, members: &[Handle]) -> Result<Vec<Subspace>> {
    if members.len() < 3 {
        return Err(Error::TooFewMembers);
    }
    if sorted_distinct(members).is_none() || !pairwise_distant(index, members) {
        return Err(Error::NotDistantClique);
    }
    let pts = index.points();
    let mut out: Vec<Subspace> = transversal_points(index, members[0], members[1], members[2])
        .into_iter()
        .filter(|&(i, j)| {
            let line = pts.line_through(i, j);
            members.iter().all(|&h| index.meets(h, &line))
        })
        .map(|(i, j)| Subspace::span(index.field(), index.ambient(), &[pts.vector(i), pts.vector(j)]))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// Pairwise distant, at least three members, and every line meeting three
/// members meets them all.
pub fn is_partial_regulus(index: &GrassmannianIndex, s: &[Handle]) -> bool {
    if s.len() < 3 || sorted_distinct(s).is_none() || !pairwise_distant(index, s) {
        return false;
    }
    let pts = index.points();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for k in j + 1..s.len() {
                for (a, b) in transversal_points(index, s[i], s[j], s[k]) {
                    let line = pts.line_through(a, b);
                    if !s.iter().all(|&h| index.meets(h, &line)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A partial regulus equal to the closure of any three of its members.
pub fn is_regulus(index: &GrassmannianIndex, s: &[Handle]) -> bool {
    if !is_partial_regulus(index, s) {
        return false;
    }
    let sorted = sorted_distinct(s).expect("checked");
    regulus_through(index, s[0], s[1], s[2]).map(|r| r.members == sorted).unwrap_or(false)
}

/// A partial regulus that no further element of G extends to a partial
/// regulus. Exhaustive, for small indices.
pub fn is_regulus_by_extension(index: &GrassmannianIndex, s: &[Handle]) -> bool {
    if !is_partial_regulus(index, s) {
        return false;
    }
    let mut extended = s.to_vec();
    extended.push(0);
    !common_distant(index.distant_rows(), s).ones().any(|x| {
        *extended.last_mut().expect("nonempty") = x;
        is_partial_regulus(index, &extended)
    })
}

/// Elements distant from every member of `s`.
fn common_distant(distant: &[FixedBitSet], s: &[Handle]) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(distant.len());
    out.insert_range(..);
    s.iter().for_each(|&h| out.intersect_with(&distant[h]));
    out
}

/// The distant relation of G together with the adjacency reconstructed from
/// it. Nothing else about the elements is kept.
#[derive(Clone, Debug)]
pub struct DistantGraph {
    distant: Vec<FixedBitSet>,
    adjacency: Vec<FixedBitSet>,
}

impl DistantGraph {
    pub fn new(distant: Vec<FixedBitSet>) -> Self {
        let adjacency = adjacency_from_distant(&distant);
        DistantGraph { distant, adjacency }
    }

    pub fn from_index(index: &GrassmannianIndex) -> Self {
        Self::new(index.distant_rows().to_vec())
    }

    pub fn len(&self) -> usize {
        self.distant.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distant.is_empty()
    }

    pub fn distant_rows(&self) -> &[FixedBitSet] {
        &self.distant
    }

    pub fn adjacency_rows(&self) -> &[FixedBitSet] {
        &self.adjacency
    }
}

/// The first two conditions: a distant clique of at least three elements,
/// and whenever `W ∼ E0` is not distant from two other members `E1, E2`,
/// `W` is distant from no member.
fn distant_conditions_1_2(graph: &DistantGraph, s: &[Handle]) -> bool {
    if s.len() < 3 || sorted_distinct(s).is_none() {
        return false;
    }
    if !s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| graph.distant[a][b])) {
        return false;
    }
    let mut any_distant = FixedBitSet::with_capacity(graph.len());
    s.iter().for_each(|&h| any_distant.union_with(&graph.distant[h]));
    for &e0 in s {
        for &e1 in s {
            for &e2 in s {
                if e1 >= e2 || e0 == e1 || e0 == e2 {
                    continue;
                }
                let mut w = graph.adjacency[e0].clone();
                w.difference_with(&graph.distant[e1]);
                w.difference_with(&graph.distant[e2]);
                if !w.is_disjoint(&any_distant) {
                    return false;
                }
            }
        }
    }
    true
}

/// The regulus conditions phrased in the distant graph: the first two as
/// above, and maximality among sets satisfying them.
pub fn satisfies_distant_conditions(graph: &DistantGraph, s: &[Handle]) -> bool {
    if !distant_conditions_1_2(graph, s) {
        return false;
    }
    let mut extended = s.to_vec();
    extended.push(0);
    !common_distant(&graph.distant, s).ones().any(|x| {
        *extended.last_mut().expect("nonempty") = x;
        distant_conditions_1_2(graph, &extended)
    })
}

/// Every regulus obtained by closing unordered mutually distant triples,
/// with the number of triples that produced it.
pub fn reguli_from_triples(index: &GrassmannianIndex) -> Result<BTreeMap<Vec<Handle>, usize>> {
    let mut out = BTreeMap::new();
    for (a, b, c) in distant_triples(index) {
        let r = regulus_through(index, a, b, c)?;
        *out.entry(r.members).or_insert(0) += 1;
    }
    Ok(out)
}

/// Unordered mutually distant triples `a < b < c`.
pub fn distant_triples(index: &GrassmannianIndex) -> impl Iterator<Item = (Handle, Handle, Handle)> + '_ {
    let rows = index.distant_rows();
    index.handles().flat_map(move |a| {
        rows[a].ones().filter(move |&b| b > a).flat_map(move |b| {
            let mut both = rows[a].clone();
            both.intersect_with(&rows[b]);
            both.ones().filter(move |&c| c > b).map(move |c| (a, b, c)).collect::<Vec<_>>()
        })
    })
}

/// Every distant clique (not only maximal ones) with at least `min` members,
/// each sorted, in lexicographic order.
pub fn distant_cliques(index: &GrassmannianIndex, min: usize) -> Vec<Vec<Handle>> {
    fn grow(
        rows: &[FixedBitSet],
        clique: &mut Vec<Handle>,
        candidates: FixedBitSet,
        min: usize,
        out: &mut Vec<Vec<Handle>>,
    ) {
        if clique.len() >= min {
            out.push(clique.clone());
        }
        for v in candidates.ones() {
            let mut next = candidates.clone();
            next.intersect_with(&rows[v]);
            next.set_range(..v + 1, false);
            clique.push(v);
            grow(rows, clique, next, min, out);
            clique.pop();
        }
    }
    let mut all = FixedBitSet::with_capacity(index.len());
    all.insert_range(..);
    let mut out = Vec::new();
    grow(index.distant_rows(), &mut Vec::new(), all, min, &mut out);
    out.sort();
    out
}

/// Outcome of an exhaustive sweep over hypotheses of a statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    /// Number of configurations satisfying the hypotheses.
    pub checked: usize,
    pub violations: usize,
    /// The first violating configuration.
    pub witness: Option<String>,
}

impl SweepReport {
    fn new() -> Self {
        SweepReport { checked: 0, violations: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.violations == 0
    }
}

/// `W ∼ E0`, `E` distant from `E0` and not from `W` ⇒ `W ∩ E` is a point.
pub fn check_lemma_z1(index: &GrassmannianIndex) -> SweepReport {
    let mut report = SweepReport::new();
    let (adj, dist) = (index.adjacency_rows(), index.distant_rows());
    for w in index.handles() {
        for e0 in adj[w].ones() {
            let mut es = dist[e0].clone();
            es.difference_with(&dist[w]);
            for e in es.ones() {
                report.record(index.meet_dim(w, e) == 1, || format!("W={w} E0={e0} E={e}"));
            }
        }
    }
    report
}

/// For mutually distant `E0, E1, E2` and `W ∼ E0` distant from neither `E1`
/// nor `E2`, the line through `W ∩ E1` and `W ∩ E2` meets `E0`.
pub fn check_lemma_z2(index: &GrassmannianIndex) -> SweepReport {
    let mut report = SweepReport::new();
    let (adj, dist) = (index.adjacency_rows(), index.distant_rows());
    let pts = index.points();
    for e0 in index.handles() {
        for e1 in dist[e0].ones() {
            let mut e2s = dist[e0].clone();
            e2s.intersect_with(&dist[e1]);
            for e2 in e2s.ones().filter(|&e2| e2 > e1) {
                let mut ws = adj[e0].clone();
                ws.difference_with(&dist[e1]);
                ws.difference_with(&dist[e2]);
                for w in ws.ones() {
                    let ok = match (index.meet_point(w, e1), index.meet_point(w, e2)) {
                        (Some(p1), Some(p2)) if p1 != p2 => index.meets(e0, &pts.line_through(p1, p2)),
                        _ => false,
                    };
                    report.record(ok, || format!("E0={e0} E1={e1} E2={e2} W={w}"));
                }
            }
        }
    }
    report
}

/// Every line of V lying inside the point set Q covered by the first-kind
/// lines is either first-kind or inside a second-kind member. `checked`
/// counts the lines of Q that are not first-kind.
pub fn check_segre_lines(frame: &SegreFrame) -> SweepReport {
    let f = frame.field();
    let ambient = 2 * frame.n();
    let first = first_kind_lines(frame);
    let second = second_kind_members(frame);
    let mut q: Vec<Vec<u8>> = first.iter().flat_map(|l| l.point_vectors()).collect();
    q.sort();
    q.dedup();
    let mut report = SweepReport::new();
    for line in enumerate_subspaces(f, ambient, 2) {
        let inside = line.point_vectors().iter().all(|v| q.binary_search(v).is_ok());
        if !inside || first.binary_search(&line).is_ok() {
            continue;
        }
        let ok = second.iter().any(|t| t.contains(&line).expect("same ambient"));
        report.record(ok, || format!("line {line:?}"));
    }
    report
}

/// The point in which a directrix `line` meets each member, as
/// `(point index, member)` pairs in member order.
pub fn subline_coverage(
    index: &GrassmannianIndex,
    regulus: &Regulus,
    line: &Subspace,
) -> Result<Vec<(usize, Handle)>> {
    index.check_ambient(line)?;
    if line.dim() != 2 {
        return Err(Error::NotADirectrix);
    }
    let pts = index.points().point_set(line);
    regulus
        .members
        .iter()
        .map(|&h| {
            let mut common = pts.clone();
            common.intersect_with(index.point_set(h));
            match (common.count_ones(..), common.ones().next()) {
                (1, Some(i)) => Ok((i, h)),
                _ => Err(Error::NotADirectrix),
            }
        })
        .collect()
}

/// Canonical n×n matrix of λ for the frame through a triple; exposed for
/// printing.
pub fn lambda_of(e0: &Subspace, e1: &Subspace, e2: &Subspace) -> Result<FpMatrix> {
    Ok(frame_through(e0, e1, e2)?.lambda().clone())
}
