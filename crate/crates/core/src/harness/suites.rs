use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cache::load_or_build;
use super::config::{Suite, SuiteConfig};
use super::report::{CheckRecord, Report, Status};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grassmann::{
    adjacency_from_distant, bfs_distances, build_index, graph_metrics, image_of, induced_map,
    is_adjacent, is_adjacent_by_sum, is_distant, is_permutation, maximal_adjacency_cliques,
    maximal_cliques, pencils_from_cliques, pencils_from_flags, relation_violation, CliqueKind,
    GrassmannianIndex, Handle, InducedMap, Relation,
};
use crate::reguli::{
    check_lemma_z1, check_lemma_z2, check_segre_lines, directrices, distant_cliques,
    distant_triples, first_kind_lines, is_partial_regulus, is_regulus, is_regulus_by_extension,
    regulus_through, reguli_from_triples, satisfies_distant_conditions, second_kind_family,
    subline_coverage, DistantGraph,
};
use crate::ringline::{
    act, all_gl2, all_ring_points, conjugate_point, distant_witness, frame_transfer, hat, phi,
    phi_inverse, phi_is_bijective, random_invertible, standard_z_chain, triple_witness, z_chains,
    Frame, Gl2Element, RingPoint,
};
use crate::subspace::{gaussian_binomial, Subspace};

/// Largest number of unordered distant triples swept exhaustively.
pub const EXHAUSTIVE_TRIPLES: u64 = 200_000;

/// Largest index on which all pairs are compared through subspace
/// arithmetic rather than bit-rows.
const PAIRWISE_ELEMENTS: usize = 200;

/// (suite, p, n) runs performed by the suite `all`.
pub fn all_plan() -> Vec<(Suite, u32, usize)> {
    let mut plan = Vec::new();
    for (p, n) in [(2, 2), (3, 2)] {
        plan.extend(Suite::SINGLE.iter().map(|&s| (s, p, n)));
    }
    plan.push((Suite::Metrics, 2, 3));
    plan
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let plan = match cfg.suite {
        Suite::All => all_plan(),
        s => vec![(s, cfg.p, cfg.n)],
    };
    let mut indices: BTreeMap<(u32, usize), GrassmannianIndex> = BTreeMap::new();
    let mut checks = Vec::new();
    for (suite, p, n) in plan {
        let g = match indices.entry((p, n)) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(match &cfg.cache_dir {
                Some(dir) => load_or_build(dir, p, n)?,
                None => build_index(p, n)?,
            }),
        };
        let mut run = Run {
            suite,
            g,
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            checks: &mut checks,
        };
        run.suite()?;
    }
    let single = cfg.suite != Suite::All;
    let mut report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        suite: cfg.suite.name().to_string(),
        p: single.then_some(cfg.p),
        n: single.then_some(cfg.n),
        seed: cfg.seed,
        sample: cfg.sample,
        checks,
        summary: Default::default(),
    };
    report.finish();
    Ok(report)
}

struct Outcome {
    ok: bool,
    message: String,
    counts: Vec<(&'static str, u64)>,
    witness: Option<String>,
}

impl Outcome {
    fn new(ok: bool, message: impl Into<String>) -> Self {
        Outcome { ok, message: message.into(), counts: Vec::new(), witness: None }
    }

    fn count(mut self, key: &'static str, value: impl TryInto<u64>) -> Self {
        self.counts.push((key, value.try_into().unwrap_or(u64::MAX)));
        self
    }

    fn witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        self
    }
}

/// Counts failures and keeps the first witness.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn ok(&self) -> bool {
        self.failures == 0
    }
}

struct Run<'a> {
    suite: Suite,
    g: &'a GrassmannianIndex,
    cfg: &'a SuiteConfig,
    rng: ChaCha8Rng,
    checks: &'a mut Vec<CheckRecord>,
}

impl Run<'_> {
    fn check(&mut self, name: &str, f: impl FnOnce(&mut Self) -> Result<Outcome>) -> Result<()> {
        let start = Instant::now();
        let out = f(self)?;
        self.checks.push(CheckRecord {
            suite: self.suite.name().to_string(),
            p: self.g.field().p() as u32,
            n: self.g.n(),
            name: name.to_string(),
            status: if out.ok { Status::Pass } else { Status::Fail },
            counts: out.counts.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            message: out.message,
            witness: out.witness,
            elapsed_ms: self.cfg.timings.then(|| start.elapsed().as_millis() as u64),
        });
        Ok(())
    }

    fn suite(&mut self) -> Result<()> {
        match self.suite {
            Suite::Cliques => self.cliques(),
            Suite::Pencils => self.pencils(),
            Suite::Distadj => self.distadj(),
            Suite::Metrics => self.metrics(),
            Suite::Ringline => self.ringline(),
            Suite::Reguli => self.reguli(),
            Suite::ZregEquivalence => self.zreg_equivalence(),
            Suite::Lemmas => self.lemmas(),
            Suite::Automorph => self.automorph(),
            Suite::All => unreachable!("expanded by run_suite"),
        }
    }

    fn p(&self) -> u64 {
        self.g.field().order() as u64
    }

    fn field(&self) -> Field {
        self.g.field()
    }

    fn n(&self) -> usize {
        self.g.n()
    }

    /// Unordered mutually distant triples, from the closed formula.
    fn triple_count(&self) -> u64 {
        let (p, n) = (self.p(), self.n());
        self.g.len() as u64 * p.pow((n * n) as u32) * gl_order(p, n) / 6
    }

    fn exhaustive(&self) -> bool {
        self.triple_count() <= EXHAUSTIVE_TRIPLES
    }

    fn require_exhaustive(&self) -> Result<()> {
        if self.exhaustive() {
            Ok(())
        } else {
            Err(Error::ResourceLimit(format!(
                "suite {} sweeps all {} distant triples, limit is {EXHAUSTIVE_TRIPLES}",
                self.suite,
                self.triple_count()
            )))
        }
    }

    fn random_frame(&mut self) -> Frame {
        let (f, n) = (self.field(), self.n());
        let m = random_invertible(&mut self.rng, f, 2 * n);
        let lambda = random_invertible(&mut self.rng, f, n);
        Frame::new(
            Subspace::row_space(&m.select_rows(0..n)),
            Subspace::row_space(&m.select_rows(n..2 * n)),
            lambda,
        )
        .expect("rows of an invertible matrix split into complements")
    }

    fn random_triple(&mut self) -> (Handle, Handle, Handle) {
        let rows = self.g.distant_rows();
        let a = self.rng.gen_range(0..self.g.len());
        let b = *rows[a].ones().collect::<Vec<_>>().choose(&mut self.rng).expect("degree > 0");
        let mut both = rows[a].clone();
        both.intersect_with(&rows[b]);
        let c = *both.ones().collect::<Vec<_>>().choose(&mut self.rng).expect("p >= 2");
        (a, b, c)
    }

    /// All reguli when the triple sweep is small enough.
    fn all_reguli(&self) -> Result<Option<BTreeMap<Vec<Handle>, usize>>> {
        if self.exhaustive() {
            reguli_from_triples(self.g).map(Some)
        } else {
            Ok(None)
        }
    }

    fn group_sample(&mut self) -> Result<(Vec<Gl2Element>, bool)> {
        let (f, n) = (self.field(), self.n());
        let full = (f.order() as u64).checked_pow((4 * n * n) as u32).is_some_and(|t| t <= 1 << 20);
        if full {
            Ok((all_gl2(f, n)?, true))
        } else {
            let k = self.cfg.orbit_sample;
            Ok(((0..k).map(|_| Gl2Element::random(&mut self.rng, f, n)).collect(), false))
        }
    }

    fn cliques(&mut self) -> Result<()> {
        let g = self.g;
        let (p, n) = (self.p(), self.n());
        self.check("maximal-cliques", |_| {
            let labelled = maximal_adjacency_cliques(g);
            let stars = labelled.iter().filter(|c| c.kind == CliqueKind::Star).count();
            let tops = labelled.len() - stars;
            let size = g.field().projective_points(n + 1);
            let want: BTreeSet<Vec<Handle>> = labelled.iter().map(|c| c.members.clone()).collect();
            let generic: BTreeSet<Vec<Handle>> = maximal_cliques(g.adjacency_rows()).into_iter().collect();
            let extras: Vec<_> = generic.difference(&want).collect();
            let misses: Vec<_> = want.difference(&generic).collect();
            let ok = extras.is_empty()
                && misses.is_empty()
                && stars as u64 == gaussian_binomial(p, 2 * n, n - 1)
                && tops as u64 == gaussian_binomial(p, 2 * n, n + 1)
                && labelled.iter().all(|c| c.members.len() == size);
            let witness = extras
                .first()
                .map(|c| format!("clique {c:?} is neither a star nor a top"))
                .or_else(|| misses.first().map(|c| format!("clique {c:?} not found by search")));
            Ok(Outcome::new(
                ok,
                format!("{} maximal cliques: {stars} stars, {tops} tops, size {size} each", generic.len()),
            )
            .count("generic", generic.len())
            .count("stars", stars)
            .count("tops", tops)
            .count("extras", extras.len())
            .count("misses", misses.len())
            .witness(witness))
        })?;
        self.check("clique-adjacency", |_| {
            let mut t = Tally::default();
            for c in maximal_adjacency_cliques(g) {
                for (i, &a) in c.members.iter().enumerate() {
                    for &b in &c.members[i + 1..] {
                        t.record(g.adjacent(a, b), || format!("{a} and {b} in {:?} {:?}", c.kind, c.carrier));
                    }
                }
            }
            Ok(Outcome::new(t.ok(), format!("{} member pairs adjacent", t.checked))
                .count("pairs", t.checked)
                .witness(t.witness))
        })
    }

    fn pencils(&mut self) -> Result<()> {
        let g = self.g;
        let (p, n) = (self.p(), self.n());
        self.check("pencils-agree", |_| {
            let flags = pencils_from_flags(g);
            let cliques = pencils_from_cliques(g);
            let a: BTreeSet<&Vec<Handle>> = flags.iter().map(|x| &x.members).collect();
            let b: BTreeSet<&Vec<Handle>> = cliques.iter().map(|x| &x.members).collect();
            let expected = gaussian_binomial(p, 2 * n, n - 1) * gaussian_binomial(p, n + 1, 2);
            let size = p as usize + 1;
            let ok = a == b
                && flags.len() as u64 == expected
                && flags.iter().all(|x| x.members.len() == size);
            let witness = a.symmetric_difference(&b).next().map(|m| format!("pencil {m:?}"));
            Ok(Outcome::new(ok, format!("{} pencils of size {size}, flags and clique intersections agree", flags.len()))
                .count("from_flags", flags.len())
                .count("from_cliques", cliques.len())
                .count("expected", expected)
                .witness(witness))
        })
    }

    fn distadj(&mut self) -> Result<()> {
        let g = self.g;
        self.check("adjacency-from-distant", |_| {
            let rebuilt = adjacency_from_distant(g.distant_rows());
            let mut t = Tally::default();
            for a in g.handles() {
                for b in a + 1..g.len() {
                    t.record(rebuilt[a][b] == g.adjacent(a, b), || format!("pair {a} {b}"));
                }
            }
            Ok(Outcome::new(t.ok(), format!("{} pairs, {} disagreements", t.checked, t.failures))
                .count("pairs", t.checked)
                .count("disagreements", t.failures)
                .witness(t.witness))
        })?;
        self.check("adjacency-criteria", |run| {
            let pairs: Vec<(Handle, Handle)> = if g.len() <= PAIRWISE_ELEMENTS {
                g.handles().flat_map(|a| (a + 1..g.len()).map(move |b| (a, b))).collect()
            } else {
                (0..run.cfg.sample * 100)
                    .map(|_| (run.rng.gen_range(0..g.len()), run.rng.gen_range(0..g.len())))
                    .collect()
            };
            let mut t = Tally::default();
            for (a, b) in pairs {
                let (x, y) = (g.element(a), g.element(b));
                let ok = is_adjacent(x, y)? == g.adjacent(a, b)
                    && is_adjacent_by_sum(x, y)? == g.adjacent(a, b)
                    && is_distant(x, y)? == g.distant(a, b);
                t.record(ok, || format!("pair {a} {b}"));
            }
            Ok(Outcome::new(t.ok(), format!("subspace predicates match the relations on {} pairs", t.checked))
                .count("pairs", t.checked)
                .witness(t.witness))
        })?;
        self.check("degrees", |_| {
            let (adj, dist) = g.expected_degrees();
            let bad = g.handles().find(|&h| {
                g.adjacency_rows()[h].count_ones(..) != adj || g.distant_rows()[h].count_ones(..) != dist
            });
            Ok(Outcome::new(bad.is_none(), format!("adjacency degree {adj}, distant degree {dist}"))
                .count("adjacency_degree", adj)
                .count("distant_degree", dist)
                .witness(bad.map(|h| format!("element {h}"))))
        })
    }

    fn metrics(&mut self) -> Result<()> {
        let g = self.g;
        let n = self.n();
        self.check("grassmann-diameter", |_| {
            let m = graph_metrics(g, Relation::Adjacency);
            Ok(Outcome::new(m.connected && m.diameter == n, format!("Grassmann graph connected: {}, diameter {}", m.connected, m.diameter))
                .count("diameter", m.diameter))
        })?;
        self.check("distant-diameter", |_| {
            let m = graph_metrics(g, Relation::Distant);
            let want = if n == 1 { 1 } else { 2 };
            Ok(Outcome::new(m.connected && m.diameter == want, format!("distant graph connected: {}, diameter {}", m.connected, m.diameter))
                .count("diameter", m.diameter))
        })?;
        self.check("distant-iff-distance-n", |_| {
            let mut t = Tally::default();
            for a in g.handles() {
                let d = bfs_distances(g.adjacency_rows(), a);
                for b in a + 1..g.len() {
                    t.record((d[b] == Some(n)) == g.distant(a, b), || format!("pair {a} {b}"));
                }
            }
            Ok(Outcome::new(t.ok(), format!("distant exactly at Grassmann distance {n} on {} pairs", t.checked))
                .count("pairs", t.checked)
                .witness(t.witness))
        })
    }

    fn ringline(&mut self) -> Result<()> {
        let g = self.g;
        let (f, n) = (self.field(), self.n());
        let pts = all_ring_points(f, n)?;
        self.check("phi-bijective", |run| {
            let std = phi_is_bijective(g, &Frame::standard(f, n))?;
            let other = phi_is_bijective(g, &run.random_frame())?;
            let witness = std.distance_mismatches.first().or(other.distance_mismatches.first()).map(|x| format!("{x:?}"));
            Ok(Outcome::new(
                std.ok() && other.ok(),
                format!("{} ring points onto {} elements; {} distant pairs on both sides", std.ring_points, std.grassmannian, std.distant_pairs_ring),
            )
            .count("ring_points", std.ring_points)
            .count("elements", std.grassmannian)
            .count("distant_pairs", std.distant_pairs_ring)
            .witness(witness))
        })?;
        self.check("equivariance", |run| {
            let frames = [Frame::standard(f, n), run.random_frame()];
            let mut t = Tally::default();
            for i in 0..run.cfg.sample {
                let a = Gl2Element::random(&mut run.rng, f, n);
                let b = Gl2Element::random(&mut run.rng, f, n);
                let ab = a.compose(&b);
                for (k, fr) in frames.iter().enumerate() {
                    let (ha, hb) = (hat(&a, fr)?, hat(&b, fr)?);
                    t.record(hat(&ab, fr)? == ha.matmul(&hb)?, || format!("sample {i} frame {k}: hat not multiplicative"));
                    for pt in &pts {
                        let moved = act(&a, pt)?;
                        let ok = phi(&moved, fr)? == phi(pt, fr)?.map(&ha)?
                            && act(&ab, pt)? == act(&b, &moved)?;
                        t.record(ok, || format!("sample {i} frame {k} point {pt:?}"));
                    }
                }
            }
            Ok(Outcome::new(t.ok(), format!("{} group elements, {} checks, {} violations", run.cfg.sample, t.checked, t.failures))
                .count("group_elements", run.cfg.sample)
                .count("violations", t.failures)
                .witness(t.witness))
        })?;
        self.check("distance-witness", |run| {
            let pairs: Vec<(usize, usize)> = if pts.len() <= PAIRWISE_ELEMENTS {
                (0..pts.len()).flat_map(|a| (0..pts.len()).map(move |b| (a, b))).collect()
            } else {
                (0..run.cfg.sample * 100)
                    .map(|_| (run.rng.gen_range(0..pts.len()), run.rng.gen_range(0..pts.len())))
                    .collect()
            };
            let (o, inf) = (RingPoint::origin(f, n), RingPoint::infinity(f, n));
            let mut t = Tally::default();
            for (a, b) in pairs {
                let (x, y) = (&pts[a], &pts[b]);
                let ok = match distant_witness(x, y) {
                    Some(w) => x.is_distant(y) && act(&w, x)? == o && act(&w, y)? == inf,
                    None => !x.is_distant(y),
                };
                t.record(ok, || format!("{x:?} {y:?}"));
            }
            Ok(Outcome::new(t.ok(), format!("witness found exactly for distant pairs ({} pairs)", t.checked))
                .count("pairs", t.checked)
                .witness(t.witness))
        })?;
        self.check("triple-transitivity", |run| {
            let triples: Vec<(Handle, Handle, Handle)> = if run.exhaustive() {
                distant_triples(g).collect()
            } else {
                (0..run.cfg.sample * 10).map(|_| run.random_triple()).collect()
            };
            let std = Frame::standard(f, n);
            let id = crate::gf::FpMatrix::identity(f, n);
            let unit = crate::ringline::make_point(&id, &id)?;
            let (o, inf) = (RingPoint::origin(f, n), RingPoint::infinity(f, n));
            let mut t = Tally::default();
            for (a, b, c) in triples {
                let [x, y, z] = [a, b, c].map(|h| phi_inverse(g.element(h), &std));
                let (x, y, z) = (x?, y?, z?);
                let ok = match triple_witness(&x, &y, &z) {
                    Some(w) => act(&w, &o)? == x && act(&w, &inf)? == y && act(&w, &unit)? == z,
                    None => false,
                };
                t.record(ok, || format!("triple {a} {b} {c}"));
            }
            Ok(Outcome::new(t.ok(), format!("{} mutually distant triples reached from the standard triple", t.checked))
                .count("triples", t.checked)
                .witness(t.witness))
        })?;
        self.check("frame-independence", |run| {
            let mut t = Tally::default();
            for i in 0..run.cfg.sample.min(20) {
                let (f1, f2) = (run.random_frame(), run.random_frame());
                let iota = random_invertible(&mut run.rng, f, n);
                let tr = frame_transfer(&f1, &f2, &iota)?;
                for pt in &pts {
                    let ok = phi(pt, &f1)?.map(&tr)? == phi(&conjugate_point(pt, &iota)?, &f2)?;
                    t.record(ok, || format!("sample {i} point {pt:?}"));
                }
            }
            Ok(Outcome::new(t.ok(), format!("{} frame pairs related by a linear map of V", run.cfg.sample.min(20)))
                .count("checks", t.checked)
                .witness(t.witness))
        })?;
        self.check("z-chains", |run| {
            let (sample, full) = run.group_sample()?;
            let chains = z_chains(f, n, &sample)?;
            let base = standard_z_chain(f, n);
            let mut t = Tally::default();
            for c in &chains {
                let ok = c.len() == base.len()
                    && c.iter().enumerate().all(|(i, x)| c[i + 1..].iter().all(|y| x.is_distant(y)));
                t.record(ok, || format!("chain {c:?}"));
            }
            let p = run.p();
            let expected = run.triple_count() * 6 / ((p + 1) * p * (p - 1));
            let count_ok = !full || chains.len() as u64 == expected;
            let how = if full { "full group" } else { "sampled group elements" };
            Ok(Outcome::new(t.ok() && count_ok, format!("{} chains of {} points from {} {how}", chains.len(), base.len(), sample.len()))
                .count("chains", chains.len())
                .count("group_elements", sample.len())
                .witness(t.witness))
        })
    }

    fn reguli(&mut self) -> Result<()> {
        let g = self.g;
        let (f, n, p) = (self.field(), self.n(), self.p());
        let all = self.all_reguli()?;
        let points = f.projective_points(n);
        self.check("standard-family", |_| {
            let fr = Frame::standard(f, n);
            let r = second_kind_family(g, &fr)?;
            let d = directrices(g, &r.members)?;
            let ok = is_regulus(g, &r.members)
                && d == first_kind_lines(&fr)
                && d.len() == points
                && r.members.len() == p as usize + 1;
            Ok(Outcome::new(ok, format!("{} members, {} directrices (the first-kind lines)", r.members.len(), d.len()))
                .count("members", r.members.len())
                .count("directrices", d.len()))
        })?;
        self.check("closure-uniqueness", |run| {
            let per = (p + 1) * p * (p - 1) / 6;
            let expected = run.triple_count() / per;
            match &all {
                Some(map) => {
                    let bad = map.iter().find(|(_, &c)| c as u64 != per);
                    let ok = bad.is_none() && map.len() as u64 == expected;
                    Ok(Outcome::new(ok, format!("{} triples close to {} reguli, each triple in exactly one", run.triple_count(), map.len()))
                        .count("triples", run.triple_count())
                        .count("reguli", map.len())
                        .count("expected", expected)
                        .witness(bad.map(|(r, c)| format!("regulus {r:?} reached from {c} triples"))))
                }
                None => {
                    let mut t = Tally::default();
                    for _ in 0..run.cfg.sample {
                        let (a, b, c) = run.random_triple();
                        let r = regulus_through(g, a, b, c)?;
                        let m = &r.members;
                        for i in 0..m.len() {
                            for j in i + 1..m.len() {
                                for k in j + 1..m.len() {
                                    let again = regulus_through(g, m[k], m[i], m[j])?;
                                    t.record(again.members == *m, || format!("triple {a} {b} {c}"));
                                }
                            }
                        }
                    }
                    Ok(Outcome::new(t.ok(), format!("{} sampled triples; closure of every sub-triple agrees", run.cfg.sample))
                        .count("triples", t.checked)
                        .witness(t.witness))
                }
            }
        })?;
        let sample_reguli: Vec<Vec<Handle>> = match &all {
            Some(map) => map.keys().cloned().collect(),
            None => {
                let mut v = Vec::new();
                for _ in 0..self.cfg.sample {
                    let (a, b, c) = self.random_triple();
                    v.push(regulus_through(g, a, b, c)?.members);
                }
                v
            }
        };
        self.check("directrices", |_| {
            let mut t = Tally::default();
            for m in &sample_reguli {
                let d = directrices(g, m)?;
                let r = crate::reguli::Regulus { members: m.clone(), directrices: d.clone() };
                let mut ok = d.len() == points;
                for line in &d {
                    let cov = subline_coverage(g, &r, line)?;
                    let hit: BTreeSet<usize> = cov.iter().map(|&(pt, _)| pt).collect();
                    ok &= hit.len() == m.len() && hit == g.points().point_set(line).ones().collect();
                }
                t.record(ok, || format!("regulus {m:?}"));
            }
            Ok(Outcome::new(t.ok(), format!("{} reguli with {points} directrices, each covering the whole line", t.checked))
                .count("reguli", t.checked)
                .witness(t.witness))
        })?;
        self.check("predicates", |run| {
            let known: BTreeSet<&Vec<Handle>> = sample_reguli.iter().collect();
            let mut t = Tally::default();
            let oracle = g.len() <= PAIRWISE_ELEMENTS;
            let verdict = |s: &[Handle], partial: bool, regulus: bool, t: &mut Tally| {
                let ok = is_partial_regulus(g, s) == partial
                    && is_regulus(g, s) == regulus
                    && (!oracle || is_regulus_by_extension(g, s) == regulus);
                t.record(ok, || format!("set {s:?}"));
            };
            for m in &sample_reguli {
                verdict(m, true, true, &mut t);
            }
            if g.len() <= 35 {
                for c in distant_cliques(g, 3) {
                    if !known.contains(&c) {
                        let inside = known.iter().any(|r| c.iter().all(|x| r.contains(x)));
                        verdict(&c, inside, false, &mut t);
                    }
                }
            }
            let mut false_cases = 0;
            for _ in 0..run.cfg.sample {
                let (a, b, c) = run.random_triple();
                let r = regulus_through(g, a, b, c)?.members;
                if r.len() > 3 {
                    verdict(&[a, b, c], true, false, &mut t);
                    false_cases += 1;
                }
                let mut common = g.distant_rows()[a].clone();
                common.intersect_with(&g.distant_rows()[b]);
                common.intersect_with(&g.distant_rows()[c]);
                let outside: Vec<Handle> = common.ones().filter(|x| !r.contains(x)).collect();
                if let Some(&x) = outside.choose(&mut run.rng) {
                    verdict(&[a, b, c, x], false, false, &mut t);
                    false_cases += 1;
                }
            }
            Ok(Outcome::new(t.ok(), format!("{} candidate sets, {false_cases} sampled non-reguli", t.checked))
                .count("candidates", t.checked)
                .count("sampled_false", false_cases)
                .witness(t.witness))
        })?;
        self.check("segre-lines", |_| {
            let r = check_segre_lines(&Frame::standard(f, n));
            Ok(Outcome::new(r.ok(), format!("{} lines of Q besides the first-kind lines, all inside second-kind members", r.checked))
                .count("lines", r.checked)
                .witness(r.witness))
        })?;
        self.check("orbit", |run| {
            let known: BTreeSet<&Vec<Handle>> = sample_reguli.iter().collect();
            let mut t = Tally::default();
            let maps = run.cfg.sample;
            for i in 0..maps {
                let m = random_invertible(&mut run.rng, f, 2 * n);
                let perm = induced_map(g, InducedMap::Linear(&m))?;
                for r in &sample_reguli {
                    let mut img: Vec<Handle> = r.iter().map(|&x| perm[x]).collect();
                    img.sort_unstable();
                    let ok = if all.is_some() { known.contains(&img) } else { is_regulus(g, &img) };
                    t.record(ok, || format!("map {i} regulus {r:?}"));
                }
            }
            Ok(Outcome::new(t.ok(), format!("{maps} linear maps send {} reguli to reguli", sample_reguli.len()))
                .count("maps", maps)
                .count("images", t.checked)
                .witness(t.witness))
        })
    }

    fn zreg_equivalence(&mut self) -> Result<()> {
        self.require_exhaustive()?;
        let g = self.g;
        let (f, n) = (self.field(), self.n());
        let reguli: BTreeSet<Vec<Handle>> = self.all_reguli()?.expect("exhaustive").into_keys().collect();
        let graph = DistantGraph::from_index(g);
        self.check("chain-images", |run| {
            let (sample, full) = run.group_sample()?;
            let fr = Frame::standard(f, n);
            let chains = z_chains(f, n, &sample)?;
            let mut images = BTreeSet::new();
            for c in &chains {
                let mut hs = c.iter().map(|pt| g.handle_of(&phi(pt, &fr)?)).collect::<Result<Vec<_>>>()?;
                hs.sort_unstable();
                images.insert(hs);
            }
            let stray = images.iter().find(|c| !reguli.contains(*c));
            let ok = stray.is_none() && (!full || images == reguli);
            let how = if full { "full orbit" } else { "sampled orbit" };
            Ok(Outcome::new(ok, format!("{} chain images ({how}) against {} reguli", images.len(), reguli.len()))
                .count("chain_images", images.len())
                .count("reguli", reguli.len())
                .witness(stray.map(|c| format!("chain image {c:?} is not a regulus"))))
        })?;
        self.check("closure-reguli", |_| {
            let mut t = Tally::default();
            for r in &reguli {
                t.record(is_regulus(g, r) && satisfies_distant_conditions(&graph, r), || format!("regulus {r:?}"));
            }
            Ok(Outcome::new(t.ok(), format!("{} closure-built reguli pass both characterizations", t.checked))
                .count("reguli", t.checked)
                .witness(t.witness))
        })?;
        self.check("distant-characterization", |run| {
            let mut candidates: BTreeSet<Vec<Handle>> = reguli.clone();
            if g.len() <= 35 {
                candidates.extend(distant_cliques(g, 3));
            } else {
                candidates.extend(distant_triples(g).map(|(a, b, c)| vec![a, b, c]));
                for _ in 0..run.cfg.sample * 10 {
                    let (a, b, c) = run.random_triple();
                    let mut common = g.distant_rows()[a].clone();
                    common.intersect_with(&g.distant_rows()[b]);
                    common.intersect_with(&g.distant_rows()[c]);
                    let pick: Vec<Handle> = common.ones().collect();
                    if let Some(&x) = pick.choose(&mut run.rng) {
                        let mut s = vec![a, b, c, x];
                        s.sort_unstable();
                        candidates.insert(s);
                    }
                }
            }
            let mut t = Tally::default();
            let mut passing = 0;
            for s in &candidates {
                let by_graph = satisfies_distant_conditions(&graph, s);
                passing += usize::from(by_graph);
                t.record(by_graph == is_regulus(g, s) && by_graph == reguli.contains(s), || format!("set {s:?}"));
            }
            let ok = t.ok() && passing == reguli.len();
            Ok(Outcome::new(ok, format!("{} reguli; distant-graph characterization agrees on all {} candidates", reguli.len(), t.checked))
                .count("candidates", t.checked)
                .count("passing", passing)
                .witness(t.witness))
        })
    }

    fn lemmas(&mut self) -> Result<()> {
        self.require_exhaustive()?;
        let g = self.g;
        self.check("lemma-z1", |_| {
            let r = check_lemma_z1(g);
            Ok(Outcome::new(r.ok(), format!("{} configurations, {} violations", r.checked, r.violations))
                .count("configurations", r.checked)
                .count("violations", r.violations)
                .witness(r.witness))
        })?;
        self.check("lemma-z2", |_| {
            let r = check_lemma_z2(g);
            Ok(Outcome::new(r.ok(), format!("{} configurations, {} violations", r.checked, r.violations))
                .count("configurations", r.checked)
                .count("violations", r.violations)
                .witness(r.witness))
        })
    }

    fn automorph(&mut self) -> Result<()> {
        let g = self.g;
        let (f, n) = (self.field(), self.n());
        let cliques = maximal_adjacency_cliques(g);
        let stars: BTreeSet<Vec<Handle>> =
            cliques.iter().filter(|c| c.kind == CliqueKind::Star).map(|c| c.members.clone()).collect();
        let tops: BTreeSet<Vec<Handle>> =
            cliques.iter().filter(|c| c.kind == CliqueKind::Top).map(|c| c.members.clone()).collect();
        let image = |perm: &[Handle], set: &Vec<Handle>| {
            let mut v: Vec<Handle> = set.iter().map(|&h| perm[h]).collect();
            v.sort_unstable();
            v
        };
        self.check("linear-maps", |run| {
            let mut t = Tally::default();
            for i in 0..run.cfg.sample {
                let m = random_invertible(&mut run.rng, f, 2 * n);
                let perm = induced_map(g, InducedMap::Linear(&m))?;
                let violation = relation_violation(g, &perm);
                let ok = is_permutation(&perm)
                    && violation.is_none()
                    && stars.iter().all(|s| stars.contains(&image(&perm, s)))
                    && tops.iter().all(|s| tops.contains(&image(&perm, s)));
                t.record(ok, || format!("map {i} {m:?}, pair {violation:?}"));
            }
            Ok(Outcome::new(t.ok(), format!("{} random linear maps preserve both relations and both clique kinds", t.checked))
                .count("maps", t.checked)
                .witness(t.witness))
        })?;
        self.check("duality", |_| {
            let perm = induced_map(g, InducedMap::Duality)?;
            let violation = relation_violation(g, &perm);
            let star_images: BTreeSet<Vec<Handle>> =
                cliques.iter().filter(|c| c.kind == CliqueKind::Star).map(|c| image_of(&perm, c)).collect();
            let top_images: BTreeSet<Vec<Handle>> =
                cliques.iter().filter(|c| c.kind == CliqueKind::Top).map(|c| image_of(&perm, c)).collect();
            let ok = is_permutation(&perm) && violation.is_none() && star_images == tops && top_images == stars;
            Ok(Outcome::new(ok, format!("duality preserves both relations and swaps {} stars with {} tops", stars.len(), tops.len()))
                .count("stars", stars.len())
                .count("tops", tops.len())
                .witness(violation.map(|(a, b)| format!("pair {a} {b}"))))
        })
    }
}

/// |GL(n, p)|.
pub fn gl_order(p: u64, n: usize) -> u64 {
    let pn = p.pow(n as u32);
    (0..n).map(|i| pn - p.pow(i as u32)).product()
}
