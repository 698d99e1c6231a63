//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grasslab::grassmann::{
    adjacent_via_distant, bfs_distances, build_index, graph_metrics, induced_map, is_adjacent,
    is_distant, maximal_adjacency_cliques, maximal_cliques, pencils_from_cliques,
    pencils_from_flags, relation_violation, CliqueKind, GrassmannianIndex, Handle, InducedMap,
    Relation,
};
use grasslab::reguli::{
    check_lemma_z1, check_lemma_z2, distant_cliques, distant_triples, reguli_from_triples,
    satisfies_distant_conditions, DistantGraph,
};
use grasslab::ringline::{
    act, all_gl2, all_ring_points, hat, phi, phi_is_bijective, random_invertible, z_chains, Frame,
    Gl2Element,
};
use grasslab::{gaussian_binomial, Field};

type Outcome = Result<String, String>;

/// Name, check, time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn index(p: u32, n: usize) -> GrassmannianIndex {
    build_index(p, n).expect("within resource guard")
}

fn enumeration_counts() -> Outcome {
    let mut parts = Vec::new();
    for (p, n, want) in [(2, 2, 35), (3, 2, 130), (2, 3, 1395)] {
        let start = Instant::now();
        let g = index(p, n);
        let took = start.elapsed();
        ensure(g.len() == want, format!("G({p},{n}) has {} elements", g.len()))?;
        ensure(
            g.len() as u64 == gaussian_binomial(p as u64, 2 * n, n),
            format!("G({p},{n}) disagrees with the Gaussian binomial"),
        )?;
        ensure(took < Duration::from_secs(5), format!("G({p},{n}) took {took:?}"))?;
        parts.push(format!("({p},{n}) {want}"));
    }
    Ok(parts.join(", "))
}

fn clique_theorem() -> Outcome {
    let mut parts = Vec::new();
    for (p, n, count, size) in [(2, 2, 30, 7), (3, 2, 80, 13)] {
        let g = index(p, n);
        let generic: BTreeSet<Vec<Handle>> = maximal_cliques(g.adjacency_rows()).into_iter().collect();
        let labelled = maximal_adjacency_cliques(&g);
        let want: BTreeSet<Vec<Handle>> = labelled.iter().map(|c| c.members.clone()).collect();
        let extras = generic.difference(&want).count();
        let misses = want.difference(&generic).count();
        ensure(extras == 0 && misses == 0, format!("({p},{n}): {extras} extras, {misses} misses"))?;
        ensure(generic.len() == count, format!("({p},{n}): {} cliques", generic.len()))?;
        ensure(generic.iter().all(|c| c.len() == size), format!("({p},{n}): clique size is not {size}"))?;
        parts.push(format!("({p},{n}) {count} of size {size}"));
    }
    Ok(parts.join(", "))
}

fn pencil_theorem() -> Outcome {
    let mut parts = Vec::new();
    for (p, n) in [(2, 2), (3, 2)] {
        let g = index(p, n);
        let a: BTreeSet<Vec<Handle>> = pencils_from_flags(&g).into_iter().map(|x| x.members).collect();
        let b: BTreeSet<Vec<Handle>> = pencils_from_cliques(&g).into_iter().map(|x| x.members).collect();
        ensure(a == b, format!("({p},{n}): pencil sets differ"))?;
        ensure(a.iter().all(|m| m.len() == p as usize + 1), format!("({p},{n}): pencil size"))?;
        if (p, n) == (2, 2) {
            ensure(a.len() == 105, format!("(2,2): {} pencils", a.len()))?;
        }
        parts.push(format!("({p},{n}) {}", a.len()));
    }
    Ok(parts.join(", "))
}

fn distant_defines_adjacency() -> Outcome {
    let mut parts = Vec::new();
    for (p, n, pairs) in [(2, 2, 595), (3, 2, 8385)] {
        let g = index(p, n);
        let mut seen = 0;
        for a in g.handles() {
            for b in a + 1..g.len() {
                let (x, y) = (g.element(a), g.element(b));
                let via = adjacent_via_distant(&g, x, y).map_err(|e| e.to_string())?;
                let direct = is_adjacent(x, y).map_err(|e| e.to_string())?;
                ensure(via == direct, format!("({p},{n}): disagreement at {a} {b}"))?;
                seen += 1;
            }
        }
        ensure(seen == pairs, format!("({p},{n}): {seen} pairs"))?;
        parts.push(format!("({p},{n}) {pairs} pairs"));
    }
    Ok(parts.join(", ") + ", 0 disagreements")
}

fn metrics() -> Outcome {
    let mut parts = Vec::new();
    for (p, n) in [(2, 2), (3, 2), (2, 3)] {
        let g = index(p, n);
        let adj = graph_metrics(&g, Relation::Adjacency);
        let dist = graph_metrics(&g, Relation::Distant);
        ensure(adj.connected && adj.diameter == n, format!("({p},{n}): Grassmann diameter {}", adj.diameter))?;
        ensure(dist.connected && dist.diameter == 2, format!("({p},{n}): distant diameter {}", dist.diameter))?;
        let small = g.len() <= 200;
        for a in g.handles() {
            let d = bfs_distances(g.adjacency_rows(), a);
            for b in a + 1..g.len() {
                let distant = if small {
                    is_distant(g.element(a), g.element(b)).map_err(|e| e.to_string())?
                } else {
                    g.distant(a, b)
                };
                ensure((d[b] == Some(n)) == distant, format!("({p},{n}): pair {a} {b}"))?;
            }
        }
        parts.push(format!("({p},{n}) {}/{}", adj.diameter, dist.diameter));
    }
    Ok(format!("Grassmann/distant diameters {}", parts.join(", ")))
}

fn phi_model() -> Outcome {
    let g = index(2, 2);
    let f = Field::gf2();
    let frame = Frame::standard(f, 2);
    let report = phi_is_bijective(&g, &frame).map_err(|e| e.to_string())?;
    ensure(report.ok(), format!("{report:?}"))?;
    let pts = all_ring_points(f, 2).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let samples = 100;
    for i in 0..samples {
        let psi = Gl2Element::random(&mut rng, f, 2);
        let h = hat(&psi, &frame).map_err(|e| e.to_string())?;
        for pt in &pts {
            let lhs = phi(&act(&psi, pt).map_err(|e| e.to_string())?, &frame).map_err(|e| e.to_string())?;
            let rhs = phi(pt, &frame).and_then(|x| x.map(&h)).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, format!("sample {i}: equivariance fails at {pt:?}"))?;
        }
    }
    Ok(format!(
        "{} points, {} distant pairs, equivariance for {samples} random group elements",
        report.ring_points, report.distant_pairs_ring
    ))
}

fn chain_images(g: &GrassmannianIndex, sample: &[Gl2Element]) -> Result<BTreeSet<Vec<Handle>>, String> {
    let frame = Frame::standard(g.field(), g.n());
    let chains = z_chains(g.field(), g.n(), sample).map_err(|e| e.to_string())?;
    chains
        .iter()
        .map(|c| {
            let mut hs = c
                .iter()
                .map(|pt| phi(pt, &frame).and_then(|x| g.handle_of(&x)))
                .collect::<grasslab::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            hs.sort_unstable();
            Ok(hs)
        })
        .collect()
}

fn regulus_equivalences() -> Outcome {
    // (2,2): three descriptions coincide exactly
    let g = index(2, 2);
    let graph = DistantGraph::from_index(&g);
    let closure = reguli_from_triples(&g).map_err(|e| e.to_string())?;
    ensure(closure.values().all(|&c| c == 1), "(2,2): a triple lies in two reguli")?;
    let reguli: BTreeSet<Vec<Handle>> = closure.into_keys().collect();
    let group = all_gl2(Field::gf2(), 2).map_err(|e| e.to_string())?;
    let chains = chain_images(&g, &group)?;
    let passing: BTreeSet<Vec<Handle>> = distant_cliques(&g, 3)
        .into_iter()
        .filter(|c| satisfies_distant_conditions(&graph, c))
        .collect();
    ensure(reguli.len() == 560, format!("(2,2): {} reguli", reguli.len()))?;
    ensure(chains == reguli, "(2,2): chain images differ from closure reguli")?;
    ensure(passing == reguli, "(2,2): distant-graph characterization differs")?;

    // (3,2): exhaustive triples, sampled chain orbit
    let g3 = index(3, 2);
    let graph3 = DistantGraph::from_index(&g3);
    let closure3 = reguli_from_triples(&g3).map_err(|e| e.to_string())?;
    ensure(closure3.values().all(|&c| c == 4), "(3,2): a triple lies in two reguli")?;
    let reguli3: BTreeSet<Vec<Handle>> = closure3.into_keys().collect();
    ensure(reguli3.len() == 21060, format!("(3,2): {} reguli", reguli3.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sample: Vec<Gl2Element> = (0..10_000).map(|_| Gl2Element::random(&mut rng, g3.field(), 2)).collect();
    let chains3 = chain_images(&g3, &sample)?;
    ensure(chains3.is_subset(&reguli3), "(3,2): a chain image is not a closure regulus")?;
    for r in &reguli3 {
        ensure(satisfies_distant_conditions(&graph3, r), format!("(3,2): regulus {r:?} rejected"))?;
    }
    let mut triples = 0;
    for (a, b, c) in distant_triples(&g3) {
        ensure(!satisfies_distant_conditions(&graph3, &[a, b, c]), format!("(3,2): triple {a} {b} {c} accepted"))?;
        triples += 1;
    }
    Ok(format!(
        "(2,2) 560 = chains = closure = distant-graph; (3,2) {triples} triples -> {} reguli, {} sampled chain images inside",
        reguli3.len(),
        chains3.len()
    ))
}

fn lemma_sweeps() -> Outcome {
    let mut parts = Vec::new();
    for (p, n) in [(2, 2), (3, 2)] {
        let g = index(p, n);
        let (z1, z2) = (check_lemma_z1(&g), check_lemma_z2(&g));
        ensure(z1.ok(), format!("({p},{n}) first lemma: {:?}", z1.witness))?;
        ensure(z2.ok(), format!("({p},{n}) second lemma: {:?}", z2.witness))?;
        parts.push(format!("({p},{n}) {}+{}", z1.checked, z2.checked));
    }
    Ok(format!("configurations {}, 0 violations", parts.join(", ")))
}

fn automorphisms() -> Outcome {
    let g = index(2, 2);
    let cliques = maximal_adjacency_cliques(&g);
    let of_kind = |k: CliqueKind| -> BTreeSet<Vec<Handle>> {
        cliques.iter().filter(|c| c.kind == k).map(|c| c.members.clone()).collect()
    };
    let (stars, tops) = (of_kind(CliqueKind::Star), of_kind(CliqueKind::Top));
    let image = |perm: &[Handle], s: &Vec<Handle>| {
        let mut v: Vec<Handle> = s.iter().map(|&h| perm[h]).collect();
        v.sort_unstable();
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        let m = random_invertible(&mut rng, g.field(), 4);
        let perm = induced_map(&g, InducedMap::Linear(&m)).map_err(|e| e.to_string())?;
        ensure(relation_violation(&g, &perm).is_none(), format!("map {i} breaks a relation"))?;
        ensure(stars.iter().all(|s| stars.contains(&image(&perm, s))), format!("map {i} moves a star off the stars"))?;
    }
    let dual = induced_map(&g, InducedMap::Duality).map_err(|e| e.to_string())?;
    ensure(relation_violation(&g, &dual).is_none(), "duality breaks a relation")?;
    let star_images: BTreeSet<Vec<Handle>> = stars.iter().map(|s| image(&dual, s)).collect();
    let top_images: BTreeSet<Vec<Handle>> = tops.iter().map(|s| image(&dual, s)).collect();
    ensure(star_images == tops && top_images == stars, "duality does not swap stars and tops")?;
    Ok(format!("100 linear maps, duality swaps {} stars with {} tops", stars.len(), tops.len()))
}

fn determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_grasslab"))
            .args(["verify", "--suite", "all", "--seed", "7"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), format!("exit status {}", out.status))?;
        Ok::<_, String>(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    ensure(a == b, "reports differ")?;
    Ok(format!("two reports of {} bytes are identical", a.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("enumeration counts", enumeration_counts, 15),
        ("maximal cliques are stars and tops", clique_theorem, 30),
        ("pencils from clique intersections", pencil_theorem, 10),
        ("distant relation defines adjacency", distant_defines_adjacency, 60),
        ("diameters and distance n", metrics, 30),
        ("ring-line model", phi_model, 30),
        ("regulus equivalences", regulus_equivalences, 120),
        ("lemma sweeps", lemma_sweeps, 60),
        ("induced automorphisms", automorphisms, 10),
        ("deterministic reports", determinism, 600),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(limit) => {
                Err(format!("{detail}; took {took:.1?}, limit {limit} s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
