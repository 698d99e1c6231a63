//! Exhaustive sweeps of the two intersection lemmas behind the distant-graph
//! characterization of reguli.

use grasslab::grassmann::build_index;
use grasslab::reguli::{check_lemma_z1, check_lemma_z2, check_segre_lines};
use grasslab::ringline::Frame;

fn main() -> grasslab::Result<()> {
    for (p, n) in [(2, 2), (3, 2)] {
        let g = build_index(p, n)?;
        let z1 = check_lemma_z1(&g);
        let z2 = check_lemma_z2(&g);
        let segre = check_segre_lines(&Frame::standard(g.field(), n));
        println!(
            "G({p},{n}): W meets E in a point: {} cases, {} violations; \
             joining line meets E0: {} cases, {} violations; other lines of Q: {}, {} violations",
            z1.checked, z1.violations, z2.checked, z2.violations, segre.checked, segre.violations
        );
    }
    Ok(())
}
