//! Run a verification suite from code, with an index cache, and print the
//! report as a table and as JSON.

use grasslab::harness::{run_suite, Suite, SuiteConfig};

fn main() -> grasslab::Result<()> {
    let dir = std::env::temp_dir().join("grasslab-example-cache");
    let mut cfg = SuiteConfig::new(Suite::ZregEquivalence, 2, 2).with_seed(7);
    cfg.cache_dir = Some(dir.clone());
    let report = run_suite(&cfg)?;
    print!("{}", report.to_text());
    println!("\ncache in {}", dir.display());

    let cliques = run_suite(&SuiteConfig::new(Suite::Cliques, 3, 2))?;
    print!("\n{}", cliques.to_json());
    Ok(())
}
