//! Verification suites, reports and the on-disk index cache behind the
//! `grasslab` command-line tool.

mod cache;
mod config;
mod report;
mod suites;

pub use cache::{cache_index, cache_path, cache_text, load_index, load_or_build, parse_cache, relation_digest};
pub use config::{Suite, SuiteConfig};
pub use report::{CheckRecord, Report, Status, Summary};
pub use suites::{all_plan, gl_order, run_suite, EXHAUSTIVE_TRIPLES};
