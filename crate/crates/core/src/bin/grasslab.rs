use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use grasslab::grassmann::build_index;
use grasslab::harness::{cache_index, load_or_build, run_suite, Suite, SuiteConfig};
use grasslab::reguli::regulus_through;
use grasslab::Error;

#[derive(Parser)]
#[command(name = "grasslab", version, about = "Grassmannians of n-subspaces of GF(p)^2n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate G and report its size and degrees.
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        /// Directory holding cached indices.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        sample: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Include elapsed time per check.
        #[arg(long)]
        timings: bool,
    },
    /// Print the regulus through three mutually distant elements.
    Regulus {
        /// Three handles, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        through: Vec<usize>,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("grasslab: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Enumerate { p, n, cache } => {
            let g = match &cache {
                Some(dir) => load_or_build(dir, p, n)?,
                None => build_index(p, n)?,
            };
            let (adj, dist) = g.expected_degrees();
            println!("G({p}, {n}): {} elements in GF({p})^{}", g.len(), g.ambient());
            println!("adjacency degree {adj}, distant degree {dist}");
            if let Some(dir) = cache {
                println!("cache {}", cache_index(&g, &dir)?.display());
            }
            Ok(true)
        }
        Command::Verify { suite, p, n, seed, sample, out, format, cache, timings } => {
            let mut cfg = SuiteConfig::new(suite.parse::<Suite>()?, p, n).with_seed(seed).with_sample(sample);
            cfg.out = out.clone();
            cfg.cache_dir = cache;
            cfg.timings = timings;
            let report = run_suite(&cfg)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(report.passed())
        }
        Command::Regulus { through, p, n } => {
            let [h0, h1, h2] = through[..] else {
                return Err(Error::BadConfig(format!("--through takes 3 handles, got {}", through.len())));
            };
            let g = build_index(p, n)?;
            if let Some(&h) = through.iter().find(|&&h| h >= g.len()) {
                return Err(Error::BadConfig(format!("handle {h} out of range 0..{}", g.len())));
            }
            let r = regulus_through(&g, h0, h1, h2)?;
            println!("members");
            for &h in &r.members {
                println!("  {h:>6}  {:?}", g.element(h));
            }
            println!("directrices");
            for line in &r.directrices {
                println!("          {line:?}");
            }
            Ok(true)
        }
    }
}
