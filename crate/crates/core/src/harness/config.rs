use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grassmann::check_size;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Cliques,
    Pencils,
    Distadj,
    Metrics,
    Ringline,
    Reguli,
    ZregEquivalence,
    Lemmas,
    Automorph,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 9] = [
        Suite::Cliques,
        Suite::Pencils,
        Suite::Distadj,
        Suite::Metrics,
        Suite::Ringline,
        Suite::Reguli,
        Suite::ZregEquivalence,
        Suite::Lemmas,
        Suite::Automorph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cliques => "cliques",
            Suite::Pencils => "pencils",
            Suite::Distadj => "distadj",
            Suite::Metrics => "metrics",
            Suite::Ringline => "ringline",
            Suite::Reguli => "reguli",
            Suite::ZregEquivalence => "zreg-equivalence",
            Suite::Lemmas => "lemmas",
            Suite::Automorph => "automorph",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::SINGLE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::BadConfig(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub p: u32,
    pub n: usize,
    /// Size of each randomized sample (group elements, maps, candidate sets).
    pub sample: usize,
    /// Group elements used for chain orbits when the full group is too big.
    pub orbit_sample: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    /// Record elapsed time per check. Makes reports differ between runs.
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite, p: u32, n: usize) -> Self {
        SuiteConfig {
            suite,
            p,
            n,
            sample: 100,
            orbit_sample: 10_000,
            seed: 0,
            out: None,
            cache_dir: None,
            timings: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_sample(mut self, sample: usize) -> Self {
        self.sample = sample;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.suite == Suite::All {
            return Ok(());
        }
        let field = Field::new(self.p).map_err(|e| Error::BadConfig(e.to_string()))?;
        check_size(field, self.n)?;
        if self.sample == 0 || self.orbit_sample == 0 {
            return Err(Error::BadConfig("sample sizes must be positive".into()));
        }
        Ok(())
    }
}
