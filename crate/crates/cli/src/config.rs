use std::fmt;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use kac_core::analysis::DEFAULT_SEED;

pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Structure,
    Omega,
    Simplicity,
    ZeroLocus,
    Socle,
    Homspace,
    CoindIso,
    TopBijection,
    OppoKac,
    PnIndecomposable,
    Restriction,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("suite name");
        f.write_str(name.get_name())
    }
}

/// Inclusive integer range for every weight coordinate, written `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = text
            .trim()
            .split_once("..")
            .ok_or_else(|| format!("grid {text:?} is not of the form lo..hi"))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad grid bound {lo:?}"))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad grid bound {hi:?}"))?;
        if lo > hi {
            return Err(format!("grid {text:?} is empty"));
        }
        Ok(Grid { lo, hi })
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Contents of a `--config` TOML file; every field can be overridden by a flag.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub algebra: Option<String>,
    pub weight_grid: Option<String>,
    #[serde(default)]
    pub suites: Vec<Suite>,
    pub seed: Option<u64>,
    pub output: Option<OutputFormat>,
    pub max_dim: Option<usize>,
}

impl SuiteConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

/// Fully resolved settings for one `verify` run.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub grid: Grid,
    pub seed: u64,
    pub max_dim: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            grid: Grid { lo: -1, hi: 1 },
            seed: DEFAULT_SEED,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!("-3..3".parse::<Grid>().unwrap(), Grid { lo: -3, hi: 3 });
        assert_eq!("0..=2".parse::<Grid>().unwrap(), Grid { lo: 0, hi: 2 });
        assert!("3..-3".parse::<Grid>().is_err());
        assert!("3".parse::<Grid>().is_err());
    }

    #[test]
    fn config_files() {
        let cfg: SuiteConfig = toml::from_str(
            r#"
            algebra = "gl(1|1)"
            weight_grid = "-2..2"
            suites = ["simplicity", "zero-locus"]
            seed = 7
            output = "json"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.suites, [Suite::Simplicity, Suite::ZeroLocus]);
        assert_eq!(cfg.output, Some(OutputFormat::Json));
        assert!(toml::from_str::<SuiteConfig>("colour = 3").is_err());
    }
}
