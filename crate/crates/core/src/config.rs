//! Run configuration shared by the suites and the command line.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::charmod::{WITNESS_HEIGHT, WITNESS_SEED};
use crate::error::{Error, Result};
use crate::lie::Series;

/// A simple Lie algebra named by series and rank, written like `A2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSelector {
    pub series: Series,
    pub rank: usize,
}

impl fmt::Display for AlgebraSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for AlgebraSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Contract(format!("algebra must look like A2, got {s:?}"));
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        if rank == 0 {
            return Err(bad());
        }
        Ok(AlgebraSelector { series, rank })
    }
}

impl Serialize for AlgebraSelector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraSelector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which suites a run includes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteFlags {
    pub algebra_info: bool,
    pub invariants: bool,
    pub poisson: bool,
    pub charmod: bool,
    pub scheme: bool,
    pub complexes: bool,
    pub comb: bool,
}

impl Default for SuiteFlags {
    fn default() -> Self {
        SuiteFlags {
            algebra_info: true,
            invariants: true,
            poisson: true,
            charmod: true,
            scheme: true,
            complexes: true,
            comb: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub algebra: AlgebraSelector,
    pub seed: u64,
    pub height_bound: u64,
    pub max_total_degree: usize,
    /// Sampled pairs in the `dim V_{x,y}` scan.
    pub samples: usize,
    /// Bound on `k` and `l` in the `r` and `c` scans.
    pub rc_max: u64,
    /// Bound on `l` in the `psi` scan.
    pub psi_max_l: u64,
    /// Runs the complexes over rank-2 algebras.
    pub long_running: bool,
    /// Worker threads; 0 selects the number of cores.
    pub jobs: usize,
    /// Records elapsed wall time in reports.
    pub timing: bool,
    pub suites: SuiteFlags,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            algebra: AlgebraSelector { series: Series::A, rank: 1 },
            seed: WITNESS_SEED,
            height_bound: WITNESS_HEIGHT,
            max_total_degree: 6,
            samples: 1000,
            rc_max: 30,
            psi_max_l: 25,
            long_running: false,
            jobs: 0,
            timing: false,
            suites: SuiteFlags::default(),
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SuiteConfig =
            serde_json::from_str(text).map_err(|e| Error::Contract(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Every bound must be positive; the `psi` scan needs `l >= 2`.
    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("height_bound", self.height_bound > 0),
            ("max_total_degree", self.max_total_degree > 0),
            ("samples", self.samples > 0),
            ("rc_max", self.rc_max > 0),
            ("psi_max_l", self.psi_max_l >= 2),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(Error::Contract(format!("{name} is out of range"))),
            None => Ok(()),
        }
    }
}
