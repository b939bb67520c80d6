//! Named verification suites.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contraction::verify_contraction;
use crate::error::Error;
use crate::littlegroup::verify_little_groups;
use crate::mat2::verify_algebra_tables;
use crate::minkowski::{verify_exponential_map, verify_interval_invariance};
use crate::report::Report;
use crate::spinorstates::verify_spinors;

pub const DEFAULT_SEED: u64 = 2017;

/// Random element/vector pairs in the interval sweep.
pub const INTERVAL_PAIRS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Littlegroup,
    Contraction,
    Spinors,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Algebra,
        Suite::Littlegroup,
        Suite::Contraction,
        Suite::Spinors,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Littlegroup => "littlegroup",
            Suite::Contraction => "contraction",
            Suite::Spinors => "spinors",
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
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown suite".into(),
            })
    }
}

/// Runs a suite. `seed` drives the randomized sweeps.
///
/// - `algebra`: commutator tables and the exponential map.
/// - `littlegroup`: Wigner conditions plus the interval sweep.
/// - `contraction`: boosted rotations, contraction rates, excursion.
/// - `spinors`: spinor-state constructions.
pub fn run(suite: Suite, seed: u64) -> Report {
    match suite {
        Suite::Algebra => Report::merge(
            "algebra",
            [verify_algebra_tables(), verify_exponential_map()],
        ),
        Suite::Littlegroup => Report::merge(
            "littlegroup",
            [
                verify_little_groups(),
                Report::new("interval", vec![verify_interval_invariance(seed, INTERVAL_PAIRS)]),
            ],
        ),
        Suite::Contraction => Report::merge("contraction", [verify_contraction()]),
        Suite::Spinors => Report::merge("spinors", [verify_spinors(seed)]),
        Suite::All => Report::merge(
            "all",
            [Suite::Algebra, Suite::Littlegroup, Suite::Contraction, Suite::Spinors]
                .map(|s| run(s, seed)),
        ),
    }
}
