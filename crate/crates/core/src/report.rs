//! Named numerical checks and the suite reports that collect them.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Which side of the tolerance a deviation must fall on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Pass iff `deviation <= tolerance`.
    AtMost,
    /// Pass iff `deviation >= tolerance`. Used for "must not hold" checks.
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub deviation: f64,
    pub tolerance: f64,
    pub bound: Bound,
    /// The identity or table entry the check pins down.
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
}

impl Check {
    pub fn at_most(
        name: impl Into<String>,
        anchor: impl Into<String>,
        deviation: f64,
        tolerance: f64,
    ) -> Self {
        Self::build(name.into(), anchor.into(), deviation, tolerance, Bound::AtMost)
    }

    pub fn at_least(
        name: impl Into<String>,
        anchor: impl Into<String>,
        deviation: f64,
        tolerance: f64,
    ) -> Self {
        Self::build(name.into(), anchor.into(), deviation, tolerance, Bound::AtLeast)
    }

    fn build(name: String, anchor: String, deviation: f64, tolerance: f64, bound: Bound) -> Self {
        // NaN compares false on both sides, so it always fails.
        let ok = match bound {
            Bound::AtMost => deviation <= tolerance,
            Bound::AtLeast => deviation >= tolerance,
        };
        Self {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            deviation,
            tolerance,
            bound,
            anchor,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Self {
        let failed = checks.iter().filter(|c| !c.passed()).count();
        Self {
            suite: suite.into(),
            summary: Summary {
                passed: checks.len() - failed,
                failed,
            },
            checks,
        }
    }

    /// Concatenates several reports under a new suite name.
    pub fn merge(suite: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Self {
        let checks = parts.into_iter().flat_map(|r| r.checks).collect();
        Self::new(suite, checks)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts_failures() {
        let r = Report::new(
            "t",
            vec![
                Check::at_most("a", "x", 0.0, 1e-12),
                Check::at_most("b", "x", 1.0, 1e-12),
                Check::at_least("c", "x", 1.0, 0.1),
                Check::at_most("d", "x", f64::NAN, 1.0),
            ],
        );
        assert_eq!(r.summary, Summary { passed: 2, failed: 2 });
        assert!(!r.all_passed());
        let names: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["b", "d"]);
    }

    #[test]
    fn nan_fails_lower_bound_too() {
        assert!(!Check::at_least("n", "x", f64::NAN, 0.0).passed());
    }
}
