//! Named verification suites with per-check tolerances.
//!
//! Every suite is deterministic in `(suite, seed, budget)`: random sample
//! points come from a ChaCha8 stream seeded by the run seed mixed with a
//! per-suite salt, checks are evaluated in parallel and collected in order.
//! Only `elapsed_ms` differs between reruns.

mod suites;
mod weyl;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use weyl::{weyl_pairing, weyl_pairing_check, WeylSymbol, WEYL_QUADRATURE, WEYL_TOLERANCE};

/// Outcome of one named comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub max_abs_err: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub samples: usize,
    pub elapsed_ms: f64,
    /// A computed quantity worth recording alongside the error, such as the
    /// common value of two pipelines.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<[f64; 2]>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, max_abs_err: f64, tolerance: f64, samples: usize) -> Self {
        Self {
            name: name.into(),
            max_abs_err,
            tolerance,
            passed: max_abs_err <= tolerance,
            samples,
            elapsed_ms: 0.0,
            value: None,
        }
    }

    pub fn with_value(mut self, v: Complex64) -> Self {
        self.value = Some([v.re, v.im]);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    pub seed: u64,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64, checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self {
            suite: suite.name().to_string(),
            checks,
            passed,
            seed,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Largest `max_abs_err / tolerance` over all checks.
    pub fn worst_ratio(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_abs_err / c.tolerance)
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    /// Indices capped at 3 and random points at 8.
    #[default]
    Quick,
    Full,
}

impl Budget {
    pub fn cap_index(self, full: usize) -> usize {
        match self {
            Budget::Quick => full.min(3),
            Budget::Full => full,
        }
    }

    pub fn cap_points(self, full: usize) -> usize {
        match self {
            Budget::Quick => full.min(8),
            Budget::Full => full,
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Budget::Quick => "quick",
            Budget::Full => "full",
        })
    }
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Budget::Quick),
            "full" => Ok(Budget::Full),
            other => Err(Error::UnknownBudget(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Properties,
    Moyal,
    Orthogonality,
    Intertwine,
    ClosedForms,
    ProductTheorem,
    Polarization,
    Unitarity,
    Weyl,
    Beam,
    All,
}

impl Suite {
    /// Every suite except [`Suite::All`], in run order.
    pub const MEMBERS: [Suite; 10] = [
        Suite::Properties,
        Suite::Moyal,
        Suite::Orthogonality,
        Suite::Intertwine,
        Suite::ClosedForms,
        Suite::ProductTheorem,
        Suite::Polarization,
        Suite::Unitarity,
        Suite::Weyl,
        Suite::Beam,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Properties => "properties",
            Suite::Moyal => "moyal",
            Suite::Orthogonality => "orthogonality",
            Suite::Intertwine => "intertwine",
            Suite::ClosedForms => "closedforms",
            Suite::ProductTheorem => "product_theorem",
            Suite::Polarization => "polarization",
            Suite::Unitarity => "unitarity",
            Suite::Weyl => "weyl",
            Suite::Beam => "beam",
            Suite::All => "all",
        }
    }

    fn salt(self) -> u64 {
        // FNV-1a of the name keeps salts stable if variants are reordered
        self.name().bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
            (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
        })
    }

    fn rng(self, seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed ^ self.salt())
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
        Suite::MEMBERS
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|m| m.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Runs a suite by name.
pub fn run_suite(name: &str, seed: u64, budget: Budget) -> Result<SuiteReport> {
    run(name.parse()?, seed, budget)
}

pub fn run(suite: Suite, seed: u64, budget: Budget) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for member in Suite::MEMBERS {
                for mut c in run_member(member, seed, budget)? {
                    c.name = format!("{}/{}", member.name(), c.name);
                    all.push(c);
                }
            }
            all
        }
        member => run_member(member, seed, budget)?,
    };
    Ok(SuiteReport::new(suite, seed, checks))
}

fn run_member(suite: Suite, seed: u64, budget: Budget) -> Result<Vec<CheckResult>> {
    let mut rng = suite.rng(seed);
    match suite {
        Suite::Properties => suites::properties(&mut rng, budget),
        Suite::Moyal => suites::moyal(budget),
        Suite::Orthogonality => suites::orthogonality(budget),
        Suite::Intertwine => suites::intertwine(&mut rng, budget),
        Suite::ClosedForms => suites::closed_forms(budget),
        Suite::ProductTheorem => suites::product_theorem(&mut rng, budget),
        Suite::Polarization => suites::polarization(&mut rng, budget),
        Suite::Unitarity => suites::unitarity(&mut rng, budget),
        Suite::Weyl => suites::weyl(budget),
        Suite::Beam => suites::beam(budget),
        Suite::All => unreachable!("expanded by run"),
    }
}

/// Times `body`, which returns `(max_abs_err, samples)`.
pub(crate) fn timed<F>(name: impl Into<String>, tolerance: f64, body: F) -> Result<CheckResult>
where
    F: FnOnce() -> Result<(f64, usize)>,
{
    let start = Instant::now();
    let (err, samples) = body()?;
    let mut c = CheckResult::new(name, err, tolerance, samples);
    c.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(c)
}

/// `max(|Δre|, |Δim|)`.
pub fn complex_err(a: Complex64, b: Complex64) -> f64 {
    let d = a - b;
    d.re.abs().max(d.im.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_matches_manifest() {
        let names: Vec<&str> = Suite::MEMBERS.iter().map(|s| s.name()).collect();
        assert_eq!(
            names,
            [
                "properties",
                "moyal",
                "orthogonality",
                "intertwine",
                "closedforms",
                "product_theorem",
                "polarization",
                "unitarity",
                "weyl",
                "beam"
            ]
        );
        for s in Suite::MEMBERS {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!(matches!(
            run_suite("bogus", 1, Budget::Quick),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn salts_are_distinct() {
        let mut salts: Vec<u64> = Suite::MEMBERS.iter().map(|s| s.salt()).collect();
        salts.sort_unstable();
        salts.dedup();
        assert_eq!(salts.len(), Suite::MEMBERS.len());
    }

    #[test]
    fn passed_iff_within_tolerance() {
        assert!(CheckResult::new("a", 1e-9, 1e-8, 1).passed);
        assert!(CheckResult::new("a", 1e-8, 1e-8, 1).passed);
        assert!(!CheckResult::new("a", 2e-8, 1e-8, 1).passed);
        assert!(!CheckResult::new("a", f64::NAN, 1e-8, 1).passed);
        let r = SuiteReport::new(
            Suite::Beam,
            3,
            vec![
                CheckResult::new("a", 0.0, 1.0, 1),
                CheckResult::new("b", 2.0, 1.0, 1),
            ],
        );
        assert!(!r.passed);
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.worst_ratio(), 2.0);
    }

    #[test]
    fn budget_caps() {
        assert_eq!(Budget::Quick.cap_index(8), 3);
        assert_eq!(Budget::Quick.cap_points(50), 8);
        assert_eq!(Budget::Full.cap_index(8), 8);
        assert_eq!("full".parse::<Budget>().unwrap(), Budget::Full);
        assert!("slow".parse::<Budget>().is_err());
    }

    fn strip_timing(mut r: SuiteReport) -> SuiteReport {
        r.checks.iter_mut().for_each(|c| c.elapsed_ms = 0.0);
        r
    }

    #[test]
    fn reports_are_deterministic() {
        for suite in ["polarization", "intertwine", "beam"] {
            let a = strip_timing(run_suite(suite, 11, Budget::Quick).unwrap());
            let b = strip_timing(run_suite(suite, 11, Budget::Quick).unwrap());
            assert_eq!(
                serde_json::to_string(&a).unwrap(),
                serde_json::to_string(&b).unwrap()
            );
            assert!(a.passed, "{suite}: {:?}", a.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn different_seeds_draw_different_points() {
        let a = run_suite("polarization", 1, Budget::Quick).unwrap();
        let b = run_suite("polarization", 2, Budget::Quick).unwrap();
        assert_ne!(
            a.checks.iter().map(|c| c.max_abs_err).collect::<Vec<_>>(),
            b.checks.iter().map(|c| c.max_abs_err).collect::<Vec<_>>()
        );
    }
}
