//! Runs selected statements over a universe of pairs and tallies verdicts.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blowup::analyze;
use crate::error::Result;
use crate::ideal::ValueIdeal;
use crate::invariants::RingInvariants;
use crate::notation::render_ideal;
use crate::par::{ordered_map, Parallelism};
use crate::semigroup::NumericalSemigroup;

use super::context::PairContext;
use super::enumerate::{enumerate_ideals, enumerate_semigroups};
use super::fixtures::{builtin_fixtures, load_case};
use super::{run_statement, select, Statement, Status, TheoremVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum IdealStrategy {
    /// Only `E = M`.
    MaximalOnly,
    /// Every non-principal ideal with generators `<= c + k·e`.
    AllUpToBound { k: i64 },
    /// Up to `count` ideals per semigroup drawn from the `c + 2e` universe.
    RandomSample { seed: u64, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub max_genus: usize,
    pub ideal_strategy: IdealStrategy,
    /// Statement ids or prefixes; `None` runs the whole catalog.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub statements: Option<Vec<String>>,
    /// Does not influence the report.
    #[serde(skip)]
    pub parallelism: Parallelism,
    /// Run over the built-in examples instead of an enumerated universe.
    #[serde(default)]
    pub fixtures_only: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_genus: 6,
            ideal_strategy: IdealStrategy::MaximalOnly,
            statements: None,
            parallelism: Parallelism::Auto,
            fixtures_only: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementTally {
    pub statement_id: String,
    pub checked: usize,
    pub vacuous: usize,
    pub held: usize,
    pub failed: usize,
}

/// A pair the pipeline itself rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairError {
    pub semigroup: String,
    pub ideal: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub semigroups: usize,
    pub pairs: usize,
    pub tallies: Vec<StatementTally>,
    pub total_failed: usize,
    pub failures: Vec<TheoremVerdict>,
    pub errors: Vec<PairError>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.total_failed == 0 && self.errors.is_empty()
    }

    pub fn tally(&self, id: &str) -> Option<&StatementTally> {
        self.tallies.iter().find(|t| t.statement_id == id)
    }
}

struct PairOutcome {
    statuses: Vec<Status>,
    failures: Vec<TheoremVerdict>,
    error: Option<PairError>,
}

fn ideals_for(s: &NumericalSemigroup, strategy: &IdealStrategy, rng: &mut ChaCha8Rng) -> Vec<ValueIdeal> {
    if s.is_naturals() {
        return Vec::new();
    }
    match *strategy {
        IdealStrategy::MaximalOnly => vec![ValueIdeal::maximal(s)],
        IdealStrategy::AllUpToBound { k } => enumerate_ideals(s, s.conductor() + k * s.multiplicity()),
        IdealStrategy::RandomSample { count, .. } => {
            let all = enumerate_ideals(s, s.conductor() + 2 * s.multiplicity());
            if all.len() <= count {
                return all;
            }
            let mut picks = sample(rng, all.len(), count).into_vec();
            picks.sort_unstable();
            picks.into_iter().map(|i| all[i].clone()).collect()
        }
    }
}

fn run_pair(ri: &RingInvariants, e: &ValueIdeal, selected: &[&Statement]) -> PairOutcome {
    match analyze(ri, e) {
        Ok(rep) => {
            let cx = PairContext::new(ri, rep);
            let verdicts: Vec<TheoremVerdict> = selected.iter().map(|st| run_statement(st, &cx)).collect();
            let statuses = verdicts.iter().map(|v| v.status).collect();
            let failures = verdicts.into_iter().filter(TheoremVerdict::failed).collect();
            PairOutcome { statuses, failures, error: None }
        }
        Err(err) => PairOutcome {
            statuses: Vec::new(),
            failures: Vec::new(),
            error: Some(PairError {
                semigroup: ri.semigroup.explicit_notation(),
                ideal: render_ideal(e),
                error: err.to_string(),
            }),
        },
    }
}

/// The universe of semigroups with their ideals, in deterministic order.
pub fn universe(config: &SuiteConfig) -> Result<Vec<(RingInvariants, Vec<ValueIdeal>)>> {
    if config.fixtures_only {
        let mut out: Vec<(RingInvariants, Vec<ValueIdeal>)> = Vec::new();
        for f in builtin_fixtures() {
            for case in &f.cases {
                let (ri, e) = load_case(&f, case)?;
                match out.last_mut() {
                    Some((last, ideals)) if last.semigroup == ri.semigroup => ideals.push(e),
                    _ => out.push((ri, vec![e])),
                }
            }
        }
        return Ok(out);
    }
    let semigroups: Vec<NumericalSemigroup> = enumerate_semigroups(config.max_genus).collect();
    let invariants = ordered_map(&semigroups, config.parallelism, RingInvariants::new);
    let seed = match config.ideal_strategy {
        IdealStrategy::RandomSample { seed, .. } => seed,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(semigroups.len());
    for ri in invariants {
        let ri = ri?;
        let ideals = ideals_for(&ri.semigroup, &config.ideal_strategy, &mut rng);
        out.push((ri, ideals));
    }
    Ok(out)
}

/// Runs the suite. Statement failures are reported as data.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let selected = select(config.statements.as_deref())?;
    let uni = universe(config)?;
    let pairs: Vec<(usize, &ValueIdeal)> =
        uni.iter().enumerate().flat_map(|(k, (_, ideals))| ideals.iter().map(move |e| (k, e))).collect();
    let outcomes = ordered_map(&pairs, config.parallelism, |&(k, e)| run_pair(&uni[k].0, e, &selected));

    let mut tallies: Vec<StatementTally> = selected
        .iter()
        .map(|st| StatementTally { statement_id: st.id.to_string(), ..Default::default() })
        .collect();
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    for out in outcomes {
        for (t, status) in tallies.iter_mut().zip(&out.statuses) {
            match status {
                Status::Held => {
                    t.checked += 1;
                    t.held += 1;
                }
                Status::Failed => {
                    t.checked += 1;
                    t.failed += 1;
                }
                Status::Vacuous => t.vacuous += 1,
            }
        }
        failures.extend(out.failures);
        errors.extend(out.error);
    }
    let total_failed = tallies.iter().map(|t| t.failed).sum();
    Ok(SuiteReport {
        config: config.clone(),
        semigroups: uni.len(),
        pairs: pairs.len(),
        tallies,
        total_failed,
        failures,
        errors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero_is_vacuous_everywhere() {
        let r = run_suite(&SuiteConfig { max_genus: 0, ..Default::default() }).unwrap();
        assert_eq!(r.pairs, 0);
        assert!(r.ok());
        assert!(r.tallies.iter().all(|t| t.checked == 0 && t.failed == 0));
    }

    #[test]
    fn maximal_ideals_up_to_genus_six() {
        let r = run_suite(&SuiteConfig { max_genus: 6, ..Default::default() }).unwrap();
        assert_eq!(r.pairs, 49);
        assert!(r.ok(), "{:#?}", (&r.failures.first(), &r.errors.first()));
    }

    #[test]
    fn fixtures_only_runs_every_case() {
        let r = run_suite(&SuiteConfig { fixtures_only: true, ..Default::default() }).unwrap();
        assert_eq!(r.pairs, 12);
        assert!(r.ok(), "{:#?}", (&r.failures.first(), &r.errors.first()));
    }

    #[test]
    fn sampling_is_seeded() {
        let cfg = SuiteConfig {
            max_genus: 4,
            ideal_strategy: IdealStrategy::RandomSample { seed: 7, count: 3 },
            ..Default::default()
        };
        let a = run_suite(&cfg).unwrap();
        let b = run_suite(&SuiteConfig { parallelism: Parallelism::Sequential, ..cfg }).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
