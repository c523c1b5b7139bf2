//! Report documents: a schema-versioned JSON form and a plain text form
//! for every verb. Rationals serialize as strings (`"5/3"`), never as
//! floats, so values cross the process boundary exactly.

use serde::{Deserialize, Serialize};

use tug_core::axioms::{AxiomInstance, SearchStrategy, Value, Verdict};
use tug_core::characterize::{FitResult, MembershipVerdict};
use tug_core::coalition::{Permutation, PlayerId};
use tug_core::corpus::RegressionReport;
use tug_core::game::PayoffVector;
use tug_core::rational::{format_rat, parse_rat};
use tug_core::solutions::SolutionSpec;

use crate::CliError;
use crate::gamefile::{GameDoc, doc_from_game, game_from_doc};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
}

impl SolutionDoc {
    pub fn from_spec(spec: &SolutionSpec) -> SolutionDoc {
        let (alpha, a) = match spec {
            SolutionSpec::Egalitarian { alpha } => (Some(format_rat(alpha)), None),
            SolutionSpec::ViPlusA { a } => (None, Some(format_rat(a))),
            _ => (None, None),
        };
        SolutionDoc { id: spec.id().to_string(), alpha, a }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub games: Vec<GameDoc>,
    pub players: Vec<usize>,
    pub scalars: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
}

impl InstanceDoc {
    pub fn from_instance(instance: &AxiomInstance) -> InstanceDoc {
        InstanceDoc {
            games: instance.games.iter().map(doc_from_game).collect(),
            players: instance.players.iter().map(|p| p.index()).collect(),
            scalars: instance.scalars.iter().map(format_rat).collect(),
            permutation: instance.permutation.as_ref().map(Permutation::to_one_based),
        }
    }

    pub fn to_instance(&self) -> Result<AxiomInstance, CliError> {
        let games = self
            .games
            .iter()
            .map(game_from_doc)
            .collect::<Result<Vec<_>, _>>()?;
        let players = self
            .players
            .iter()
            .map(|&i| PlayerId::new(i).map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let scalars = self
            .scalars
            .iter()
            .map(|s| parse_rat(s).map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut instance = AxiomInstance::new(games, players, scalars);
        if let Some(image) = &self.permutation {
            instance.permutation = Some(
                Permutation::from_one_based(image.clone())
                    .map_err(|e| CliError::usage(e.to_string()))?,
            );
        }
        Ok(instance)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValueDoc {
    Scalar { value: String },
    Vector { values: Vec<String> },
}

impl ValueDoc {
    fn from_value(value: &Value) -> ValueDoc {
        match value {
            Value::Scalar(r) => ValueDoc::Scalar { value: format_rat(r) },
            Value::Vector(pv) => {
                ValueDoc::Vector { values: pv.iter().map(format_rat).collect() }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModeDoc {
    Exhaustive { grid: Vec<String>, n: usize, max_instances: Option<u64> },
    Random { n: usize, trials: u64, seed: u64 },
    Witnesses { ids: Vec<String> },
}

impl ModeDoc {
    pub fn from_strategy(strategy: &SearchStrategy) -> ModeDoc {
        match strategy {
            SearchStrategy::Exhaustive { grid, n, max_instances } => ModeDoc::Exhaustive {
                grid: grid.iter().map(format_rat).collect(),
                n: *n,
                max_instances: *max_instances,
            },
            SearchStrategy::Random { n, trials, seed } => {
                ModeDoc::Random { n: *n, trials: *trials, seed: *seed }
            }
            SearchStrategy::Witnesses { ids } => ModeDoc::Witnesses { ids: ids.clone() },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum VerdictDoc {
    Passed { instances_checked: u64 },
    Counterexample { instance: InstanceDoc, lhs: ValueDoc, rhs: ValueDoc },
    BudgetExhausted { instances_checked: u64 },
}

impl VerdictDoc {
    pub fn from_verdict(verdict: &Verdict) -> VerdictDoc {
        match verdict {
            Verdict::Passed { instances_checked } => {
                VerdictDoc::Passed { instances_checked: *instances_checked }
            }
            Verdict::Counterexample { instance, lhs, rhs } => VerdictDoc::Counterexample {
                instance: InstanceDoc::from_instance(instance),
                lhs: ValueDoc::from_value(lhs),
                rhs: ValueDoc::from_value(rhs),
            },
            Verdict::BudgetExhausted { instances_checked } => {
                VerdictDoc::BudgetExhausted { instances_checked: *instances_checked }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComputeReport {
    pub schema_version: u32,
    pub command: String,
    pub solution: SolutionDoc,
    pub n: usize,
    pub payoffs: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub coalition: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DividendsReport {
    pub schema_version: u32,
    pub command: String,
    pub basis: String,
    pub n: usize,
    pub coefficients: Vec<CoefficientEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub command: String,
    pub n: usize,
    pub null_players: Vec<usize>,
    pub nullifying_players: Vec<usize>,
    pub symmetric_pairs: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub command: String,
    pub axiom: String,
    pub solution: SolutionDoc,
    pub mode: ModeDoc,
    pub verdict: VerdictDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FitDoc {
    Consistent { alpha: String, eta: String },
    Inconsistent { coalition: Vec<usize>, player: usize, expected: String, actual: String },
}

impl FitDoc {
    pub fn from_fit(fit: &FitResult) -> FitDoc {
        match fit {
            FitResult::ConsistentFit { alpha, eta } => {
                FitDoc::Consistent { alpha: format_rat(alpha), eta: format_rat(eta) }
            }
            FitResult::Inconsistent { witness } => FitDoc::Inconsistent {
                coalition: witness.coalition.members().map(PlayerId::index).collect(),
                player: witness.player.index(),
                expected: format_rat(&witness.expected),
                actual: format_rat(&witness.actual),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MembershipDoc {
    InFamily { alpha: String, trials: u64 },
    NotInFamily { witness: GameDoc, expected: Vec<String>, actual: Vec<String> },
}

impl MembershipDoc {
    pub fn from_verdict(verdict: &MembershipVerdict) -> MembershipDoc {
        let vector = |pv: &PayoffVector| pv.iter().map(format_rat).collect();
        match verdict {
            MembershipVerdict::InFamily { alpha, trials } => {
                MembershipDoc::InFamily { alpha: format_rat(alpha), trials: *trials }
            }
            MembershipVerdict::NotInFamily { witness, expected, actual } => {
                MembershipDoc::NotInFamily {
                    witness: doc_from_game(witness),
                    expected: vector(expected),
                    actual: vector(actual),
                }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FitReport {
    pub schema_version: u32,
    pub command: String,
    pub solution: SolutionDoc,
    pub n: usize,
    pub fit: FitDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub membership: Option<MembershipDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactDoc {
    pub description: String,
    pub note: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BundleDoc {
    pub id: String,
    pub description: String,
    pub facts: Vec<FactDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusReport {
    pub schema_version: u32,
    pub command: String,
    pub bundles: Vec<BundleDoc>,
    pub all_passed: bool,
}

impl CorpusReport {
    pub fn from_regression(report: &RegressionReport) -> CorpusReport {
        CorpusReport {
            schema_version: SCHEMA_VERSION,
            command: "corpus".into(),
            bundles: report
                .bundles
                .iter()
                .map(|b| BundleDoc {
                    id: b.id.to_string(),
                    description: b.description.to_string(),
                    facts: b
                        .facts
                        .iter()
                        .map(|f| FactDoc {
                            description: f.description.clone(),
                            note: f.note.to_string(),
                            passed: f.passed,
                        })
                        .collect(),
                })
                .collect(),
            all_passed: report.all_passed(),
        }
    }
}

pub fn emit_json<T: Serialize>(report: &T) {
    println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
}

// Plain renderers.

pub fn render_instance_plain(instance: &AxiomInstance) -> String {
    format!("{instance}")
}

pub fn render_verdict_plain(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Passed { instances_checked } => {
            format!("verdict: PASSED ({instances_checked} instances checked)")
        }
        Verdict::Counterexample { instance, lhs, rhs } => format!(
            "verdict: COUNTEREXAMPLE\n  instance: {}\n  lhs = {lhs}\n  rhs = {rhs}",
            render_instance_plain(instance)
        ),
        Verdict::BudgetExhausted { instances_checked } => format!(
            "verdict: INCONCLUSIVE (budget exhausted after {instances_checked} instances)"
        ),
    }
}
