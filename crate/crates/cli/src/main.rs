//! `tug` — exact computations on transferable-utility games: solution
//! payoffs, dividends, player classification, axiom checking with
//! counterexample search, family fitting, and the witness regression
//! suite.
//!
//! Exit codes: 0 pass/success, 1 counterexample / not-in-family /
//! regression failure, 2 usage error, 3 inconclusive (search budget
//! exhausted).

mod gamefile;
mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use tug_core::axioms::{
    AxiomId, SearchStrategy, Verdict, instance_holds, search_counterexample,
};
use tug_core::basis::{Basis, to_coefficients};
use tug_core::characterize::{FitResult, MembershipVerdict, fit_alpha, verify_family_membership};
use tug_core::coalition::PlayerId;
use tug_core::corpus;
use tug_core::rational::{Rat, format_rat, parse_rat};
use tug_core::solutions::{SolutionSpec, evaluate};

use gamefile::{doc_from_game, load_game};
use report::{
    CheckReport, ClassifyReport, CoefficientEntry, ComputeReport, CorpusReport, DividendsReport,
    FitDoc, FitReport, Format, InstanceDoc, MembershipDoc, ModeDoc, SCHEMA_VERSION, SolutionDoc,
    VerdictDoc, emit_json, render_verdict_plain,
};

const EXIT_OK: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;

/// A user-facing failure; always maps to exit code 2.
#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { message: message.into() }
    }
}

impl From<tug_core::Error> for CliError {
    fn from(e: tug_core::Error) -> CliError {
        CliError::usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "tug",
    version,
    about = "Exact solution concepts and axiom checking for TU-games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a solution on a game and print the exact payoff vector.
    Compute {
        /// Path to a game file (JSON; see the README for the format).
        #[arg(long)]
        game: PathBuf,
        /// Solution id: shapley, equal_division, egalitarian,
        /// equal_surplus_division, phi1, phi2, zero, asym_first_player,
        /// max_v1, vi_plus_a.
        #[arg(long)]
        solution: String,
        /// Family parameter for --solution egalitarian (rational, e.g. 1/2).
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Shift parameter for --solution vi_plus_a (rational, default 1).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print the coordinates of a game in the unanimity or canonical basis.
    Dividends {
        #[arg(long)]
        game: PathBuf,
        /// Basis: unanimity (Harsanyi dividends) or canonical.
        #[arg(long, default_value = "unanimity")]
        basis: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print the null players, nullifying players, and symmetric pairs.
    Classify {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Search for a counterexample to an axiom under a solution.
    Check {
        #[arg(long)]
        solution: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Axiom id (e.g. null_player_neutrality); see the README for the list.
        #[arg(long)]
        axiom: String,
        /// Search mode: exhaustive, random, or witnesses.
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Comma-separated rational grid for exhaustive mode (default -1,0,1,2).
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Player count (default 3).
        #[arg(long)]
        n: Option<usize>,
        /// Trial count for random mode (default 1000).
        #[arg(long)]
        trials: Option<u64>,
        /// Seed for random mode (default 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Optional instance cap for exhaustive mode; hitting it reports an
        /// inconclusive verdict (exit 3).
        #[arg(long)]
        max_instances: Option<u64>,
        /// Restrict witnesses mode to these bundle ids (repeatable).
        #[arg(long = "witness")]
        witnesses: Vec<String>,
        /// Re-check the counterexample instance stored in a previous
        /// check report (JSON) instead of searching.
        #[arg(long)]
        replay: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Fit the family parameter from unanimity games and optionally probe
    /// membership on random games.
    Fit {
        #[arg(long)]
        solution: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        n: usize,
        /// Number of random membership trials (enables the membership probe).
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Replay the embedded witness regression suite or export its games.
    Corpus {
        /// Check every fact of every witness bundle.
        #[arg(long)]
        run_all: bool,
        /// Write the witness games as game files into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

fn parse_solution(
    id: &str,
    alpha: Option<&str>,
    a: Option<&str>,
) -> Result<SolutionSpec, CliError> {
    let parse = |s: &str| parse_rat(s).map_err(CliError::from);
    let reject_alpha = |spec: SolutionSpec| {
        if alpha.is_some() {
            return Err(CliError::usage("--alpha only applies to --solution egalitarian"));
        }
        if a.is_some() {
            return Err(CliError::usage("--a only applies to --solution vi_plus_a"));
        }
        Ok(spec)
    };
    match id {
        "shapley" => reject_alpha(SolutionSpec::Shapley),
        "equal_division" => reject_alpha(SolutionSpec::EqualDivision),
        "egalitarian" => {
            if a.is_some() {
                return Err(CliError::usage("--a only applies to --solution vi_plus_a"));
            }
            let alpha = alpha
                .ok_or_else(|| CliError::usage("--solution egalitarian requires --alpha P/Q"))?;
            Ok(SolutionSpec::egalitarian(parse(alpha)?))
        }
        "equal_surplus_division" => reject_alpha(SolutionSpec::EqualSurplusDivision),
        "phi1" => reject_alpha(SolutionSpec::Phi1),
        "phi2" => reject_alpha(SolutionSpec::Phi2),
        "zero" => reject_alpha(SolutionSpec::Zero),
        "asym_first_player" => reject_alpha(SolutionSpec::AsymFirstPlayer),
        "max_v1" => reject_alpha(SolutionSpec::MaxV1),
        "vi_plus_a" => {
            if alpha.is_some() {
                return Err(CliError::usage("--alpha only applies to --solution egalitarian"));
            }
            let a = match a {
                Some(text) => parse(text)?,
                None => tug_core::rational::rint(1),
            };
            SolutionSpec::vi_plus_a(a).map_err(CliError::from)
        }
        other => Err(CliError::usage(format!("unknown solution id {other:?}"))),
    }
}

fn parse_axiom(id: &str) -> Result<AxiomId, CliError> {
    AxiomId::ALL
        .into_iter()
        .find(|axiom| axiom.id() == id)
        .ok_or_else(|| CliError::usage(format!("unknown axiom id {id:?}")))
}

fn parse_grid(text: &str) -> Result<Vec<Rat>, CliError> {
    text.split(',')
        .map(|piece| parse_rat(piece.trim()).map_err(CliError::from))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn build_strategy(
    mode: &str,
    grid: Option<&str>,
    n: Option<usize>,
    trials: Option<u64>,
    seed: Option<u64>,
    max_instances: Option<u64>,
    witnesses: &[String],
) -> Result<SearchStrategy, CliError> {
    let reject = |flag: &str, ok: bool| {
        if ok { Ok(()) } else { Err(CliError::usage(format!("{flag} does not apply to --mode {mode}"))) }
    };
    match mode {
        "exhaustive" => {
            reject("--trials", trials.is_none())?;
            reject("--seed", seed.is_none())?;
            reject("--witness", witnesses.is_empty())?;
            let grid = match grid {
                Some(text) => parse_grid(text)?,
                None => vec![
                    tug_core::rational::rint(-1),
                    tug_core::rational::rint(0),
                    tug_core::rational::rint(1),
                    tug_core::rational::rint(2),
                ],
            };
            Ok(SearchStrategy::Exhaustive { grid, n: n.unwrap_or(3), max_instances })
        }
        "random" => {
            reject("--grid", grid.is_none())?;
            reject("--max-instances", max_instances.is_none())?;
            reject("--witness", witnesses.is_empty())?;
            Ok(SearchStrategy::Random {
                n: n.unwrap_or(3),
                trials: trials.unwrap_or(1000),
                seed: seed.unwrap_or(0),
            })
        }
        "witnesses" => {
            reject("--grid", grid.is_none())?;
            reject("--n", n.is_none())?;
            reject("--trials", trials.is_none())?;
            reject("--seed", seed.is_none())?;
            reject("--max-instances", max_instances.is_none())?;
            Ok(SearchStrategy::Witnesses { ids: witnesses.to_vec() })
        }
        other => Err(CliError::usage(format!("unknown mode {other:?}"))),
    }
}

fn run_compute(
    game: &Path,
    solution: &str,
    alpha: Option<&str>,
    a: Option<&str>,
    format: Format,
) -> Result<i32, CliError> {
    let spec = parse_solution(solution, alpha, a)?;
    let game = load_game(game)?;
    let payoffs = evaluate(&spec, &game)?;
    match format {
        Format::Plain => println!("{payoffs}"),
        Format::Json => emit_json(&ComputeReport {
            schema_version: SCHEMA_VERSION,
            command: "compute".into(),
            solution: SolutionDoc::from_spec(&spec),
            n: game.n(),
            payoffs: payoffs.iter().map(format_rat).collect(),
        }),
    }
    Ok(EXIT_OK)
}

fn run_dividends(game: &Path, basis: &str, format: Format) -> Result<i32, CliError> {
    let basis = match basis {
        "unanimity" => Basis::Unanimity,
        "canonical" => Basis::Canonical,
        other => return Err(CliError::usage(format!("unknown basis {other:?}"))),
    };
    let game = load_game(game)?;
    let coeffs = to_coefficients(&game, basis);
    match format {
        Format::Plain => {
            println!("basis: {basis}");
            for (t, value) in coeffs.nonzero_entries() {
                println!("{t}: {value}");
            }
        }
        Format::Json => emit_json(&DividendsReport {
            schema_version: SCHEMA_VERSION,
            command: "dividends".into(),
            basis: basis.to_string(),
            n: game.n(),
            coefficients: coeffs
                .nonzero_entries()
                .map(|(t, value)| CoefficientEntry {
                    coalition: t.members().map(PlayerId::index).collect(),
                    value: format_rat(value),
                })
                .collect(),
        }),
    }
    Ok(EXIT_OK)
}

fn run_classify(game: &Path, format: Format) -> Result<i32, CliError> {
    let game = load_game(game)?;
    let nulls: Vec<usize> = game.null_players().into_iter().map(PlayerId::index).collect();
    let nullifying: Vec<usize> =
        game.nullifying_players().into_iter().map(PlayerId::index).collect();
    let pairs: Vec<[usize; 2]> =
        game.symmetric_pairs().into_iter().map(|(i, j)| [i.index(), j.index()]).collect();
    match format {
        Format::Plain => {
            let list = |xs: &[usize]| {
                if xs.is_empty() {
                    "(none)".to_string()
                } else {
                    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
                }
            };
            println!("null players: {}", list(&nulls));
            println!("nullifying players: {}", list(&nullifying));
            let pair_list = if pairs.is_empty() {
                "(none)".to_string()
            } else {
                pairs.iter().map(|[i, j]| format!("({i},{j})")).collect::<Vec<_>>().join(", ")
            };
            println!("symmetric pairs: {pair_list}");
        }
        Format::Json => emit_json(&ClassifyReport {
            schema_version: SCHEMA_VERSION,
            command: "classify".into(),
            n: game.n(),
            null_players: nulls,
            nullifying_players: nullifying,
            symmetric_pairs: pairs,
        }),
    }
    Ok(EXIT_OK)
}

fn run_replay(
    path: &Path,
    axiom: AxiomId,
    spec: &SolutionSpec,
    format: Format,
) -> Result<i32, CliError> {
    let contents = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    // Accept either a full check report or a bare instance document.
    let instance_doc = if let Ok(report) = serde_json::from_str::<CheckReport>(&contents) {
        match report.verdict {
            VerdictDoc::Counterexample { instance, .. } => instance,
            _ => {
                return Err(CliError::usage(
                    "replay file holds no counterexample instance",
                ));
            }
        }
    } else {
        serde_json::from_str::<InstanceDoc>(&contents)
            .map_err(|e| CliError::usage(format!("malformed replay file: {e}")))?
    };
    let instance = instance_doc.to_instance()?;
    let holds = instance_holds(axiom, spec, &instance)?;
    match format {
        Format::Plain => println!(
            "replay: instance {} {axiom} under {spec}",
            if holds { "satisfies" } else { "violates" }
        ),
        Format::Json => emit_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": "replay",
            "axiom": axiom.id(),
            "solution": SolutionDoc::from_spec(spec),
            "holds": holds,
        })),
    }
    Ok(if holds { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    solution: &str,
    alpha: Option<&str>,
    a: Option<&str>,
    axiom: &str,
    mode: &str,
    grid: Option<&str>,
    n: Option<usize>,
    trials: Option<u64>,
    seed: Option<u64>,
    max_instances: Option<u64>,
    witnesses: &[String],
    replay: Option<&Path>,
    format: Format,
) -> Result<i32, CliError> {
    let spec = parse_solution(solution, alpha, a)?;
    let axiom = parse_axiom(axiom)?;

    if let Some(path) = replay {
        return run_replay(path, axiom, &spec, format);
    }

    let strategy = build_strategy(mode, grid, n, trials, seed, max_instances, witnesses)?;
    let verdict = search_counterexample(axiom, &spec, &strategy)?;
    match format {
        Format::Plain => {
            println!("axiom: {axiom}");
            println!("solution: {spec}");
            println!("mode: {strategy}");
            println!("{}", render_verdict_plain(&verdict));
        }
        Format::Json => emit_json(&CheckReport {
            schema_version: SCHEMA_VERSION,
            command: "check".into(),
            axiom: axiom.id().to_string(),
            solution: SolutionDoc::from_spec(&spec),
            mode: ModeDoc::from_strategy(&strategy),
            verdict: VerdictDoc::from_verdict(&verdict),
        }),
    }
    Ok(match verdict {
        Verdict::Passed { .. } => EXIT_OK,
        Verdict::Counterexample { .. } => EXIT_COUNTEREXAMPLE,
        Verdict::BudgetExhausted { .. } => EXIT_INCONCLUSIVE,
    })
}

fn run_fit(
    solution: &str,
    alpha: Option<&str>,
    a: Option<&str>,
    n: usize,
    trials: Option<u64>,
    seed: Option<u64>,
    format: Format,
) -> Result<i32, CliError> {
    if trials.is_none() && seed.is_some() {
        return Err(CliError::usage("--seed requires --trials"));
    }
    let spec = parse_solution(solution, alpha, a)?;
    let fit = fit_alpha(&spec, n)?;
    let membership = match trials {
        Some(trials) => {
            Some(verify_family_membership(&spec, n, trials, seed.unwrap_or(0))?)
        }
        None => None,
    };

    match format {
        Format::Plain => {
            println!("solution: {spec}");
            println!("fit: {fit}");
            if let Some(verdict) = &membership {
                println!("membership: {verdict}");
            }
        }
        Format::Json => emit_json(&FitReport {
            schema_version: SCHEMA_VERSION,
            command: "fit".into(),
            solution: SolutionDoc::from_spec(&spec),
            n,
            fit: FitDoc::from_fit(&fit),
            membership: membership.as_ref().map(MembershipDoc::from_verdict),
        }),
    }

    let ok = !matches!(
        (&membership, &fit),
        (Some(MembershipVerdict::NotInFamily { .. }), _)
            | (None, FitResult::Inconsistent { .. })
    );
    Ok(if ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn run_corpus(run_all: bool, export: Option<&Path>, format: Format) -> Result<i32, CliError> {
    if !run_all && export.is_none() {
        return Err(CliError::usage("corpus requires --run-all and/or --export DIR"));
    }
    if let Some(dir) = export {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::usage(format!("cannot create {}: {e}", dir.display())))?;
        for bundle in corpus::all_witnesses() {
            for (name, game) in &bundle.games {
                let path = dir.join(format!("{}_{name}.json", bundle.id));
                let doc = doc_from_game(game);
                let text = serde_json::to_string_pretty(&doc).expect("game doc serializes");
                std::fs::write(&path, text)
                    .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
                if format == Format::Plain {
                    println!("wrote {}", path.display());
                }
            }
        }
    }
    if !run_all {
        return Ok(EXIT_OK);
    }
    let report = corpus::run_all_witnesses();
    match format {
        Format::Plain => {
            print!("{report}");
            println!(
                "summary: {} facts, {}",
                report.fact_count(),
                if report.all_passed() { "all passed" } else { "FAILURES PRESENT" }
            );
        }
        Format::Json => emit_json(&CorpusReport::from_regression(&report)),
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Compute { game, solution, alpha, a, format } => {
            run_compute(&game, &solution, alpha.as_deref(), a.as_deref(), format)
        }
        Command::Dividends { game, basis, format } => run_dividends(&game, &basis, format),
        Command::Classify { game, format } => run_classify(&game, format),
        Command::Check {
            solution,
            alpha,
            a,
            axiom,
            mode,
            grid,
            n,
            trials,
            seed,
            max_instances,
            witnesses,
            replay,
            format,
        } => run_check(
            &solution,
            alpha.as_deref(),
            a.as_deref(),
            &axiom,
            &mode,
            grid.as_deref(),
            n,
            trials,
            seed,
            max_instances,
            &witnesses,
            replay.as_deref(),
            format,
        ),
        Command::Fit { solution, alpha, a, n, trials, seed, format } => {
            run_fit(&solution, alpha.as_deref(), a.as_deref(), n, trials, seed, format)
        }
        Command::Corpus { run_all, export, format } => {
            run_corpus(run_all, export.as_deref(), format)
        }
    }
}

fn main() {
    // Die quietly when the read end of a pipe goes away (e.g. `tug ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(EXIT_USAGE);
        }
    }
}
