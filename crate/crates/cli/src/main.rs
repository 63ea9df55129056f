mod decimal;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use penney_core::oracle::simulate_streams;
use penney_core::{best_response, parse_pattern, solve, Error, GameSpec, SourceModel};

/// Exact odds for Penney's game between any number of players.
#[derive(Debug, Parser)]
#[command(name = "penney", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Winning probabilities, durations and generating-function series.
    Solve(SolveArgs),
    /// Monte Carlo estimate next to the exact answer.
    Simulate(SimulateArgs),
    /// Exhaustive search for the pattern that best beats a set of opponents.
    BestResponse(BestResponseArgs),
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Alphabet with exact probabilities, e.g. "H:1/3,T:2/3".
    #[arg(long, default_value = "H:1/2,T:1/2")]
    alphabet: String,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Fractional digits in decimal renderings (round half to even).
    #[arg(long, default_value_t = 6)]
    digits: usize,
    /// Emit the JSON document instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Comma-separated patterns, one per player.
    #[arg(long, value_delimiter = ',', required = true)]
    patterns: Vec<String>,
    /// Also print per-toss probabilities for n = 0..=N.
    #[arg(long, value_name = "N")]
    series: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    patterns: Vec<String>,
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent generator streams; the report is fixed by (seed, streams).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    streams: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct BestResponseArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Comma-separated opponent patterns.
    #[arg(long, value_delimiter = ',', required = true)]
    opponents: Vec<String>,
    /// Length of the candidate patterns.
    #[arg(long)]
    length: usize,
    /// Include the ranked table of all admissible candidates.
    #[arg(long)]
    verbose: bool,
    #[command(flatten)]
    output: OutputArgs,
}

fn emit<D: Serialize>(doc: &D, table: impl FnOnce(&D) -> String, output: &OutputArgs) {
    if output.json {
        println!("{}", serde_json::to_string_pretty(doc).expect("documents serialize"));
    } else {
        print!("{}", table(doc));
    }
}

fn game(model: &ModelArgs, patterns: &[String]) -> Result<GameSpec, Error> {
    let model: SourceModel = model.alphabet.parse()?;
    GameSpec::parse(model, patterns)
}

fn run_solve(args: &SolveArgs) -> Result<(), Error> {
    let spec = game(&args.model, &args.patterns)?;
    let sol = solve(&spec)?;
    let series = match args.series {
        Some(n) => Some((sol.distribution(n)?, sol.survival(n)?)),
        None => None,
    };
    let doc = report::solve_document(&spec, &sol, series, args.output.digits);
    emit(&doc, report::SolveDocument::table, &args.output);
    Ok(())
}

fn run_simulate(args: &SimulateArgs) -> Result<(), Error> {
    let spec = game(&args.model, &args.patterns)?;
    let exact = penney_core::winning_probabilities(&spec)?;
    let expected = penney_core::expected_duration(&spec)?;
    let rep = simulate_streams(&spec, args.trials, args.seed, args.streams)?;
    let doc = report::simulate_document(&spec, &exact, &expected, &rep, args.output.digits);
    emit(&doc, report::SimulateDocument::table, &args.output);
    Ok(())
}

fn run_best_response(args: &BestResponseArgs) -> Result<(), Error> {
    let model: SourceModel = args.model.alphabet.parse()?;
    let opponents = args
        .opponents
        .iter()
        .map(|t| parse_pattern(t.trim(), &model))
        .collect::<Result<Vec<_>, _>>()?;
    // surfaces duplicate/substring problems among the opponents themselves
    penney_core::validate_pattern_set(opponents.clone(), model.clone())?;
    let br = best_response(&opponents, args.length, &model)?;
    let names = opponents.iter().map(|p| p.display(&model).to_string()).collect();
    let doc = report::best_response_document(&model, names, args.length, &br, args.verbose, args.output.digits);
    emit(&doc, report::BestResponseDocument::table, &args.output);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Simulate(a) => run_simulate(a),
        Command::BestResponse(a) => run_best_response(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
