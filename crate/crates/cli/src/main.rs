//! `tropgame`: feasibility of max-plus systems, mean payoff game values and
//! tropical rank from matrix files.
//!
//! Exit status: 0 when the queried property holds, 1 when it does not, 2 on
//! usage, parse or shape errors.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use tropgame_core::convexity::{
    cone_nontrivial, cone_support, finite_solution, integer_witness, poly_nonempty, Certificate,
    FeasibilityReport,
};
use tropgame_core::games::{build_game, certify_strategy, solve_exact, Strategy};
use tropgame_core::io::{parse_matrix_scaled, parse_vector_scaled, Scalar};
use tropgame_core::linalg::{Matrix, RowLabel};
use tropgame_core::rank::{
    columns_independent, cramer_solve, is_tropically_nonsingular, max_dependence_witness, rank_at_least,
    tropical_rank, RANK_SUBSET_CAP,
};
use tropgame_core::{ExtMatrix, MinMaxOperator, Rational};

use report::Report;

#[derive(Parser)]
#[command(name = "tropgame", version, about = "Tropical convexity through mean payoff games")]
struct Cli {
    /// Print a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Multiply every entry by this integer before use; tokens may then be
    /// rationals `p/q` as long as the scaled value is an integer.
    #[arg(long, global = true, default_value_t = 1, value_parser = positive)]
    scale: i128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Is the cone {x : Ax <= Bx} non-trivial?
    Cone(ConeArgs),
    /// Is the polyhedron {x : max(Ax, c) <= max(Bx, d)} nonempty?
    Poly(PolyArgs),
    /// Values, winners and strategy certificates of the game of (A, B).
    Game(GameArgs),
    /// Tropical independence, rank, permanents and Cramer solving.
    Rank(RankArgs),
}

#[derive(Args)]
struct SystemFiles {
    #[arg(long)]
    lhs: PathBuf,
    #[arg(long)]
    rhs: PathBuf,
}

#[derive(Args)]
#[group(multiple = false)]
struct ConeMode {
    /// Report the support: coordinates finite in some solution.
    #[arg(long)]
    support: bool,
    /// Report a solution of maximal support.
    #[arg(long)]
    witness: bool,
    /// Ask for a solution with every coordinate finite.
    #[arg(long)]
    finite: bool,
    /// Ask for an integer solution of maximal support.
    #[arg(long)]
    integer: bool,
}

#[derive(Args)]
struct ConeArgs {
    #[command(flatten)]
    files: SystemFiles,
    #[command(flatten)]
    mode: ConeMode,
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    files: SystemFiles,
    #[arg(long)]
    c: PathBuf,
    #[arg(long)]
    d: PathBuf,
}

#[derive(Args)]
#[group(multiple = false)]
struct GameMode {
    /// Exact value of every initial state (default).
    #[arg(long)]
    value: bool,
    /// Initial states with nonnegative value.
    #[arg(long)]
    winners: bool,
    /// Values guaranteed by a positional strategy read from a file:
    /// `max s_1 .. s_m` or `min p_1 .. p_n`, 1-based.
    #[arg(long, value_name = "STRAT_FILE")]
    certify: Option<PathBuf>,
}

#[derive(Args)]
struct GameArgs {
    #[command(flatten)]
    files: SystemFiles,
    #[command(flatten)]
    mode: GameMode,
    /// Write the game graph in DOT format.
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
}

#[derive(Args)]
#[group(multiple = false)]
struct RankMode {
    /// Are the columns tropically independent? (default)
    #[arg(long)]
    independent: bool,
    /// Dependence witness of maximal support.
    #[arg(long)]
    max: bool,
    /// Is the tropical rank at least R?
    #[arg(long, value_name = "R")]
    at_least: Option<usize>,
    /// Exact tropical rank.
    #[arg(long)]
    exact: bool,
    /// Is the square matrix tropically singular?
    #[arg(long)]
    singular: bool,
    /// Solve Ax = b by Cramer's rule for the vector in RHS.
    #[arg(long, value_name = "RHS")]
    cramer: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[command(flatten)]
    mode: RankMode,
}

fn positive(s: &str) -> Result<i128, String> {
    match s.parse::<i128>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn matrix<T: Scalar>(path: &Path, scale: i128) -> anyhow::Result<Matrix<T>> {
    parse_matrix_scaled(&read(path)?, scale).with_context(|| path.display().to_string())
}

fn vector<T: Scalar>(path: &Path, scale: i128) -> anyhow::Result<Vec<T>> {
    parse_vector_scaled(&read(path)?, scale).with_context(|| path.display().to_string())
}

fn label(l: &RowLabel) -> String {
    match l {
        RowLabel::Original(i) => format!("r{}", i + 1),
        RowLabel::Trivial(j) => format!("t{}", j + 1),
        RowLabel::Pair(i, j) => format!("r{}.{}", i + 1, j + 1),
    }
}

fn feasibility(r: &FeasibilityReport, scale: i128, out: &mut Report) {
    out.scale(scale);
    out.verdict(if r.feasible { "feasible" } else { "infeasible" });
    out.indices("support", &r.support);
    if let Some(x) = &r.witness {
        out.tokens("witness", x);
    }
    match &r.certificate {
        Certificate::Witness => {}
        Certificate::Eliminated => {
            out.text("certificate", "eliminated".into());
        }
        Certificate::MinStrategy { moves, values } => {
            let m: Vec<String> = moves.iter().map(|(j, l)| format!("{}:{}", j + 1, label(l))).collect();
            let v: Vec<String> = values.iter().map(|(j, c)| format!("{}:{}", j + 1, c / Rational::from_integer(scale))).collect();
            out.text("min_strategy", m.join(" "));
            out.text("min_values", v.join(" "));
        }
    }
}

fn cmd_cone(args: &ConeArgs, scale: i128, out: &mut Report) -> anyhow::Result<bool> {
    let a = matrix(&args.files.lhs, scale)?;
    let b = matrix(&args.files.rhs, scale)?;
    let mode = &args.mode;
    if mode.finite || mode.integer {
        let x = if mode.finite { finite_solution(&a, &b)? } else { integer_witness(&a, &b)? };
        out.verdict(if x.is_some() { "feasible" } else { "infeasible" });
        out.scale(scale);
        if let Some(x) = &x {
            out.tokens("witness", x);
        }
        return Ok(x.is_some());
    }
    let r = if mode.support || mode.witness { cone_support(&a, &b)? } else { cone_nontrivial(&a, &b)? };
    feasibility(&r, scale, out);
    Ok(r.feasible)
}

fn cmd_poly(args: &PolyArgs, scale: i128, out: &mut Report) -> anyhow::Result<bool> {
    let a = matrix(&args.files.lhs, scale)?;
    let b = matrix(&args.files.rhs, scale)?;
    let c = vector(&args.c, scale)?;
    let d = vector(&args.d, scale)?;
    let r = poly_nonempty(&a, &b, &c, &d)?;
    feasibility(&r, scale, out);
    Ok(r.feasible)
}

fn read_strategy(path: &Path) -> anyhow::Result<Strategy> {
    let text = read(path)?;
    let mut tokens = text.split_whitespace();
    let kind = tokens.next().unwrap_or_default();
    let moves = tokens
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => bail!("{}: invalid move `{t}`", path.display()),
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    match kind {
        "max" => Ok(Strategy::Max(moves)),
        "min" => Ok(Strategy::Min(moves)),
        _ => bail!("{}: expected `max` or `min`, found `{kind}`", path.display()),
    }
}

fn unscale(x: &[Rational], scale: i128) -> Vec<Rational> {
    x.iter().map(|v| v / Rational::from_integer(scale)).collect()
}

fn cmd_game(args: &GameArgs, scale: i128, out: &mut Report) -> anyhow::Result<bool> {
    let op = MinMaxOperator::new(matrix(&args.files.lhs, scale)?, matrix(&args.files.rhs, scale)?)?;
    op.require_assumptions()?;
    if let Some(path) = &args.dot {
        std::fs::write(path, build_game(&op)?.to_dot())
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    out.scale(scale);
    if let Some(path) = &args.mode.certify {
        let s = read_strategy(path)?;
        let values = certify_strategy(&op, &s)?;
        out.verdict("certified");
        out.text("player", if matches!(s, Strategy::Max(_)) { "max" } else { "min" }.into());
        out.rationals("values", &unscale(&values, scale));
        return Ok(true);
    }
    let value = solve_exact(&op)?;
    if args.mode.winners {
        let winners: Vec<usize> = (0..op.n()).filter(|&j| value.winning()[j]).collect();
        out.indices("winners", &winners);
        return Ok(true);
    }
    out.rationals("chi", &unscale(&value.chi, scale));
    out.indices("max_strategy", &value.max_strategy);
    out.indices("min_strategy", &value.min_strategy);
    Ok(true)
}

fn cmd_rank(args: &RankArgs, scale: i128, out: &mut Report) -> anyhow::Result<bool> {
    let a = matrix(&args.matrix, scale)?;
    let mode = &args.mode;
    if mode.singular {
        let singular = tropical_singular(&a)?;
        out.verdict(if singular { "singular" } else { "nonsingular" });
        return Ok(singular);
    }
    if let Some(path) = &mode.cramer {
        let b = vector(path, scale)?;
        let x = cramer_solve(&a, &b)?;
        out.verdict(if x.is_some() { "solved" } else { "not solvable" });
        if let Some(x) = &x {
            out.tokens("solution", x);
        }
        return Ok(x.is_some());
    }
    if let Some(r) = mode.at_least {
        let holds = rank_at_least(&a, r)?;
        out.verdict(if holds { "yes" } else { "no" });
        return Ok(holds);
    }
    if mode.exact {
        out.number("rank", tropical_rank(&a, RANK_SUBSET_CAP)?);
        return Ok(true);
    }
    if mode.max {
        let x = max_dependence_witness(&a)?;
        out.verdict(if x.is_some() { "dependent" } else { "independent" });
        if let Some(x) = &x {
            out.tokens("witness", x);
        }
        return Ok(x.is_some());
    }
    let r = columns_independent(&a)?;
    out.verdict(if r.independent { "independent" } else { "dependent" });
    if let Some(x) = &r.witness {
        out.tokens("witness", x);
    }
    if let Some(rows) = &r.rows {
        out.indices("rows", rows);
    }
    Ok(r.independent)
}

/// Singularity of a square extended matrix: the permanent is not invertible.
fn tropical_singular(a: &ExtMatrix) -> anyhow::Result<bool> {
    if a.rows() != a.cols() {
        bail!("--singular needs a square matrix, got {}x{}", a.rows(), a.cols());
    }
    Ok(!is_tropically_nonsingular(a)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Report::new();
    let verdict = match &cli.command {
        Command::Cone(a) => cmd_cone(a, cli.scale, &mut out),
        Command::Poly(a) => cmd_poly(a, cli.scale, &mut out),
        Command::Game(a) => cmd_game(a, cli.scale, &mut out),
        Command::Rank(a) => cmd_rank(a, cli.scale, &mut out),
    };
    match verdict {
        Ok(holds) => {
            print!("{}", out.render(cli.json));
            ExitCode::from(if holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
