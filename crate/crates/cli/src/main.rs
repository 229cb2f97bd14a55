//! Batch analyzer for two-generator group gradings of k⟨u,v⟩/(u²−v²).
//!
//! Input files hold a presentation in the grammar
//! `stmt (';' stmt)*` with `stmt := word '=' word | word '=' '1'`,
//! words over a, b and their inverses A, B, powers with `^`, parentheses
//! allowed, whitespace ignored.
//!
//! Exit codes: 0 success, 1 validation error, 2 parse error, 3 resource
//! limit. All errors are printed with the prefix `error:`.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use mckay_quiver::dims::lambda_mod_e1;
use mckay_quiver::invariants::{hilbert_basis, invariant_report};
use mckay_quiver::{
    auslander_check, build_mckay_quiver, enumerate_group, parse_presentation, quiver,
    toroidal_grid, validate_generators, CoactionPair, EnumerationError, PairError,
    DEFAULT_MAX_COSETS,
};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "mckay",
    version,
    about = "McKay-quiver analysis of two-generator group gradings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: order, m, Auslander decision, invariant ring data
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Highest Hilbert-series degree to report
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        /// Coefficient bound for the relation search (default: adaptive)
        #[arg(long)]
        relation_bound: Option<usize>,
        /// Include the toroidal grid in the report
        #[arg(long)]
        grid: bool,
        /// Include the DOT export in the report
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether the Auslander map is an isomorphism
    Auslander {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Minimal generators, relations, Hilbert series, regularity
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long)]
        relation_bound: Option<usize>,
    },
    /// Export the McKay quiver (dot) or its toroidal labeling (grid, json)
    Quiver {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: QuiverFormat,
        /// Repeat the first row and column at the far side of the grid
        #[arg(long)]
        closed: bool,
        /// Remap element names: one "name label" pair per line, '#' comments
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Hilbert series coefficients of the invariant ring
    Series {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Analyze one presentation per line; CSV summary on stdout
    Survey {
        listfile: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Dump the enumerated group (tables and names) as JSON
    Group {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Grid,
    Json,
}

enum AppError {
    Parse(String),
    Validation(String),
    Limit(String),
    Other(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Parse(_) => 2,
            AppError::Validation(_) => 1,
            AppError::Limit(_) => 3,
            AppError::Other(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Parse(m)
            | AppError::Validation(m)
            | AppError::Limit(m)
            | AppError::Other(m) => m,
        }
    }
}

impl From<PairError> for AppError {
    fn from(e: PairError) -> AppError {
        AppError::Validation(e.to_string())
    }
}

impl From<EnumerationError> for AppError {
    fn from(e: EnumerationError) -> AppError {
        match e {
            EnumerationError::CosetLimitExceeded { .. } => AppError::Limit(e.to_string()),
            EnumerationError::InconsistentTable => AppError::Other(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Other(format!("cannot read {}: {e}", path.display())))
}

/// One-line echo of a presentation: whitespace collapsed to single spaces.
fn echo(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn pair_from_text(text: &str, max_cosets: usize) -> Result<CoactionPair, AppError> {
    let presentation = parse_presentation(text).map_err(|e| AppError::Parse(e.to_string()))?;
    let group = enumerate_group(&presentation, max_cosets)?;
    Ok(validate_generators(group)?)
}

fn load_pair(path: &Path, max_cosets: usize) -> Result<(CoactionPair, String), AppError> {
    let text = read_to_string(path)?;
    let pair = pair_from_text(&text, max_cosets)?;
    Ok((pair, echo(&text)))
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Analyze {
            file,
            json,
            max_cosets,
            max_degree,
            relation_bound,
            grid,
            dot,
        } => {
            let started = Instant::now();
            let (pair, source) = load_pair(&file, max_cosets)?;
            let auslander = auslander_check(&pair).map_err(|e| AppError::Other(e.to_string()))?;
            let lambda = lambda_mod_e1(&pair);
            let invariants = invariant_report(&pair, max_degree, relation_bound)
                .map_err(|e| AppError::Other(e.to_string()))?;
            let names = quiver::display_names(&pair);
            let grid_text = grid.then(|| quiver::export_grid(&toroidal_grid(&pair), &names, false));
            let dot_text = dot.then(|| quiver::export_dot(&build_mckay_quiver(&pair), &names));
            if json {
                let value = json!({
                    "presentation": source,
                    "order": pair.group().order(),
                    "m": pair.m(),
                    "valid": true,
                    "auslander": report::auslander_json(&auslander),
                    "lambda_mod_e1": report::dimension_json(&lambda),
                    "invariants": report::invariants_json(&invariants),
                    "grid": grid_text,
                    "dot": dot_text,
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print!(
                    "presentation: {source}\n{}{}\nlambda mod e1: {}\n{}",
                    report::pair_summary_text(&pair),
                    report::auslander_text(&auslander),
                    report::dimension_text(&lambda),
                    report::invariants_text(&invariants),
                );
                if let Some(text) = &grid_text {
                    print!("grid:\n{text}");
                }
                if let Some(text) = &dot_text {
                    print!("dot:\n{text}");
                }
            }
            eprintln!("time: {}ms", started.elapsed().as_millis());
            Ok(())
        }
        Command::Auslander {
            file,
            json,
            max_cosets,
        } => {
            let (pair, _) = load_pair(&file, max_cosets)?;
            let result = auslander_check(&pair).map_err(|e| AppError::Other(e.to_string()))?;
            if json {
                let value = json!({
                    "order": pair.group().order(),
                    "m": pair.m(),
                    "auslander": report::auslander_json(&result),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!("{}", report::auslander_text(&result));
            }
            Ok(())
        }
        Command::Invariants {
            file,
            json,
            max_cosets,
            max_degree,
            relation_bound,
        } => {
            let (pair, _) = load_pair(&file, max_cosets)?;
            let invariants = invariant_report(&pair, max_degree, relation_bound)
                .map_err(|e| AppError::Other(e.to_string()))?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report::invariants_json(&invariants)).unwrap()
                );
            } else {
                print!("{}", report::invariants_text(&invariants));
            }
            Ok(())
        }
        Command::Quiver {
            file,
            format,
            closed,
            labels,
            max_cosets,
        } => {
            let (pair, _) = load_pair(&file, max_cosets)?;
            let names = match labels {
                Some(map_path) => remapped_names(&pair, &map_path)?,
                None => quiver::display_names(&pair),
            };
            match format {
                QuiverFormat::Dot => {
                    let q = build_mckay_quiver(&pair);
                    print!("{}", quiver::export_dot(&q, &names));
                }
                QuiverFormat::Grid => {
                    let t = toroidal_grid(&pair);
                    print!("{}", quiver::export_grid(&t, &names, closed));
                }
                QuiverFormat::Json => {
                    let t = toroidal_grid(&pair);
                    let value = quiver::export_torus_json(&t, &names, closed);
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(())
        }
        Command::Series {
            file,
            max_degree,
            json,
            max_cosets,
        } => {
            let (pair, _) = load_pair(&file, max_cosets)?;
            let series = mckay_quiver::hilbert_series(&pair, max_degree);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "series": series })).unwrap()
                );
            } else {
                let line = series
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("{line}");
            }
            Ok(())
        }
        Command::Survey {
            listfile,
            jobs,
            json,
            max_cosets,
        } => survey(&listfile, jobs, json, max_cosets),
        Command::Group { file, max_cosets } => {
            let text = read_to_string(&file)?;
            let presentation =
                parse_presentation(&text).map_err(|e| AppError::Parse(e.to_string()))?;
            let group = enumerate_group(&presentation, max_cosets)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&group.dump_json()).unwrap()
            );
            Ok(())
        }
    }
}

fn remapped_names(pair: &CoactionPair, map_path: &Path) -> Result<Vec<String>, AppError> {
    let text = read_to_string(map_path)?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (name, label) = match (fields.next(), fields.next(), fields.next()) {
            (Some(n), Some(l), None) => (n, l),
            _ => {
                return Err(AppError::Other(format!(
                    "label map {}:{}: expected exactly two fields",
                    map_path.display(),
                    lineno + 1
                )))
            }
        };
        map.insert(name.to_string(), label.to_string());
    }
    let mut names = quiver::display_names(pair);
    let known: Vec<String> = names.clone();
    for (name, label) in &map {
        match known.iter().position(|n| n == name) {
            Some(idx) => names[idx] = label.clone(),
            None => {
                return Err(AppError::Other(format!(
                    "label map {}: unknown element name '{name}'",
                    map_path.display()
                )))
            }
        }
    }
    Ok(names)
}

struct SurveyRow {
    presentation: String,
    order: usize,
    m: usize,
    auslander_iso: bool,
    regular: bool,
    degrees: Vec<usize>,
}

fn survey_line(text: &str, max_cosets: usize) -> Result<SurveyRow, AppError> {
    let pair = pair_from_text(text, max_cosets)?;
    let auslander = auslander_check(&pair).map_err(|e| AppError::Other(e.to_string()))?;
    let regularity =
        mckay_quiver::regularity_check(&pair).map_err(|e| AppError::Other(e.to_string()))?;
    let mut degrees: Vec<usize> = hilbert_basis(&pair).iter().map(|b| b.degree).collect();
    degrees.sort_unstable();
    Ok(SurveyRow {
        presentation: echo(text),
        order: pair.group().order(),
        m: pair.m(),
        auslander_iso: auslander.is_isomorphism,
        regular: regularity.is_regular,
        degrees,
    })
}

fn survey(listfile: &Path, jobs: usize, json: bool, max_cosets: usize) -> Result<(), AppError> {
    let text = read_to_string(listfile)?;
    let lines: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let jobs = jobs.max(1);

    let mut results: Vec<Option<Result<SurveyRow, AppError>>> = Vec::new();
    results.resize_with(lines.len(), || None);
    std::thread::scope(|scope| {
        let mut chunks: Vec<&mut [Option<Result<SurveyRow, AppError>>]> = Vec::new();
        let mut rest = results.as_mut_slice();
        let per = lines.len().div_ceil(jobs);
        while !rest.is_empty() {
            let take = per.min(rest.len());
            let (head, tail) = rest.split_at_mut(take);
            chunks.push(head);
            rest = tail;
        }
        for (chunk_idx, chunk) in chunks.into_iter().enumerate() {
            let lines = &lines;
            scope.spawn(move || {
                for (offset, slot) in chunk.iter_mut().enumerate() {
                    let (_, line) = &lines[chunk_idx * per + offset];
                    *slot = Some(survey_line(line, max_cosets));
                }
            });
        }
    });

    // report the first failure in input order
    let mut rows = Vec::with_capacity(lines.len());
    for ((lineno, _), result) in lines.iter().zip(results) {
        match result.expect("all slots filled") {
            Ok(row) => rows.push(row),
            Err(err) => {
                return Err(match err {
                    AppError::Parse(m) => AppError::Parse(format!("line {lineno}: {m}")),
                    AppError::Validation(m) => AppError::Validation(format!("line {lineno}: {m}")),
                    AppError::Limit(m) => AppError::Limit(format!("line {lineno}: {m}")),
                    AppError::Other(m) => AppError::Other(format!("line {lineno}: {m}")),
                })
            }
        }
    }

    if json {
        let values: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "presentation": r.presentation,
                    "order": r.order,
                    "m": r.m,
                    "auslander_iso": r.auslander_iso,
                    "invariant_regular": r.regular,
                    "basis_degrees": r.degrees,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&Value::Array(values)).unwrap()
        );
    } else {
        println!("presentation,order,m,auslander_iso,invariant_regular,basis_degrees");
        for r in rows {
            let degrees = r
                .degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(";");
            println!(
                "{},{},{},{},{},{}",
                r.presentation, r.order, r.m, r.auslander_iso, r.regular, degrees
            );
        }
    }
    Ok(())
}
