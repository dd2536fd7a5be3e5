//! Command-line front end. [`run`] does all the work and writes to any
//! `Write`, so the binary is a thin wrapper that maps [`Outcome`] to an exit
//! code.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::{
    separate, verify_closure_laws, BruteForce, ClosureOperator, ElementSet, ExtensionOrder, KakutaniVerdict,
    LawReport, LawWitness, SeparationOutcome, Side, DEFAULT_KAKUTANI_BOUND,
};
use crate::euclid::{read_points_csv, AlphaClosure};
use crate::experiments::{run_d1, run_d2, D1Config, D2Config};
use crate::graph::{
    k23_minor_free_bounded, pasch_check_bounded, GeodesicClosure, Graph, PaschOutcome, DEFAULT_MINOR_BOUND,
    DEFAULT_PASCH_BOUND,
};
use crate::lattice::{
    concept_lattice, is_distributive, lattice_separate, read_context_csv, ConceptLattice, CoverChoice,
    FiniteLattice, IdealFilterResult, LambdaClosure, DISTRIBUTIVITY_BOUND,
};

#[derive(Debug, Parser)]
#[command(name = "closure-sep", version, about = "Separation of closed sets in finite closure systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OrderArg {
    #[default]
    Asc,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CoverArg {
    #[default]
    Lowest,
    Random,
}

/// One input system. Exactly one of the files must be given.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SystemInput {
    /// Edge list: `n m` header, then `u v` per line (0-based vertices)
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Cover list: `n` header, then `child parent` per line
    #[arg(long)]
    pub lattice: Option<PathBuf>,
    /// Formal context CSV: header `object,attr...`, rows of 0/1
    #[arg(long)]
    pub context: Option<PathBuf>,
    /// Point CSV: first line the dimension, then one point per row
    #[arg(long)]
    pub points: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct LatticeInput {
    #[arg(long)]
    pub lattice: Option<PathBuf>,
    #[arg(long)]
    pub context: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal disjoint geodesically convex sets containing A and B
    SeparateGraph {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertex ids
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t)]
        order: OrderArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Maximal ideal/filter separation in a lattice.
    ///
    /// With --lattice, A and B list element ids. With --context, `;` separates
    /// concepts and `,` separates the objects generating one concept.
    SeparateLattice {
        #[command(flatten)]
        input: LatticeInput,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t)]
        cover: CoverArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Pasch axiom check with a violating quintuple
    Pasch {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PASCH_BOUND)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Whether all disjoint closed sets are separable by half-spaces
    Kakutani {
        #[command(flatten)]
        input: SystemInput,
        /// Largest ground set handled by exhaustive search
        #[arg(long, default_value_t = DEFAULT_KAKUTANI_BOUND)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Concepts of a formal context
    Fca {
        #[arg(long)]
        context: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Vertex classification on random trees
    ExperimentD1 {
        #[arg(long, value_delimiter = ',', default_values_t = [100usize, 500, 1000])]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 20, 40, 100])]
        train: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trees: usize,
        #[arg(long, default_value_t = 10)]
        sets: usize,
        #[arg(long, default_value_t = 3.0)]
        ratio: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Point classification in R^d
    ExperimentD2 {
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 20, 50, 100])]
        train: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 200)]
        per_class: usize,
        #[arg(long, default_value_t = crate::euclid::DEFAULT_MARGIN)]
        margin: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Randomized extensivity, monotonicity and idempotency check
    Laws {
        #[command(flatten)]
        input: SystemInput,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// What a successful run answered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// "Inseparable", "No" or a failed check.
    Negative,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Negative => 2,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Experiment(#[from] crate::experiments::ExperimentError),
    #[error("writing output: {0}")]
    Write(#[from] std::io::Error),
    #[error("encoding output: {0}")]
    Encode(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        1
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn load<T, E: Display>(path: &Path, parse: impl FnOnce(&str) -> Result<T, E>) -> Result<T, CliError> {
    let text = read(path)?;
    parse(&text).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    load(path, str::parse::<Graph>)
}

fn load_lattice(path: &Path) -> Result<FiniteLattice, CliError> {
    load(path, str::parse::<FiniteLattice>)
}

fn load_concepts(path: &Path) -> Result<ConceptLattice, CliError> {
    let ctx = load(path, read_context_csv)?;
    concept_lattice(&ctx).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_points(path: &Path) -> Result<AlphaClosure, CliError> {
    let (points, _) = load(path, read_points_csv)?;
    Ok(AlphaClosure::new(points))
}

fn split_list(s: &str, sep: char) -> Vec<&str> {
    s.split(sep).map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn parse_ids(s: &str, n: usize, what: &str) -> Result<ElementSet, CliError> {
    let mut out = ElementSet::empty(n);
    for tok in split_list(s, ',') {
        let id: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("{what}: {tok:?} is not a non-negative integer")))?;
        if id >= n {
            return Err(CliError::Usage(format!("{what}: id {id} out of range for {n} elements")));
        }
        out.insert(id);
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("{what}: empty list")));
    }
    Ok(out)
}

fn parse_concepts(s: &str, cl: &ConceptLattice, what: &str) -> Result<ElementSet, CliError> {
    let mut out = ElementSet::empty(cl.lattice.len());
    for group in split_list(s, ';') {
        let names = split_list(group, ',');
        let c = cl
            .generated_by_objects(&names)
            .map_err(|e| CliError::Usage(format!("{what}: {e}")))?;
        out.insert(c);
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("{what}: empty list")));
    }
    Ok(out)
}

fn join_ids(s: &ElementSet) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn join_labels(s: &ElementSet, label: impl Fn(usize) -> String) -> String {
    s.iter().map(label).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSeparationRecord {
    pub separated: bool,
    pub h1: String,
    pub h2: String,
    pub closure_calls: u64,
    pub partition: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeSeparationRecord {
    pub separated: bool,
    pub top_ideal: String,
    pub bottom_filter: String,
    pub ideal_side: String,
    pub ideal: String,
    pub filter: String,
    pub partition: bool,
    pub order_tests: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaschRecord {
    pub pasch: String,
    pub u: Option<usize>,
    pub v: Option<usize>,
    pub w: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub k23_minor_free: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KakutaniRecord {
    pub system: String,
    pub elements: usize,
    pub method: String,
    pub kakutani: bool,
    pub witness_a: String,
    pub witness_b: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConceptRecord {
    pub index: usize,
    pub concept: String,
    pub extent: String,
    pub intent: String,
    pub upper_covers: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawRecord {
    pub system: String,
    pub elements: usize,
    pub trials: usize,
    pub extensivity: String,
    pub monotonicity: String,
    pub idempotency: String,
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Encode(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Encode(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Encode(e.to_string()))
}

/// Inverse of the csv output format.
pub fn parse_csv<T: DeserializeOwned>(text: &str) -> Result<Vec<T>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

/// Inverse of the json output format.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<Vec<T>, serde_json::Error> {
    serde_json::from_str(text)
}

fn to_table<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let text = to_csv(rows)?;
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r
        .headers()
        .map_err(|e| CliError::Encode(e.to_string()))?
        .iter()
        .map(String::from)
        .collect();
    let body: Vec<Vec<String>> = r
        .records()
        .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Encode(e.to_string()))?;
    let mut out = String::new();
    if body.len() == 1 {
        for (k, v) in header.iter().zip(&body[0]) {
            out.push_str(&format!("{k}: {v}\n"));
        }
        return Ok(out);
    }
    let width: Vec<usize> = (0..header.len())
        .map(|c| body.iter().map(|row| row[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    for row in std::iter::once(&header).chain(&body) {
        let cells: Vec<String> = row.iter().zip(&width).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, rows: &[T]) -> Result<(), CliError> {
    let text = match format {
        Format::Table => to_table(rows)?,
        Format::Csv => to_csv(rows)?,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| CliError::Encode(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn outcome(positive: bool) -> Outcome {
    if positive {
        Outcome::Success
    } else {
        Outcome::Negative
    }
}

/// Executes one command, writing the result to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::SeparateGraph { graph, a, b, order, seed, format } => {
            let g = load_graph(&graph)?;
            let (a, b) = (parse_ids(&a, g.n(), "--a")?, parse_ids(&b, g.n(), "--b")?);
            let order = match order {
                OrderArg::Asc => ExtensionOrder::Ascending,
                OrderArg::Random => ExtensionOrder::Random(seed),
            };
            let op = GeodesicClosure::new(&g);
            let res = separate(op, &a, &b, &order).map_err(|e| CliError::Usage(e.to_string()))?;
            let rec = match &res {
                SeparationOutcome::Separated { h1, h2, closure_calls } => GraphSeparationRecord {
                    separated: true,
                    h1: join_ids(h1),
                    h2: join_ids(h2),
                    closure_calls: *closure_calls,
                    partition: h1.union(h2).is_full(),
                },
                SeparationOutcome::Inseparable => GraphSeparationRecord {
                    separated: false,
                    h1: String::new(),
                    h2: String::new(),
                    closure_calls: 2,
                    partition: false,
                },
            };
            emit(out, format, &[rec])?;
            Ok(outcome(res.is_separated()))
        }
        Command::SeparateLattice { input, a, b, cover, seed, format } => {
            let (lattice, concepts, a, b) = match (&input.lattice, &input.context) {
                (Some(p), _) => {
                    let l = load_lattice(p)?;
                    let (a, b) = (parse_ids(&a, l.len(), "--a")?, parse_ids(&b, l.len(), "--b")?);
                    (l, None, a, b)
                }
                (None, Some(p)) => {
                    let cl = load_concepts(p)?;
                    let (a, b) = (parse_concepts(&a, &cl, "--a")?, parse_concepts(&b, &cl, "--b")?);
                    (cl.lattice.clone(), Some(cl), a, b)
                }
                (None, None) => unreachable!("clap enforces one input"),
            };
            let label = |i: usize| match &concepts {
                Some(cl) => cl.concept_label(i),
                None => i.to_string(),
            };
            let choice = match cover {
                CoverArg::Lowest => CoverChoice::LowestIndex,
                CoverArg::Random => CoverChoice::Random(seed),
            };
            let sep = lattice_separate(&lattice, &a, &b, &choice).map_err(|e| CliError::Usage(e.to_string()))?;
            let rec = match sep.result {
                IdealFilterResult::Separated { top_i, bot_f, ideal_side } => LatticeSeparationRecord {
                    separated: true,
                    top_ideal: label(top_i),
                    bottom_filter: label(bot_f),
                    ideal_side: match ideal_side {
                        Side::A => "A".into(),
                        Side::B => "B".into(),
                    },
                    ideal: join_labels(lattice.ideal(top_i), label),
                    filter: join_labels(lattice.filter(bot_f), label),
                    partition: sep.is_partition(&lattice).unwrap_or(false),
                    order_tests: sep.order_tests,
                },
                IdealFilterResult::No => LatticeSeparationRecord {
                    separated: false,
                    top_ideal: String::new(),
                    bottom_filter: String::new(),
                    ideal_side: String::new(),
                    ideal: String::new(),
                    filter: String::new(),
                    partition: false,
                    order_tests: sep.order_tests,
                },
            };
            let separated = rec.separated;
            emit(out, format, &[rec])?;
            Ok(outcome(separated))
        }
        Command::Pasch { graph, max_n, format } => {
            if max_n == 0 {
                return Err(CliError::Usage("--max-n must be positive".into()));
            }
            let g = load_graph(&graph)?;
            let res = pasch_check_bounded(&g, max_n).map_err(|e| CliError::Usage(e.to_string()))?;
            let minor_free = (g.n() <= DEFAULT_MINOR_BOUND)
                .then(|| k23_minor_free_bounded(&g, DEFAULT_MINOR_BOUND))
                .transpose()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let w = res.witness();
            let rec = PaschRecord {
                pasch: match res {
                    PaschOutcome::Holds => "holds".into(),
                    PaschOutcome::Violated(_) => "violated".into(),
                },
                u: w.map(|w| w.u),
                v: w.map(|w| w.v),
                w: w.map(|w| w.w),
                x: w.map(|w| w.x),
                y: w.map(|w| w.y),
                k23_minor_free: minor_free,
            };
            emit(out, format, &[rec])?;
            Ok(Outcome::Success)
        }
        Command::Kakutani { input, max_n, format } => {
            let rec = kakutani(&input, max_n)?;
            let yes = rec.kakutani;
            emit(out, format, &[rec])?;
            Ok(outcome(yes))
        }
        Command::Fca { context, format } => {
            let cl = load_concepts(&context)?;
            let objs = cl.context.objects();
            let attrs = cl.context.attributes();
            let rows: Vec<ConceptRecord> = cl
                .concepts
                .iter()
                .enumerate()
                .map(|(i, c)| ConceptRecord {
                    index: i,
                    concept: cl.concept_label(i),
                    extent: join_labels(&c.extent, |o| objs[o].clone()),
                    intent: join_labels(&c.intent, |a| attrs[a].clone()),
                    upper_covers: cl.lattice.upper_covers(i).iter().map(|u| u.to_string()).collect::<Vec<_>>().join(" "),
                })
                .collect();
            emit(out, format, &rows)?;
            Ok(Outcome::Success)
        }
        Command::ExperimentD1 { sizes, train, trees, sets, ratio, seed, format } => {
            if trees == 0 || sets == 0 || ratio.is_nan() || ratio < 1.0 {
                return Err(CliError::Usage("--trees and --sets must be positive, --ratio at least 1".into()));
            }
            let cfg = D1Config {
                tree_sizes: sizes,
                train_sizes: train,
                trees_per_size: trees,
                trainsets_per_tree: sets,
                ratio_bound: ratio,
                seed,
            };
            let report = run_d1(&cfg)?;
            emit(out, format, &report.cells)?;
            Ok(Outcome::Success)
        }
        Command::ExperimentD2 { dims, train, instances, per_class, margin, seed, format } => {
            if instances == 0 || per_class == 0 || !(margin > 0.0 && margin < 1.0) {
                return Err(CliError::Usage(
                    "--instances and --per-class must be positive, --margin in (0, 1)".into(),
                ));
            }
            let cfg = D2Config {
                dims,
                train_sizes: train,
                instances_per_dim: instances,
                n_per_class: per_class,
                margin,
                seed,
            };
            let report = run_d2(&cfg)?;
            emit(out, format, &report.cells)?;
            Ok(Outcome::Success)
        }
        Command::Laws { input, trials, seed, format } => {
            if trials == 0 {
                return Err(CliError::Usage("--trials must be positive".into()));
            }
            let (system, n, report) = with_system(&input, |op| verify_closure_laws(op, trials, seed))?;
            let rec = LawRecord {
                system,
                elements: n,
                trials: report.trials,
                extensivity: describe(&report.extensivity),
                monotonicity: describe(&report.monotonicity),
                idempotency: describe(&report.idempotency),
            };
            emit(out, format, &[rec])?;
            Ok(outcome(LawReport::all_pass(&report)))
        }
    }
}

fn describe(w: &Option<LawWitness>) -> String {
    match w {
        None => "ok".into(),
        Some(LawWitness::Extensivity { x }) => format!("violated at X = {{{}}}", join_ids(x)),
        Some(LawWitness::Monotonicity { x, y }) => {
            format!("violated at X = {{{}}}, Y = {{{}}}", join_ids(x), join_ids(y))
        }
        Some(LawWitness::Idempotency { x }) => format!("violated at X = {{{}}}", join_ids(x)),
    }
}

/// Loads the selected system and hands its closure operator to `f`.
fn with_system<R>(
    input: &SystemInput,
    f: impl FnOnce(&dyn ClosureOperator) -> R,
) -> Result<(String, usize, R), CliError> {
    if let Some(p) = &input.graph {
        let op = GeodesicClosure::new(&load_graph(p)?);
        let n = op.ground_size();
        return Ok(("graph".into(), n, f(&op)));
    }
    if let Some(p) = &input.lattice {
        let l = load_lattice(p)?;
        let op = LambdaClosure::new(&l);
        return Ok(("lattice".into(), l.len(), f(&op)));
    }
    if let Some(p) = &input.context {
        let cl = load_concepts(p)?;
        let op = LambdaClosure::new(&cl.lattice);
        return Ok(("context".into(), cl.lattice.len(), f(&op)));
    }
    if let Some(p) = &input.points {
        let op = load_points(p)?;
        let n = op.ground_size();
        return Ok(("points".into(), n, f(&op)));
    }
    unreachable!("clap enforces one input")
}

fn kakutani(input: &SystemInput, max_n: usize) -> Result<KakutaniRecord, CliError> {
    let brute = |op: &dyn ClosureOperator| BruteForce::new(op).kakutani_bound(max_n).kakutani();
    let record = |system: &str, n: usize, method: &str, verdict: KakutaniVerdict| {
        let (wa, wb) = match &verdict {
            KakutaniVerdict::Kakutani => (String::new(), String::new()),
            KakutaniVerdict::NotKakutani { a, b } => (join_ids(a), join_ids(b)),
        };
        KakutaniRecord {
            system: system.into(),
            elements: n,
            method: method.into(),
            kakutani: verdict.is_kakutani(),
            witness_a: wa,
            witness_b: wb,
        }
    };
    let usage = |e: &dyn Display| CliError::Usage(e.to_string());

    // lattices: Kakutani iff distributive, which scales further than enumeration
    let lattice = match (&input.lattice, &input.context) {
        (Some(p), _) => Some(("lattice", load_lattice(p)?)),
        (None, Some(p)) => Some(("context", load_concepts(p)?.lattice)),
        _ => None,
    };
    if let Some((system, l)) = lattice {
        let n = l.len();
        if n <= max_n {
            let v = brute(&LambdaClosure::new(&l)).map_err(|e| usage(&e))?;
            return Ok(record(system, n, "exhaustive", v));
        }
        if n > DISTRIBUTIVITY_BOUND {
            return Err(CliError::Usage(format!("lattice has {n} elements, limit is {DISTRIBUTIVITY_BOUND}")));
        }
        let d = is_distributive(&l).map_err(|e| usage(&e))?;
        let mut rec = record(system, n, "distributivity", KakutaniVerdict::Kakutani);
        rec.kakutani = d;
        return Ok(rec);
    }
    if let Some(p) = &input.graph {
        let g = load_graph(p)?;
        let n = g.n();
        if n <= max_n {
            let v = brute(&GeodesicClosure::new(&g)).map_err(|e| usage(&e))?;
            return Ok(record("graph", n, "exhaustive", v));
        }
        if !g.is_connected() {
            return Err(CliError::Usage(format!(
                "disconnected graph with {n} vertices exceeds the exhaustive bound {max_n}"
            )));
        }
        let res = pasch_check_bounded(&g, DEFAULT_PASCH_BOUND).map_err(|e| usage(&e))?;
        let mut rec = record("graph", n, "pasch", KakutaniVerdict::Kakutani);
        rec.kakutani = res.holds();
        return Ok(rec);
    }
    let p = input.points.as_ref().expect("clap enforces one input");
    let op = load_points(p)?;
    let n = op.ground_size();
    let v = brute(&op).map_err(|e| usage(&e))?;
    Ok(record("points", n, "exhaustive", v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp(name: &str, body: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("closure-sep-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn exec(args: &[&str]) -> (Result<Outcome, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("closure-sep").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn separate_graph_on_a_path() {
        let p = tmp("path.txt", &Graph::path(6).to_edge_list());
        let (r, out) = exec(&["separate-graph", "--graph", p.to_str().unwrap(), "--a", "0", "--b", "5"]);
        assert_eq!(r.unwrap(), Outcome::Success);
        assert!(out.contains("partition: true"), "{out}");
    }

    #[test]
    fn inseparable_exits_negative() {
        let p = tmp("p3.txt", &Graph::path(3).to_edge_list());
        let (r, out) = exec(&["separate-graph", "--graph", p.to_str().unwrap(), "--a", "0,2", "--b", "1"]);
        assert_eq!(r.unwrap().exit_code(), 2);
        assert!(out.contains("separated: false"));
    }

    #[test]
    fn pasch_reports_k23_witness() {
        let p = tmp("k23.txt", &Graph::complete_bipartite(2, 3).to_edge_list());
        let (r, out) = exec(&["pasch", "--graph", p.to_str().unwrap()]);
        assert_eq!(r.unwrap(), Outcome::Success);
        assert!(out.contains("pasch: violated"));
        assert!(out.contains("k23_minor_free: false"));
    }

    #[test]
    fn malformed_graph_names_file_and_line() {
        let p = tmp("bad.txt", "3 2\n0 1\n1 x\n");
        let (r, _) = exec(&["pasch", "--graph", p.to_str().unwrap()]);
        let e = r.unwrap_err();
        assert_eq!(e.exit_code(), 1);
        let msg = e.to_string();
        assert!(msg.contains("bad.txt") && msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn example_lattice_run_from_context() {
        let p = tmp("shapes.csv", &crate::lattice::FormalContext::shapes().to_csv());
        let (r, out) = exec(&["separate-lattice", "--context", p.to_str().unwrap(), "--a", "o4", "--b", "o1,o2"]);
        assert_eq!(r.unwrap(), Outcome::Success);
        assert!(out.contains("(o1o4,a4)") && out.contains("(o2,a1a3)"), "{out}");
        assert!(out.contains("partition: false"));
    }

    #[test]
    fn csv_and_json_round_trip() {
        let p = tmp("shapes2.csv", &crate::lattice::FormalContext::shapes().to_csv());
        let path = p.to_str().unwrap();
        let (_, csv_out) = exec(&["fca", "--context", path, "--format", "csv"]);
        let (_, json_out) = exec(&["fca", "--context", path, "--format", "json"]);
        let a: Vec<ConceptRecord> = parse_csv(&csv_out).unwrap();
        let b: Vec<ConceptRecord> = parse_json(&json_out).unwrap();
        assert_eq!(a.len(), 9);
        assert_eq!(a, b);
        assert_eq!(to_csv(&a).unwrap(), csv_out);
    }

    #[test]
    fn kakutani_on_lattice_and_graph() {
        let m3 = tmp("m3.txt", &FiniteLattice::m3().to_cover_list());
        let (r, out) = exec(&["kakutani", "--lattice", m3.to_str().unwrap()]);
        assert_eq!(r.unwrap(), Outcome::Negative);
        assert!(out.contains("kakutani: false"));
        let c = tmp("c5.txt", &Graph::cycle(5).to_edge_list());
        let (r, _) = exec(&["kakutani", "--graph", c.to_str().unwrap()]);
        assert_eq!(r.unwrap(), Outcome::Success);
    }

    #[test]
    fn laws_hold_for_points() {
        let p = tmp("pts.csv", "2\n0,0\n1,0\n0,1\n1,1\n0.5,0.5\n");
        let (r, out) = exec(&["laws", "--points", p.to_str().unwrap(), "--trials", "50", "--format", "json"]);
        assert_eq!(r.unwrap(), Outcome::Success);
        let recs: Vec<LawRecord> = parse_json(&out).unwrap();
        assert_eq!(recs[0].idempotency, "ok");
    }

    #[test]
    fn experiment_output_is_deterministic() {
        let args = ["experiment-d1", "--sizes", "30", "--train", "6", "--trees", "2", "--sets", "2", "--format", "csv"];
        let (_, first) = exec(&args);
        let (_, second) = exec(&args);
        assert_eq!(first, second);
        let cells = crate::experiments::read_summary_csv(&first).unwrap();
        assert_eq!(cells[0].trials, 4);
    }

    #[test]
    fn conflicting_inputs_are_rejected() {
        let r = Cli::try_parse_from(["closure-sep", "laws", "--graph", "a", "--points", "b"]);
        assert!(r.is_err());
        let r = Cli::try_parse_from(["closure-sep", "kakutani"]);
        assert!(r.is_err());
    }
}
