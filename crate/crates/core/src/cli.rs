//! The `dominator` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 infeasible instance,
//! 3 search or resampling budget exceeded, 4 set rejected by `verify`.
//! Every failure also prints one `error[kind]: message` line to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::{BigRational, Ratio};
use serde_json::{json, Value};

use crate::bounds::{compare_all, is_infeasible, BoundReport, CompareOptions, StructureHint};
use crate::exact::{gamma_exact, is_ab_dominating, DominationCertificate, ExactError, GammaOutcome, DEFAULT_NODE_LIMIT};
use crate::generators::{generate, GenerateError, GraphKind};
use crate::graph::Graph;
use crate::io::{parse_graph, write_edge_list, write_graph6, GraphFormat};
use crate::lll::{
    extract_dominating, failure_prob_fixed_color, minimal_colors, moser_tardos, smallest_regular_degree, to_decimal,
    LllError, LllParams, LllReport, DEFAULT_MAX_COLORS,
};
use crate::turan::{
    partition_stated_bound, partition_turan_estimate, turan_run, Chooser, Extractor, Strategy, StrategyKind,
    StrategyName, TuranError,
};

pub const SCHEMA: &str = "dominator/1";
pub const SEED_ENV: &str = "DOMINATOR_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_REJECTED: i32 = 4;

/// Rows of the published local-lemma table: (delta, Delta, a, b).
pub const TABLE_ROWS: [(u32, u32, u32, u32); 15] = [
    (7, 7, 2, 2),
    (7, 8, 2, 2),
    (9, 9, 2, 2),
    (9, 10, 2, 2),
    (9, 11, 2, 2),
    (14, 14, 2, 2),
    (8, 8, 1, 2),
    (8, 9, 1, 2),
    (8, 10, 1, 2),
    (8, 11, 1, 2),
    (13, 13, 1, 2),
    (13, 14, 1, 2),
    (8, 8, 2, 1),
    (13, 13, 2, 1),
    (13, 14, 2, 1),
];

const TABLE_HEADER: [&str; 10] = [
    "delta",
    "Delta",
    "a",
    "b",
    "minimal_N",
    "bound_num",
    "bound_den",
    "P_num",
    "P_den",
    "condition_value_decimal",
];

#[derive(Debug, Parser)]
#[command(name = "dominator", version, about = "Exact and upper bounds for (a,b)-domination")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Output::Text)]
    output: Output,
    /// Input graph format; detected from the first byte when omitted.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Heawood,
    Petersen,
    Cycle,
    Complete,
    #[value(alias = "complete-bipartite")]
    CompleteBipartite,
    #[value(alias = "projective-incidence", alias = "projective")]
    ProjectiveIncidence,
    #[value(alias = "random-regular")]
    RandomRegular,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a named graph: cycle N, complete N, complete_bipartite S T,
    /// projective_incidence Q, random_regular N R --seed S.
    Gen {
        kind: Kind,
        params: Vec<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output graph encoding.
        #[arg(long = "as", value_enum, default_value_t = Format::Edgelist)]
        encoding: Format,
    },
    /// Check whether a vertex set is (a,b)-dominating.
    Verify {
        file: PathBuf,
        /// Comma- or space-separated vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        ab: AbArgs,
    },
    /// Exact (a,b)-domination number by branch and bound.
    Gamma {
        file: PathBuf,
        #[command(flatten)]
        ab: AbArgs,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Dominating set from an auxiliary-graph construction.
    Turan {
        file: PathBuf,
        #[arg(long)]
        strategy: String,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        d: Option<usize>,
        #[arg(short)]
        a: Option<usize>,
        #[arg(short)]
        b: Option<usize>,
        /// Pick gadget neighbors at random with this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// (b-a)-regular spanning subgraph for ab_spanning, as an edge list.
        #[arg(long)]
        spanning: Option<PathBuf>,
        /// Use a maximum independent set of the auxiliary graph (n <= 128).
        #[arg(long)]
        exact_extract: bool,
    },
    /// Minimal color counts for the local-lemma bound.
    LllTable(LllTableArgs),
    /// Build a good coloring by resampling and extract a dominating set.
    LllRun {
        file: PathBuf,
        #[arg(short = 'N')]
        colors: u32,
        #[command(flatten)]
        ab: AbArgs,
        #[arg(long)]
        seed: Option<u64>,
        /// Defaults to 50 n.
        #[arg(long)]
        max_resamples: Option<u64>,
    },
    /// Compare every applicable bound on one graph.
    Bounds {
        file: PathBuf,
        #[command(flatten)]
        ab: AbArgs,
        /// Assert the graph is the Heawood graph.
        #[arg(long)]
        heawood: bool,
        /// Assert the graph is a projective plane incidence graph.
        #[arg(long)]
        incidence: bool,
        /// Assert the graph is a Moore graph of diameter 2.
        #[arg(long)]
        moore: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
}

#[derive(Debug, Args)]
struct AbArgs {
    #[arg(short)]
    a: usize,
    #[arg(short)]
    b: usize,
}

#[derive(Debug, Args)]
struct LllTableArgs {
    /// File of `delta Delta a b` rows.
    #[arg(long, conflicts_with_all = ["delta", "max_delta"])]
    rows: Option<PathBuf>,
    #[arg(long, requires_all = ["max_delta", "a", "b"])]
    delta: Option<u32>,
    #[arg(long = "Delta", requires = "delta")]
    max_delta: Option<u32>,
    #[arg(short)]
    a: Option<u32>,
    #[arg(short)]
    b: Option<u32>,
    /// Largest color count tried.
    #[arg(long, default_value_t = DEFAULT_MAX_COLORS)]
    n_max: u32,
    /// Add the failure probability with the deleted color fixed in advance.
    #[arg(long)]
    fixed_color_prob: bool,
    /// Instead of the table, report the smallest regular degree at which the
    /// condition holds with this many colors.
    #[arg(long)]
    r0: Option<u32>,
}

/// A failure with its exit code and diagnostic kind.
#[derive(Debug)]
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }

    fn input(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            kind: "input",
            message: message.to_string(),
        }
    }
}

impl From<GenerateError> for Failure {
    fn from(e: GenerateError) -> Self {
        match e {
            GenerateError::RetryLimit(_) => Self {
                code: EXIT_BUDGET,
                kind: "budget-exceeded",
                message: e.to_string(),
            },
            _ => Self::input(e),
        }
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::BudgetExceeded { .. } => Self {
                code: EXIT_BUDGET,
                kind: "budget-exceeded",
                message: e.to_string(),
            },
            _ => Self::input(e),
        }
    }
}

impl From<TuranError> for Failure {
    fn from(e: TuranError) -> Self {
        match e {
            TuranError::VerificationFailed(_) => Self {
                code: EXIT_USAGE,
                kind: "internal",
                message: e.to_string(),
            },
            TuranError::Exact(inner) => inner.into(),
            _ => Self {
                code: EXIT_INFEASIBLE,
                kind: "inapplicable",
                message: e.to_string(),
            },
        }
    }
}

impl From<LllError> for Failure {
    fn from(e: LllError) -> Self {
        match e {
            LllError::ResampleBudgetExceeded { .. } => Self {
                code: EXIT_BUDGET,
                kind: "budget-exceeded",
                message: e.to_string(),
            },
            _ => Self::input(e),
        }
    }
}

/// Streams and environment the command runs against.
pub struct Context<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    /// Seed used when a randomized command gets no `--seed`.
    pub env_seed: Option<u64>,
}

/// Runs against the process's streams and environment.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_seed = std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok());
    let mut stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let mut ctx = Context {
        stdin: &mut stdin,
        stdout: &mut stdout,
        stderr: &mut stderr,
        env_seed,
    };
    run_with(argv, &mut ctx)
}

pub fn run_with<I, T>(argv: I, ctx: &mut Context<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(ctx.stdout, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            let line = line.trim_start_matches("error: ");
            let _ = writeln!(ctx.stderr, "error[usage]: {line}");
            return EXIT_USAGE;
        }
    };
    let mut out = String::new();
    let result = dispatch(&cli, ctx, &mut out);
    let _ = ctx.stdout.write_all(out.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let message = f.message.replace('\n', " ");
            let _ = writeln!(ctx.stderr, "error[{}]: {message}", f.kind);
            f.code
        }
    }
}

fn read_graph(path: &PathBuf, format: Option<Format>, ctx: &mut Context<'_>) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        ctx.stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    };
    parse_graph(&text, format.map(Into::into)).map_err(Failure::input)
}

fn require_seed(seed: Option<u64>, ctx: &Context<'_>) -> Result<u64, Failure> {
    seed.or(ctx.env_seed)
        .ok_or_else(|| Failure::usage(format!("a seed is required (--seed or {SEED_ENV})")))
}

fn ratio_json(r: Ratio<u64>) -> Value {
    json!([r.numer(), r.denom()])
}

fn dispatch(cli: &Cli, ctx: &mut Context<'_>, out: &mut String) -> Result<i32, Failure> {
    match &cli.command {
        Command::Gen {
            kind,
            params,
            seed,
            encoding,
        } => cmd_gen(cli.output, *kind, params, *seed, *encoding, ctx, out),
        Command::Verify { file, set, ab } => {
            let g = read_graph(file, cli.format, ctx)?;
            cmd_verify(cli.output, &g, set, ab, out)
        }
        Command::Gamma { file, ab, node_limit } => {
            let g = read_graph(file, cli.format, ctx)?;
            cmd_gamma(cli.output, &g, ab, *node_limit, out)
        }
        Command::Turan {
            file,
            strategy,
            k,
            d,
            a,
            b,
            seed,
            spanning,
            exact_extract,
        } => {
            let g = read_graph(file, cli.format, ctx)?;
            let spanning = match spanning {
                Some(p) => Some(read_graph(p, Some(Format::Edgelist), ctx)?),
                None => None,
            };
            let kind = strategy_kind(strategy, *k, *d, *a, *b, spanning)?;
            let chooser = seed.map_or(Chooser::LowestIndex, Chooser::SeededRandom);
            let extractor = if *exact_extract { Extractor::Exact } else { Extractor::Greedy };
            cmd_turan(cli.output, &g, Strategy { kind, chooser }, extractor, out)
        }
        Command::LllTable(args) => cmd_lll_table(cli.output, args, out),
        Command::LllRun {
            file,
            colors,
            ab,
            seed,
            max_resamples,
        } => {
            let g = read_graph(file, cli.format, ctx)?;
            let seed = require_seed(*seed, ctx)?;
            cmd_lll_run(cli.output, &g, *colors, ab, seed, *max_resamples, out)
        }
        Command::Bounds {
            file,
            ab,
            heawood,
            incidence,
            moore,
            node_limit,
        } => {
            let g = read_graph(file, cli.format, ctx)?;
            let hint = StructureHint {
                heawood: *heawood,
                projective_incidence: *incidence || *heawood,
                moore: *moore,
            };
            let opts = CompareOptions {
                hint,
                node_limit: *node_limit,
                ..CompareOptions::default()
            };
            cmd_bounds(cli.output, &g, ab, &opts, out)
        }
    }
}

fn cmd_gen(
    output: Output,
    kind: Kind,
    params: &[u64],
    seed: Option<u64>,
    encoding: Format,
    ctx: &Context<'_>,
    out: &mut String,
) -> Result<i32, Failure> {
    let want = |count: usize| -> Result<Vec<usize>, Failure> {
        if params.len() != count {
            return Err(Failure::usage(format!(
                "{kind:?} takes {count} integer parameter(s), got {}",
                params.len()
            )));
        }
        Ok(params.iter().map(|&p| p as usize).collect())
    };
    let graph_kind = match kind {
        Kind::Heawood => {
            want(0)?;
            GraphKind::Heawood
        }
        Kind::Petersen => {
            want(0)?;
            GraphKind::Petersen
        }
        Kind::Cycle => GraphKind::Cycle { n: want(1)?[0] },
        Kind::Complete => GraphKind::Complete { n: want(1)?[0] },
        Kind::CompleteBipartite => {
            let p = want(2)?;
            GraphKind::CompleteBipartite { s: p[0], t: p[1] }
        }
        Kind::ProjectiveIncidence => GraphKind::ProjectiveIncidence { q: want(1)?[0] as u64 },
        Kind::RandomRegular => {
            let p = want(2)?;
            GraphKind::RandomRegular { n: p[0], r: p[1] }
        }
    };
    let seed = if graph_kind.is_random() {
        Some(require_seed(seed, ctx)?)
    } else {
        seed
    };
    let g = generate(graph_kind, seed)?;
    let encoded = match encoding {
        Format::Edgelist => write_edge_list(&g),
        Format::Graph6 => format!("{}\n", write_graph6(&g)),
    };
    match output {
        Output::Json => {
            let hint = graph_kind.structure_hint();
            let v = json!({
                "schema": SCHEMA,
                "command": "gen",
                "n": g.n(),
                "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                "graph6": write_graph6(&g),
                "tags": hint,
            });
            out.push_str(&format!("{v}\n"));
        }
        _ => out.push_str(&encoded),
    }
    Ok(EXIT_OK)
}

fn parse_set(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::usage(format!("'{s}' is not a vertex id")))
        })
        .collect()
}

fn certificate_json(c: &DominationCertificate) -> Value {
    serde_json::to_value(c).expect("certificate serializes")
}

fn cmd_verify(output: Output, g: &Graph, set: &str, ab: &AbArgs, out: &mut String) -> Result<i32, Failure> {
    let mut set = parse_set(set)?;
    set.sort_unstable();
    set.dedup();
    let ok = is_ab_dominating(g, &set, ab.a, ab.b).map_err(Failure::input)?;
    match output {
        Output::Json => {
            let v = json!({
                "schema": SCHEMA,
                "command": "verify",
                "valid": ok,
                "a": ab.a,
                "b": ab.b,
                "size": set.len(),
                "set": set,
            });
            out.push_str(&format!("{v}\n"));
        }
        _ => {
            let verdict = if ok { "valid" } else { "invalid" };
            out.push_str(&format!("{verdict}\t({},{})\tsize={}\n", ab.a, ab.b, set.len()));
        }
    }
    if ok {
        Ok(EXIT_OK)
    } else {
        Err(Failure {
            code: EXIT_REJECTED,
            kind: "rejected",
            message: format!("set is not ({},{})-dominating", ab.a, ab.b),
        })
    }
}

fn cmd_gamma(output: Output, g: &Graph, ab: &AbArgs, node_limit: u64, out: &mut String) -> Result<i32, Failure> {
    match gamma_exact(g, ab.a, ab.b, node_limit)? {
        GammaOutcome::Optimal { size, witness } => {
            let cert = DominationCertificate::issue(g, witness, ab.a, ab.b, None, crate::exact::Method::Exact)
                .map_err(|e| Failure::input(format!("internal: {e}")))?;
            match output {
                Output::Json => {
                    let v = json!({
                        "schema": SCHEMA,
                        "command": "gamma",
                        "result": "optimal",
                        "size": size,
                        "certificate": certificate_json(&cert),
                    });
                    out.push_str(&format!("{v}\n"));
                }
                Output::Tsv => {
                    out.push_str("a\tb\tgamma\twitness\n");
                    out.push_str(&format!("{}\t{}\t{size}\t{}\n", ab.a, ab.b, join(&cert.set, ",")));
                }
                Output::Text => {
                    out.push_str(&format!("{size}\n"));
                    out.push_str(&format!("witness: {}\n", join(&cert.set, " ")));
                }
            }
            Ok(EXIT_OK)
        }
        GammaOutcome::Infeasible => {
            match output {
                Output::Json => {
                    let v = json!({"schema": SCHEMA, "command": "gamma", "result": "infeasible"});
                    out.push_str(&format!("{v}\n"));
                }
                _ => out.push_str("infeasible\n"),
            }
            Err(Failure {
                code: EXIT_INFEASIBLE,
                kind: "infeasible",
                message: format!("no ({},{})-dominating set exists", ab.a, ab.b),
            })
        }
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn strategy_kind(
    name: &str,
    k: Option<usize>,
    d: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    spanning: Option<Graph>,
) -> Result<StrategyKind, Failure> {
    let name: StrategyName = name.parse().map_err(Failure::usage)?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::usage(format!("strategy needs -{flag}")));
    Ok(match name {
        StrategyName::Tt22Min3 => StrategyKind::Tt22Min3,
        StrategyName::Tt22Min4 => StrategyKind::Tt22Min4,
        StrategyName::Tt22Mixed => StrategyKind::Tt22Mixed,
        StrategyName::KkClique => StrategyKind::KkClique { k: need(k, "k")? },
        StrategyName::KkMatching => StrategyKind::KkMatching { k: need(k, "k")? },
        StrategyName::KkPartition => StrategyKind::KkPartition {
            k: need(k, "k")?,
            d: need(d, "d")?,
        },
        StrategyName::AbGeneral => StrategyKind::AbGeneral {
            a: need(a, "a")?,
            b: need(b, "b")?,
        },
        StrategyName::AbSpanning => StrategyKind::AbSpanning {
            a: need(a, "a")?,
            b: need(b, "b")?,
            subgraph: spanning,
        },
    })
}

fn cmd_turan(
    output: Output,
    g: &Graph,
    strategy: Strategy,
    extractor: Extractor,
    out: &mut String,
) -> Result<i32, Failure> {
    let run = turan_run(g, &strategy, extractor)?;
    let cert = &run.certificate;
    let alpha = run.aux.edge_budget;
    let bound = cert.claimed_bound.expect("turan certificates carry a bound");
    let guaranteed = g.n() - crate::turan::guaranteed_independent(g.n(), alpha);
    let partition = match strategy.kind {
        StrategyKind::KkPartition { k, d } => Some((partition_turan_estimate(k, d), partition_stated_bound(k, d))),
        _ => None,
    };
    match output {
        Output::Json => {
            let mut v = json!({
                "schema": SCHEMA,
                "command": "turan",
                "strategy": strategy.kind.to_string(),
                "extractor": extractor,
                "n": g.n(),
                "alpha": ratio_json(alpha),
                "bound_fraction": ratio_json(bound),
                "max_size": guaranteed,
                "aux_edges": run.aux.aux_edges.len(),
                "aux_edges_with_multiplicity": run.aux.edge_count_with_multiplicity(),
                "independent_set": run.independent,
                "certificate": certificate_json(cert),
            });
            if let Some((estimate, stated)) = partition {
                v["turan_estimate_alpha"] = ratio_json(estimate);
                v["stated_bound"] = ratio_json(stated);
            }
            out.push_str(&format!("{v}\n"));
        }
        _ => {
            out.push_str(&format!("strategy\t{}\n", strategy.kind));
            out.push_str(&format!("ab\t({},{})\n", cert.a, cert.b));
            out.push_str(&format!("alpha\t{alpha}\n"));
            out.push_str(&format!("bound_fraction\t{bound} n\n"));
            if let Some((estimate, stated)) = partition {
                out.push_str(&format!("turan_estimate_alpha\t{estimate}\n"));
                out.push_str(&format!("stated_bound\t{stated} n\n"));
            }
            out.push_str(&format!(
                "aux_edges\t{} ({} with multiplicity)\n",
                run.aux.aux_edges.len(),
                run.aux.edge_count_with_multiplicity()
            ));
            out.push_str(&format!("independent\t{}\n", run.independent.len()));
            out.push_str(&format!("size\t{} (max allowed {guaranteed})\n", cert.size()));
            out.push_str(&format!("verified\t{}\n", cert.verified));
            out.push_str(&format!("set\t{}\n", join(&cert.set, " ")));
        }
    }
    Ok(EXIT_OK)
}

fn read_rows(args: &LllTableArgs) -> Result<Vec<LllParams>, Failure> {
    if let Some(path) = &args.rows {
        let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("delta") {
                continue;
            }
            let nums: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
            match nums.as_deref() {
                Ok([delta, max_delta, a, b]) => rows.push(LllParams {
                    delta: *delta,
                    max_delta: *max_delta,
                    a: *a,
                    b: *b,
                }),
                _ => {
                    return Err(Failure::input(format!(
                        "{}:{}: expected 'delta Delta a b'",
                        path.display(),
                        i + 1
                    )))
                }
            }
        }
        return Ok(rows);
    }
    if let (Some(delta), Some(max_delta), Some(a), Some(b)) = (args.delta, args.max_delta, args.a, args.b) {
        return Ok(vec![LllParams { delta, max_delta, a, b }]);
    }
    Ok(TABLE_ROWS
        .iter()
        .map(|&(delta, max_delta, a, b)| LllParams { delta, max_delta, a, b })
        .collect())
}

fn big_parts(r: &BigRational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn table_cells(report: &LllReport) -> Vec<String> {
    let p = report.params;
    let mut cells = vec![
        p.delta.to_string(),
        p.max_delta.to_string(),
        p.a.to_string(),
        p.b.to_string(),
    ];
    match (&report.minimal_n, &report.bound, &report.p_at_n, &report.condition_value) {
        (Some(n), Some(bound), Some(prob), Some(value)) => {
            let (pn, pd) = big_parts(prob);
            cells.extend([
                n.to_string(),
                bound.numer().to_string(),
                bound.denom().to_string(),
                pn,
                pd,
                to_decimal(value, 20),
            ]);
        }
        _ => cells.extend(std::iter::repeat_n("-".to_string(), 6)),
    }
    cells
}

fn report_json(report: &LllReport, fixed: bool) -> Value {
    let p = report.params;
    let mut v = json!({
        "delta": p.delta,
        "Delta": p.max_delta,
        "a": p.a,
        "b": p.b,
        "minimal_N": report.minimal_n,
        "bound_num": report.bound.map(|b| *b.numer()),
        "bound_den": report.bound.map(|b| *b.denom()),
        "P_num": report.p_at_n.as_ref().map(|r| r.numer().to_string()),
        "P_den": report.p_at_n.as_ref().map(|r| r.denom().to_string()),
        "condition_value_decimal": report.condition_value.as_ref().map(|r| to_decimal(r, 20)),
    });
    if let Some(reason) = &report.reason {
        v["reason"] = json!(reason);
    }
    if fixed {
        let fixed = report
            .minimal_n
            .and_then(|n| failure_prob_fixed_color(p.delta, n, p.a, p.b).ok());
        v["P_fixed_num"] = json!(fixed.as_ref().map(|r| r.numer().to_string()));
        v["P_fixed_den"] = json!(fixed.as_ref().map(|r| r.denom().to_string()));
    }
    v
}

fn cmd_lll_table(output: Output, args: &LllTableArgs, out: &mut String) -> Result<i32, Failure> {
    let rows = read_rows(args)?;
    if let Some(colors) = args.r0 {
        if colors < 2 {
            return Err(Failure::usage("--r0 needs at least 2 colors"));
        }
        let mut pairs: Vec<(u32, u32)> = rows.iter().map(|p| (p.a, p.b)).collect();
        pairs.dedup();
        let found: Vec<(u32, u32, Option<u32>)> = pairs
            .iter()
            .map(|&(a, b)| (a, b, smallest_regular_degree(colors, a, b, 1024)))
            .collect();
        match output {
            Output::Json => {
                let rows: Vec<Value> = found
                    .iter()
                    .map(|(a, b, r)| json!({"a": a, "b": b, "N": colors, "r0": r}))
                    .collect();
                out.push_str(&format!("{}\n", json!({"schema": SCHEMA, "command": "lll-table", "r0": rows})));
            }
            _ => {
                out.push_str("a\tb\tN\tr0\n");
                for (a, b, r) in found {
                    let r = r.map_or("-".to_string(), |r| r.to_string());
                    out.push_str(&format!("{a}\t{b}\t{colors}\t{r}\n"));
                }
            }
        }
        return Ok(EXIT_OK);
    }
    let reports: Vec<LllReport> = rows.iter().map(|&p| minimal_colors(p, args.n_max)).collect();
    match output {
        Output::Json => {
            let rows: Vec<Value> = reports.iter().map(|r| report_json(r, args.fixed_color_prob)).collect();
            out.push_str(&format!("{}\n", json!({"schema": SCHEMA, "command": "lll-table", "rows": rows})));
        }
        _ => {
            let mut header: Vec<&str> = TABLE_HEADER.to_vec();
            if args.fixed_color_prob {
                header.extend(["P_fixed_num", "P_fixed_den"]);
            }
            out.push_str(&header.join("\t"));
            out.push('\n');
            for r in &reports {
                let mut cells = table_cells(r);
                if args.fixed_color_prob {
                    let p = r.params;
                    match r.minimal_n.and_then(|n| failure_prob_fixed_color(p.delta, n, p.a, p.b).ok()) {
                        Some(f) => {
                            let (num, den) = big_parts(&f);
                            cells.extend([num, den]);
                        }
                        None => cells.extend(["-".to_string(), "-".to_string()]),
                    }
                }
                out.push_str(&cells.join("\t"));
                out.push('\n');
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_lll_run(
    output: Output,
    g: &Graph,
    colors: u32,
    ab: &AbArgs,
    seed: u64,
    max_resamples: Option<u64>,
    out: &mut String,
) -> Result<i32, Failure> {
    let budget = max_resamples.unwrap_or(50 * g.n() as u64);
    let run = moser_tardos(g, colors, ab.a, ab.b, seed, budget)?;
    let cert = extract_dominating(g, &run.coloring, ab.a, ab.b)?;
    let sizes = run.coloring.class_sizes();
    match output {
        Output::Json => {
            let v = json!({
                "schema": SCHEMA,
                "command": "lll-run",
                "N": colors,
                "seed": seed,
                "resamples": run.resamples,
                "class_sizes": sizes,
                "coloring": run.coloring.colors,
                "certificate": certificate_json(&cert),
            });
            out.push_str(&format!("{v}\n"));
        }
        _ => {
            out.push_str(&format!("N\t{colors}\n"));
            out.push_str(&format!("resamples\t{}\n", run.resamples));
            out.push_str(&format!("class_sizes\t{}\n", join(&sizes, " ")));
            out.push_str(&format!(
                "size\t{} (bound {} n)\n",
                cert.size(),
                cert.claimed_bound.expect("lll certificates carry a bound")
            ));
            out.push_str(&format!("verified\t{}\n", cert.verified));
            out.push_str(&format!("set\t{}\n", join(&cert.set, " ")));
        }
    }
    Ok(EXIT_OK)
}

fn bound_json(r: &BoundReport) -> Value {
    let mut v = serde_json::to_value(r).expect("bound report serializes");
    v["fraction"] = json!(r.fraction.map(|f| [*f.numer(), *f.denom()]));
    v
}

fn bound_cells(r: &BoundReport) -> Vec<String> {
    let dash = || "-".to_string();
    let (lll_cells, fraction) = match &r.lll {
        Some(detail) => {
            let (pn, pd) = big_parts(&detail.p);
            (
                vec![
                    detail.params.delta.to_string(),
                    detail.params.max_delta.to_string(),
                    r.a.to_string(),
                    r.b.to_string(),
                    detail.minimal_n.to_string(),
                ],
                Some((pn, pd, to_decimal(&detail.condition_value, 20))),
            )
        }
        None => (vec![dash(), dash(), r.a.to_string(), r.b.to_string(), dash()], None),
    };
    let mut cells = vec![r.label.clone()];
    cells.extend(lll_cells);
    match r.fraction {
        Some(f) => cells.extend([f.numer().to_string(), f.denom().to_string()]),
        None => cells.extend([dash(), dash()]),
    }
    match fraction {
        Some((pn, pd, dec)) => cells.extend([pn, pd, dec]),
        None => cells.extend([dash(), dash(), dash()]),
    }
    cells.push(r.value.map_or_else(dash, |v| format!("{v}")));
    cells.push(r.applicable.to_string());
    cells.push(r.reason.clone().unwrap_or_default());
    cells
}

fn cmd_bounds(output: Output, g: &Graph, ab: &AbArgs, opts: &CompareOptions, out: &mut String) -> Result<i32, Failure> {
    let reports = compare_all(g, ab.a, ab.b, opts);
    let infeasible = is_infeasible(&reports);
    match output {
        Output::Json => {
            let v = json!({
                "schema": SCHEMA,
                "command": "bounds",
                "n": g.n(),
                "a": ab.a,
                "b": ab.b,
                "infeasible": infeasible,
                "reports": reports.iter().map(bound_json).collect::<Vec<_>>(),
            });
            out.push_str(&format!("{v}\n"));
        }
        Output::Tsv => {
            let mut header = vec!["method"];
            header.extend(TABLE_HEADER);
            header.extend(["value", "applicable", "note"]);
            out.push_str(&header.join("\t"));
            out.push('\n');
            for r in &reports {
                out.push_str(&bound_cells(r).join("\t"));
                out.push('\n');
            }
        }
        Output::Text => {
            for r in &reports {
                let value = r.value.map_or("-".to_string(), |v| format!("{v}"));
                let mut flags = Vec::new();
                if r.equality {
                    flags.push("exact");
                }
                if r.vacuous {
                    flags.push("vacuous");
                }
                if !r.applicable {
                    flags.push("n/a");
                }
                out.push_str(&format!(
                    "{:<32}\t{value}\t{}\t{}\n",
                    r.label,
                    flags.join(","),
                    r.reason.as_deref().unwrap_or("")
                ));
            }
        }
    }
    if infeasible {
        return Err(Failure {
            code: EXIT_INFEASIBLE,
            kind: "infeasible",
            message: format!("no ({},{})-dominating set exists", ab.a, ab.b),
        });
    }
    Ok(EXIT_OK)
}
