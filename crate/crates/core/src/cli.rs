//! The `tkplex` command line: `enumerate`, `degeneracy` and `oracle`.
//!
//! Exit codes: 0 success, 1 output write failure, 2 invalid parameters,
//! 3 unreadable or malformed input, 4 time limit reached, 5 oracle mismatch.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand};
use thiserror::Error;

use crate::degeneracy::{delta_slice_degeneracy, plex_count_upper_bound, static_degeneracy};
use crate::error::{GraphError, ParamError};
use crate::frames::FrameDomain;
use crate::graph::{parse_edge_list, ColumnSpec, ParseOptions, TemporalGraph, Vertex};
use crate::interval::Interval;
use crate::oracle;
use crate::plex::{enumerate_maximal_plexes, PlexRecord, PlexSink, RunStats, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WRITE: i32 = 1;
pub const EXIT_PARAM: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "tkplex",
    version,
    about = "Maximal Δ-k-plexes in temporal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate all maximal Δ-k-plexes.
    Enumerate(EnumerateArgs),
    /// Report static and Δ-slice degeneracy.
    Degeneracy(DegeneracyArgs),
    /// Compare a plex listing against brute-force ground truth.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge list, one `t u v` line per edge; `-` reads standard input.
    input: PathBuf,
    /// Timestamp resolution: raw times are mapped to `(t - min) / r + 1`.
    #[arg(long, default_value_t = 1)]
    resolution: u64,
    /// Column order, e.g. `t,u,v` or `u,v,t`; `_` skips a column.
    #[arg(long, default_value = "t,u,v")]
    columns: ColumnSpec,
    /// Drop self-loops instead of rejecting the input.
    #[arg(long)]
    skip_self_loops: bool,
    /// Reject repeated edges instead of dropping them.
    #[arg(long)]
    strict_duplicates: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("window").required(true).multiple(true).args(["delta", "delta_exp"])))]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Frame width Δ in normalized time steps.
    #[arg(long)]
    delta: Option<u32>,
    /// Scaled width: Δ = max(0, round(5^e · ω / (5m))). Ignored when --delta is given.
    #[arg(long, allow_hyphen_values = true)]
    delta_exp: Option<i32>,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    pivoting: bool,
    /// Report only plexes of order at least 2k+1 and prune unconnected candidates.
    #[arg(long)]
    connected: bool,
    /// Wall-clock limit in seconds; partial output is kept.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Plex lines go here; `-` means standard output. Without it only counts are kept.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Key=value statistics file.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Dataset name for the report; defaults to the input file stem.
    #[arg(long)]
    name: Option<String>,
    /// Also compute the Δ-slice degeneracy and the resulting plex-count bound.
    #[arg(long)]
    bound: bool,
}

#[derive(Debug, Args)]
struct DegeneracyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Frame widths, comma separated.
    #[arg(long, value_delimiter = ',')]
    delta: Vec<u32>,
    /// Scaled frame widths given by exponent, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    delta_exp: Vec<i32>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    delta: u32,
    #[arg(long)]
    k: u32,
    /// Listing produced by `enumerate --output`.
    #[arg(long)]
    plexes: PathBuf,
    /// Compare against plexes of order at least 2k+1 only.
    #[arg(long, conflicts_with = "min_size")]
    connected: bool,
    /// Compare against plexes of at least this order only.
    #[arg(long)]
    min_size: Option<usize>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}, line {line}: {reason}")]
    Listing {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Param(_) | CliError::Usage(_) => EXIT_PARAM,
            CliError::Graph(_) | CliError::Read { .. } | CliError::Listing { .. } => EXIT_PARSE,
            CliError::Write { .. } => EXIT_WRITE,
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Parses `args` (program name first) and executes the subcommand.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARAM } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(&a),
        Command::Degeneracy(a) => cmd_degeneracy(&a),
        Command::Oracle(a) => cmd_oracle(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("tkplex: {e}");
            e.exit_code()
        }
    }
}

/// Δ = max(0, round(5^e · ω / (5m))).
pub fn scaled_delta(exponent: i32, lifetime: u32, edges: usize) -> Result<u32, ParamError> {
    if edges == 0 {
        return Err(ParamError::NoEdgesForScaling);
    }
    let value = 5f64.powi(exponent) * lifetime as f64 / (5.0 * edges as f64);
    let rounded = value.round().max(0.0);
    if rounded >= lifetime as f64 {
        return Err(ParamError::DeltaTooLarge {
            delta: rounded.min(u32::MAX as f64) as u32,
            lifetime,
        });
    }
    Ok(rounded as u32)
}

/// One output line: sorted labels, then interval start and end.
pub fn render_record(graph: &TemporalGraph, record: &PlexRecord) -> String {
    let mut labels: Vec<&str> = record.vertices.iter().map(|&v| graph.label(v)).collect();
    labels.sort_unstable();
    format!(
        "{} {} {}",
        labels.join(" "),
        record.interval.start(),
        record.interval.end()
    )
}

fn load_graph(args: &InputArgs) -> Result<TemporalGraph, CliError> {
    let text = read_text(&args.input)?;
    let opts = ParseOptions {
        columns: args.columns,
        dedupe: !args.strict_duplicates,
        skip_self_loops: args.skip_self_loops,
        resolution: args.resolution,
    };
    Ok(parse_edge_list(&text, &opts)?)
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    res.map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text)
}

fn open_output(path: &Path) -> Result<Box<dyn Write>, CliError> {
    if path == Path::new("-") {
        return Ok(Box::new(BufWriter::new(io::stdout().lock())));
    }
    let file = File::create(path).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })?;
    Ok(Box::new(BufWriter::new(file)))
}

/// Streams records as lines and keeps the first write error.
struct LineSink<'g> {
    graph: &'g TemporalGraph,
    out: Option<Box<dyn Write>>,
    error: Option<io::Error>,
}

impl PlexSink for LineSink<'_> {
    fn accept(&mut self, record: PlexRecord) {
        if self.error.is_some() {
            return;
        }
        if let Some(out) = self.out.as_mut() {
            if let Err(e) = writeln!(out, "{}", render_record(self.graph, &record)) {
                self.error = Some(e);
            }
        }
    }
}

struct Report<'a> {
    name: &'a str,
    graph: &'a TemporalGraph,
    config: &'a SearchConfig,
    stats: &'a RunStats,
    bound: Option<(u32, String)>,
}

impl Report<'_> {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let g = self.graph;
        let c = self.config;
        let s = self.stats;
        let mut f = vec![
            ("dataset", self.name.to_string()),
            ("n", g.vertex_count().to_string()),
            ("m", g.edge_count().to_string()),
            ("lifetime", g.lifetime().to_string()),
            ("delta", c.delta.to_string()),
            ("k", c.k.to_string()),
            ("pivoting", c.pivoting.to_string()),
            ("connected", c.connectedness.to_string()),
            ("plexes", s.plex_count.to_string()),
            ("max_plex_order", s.max_plex_order.to_string()),
            ("max_lifetime", s.max_lifetime_length.to_string()),
            ("recursive_calls", s.recursive_calls.to_string()),
            ("wall_seconds", format!("{:.6}", s.wall_time_seconds)),
            ("timed_out", s.timed_out.to_string()),
        ];
        if let Some((d, bound)) = &self.bound {
            f.push(("degeneracy", d.to_string()));
            f.push(("bound", bound.clone()));
        }
        f
    }

    fn key_values(&self) -> String {
        self.fields()
            .into_iter()
            .fold(String::new(), |mut out, (k, v)| {
                let _ = writeln!(out, "{k}={v}");
                out
            })
    }

    fn table(&self) -> String {
        let flags = match (self.config.pivoting, self.config.connectedness) {
            (false, false) => "-",
            (true, false) => "pivot",
            (false, true) => "conn",
            (true, true) => "pivot+conn",
        };
        let s = self.stats;
        let mut cols: Vec<(&str, String)> = vec![
            ("dataset", self.name.to_string()),
            ("n", self.graph.vertex_count().to_string()),
            ("m", self.graph.edge_count().to_string()),
            ("ω", self.graph.lifetime().to_string()),
            ("Δ", self.config.delta.to_string()),
            ("k", self.config.k.to_string()),
            ("flags", flags.to_string()),
            ("#R", s.plex_count.to_string()),
            ("|C|max", s.max_plex_order.to_string()),
            ("lifetime", s.max_lifetime_length.to_string()),
            ("c", s.recursive_calls.to_string()),
            ("t", format!("{:.3}", s.wall_time_seconds)),
            ("timed_out", s.timed_out.to_string()),
        ];
        if let Some((d, bound)) = &self.bound {
            cols.push(("d", d.to_string()));
            cols.push(("bound", bound.clone()));
        }
        render_table(&[
            cols.iter().map(|(h, _)| h.to_string()).collect(),
            cols.into_iter().map(|(_, v)| v).collect(),
        ])
    }
}

fn render_table(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn cmd_enumerate(a: &EnumerateArgs) -> Result<i32, CliError> {
    let graph = load_graph(&a.input)?;
    let delta = match (a.delta, a.delta_exp) {
        (Some(d), _) => d,
        (None, Some(e)) => scaled_delta(e, graph.lifetime(), graph.edge_count())?,
        (None, None) => unreachable!("clap requires one of the two"),
    };
    let time_limit = match a.time_limit {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(CliError::Usage(format!("invalid time limit {s}")))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let config = SearchConfig::new(delta, a.k)
        .with_pivoting(a.pivoting)
        .with_connectedness(a.connected)
        .with_time_limit(time_limit);
    let domain = config.validate(&graph)?;

    let out = a.output.as_deref().map(open_output).transpose()?;
    let mut sink = LineSink {
        graph: &graph,
        out,
        error: None,
    };
    let stats = enumerate_maximal_plexes(&graph, &config, &mut sink)?;
    let write_failed = |source| CliError::Write {
        path: a
            .output
            .as_ref()
            .map_or_else(String::new, |p| p.display().to_string()),
        source,
    };
    if let Some(e) = sink.error.take() {
        return Err(write_failed(e));
    }
    if let Some(out) = sink.out.as_mut() {
        out.flush().map_err(write_failed)?;
    }
    drop(sink);

    let bound = a.bound.then(|| {
        let d = delta_slice_degeneracy(&graph, domain);
        let b = plex_count_upper_bound(
            graph.vertex_count() as u64,
            config.k,
            d,
            graph.edge_count() as u64,
            graph.lifetime() as u64,
        );
        (d, b.to_string())
    });
    let name = a.name.clone().unwrap_or_else(|| {
        a.input
            .input
            .file_stem()
            .map_or_else(|| "stdin".to_string(), |s| s.to_string_lossy().into_owned())
    });
    let report = Report {
        name: &name,
        graph: &graph,
        config: &config,
        stats: &stats,
        bound,
    };
    if a.output.as_deref() == Some(Path::new("-")) {
        eprint!("{}", report.table());
    } else {
        print!("{}", report.table());
    }
    if let Some(path) = &a.stats {
        std::fs::write(path, report.key_values()).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(if stats.timed_out {
        EXIT_TIMEOUT
    } else {
        EXIT_OK
    })
}

fn cmd_degeneracy(a: &DegeneracyArgs) -> Result<i32, CliError> {
    let graph = load_graph(&a.input)?;
    let mut deltas = a.delta.clone();
    for &e in &a.delta_exp {
        deltas.push(scaled_delta(e, graph.lifetime(), graph.edge_count())?);
    }
    let mut rows = vec![
        vec!["delta".to_string(), "degeneracy".to_string()],
        vec!["static".to_string(), static_degeneracy(&graph).to_string()],
    ];
    for delta in deltas {
        let domain = FrameDomain::for_graph(&graph, delta)?;
        rows.push(vec![
            delta.to_string(),
            delta_slice_degeneracy(&graph, domain).to_string(),
        ]);
    }
    print!("{}", render_table(&rows));
    Ok(EXIT_OK)
}

/// Parses a listing into records; a repeated line is reported as an error.
fn read_listing(graph: &TemporalGraph, path: &Path) -> Result<BTreeSet<PlexRecord>, CliError> {
    let text = read_text(path)?;
    let mut out = BTreeSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |reason: String| CliError::Listing {
            path: path.display().to_string(),
            line: idx + 1,
            reason,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 3 {
            return Err(fail("expected labels followed by start and end".into()));
        }
        let (labels, bounds) = tokens.split_at(tokens.len() - 2);
        let start: u32 = bounds[0]
            .parse()
            .map_err(|_| fail(format!("bad start '{}'", bounds[0])))?;
        let end: u32 = bounds[1]
            .parse()
            .map_err(|_| fail(format!("bad end '{}'", bounds[1])))?;
        let interval = Interval::try_new(start, end)
            .filter(|_| start >= 1)
            .ok_or_else(|| fail(format!("bad interval [{start},{end}]")))?;
        let mut vertices: Vec<Vertex> = labels
            .iter()
            .map(|l| {
                graph
                    .vertex_by_label(l)
                    .ok_or_else(|| fail(format!("unknown vertex '{l}'")))
            })
            .collect::<Result<_, _>>()?;
        vertices.sort_unstable();
        if vertices.windows(2).any(|p| p[0] == p[1]) {
            return Err(fail("repeated vertex".into()));
        }
        if !out.insert(PlexRecord { vertices, interval }) {
            return Err(fail("repeated record".into()));
        }
    }
    Ok(out)
}

fn cmd_oracle(a: &OracleArgs) -> Result<i32, CliError> {
    let graph = load_graph(&a.input)?;
    let given = read_listing(&graph, &a.plexes)?;
    let truth = oracle::enumerate_all_maximal(&graph, a.delta, a.k)?;
    let min_size = match (a.connected, a.min_size) {
        (true, _) => 2 * a.k as usize + 1,
        (false, Some(m)) => m,
        (false, None) => 1,
    };
    let truth: BTreeSet<PlexRecord> = truth
        .plexes
        .into_iter()
        .filter(|r| r.vertices.len() >= min_size)
        .collect();
    let missing: Vec<&PlexRecord> = truth.difference(&given).collect();
    let extra: Vec<&PlexRecord> = given.difference(&truth).collect();
    for r in &missing {
        println!("missing: {}", render_record(&graph, r));
    }
    for r in &extra {
        println!("extra: {}", render_record(&graph, r));
    }
    println!(
        "oracle={} given={} missing={} extra={}",
        truth.len(),
        given.len(),
        missing.len(),
        extra.len()
    );
    Ok(if missing.is_empty() && extra.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
