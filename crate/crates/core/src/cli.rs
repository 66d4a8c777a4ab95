//! The `tdrefine` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{input_decomposition, run_job, run_suite, SUITES};
use crate::certify::Mode;
use crate::decomp::{slick_witness, validate_as, Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{generate, Family, Graph, VertexSet, Weight, Weighting};
use crate::io::{parse_gr, parse_td, write_gr, write_td};
use crate::oracle::{exact_treewidth_with, verify_decomposition_bruteforce, OracleBudget, Verdict};
use crate::separators::{gen_separation, separation_q, treewidth_sep};

#[derive(Debug, Parser)]
#[command(name = "tdrefine", version, about = "Refine tree-decompositions to bounded spread, order and degree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph in `.gr` format.
    Gen(GenArgs),
    /// Build a refined decomposition of a graph.
    Refine(RefineArgs),
    /// Check a `.td` file against a graph.
    Verify(VerifyArgs),
    /// Compute a balanced separator.
    Separate(SeparateArgs),
    /// Exact treewidth and brute-force verification for small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run every mode on a named corpus and emit stats as JSON lines.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// path, cycle, grid, fan, complete, random_gnm, random_ktree_partial or tree_random.
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge count for random_gnm; column count for grid.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Overridden by the TDREFINE_SEED environment variable.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Slick,
    Small,
    SlickSmall,
    Weak,
    Combined,
    Partition,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Slick => Mode::Slick,
            ModeArg::Small => Mode::Small,
            ModeArg::SlickSmall => Mode::SlickSmall,
            ModeArg::Weak => Mode::Weak,
            ModeArg::Combined => Mode::Combined,
            ModeArg::Partition => Mode::Partition,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Strong,
    Weak,
    Partition,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Strong => Kind::Strong,
            KindArg::Weak => Kind::Weak,
            KindArg::Partition => Kind::Partition,
        }
    }
}

#[derive(Debug, Args)]
pub struct RefineArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    /// Width parameter; defaults to the input width (plus one for weak,
    /// combined and partition).
    #[arg(long)]
    pub k: Option<usize>,
    /// Slickness parameter of the weak mode.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Input decomposition; computed when absent.
    #[arg(long)]
    pub td: Option<PathBuf>,
    /// Graph in `.gr` format; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Append a JSON stats line to this file.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Skip the final independent certification.
    #[arg(long)]
    pub no_verify: bool,
    /// Record wall time in the stats line.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = KindArg::Strong)]
    pub kind: KindArg,
    /// Also require the decomposition to be S-slick.
    #[arg(long)]
    pub slick: Option<usize>,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    pub graph: PathBuf,
    pub td: PathBuf,
}

#[derive(Debug, Args)]
pub struct SeparateArgs {
    /// Balance parameter, e.g. `2/3` or `0.5`.
    #[arg(long, conflicts_with = "q", required_unless_present = "q")]
    pub beta: Option<String>,
    /// Number of bags in a treewidth separator.
    #[arg(long)]
    pub q: Option<usize>,
    /// Vertex weights, one `<v> <w>` line per vertex (1-indexed, `w` a
    /// non-negative rational); absent vertices weigh 0. Default: all 1.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    #[arg(long)]
    pub td: Option<PathBuf>,
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Exact treewidth (at most 18 vertices).
    Tw {
        input: Option<PathBuf>,
        /// Write the witness decomposition here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Brute-force check of a decomposition.
    Verify {
        #[arg(long, value_enum, default_value_t = KindArg::Strong)]
        kind: KindArg,
        graph: PathBuf,
        td: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Write stats here instead of standard output.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code: 0 on success, 1 on a user error or a failed
/// check, 2 when an internal certificate fails.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text)?,
        _ => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_graph(path: Option<&Path>) -> Result<Graph> {
    let gr = parse_gr(&read_input(path)?)?;
    for w in &gr.warnings {
        eprintln!("warning: {w}");
    }
    Ok(gr.graph)
}

fn read_td(path: &Path, g: &Graph, kind: Kind) -> Result<TreeDecomposition> {
    let f = parse_td(&fs::read_to_string(path)?, kind)?;
    if f.n != g.n() {
        return Err(Error::InvalidInput(format!("decomposition is for {} vertices, graph has {}", f.n, g.n())));
    }
    Ok(f.td)
}

fn supplied_or_computed(path: Option<&Path>, g: &Graph) -> Result<TreeDecomposition> {
    match path {
        Some(p) => read_td(p, g, Kind::Strong),
        None => Ok(input_decomposition(None, g)),
    }
}

/// Parses `a`, `a/b` or a decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Weight> {
    let bad = || Error::InvalidInput(format!("`{s}` is not a rational number"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let denom = 10i64.pow(frac.len() as u32);
        let whole: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let part: i64 = frac.parse().map_err(|_| bad())?;
        return Ok(Weight::new(whole * denom + part, denom));
    }
    s.parse().map_err(|_| bad())
}

fn parse_weights(text: &str, g: &Graph) -> Result<Weighting> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] | ["c", ..] => continue,
            [v, w] => {
                let v: usize = v.parse().map_err(|_| Error::Parse { line: i + 1, msg: format!("bad vertex `{v}`") })?;
                if v == 0 || v > g.n() {
                    return Err(Error::Parse { line: i + 1, msg: format!("vertex {v} out of range") });
                }
                entries.push((v - 1, parse_rational(w)?));
            }
            _ => return Err(Error::Parse { line: i + 1, msg: "expected `<v> <w>`".into() }),
        }
    }
    Weighting::new(g.vertices().map(|v| (v, Weight::from(0))).chain(entries))
}

fn seed(default: u64) -> Result<u64> {
    match std::env::var("TDREFINE_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Error::InvalidInput(format!("TDREFINE_SEED `{s}` is not an integer"))),
        Err(_) => Ok(default),
    }
}

fn one_indexed(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

#[derive(Serialize)]
struct SeparatorOutput {
    x_set: Vec<usize>,
    parts: Vec<Vec<usize>>,
    x_size_bound: usize,
    /// Bound on the weight of each part outside `X`, as `a/b`.
    part_weight_bound: String,
    part_count_bound: Option<usize>,
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Gen(a) => {
            let family = Family::from_name(&a.family, a.n, a.m, a.k, a.p)?;
            let g = generate(&family, seed(a.seed)?)?;
            write_output(a.output.as_deref(), &write_gr(&g))?;
            Ok(0)
        }
        Command::Refine(a) => {
            let g = read_graph(a.input.as_deref())?;
            let td = supplied_or_computed(a.td.as_deref(), &g)?;
            let mode = Mode::from(a.mode);
            let id = a.input.as_ref().map_or_else(|| "stdin".to_string(), |p| p.display().to_string());
            let (out, mut record) = if a.no_verify {
                let k = a.k.unwrap_or_else(|| mode.default_k(td.width()));
                let (out, trace) = crate::certify::run(mode, &g, &td, k, a.d)?;
                let record = crate::certify::StatsRecord {
                    graph: id,
                    n: g.n(),
                    m: g.m(),
                    mode,
                    k,
                    d: a.d,
                    input_width: td.width(),
                    achieved: None,
                    bounds: mode.bounds(&g, k, a.d),
                    wall_ms: None,
                    trace,
                };
                (out, record)
            } else {
                run_job(&id, &g, &td, mode, a.k, a.d, a.timing)?
            };
            if !a.timing {
                record.wall_ms = None;
            }
            write_output(a.output.as_deref(), &write_td(&out, g.n()))?;
            if let Some(path) = &a.stats {
                let mut f = fs::OpenOptions::new().create(true).append(true).open(path)?;
                writeln!(f, "{}", record.to_json_line())?;
            }
            Ok(0)
        }
        Command::Verify(a) => {
            let g = read_graph(Some(&a.graph))?;
            let kind = Kind::from(a.kind);
            let td = read_td(&a.td, &g, kind)?;
            let report = validate_as(&td, &g, kind)?;
            let mut ok = report.is_valid();
            if a.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if let Some(s) = a.slick {
                if s == 0 {
                    return Err(Error::Parameter("--slick needs a level of at least 1".into()));
                }
                if let Some(w) = slick_witness(&td, &g, s) {
                    ok = false;
                    println!(
                        "not {s}-slick: vertex {} shared by bags {} and {} has {} new neighbours below",
                        w.vertex + 1,
                        w.parent + 1,
                        w.child + 1,
                        w.new_neighbors
                    );
                } else {
                    println!("{s}-slick");
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Separate(a) => {
            let g = read_graph(a.input.as_deref())?;
            let td = supplied_or_computed(a.td.as_deref(), &g)?;
            let gamma = match &a.weights {
                Some(p) => parse_weights(&fs::read_to_string(p)?, &g)?,
                None => Weighting::uniform(&g),
            };
            let out = match (a.q, &a.beta) {
                (Some(q), _) => {
                    let x = treewidth_sep(&g, &gamma, &td, q)?;
                    let parts = g.components_avoiding(&x).iter().map(one_indexed).collect();
                    SeparatorOutput {
                        x_set: one_indexed(&x),
                        parts,
                        x_size_bound: q * (td.width() + 1),
                        part_weight_bound: (gamma.total() / Weight::from(q as i64 + 1)).to_string(),
                        part_count_bound: None,
                    }
                }
                (None, Some(beta)) => {
                    let beta = parse_rational(beta)?;
                    let sep = gen_separation(&g, &gamma, &td, beta)?;
                    let m_cap = ((Weight::from(2) / beta).ceil().to_integer() - 1).max(1) as usize;
                    SeparatorOutput {
                        x_set: one_indexed(&sep.x_set),
                        parts: sep.parts.iter().map(one_indexed).collect(),
                        x_size_bound: separation_q(beta) * (td.width() + 1),
                        part_weight_bound: (beta * gamma.total()).to_string(),
                        part_count_bound: Some(m_cap),
                    }
                }
                (None, None) => return Err(Error::InvalidInput("give --beta or --q".into())),
            };
            println!("{}", serde_json::to_string(&out).expect("separator serializes"));
            Ok(0)
        }
        Command::Oracle(OracleCommand::Tw { input, output }) => {
            let g = read_graph(input.as_deref())?;
            let exact = exact_treewidth_with(&g, OracleBudget::default())?;
            println!("{}", exact.treewidth);
            if let Some(p) = output {
                fs::write(p, write_td(&exact.witness, g.n()))?;
            }
            Ok(0)
        }
        Command::Oracle(OracleCommand::Verify { kind, graph, td }) => {
            let g = read_graph(Some(&graph))?;
            let kind = Kind::from(kind);
            let td = read_td(&td, &g, kind)?;
            match verify_decomposition_bruteforce(&g, &td, kind) {
                Verdict::Holds => {
                    println!("holds");
                    Ok(0)
                }
                Verdict::Fails(why) => {
                    println!("fails: {why}");
                    Ok(1)
                }
            }
        }
        Command::Bench(a) => {
            if !SUITES.contains(&a.suite.as_str()) {
                return Err(Error::InvalidInput(format!("unknown suite `{}`; expected one of {}", a.suite, SUITES.join(", "))));
            }
            let records = run_suite(&a.suite, &Mode::ALL, a.d, a.timing)?;
            let text: String = records.iter().map(|r| r.to_json_line() + "\n").collect();
            write_output(a.stats.as_deref(), &text)?;
            Ok(0)
        }
    }
}
