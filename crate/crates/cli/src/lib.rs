//! Command-line front end. `main.rs` only parses arguments and calls [`run`].

pub mod report;

use std::error::Error as StdError;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nonsep::format::{parse_dimacs, parse_instance, write_dimacs, write_instance, Instance};
use nonsep::generator::{gen_chordal, gen_cnf, gen_ktree, GenConfig};
use nonsep::oracle::{Oracle, DEFAULT_VERTEX_CAP};
use nonsep::reduction::{reduce, ReducedInstance};
use nonsep::{bridges, decide, is_chordal, solve_detailed, Error, Graph, Path, SolveReport};
use serde::{Deserialize, Serialize};

use report::{timings, Artifacts, RunReport, RunResult, Timing};

pub const EXIT_ANSWERED: i32 = 0;
pub const EXIT_NO_PATH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

type Result<T> = std::result::Result<T, Box<dyn StdError>>;

#[derive(Debug, Parser)]
#[command(name = "nonsep", version, about = "Shortest non-separating s-t paths on chordal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shortest non-separating s-t path.
    Solve(SolveArgs),
    /// Whether any non-separating s-t path exists.
    Decide(SolveArgs),
    /// Brute-force reference answers for small graphs.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Generate graphs or formulas.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Build the gadget graph of a DIMACS 3-CNF.
    Reduce(ReduceArgs),
    /// Lint a graph or CNF file.
    Check(InputArg),
    /// Time the solver on generated families; CSV to stdout.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Input file; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Terminals {
    /// Source, overriding the file's `s` line.
    #[arg(long)]
    pub s: Option<usize>,
    /// Target, overriding the file's `t` line.
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[command(flatten)]
    pub terminals: Terminals,
    /// Emit a JSON run report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Dump every pipeline stage to stderr.
    #[arg(long)]
    pub trace: bool,
    /// Answer non-chordal input by exhaustive search.
    #[arg(long)]
    pub force_oracle: bool,
    /// Vertex cap for --force-oracle.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    pub cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum OracleOp {
    /// Exhaustive shortest non-separating path.
    ShortestNonsep(OracleArgs),
    /// Every directed separator path.
    Separators(OracleArgs),
    /// Flags of one path (--path) or of every separator path.
    Classify {
        #[command(flatten)]
        base: OracleArgs,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<usize>>,
    },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[command(flatten)]
    pub terminals: Terminals,
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    pub cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Random connected chordal graph.
    Chordal {
        #[arg(long)]
        n: usize,
        /// Largest clique a new vertex attaches to.
        #[arg(long, default_value_t = 3)]
        clique: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random k-tree.
    Ktree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random 3-CNF in DIMACS form.
    Cnf {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GenCommon {
    #[arg(long, default_value_t = 1)]
    pub wmin: u64,
    #[arg(long, default_value_t = 32)]
    pub wmax: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Source written to the file (default 0).
    #[arg(long)]
    pub s: Option<usize>,
    /// Target written to the file (default n-1).
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub input: InputArg,
    /// Graph output; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Mapping sidecar (JSON). Defaults to `<out>.map.json`, or standard
    /// error when the graph goes to standard output.
    #[arg(long)]
    pub map: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Ktree,
    Chordal,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Family::Ktree)]
    pub family: Family,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub sizes: Vec<usize>,
    /// k for k-trees, attachment clique size for chordal graphs.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Runs per size; the median run is reported.
    #[arg(long, default_value_t = 3)]
    pub repeat: usize,
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(&args, out, err),
        Command::Decide(args) => cmd_decide(&args, out),
        Command::Oracle { op } => cmd_oracle(&op, out),
        Command::Gen { kind } => cmd_gen(&kind, out),
        Command::Reduce(args) => cmd_reduce(&args, out, err),
        Command::Check(args) => cmd_check(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn read_input(input: &InputArg) -> Result<String> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()).into()),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn terminals(inst: &Instance, args: &Terminals) -> Result<(usize, usize)> {
    let s = args.s.or(inst.s).ok_or("no source vertex: add an `s` line or pass --s")?;
    let t = args.t.or(inst.t).ok_or("no target vertex: add a `t` line or pass --t")?;
    Ok((s, t))
}

fn micros_since(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn exit_code(result: &RunResult) -> i32 {
    match result {
        RunResult::Path { .. } | RunResult::Decision { exists: true, .. } => EXIT_ANSWERED,
        RunResult::None | RunResult::Decision { exists: false, .. } => EXIT_NO_PATH,
    }
}

fn print_result(out: &mut dyn Write, result: &RunResult) -> io::Result<()> {
    match result {
        RunResult::Path { vertices, length } => {
            writeln!(out, "PATH {} {}", vertices.len(), join(vertices))?;
            writeln!(out, "LENGTH {length}")
        }
        RunResult::None => writeln!(out, "NONE"),
        RunResult::Decision { witness: Some(w), .. } => writeln!(out, "YES {}", join(w)),
        RunResult::Decision { .. } => writeln!(out, "NO"),
    }
}

fn emit(out: &mut dyn Write, report: &RunReport, json: bool) -> Result<i32> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(report)?)?;
    } else {
        print_result(out, &report.result)?;
    }
    Ok(exit_code(&report.result))
}

/// Non-chordal graphs are refused unless the caller opted into brute force.
fn oracle_fallback<'g>(g: &'g Graph, args: &SolveArgs) -> Result<Option<Oracle<'g>>> {
    if is_chordal(g) {
        return Ok(None);
    }
    if !args.force_oracle {
        return Err(Box::new(Error::NotChordal));
    }
    if !g.is_connected() {
        return Err(Box::new(Error::Disconnected));
    }
    Ok(Some(Oracle::with_cap(g, args.cap)?))
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let inst = parse_instance(&read_input(&args.input)?)?;
    let (s, t) = terminals(&inst, &args.terminals)?;
    let g = &inst.graph;
    let mut report = RunReport {
        command: "solve".into(),
        n: g.vertex_count(),
        m: g.edge_count(),
        s,
        t,
        result: RunResult::None,
        timings: Vec::new(),
        artifacts: None,
    };
    if let Some(oracle) = oracle_fallback(g, args)? {
        let start = Instant::now();
        let path = oracle.shortest_nonseparating(s, t)?;
        report.timings.push(Timing { stage: "oracle".into(), micros: micros_since(start) });
        report.result = RunResult::from_path(path.as_ref());
        if args.trace {
            writeln!(err, "[trace] oracle {}us {}", report.timings[0].micros, describe(path.as_ref()))?;
        }
    } else {
        let detail = solve_detailed(g, s, t)?;
        if args.trace {
            write_trace(err, &detail)?;
        }
        report.result = RunResult::from_path(detail.path.as_ref());
        report.timings = timings(&detail);
        if args.json || args.trace {
            report.artifacts = Some(Artifacts::from_report(&detail));
        }
    }
    emit(out, &report, args.json)
}

fn describe(p: Option<&Path>) -> String {
    p.map_or("none".into(), |p| format!("[{}] length {}", join(p.vertices()), p.length()))
}

fn write_trace(err: &mut dyn Write, r: &SolveReport) -> io::Result<()> {
    for timing in &r.timings {
        let detail = match timing.stage {
            "prune" => format!("region {} vertices {} edges", r.region_vertices, r.region_edges),
            "bad_vertices" => format!("bad [{}]", join(&r.bad_vertices)),
            "p" => format!("P {}", describe(r.p.as_ref())),
            "x_st" => format!("{} member(s)", r.x_st.len()),
            "p0" => format!("P0 {}", describe(r.p0.as_ref())),
            "x_extra" => format!("{} member(s)", r.x_extra.len()),
            "aux" => r.aux.map_or(String::new(), |a| format!("{} nodes {} arcs", a.nodes, a.arcs)),
            "avoid" => format!("path {}", describe(r.path.as_ref())),
            _ => String::new(),
        };
        let line = format!("[trace] {} {}us {detail}", timing.stage, timing.micros);
        writeln!(err, "{}", line.trim_end())?;
        let members = match timing.stage {
            "x_st" => &r.x_st,
            "x_extra" => &r.x_extra,
            _ => continue,
        };
        for x in members {
            let side = match (x.s_side, x.t_side) {
                (true, true) => "st",
                (true, false) => "s",
                (false, true) => "t",
                _ => "-",
            };
            writeln!(err, "[trace]   [{}] side {side} interval {:?}", join(x.path.vertices()), x.p_interval)?;
        }
    }
    Ok(())
}

fn cmd_decide(args: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = parse_instance(&read_input(&args.input)?)?;
    let (s, t) = terminals(&inst, &args.terminals)?;
    let g = &inst.graph;
    let start = Instant::now();
    let witness = match oracle_fallback(g, args)? {
        Some(oracle) => oracle.shortest_nonseparating(s, t)?,
        None => decide(g, s, t)?.witness,
    };
    let report = RunReport {
        command: "decide".into(),
        n: g.vertex_count(),
        m: g.edge_count(),
        s,
        t,
        result: RunResult::Decision { exists: witness.is_some(), witness: witness.map(|w| w.vertices().to_vec()) },
        timings: vec![Timing { stage: "decide".into(), micros: micros_since(start) }],
        artifacts: None,
    };
    emit(out, &report, args.json)
}

fn load_for_oracle(args: &OracleArgs) -> Result<Instance> {
    let inst = parse_instance(&read_input(&args.input)?)?;
    if !inst.graph.is_connected() {
        return Err(Box::new(Error::Disconnected));
    }
    Ok(inst)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_oracle(op: &OracleOp, out: &mut dyn Write) -> Result<i32> {
    match op {
        OracleOp::ShortestNonsep(args) => {
            let inst = load_for_oracle(args)?;
            let (s, t) = terminals(&inst, &args.terminals)?;
            let path = Oracle::with_cap(&inst.graph, args.cap)?.shortest_nonseparating(s, t)?;
            let result = RunResult::from_path(path.as_ref());
            print_result(out, &result)?;
            Ok(exit_code(&result))
        }
        OracleOp::Separators(args) => {
            let inst = load_for_oracle(args)?;
            let seps = Oracle::with_cap(&inst.graph, args.cap)?.separator_paths();
            writeln!(out, "SEPARATORS {}", seps.len())?;
            for r in &seps {
                writeln!(out, "SEP {} {}", r.vertices().len(), join(r.vertices()))?;
            }
            Ok(EXIT_ANSWERED)
        }
        OracleOp::Classify { base, path } => {
            let inst = load_for_oracle(base)?;
            let (s, t) = terminals(&inst, &base.terminals)?;
            let g = &inst.graph;
            let oracle = Oracle::with_cap(g, base.cap)?;
            if let Some(vs) = path {
                let p = Path::new(g, vs.clone())?;
                let f = oracle.classify(s, t, &p);
                writeln!(out, "SEPARATING {}", yes_no(oracle.is_separating_path(&p)))?;
                writeln!(out, "USEFUL {}", yes_no(f.useful))?;
                writeln!(out, "TRAVERSABLE {}", yes_no(f.traversable))?;
                writeln!(out, "NORMAL {}", yes_no(f.normal))?;
                return Ok(EXIT_ANSWERED);
            }
            let seps = oracle.separator_paths();
            let flags = oracle.classify_all(s, t, &seps);
            for (r, f) in seps.iter().zip(flags) {
                writeln!(
                    out,
                    "SEP {} {} useful={} traversable={} normal={}",
                    r.vertices().len(),
                    join(r.vertices()),
                    u8::from(f.useful),
                    u8::from(f.traversable),
                    u8::from(f.normal)
                )?;
            }
            writeln!(out, "BAD {}", join(&oracle.bad_vertices(s, t)).trim_end())?;
            Ok(EXIT_ANSWERED)
        }
    }
}

fn default_terminals(n: usize, common: &GenCommon) -> (Option<usize>, Option<usize>) {
    if n < 2 {
        return (common.s, common.t);
    }
    (Some(common.s.unwrap_or(0)), Some(common.t.unwrap_or(n - 1)))
}

fn cmd_gen(kind: &GenKind, out: &mut dyn Write) -> Result<i32> {
    let (text, target) = match kind {
        GenKind::Chordal { n, clique, common } => {
            let cfg = GenConfig {
                vertex_count: *n,
                attachment_clique_max: *clique,
                weight_min: common.wmin,
                weight_max: common.wmax,
                seed: common.seed,
            };
            let (s, t) = default_terminals(*n, common);
            (write_instance(&gen_chordal(&cfg)?, s, t), &common.out)
        }
        GenKind::Ktree { n, k, common } => {
            let g = gen_ktree(*n, *k, (common.wmin, common.wmax), common.seed)?;
            let (s, t) = default_terminals(*n, common);
            (write_instance(&g, s, t), &common.out)
        }
        GenKind::Cnf { vars, clauses, seed, out: target } => (write_dimacs(&gen_cnf(*vars, *clauses, *seed)?), target),
    };
    write_output(target, &text, out)?;
    Ok(EXIT_ANSWERED)
}

/// Sidecar written by `reduce`: where each variable and clause ended up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMap {
    pub s: usize,
    pub t: usize,
    pub variables: Vec<VariableMap>,
    pub clauses: Vec<ClauseMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableMap {
    /// 1-based, as in DIMACS.
    pub variable: usize,
    /// Walked when the variable is true.
    pub a: Vec<usize>,
    /// Walked when the variable is false.
    pub a_bar: Vec<usize>,
    pub b: usize,
    pub bypass: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseMap {
    /// 0-based clause index.
    pub clause: usize,
    pub vertex: usize,
    /// Degree-2 vertices between the clause vertex and its literals' lanes.
    pub dummies: Vec<usize>,
}

impl ReductionMap {
    pub fn new(inst: &ReducedInstance) -> Self {
        let variables = inst
            .var_lanes
            .iter()
            .enumerate()
            .map(|(i, l)| VariableMap { variable: i + 1, a: l.a.clone(), a_bar: l.a_bar.clone(), b: l.b, bypass: l.bypass })
            .collect();
        // every clause contributes its three dummies consecutively
        let clauses = inst
            .clause_vertices
            .iter()
            .zip(inst.fat_edge_dummies.chunks(3))
            .enumerate()
            .map(|(clause, (&vertex, dummies))| ClauseMap { clause, vertex, dummies: dummies.to_vec() })
            .collect();
        ReductionMap { s: inst.s, t: inst.t, variables, clauses }
    }
}

fn cmd_reduce(args: &ReduceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cnf = parse_dimacs(&read_input(&args.input)?)?;
    let inst = reduce(&cnf)?;
    let mapping = serde_json::to_string_pretty(&ReductionMap::new(&inst))? + "\n";
    write_output(&args.out, &write_instance(&inst.graph, Some(inst.s), Some(inst.t)), out)?;
    let map_path = args.map.clone().or_else(|| args.out.as_deref().map(sidecar_path));
    match map_path {
        Some(p) => fs::write(&p, mapping).map_err(|e| format!("{}: {e}", p.display()))?,
        None => err.write_all(mapping.as_bytes())?,
    }
    Ok(EXIT_ANSWERED)
}

fn sidecar_path(out: &FsPath) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".map.json");
    PathBuf::from(name)
}

fn cmd_check(args: &InputArg, out: &mut dyn Write) -> Result<i32> {
    let text = read_input(args)?;
    let is_cnf = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'))
        .is_some_and(|l| l.starts_with("p cnf"));
    if is_cnf {
        let cnf = parse_dimacs(&text)?;
        writeln!(out, "FORMAT cnf vars={} clauses={}", cnf.num_vars(), cnf.clauses().len())?;
        writeln!(out, "OK")?;
        return Ok(EXIT_ANSWERED);
    }
    let inst = parse_instance(&text)?;
    let g = &inst.graph;
    writeln!(out, "FORMAT graph n={} m={}", g.vertex_count(), g.edge_count())?;
    let connected = g.is_connected();
    let chordal = is_chordal(g);
    writeln!(out, "CONNECTED {}", yes_no(connected))?;
    writeln!(out, "CHORDAL {}", yes_no(chordal))?;
    if connected {
        writeln!(out, "BRIDGES {}", bridges(g).len())?;
    }
    let terminals_ok = match (inst.s, inst.t) {
        (Some(s), Some(t)) => {
            let ok = s != t && g.check_vertex(s).is_ok() && g.check_vertex(t).is_ok();
            writeln!(out, "TERMINALS {s} {t} {}", if ok { "ok" } else { "invalid" })?;
            ok
        }
        _ => {
            writeln!(out, "TERMINALS missing")?;
            true
        }
    };
    let ok = connected && chordal && terminals_ok;
    writeln!(out, "{}", if ok { "OK" } else { "INVALID" })?;
    Ok(if ok { EXIT_ANSWERED } else { EXIT_INVALID })
}

const STAGES: [&str; 9] = ["validate", "prune", "bad_vertices", "p", "x_st", "p0", "x_extra", "aux", "avoid"];

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let mut csv = csv::Writer::from_writer(out);
    let mut header = vec!["family".to_string(), "n".into(), "m".into(), "k".into(), "seed".into(), "repeat".into()];
    header.extend(["length".into(), "total_us".into()]);
    header.extend(STAGES.iter().map(|s| format!("{s}_us")));
    header.push("ratio_to_prev".into());
    csv.write_record(&header)?;

    let mut previous: Option<u64> = None;
    for &n in &args.sizes {
        if n < 2 {
            return Err(format!("bench sizes must be at least 2, got {n}").into());
        }
        let g = match args.family {
            Family::Ktree => gen_ktree(n, args.k, nonsep::generator::DEFAULT_WEIGHTS, args.seed)?,
            Family::Chordal => gen_chordal(&GenConfig {
                vertex_count: n,
                attachment_clique_max: args.k,
                seed: args.seed,
                ..GenConfig::default()
            })?,
        };
        let mut runs: Vec<(u64, SolveReport)> = (0..args.repeat.max(1))
            .map(|_| {
                let start = Instant::now();
                let r = solve_detailed(&g, 0, n - 1);
                r.map(|r| (micros_since(start), r))
            })
            .collect::<std::result::Result<_, _>>()?;
        runs.sort_by_key(|r| r.0);
        let (total, report) = &runs[runs.len() / 2];
        let family = match args.family {
            Family::Ktree => "ktree",
            Family::Chordal => "chordal",
        };
        let mut row = vec![
            family.to_string(),
            n.to_string(),
            g.edge_count().to_string(),
            args.k.to_string(),
            args.seed.to_string(),
            runs.len().to_string(),
            report.path.as_ref().map_or(String::new(), |p| p.length().to_string()),
            total.to_string(),
        ];
        for stage in STAGES {
            let micros = report.timings.iter().find(|t| t.stage == stage).map_or(0, |t| t.micros);
            row.push(micros.to_string());
        }
        row.push(previous.map_or(String::new(), |p| format!("{:.3}", *total as f64 / p.max(1) as f64)));
        csv.write_record(&row)?;
        previous = Some(*total);
    }
    csv.flush()?;
    Ok(EXIT_ANSWERED)
}
