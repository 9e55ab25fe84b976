//! Command-line surface: compute parameters, verify certificates, generate
//! families and gadgets, reproduce the cycle tables, and run the scanners.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rainbow::colouring::{find_violation, ParameterKind};
use rainbow::constructions::{make_construction, ConstructionDescriptor, SelfCheck};
use rainbow::families::{self, FamilyDescriptor};
use rainbow::files;
use rainbow::graph::Graph;
use rainbow::report::{RunReport, TaskLine};
use rainbow::scan::{
    find_nonmonotone_pair, scan_conjecture, scan_invariants, GraphSource, NonMonotone, ScanConfig,
};
use rainbow::solver::{compute_parameter, Budget, SolveStatus, SolverConfig};

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_BUDGET: i32 = 3;

/// Orders above this cannot be solved or verified here (the distance
/// matrix alone would not fit); generation is still fine.
const DESK_SCALE_MAX_N: usize = 5_000;

#[derive(Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow connection numbers: compute, verify, generate, scan"
)]
struct Cli {
    /// Solver/scanner thread count (default: all cores). Output is
    /// deterministic regardless.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameter values exactly, with bounds and witnesses.
    Compute(ComputeArgs),
    /// Verify a colouring certificate against a graph.
    Verify(VerifyArgs),
    /// Generate a family or gadget graph (and its proof colourings).
    Gen(GenArgs),
    /// Print the cycle value tables and the closed formulas.
    Tables,
    /// Run the invariant/conjecture scanners or the non-monotonicity search.
    Scan(ScanArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Parameters to compute: rc, src, rvc, srvc, trc, strc, or "all".
    #[arg(long, value_delimiter = ',', default_value = "all")]
    param: Vec<String>,
    /// Wall-clock budget per parameter, in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    max_ms: u64,
    /// Search-node budget per parameter.
    #[arg(long, default_value_t = 100_000_000)]
    max_nodes: u64,
    /// Canonical search: the witness is the lexicographically least
    /// feasible assignment in element order.
    #[arg(long)]
    canonical: bool,
    /// Write each witness colouring into this directory.
    #[arg(long, value_name = "DIR")]
    emit_witness: Option<PathBuf>,
    /// Input format: graph, g6, or auto (by extension).
    #[arg(long, default_value = "auto")]
    format: String,
    graph: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which parameter the certificate claims.
    #[arg(long)]
    kind: String,
    #[arg(long, default_value = "auto")]
    format: String,
    graph: PathBuf,
    colouring: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    /// Family name: cycle, wheel, complete, complete-bipartite,
    /// complete-multipartite, star, path.
    #[arg(long, conflicts_with = "construction")]
    family: Option<String>,
    /// Construction name: fb, fab, gabm, gs, hs, broom, c5-expansion,
    /// figure1a, figure1b, figure1c.
    #[arg(long)]
    construction: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Multipartite class sizes, ascending.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Surrogate class size for gabm (theorem mode when omitted).
    #[arg(long)]
    n_override: Option<usize>,
    /// Output graph file.
    #[arg(short, long)]
    out: PathBuf,
    /// Directory for the proof colourings, one file per colouring.
    #[arg(long, value_name = "DIR")]
    colourings: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Check every statement the structural theory asserts.
    #[arg(long, conflicts_with_all = ["conjecture", "nonmonotone"])]
    invariants: bool,
    /// Check only the two conjectured upper bounds.
    #[arg(long, conflicts_with = "nonmonotone")]
    conjecture: bool,
    /// Search for a strong-parameter drop under an edge deletion.
    #[arg(long, value_name = "KIND")]
    nonmonotone: Option<String>,
    /// Exhaustive labelled enumeration up to this order.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Read graphs from a graph6 file instead of enumerating.
    #[arg(long, value_name = "FILE")]
    g6: Option<PathBuf>,
    #[arg(long, default_value_t = u64::MAX)]
    max_ms: u64,
    #[arg(long, default_value_t = u64::MAX)]
    max_nodes: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let code = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Gen(args) => cmd_gen(&args),
        Command::Tables => cmd_tables(),
        Command::Scan(args) => cmd_scan(&args),
    };
    ExitCode::from(code as u8)
}

fn input_error(report: &mut RunReport, message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    report.exit_code = EXIT_INPUT;
    print!("{}", report.render());
    EXIT_INPUT
}

fn load_graph(path: &Path, format: &str) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let use_g6 = match format {
        "g6" => true,
        "graph" => false,
        "auto" => path.extension().is_some_and(|ext| ext == "g6"),
        other => return Err(format!("unknown format `{other}`")),
    };
    if use_g6 {
        let line = text
            .lines()
            .next()
            .ok_or_else(|| "empty graph6 file".to_string())?;
        files::parse_graph6(line).map_err(|e| e.to_string())
    } else {
        files::parse_graph(&text).map_err(|e| e.to_string())
    }
}

fn parse_kinds(tokens: &[String]) -> Result<Vec<ParameterKind>, String> {
    let mut kinds = Vec::new();
    for tok in tokens {
        if tok == "all" {
            kinds.extend(ParameterKind::ALL);
        } else {
            kinds.push(tok.parse::<ParameterKind>()?);
        }
    }
    Ok(kinds)
}

fn cmd_compute(args: &ComputeArgs) -> i32 {
    let mut report = RunReport::new(format!("compute {}", args.graph.display()));
    let kinds = match parse_kinds(&args.param) {
        Ok(k) => k,
        Err(e) => return input_error(&mut report, e),
    };
    let g = match load_graph(&args.graph, &args.format) {
        Ok(g) => g,
        Err(e) => return input_error(&mut report, e),
    };
    if g.n() > DESK_SCALE_MAX_N {
        return input_error(
            &mut report,
            format!("order {} is beyond desk scale ({DESK_SCALE_MAX_N})", g.n()),
        );
    }
    if !g.is_connected() {
        return input_error(&mut report, "graph is not connected");
    }
    let cfg = SolverConfig {
        budget: Budget {
            max_millis: args.max_ms,
            max_nodes: args.max_nodes,
        },
        canonical: args.canonical,
        ..SolverConfig::default()
    };
    let mut worst = EXIT_OK;
    for kind in kinds {
        let result = compute_parameter(&g, kind, &cfg).expect("connected");
        let mut line = TaskLine::new().push("param", kind.name().to_uppercase());
        if let Some(v) = result.value {
            line = line.push("value", v);
        }
        let status = match result.status {
            SolveStatus::Exact => "exact",
            SolveStatus::BoundsOnly => "bounds_only",
            SolveStatus::BudgetExceeded => "budget_exceeded",
        };
        line = line
            .push("status", status)
            .push("lower", result.lower)
            .push("upper", result.upper)
            .push("nodes", result.nodes)
            .push("ms", result.elapsed.as_millis());
        if result.status != SolveStatus::Exact {
            worst = worst.max(EXIT_BUDGET);
        }
        if let (Some(dir), Some(witness)) = (&args.emit_witness, &result.witness) {
            if let Err(e) = fs::create_dir_all(dir) {
                return input_error(&mut report, e);
            }
            let stem = args
                .graph
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "graph".to_string());
            let path = dir.join(format!("{stem}_{}.col", kind.name()));
            if let Err(e) = fs::write(&path, files::colouring_string(witness, &g)) {
                return input_error(&mut report, e);
            }
            line = line.push("witness", path.display());
        }
        report.lines.push(line);
    }
    report.exit_code = worst;
    print!("{}", report.render());
    worst
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let mut report = RunReport::new(format!(
        "verify --kind {} {} {}",
        args.kind,
        args.graph.display(),
        args.colouring.display()
    ));
    let kind = match args.kind.parse::<ParameterKind>() {
        Ok(k) => k,
        Err(e) => return input_error(&mut report, e),
    };
    let g = match load_graph(&args.graph, &args.format) {
        Ok(g) => g,
        Err(e) => return input_error(&mut report, e),
    };
    if g.n() > DESK_SCALE_MAX_N {
        return input_error(
            &mut report,
            format!("order {} is beyond desk scale ({DESK_SCALE_MAX_N})", g.n()),
        );
    }
    if !g.is_connected() {
        return input_error(&mut report, "graph is not connected");
    }
    let text = match fs::read_to_string(&args.colouring) {
        Ok(t) => t,
        Err(e) => return input_error(&mut report, e),
    };
    let mut col = match files::parse_colouring(&text, &g) {
        Ok(c) => c,
        Err(e) => return input_error(&mut report, e),
    };
    // A zero-palette certificate carries no assignment lines, so the file
    // cannot say which element maps it covers; materialise the shape the
    // kind expects.
    if col.k() == 0 && !col.colours_edges() && !col.colours_vertices() {
        col = rainbow::colouring::Colouring::blank(&g, kind, 0);
    }
    if !col.matches(kind) {
        return input_error(&mut report, format!("colouring does not match kind {kind}"));
    }
    if col.k() > 0 && !col.is_total() {
        return input_error(&mut report, "colouring leaves elements unassigned");
    }
    match find_violation(&g, &col, kind).expect("shape checked") {
        None => {
            report.lines.push(
                TaskLine::new()
                    .push("verified", "")
                    .push("palette", col.k()),
            );
            report.exit_code = EXIT_OK;
            print!("{}", report.render());
            EXIT_OK
        }
        Some(v) => {
            report.lines.push(
                TaskLine::new()
                    .push("violation", "")
                    .push("u", v.u + 1)
                    .push("v", v.v + 1)
                    .push("paths_checked", v.witness_paths_checked),
            );
            report.exit_code = EXIT_FAIL;
            print!("{}", report.render());
            EXIT_FAIL
        }
    }
}

fn family_from_args(name: &str, args: &GenArgs) -> Result<FamilyDescriptor, String> {
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| format!("--{what} is required"));
    match name {
        "cycle" => Ok(FamilyDescriptor::Cycle {
            n: need(args.n, "n")?,
        }),
        "wheel" => Ok(FamilyDescriptor::Wheel {
            n: need(args.n, "n")?,
        }),
        "complete" => Ok(FamilyDescriptor::Complete {
            n: need(args.n, "n")?,
        }),
        "complete-bipartite" => Ok(FamilyDescriptor::CompleteBipartite {
            m: need(args.m, "m")?,
            n: need(args.n, "n")?,
        }),
        "complete-multipartite" => Ok(FamilyDescriptor::CompleteMultipartite {
            sizes: args.sizes.clone().ok_or("--sizes is required")?,
        }),
        "star" => Ok(FamilyDescriptor::CompleteBipartite {
            m: 1,
            n: need(args.n, "n")?,
        }),
        "path" => {
            let n = need(args.n, "n")?;
            if n < 2 {
                return Err("path needs n >= 2".into());
            }
            Ok(FamilyDescriptor::Tree {
                n,
                edges: (0..n - 1).map(|i| (i, i + 1)).collect(),
            })
        }
        other => Err(format!("unknown family `{other}`")),
    }
}

fn construction_from_args(name: &str, args: &GenArgs) -> Result<ConstructionDescriptor, String> {
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| format!("--{what} is required"));
    match name {
        "fb" => Ok(ConstructionDescriptor::Fb {
            b: need(args.b, "b")?,
        }),
        "fab" => Ok(ConstructionDescriptor::Fab {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
        }),
        "gabm" => Ok(ConstructionDescriptor::Gabm {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            m: need(args.m, "m")?,
            n_override: args.n_override,
        }),
        "gs" => Ok(ConstructionDescriptor::Gs {
            s: need(args.s, "s")?,
        }),
        "hs" => Ok(ConstructionDescriptor::Hs {
            s: need(args.s, "s")?,
        }),
        "broom" => Ok(ConstructionDescriptor::Broom {
            s: need(args.s, "s")?,
            t: need(args.t, "t")?,
        }),
        "c5-expansion" => Ok(ConstructionDescriptor::C5Expansion {
            r: need(args.r, "r")?,
        }),
        "figure1a" => Ok(ConstructionDescriptor::Figure1a),
        "figure1b" => Ok(ConstructionDescriptor::Figure1b),
        "figure1c" => Ok(ConstructionDescriptor::Figure1c),
        other => Err(format!("unknown construction `{other}`")),
    }
}

fn cmd_gen(args: &GenArgs) -> i32 {
    let mut report = RunReport::new(format!("gen -o {}", args.out.display()));
    let (graph, roles, colourings, variants) = if let Some(family) = &args.family {
        let desc = match family_from_args(family, args) {
            Ok(d) => d,
            Err(e) => return input_error(&mut report, e),
        };
        let g = match families::family_graph(&desc) {
            Ok(g) => g,
            Err(e) => return input_error(&mut report, e),
        };
        // Family witnesses for all six kinds ship as colouring files.
        let mut cols = Vec::new();
        if args.colourings.is_some() {
            for kind in ParameterKind::ALL {
                match families::family_witness(&desc, kind) {
                    Ok(w) => cols.push((format!("witness_{}", kind.name()), kind, w)),
                    Err(e) => return input_error(&mut report, e),
                }
            }
        }
        (g, Vec::new(), cols, Vec::new())
    } else if let Some(construction) = &args.construction {
        let desc = match construction_from_args(construction, args) {
            Ok(d) => d,
            Err(e) => return input_error(&mut report, e),
        };
        let bundle = match make_construction(&desc) {
            Ok(b) => b,
            Err(e) => return input_error(&mut report, e),
        };
        for note in &bundle.notes {
            eprintln!("note: {note}");
        }
        let cols = bundle
            .proof_colourings
            .into_iter()
            .map(|pc| {
                if pc.check == SelfCheck::SkippedNotDeskVerifiable {
                    eprintln!(
                        "note: colouring {} not verified (beyond desk scale)",
                        pc.label
                    );
                }
                (
                    format!("{}_{}", pc.label, pc.kind.name()),
                    pc.kind,
                    pc.colouring,
                )
            })
            .collect();
        (bundle.graph, bundle.roles, cols, bundle.variants)
    } else {
        return input_error(&mut report, "one of --family or --construction is required");
    };

    if let Err(e) = fs::write(&args.out, files::graph_string(&graph)) {
        return input_error(&mut report, e);
    }
    let mut line = TaskLine::new()
        .push("graph", args.out.display())
        .push("n", graph.n())
        .push("m", graph.m());
    for (name, vertices) in &roles {
        let list: Vec<String> = vertices.iter().map(|v| (v + 1).to_string()).collect();
        line = line.push(&format!("role_{name}"), list.join(","));
    }
    report.lines.push(line);

    for (name, variant) in &variants {
        let stem = args
            .out
            .file_stem()
            .unwrap_or_default()
            .to_string_lossy()
            .to_string();
        let path = args.out.with_file_name(format!("{stem}.{name}.g"));
        if let Err(e) = fs::write(&path, files::graph_string(variant)) {
            return input_error(&mut report, e);
        }
        report.lines.push(
            TaskLine::new()
                .push("variant", name)
                .push("graph", path.display())
                .push("n", variant.n())
                .push("m", variant.m()),
        );
    }

    if let Some(dir) = &args.colourings {
        if let Err(e) = fs::create_dir_all(dir) {
            return input_error(&mut report, e);
        }
        for (label, kind, col) in &colourings {
            let path = dir.join(format!("{label}.col"));
            if let Err(e) = fs::write(&path, files::colouring_string(col, &graph)) {
                return input_error(&mut report, e);
            }
            report.lines.push(
                TaskLine::new()
                    .push("colouring", path.display())
                    .push("kind", kind.name())
                    .push("palette", col.k()),
            );
        }
    }
    print!("{}", report.render());
    EXIT_OK
}

fn cmd_tables() -> i32 {
    let mut out = String::new();
    out.push_str("cycle tables\n");
    let fmt_row = |label: &str, lo: usize, hi: usize, f: &dyn Fn(usize) -> usize| {
        let mut row = format!("  {label:<5}");
        for n in lo..=hi {
            row.push_str(&format!("{:>3}", f(n)));
        }
        row.push('\n');
        row
    };
    out.push_str(&fmt_row("n", 3, 15, &|n| n));
    out.push_str(&fmt_row("rvc", 3, 15, &families::cycle_rvc));
    out.push_str(&fmt_row("srvc", 3, 15, &families::cycle_srvc));
    out.push_str(&fmt_row("n", 3, 12, &|n| n));
    out.push_str(&fmt_row("trc", 3, 12, &families::cycle_trc));
    out.push_str(&fmt_row("strc", 3, 12, &families::cycle_trc));
    let compact = |label: &str, lo: usize, hi: usize, f: &dyn Fn(usize) -> usize| {
        let cells: Vec<String> = (lo..=hi).map(|n| format!("{n}:{}", f(n))).collect();
        format!("{label} {}\n", cells.join(" "))
    };
    out.push_str(&compact("rvc", 3, 15, &families::cycle_rvc));
    out.push_str(&compact("srvc", 3, 15, &families::cycle_srvc));
    out.push_str(&compact("trc", 3, 12, &families::cycle_trc));
    out.push_str(&compact("strc", 3, 12, &families::cycle_trc));
    out.push_str("formulas\n");
    out.push_str("  cycle rc=src: 1 at n=3, ceil(n/2) for n>=4\n");
    out.push_str("  cycle rvc=srvc: ceil(n/2) for n>=16\n");
    out.push_str("  cycle trc=strc: n for n>=13\n");
    out.push_str("  wheel src: ceil(n/3); strc: 1 at n=3, ceil(n/3)+1 for n>=4\n");
    out.push_str("  complete bipartite (2<=m<=n) src: ceil(n^(1/m)); strc: ceil(n^(1/m))+1\n");
    out.push_str("  complete multipartite (t>=3, m=sum of lower classes, n=largest):\n");
    out.push_str("    strc: 1 if n=1; 3 if n>=2 and m>n; ceil(n^(1/m))+1 if m<=n\n");
    // Machine-readable rows.
    for n in 3..=15 {
        out.push_str(&format!("row,cycle,rvc,{n},{}\n", families::cycle_rvc(n)));
        out.push_str(&format!("row,cycle,srvc,{n},{}\n", families::cycle_srvc(n)));
    }
    for n in 3..=12 {
        out.push_str(&format!("row,cycle,trc,{n},{}\n", families::cycle_trc(n)));
        out.push_str(&format!("row,cycle,strc,{n},{}\n", families::cycle_trc(n)));
    }
    print!("{out}");
    EXIT_OK
}

fn cmd_scan(args: &ScanArgs) -> i32 {
    let mode = if args.invariants {
        "invariants"
    } else if args.conjecture {
        "conjecture"
    } else if args.nonmonotone.is_some() {
        "nonmonotone"
    } else {
        let mut report = RunReport::new("scan");
        return input_error(
            &mut report,
            "one of --invariants, --conjecture, --nonmonotone",
        );
    };
    let mut report = RunReport::new(format!("scan --{mode}"));
    let cfg = ScanConfig {
        solver: SolverConfig {
            budget: Budget {
                max_millis: args.max_ms,
                max_nodes: args.max_nodes,
            },
            ..SolverConfig::default()
        },
        max_millis: args.max_ms,
    };
    if args.g6.is_none() && args.max_n > 6 {
        return input_error(&mut report, "labelled enumeration is capped at --max-n 6");
    }
    if let Some(kind_name) = &args.nonmonotone {
        let kind = match kind_name.parse::<ParameterKind>() {
            Ok(k) if k.is_strong() => k,
            Ok(k) => {
                return input_error(
                    &mut report,
                    format!("{k} is monotone; pick src, srvc or strc"),
                )
            }
            Err(e) => return input_error(&mut report, e),
        };
        match find_nonmonotone_pair(kind, args.max_n, &cfg) {
            NonMonotone::Found(pair) => {
                report.lines.push(
                    TaskLine::new()
                        .push("nonmonotone", "")
                        .push("kind", kind.name())
                        .push("value_g", pair.value_g)
                        .push("value_h", pair.value_h)
                        .push(
                            "removed",
                            format!("{}-{}", pair.removed.0 + 1, pair.removed.1 + 1),
                        )
                        .push("g6_g", files::graph6_string(&pair.g))
                        .push("g6_h", files::graph6_string(&pair.h)),
                );
                report.exit_code = EXIT_FAIL;
                print!("{}", report.render());
                return EXIT_FAIL;
            }
            NonMonotone::NotFound { complete } => {
                report.lines.push(
                    TaskLine::new()
                        .push("nonmonotone", "")
                        .push("kind", kind.name())
                        .push("found", "none")
                        .push("complete", complete),
                );
                let code = if complete { EXIT_OK } else { EXIT_BUDGET };
                report.exit_code = code;
                print!("{}", report.render());
                return code;
            }
        }
    }
    let source = match &args.g6 {
        Some(path) => {
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return input_error(&mut report, e),
            };
            GraphSource::Graph6 {
                lines: text
                    .lines()
                    .map(|l| l.trim().to_string())
                    .filter(|l| !l.is_empty())
                    .collect(),
            }
        }
        None => GraphSource::Enumerated { max_n: args.max_n },
    };
    let outcome = if args.invariants {
        scan_invariants(&source, &cfg)
    } else {
        scan_conjecture(&source, &cfg)
    };
    for v in &outcome.violations {
        eprintln!("violation: {} on {}", v.check, v.graph);
    }
    report.lines.push(
        TaskLine::new()
            .push("checked", outcome.graphs_checked)
            .push("violations", outcome.violations.len())
            .push("complete", outcome.complete),
    );
    let code = if !outcome.violations.is_empty() {
        EXIT_FAIL
    } else if !outcome.complete {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    report.exit_code = code;
    print!("{}", report.render());
    code
}
