//! Exhaustive small-graph scanners: labelled enumeration, the invariant
//! and conjecture scans, and the spanning-subgraph non-monotonicity search.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::colouring::ParameterKind;
use crate::files;
use crate::graph::{Graph, GraphError};
use crate::solver::{compute_parameter, decide_k, Decision, SolveStatus, SolverConfig};

/// Memoised six-parameter values for one enumeration level, keyed by the
/// sorted edge list.
type LevelValues = HashMap<Vec<(usize, usize)>, [usize; 6]>;

/// Where scanned graphs come from: internal labelled enumeration (all
/// connected graphs up to `max_n`) or a graph6 stream.
#[derive(Clone, Debug)]
pub enum GraphSource {
    Enumerated { max_n: usize },
    Graph6 { lines: Vec<String> },
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub solver: SolverConfig,
    /// Overall wall-clock cap for the whole scan.
    pub max_millis: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            solver: SolverConfig::default(),
            max_millis: u64::MAX,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanViolation {
    /// The graph, verbatim: order plus edge list (and the graph6 line when
    /// the graph came from one).
    pub graph: String,
    pub check: String,
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub graphs_checked: usize,
    pub violations: Vec<ScanViolation>,
    /// False when the budget ran out before the scan finished.
    pub complete: bool,
}

/// All connected labelled graphs on exactly `n` vertices, in edge-mask
/// order. Exhaustive enumeration is kept at n <= 6 (32768 masks).
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=6).contains(&n),
        "labelled enumeration is for 1 <= n <= 6"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u32 << pairs.len();
    let mut out = Vec::new();
    for mask in 0..total {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::build(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

fn graph_token(g: &Graph, origin: Option<&str>) -> String {
    let core = format!("n={} m={} edges={:?}", g.n(), g.m(), g.edges());
    match origin {
        Some(line) => format!("{core} g6={line}"),
        None => core,
    }
}

/// The six exact values in kind order, or None on budget trouble.
fn six_values(g: &Graph, cfg: &SolverConfig) -> Option<[usize; 6]> {
    let mut out = [0usize; 6];
    for (i, kind) in ParameterKind::ALL.iter().enumerate() {
        let r = compute_parameter(g, *kind, cfg).ok()?;
        if r.status != SolveStatus::Exact {
            return None;
        }
        out[i] = r.value.unwrap();
    }
    Some(out)
}

struct GraphFacts {
    n: usize,
    m: usize,
    q: usize,
    diam: usize,
    b: usize,
    c: usize,
    complete: bool,
}

fn facts(g: &Graph) -> GraphFacts {
    let s = g.stats();
    GraphFacts {
        n: s.n,
        m: s.m,
        q: s.q,
        diam: s.diameter.expect("connected"),
        b: s.bridges,
        c: s.cut_vertices,
        complete: s.is_complete,
    }
}

/// Every per-graph statement the invariant scan asserts (the spanning
/// monotonicity check needs neighbouring graphs and lives elsewhere).
fn invariant_failures(f: &GraphFacts, vals: &[usize; 6]) -> Vec<String> {
    let [rc, src, rvc, srvc, trc, strc] = *vals;
    let GraphFacts {
        n,
        m,
        q,
        diam,
        b,
        c,
        complete,
    } = *f;
    let mut bad = Vec::new();
    let mut check = |ok: bool, name: &str| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    // Chain inequalities.
    check(
        diam <= rc && rc <= src && src <= m,
        "chain diam <= rc <= src <= m",
    );
    check(
        diam - 1 <= rvc && rvc <= srvc && srvc <= (n - 2).min(q),
        "chain diam-1 <= rvc <= srvc <= min(n-2, q)",
    );
    check(
        2 * diam - 1 <= trc
            && trc <= strc
            && strc <= srvc + m
            && srvc + m <= (m + n - 2).min(m + q),
        "chain 2diam-1 <= trc <= strc <= srvc+m <= min(m+n-2, m+q)",
    );
    check(strc <= src + q, "strc <= src + q");
    // Total dominates both sides.
    check(trc >= rc.max(rvc), "trc >= max(rc, rvc)");
    check(strc >= src.max(srvc), "strc >= max(src, srvc)");
    // Small-value equivalences.
    for (cond, name) in [
        (diam == 1, "diam = 1"),
        (rc == 1, "rc = 1"),
        (src == 1, "src = 1"),
        (rvc == 0, "rvc = 0"),
        (srvc == 0, "srvc = 0"),
        (trc == 1, "trc = 1"),
        (strc == 1, "strc = 1"),
    ] {
        check(cond == complete, &format!("complete iff {name}"));
    }
    check((trc >= 3) == !complete, "trc >= 3 iff not complete");
    check((rc == 2) == (src == 2), "rc = 2 iff src = 2");
    check((rvc == 1) == (srvc == 1), "rvc = 1 iff srvc = 1");
    check((rvc == 1) == (diam == 2), "rvc = 1 iff diam = 2");
    check((rvc == 2) == (srvc == 2), "rvc = 2 iff srvc = 2");
    check((trc == 3) == (strc == 3), "trc = 3 iff strc = 3");
    check((trc == 4) == (strc == 4), "trc = 4 iff strc = 4");
    if rc == 2 {
        check(trc == 3, "rc = 2 implies trc = 3");
    }
    if rc == 2 || trc == 3 || trc == 4 {
        check(diam == 2, "small values imply diam = 2");
    }
    // Diameter-2 lift.
    if diam == 2 {
        check(strc <= src + 1, "diam = 2 implies strc <= src + 1");
    }
    // Forced-distinct lower bounds.
    check(rc >= b, "rc >= bridges");
    check(rvc >= c, "rvc >= cut-vertices");
    check(trc >= b + c, "trc >= bridges + cut-vertices");
    bad
}

fn conjecture_failures(f: &GraphFacts, vals: &[usize; 6]) -> Vec<String> {
    let [_, src, _, _, _, strc] = *vals;
    let GraphFacts { n, q, .. } = *f;
    let mut bad = Vec::new();
    if src > n - 1 {
        bad.push(format!("src = {src} > n-1 = {}", n - 1));
    }
    if strc > (2 * n - 3).min(n - 1 + q) {
        bad.push(format!(
            "strc = {strc} > min(2n-3, n-1+q) = {}",
            (2 * n - 3).min(n - 1 + q)
        ));
    }
    bad
}

enum ScanMode {
    Invariants,
    Conjecture,
}

fn run_scan(source: &GraphSource, cfg: &ScanConfig, mode: ScanMode) -> ScanOutcome {
    let deadline = Instant::now()
        .checked_add(Duration::from_millis(cfg.max_millis))
        .unwrap_or_else(|| Instant::now() + Duration::from_secs(86_400 * 365));
    let mut outcome = ScanOutcome {
        graphs_checked: 0,
        violations: Vec::new(),
        complete: true,
    };
    match source {
        GraphSource::Enumerated { max_n } => {
            for n in 2..=*max_n {
                if Instant::now() >= deadline {
                    outcome.complete = false;
                    return outcome;
                }
                let graphs = all_connected_graphs(n);
                // Values for the whole level first: monotonicity looks up
                // single-edge deletions, which live on the same level.
                let values: Vec<Option<[usize; 6]>> = graphs
                    .par_iter()
                    .map(|g| six_values(g, &cfg.solver))
                    .collect();
                let by_mask: LevelValues = graphs
                    .iter()
                    .zip(&values)
                    .filter_map(|(g, v)| v.map(|v| (g.edges().to_vec(), v)))
                    .collect();
                for (g, vals) in graphs.iter().zip(&values) {
                    if Instant::now() >= deadline {
                        outcome.complete = false;
                        return outcome;
                    }
                    let Some(vals) = vals else {
                        outcome.complete = false;
                        continue;
                    };
                    outcome.graphs_checked += 1;
                    let f = facts(g);
                    let failures = match mode {
                        ScanMode::Invariants => {
                            let mut fails = invariant_failures(&f, vals);
                            fails.extend(conjecture_failures(&f, vals));
                            fails.extend(monotonicity_failures(
                                g,
                                vals,
                                Some(&by_mask),
                                &cfg.solver,
                            ));
                            fails
                        }
                        ScanMode::Conjecture => conjecture_failures(&f, vals),
                    };
                    for check in failures {
                        outcome.violations.push(ScanViolation {
                            graph: graph_token(g, None),
                            check,
                        });
                    }
                }
            }
        }
        GraphSource::Graph6 { lines } => {
            for line in lines {
                if Instant::now() >= deadline {
                    outcome.complete = false;
                    return outcome;
                }
                let g = match files::parse_graph6(line) {
                    Ok(g) => g,
                    Err(e) => {
                        outcome.violations.push(ScanViolation {
                            graph: line.clone(),
                            check: format!("unparseable graph6: {e}"),
                        });
                        continue;
                    }
                };
                if !g.is_connected() {
                    outcome.violations.push(ScanViolation {
                        graph: graph_token(&g, Some(line)),
                        check: "not connected".into(),
                    });
                    continue;
                }
                let Some(vals) = six_values(&g, &cfg.solver) else {
                    outcome.complete = false;
                    continue;
                };
                outcome.graphs_checked += 1;
                let f = facts(&g);
                let failures = match mode {
                    ScanMode::Invariants => {
                        let mut fails = invariant_failures(&f, &vals);
                        fails.extend(conjecture_failures(&f, &vals));
                        fails.extend(monotonicity_failures(&g, &vals, None, &cfg.solver));
                        fails
                    }
                    ScanMode::Conjecture => conjecture_failures(&f, &vals),
                };
                for check in failures {
                    outcome.violations.push(ScanViolation {
                        graph: graph_token(&g, Some(line)),
                        check,
                    });
                }
            }
        }
    }
    outcome
}

/// The non-strong parameters may only drop when edges are added; checked
/// over single-edge deletions, which transitivity extends to every
/// connected spanning subgraph.
fn monotonicity_failures(
    g: &Graph,
    vals: &[usize; 6],
    memo: Option<&LevelValues>,
    cfg: &SolverConfig,
) -> Vec<String> {
    let mut bad = Vec::new();
    for id in 0..g.m() {
        let e = g.edge_endpoints(id);
        let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&x| x != e).collect();
        let h = Graph::build(g.n(), &edges).unwrap();
        if !h.is_connected() {
            continue;
        }
        let hv = match memo {
            Some(map) => match map.get(&edges) {
                Some(v) => *v,
                None => continue,
            },
            None => match six_values(&h, cfg) {
                Some(v) => v,
                None => continue,
            },
        };
        for (i, kind) in [ParameterKind::Rc, ParameterKind::Rvc, ParameterKind::Trc]
            .iter()
            .enumerate()
        {
            let gi = [0, 2, 4][i];
            if vals[gi] > hv[gi] {
                bad.push(format!(
                    "{kind} not monotone under removing edge {e:?}: {} > {}",
                    vals[gi], hv[gi]
                ));
            }
        }
    }
    bad
}

/// Checks the chain inequalities, small-value equivalences, forced-distinct
/// bounds, the diameter-2 lift, non-strong spanning monotonicity, and the
/// two conjectured upper bounds on every graph from the source.
pub fn scan_invariants(source: &GraphSource, cfg: &ScanConfig) -> ScanOutcome {
    run_scan(source, cfg, ScanMode::Invariants)
}

/// Checks only `src <= n-1` and `strc <= min(2n-3, n-1+q)`.
pub fn scan_conjecture(source: &GraphSource, cfg: &ScanConfig) -> ScanOutcome {
    run_scan(source, cfg, ScanMode::Conjecture)
}

#[derive(Clone, Debug)]
pub enum NonMonotone {
    Found(Box<NonMonotonePair>),
    NotFound { complete: bool },
}

#[derive(Clone, Debug)]
pub struct NonMonotonePair {
    pub g: Graph,
    pub h: Graph,
    pub removed: (usize, usize),
    pub value_g: usize,
    pub value_h: usize,
}

/// Searches labelled connected graphs up to `max_n` for a connected
/// single-edge deletion that *decreases* the strong parameter `kind`
/// (possible because the strong parameters are not spanning-subgraph
/// monotone). Deterministic: first hit in (n, edge-mask, edge-id) order.
pub fn find_nonmonotone_pair(kind: ParameterKind, max_n: usize, cfg: &ScanConfig) -> NonMonotone {
    assert!(
        kind.is_strong(),
        "non-monotonicity is a strong-parameter phenomenon"
    );
    let deadline = Instant::now()
        .checked_add(Duration::from_millis(cfg.max_millis))
        .unwrap_or_else(|| Instant::now() + Duration::from_secs(86_400 * 365));
    for n in 2..=max_n {
        let graphs = all_connected_graphs(n);
        let values: Vec<Option<usize>> = graphs
            .par_iter()
            .map(|g| {
                let r = compute_parameter(g, kind, &cfg.solver).ok()?;
                (r.status == SolveStatus::Exact).then(|| r.value.unwrap())
            })
            .collect();
        let by_edges: HashMap<Vec<(usize, usize)>, usize> = graphs
            .iter()
            .zip(&values)
            .filter_map(|(g, v)| v.map(|v| (g.edges().to_vec(), v)))
            .collect();
        for (g, value) in graphs.iter().zip(&values) {
            if Instant::now() >= deadline {
                return NonMonotone::NotFound { complete: false };
            }
            let Some(value_g) = *value else {
                return NonMonotone::NotFound { complete: false };
            };
            for id in 0..g.m() {
                let e = g.edge_endpoints(id);
                let edges: Vec<(usize, usize)> =
                    g.edges().iter().copied().filter(|&x| x != e).collect();
                let h = Graph::build(n, &edges).unwrap();
                if !h.is_connected() {
                    continue;
                }
                let Some(&value_h) = by_edges.get(&edges) else {
                    continue;
                };
                if value_g > value_h {
                    return NonMonotone::Found(Box::new(NonMonotonePair {
                        g: g.clone(),
                        h,
                        removed: e,
                        value_g,
                        value_h,
                    }));
                }
            }
        }
    }
    NonMonotone::NotFound { complete: true }
}

/// Evidence record for a supplied pair: `param(h)` exactly, plus the palette
/// at which `g` was refuted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonMonotoneEvidence {
    pub value_h: usize,
    /// `param(g) > refuted_k` was proved by exhaustive refutation.
    pub refuted_k: usize,
}

/// Confirms a supplied pair `h` (spanning subgraph) and `g = h + edges`:
/// computes `param(h)` exactly and refutes that palette on `g`, which
/// proves `param(g) > param(h)`. Returns None when the pair is monotone.
pub fn confirm_nonmonotone(
    g: &Graph,
    h: &Graph,
    kind: ParameterKind,
    cfg: &ScanConfig,
) -> Result<Option<NonMonotoneEvidence>, GraphError> {
    assert_eq!(g.n(), h.n(), "spanning subgraph must keep the vertex set");
    assert!(
        h.edges().iter().all(|&(u, v)| g.has_edge(u, v)),
        "h must be a subgraph of g"
    );
    let rh = compute_parameter(h, kind, &cfg.solver)?;
    let Some(value_h) = rh.value else {
        return Ok(None);
    };
    match decide_k(g, kind, value_h, &cfg.solver)? {
        Decision::Infeasible => Ok(Some(NonMonotoneEvidence {
            value_h,
            refuted_k: value_h,
        })),
        _ => Ok(None),
    }
}
