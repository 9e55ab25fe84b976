//! Exact branch-and-bound solver for the six parameters.
//!
//! `decide_k` answers "does a palette of size k suffice?" by assigning
//! colours to elements (edges, vertices, or both) one at a time:
//!
//! - colour-class symmetry breaking: an element may only use a colour at
//!   most one above the largest colour used so far;
//! - seeding: bridges, cut-vertices, or their union (per kind) must be
//!   pairwise distinct in any feasible colouring, so they are ordered first
//!   and pinned to colours `1..=f` outright;
//! - incremental pruning: every pair keeps its list of candidate rainbow
//!   paths (geodesics for strong kinds, length-capped paths otherwise); a
//!   path dies when two of its elements get equal colours, and a pair with
//!   no live path left kills the branch.
//!
//! `compute_parameter` iterates k upward from the structural lower bound.
//! Infeasibility proofs at small k are the cheap ones, and the witness at
//! the minimum is wanted anyway, so binary search would buy nothing.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use crate::bounds;
use crate::colouring::{check_connectivity, Colouring, ParameterKind};
use crate::graph::{Graph, GraphError, INF};

/// Dual search budget; whichever limit is hit first stops the search.
#[derive(Copy, Clone, Debug)]
pub struct Budget {
    pub max_millis: u64,
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_millis: 60_000,
            max_nodes: 100_000_000,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_millis: u64::MAX,
            max_nodes: u64::MAX,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub budget: Budget,
    /// With `canonical` the returned witness is the lexicographically least
    /// feasible assignment in search-element order (within the
    /// symmetry-broken space), bit-identical across runs. The search is
    /// sequential and ordered either way, so the guarantee currently holds
    /// for every run; the flag pins the contract.
    pub canonical: bool,
    /// Pin bridges/cut-vertices to distinct colours up front. Sound by the
    /// forced-distinctness of those elements; disabling it only slows the
    /// search down (a guard property test keeps this honest).
    pub seeding: bool,
    /// Per-pair candidate path cache cap. Pairs whose candidate list
    /// overflows fall back to leaf verification.
    pub path_cache_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: Budget::default(),
            canonical: false,
            seeding: true,
            path_cache_cap: 10_000,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Decision {
    Feasible(Colouring),
    Infeasible,
    BudgetExceeded,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    BoundsOnly,
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct ExactResult {
    pub kind: ParameterKind,
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub witness: Option<Colouring>,
    /// Best-known bracket; `lower == upper == value` when exact.
    pub lower: usize,
    pub upper: usize,
    pub elapsed: Duration,
    pub nodes: u64,
}

struct Clock {
    deadline: Option<Instant>,
    max_nodes: u64,
    nodes: u64,
}

impl Clock {
    fn new(budget: &Budget) -> Clock {
        let deadline = if budget.max_millis == u64::MAX {
            None
        } else {
            Instant::now().checked_add(Duration::from_millis(budget.max_millis))
        };
        Clock {
            deadline,
            max_nodes: budget.max_nodes,
            nodes: 0,
        }
    }

    /// Counts one search node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return false;
                }
            }
        }
        true
    }

    fn expired(&self) -> bool {
        self.nodes > self.max_nodes || self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// A colourable element in the global id space of a kind: edges first
/// (edge id), then vertices (`m + v`) for the total kinds.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Element {
    Edge(usize),
    Vertex(usize),
}

fn element_list(g: &Graph, kind: ParameterKind) -> Vec<Element> {
    let mut out = Vec::new();
    if kind.colours_edges() {
        out.extend((0..g.m()).map(Element::Edge));
    }
    if kind.colours_vertices() {
        out.extend((0..g.n()).map(Element::Vertex));
    }
    out
}

/// The elements that must be pairwise distinct in any feasible colouring:
/// bridges for edge kinds, cut-vertices for vertex kinds, both for total
/// kinds.
fn forced_elements(g: &Graph, kind: ParameterKind) -> Vec<Element> {
    let mut out = Vec::new();
    if kind.colours_edges() {
        out.extend(g.bridges().iter().map(|&id| Element::Edge(id)));
    }
    if kind.colours_vertices() {
        out.extend(g.cut_vertices().iter().map(|&v| Element::Vertex(v)));
    }
    out
}

/// Number of pair-geodesics through each vertex (as an internal vertex) and
/// each edge, by the standard count DP; saturating. Drives element ordering.
fn geodesic_load(g: &Graph) -> (Vec<u64>, Vec<u64>) {
    let n = g.n();
    let d = g.distances();
    let mut sigma = vec![0u64; n * n];
    for s in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&x| d[s * n + x] != INF).collect();
        order.sort_by_key(|&x| d[s * n + x]);
        sigma[s * n + s] = 1;
        for &y in &order {
            if y == s {
                continue;
            }
            let mut total = 0u64;
            for &x in g.neighbours(y) {
                if d[s * n + x] + 1 == d[s * n + y] {
                    total = total.saturating_add(sigma[s * n + x]);
                }
            }
            sigma[s * n + y] = total;
        }
    }
    let mut vertex_load = vec![0u64; n];
    let mut edge_load = vec![0u64; g.m()];
    for s in 0..n {
        for t in s + 1..n {
            let dst = d[s * n + t];
            if dst == INF {
                continue;
            }
            for x in 0..n {
                if x == s || x == t {
                    continue;
                }
                if d[s * n + x] + d[x * n + t] == dst {
                    vertex_load[x] = vertex_load[x]
                        .saturating_add(sigma[s * n + x].saturating_mul(sigma[t * n + x]));
                }
            }
            for (id, &(a, b)) in g.edges().iter().enumerate() {
                for (x, y) in [(a, b), (b, a)] {
                    if d[s * n + x] + 1 == d[s * n + y] && d[s * n + x] + 1 + d[y * n + t] == dst {
                        edge_load[id] = edge_load[id]
                            .saturating_add(sigma[s * n + x].saturating_mul(sigma[t * n + y]));
                    }
                }
            }
        }
    }
    (vertex_load, edge_load)
}

struct PathRec {
    pair: u32,
    start: u32,
    len: u32,
}

struct Search<'a> {
    g: &'a Graph,
    kind: ParameterKind,
    k: u32,
    /// Elements in search order: forced first, then by descending geodesic
    /// load (ties by global id).
    order: Vec<Element>,
    colour: Vec<u32>,
    paths: Vec<PathRec>,
    pool: Vec<u32>,
    elem_paths: Vec<Vec<u32>>,
    path_dead: Vec<bool>,
    pair_live: Vec<u32>,
    trail: Vec<u32>,
    witness: Option<Colouring>,
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

enum CacheOutcome {
    Ok,
    InfeasiblePair,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, kind: ParameterKind, k: usize) -> Search<'a> {
        let elements = element_list(g, kind);
        let forced = forced_elements(g, kind);
        let (vertex_load, edge_load) = geodesic_load(g);
        let load = |e: &Element| match *e {
            Element::Edge(id) => edge_load[id],
            Element::Vertex(v) => vertex_load[v],
        };
        let global = |e: &Element| match *e {
            Element::Edge(id) => id,
            Element::Vertex(v) => g.m() + v,
        };
        let mut rest: Vec<Element> = elements
            .iter()
            .copied()
            .filter(|e| !forced.contains(e))
            .collect();
        rest.sort_by(|a, b| load(b).cmp(&load(a)).then(global(a).cmp(&global(b))));
        let mut order = forced;
        order.extend(rest);
        let len = order.len();
        Search {
            g,
            kind,
            k: k as u32,
            order,
            colour: vec![0; len],
            paths: Vec::new(),
            pool: Vec::new(),
            elem_paths: vec![Vec::new(); len],
            path_dead: Vec::new(),
            pair_live: Vec::new(),
            trail: Vec::new(),
            witness: None,
        }
    }

    /// Search-order position of each element, for translating enumerated
    /// paths into tracked element lists.
    fn position_maps(&self) -> (Vec<u32>, Vec<u32>) {
        let mut edge_pos = vec![u32::MAX; self.g.m()];
        let mut vertex_pos = vec![u32::MAX; self.g.n()];
        for (i, e) in self.order.iter().enumerate() {
            match *e {
                Element::Edge(id) => edge_pos[id] = i as u32,
                Element::Vertex(v) => vertex_pos[v] = i as u32,
            }
        }
        (edge_pos, vertex_pos)
    }

    /// Builds the per-pair candidate path lists. Pairs with a candidate of
    /// at most one relevant element can never become hopeless and are left
    /// untracked, as are pairs whose candidate count exceeds the cache cap
    /// (the leaf verification covers both). A pair with no candidates at
    /// all makes the whole palette infeasible.
    fn build_caches(&mut self, cap: usize) -> CacheOutcome {
        let n = self.g.n();
        let (edge_pos, vertex_pos) = self.position_maps();
        let mut scratch: Vec<Vec<u32>> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                scratch.clear();
                let mut trivially_satisfiable = false;
                let mut overflow = false;
                {
                    let mut record = |p: &[usize]| {
                        let mut elems: Vec<u32> = Vec::new();
                        if self.kind.colours_edges() {
                            for w in p.windows(2) {
                                let id = self.g.edge_id(w[0], w[1]).expect("path edge");
                                elems.push(edge_pos[id]);
                            }
                        }
                        if self.kind.colours_vertices() && p.len() > 2 {
                            for &x in &p[1..p.len() - 1] {
                                elems.push(vertex_pos[x]);
                            }
                        }
                        if elems.len() <= 1 {
                            trivially_satisfiable = true;
                            return ControlFlow::Break(());
                        }
                        scratch.push(elems);
                        if scratch.len() > cap {
                            overflow = true;
                            return ControlFlow::Break(());
                        }
                        ControlFlow::Continue(())
                    };
                    if self.kind.is_strong() {
                        self.g
                            .enumerate_geodesics(u, v, &mut record)
                            .expect("connected");
                    } else {
                        let max_len = self.kind.max_rainbow_path_len(self.k as usize);
                        if (self.g.dist(u, v) as usize) > max_len {
                            return CacheOutcome::InfeasiblePair;
                        }
                        self.g
                            .enumerate_bounded_paths(u, v, max_len, &mut record)
                            .expect("connected");
                    }
                }
                if trivially_satisfiable || overflow {
                    continue;
                }
                let pair_id = self.pair_live.len() as u32;
                self.pair_live.push(scratch.len() as u32);
                for elems in &scratch {
                    let pid = self.paths.len() as u32;
                    self.paths.push(PathRec {
                        pair: pair_id,
                        start: self.pool.len() as u32,
                        len: elems.len() as u32,
                    });
                    self.pool.extend_from_slice(elems);
                    for &pos in elems {
                        self.elem_paths[pos as usize].push(pid);
                    }
                }
            }
        }
        self.path_dead = vec![false; self.paths.len()];
        CacheOutcome::Ok
    }

    /// Assigns colour `c` at search position `pos`, marking newly dead
    /// paths. Returns false (after rolling back) when some pair loses its
    /// last live path.
    fn assign(&mut self, pos: usize, c: u32) -> bool {
        let base = self.trail.len();
        self.colour[pos] = c;
        let path_ids = std::mem::take(&mut self.elem_paths[pos]);
        let mut hopeless = false;
        'paths: for &pid in &path_ids {
            if self.path_dead[pid as usize] {
                continue;
            }
            let rec_pair = self.paths[pid as usize].pair;
            let elems = {
                let rec = &self.paths[pid as usize];
                rec.start as usize..(rec.start + rec.len) as usize
            };
            for idx in elems {
                let e = self.pool[idx] as usize;
                if e != pos && self.colour[e] == c {
                    self.path_dead[pid as usize] = true;
                    self.trail.push(pid);
                    self.pair_live[rec_pair as usize] -= 1;
                    if self.pair_live[rec_pair as usize] == 0 {
                        hopeless = true;
                        break 'paths;
                    }
                    break;
                }
            }
        }
        self.elem_paths[pos] = path_ids;
        if hopeless {
            self.rollback(pos, base);
            return false;
        }
        true
    }

    fn rollback(&mut self, pos: usize, base: usize) {
        while self.trail.len() > base {
            let pid = self.trail.pop().unwrap();
            self.path_dead[pid as usize] = false;
            self.pair_live[self.paths[pid as usize].pair as usize] += 1;
        }
        self.colour[pos] = 0;
    }

    fn build_colouring(&self) -> Colouring {
        let mut col = Colouring::blank(self.g, self.kind, self.k as usize);
        for (i, e) in self.order.iter().enumerate() {
            match *e {
                Element::Edge(id) => col.set_edge_colour(id, self.colour[i]),
                Element::Vertex(v) => col.set_vertex_colour(v, self.colour[i]),
            }
        }
        col
    }

    fn dfs(&mut self, depth: usize, max_used: u32, clock: &mut Clock) -> Step {
        if depth == self.order.len() {
            // The caches prune tracked pairs; untracked ones are re-checked
            // here, keeping the verifier the final authority.
            let col = self.build_colouring();
            if check_connectivity(self.g, &col, self.kind).expect("shaped colouring") {
                self.witness = Some(col);
                return Step::Found;
            }
            return Step::Exhausted;
        }
        let limit = (max_used + 1).min(self.k);
        for c in 1..=limit {
            if !clock.tick() {
                return Step::Aborted;
            }
            let base = self.trail.len();
            if self.assign(depth, c) {
                let step = self.dfs(depth + 1, max_used.max(c), clock);
                self.rollback(depth, base);
                if !matches!(step, Step::Exhausted) {
                    return step;
                }
            }
        }
        Step::Exhausted
    }
}

fn decide_internal(
    g: &Graph,
    kind: ParameterKind,
    k: usize,
    cfg: &SolverConfig,
    clock: &mut Clock,
) -> Decision {
    if g.n() <= 1 {
        return Decision::Feasible(Colouring::blank(g, kind, k));
    }
    if k == 0 {
        let col = Colouring::blank(g, kind, 0);
        return if check_connectivity(g, &col, kind).expect("shaped") {
            Decision::Feasible(col)
        } else {
            Decision::Infeasible
        };
    }
    let mut search = Search::new(g, kind, k);
    let forced = forced_elements(g, kind).len();
    if cfg.seeding && forced > k {
        return Decision::Infeasible;
    }
    if let CacheOutcome::InfeasiblePair = search.build_caches(cfg.path_cache_cap) {
        return Decision::Infeasible;
    }
    let mut start_depth = 0;
    let mut max_used = 0u32;
    if cfg.seeding {
        for i in 0..forced {
            let ok = search.assign(i, i as u32 + 1);
            debug_assert!(ok, "distinct seed colours cannot kill a pair");
            if !ok {
                return Decision::Infeasible;
            }
        }
        start_depth = forced;
        max_used = forced as u32;
    }
    match search.dfs(start_depth, max_used, clock) {
        Step::Found => Decision::Feasible(search.witness.expect("witness recorded")),
        Step::Exhausted => Decision::Infeasible,
        Step::Aborted => Decision::BudgetExceeded,
    }
}

/// Is there a colouring of `g` with palette `1..=k` that `kind`-rainbow
/// connects it?
pub fn decide_k(
    g: &Graph,
    kind: ParameterKind,
    k: usize,
    cfg: &SolverConfig,
) -> Result<Decision, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let mut clock = Clock::new(&cfg.budget);
    Ok(decide_internal(g, kind, k, cfg, &mut clock))
}

fn compute_with_clock(
    g: &Graph,
    kind: ParameterKind,
    cfg: &SolverConfig,
    clock: &mut Clock,
) -> Result<ExactResult, GraphError> {
    let started = Instant::now();
    let lower0 = bounds::lower_bound(g, kind)?.value;
    let mut upper = bounds::upper_bound(g, kind)?.value;
    if cfg.budget.max_nodes == 0 {
        return Ok(ExactResult {
            kind,
            status: SolveStatus::BoundsOnly,
            value: None,
            witness: None,
            lower: lower0,
            upper,
            elapsed: started.elapsed(),
            nodes: 0,
        });
    }

    // On diameter-2 graphs, an exact src plus one fresh colour on every
    // vertex yields a verified strc certificate at src+1; the upward climb
    // then only has to refute the palettes below it.
    let mut lifted: Option<(usize, Colouring)> = None;
    if kind == ParameterKind::Strc && g.diameter() == Some(2) {
        let src = compute_with_clock(g, ParameterKind::Src, cfg, clock)?;
        if src.status == SolveStatus::Exact {
            let candidate = src.witness.as_ref().unwrap().with_all_vertices_fresh(g);
            if check_connectivity(g, &candidate, kind).expect("shaped") {
                let value = src.value.unwrap() + 1;
                upper = upper.min(value);
                lifted = Some((value, candidate));
            }
        }
    }

    let mut k = lower0;
    loop {
        if let Some((at, witness)) = &lifted {
            if k == *at {
                return Ok(ExactResult {
                    kind,
                    status: SolveStatus::Exact,
                    value: Some(k),
                    witness: Some(witness.clone()),
                    lower: k,
                    upper: k,
                    elapsed: started.elapsed(),
                    nodes: clock.nodes,
                });
            }
        }
        if clock.expired() {
            return Ok(ExactResult {
                kind,
                status: SolveStatus::BudgetExceeded,
                value: None,
                witness: None,
                lower: k,
                upper,
                elapsed: started.elapsed(),
                nodes: clock.nodes,
            });
        }
        match decide_internal(g, kind, k, cfg, clock) {
            Decision::Feasible(witness) => {
                return Ok(ExactResult {
                    kind,
                    status: SolveStatus::Exact,
                    value: Some(k),
                    witness: Some(witness),
                    lower: k,
                    upper: k,
                    elapsed: started.elapsed(),
                    nodes: clock.nodes,
                });
            }
            Decision::Infeasible => {
                assert!(
                    k < upper,
                    "no feasible palette within the structural upper bound"
                );
                k += 1;
            }
            Decision::BudgetExceeded => {
                return Ok(ExactResult {
                    kind,
                    status: SolveStatus::BudgetExceeded,
                    value: None,
                    witness: None,
                    lower: k,
                    upper,
                    elapsed: started.elapsed(),
                    nodes: clock.nodes,
                });
            }
        }
    }
}

/// Exact value of the parameter with a verified witness at the minimum
/// palette, or the best-known bracket when the budget runs out.
pub fn compute_parameter(
    g: &Graph,
    kind: ParameterKind,
    cfg: &SolverConfig,
) -> Result<ExactResult, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let mut clock = Clock::new(&cfg.budget);
    compute_with_clock(g, kind, cfg, &mut clock)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn value(g: &Graph, kind: ParameterKind) -> usize {
        compute_parameter(g, kind, &SolverConfig::default())
            .unwrap()
            .value
            .unwrap()
    }

    fn petersen() -> Graph {
        Graph::build(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn decide_examples() {
        let cfg = SolverConfig::default();
        let c5 = cycle(5);
        assert!(matches!(
            decide_k(&c5, ParameterKind::Rc, 2, &cfg).unwrap(),
            Decision::Infeasible
        ));
        assert!(matches!(
            decide_k(&c5, ParameterKind::Rc, 3, &cfg).unwrap(),
            Decision::Feasible(_)
        ));

        let k4 = complete(4);
        assert!(matches!(
            decide_k(&k4, ParameterKind::Trc, 1, &cfg).unwrap(),
            Decision::Feasible(_)
        ));

        // P_3 has two bridges and one cut-vertex: three forced-distinct
        // elements make k = 2 infeasible for the total kinds.
        let p3 = path(3);
        assert!(matches!(
            decide_k(&p3, ParameterKind::Trc, 2, &cfg).unwrap(),
            Decision::Infeasible
        ));
    }

    #[test]
    fn compute_examples() {
        assert_eq!(value(&cycle(7), ParameterKind::Rvc), 3);

        let c6 = cycle(6);
        assert_eq!(value(&c6, ParameterKind::Strc), 5);
        assert_eq!(value(&c6, ParameterKind::Trc), 5);

        // K_{2,4}
        let mut edges = Vec::new();
        for u in 0..2 {
            for v in 2..6 {
                edges.push((u, v));
            }
        }
        let k24 = Graph::build(6, &edges).unwrap();
        assert_eq!(value(&k24, ParameterKind::Src), 2);
    }

    #[test]
    fn witnesses_verify_and_are_canonical() {
        let cfg = SolverConfig {
            canonical: true,
            ..SolverConfig::default()
        };
        let c7 = cycle(7);
        for kind in ParameterKind::ALL {
            let a = compute_parameter(&c7, kind, &cfg).unwrap();
            let b = compute_parameter(&c7, kind, &cfg).unwrap();
            assert_eq!(a.value, b.value);
            let wa = a.witness.unwrap();
            assert_eq!(wa, b.witness.unwrap());
            assert!(check_connectivity(&c7, &wa, kind).unwrap());
            assert_eq!(wa.k(), a.value.unwrap());
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // Every connected graph up to n = 4, plus a deterministic slice of
        // the n = 5 level; the acceptance suite runs the large randomised
        // comparison at n <= 6.
        let cfg = SolverConfig::default();
        let unseeded = SolverConfig {
            seeding: false,
            ..SolverConfig::default()
        };
        let level5 = crate::scan::all_connected_graphs(5);
        let graphs = crate::scan::all_connected_graphs(3)
            .into_iter()
            .chain(crate::scan::all_connected_graphs(4))
            .chain(level5.into_iter().step_by(9));
        for g in graphs {
            for kind in ParameterKind::ALL {
                let got = compute_parameter(&g, kind, &cfg).unwrap().value.unwrap();
                let want = oracle::brute_force_parameter(&g, kind);
                assert_eq!(got, want, "{kind} on {g:?}");
                let plain = compute_parameter(&g, kind, &unseeded)
                    .unwrap()
                    .value
                    .unwrap();
                assert_eq!(plain, want, "unseeded {kind} on {g:?}");
            }
        }
    }

    #[test]
    fn bounds_sandwich_the_value() {
        for g in crate::scan::all_connected_graphs(5) {
            for kind in ParameterKind::ALL {
                let v = value(&g, kind);
                assert!(bounds::lower_bound(&g, kind).unwrap().value <= v);
                assert!(v <= bounds::upper_bound(&g, kind).unwrap().value);
            }
        }
    }

    #[test]
    fn feasibility_is_monotone_in_k() {
        let cfg = SolverConfig::default();
        let g = cycle(6);
        for kind in ParameterKind::ALL {
            let v = value(&g, kind);
            assert!(matches!(
                decide_k(&g, kind, v + 1, &cfg).unwrap(),
                Decision::Feasible(_)
            ));
            if v > 0 {
                assert!(matches!(
                    decide_k(&g, kind, v - 1, &cfg).unwrap(),
                    Decision::Infeasible
                ));
            }
        }
    }

    #[test]
    fn cache_overflow_falls_back_to_leaf_checks() {
        // With the candidate cache forced to overflow on every pair, the
        // solver degrades to plain search with leaf verification and must
        // still agree.
        let tiny_cache = SolverConfig {
            path_cache_cap: 0,
            ..SolverConfig::default()
        };
        for g in crate::scan::all_connected_graphs(4) {
            for kind in ParameterKind::ALL {
                let expected = value(&g, kind);
                let got = compute_parameter(&g, kind, &tiny_cache)
                    .unwrap()
                    .value
                    .unwrap();
                assert_eq!(got, expected, "{kind} on {g:?}");
            }
        }
    }

    #[test]
    fn petersen_values() {
        let g = petersen();
        assert_eq!(value(&g, ParameterKind::Rc), 3);
        // Diameter 2, so both vertex parameters are 1 and the strong total
        // value sits within one of src; trc = 4 forces strc = 4.
        assert_eq!(value(&g, ParameterKind::Rvc), 1);
        assert_eq!(value(&g, ParameterKind::Srvc), 1);
        let src = value(&g, ParameterKind::Src);
        let trc = value(&g, ParameterKind::Trc);
        let strc = value(&g, ParameterKind::Strc);
        assert_eq!((src, trc, strc), (4, 4, 4));
        assert!(strc <= src + 1);
        assert!(strc >= src.max(1));
    }

    #[test]
    fn budget_exceeded_reports_bracket() {
        let cfg = SolverConfig {
            budget: Budget {
                max_millis: u64::MAX,
                max_nodes: 3,
            },
            ..SolverConfig::default()
        };
        // The Petersen graph: big enough that three nodes cannot finish.
        let r = compute_parameter(&petersen(), ParameterKind::Src, &cfg).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert!(r.lower <= r.upper);
        assert!(r.value.is_none());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(compute_parameter(&g, ParameterKind::Rc, &SolverConfig::default()).is_err());
    }
}
