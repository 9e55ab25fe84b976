//! Slow reference implementations used to cross-check the fast paths.
//!
//! Nothing here shares machinery with the solver: no pruning, no seeding,
//! no element reordering, no path caches. These are the independent oracles
//! the tests hold the real implementations against.

use std::ops::ControlFlow;

use crate::colouring::{check_connectivity, Colouring, ParameterKind};
use crate::graph::{Graph, INF};

/// Number of `u`–`v` geodesics by dynamic programming over the BFS layering:
/// `count(u, u) = 1` and `count(u, y)` sums `count(u, x)` over neighbours
/// `x` of `y` one layer closer to `u`.
pub fn geodesic_count(g: &Graph, u: usize, v: usize) -> u64 {
    let d = g.bfs_distances(u);
    if d[v] == INF {
        return 0;
    }
    let n = g.n();
    let mut order: Vec<usize> = (0..n).filter(|&x| d[x] != INF).collect();
    order.sort_by_key(|&x| d[x]);
    let mut count = vec![0u64; n];
    count[u] = 1;
    for &y in &order {
        if y == u {
            continue;
        }
        for &x in g.neighbours(y) {
            if d[x] + 1 == d[y] {
                count[y] = count[y].saturating_add(count[x]);
            }
        }
    }
    count[v]
}

/// Enumerates every simple `u`–`v` path with no length cap at all.
fn all_simple_paths<F>(g: &Graph, u: usize, v: usize, visit: &mut F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn rec<F>(
        g: &Graph,
        x: usize,
        v: usize,
        path: &mut Vec<usize>,
        visited: &mut [bool],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for &y in g.neighbours(x) {
            if visited[y] {
                continue;
            }
            path.push(y);
            if y == v {
                let flow = visit(path);
                path.pop();
                flow?;
            } else {
                visited[y] = true;
                let flow = rec(g, y, v, path, visited, visit);
                visited[y] = false;
                path.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
    if u == v {
        let _ = visit(&[u]);
        return;
    }
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    let _ = rec(g, u, v, &mut vec![u], &mut visited, visit);
}

/// Uncapped connectivity check: every pair must have a rainbow simple path
/// (any length), or a rainbow geodesic for strong kinds. Validates the
/// length caps used by the fast verifier.
pub fn rainbow_connected_uncapped(g: &Graph, col: &Colouring, kind: ParameterKind) -> bool {
    if !g.is_connected() {
        return false;
    }
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let duv = g.dist(u, v) as usize;
            let mut found = false;
            all_simple_paths(g, u, v, &mut |p| {
                if kind.is_strong() && p.len() - 1 != duv {
                    return ControlFlow::Continue(());
                }
                if crate::colouring::path_is_rainbow(g, p, col, kind).unwrap() {
                    found = true;
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// Element count in plain natural order (edges ascending, then vertices),
/// deliberately ignoring the solver's reordering heuristics.
fn natural_elements(g: &Graph, kind: ParameterKind) -> usize {
    let mut count = 0;
    if kind.colours_edges() {
        count += g.m();
    }
    if kind.colours_vertices() {
        count += g.n();
    }
    count
}

/// Per-pair candidate paths, each as a list of element indices into the
/// natural element order. Built once per palette stage so that checking a
/// single assignment is a flat scan — the enumeration of assignments below
/// stays a plain unpruned sweep.
struct PairPaths {
    paths_per_pair: Vec<Vec<Vec<u32>>>,
}

impl PairPaths {
    fn build(g: &Graph, kind: ParameterKind, k: usize) -> Option<PairPaths> {
        let n = g.n();
        let edge_base = 0u32;
        let vertex_base = if kind.colours_edges() {
            g.m() as u32
        } else {
            0
        };
        let mut paths_per_pair = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let mut paths: Vec<Vec<u32>> = Vec::new();
                let mut record = |p: &[usize]| {
                    let mut elems = Vec::new();
                    if kind.colours_edges() {
                        for w in p.windows(2) {
                            elems.push(edge_base + g.edge_id(w[0], w[1]).unwrap() as u32);
                        }
                    }
                    if kind.colours_vertices() && p.len() > 2 {
                        for &x in &p[1..p.len() - 1] {
                            elems.push(vertex_base + x as u32);
                        }
                    }
                    paths.push(elems);
                    ControlFlow::Continue(())
                };
                if kind.is_strong() {
                    g.enumerate_geodesics(u, v, &mut record).unwrap();
                } else {
                    let cap = kind.max_rainbow_path_len(k);
                    if (g.dist(u, v) as usize) > cap {
                        // No path can be rainbow at this palette.
                        return None;
                    }
                    g.enumerate_bounded_paths(u, v, cap, &mut record).unwrap();
                }
                paths_per_pair.push(paths);
            }
        }
        Some(PairPaths { paths_per_pair })
    }

    /// Does every pair have a path whose elements carry distinct colours?
    /// Palette sizes here are tiny, so a bitmask de-duplicates.
    fn satisfied(&self, assignment: &[u32]) -> bool {
        self.paths_per_pair.iter().all(|paths| {
            paths.iter().any(|elems| {
                let mut mask = 0u64;
                for &e in elems {
                    let bit = 1u64 << assignment[e as usize];
                    if mask & bit != 0 {
                        return false;
                    }
                    mask |= bit;
                }
                true
            })
        })
    }
}

/// Does some colouring with exactly `classes` colour classes verify?
/// Enumerates colourings up to renaming of colours (restricted growth
/// strings); the verifier is invariant under colour permutation, so this
/// covers all colourings with the given palette.
fn feasible_with_exact_classes(g: &Graph, kind: ParameterKind, classes: usize) -> bool {
    let len = natural_elements(g, kind);
    if classes > len {
        return false;
    }
    let Some(paths) = PairPaths::build(g, kind, classes) else {
        return false;
    };
    let mut assignment = vec![0u32; len];
    fn rec(
        paths: &PairPaths,
        classes: usize,
        assignment: &mut Vec<u32>,
        pos: usize,
        max_used: u32,
    ) -> bool {
        let len = assignment.len();
        if pos == len {
            if max_used as usize != classes {
                return false;
            }
            return paths.satisfied(assignment);
        }
        // Cannot reach `classes` distinct colours with too few slots left.
        let remaining = (len - pos) as u32;
        let top = (max_used + 1).min(classes as u32);
        for c in 1..=top {
            let new_max = max_used.max(c);
            if new_max + remaining - 1 < classes as u32 {
                continue;
            }
            assignment[pos] = c;
            if rec(paths, classes, assignment, pos + 1, new_max) {
                return true;
            }
        }
        assignment[pos] = 0;
        false
    }
    rec(&paths, classes, &mut assignment, 0, 0)
}

/// Exact parameter value by brute force: try palettes `0, 1, 2, ...` and
/// return the first that verifies. Usable up to roughly six vertices.
pub fn brute_force_parameter(g: &Graph, kind: ParameterKind) -> usize {
    assert!(g.is_connected(), "parameter of a disconnected graph");
    g.distances();
    let zero = Colouring::blank(g, kind, 0);
    if check_connectivity(g, &zero, kind).unwrap() {
        return 0;
    }
    let len = natural_elements(g, kind);
    for k in 1..=len {
        if feasible_with_exact_classes(g, kind, k) {
            return k;
        }
    }
    unreachable!("all-distinct colouring always verifies");
}

/// Brute-force graph isomorphism by permutation search; intended for n <= 8.
pub fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    assert!(n <= 8, "permutation search is only for tiny graphs");
    let mut deg_a: Vec<_> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<_> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}

fn permute(perm: &mut Vec<usize>, at: usize, test: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if at == perm.len() {
        return test(perm);
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permute(perm, at + 1, test) {
            return true;
        }
        perm.swap(at, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn geodesic_counts() {
        let c6 = cycle(6);
        assert_eq!(geodesic_count(&c6, 0, 3), 2);
        assert_eq!(geodesic_count(&c6, 0, 2), 1);
        assert_eq!(geodesic_count(&c6, 0, 0), 1);
    }

    #[test]
    fn brute_force_cycle_values() {
        // rc(C_5) = src(C_5) = 3, rvc(C_5) = srvc(C_5) = 1, trc(C_5) = strc(C_5) = 3.
        let c5 = cycle(5);
        assert_eq!(brute_force_parameter(&c5, ParameterKind::Rc), 3);
        assert_eq!(brute_force_parameter(&c5, ParameterKind::Src), 3);
        assert_eq!(brute_force_parameter(&c5, ParameterKind::Rvc), 1);
        assert_eq!(brute_force_parameter(&c5, ParameterKind::Srvc), 1);
        assert_eq!(brute_force_parameter(&c5, ParameterKind::Trc), 3);
        assert_eq!(brute_force_parameter(&c5, ParameterKind::Strc), 3);
    }

    #[test]
    fn isomorphism_sanity() {
        let c4 = cycle(4);
        let relabelled = Graph::build(4, &[(2, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert!(isomorphic_small(&c4, &relabelled));
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!isomorphic_small(&c4, &p4));
    }
}
