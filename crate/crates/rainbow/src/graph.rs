//! Simple undirected graphs with hop distances, geodesic/path enumeration,
//! and the structural statistics (bridges, cut-vertices, diameter) that the
//! bounds and the solver seed from.

use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

/// Sentinel distance for unreachable vertex pairs.
pub const INF: u32 = u32::MAX;

/// Largest order for which the full distance matrix may be materialised.
/// Gadget generators can emit graphs far beyond this; anything touching
/// all-pairs distances on such graphs is out of desk scale by design.
const DIST_MATRIX_MAX_N: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A loop edge `(v, v)` was supplied.
    InvalidEdge {
        u: usize,
        v: usize,
    },
    /// A vertex index outside `0..n`.
    InvalidVertex {
        v: usize,
        n: usize,
    },
    /// The requested pair is not connected.
    Unreachable {
        u: usize,
        v: usize,
    },
    NotConnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidEdge { u, v } => write!(f, "invalid edge ({u}, {v})"),
            GraphError::InvalidVertex { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::Unreachable { u, v } => write!(f, "vertices {u} and {v} are unreachable"),
            GraphError::NotConnected => write!(f, "graph is not connected"),
        }
    }
}

impl std::error::Error for GraphError {}

#[derive(Clone, Debug, Default)]
struct Structure {
    /// Edge ids of bridges, ascending.
    bridges: Vec<usize>,
    /// Cut-vertices, ascending.
    cut_vertices: Vec<usize>,
}

/// Immutable simple undirected graph.
///
/// Vertices are dense indices `0..n`. Edges are stored sorted with `u < v`;
/// the index of an edge in [`Graph::edges`] is its stable edge id. The
/// distance matrix is computed on first use (eagerly at construction for
/// small graphs), so large generated gadgets stay cheap until something
/// actually needs shortest paths.
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: OnceLock<Vec<u32>>,
    structure: OnceLock<Structure>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            edges: self.edges.clone(),
            adj: self.adj.clone(),
            dist: self.dist.clone(),
            structure: self.structure.clone(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edges.len(),
            self.edges
        )
    }
}

/// Order, size, and the structural quantities the bounds are phrased in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    /// Number of non-pendent vertices (degree at least 2).
    pub q: usize,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    pub bridges: usize,
    pub cut_vertices: usize,
    pub is_complete: bool,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating edges.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::InvalidVertex { v: u, n });
            }
            if v >= n {
                return Err(GraphError::InvalidVertex { v, n });
            }
            if u == v {
                return Err(GraphError::InvalidEdge { u, v });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph {
            n,
            edges,
            adj,
            dist: OnceLock::new(),
            structure: OnceLock::new(),
        };
        if n <= 512 {
            g.distances();
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Stable id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn edge_endpoints(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Hop distances from `src` to every vertex (`INF` for unreachable).
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut d = vec![INF; self.n];
        let mut queue = std::collections::VecDeque::new();
        d[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            let dx = d[x];
            for &y in &self.adj[x] {
                if d[y] == INF {
                    d[y] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
        d
    }

    /// The full distance matrix, row-major, computed on first use.
    ///
    /// Panics for graphs above the desk-scale cap; such graphs are only ever
    /// generated, never verified.
    pub fn distances(&self) -> &[u32] {
        self.dist.get_or_init(|| {
            assert!(
                self.n <= DIST_MATRIX_MAX_N,
                "distance matrix for order {} exceeds the desk-scale cap {}",
                self.n,
                DIST_MATRIX_MAX_N
            );
            let mut matrix = vec![INF; self.n * self.n];
            for src in 0..self.n {
                let row = self.bfs_distances(src);
                matrix[src * self.n..(src + 1) * self.n].copy_from_slice(&row);
            }
            matrix
        })
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.distances()[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let d = self.bfs_distances(0);
        d.iter().all(|&x| x != INF)
    }

    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let max = *self.distances().iter().max().unwrap();
        if max == INF {
            None
        } else {
            Some(max as usize)
        }
    }

    fn structure(&self) -> &Structure {
        self.structure.get_or_init(|| self.compute_structure())
    }

    /// Edge ids of all bridges, ascending.
    pub fn bridges(&self) -> &[usize] {
        &self.structure().bridges
    }

    /// All cut-vertices, ascending.
    pub fn cut_vertices(&self) -> &[usize] {
        &self.structure().cut_vertices
    }

    pub fn stats(&self) -> GraphStats {
        let s = self.structure();
        GraphStats {
            n: self.n,
            m: self.edges.len(),
            q: (0..self.n).filter(|&v| self.degree(v) >= 2).count(),
            diameter: self.diameter(),
            bridges: s.bridges.len(),
            cut_vertices: s.cut_vertices.len(),
            is_complete: self.is_complete(),
        }
    }

    /// Iterative low-link DFS; works per component.
    fn compute_structure(&self) -> Structure {
        const UNVISITED: u32 = u32::MAX;
        let n = self.n;
        let mut ord = vec![UNVISITED; n];
        let mut low = vec![0u32; n];
        let mut children = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut bridges = Vec::new();
        let mut timer = 0u32;
        // Frame: (vertex, parent, index into adjacency list).
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if ord[root] != UNVISITED {
                continue;
            }
            ord[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let to = self.adj[v][*idx];
                    *idx += 1;
                    if to == parent {
                        continue;
                    }
                    if ord[to] == UNVISITED {
                        ord[to] = timer;
                        low[to] = timer;
                        timer += 1;
                        children[v] += 1;
                        stack.push((to, v, 0));
                    } else {
                        low[v] = low[v].min(ord[to]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > ord[parent] {
                            bridges.push(self.edge_id(parent, v).expect("tree edge"));
                        }
                        if parent != root && low[v] >= ord[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if children[root] >= 2 {
                is_cut[root] = true;
            }
        }
        bridges.sort_unstable();
        let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
        Structure {
            bridges,
            cut_vertices,
        }
    }

    /// Visits every `u`–`v` geodesic exactly once, in lexicographic
    /// vertex-sequence order. An edge `(x, y)` is usable iff it advances the
    /// BFS layering from `u` while staying on a shortest route to `v`.
    /// Returns the number of geodesics visited (all of them unless the
    /// visitor broke early).
    pub fn enumerate_geodesics<F>(
        &self,
        u: usize,
        v: usize,
        mut visit: F,
    ) -> Result<usize, GraphError>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let n = self.n;
        let d = self.distances();
        let duv = d[u * n + v];
        if duv == INF {
            return Err(GraphError::Unreachable { u, v });
        }
        let mut count = 0usize;
        let mut path = vec![u];
        if u == v {
            let _ = visit(&path);
            return Ok(1);
        }
        // (vertex, next neighbour index) stack mirrors `path`.
        let mut cursor = vec![0usize];
        loop {
            let depth = path.len() - 1;
            let x = path[depth];
            let mut advanced = false;
            while cursor[depth] < self.adj[x].len() {
                let y = self.adj[x][cursor[depth]];
                cursor[depth] += 1;
                let step = depth as u32 + 1;
                if d[u * n + y] == step && d[y * n + v] == duv - step {
                    path.push(y);
                    cursor.push(0);
                    if y == v {
                        count += 1;
                        if visit(&path).is_break() {
                            return Ok(count);
                        }
                        path.pop();
                        cursor.pop();
                    } else {
                        advanced = true;
                    }
                    break;
                }
            }
            if advanced {
                continue;
            }
            if cursor[depth] >= self.adj[x].len() {
                path.pop();
                cursor.pop();
                if path.is_empty() {
                    return Ok(count);
                }
            }
        }
    }

    /// Collects all geodesics between `u` and `v`.
    pub fn geodesics(&self, u: usize, v: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        let mut out = Vec::new();
        self.enumerate_geodesics(u, v, |p| {
            out.push(p.to_vec());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Visits every simple `u`–`v` path of length at most `max_len` exactly
    /// once, in increasing length and lexicographically within a length.
    /// A `max_len` below `dist(u, v)` visits nothing.
    pub fn enumerate_bounded_paths<F>(
        &self,
        u: usize,
        v: usize,
        max_len: usize,
        mut visit: F,
    ) -> Result<usize, GraphError>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let n = self.n;
        let d = self.distances();
        let duv = d[u * n + v];
        if duv == INF {
            return Err(GraphError::Unreachable { u, v });
        }
        let mut count = 0usize;
        if u == v {
            if visit(&[u]).is_break() {
                return Ok(1);
            }
            return Ok(1);
        }
        let mut visited = vec![false; n];
        let mut counting_visit = |p: &[usize]| {
            count += 1;
            visit(p)
        };
        // No simple path exceeds n - 1 edges.
        let max_len = max_len.min(n.saturating_sub(1));
        for target in duv as usize..=max_len {
            visited[u] = true;
            let flow = self.exact_length_paths(
                u,
                v,
                target,
                &mut vec![u],
                &mut visited,
                &mut counting_visit,
            );
            visited[u] = false;
            if flow.is_break() {
                break;
            }
        }
        Ok(count)
    }

    fn exact_length_paths<F>(
        &self,
        x: usize,
        v: usize,
        target: usize,
        path: &mut Vec<usize>,
        visited: &mut [bool],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let len = path.len() - 1;
        let n = self.n;
        let d = self.distances();
        for &y in &self.adj[x] {
            if visited[y] {
                continue;
            }
            if y == v {
                if len + 1 == target {
                    path.push(y);
                    let flow = visit(path);
                    path.pop();
                    flow?;
                }
                continue;
            }
            // Admissible pruning: remaining distance in the full graph.
            if len + 1 + d[y * n + v] as usize > target {
                continue;
            }
            visited[y] = true;
            path.push(y);
            let flow = self.exact_length_paths(y, v, target, path, visited, visit);
            path.pop();
            visited[y] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Returns `G` with vertex `u` expanded into `h`: `u` is removed, `h` is
    /// inserted, and every vertex of `h` is joined to every former neighbour
    /// of `u`. Vertices keep their order (those above `u` shift down by one);
    /// `h`'s vertices come last.
    pub fn expand_vertex(&self, u: usize, h: &Graph) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        let remap = |w: usize| if w < u { w } else { w - 1 };
        let base = self.n - 1;
        let n = base + h.n;
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if a != u && b != u {
                edges.push((remap(a), remap(b)));
            }
        }
        for &(a, b) in &h.edges {
            edges.push((base + a, base + b));
        }
        for &nb in &self.adj[u] {
            for hv in 0..h.n {
                edges.push((remap(nb), base + hv));
            }
        }
        Graph::build(n, &edges)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { v, n: self.n })
        }
    }
}
