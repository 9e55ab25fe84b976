//! Colouring certificates and the six connectivity verifiers.
//!
//! Everything else in the crate treats [`check_connectivity`] as the
//! authority: solvers and witness generators only ever return colourings
//! that pass it.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;

use crate::graph::Graph;

/// One of the six rainbow-connection parameters. The kind determines which
/// elements carry colours and whether geodesics (strong) or arbitrary paths
/// suffice.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParameterKind {
    Rc,
    Src,
    Rvc,
    Srvc,
    Trc,
    Strc,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 6] = [
        ParameterKind::Rc,
        ParameterKind::Src,
        ParameterKind::Rvc,
        ParameterKind::Srvc,
        ParameterKind::Trc,
        ParameterKind::Strc,
    ];

    pub fn colours_edges(self) -> bool {
        matches!(
            self,
            ParameterKind::Rc | ParameterKind::Src | ParameterKind::Trc | ParameterKind::Strc
        )
    }

    pub fn colours_vertices(self) -> bool {
        matches!(
            self,
            ParameterKind::Rvc | ParameterKind::Srvc | ParameterKind::Trc | ParameterKind::Strc
        )
    }

    /// Strong kinds require a rainbow geodesic for every pair.
    pub fn is_strong(self) -> bool {
        matches!(
            self,
            ParameterKind::Src | ParameterKind::Srvc | ParameterKind::Strc
        )
    }

    pub fn strong_variant(self) -> ParameterKind {
        match self {
            ParameterKind::Rc | ParameterKind::Src => ParameterKind::Src,
            ParameterKind::Rvc | ParameterKind::Srvc => ParameterKind::Srvc,
            ParameterKind::Trc | ParameterKind::Strc => ParameterKind::Strc,
        }
    }

    pub fn weak_variant(self) -> ParameterKind {
        match self {
            ParameterKind::Rc | ParameterKind::Src => ParameterKind::Rc,
            ParameterKind::Rvc | ParameterKind::Srvc => ParameterKind::Rvc,
            ParameterKind::Trc | ParameterKind::Strc => ParameterKind::Trc,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::Rc => "rc",
            ParameterKind::Src => "src",
            ParameterKind::Rvc => "rvc",
            ParameterKind::Srvc => "srvc",
            ParameterKind::Trc => "trc",
            ParameterKind::Strc => "strc",
        }
    }

    /// Longest path (in edges) that can still be rainbow under `k` colours
    /// for the non-strong kinds: a rainbow path cannot repeat a colour, so
    /// edges (rc), internal vertices (rvc), or both jointly (trc) bound it.
    pub fn max_rainbow_path_len(self, k: usize) -> usize {
        match self.weak_variant() {
            ParameterKind::Rc => k,
            ParameterKind::Rvc => k + 1,
            ParameterKind::Trc => k.div_ceil(2),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rc" => Ok(ParameterKind::Rc),
            "src" => Ok(ParameterKind::Src),
            "rvc" => Ok(ParameterKind::Rvc),
            "srvc" => Ok(ParameterKind::Srvc),
            "trc" => Ok(ParameterKind::Trc),
            "strc" => Ok(ParameterKind::Strc),
            other => Err(format!("unknown parameter kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringError {
    /// The vertex sequence is not a simple path of the graph.
    NotAPath,
    /// The colouring's element maps do not match what the kind colours.
    KindMismatch { kind: ParameterKind },
    /// A colour outside `1..=k` was supplied.
    ColourOutOfRange { colour: u32, k: usize },
}

impl fmt::Display for ColouringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColouringError::NotAPath => write!(f, "sequence is not a simple path"),
            ColouringError::KindMismatch { kind } => {
                write!(
                    f,
                    "colouring does not match the element sets of kind {kind}"
                )
            }
            ColouringError::ColourOutOfRange { colour, k } => {
                write!(f, "colour {colour} outside palette 1..={k}")
            }
        }
    }
}

impl std::error::Error for ColouringError {}

/// A palette size `k` plus colour assignments over edges and/or vertices.
///
/// Colours are `1..=k`; the value `0` marks an element that has not been
/// assigned yet (solvers build colourings incrementally, and `k = 0`
/// certificates legitimately leave every element unassigned). A path that
/// consults an unassigned element is never rainbow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    k: usize,
    edge_colours: Option<Vec<u32>>,
    vertex_colours: Option<Vec<u32>>,
}

impl Colouring {
    /// All-unassigned colouring shaped for `kind` on `g`.
    pub fn blank(g: &Graph, kind: ParameterKind, k: usize) -> Colouring {
        Colouring {
            k,
            edge_colours: kind.colours_edges().then(|| vec![0; g.m()]),
            vertex_colours: kind.colours_vertices().then(|| vec![0; g.n()]),
        }
    }

    pub fn from_parts(
        k: usize,
        edge_colours: Option<Vec<u32>>,
        vertex_colours: Option<Vec<u32>>,
    ) -> Result<Colouring, ColouringError> {
        for &c in edge_colours.iter().chain(vertex_colours.iter()).flatten() {
            if c as usize > k {
                return Err(ColouringError::ColourOutOfRange { colour: c, k });
            }
        }
        Ok(Colouring {
            k,
            edge_colours,
            vertex_colours,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colours_edges(&self) -> bool {
        self.edge_colours.is_some()
    }

    pub fn colours_vertices(&self) -> bool {
        self.vertex_colours.is_some()
    }

    pub fn matches(&self, kind: ParameterKind) -> bool {
        self.colours_edges() == kind.colours_edges()
            && self.colours_vertices() == kind.colours_vertices()
    }

    /// Colour of edge `id`; 0 when unassigned.
    pub fn edge_colour(&self, id: usize) -> u32 {
        self.edge_colours.as_ref().map_or(0, |m| m[id])
    }

    /// Colour of vertex `v`; 0 when unassigned.
    pub fn vertex_colour(&self, v: usize) -> u32 {
        self.vertex_colours.as_ref().map_or(0, |m| m[v])
    }

    pub fn set_edge_colour(&mut self, id: usize, colour: u32) {
        self.edge_colours.as_mut().expect("edge map present")[id] = colour;
    }

    pub fn set_vertex_colour(&mut self, v: usize, colour: u32) {
        self.vertex_colours.as_mut().expect("vertex map present")[v] = colour;
    }

    pub fn edge_colours(&self) -> Option<&[u32]> {
        self.edge_colours.as_deref()
    }

    pub fn vertex_colours(&self) -> Option<&[u32]> {
        self.vertex_colours.as_deref()
    }

    /// True when every present map is total over its element set.
    pub fn is_total(&self) -> bool {
        self.edge_colours
            .iter()
            .chain(self.vertex_colours.iter())
            .flatten()
            .all(|&c| c != 0)
    }

    /// Extends the palette by one fresh colour and paints every vertex with
    /// it. Converts an edge-kind certificate into a total-kind candidate;
    /// on diameter-2 graphs this preserves strong rainbow connectivity.
    pub fn with_all_vertices_fresh(&self, g: &Graph) -> Colouring {
        let fresh = self.k as u32 + 1;
        Colouring {
            k: self.k + 1,
            edge_colours: self.edge_colours.clone(),
            vertex_colours: Some(vec![fresh; g.n()]),
        }
    }
}

/// The kind-relevant colours along a path: edge colours, internal-vertex
/// colours, or both jointly. Endpoint vertex colours never count.
fn relevant_colours(
    g: &Graph,
    path: &[usize],
    col: &Colouring,
    kind: ParameterKind,
    out: &mut Vec<u32>,
) {
    out.clear();
    if kind.colours_edges() {
        for w in path.windows(2) {
            let id = g.edge_id(w[0], w[1]).expect("path edge");
            out.push(col.edge_colour(id));
        }
    }
    if kind.colours_vertices() && path.len() > 2 {
        for &v in &path[1..path.len() - 1] {
            out.push(col.vertex_colour(v));
        }
    }
}

/// No unassigned colours and no repeats. Paths are short; quadratic scan
/// beats allocating a set.
fn multiset_is_rainbow(colours: &[u32]) -> bool {
    for (i, &c) in colours.iter().enumerate() {
        if c == 0 {
            return false;
        }
        if colours[i + 1..].contains(&c) {
            return false;
        }
    }
    true
}

/// Is `path` rainbow for `kind` under `col`? A single vertex is vacuously
/// rainbow for every kind; a single edge is vacuously rainbow for the
/// vertex kinds.
pub fn path_is_rainbow(
    g: &Graph,
    path: &[usize],
    col: &Colouring,
    kind: ParameterKind,
) -> Result<bool, ColouringError> {
    if path.is_empty() {
        return Err(ColouringError::NotAPath);
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || seen[v] {
            return Err(ColouringError::NotAPath);
        }
        seen[v] = true;
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(ColouringError::NotAPath);
        }
    }
    let mut colours = Vec::new();
    relevant_colours(g, path, col, kind, &mut colours);
    Ok(multiset_is_rainbow(&colours))
}

/// A vertex pair with no rainbow connection of the required sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    /// Candidate paths examined for this pair before giving up.
    pub witness_paths_checked: usize,
}

fn pair_has_rainbow(
    g: &Graph,
    col: &Colouring,
    kind: ParameterKind,
    u: usize,
    v: usize,
    checked: &mut usize,
) -> bool {
    let mut colours = Vec::new();
    let mut found = false;
    if kind.is_strong() {
        g.enumerate_geodesics(u, v, |p| {
            *checked += 1;
            relevant_colours(g, p, col, kind, &mut colours);
            if multiset_is_rainbow(&colours) {
                found = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .expect("connected pair");
    } else {
        let cap = kind.max_rainbow_path_len(col.k());
        if (g.dist(u, v) as usize) > cap {
            return false;
        }
        g.enumerate_bounded_paths(u, v, cap, |p| {
            *checked += 1;
            relevant_colours(g, p, col, kind, &mut colours);
            if multiset_is_rainbow(&colours) {
                found = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .expect("connected pair");
    }
    found
}

fn check_preconditions(
    g: &Graph,
    col: &Colouring,
    kind: ParameterKind,
) -> Result<(), ColouringError> {
    if !col.matches(kind) {
        return Err(ColouringError::KindMismatch { kind });
    }
    if let Some(m) = col.edge_colours() {
        if m.len() != g.m() {
            return Err(ColouringError::KindMismatch { kind });
        }
    }
    if let Some(m) = col.vertex_colours() {
        if m.len() != g.n() {
            return Err(ColouringError::KindMismatch { kind });
        }
    }
    Ok(())
}

/// True iff every vertex pair of the connected graph `g` has a rainbow
/// connection of the sort `kind` requires: some geodesic for the strong
/// kinds, some path of rainbow-feasible length for the others.
///
/// Pairs are checked in parallel; the result is a pure conjunction and does
/// not depend on scheduling. A disconnected graph never verifies.
pub fn check_connectivity(
    g: &Graph,
    col: &Colouring,
    kind: ParameterKind,
) -> Result<bool, ColouringError> {
    check_preconditions(g, col, kind)?;
    if !g.is_connected() {
        return Ok(false);
    }
    g.distances();
    let n = g.n();
    // Parallel dispatch costs more than the work below this size.
    if n <= 16 {
        for u in 0..n {
            for v in u + 1..n {
                if !pair_has_rainbow(g, col, kind, u, v, &mut 0) {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(pairs
        .par_iter()
        .all(|&(u, v)| pair_has_rainbow(g, col, kind, u, v, &mut 0)))
}

/// The lexicographically least failing pair, or `None` when the certificate
/// verifies.
pub fn find_violation(
    g: &Graph,
    col: &Colouring,
    kind: ParameterKind,
) -> Result<Option<Violation>, ColouringError> {
    check_preconditions(g, col, kind)?;
    if !g.is_connected() {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.dist(u, v) == crate::graph::INF {
                    return Ok(Some(Violation {
                        u,
                        v,
                        witness_paths_checked: 0,
                    }));
                }
            }
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let mut checked = 0;
            if !pair_has_rainbow(g, col, kind, u, v, &mut checked) {
                return Ok(Some(Violation {
                    u,
                    v,
                    witness_paths_checked: checked,
                }));
            }
        }
    }
    Ok(None)
}
