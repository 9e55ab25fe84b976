//! Structural lower and upper bounds for the six parameters.
//!
//! Lower bounds come from the diameter chain inequalities and from the fact
//! that bridges (edge kinds), cut-vertices (vertex kinds), or both jointly
//! (total kinds) must receive pairwise distinct colours. Upper bounds come
//! from spanning trees, the trivial edge count, the non-pendent vertex
//! count, and the `srvc + m` lift for total colourings.

use std::fmt;

use crate::colouring::ParameterKind;
use crate::graph::{Graph, GraphError};

/// Provenance tag naming which bound produced a value.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BoundSource {
    Diameter,
    Bridges,
    CutVertices,
    SpanningTree,
    SrvcPlusM,
    Diam2SrcPlus1,
    TrivialM,
    MinimumN2Q,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundSource::Diameter => "diameter",
            BoundSource::Bridges => "bridges",
            BoundSource::CutVertices => "cut_vertices",
            BoundSource::SpanningTree => "spanning_tree",
            BoundSource::SrvcPlusM => "srvc_plus_m",
            BoundSource::Diam2SrcPlus1 => "diam2_src_plus_1",
            BoundSource::TrivialM => "trivial_m",
            BoundSource::MinimumN2Q => "minimum_n2q",
        };
        f.write_str(s)
    }
}

/// A one-sided bound with the tags of every source achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: usize,
    pub sources: Vec<BoundSource>,
}

fn best(candidates: &[(usize, BoundSource)], take_max: bool) -> Bound {
    let value = if take_max {
        candidates.iter().map(|&(v, _)| v).max().unwrap()
    } else {
        candidates.iter().map(|&(v, _)| v).min().unwrap()
    };
    let sources = candidates
        .iter()
        .filter(|&&(v, _)| v == value)
        .map(|&(_, s)| s)
        .collect();
    Bound { value, sources }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub kind: ParameterKind,
    pub lower: usize,
    pub upper: usize,
    pub lower_sources: Vec<BoundSource>,
    pub upper_sources: Vec<BoundSource>,
}

fn require_connected(g: &Graph) -> Result<(), GraphError> {
    if g.n() >= 1 && g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::NotConnected)
    }
}

pub fn lower_bound(g: &Graph, kind: ParameterKind) -> Result<Bound, GraphError> {
    require_connected(g)?;
    let diam = g.diameter().expect("connected");
    let b = g.bridges().len();
    let c = g.cut_vertices().len();
    let bound = match kind {
        ParameterKind::Rc | ParameterKind::Src => best(
            &[(diam, BoundSource::Diameter), (b, BoundSource::Bridges)],
            true,
        ),
        ParameterKind::Rvc | ParameterKind::Srvc => best(
            &[
                (diam.saturating_sub(1), BoundSource::Diameter),
                (c, BoundSource::CutVertices),
            ],
            true,
        ),
        ParameterKind::Trc | ParameterKind::Strc => {
            // Non-complete connected graphs have diam >= 2, so the diameter
            // term already enforces the "at least 3" fact.
            let diam_term = (2 * diam).saturating_sub(1);
            let mut cands = vec![(diam_term, BoundSource::Diameter)];
            if b > 0 {
                cands.push((b + c, BoundSource::Bridges));
            }
            if c > 0 {
                cands.push((b + c, BoundSource::CutVertices));
            }
            best(&cands, true)
        }
    };
    Ok(bound)
}

pub fn upper_bound(g: &Graph, kind: ParameterKind) -> Result<Bound, GraphError> {
    upper_bound_with_src(g, kind, None)
}

/// Upper bound, optionally sharpened by an exactly known `src` value: on
/// diameter-2 graphs a strongly rainbow connected edge colouring plus one
/// fresh colour on every vertex is strongly total rainbow connected. The
/// sharpening is only sound with the exact `src`, so it is never applied
/// automatically.
pub fn upper_bound_with_src(
    g: &Graph,
    kind: ParameterKind,
    src_exact: Option<usize>,
) -> Result<Bound, GraphError> {
    require_connected(g)?;
    let n = g.n();
    let m = g.m();
    let q = (0..n).filter(|&v| g.degree(v) >= 2).count();
    let complete = g.is_complete();
    let bound = match kind {
        ParameterKind::Rc => {
            let mut cands = vec![(n.saturating_sub(1), BoundSource::SpanningTree)];
            if complete {
                cands.push((1.min(n.saturating_sub(1)), BoundSource::Diameter));
            }
            best(&cands, false)
        }
        // src is not spanning-tree monotone, so only the trivial edge count
        // applies in general.
        ParameterKind::Src => {
            let mut cands = vec![(m, BoundSource::TrivialM)];
            if complete {
                cands.push((1.min(m), BoundSource::Diameter));
            }
            best(&cands, false)
        }
        ParameterKind::Rvc | ParameterKind::Srvc => {
            let mut cands = vec![(n.saturating_sub(2).min(q), BoundSource::MinimumN2Q)];
            if complete {
                cands.push((0, BoundSource::Diameter));
            }
            best(&cands, false)
        }
        ParameterKind::Trc => {
            let mut cands = vec![
                ((2 * n).saturating_sub(3), BoundSource::SpanningTree),
                (n.saturating_sub(1) + q, BoundSource::SpanningTree),
            ];
            if complete {
                cands.push((1.min(m), BoundSource::Diameter));
            }
            let mut bound = best(&cands, false);
            bound.sources.dedup();
            bound
        }
        ParameterKind::Strc => {
            let mut cands = vec![(m + n.saturating_sub(2).min(q), BoundSource::SrvcPlusM)];
            if complete {
                cands.push((1.min(m), BoundSource::Diameter));
            }
            if let Some(src) = src_exact {
                if g.diameter() == Some(2) {
                    cands.push((src + 1, BoundSource::Diam2SrcPlus1));
                }
            }
            best(&cands, false)
        }
    };
    Ok(bound)
}

pub fn bounds_report(g: &Graph, kind: ParameterKind) -> Result<BoundsReport, GraphError> {
    let lower = lower_bound(g, kind)?;
    let upper = upper_bound(g, kind)?;
    debug_assert!(lower.value <= upper.value);
    Ok(BoundsReport {
        kind,
        lower: lower.value,
        upper: upper.value,
        lower_sources: lower.sources,
        upper_sources: upper.sources,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn lower_examples() {
        // P_4: diameter 3, three bridges, two cut-vertices.
        let p4 = path(4);
        assert_eq!(lower_bound(&p4, ParameterKind::Trc).unwrap().value, 5);

        let k5 = complete(5);
        assert_eq!(lower_bound(&k5, ParameterKind::Strc).unwrap().value, 1);

        let c8 = cycle(8);
        assert_eq!(lower_bound(&c8, ParameterKind::Rvc).unwrap().value, 3);
    }

    #[test]
    fn upper_examples() {
        let p5 = path(5);
        assert_eq!(upper_bound(&p5, ParameterKind::Rc).unwrap().value, 4);

        let star = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(upper_bound(&star, ParameterKind::Srvc).unwrap().value, 1);

        let c5 = cycle(5);
        assert_eq!(upper_bound(&c5, ParameterKind::Trc).unwrap().value, 7);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            lower_bound(&g, ParameterKind::Rc).unwrap_err(),
            GraphError::NotConnected
        );
    }

    #[test]
    fn report_names_its_sources() {
        // P_4: the trc lower bound 5 is hit by both the diameter term and
        // the bridge/cut-vertex count; the upper bound comes from the
        // spanning tree.
        let p4 = path(4);
        let report = bounds_report(&p4, ParameterKind::Trc).unwrap();
        assert_eq!((report.lower, report.upper), (5, 5));
        assert!(report.lower_sources.contains(&BoundSource::Diameter));
        assert!(report.lower_sources.contains(&BoundSource::Bridges));
        assert!(report.lower_sources.contains(&BoundSource::CutVertices));
        assert_eq!(report.upper_sources, vec![BoundSource::SpanningTree]);

        let star = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let report = bounds_report(&star, ParameterKind::Src).unwrap();
        assert_eq!(report.lower_sources, vec![BoundSource::Bridges]);
        assert_eq!(report.upper_sources, vec![BoundSource::TrivialM]);
    }

    #[test]
    fn src_refinement_only_on_diameter_two() {
        // Wheel W_5: diameter 2.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::build(6, &edges).unwrap();
        let plain = upper_bound(&w5, ParameterKind::Strc).unwrap();
        let refined = upper_bound_with_src(&w5, ParameterKind::Strc, Some(2)).unwrap();
        assert!(refined.value < plain.value);
        assert_eq!(refined.value, 3);
        assert!(refined.sources.contains(&BoundSource::Diam2SrcPlus1));

        let p4 = path(4);
        let refined = upper_bound_with_src(&p4, ParameterKind::Strc, Some(3)).unwrap();
        assert!(!refined.sources.contains(&BoundSource::Diam2SrcPlus1));
    }
}
