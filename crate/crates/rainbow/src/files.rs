//! Text formats: the graph file (`p <n> <m>` header plus `e <u> <v>` lines,
//! 1-based), the colouring file (`k <palette>` plus `v`/`e` assignment
//! lines), and graph6 for scanner streams.

use std::fmt;

use crate::colouring::Colouring;
use crate::graph::{Graph, GraphError};

#[derive(Debug)]
pub enum FileError {
    Parse { line: usize, message: String },
    Graph(GraphError),
    Io(std::io::Error),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Parse { line, message } => write!(f, "line {line}: {message}"),
            FileError::Graph(e) => write!(f, "{e}"),
            FileError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FileError {}

impl From<GraphError> for FileError {
    fn from(e: GraphError) -> Self {
        FileError::Graph(e)
    }
}

impl From<std::io::Error> for FileError {
    fn from(e: std::io::Error) -> Self {
        FileError::Io(e)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the graph file format: comments start with `c`, the first
/// non-comment line is `p <n> <m>`, followed by exactly `m` lines
/// `e <u> <v>` with 1-based endpoints.
pub fn parse_graph(text: &str) -> Result<Graph, FileError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate p line"));
                }
                let n = tok
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(line_no, "p line needs `p <n> <m>`"))?;
                let m = tok
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(line_no, "p line needs `p <n> <m>`"))?;
                if tok.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens on p line"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(line_no, "e line before p line"));
                }
                let u = tok
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(line_no, "e line needs `e <u> <v>`"))?;
                let v = tok
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(line_no, "e line needs `e <u> <v>`"))?;
                if tok.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens on e line"));
                }
                if u == 0 || v == 0 {
                    return Err(parse_err(line_no, "endpoints are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(line_no, format!("unknown record `{other}`")));
            }
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing p line"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("p line promises {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::build(n, &edges)?)
}

/// Writes the graph file; edges are emitted sorted ascending, 1-based.
pub fn graph_string(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses a colouring file against its graph: header `k <palette>`, then
/// `v <id> <colour>` and/or `e <u> <v> <colour>` lines, 1-based. A line
/// naming an element the graph does not have is a hard error.
pub fn parse_colouring(text: &str, g: &Graph) -> Result<Colouring, FileError> {
    let mut k: Option<usize> = None;
    let mut edge_colours: Option<Vec<u32>> = None;
    let mut vertex_colours: Option<Vec<u32>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        let record = tok.next().unwrap();
        let mut next_num = |what: &str| -> Result<usize, FileError> {
            tok.next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| parse_err(line_no, format!("expected {what}")))
        };
        match record {
            "k" => {
                if k.is_some() {
                    return Err(parse_err(line_no, "duplicate k line"));
                }
                k = Some(next_num("palette size")?);
            }
            "v" => {
                let id = next_num("vertex id")?;
                let colour = next_num("colour")?;
                if k.is_none() {
                    return Err(parse_err(line_no, "v line before k line"));
                }
                if id == 0 || id > g.n() {
                    return Err(parse_err(line_no, format!("unknown vertex {id}")));
                }
                if colour == 0 || colour > k.unwrap() {
                    return Err(parse_err(
                        line_no,
                        format!("colour {colour} outside palette"),
                    ));
                }
                vertex_colours.get_or_insert_with(|| vec![0; g.n()])[id - 1] = colour as u32;
            }
            "e" => {
                let u = next_num("endpoint")?;
                let v = next_num("endpoint")?;
                let colour = next_num("colour")?;
                if k.is_none() {
                    return Err(parse_err(line_no, "e line before k line"));
                }
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(parse_err(line_no, format!("unknown edge {u} {v}")));
                }
                let id = g
                    .edge_id(u - 1, v - 1)
                    .ok_or_else(|| parse_err(line_no, format!("unknown edge {u} {v}")))?;
                if colour == 0 || colour > k.unwrap() {
                    return Err(parse_err(
                        line_no,
                        format!("colour {colour} outside palette"),
                    ));
                }
                edge_colours.get_or_insert_with(|| vec![0; g.m()])[id] = colour as u32;
            }
            other => return Err(parse_err(line_no, format!("unknown record `{other}`"))),
        }
    }
    let k = k.ok_or_else(|| parse_err(0, "missing k line"))?;
    Colouring::from_parts(k, edge_colours, vertex_colours).map_err(|e| parse_err(0, e.to_string()))
}

/// Writes a colouring file: `k` header, vertex lines ascending, then edge
/// lines in edge-id order.
pub fn colouring_string(col: &Colouring, g: &Graph) -> String {
    let mut out = format!("k {}\n", col.k());
    if let Some(vs) = col.vertex_colours() {
        for (v, &c) in vs.iter().enumerate() {
            if c != 0 {
                out.push_str(&format!("v {} {}\n", v + 1, c));
            }
        }
    }
    if let Some(es) = col.edge_colours() {
        for (id, &c) in es.iter().enumerate() {
            if c != 0 {
                let (u, v) = g.edge_endpoints(id);
                out.push_str(&format!("e {} {} {}\n", u + 1, v + 1, c));
            }
        }
    }
    out
}

/// Decodes one graph6 line (standard 6-bit encoding, n <= 62).
pub fn parse_graph6(line: &str) -> Result<Graph, FileError> {
    let bytes = line.trim().as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 line"));
    }
    if bytes[0] == b'~' {
        return Err(parse_err(1, "graph6 long form (n > 62) is not supported"));
    }
    let n = bytes[0] as isize - 63;
    if !(0..=62).contains(&n) {
        return Err(parse_err(1, "bad graph6 order byte"));
    }
    let n = n as usize;
    let bits_needed = n * (n.saturating_sub(1)) / 2;
    let body = &bytes[1..];
    if body.len() != bits_needed.div_ceil(6) {
        return Err(parse_err(
            1,
            format!("graph6 body length {} does not match order {n}", body.len()),
        ));
    }
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1, "graph6 byte out of range"));
        }
        let x = b - 63;
        for shift in (0..6).rev() {
            bits.push(x >> shift & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Encodes a graph (n <= 62) as a graph6 line.
pub fn graph6_string(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 short form only");
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for &bit in chunk {
            value = value << 1 | u8::from(bit);
        }
        out.push((value + 63) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::ParameterKind;
    use proptest::prelude::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = graph_string(&g);
        assert_eq!(text, "p 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn graph_parse_errors() {
        assert!(parse_graph("e 1 2\np 2 1\n").is_err());
        assert!(parse_graph("p 2 2\ne 1 2\n").is_err());
        assert!(parse_graph("p 2 1\ne 0 2\n").is_err());
        assert!(parse_graph("p 2 1\nq 1 2\n").is_err());
        // Comments and blank lines are fine.
        let g = parse_graph("c a triangle\n\np 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn colouring_round_trip() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let col = Colouring::from_parts(2, Some(vec![1, 2]), Some(vec![2, 1, 2])).unwrap();
        let text = colouring_string(&col, &g);
        let back = parse_colouring(&text, &g).unwrap();
        assert_eq!(back, col);
    }

    #[test]
    fn colouring_unknown_element_is_hard_error() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(parse_colouring("k 1\ne 1 3 1\n", &g).is_err());
        assert!(parse_colouring("k 1\nv 4 1\n", &g).is_err());
        assert!(parse_colouring("k 1\ne 1 2 2\n", &g).is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // K_4 is C~ in graph6.
        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.n(), 4);
        // Single edge on two vertices.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        // Empty graph on one vertex.
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("~??").is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trips(n in 1usize..9, seed in 0u64..500) {
            // Cheap deterministic edge subset from the seed.
            let mut edges = Vec::new();
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let back = parse_graph6(&graph6_string(&g)).unwrap();
            prop_assert_eq!(back.edges(), g.edges());
            prop_assert_eq!(back.n(), g.n());
        }

        #[test]
        fn colouring_files_round_trip(k in 1usize..5, seed in 0u64..200) {
            let g = Graph::build(5, &[(0,1),(1,2),(2,3),(3,4),(0,4),(1,3)]).unwrap();
            let mut state = seed.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(7);
            let mut pick = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % k as u64) as u32 + 1
            };
            let edge_colours: Vec<u32> = (0..g.m()).map(|_| pick()).collect();
            let vertex_colours: Vec<u32> = (0..g.n()).map(|_| pick()).collect();
            let col = Colouring::from_parts(k, Some(edge_colours), Some(vertex_colours)).unwrap();
            let text = colouring_string(&col, &g);
            let back = parse_colouring(&text, &g).unwrap();
            prop_assert_eq!(&back, &col);
            prop_assert!(back.matches(ParameterKind::Trc));
        }
    }
}
