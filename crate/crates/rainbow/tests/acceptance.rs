//! Acceptance suite: one test per criterion, each printing a pass line.
//! Values are exact integers throughout — tolerance is zero.
//!
//! Long-running parts sit behind `#[ignore]`; run them with
//! `cargo test --test acceptance -- --ignored`.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use rainbow::bounds::lower_bound;
use rainbow::colouring::{check_connectivity, ParameterKind};
use rainbow::constructions::{
    make_construction, realizability_witness, ConstructionDescriptor, ParameterPair, Realizability,
    SelfCheck,
};
use rainbow::families::{family_graph, family_value, family_witness, FamilyDescriptor};
use rainbow::graph::Graph;
use rainbow::oracle;
use rainbow::scan::{scan_invariants, GraphSource, ScanConfig};
use rainbow::solver::{compute_parameter, decide_k, Decision, SolverConfig};

use ParameterKind::*;

fn solve(g: &Graph, kind: ParameterKind) -> usize {
    compute_parameter(g, kind, &SolverConfig::default())
        .unwrap()
        .value
        .expect("exact value within default budget")
}

fn pass(criterion: &str, detail: &str, elapsed: Duration) {
    println!(
        "criterion {criterion} pass: {detail} ({} ms)",
        elapsed.as_millis()
    );
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

/// Uniform random labelled tree on n vertices via a random parent array.
fn random_tree(rng: &mut XorShift, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.below(v), v)).collect();
    Graph::build(n, &edges).unwrap()
}

#[test]
fn criterion_01_cycle_tables_exact() {
    let start = Instant::now();
    let expected_vertex = [0usize, 1, 1, 2, 3, 3, 3];
    for (i, n) in (3..=9).enumerate() {
        let g = family_graph(&FamilyDescriptor::Cycle { n }).unwrap();
        let t = Instant::now();
        assert_eq!(solve(&g, Rvc), expected_vertex[i], "rvc(C_{n})");
        assert_eq!(solve(&g, Srvc), expected_vertex[i], "srvc(C_{n})");
        assert!(t.elapsed() < Duration::from_secs(60));
    }
    let expected_total = [1usize, 3, 3, 5];
    for (i, n) in (3..=6).enumerate() {
        let g = family_graph(&FamilyDescriptor::Cycle { n }).unwrap();
        let t = Instant::now();
        assert_eq!(solve(&g, Trc), expected_total[i], "trc(C_{n})");
        assert_eq!(solve(&g, Strc), expected_total[i], "strc(C_{n})");
        assert!(t.elapsed() < Duration::from_secs(60));
    }
    pass(
        "01",
        "cycle tables reproduced by exact search",
        start.elapsed(),
    );
}

#[test]
fn criterion_02_cycle_witnesses() {
    let start = Instant::now();
    for n in 3..=16 {
        let desc = FamilyDescriptor::Cycle { n };
        let g = family_graph(&desc).unwrap();
        for kind in ParameterKind::ALL {
            let value = family_value(&desc, kind).unwrap();
            let w = family_witness(&desc, kind).unwrap();
            assert_eq!(w.k(), value, "{kind} palette on C_{n}");
            assert!(
                check_connectivity(&g, &w, kind).unwrap(),
                "{kind} witness on C_{n}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(
        "02",
        "cycle witnesses verify at table palettes for n <= 16",
        elapsed,
    );
}

#[test]
fn criterion_03_wheels() {
    let start = Instant::now();
    let expected = [1usize, 3, 3, 3];
    for (i, n) in (3..=6).enumerate() {
        let g = family_graph(&FamilyDescriptor::Wheel { n }).unwrap();
        assert_eq!(solve(&g, Strc), expected[i], "strc(W_{n})");
    }
    let witness_start = Instant::now();
    for n in 3..=30 {
        let desc = FamilyDescriptor::Wheel { n };
        let g = family_graph(&desc).unwrap();
        for kind in [Src, Strc] {
            let value = family_value(&desc, kind).unwrap();
            let expected = match (kind, n) {
                (Src, _) => n.div_ceil(3),
                (Strc, 3) => 1,
                _ => n.div_ceil(3) + 1,
            };
            assert_eq!(value, expected);
            let w = family_witness(&desc, kind).unwrap();
            assert_eq!(w.k(), value);
            assert!(
                check_connectivity(&g, &w, kind).unwrap(),
                "{kind} witness on W_{n}"
            );
        }
    }
    assert!(witness_start.elapsed() < Duration::from_secs(30));
    pass(
        "03",
        "wheel strc exact for n <= 6 and witnesses for n <= 30",
        start.elapsed(),
    );
}

#[test]
fn criterion_04_complete_bipartite() {
    let start = Instant::now();
    let k24 = family_graph(&FamilyDescriptor::CompleteBipartite { m: 2, n: 4 }).unwrap();
    let k25 = family_graph(&FamilyDescriptor::CompleteBipartite { m: 2, n: 5 }).unwrap();
    let exact = Instant::now();
    assert_eq!(solve(&k24, Src), 2);
    assert_eq!(solve(&k25, Src), 3);
    assert_eq!(solve(&k24, Strc), 3);
    assert!(exact.elapsed() < Duration::from_secs(60));
    for (m, max_n) in [(2usize, 16usize), (3, 27)] {
        for n in m..=max_n {
            let desc = FamilyDescriptor::CompleteBipartite { m, n };
            let g = family_graph(&desc).unwrap();
            let b = rainbow::families::ceil_root(n, m);
            for (kind, value) in [(Src, b), (Strc, b + 1)] {
                assert_eq!(family_value(&desc, kind).unwrap(), value);
                let w = family_witness(&desc, kind).unwrap();
                assert_eq!(w.k(), value);
                assert!(
                    check_connectivity(&g, &w, kind).unwrap(),
                    "{kind} witness on K_({m},{n})"
                );
            }
        }
    }
    pass(
        "04",
        "bipartite exact values and vector witnesses",
        start.elapsed(),
    );
}

#[test]
fn criterion_05_multipartite() {
    let start = Instant::now();
    let k114 = family_graph(&FamilyDescriptor::CompleteMultipartite {
        sizes: vec![1, 1, 4],
    })
    .unwrap();
    let k122 = family_graph(&FamilyDescriptor::CompleteMultipartite {
        sizes: vec![1, 2, 2],
    })
    .unwrap();
    assert_eq!(solve(&k114, Strc), 3);
    assert_eq!(solve(&k122, Strc), 3);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60));
    pass(
        "05",
        "multipartite strc exact on K_{1,1,4} and K_{1,2,2}",
        elapsed,
    );
}

#[test]
fn criterion_06_trees() {
    let start = Instant::now();
    let mut rng = XorShift(0x5eed_cafe_f00d_0001);
    for trial in 0..20 {
        let n = 4 + rng.below(7); // 4..=10
        let g = random_tree(&mut rng, n);
        let q = (0..n).filter(|&v| g.degree(v) >= 2).count();
        for (kind, expected) in [
            (Rc, n - 1),
            (Src, n - 1),
            (Rvc, q),
            (Srvc, q),
            (Trc, n - 1 + q),
            (Strc, n - 1 + q),
        ] {
            assert_eq!(solve(&g, kind), expected, "{kind} on tree #{trial} {g:?}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60));
    pass(
        "06",
        "20 random trees match the closed formulas for all six kinds",
        elapsed,
    );
}

#[test]
fn criterion_07_nonmonotonicity() {
    let start = Instant::now();
    let cfg = SolverConfig::default();

    // Figure 1(a): src(H_1) = 4 by sandwich, src(G_1) = 5 by exact search.
    let fig_a = make_construction(&ConstructionDescriptor::Figure1a).unwrap();
    let h1 = &fig_a.graph;
    assert_eq!(lower_bound(h1, Src).unwrap().value, 4);
    let figure = &fig_a.proof_colourings[0];
    assert_eq!(figure.check, SelfCheck::Verified);
    assert_eq!(figure.colouring.k(), 4);
    let g1 = &fig_a.variants[0].1;
    let t = Instant::now();
    assert_eq!(solve(g1, Src), 5, "src(G_1)");
    assert!(t.elapsed() < Duration::from_secs(300));

    // Figure 1(b): srvc(H_2) = 6 by sandwich, srvc(G_2) >= 7 by seeded
    // refutation at k = 6.
    let fig_b = make_construction(&ConstructionDescriptor::Figure1b).unwrap();
    let h2 = &fig_b.graph;
    assert_eq!(lower_bound(h2, Srvc).unwrap().value, 6);
    assert_eq!(fig_b.proof_colourings[0].check, SelfCheck::Verified);
    assert_eq!(fig_b.proof_colourings[0].colouring.k(), 6);
    let g2 = &fig_b.variants[0].1;
    let t = Instant::now();
    assert!(
        matches!(decide_k(g2, Srvc, 6, &cfg).unwrap(), Decision::Infeasible),
        "srvc(G_2) must exceed 6"
    );
    assert!(t.elapsed() < Duration::from_secs(600));

    // Figure 1(c): strc(H_3) <= 14 by the verified figure colouring.
    let fig_c = make_construction(&ConstructionDescriptor::Figure1c).unwrap();
    assert_eq!(fig_c.proof_colourings[0].check, SelfCheck::Verified);
    assert_eq!(fig_c.proof_colourings[0].colouring.k(), 14);
    // And 14 is forced structurally: eight bridges plus six cut-vertices.
    assert_eq!(lower_bound(&fig_c.graph, Strc).unwrap().value, 14);

    pass(
        "07",
        "figure pairs: src 5>4, srvc >=7>6, strc(H_3) <= 14",
        start.elapsed(),
    );
}

#[test]
#[ignore = "long-running refutation; run with --ignored"]
fn criterion_07_g3_refutation() {
    let start = Instant::now();
    let fig_c = make_construction(&ConstructionDescriptor::Figure1c).unwrap();
    let g3 = &fig_c.variants[0].1;
    let cfg = SolverConfig {
        budget: rainbow::solver::Budget {
            max_millis: 30 * 60 * 1000,
            max_nodes: u64::MAX,
        },
        ..SolverConfig::default()
    };
    let t = Instant::now();
    assert!(
        matches!(decide_k(g3, Strc, 14, &cfg).unwrap(), Decision::Infeasible),
        "strc(G_3) must exceed 14"
    );
    assert!(t.elapsed() < Duration::from_secs(30 * 60));
    pass(
        "07b",
        "strc(G_3) >= 15 by seeded refutation at k = 14",
        start.elapsed(),
    );
}

#[test]
fn criterion_08_fb_gadget() {
    let start = Instant::now();
    let bundle = make_construction(&ConstructionDescriptor::Fb { b: 3 }).unwrap();
    assert_eq!(bundle.graph.n(), 18);
    let t = Instant::now();
    assert_eq!(solve(&bundle.graph, Rvc), 3, "rvc(F_3)");
    assert_eq!(solve(&bundle.graph, Srvc), 3, "srvc(F_3)");
    assert!(t.elapsed() < Duration::from_secs(300));
    let witness_start = Instant::now();
    for b in 3..=8 {
        let bundle = make_construction(&ConstructionDescriptor::Fb { b }).unwrap();
        for pc in &bundle.proof_colourings {
            assert_eq!(pc.check, SelfCheck::Verified, "{} on F_{b}", pc.label);
        }
        assert_eq!(bundle.proof_colourings[0].colouring.k(), 3);
        assert_eq!(bundle.proof_colourings[1].colouring.k(), b);
    }
    assert!(witness_start.elapsed() < Duration::from_secs(60));
    pass(
        "08",
        "rvc(F_3) = srvc(F_3) = 3 exactly; f and g verify for b <= 8",
        start.elapsed(),
    );
}

#[test]
fn criterion_09_fab_gadget() {
    let start = Instant::now();
    let bundle = make_construction(&ConstructionDescriptor::Fab { a: 4, b: 5 }).unwrap();
    assert_eq!(bundle.graph.n(), 75);
    // c verifies as rvc at 4 colours; diameter 5 gives rvc >= 4.
    let c = &bundle.proof_colourings[0];
    assert_eq!(
        (c.kind, c.colouring.k(), c.check),
        (Rvc, 4, SelfCheck::Verified)
    );
    assert_eq!(bundle.graph.diameter(), Some(5));
    assert_eq!(lower_bound(&bundle.graph, Rvc).unwrap().value, 4);
    // g verifies as srvc at 5 colours. The srvc lower bound of 5 is not
    // desk-verifiable by exhaustive search at 75 vertices and is accepted
    // as witness-plus-published-proof.
    let g = &bundle.proof_colourings[1];
    assert_eq!(
        (g.kind, g.colouring.k(), g.check),
        (Srvc, 5, SelfCheck::Verified)
    );
    println!(
        "criterion 09 note: the srvc lower bound 5 on Fab(4,5) is out of reach for \
         exhaustive refutation at 75 vertices; only the 5-colour certificate is \
         machine-checked here"
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60));
    pass(
        "09",
        "Fab(4,5): rvc = 4 by sandwich, srvc <= 5 by verified witness",
        elapsed,
    );
}

#[test]
fn criterion_10_gabm_surrogates() {
    let start = Instant::now();
    // f verifies as trc at a = 5 colours on the (m = 3, n = 10) surrogate.
    let t = Instant::now();
    let small = make_construction(&ConstructionDescriptor::Gabm {
        a: 5,
        b: 6,
        m: 3,
        n_override: Some(10),
    })
    .unwrap();
    let f = &small.proof_colourings[0];
    assert_eq!(
        (f.label, f.kind, f.colouring.k(), f.check),
        ("f", Trc, 5, SelfCheck::Verified)
    );
    assert!(t.elapsed() < Duration::from_secs(60));

    // Theorem-mode generation for (a = 5, b = 6): m = 8 is the least rank
    // with 5^7 > 4^8, giving 65537 class vertices; structural bookkeeping
    // only, verification explicitly skipped.
    let t = Instant::now();
    let theorem = make_construction(&ConstructionDescriptor::Gabm {
        a: 5,
        b: 6,
        m: 8,
        n_override: None,
    })
    .unwrap();
    let g = &theorem.graph;
    assert_eq!(g.n(), 65537 + 8 + 4);
    assert_eq!(g.m(), 8 * 7 / 2 + 8 * 65537 + 4);
    assert_eq!((0..g.n()).filter(|&v| g.degree(v) == 1).count(), 4);
    assert_eq!(g.bridges().len(), 4);
    assert_eq!(g.cut_vertices().len(), 1);
    assert!(g.is_connected());
    assert!(theorem
        .proof_colourings
        .iter()
        .all(|pc| pc.check == SelfCheck::SkippedNotDeskVerifiable));
    assert!(theorem.notes.iter().any(|n| n.contains("skipped")));
    assert!(t.elapsed() < Duration::from_secs(60));
    pass(
        "10",
        "surrogate f at 5 colours; theorem-mode generation checked structurally",
        start.elapsed(),
    );
}

/// Requirement this criterion was written against: g verifies as strc at
/// b = 5 colours on the (a = 5, m = 4, n = 60) surrogate. No such
/// certificate exists: the four pendant edges, the hub vertex, and each
/// clique edge at the hub lie together on unique length-2 geodesics and
/// are pairwise forced-distinct — six colours minimum whenever a = 5 and
/// m >= 2, for any total colouring whatsoever. This test is therefore
/// expected to stay red; the companions below exercise the same machinery
/// soundly (the five-colour impossibility, and the b = 6 certificate).
#[test]
fn criterion_10_g_strc_at_b5_as_stated() {
    let bundle = make_construction(&ConstructionDescriptor::Gabm {
        a: 5,
        b: 5,
        m: 4,
        n_override: Some(60),
    })
    .expect("the stated surrogate must build and its g colouring must self-check");
    let g = bundle
        .proof_colourings
        .iter()
        .find(|pc| pc.label == "g")
        .expect("g colouring present");
    assert_eq!(g.colouring.k(), 5);
    assert_eq!(g.check, SelfCheck::Verified);
}

#[test]
fn criterion_10_g_strc_companion() {
    let start = Instant::now();
    // The impossibility at five colours, machine-checked on a small
    // instance of the same shape: strc > 5 for any a = 5 gadget.
    let tiny = make_construction(&ConstructionDescriptor::Gabm {
        a: 5,
        b: 6,
        m: 2,
        n_override: Some(3),
    })
    .unwrap();
    assert!(matches!(
        decide_k(&tiny.graph, Strc, 5, &SolverConfig::default()).unwrap(),
        Decision::Infeasible
    ));
    // The sound variant of the stated check: g verifies as strc at b = 6
    // on (a = 5, m = 4, n = 60), where 5^3 = 125 >= 60.
    let t = Instant::now();
    let bundle = make_construction(&ConstructionDescriptor::Gabm {
        a: 5,
        b: 6,
        m: 4,
        n_override: Some(60),
    })
    .unwrap();
    let g = bundle
        .proof_colourings
        .iter()
        .find(|pc| pc.label == "g")
        .unwrap();
    assert_eq!(
        (g.kind, g.colouring.k(), g.check),
        (Strc, 6, SelfCheck::Verified)
    );
    assert!(t.elapsed() < Duration::from_secs(60));
    pass(
        "10b",
        "g verifies at b = 6 on (a=5, m=4, n=60); 5-colour impossibility checked",
        start.elapsed(),
    );
}

#[test]
fn criterion_11_invariant_scan_n5() {
    let start = Instant::now();
    let outcome = scan_invariants(
        &GraphSource::Enumerated { max_n: 5 },
        &ScanConfig::default(),
    );
    assert!(outcome.complete);
    assert_eq!(outcome.graphs_checked, 1 + 4 + 38 + 728);
    assert!(outcome.violations.is_empty(), "{:?}", outcome.violations);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(15 * 60));
    pass(
        "11",
        "all invariants and the conjecture hold on every connected graph, n <= 5",
        elapsed,
    );
}

#[test]
#[ignore = "n = 6 level; run with --ignored"]
fn criterion_11_invariant_scan_n6() {
    let start = Instant::now();
    let outcome = scan_invariants(
        &GraphSource::Enumerated { max_n: 6 },
        &ScanConfig::default(),
    );
    assert!(outcome.complete);
    assert_eq!(outcome.graphs_checked, 1 + 4 + 38 + 728 + 26704);
    assert!(outcome.violations.is_empty(), "{:?}", outcome.violations);
    pass("11b", "invariant scan extended to n = 6", start.elapsed());
}

#[test]
fn criterion_12_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = XorShift(0xab5e_11ed_5eed_0002);
    let mut graphs = Vec::new();
    while graphs.len() < 200 {
        let n = 3 + rng.below(4); // 3..=6
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|_| rng.next().is_multiple_of(2))
            .collect();
        let g = Graph::build(n, &edges).unwrap();
        if g.is_connected() && g.n() >= 2 {
            graphs.push(g);
        }
    }
    let cfg = SolverConfig::default();
    graphs.par_iter().for_each(|g| {
        for kind in ParameterKind::ALL {
            let fast = compute_parameter(g, kind, &cfg).unwrap().value.unwrap();
            let slow = oracle::brute_force_parameter(g, kind);
            assert_eq!(fast, slow, "{kind} on {g:?}");
        }
    });
    pass(
        "12",
        "pruned+seeded solver equals unpruned brute force on 200 random graphs",
        start.elapsed(),
    );
}

#[test]
fn criterion_13_realizability() {
    let start = Instant::now();
    // rvc/srvc-admissible pairs with their witnesses.
    for (a, b) in [(1usize, 1usize), (2, 2), (3, 3), (3, 4), (3, 5), (4, 5)] {
        let witness = match realizability_witness(a, b, ParameterPair::RvcSrvc) {
            Realizability::Witness {
                graph,
                construction,
            } => (graph, construction),
            other => panic!("expected witness for rvc/srvc ({a},{b}), got {other:?}"),
        };
        let (g, construction) = witness;
        match (a, b) {
            // Small witnesses validate in full by exact search.
            (a, b) if a == b => {
                assert_eq!(solve(&g, Rvc), a, "{construction}");
                assert_eq!(solve(&g, Srvc), b, "{construction}");
            }
            (3, b) => {
                // F_b: rvc = 3 and srvc = b exactly, by refutation plus the
                // bundled certificates.
                let bundle = make_construction(&ConstructionDescriptor::Fb { b }).unwrap();
                assert_eq!(g.edges(), bundle.graph.edges());
                let cfg = SolverConfig::default();
                assert!(matches!(
                    decide_k(&g, Rvc, 2, &cfg).unwrap(),
                    Decision::Infeasible
                ));
                assert!(matches!(
                    decide_k(&g, Srvc, b - 1, &cfg).unwrap(),
                    Decision::Infeasible
                ));
                for pc in &bundle.proof_colourings {
                    assert_eq!(pc.check, SelfCheck::Verified);
                }
            }
            (4, 5) => {
                // F_(4,5): the desk-checkable halves are the verified
                // certificates and the diameter bound (criterion 9).
                assert_eq!(g.n(), 75);
                assert_eq!(lower_bound(&g, Rvc).unwrap().value, 4);
            }
            _ => unreachable!(),
        }
    }
    // trc/strc-admissible pairs.
    for (a, b) in [(1usize, 1usize), (3, 3), (4, 4), (5, 5)] {
        match realizability_witness(a, b, ParameterPair::TrcStrc) {
            Realizability::Witness { graph, .. } => {
                assert_eq!(solve(&graph, Trc), a);
                assert_eq!(solve(&graph, Strc), b);
            }
            other => panic!("expected witness for trc/strc ({a},{b}), got {other:?}"),
        }
    }
    // Inadmissible pairs return the violated clause.
    for (a, b, pair, needle) in [
        (2usize, 3usize, ParameterPair::RvcSrvc, "a = 2"),
        (1, 2, ParameterPair::RvcSrvc, "a = 1"),
        (2, 2, ParameterPair::TrcStrc, "2"),
        (4, 5, ParameterPair::TrcStrc, "trc = 4"),
        (3, 4, ParameterPair::TrcStrc, "trc = 3"),
        (5, 4, ParameterPair::TrcStrc, "a <= b"),
    ] {
        match realizability_witness(a, b, pair) {
            Realizability::Infeasible { clause } => {
                assert!(clause.contains(needle), "({a},{b}) clause: {clause}");
            }
            other => panic!("expected infeasible for ({a},{b}), got {other:?}"),
        }
    }
    pass(
        "13",
        "realizability witnesses validate; inadmissible pairs name their clause",
        start.elapsed(),
    );
}
