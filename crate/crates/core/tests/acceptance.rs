//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use rand::Rng;
use ramsey_chromatic::chromatic::chi_exact;
use ramsey_chromatic::graph::io::parse_graph6_stream;
use ramsey_chromatic::hunter::{
    complete_multipartite, embed_tree_folklore, generate_candidates, grotzsch, hunt, is_embedding, mycielski_iterates,
    mycielskian, petersen, ramsey_bruteforce, AcyclicPattern, Candidate, CandidateKind, CandidateStatus, HuntLimits,
    DEFAULT_GUARD_BITS,
};
use ramsey_chromatic::mono_matching::{
    find_mono_matching, kiraly_route, maximum_matching, ramsey_matching_number, verify_matching_certificate,
    MatchingTargets,
};
use ramsey_chromatic::mono_tree::{
    build_dual, edge_color_dual, mono_tree_certificate, vertex_coloring_from_dual, verify_tree_certificate,
};
use ramsey_chromatic::chromatic::verify_proper;
use ramsey_chromatic::{EdgeColoring, Graph};

type Check = fn() -> String;

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("matching Ramsey numbers: formula equals search threshold", formula_vs_search),
        ("largest monochromatic tree on C5 and K4, every coloring", trees_exhaustive),
        ("vertex coloring from the dual edge coloring", konig_witness),
        ("monochromatic matchings, direct and contracted routes", matchings_both_routes),
        ("blossom matching equals brute force", blossom_vs_brute_force),
        ("exact chromatic number equals subset DP", chi_vs_subset_dp),
        ("greedy tree embedding in high-chromatic hosts", folklore_embedding),
        ("no counterexample for K1,2, K1,3 and P4 with two colors", goodness_regressions),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} [{detail}] ({secs:.2}s)", i + 1),
            Err(_) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}

fn exact_chi(g: &Graph) -> usize {
    let r = chi_exact(g, u64::MAX);
    assert!(r.exact);
    r.upper
}

fn formula_vs_search() -> String {
    let mut nodes = 0;
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
        let targets = MatchingTargets::new(vec![a, b]).unwrap();
        let r = ramsey_matching_number(&targets);
        assert_eq!(r, a + 1 + (a - 1) + (b - 1));
        let patterns = [AcyclicPattern::matching(a), AcyclicPattern::matching(b)];
        let below = ramsey_bruteforce(&patterns, r - 1, DEFAULT_GUARD_BITS).unwrap();
        assert!(!below.arrowing, "K{} should avoid ({a},{b})", r - 1);
        let ec = below.avoiding_coloring.unwrap();
        let kn = Graph::complete(r - 1);
        assert!(!contains_naive(&kn.color_subgraph(&ec, 1).unwrap(), &Graph::matching(a)));
        assert!(!contains_naive(&kn.color_subgraph(&ec, 2).unwrap(), &Graph::matching(b)));
        let at = ramsey_bruteforce(&patterns, r, DEFAULT_GUARD_BITS).unwrap();
        assert!(at.arrowing, "K{r} should arrow ({a},{b})");
        nodes += below.nodes + at.nodes;
    }
    format!("5 pairs, {nodes} search nodes")
}

fn check_tree(g: &Graph, ec: &EdgeColoring, chi: usize) {
    let largest = max_mono_component(g, ec);
    assert!(largest >= chi);
    let cert = mono_tree_certificate(g, ec, chi).unwrap();
    verify_tree_certificate(g, ec, &cert).unwrap();
    assert_eq!(cert.vertices.len(), largest);
}

fn trees_exhaustive() -> String {
    let mut count = 0;
    for (g, chi) in [(Graph::cycle(5), 3), (Graph::complete(4), 4)] {
        assert_eq!(exact_chi(&g), chi);
        for ec in all_colorings(&g, 2) {
            check_tree(&g, &ec, chi);
            count += 1;
        }
    }
    format!("{count} colorings")
}

fn check_konig(g: &Graph, ec: &EdgeColoring, chi: usize) {
    let dual = build_dual(g, ec).unwrap();
    let delta = dual.max_degree();
    assert_eq!(delta, max_mono_component(g, ec));
    let links = edge_color_dual(&dual);
    let vc = vertex_coloring_from_dual(g, &dual, &links).unwrap();
    assert!(verify_proper(g, &vc).unwrap());
    assert_eq!(vc.k(), delta);
    assert_eq!(vc.used_classes(), delta);
    assert!(delta >= chi);
}

fn konig_witness() -> String {
    let mut count = 0;
    for (g, chi) in [(Graph::cycle(5), 3), (Graph::complete(4), 4)] {
        for ec in all_colorings(&g, 2) {
            check_konig(&g, &ec, chi);
            count += 1;
        }
    }
    let mut r = rng(0x4b6f_6e69);
    for (g, chi) in [(petersen(), 3), (grotzsch(), 4)] {
        assert_eq!(exact_chi(&g), chi);
        assert_eq!(chi_subset_dp(&g), chi);
        for _ in 0..1000 {
            let ec = random_coloring(&g, 2, &mut r);
            check_konig(&g, &ec, chi);
            check_tree(&g, &ec, chi);
            count += 1;
        }
    }
    format!("{count} colorings")
}

fn matchings_both_routes() -> String {
    let two = MatchingTargets::new(vec![2, 2]).unwrap();
    let three = MatchingTargets::new(vec![2, 2, 2]).unwrap();
    let hosts_two = vec![
        mycielski_iterates(4).pop().unwrap(),
        mycielskian(&Graph::complete(4)),
        complete_multipartite(&[1, 1, 1, 1, 1]).unwrap(),
        complete_multipartite(&[2, 2, 2, 2, 2]).unwrap(),
        complete_multipartite(&[1, 2, 3, 2, 1]).unwrap(),
    ];
    let hosts_three = vec![
        mycielskian(&Graph::complete(6)),
        mycielskian(&mycielskian(&Graph::complete(5))),
        complete_multipartite(&[1; 7]).unwrap(),
        complete_multipartite(&[2; 7]).unwrap(),
        complete_multipartite(&[1, 2, 3, 1, 2, 3, 1]).unwrap(),
    ];
    let mut r = rng(0x6d61_7463);
    let mut count = 0;
    for (targets, hosts, min_chi) in [(two, hosts_two, 5), (three, hosts_three, 7)] {
        let t = targets.t();
        let prepared: Vec<_> = hosts
            .into_iter()
            .map(|g| {
                let chi = chi_exact(&g, u64::MAX);
                assert!(chi.exact && chi.upper >= min_chi);
                assert!(chi.upper >= ramsey_matching_number(&targets));
                (g, chi)
            })
            .collect();
        for i in 0..1000 {
            let (g, chi) = &prepared[i % prepared.len()];
            let ec = random_coloring(g, t, &mut r);
            let direct = find_mono_matching(g, &ec, &targets).unwrap();
            verify_matching_certificate(g, &ec, &direct).unwrap();
            assert_eq!(direct.edges.len(), targets.target(direct.color));
            let (_, reduced) = kiraly_route(g, &ec, &targets, &chi.witness).unwrap();
            verify_matching_certificate(g, &ec, &reduced).unwrap();
            count += 1;
        }
    }
    format!("{count} colorings")
}

fn blossom_vs_brute_force() -> String {
    let graphs = parse_graph6_stream(GRAPHS7).unwrap();
    assert_eq!(graphs.len(), 1044);
    for g in &graphs {
        assert_eq!(maximum_matching(g).len(), max_matching_brute(g));
    }
    let mut r = rng(0x626c_6f73);
    for _ in 0..200 {
        let p = r.gen_range(0.05..0.9);
        let g = random_graph(10, p, &mut r);
        assert_eq!(maximum_matching(&g).len(), max_matching_brute(&g));
    }
    format!("{} graphs", graphs.len() + 200)
}

fn chi_vs_subset_dp() -> String {
    let mut r = rng(0x6368_6921);
    let mut graphs: Vec<Graph> = (0..200)
        .map(|_| {
            let n = r.gen_range(1..=12);
            let p = r.gen_range(0.1..0.9);
            random_graph(n, p, &mut r)
        })
        .collect();
    graphs.extend([Graph::cycle(5), petersen(), grotzsch(), complete_multipartite(&[3, 3]).unwrap()]);
    for g in &graphs {
        assert_eq!(exact_chi(g), chi_subset_dp(g));
    }
    let named: Vec<usize> = graphs[200..].iter().map(exact_chi).collect();
    assert_eq!(named, [3, 3, 4, 2]);
    format!("{} graphs", graphs.len())
}

fn folklore_embedding() -> String {
    let mut r = rng(0x7472_6565);
    let mut hosts: Vec<(Graph, usize)> = [
        Graph::cycle(7),
        petersen(),
        grotzsch(),
        mycielski_iterates(4).pop().unwrap(),
        mycielskian(&Graph::complete(5)),
        complete_multipartite(&[2; 6]).unwrap(),
        Graph::complete(6),
    ]
    .into_iter()
    .map(|g| {
        let chi = exact_chi(&g);
        (g, chi)
    })
    .collect();
    for _ in 0..5 {
        let g = random_graph(14, 0.7, &mut r);
        let chi = exact_chi(&g);
        hosts.push((g, chi));
    }
    for _ in 0..100 {
        let n = r.gen_range(1..=6);
        let tree = random_tree(n, &mut r);
        let pattern = AcyclicPattern::new(tree.clone()).unwrap();
        let eligible: Vec<&(Graph, usize)> = hosts.iter().filter(|(_, chi)| *chi >= n).collect();
        let (g, chi) = eligible[r.gen_range(0..eligible.len())];
        let map = embed_tree_folklore(g, &pattern, *chi).unwrap();
        assert!(is_embedding(g, &tree, &map));
        assert!(tree.edges().all(|e| g.has_edge(map[e.u], map[e.v])));
    }
    format!("100 trees, {} hosts", hosts.len())
}

fn goodness_regressions() -> String {
    let mut candidates: Vec<Candidate> = Vec::new();
    for kind in [
        CandidateKind::Cycles { lengths: vec![5, 7, 9, 11] },
        CandidateKind::Mycielski { count: 4 },
    ] {
        candidates.extend(generate_candidates(&kind).unwrap());
    }
    for parts in [vec![1, 1, 1], vec![2, 2, 2], vec![1; 5], vec![2; 5], vec![1, 2, 3, 2, 1], vec![1; 6], vec![2; 6], vec![1, 1, 2, 2, 3, 3]] {
        candidates.extend(generate_candidates(&CandidateKind::CompleteMultipartite { parts }).unwrap());
    }
    assert!(candidates.iter().all(|c| c.graph.n() <= 23));
    let limits = HuntLimits { coloring_budget: 10_000_000, chi_budget: u64::MAX };
    let mut summary = Vec::new();
    for (name, h, ramsey_value) in [
        ("K1,2", AcyclicPattern::star(2), 3),
        ("K1,3", AcyclicPattern::star(3), 6),
        ("P4", AcyclicPattern::path(4), 5),
    ] {
        // the Ramsey value itself, by search
        let pair = [h.clone(), h.clone()];
        assert!(!ramsey_bruteforce(&pair, ramsey_value - 1, DEFAULT_GUARD_BITS).unwrap().arrowing);
        assert!(ramsey_bruteforce(&pair, ramsey_value, DEFAULT_GUARD_BITS).unwrap().arrowing);
        let report = hunt(&h, 2, ramsey_value, candidates.clone(), limits).unwrap();
        assert!(report.counterexample.is_none(), "{name}: counterexample {:?}", report.counterexample);
        let count = |s: CandidateStatus| report.candidates.iter().filter(|c| c.status == s).count();
        let exhausted = report.candidates.iter().filter(|c| c.exhausted).count();
        assert_eq!(exhausted, count(CandidateStatus::NoCounterexample));
        summary.push(format!(
            "{name}: {} exhausted, {} inconclusive, {} skipped",
            exhausted,
            count(CandidateStatus::Inconclusive),
            count(CandidateStatus::Skipped)
        ));
    }
    summary.join("; ")
}
