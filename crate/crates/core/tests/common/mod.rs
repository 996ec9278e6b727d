//! Slow, obviously-correct reference implementations and shared fixtures.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ramsey_chromatic::{EdgeColoring, Graph};

pub const GRAPHS7: &str = include_str!("../data/graphs7.g6");
pub const GRAPHS7_MATCHING: &str = include_str!("../data/graphs7_matching.txt");

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n()).map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u)).collect()
}

/// Chromatic number by dynamic programming over vertex subsets: the
/// fewest independent sets covering each subset.
pub fn chi_subset_dp(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "subset oracle is for small graphs");
    let adj = adjacency_masks(g);
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] as usize & s == 0))
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        // every submask of s containing its lowest vertex
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let i = sub | low;
            if independent[i] && best[s ^ i] != usize::MAX {
                best[s] = best[s].min(best[s ^ i] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

/// Maximum matching size by trying every set of edges, largest first.
pub fn max_matching_brute(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
    fn go(edges: &[(usize, usize)], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = go(rest, used);
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    skip.max(1 + go(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    go(&edges, 0)
}

/// Whether some injective map sends every edge of `h` to an edge of `g`;
/// tries all injections.
pub fn contains_naive(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if map.len() == h.n() {
            return h.edges().all(|e| g.has_edge(map[e.u], map[e.v]));
        }
        for x in 0..g.n() {
            if !used[x] {
                used[x] = true;
                map.push(x);
                if go(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    h.n() <= g.n() && go(g, h, &mut Vec::new(), &mut vec![false; g.n()])
}

/// Reachability closure: sizes of the components of the color-`c` edges,
/// over all vertices.
pub fn mono_component_sizes(g: &Graph, ec: &EdgeColoring, c: usize) -> Vec<usize> {
    let n = g.n();
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for (e, col) in ec.iter() {
        if col == c {
            reach[e.u][e.v] = true;
            reach[e.v][e.u] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..n).map(|v| reach[v].iter().filter(|&&r| r).count()).collect()
}

pub fn max_mono_component(g: &Graph, ec: &EdgeColoring) -> usize {
    (1..=ec.t()).flat_map(|c| mono_component_sizes(g, ec, c)).max().unwrap_or(0).max(g.n().min(1))
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_coloring(g: &Graph, t: usize, rng: &mut impl Rng) -> EdgeColoring {
    EdgeColoring::from_fn(g, t, |_| rng.gen_range(1..=t)).unwrap()
}

/// Uniform random labelled tree on `n` vertices from a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &x in &seq {
        degree[x] += 1;
    }
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, x);
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]);
    g
}

/// Every `t`-coloring of `g`, as color vectors in `g.edges()` order.
pub fn all_colorings(g: &Graph, t: usize) -> impl Iterator<Item = EdgeColoring> + '_ {
    let m = g.m() as u32;
    let total = (t as u64).pow(m);
    (0..total).map(move |mut code| {
        EdgeColoring::from_fn(g, t, |_| {
            let c = (code % t as u64) as usize + 1;
            code /= t as u64;
            c
        })
        .unwrap()
    })
}

/// Whether `ec` has a monochromatic copy of `h` in some color.
pub fn has_mono_copy(g: &Graph, ec: &EdgeColoring, h: &Graph) -> bool {
    (1..=ec.t()).any(|c| contains_naive(&g.color_subgraph(ec, c).unwrap(), h))
}
