//! Sources of candidate host graphs with large chromatic number.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chromatic::chi_exact;
use crate::error::{Error, Result};
use crate::graph::io::parse_graph6_stream;
use crate::graph::Graph;

/// A host graph with a stable identifier for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub id: String,
    pub graph: Graph,
}

impl Candidate {
    pub fn new(id: impl Into<String>, graph: Graph) -> Self {
        Candidate { id: id.into(), graph }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CandidateKind {
    /// The first `count` Mycielski iterates starting from `K_2`:
    /// `K_2, C_5`, Grötzsch, ...
    Mycielski { count: usize },
    Kneser { n: usize, k: usize },
    CompleteMultipartite { parts: Vec<usize> },
    /// `attempts` draws of `G(n, p)`, keeping those whose exact chromatic
    /// number is at least `min_chi`. Draws where the solver runs out of
    /// budget are dropped.
    Random { n: usize, p: f64, attempts: usize, min_chi: usize, chi_budget: u64, seed: u64 },
    Cycles { lengths: Vec<usize> },
    Graph6Stream { text: String },
}

/// Mycielskian: vertices `0..n` copy `g`, `n..2n` are shadows with the
/// neighbors of their originals, `2n` is joined to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut m = Graph::empty(2 * n + 1);
    for e in g.edges() {
        m.add_edge(e.u, e.v);
        m.add_edge(n + e.u, e.v);
        m.add_edge(e.u, n + e.v);
    }
    for i in 0..n {
        m.add_edge(n + i, 2 * n);
    }
    m
}

pub fn mycielski_iterates(count: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::with_capacity(count);
    for i in 0..count {
        out.push(if i == 0 { Graph::complete(2) } else { mycielskian(&out[i - 1]) });
    }
    out
}

pub fn grotzsch() -> Graph {
    mycielski_iterates(3).pop().unwrap()
}

/// Kneser graph: `k`-subsets of `0..n` in lexicographic order, adjacent
/// when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n || n > 64 {
        return Err(Error::input(format!("kneser({n}, {k}) needs 1 <= k <= n <= 64")));
    }
    let mut subsets: Vec<u64> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        subsets.push(cur.iter().fold(0, |acc, &i| acc | 1 << i));
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    let mut g = Graph::empty(subsets.len());
    for a in 0..subsets.len() {
        for b in a + 1..subsets.len() {
            if subsets[a] & subsets[b] == 0 {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

pub fn petersen() -> Graph {
    kneser(5, 2).unwrap()
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::input("complete multipartite graph needs non-empty parts"));
    }
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut g = Graph::empty(part_of.len());
    for u in 0..part_of.len() {
        for v in u + 1..part_of.len() {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn random_gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
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

/// Deterministic candidate stream for `kind`.
pub fn generate_candidates(kind: &CandidateKind) -> Result<Box<dyn Iterator<Item = Candidate>>> {
    Ok(match kind.clone() {
        CandidateKind::Mycielski { count } => Box::new(
            mycielski_iterates(count).into_iter().enumerate().map(|(i, g)| Candidate::new(format!("mycielski-{}", i + 1), g)),
        ),
        CandidateKind::Kneser { n, k } => Box::new(std::iter::once(Candidate::new(format!("kneser-{n}-{k}"), kneser(n, k)?))),
        CandidateKind::CompleteMultipartite { parts } => {
            let id = format!("multipartite-{}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("-"));
            Box::new(std::iter::once(Candidate::new(id, complete_multipartite(&parts)?)))
        }
        CandidateKind::Random { n, p, attempts, min_chi, chi_budget, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..attempts).filter_map(move |i| {
                let g = random_gnp(n, p, &mut rng);
                let chi = chi_exact(&g, chi_budget);
                (chi.exact && chi.upper >= min_chi).then(|| Candidate::new(format!("gnp-{seed}-{i}"), g))
            }))
        }
        CandidateKind::Cycles { lengths } => {
            if lengths.iter().any(|&l| l < 3) {
                return Err(Error::input("cycles need at least 3 vertices"));
            }
            Box::new(lengths.into_iter().map(|l| Candidate::new(format!("cycle-{l}"), Graph::cycle(l))))
        }
        CandidateKind::Graph6Stream { text } => Box::new(
            parse_graph6_stream(&text)?.into_iter().enumerate().map(|(i, g)| Candidate::new(format!("g6-{}", i + 1), g)),
        ),
    })
}
