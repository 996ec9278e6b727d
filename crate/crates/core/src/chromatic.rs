//! Chromatic number bounds and an exact DSATUR branch and bound, always with
//! a proper coloring as witness for the upper bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};

/// Default node-expansion budget for [`chi_exact`].
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    /// Smallest-last (degeneracy) order.
    Degeneracy,
    Dsatur,
    /// Caller-supplied permutation of `0..n`.
    Given(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: VertexColoring,
}

#[derive(Serialize, Deserialize)]
struct ChiJson {
    lower: usize,
    upper: usize,
    exact: bool,
    classes: Vec<Vec<usize>>,
}

impl Serialize for ChiResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChiJson { lower: self.lower, upper: self.upper, exact: self.exact, classes: self.witness.classes() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChiResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ChiJson::deserialize(d)?;
        let n = j.classes.iter().map(|c| c.len()).sum();
        let witness = VertexColoring::from_classes(n, &j.classes).map_err(serde::de::Error::custom)?;
        Ok(ChiResult { lower: j.lower, upper: j.upper, exact: j.exact, witness })
    }
}

/// Bound that needs no search: 0 for the empty graph, 1 without edges,
/// 2 otherwise.
fn trivial_lower(g: &Graph) -> usize {
    match (g.n(), g.m()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    }
}

/// Colors vertices in `order`, each with the smallest color unused by its
/// colored neighbors.
fn first_fit(g: &Graph, order: &[usize]) -> VertexColoring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut taken = vec![false; n + 1];
    let mut k = 0;
    for &v in order {
        for u in g.neighbors(v) {
            if color[u] != usize::MAX {
                taken[color[u]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).unwrap();
        color[v] = c;
        k = k.max(c + 1);
        for u in g.neighbors(v) {
            if color[u] != usize::MAX {
                taken[color[u]] = false;
            }
        }
    }
    VertexColoring::new(k, color).expect("first-fit colors are in range")
}

fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        removed[v] = true;
        peeled.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    peeled.reverse();
    peeled
}

fn dsatur_coloring(g: &Graph) -> VertexColoring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut sat = vec![0usize; n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                let free_deg = g.neighbors(v).filter(|&u| color[u] == usize::MAX).count();
                (sat[v], free_deg, std::cmp::Reverse(v))
            })
            .unwrap();
        let c = (0..n).find(|&c| !seen[v][c]).unwrap();
        color[v] = c;
        k = k.max(c + 1);
        for u in g.neighbors(v) {
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    VertexColoring::new(k, color).expect("dsatur colors are in range")
}

/// Heuristic coloring; `upper` is the class count of the witness, `lower`
/// only the trivial bound.
pub fn greedy_upper(g: &Graph, order: &Order) -> Result<ChiResult> {
    let witness = match order {
        Order::Degeneracy => first_fit(g, &degeneracy_order(g)),
        Order::Dsatur => dsatur_coloring(g),
        Order::Given(perm) => {
            let mut seen = vec![false; g.n()];
            if perm.len() != g.n() || !perm.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true)) {
                return Err(Error::input("order is not a permutation of the vertices"));
            }
            first_fit(g, perm)
        }
    };
    let lower = trivial_lower(g);
    let upper = witness.k();
    Ok(ChiResult { lower, upper, exact: lower == upper, witness })
}

/// Largest clique found by greedy growth from every start vertex.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let words = g.words();
    let mut best: Vec<usize> = Vec::new();
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cand: Vec<u64> = g.row(start).to_vec();
        loop {
            let pick = crate::graph::BitIter::new(&cand)
                .map(|u| {
                    let common: u32 = (0..words).map(|w| (g.row(u)[w] & cand[w]).count_ones()).sum();
                    (common, std::cmp::Reverse(u))
                })
                .max();
            let Some((_, std::cmp::Reverse(u))) = pick else { break };
            clique.push(u);
            for (c, r) in cand.iter_mut().zip(g.row(u)) {
                *c &= r;
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

pub fn clique_lower(g: &Graph) -> usize {
    greedy_clique(g).len()
}

/// Exact chromatic number by DSATUR-ordered branch and bound, seeded with a
/// greedy clique. Stops after `budget` node expansions and then reports the
/// best bounds found with `exact == false`.
pub fn chi_exact(g: &Graph, budget: u64) -> ChiResult {
    let n = g.n();
    if n == 0 {
        return ChiResult { lower: 0, upper: 0, exact: true, witness: VertexColoring::new(0, vec![]).unwrap() };
    }
    let clique = greedy_clique(g);
    let start = dsatur_coloring(g);
    let lower = clique.len();
    if start.k() == lower {
        return ChiResult { lower, upper: lower, exact: true, witness: start };
    }
    let mut bb = BranchAndBound::new(g, budget, start);
    for (c, &v) in clique.iter().enumerate() {
        bb.assign(v, c);
    }
    bb.search(clique.len(), lower);
    let exact = !bb.aborted;
    let upper = bb.best_k;
    ChiResult { lower: if exact { upper } else { lower }, upper, exact, witness: bb.best }
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    // nbr_count[v * n + c]: colored neighbors of v with color c
    nbr_count: Vec<u32>,
    sat: Vec<usize>,
    colored: usize,
    best_k: usize,
    best: VertexColoring,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl<'a> BranchAndBound<'a> {
    fn new(g: &'a Graph, budget: u64, start: VertexColoring) -> Self {
        let n = g.n();
        BranchAndBound {
            g,
            color: vec![usize::MAX; n],
            nbr_count: vec![0; n * n],
            sat: vec![0; n],
            colored: 0,
            best_k: start.k(),
            best: start,
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        let n = self.g.n();
        self.color[v] = c;
        self.colored += 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.nbr_count[u * n + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let n = self.g.n();
        let c = self.color[v];
        self.color[v] = usize::MAX;
        self.colored -= 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.nbr_count[u * n + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let n = self.g.n();
        let mut best = (0, 0, usize::MAX);
        for v in 0..n {
            if self.color[v] != usize::MAX {
                continue;
            }
            let s = self.sat[v];
            if best.2 != usize::MAX && s < best.0 {
                continue;
            }
            let d = self.g.neighbors(v).filter(|&u| self.color[u] == usize::MAX).count();
            if best.2 == usize::MAX || (s, d) > (best.0, best.1) {
                best = (s, d, v);
            }
        }
        best.2
    }

    fn search(&mut self, used: usize, lower: usize) {
        if self.aborted || self.best_k == lower {
            return;
        }
        if self.nodes >= self.budget {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        let n = self.g.n();
        if self.colored == n {
            if used < self.best_k {
                self.best_k = used;
                self.best = VertexColoring::new(used, self.color.clone()).unwrap();
            }
            return;
        }
        let v = self.pick();
        for c in 0..used {
            if self.nbr_count[v * n + c] == 0 {
                self.assign(v, c);
                self.search(used, lower);
                self.unassign(v);
                if self.aborted || self.best_k == lower {
                    return;
                }
            }
        }
        // a fresh color is canonical: any unused label is equivalent
        if used + 1 < self.best_k {
            self.assign(v, used);
            self.search(used + 1, lower);
            self.unassign(v);
        }
    }
}

/// Whether no edge of `g` joins two vertices of the same class.
pub fn verify_proper(g: &Graph, vc: &VertexColoring) -> Result<bool> {
    if vc.n() != g.n() {
        return Err(Error::input(format!("coloring covers {} vertices, graph has {}", vc.n(), g.n())));
    }
    Ok(g.edges().all(|e| vc.class_of(e.u) != vc.class_of(e.v)))
}
