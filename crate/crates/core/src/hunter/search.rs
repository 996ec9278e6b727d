//! Backtracking over edge colorings that avoid a pattern in every color.

use std::collections::VecDeque;

use super::pattern::AcyclicPattern;
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Colors per edge, in the search's edge order.
    Avoiding(Vec<usize>),
    Exhausted,
    BudgetHit,
}

/// Edges ordered by BFS rank of their later endpoint, so each edge closes
/// up against already colored ones as early as possible.
pub(crate) fn bfs_edge_order(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut rank = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if rank[s] != usize::MAX {
            continue;
        }
        rank[s] = next;
        next += 1;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if rank[y] == usize::MAX {
                    rank[y] = next;
                    next += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|e| {
        let (a, b) = (rank[e.u], rank[e.v]);
        (a.max(b), a.min(b))
    });
    edges
}

pub(crate) struct ColoringSearch<'a> {
    edges: Vec<Edge>,
    /// `patterns[c - 1]` must be avoided in color `c`.
    patterns: &'a [AcyclicPattern],
    /// All colors play the same role, so only the first use of each new
    /// color needs to be tried.
    interchangeable: bool,
    budget: u64,
    classes: Vec<Graph>,
    colors: Vec<usize>,
    pub nodes: u64,
}

impl<'a> ColoringSearch<'a> {
    pub fn new(host: &Graph, patterns: &'a [AcyclicPattern], budget: u64) -> Self {
        let interchangeable = patterns.windows(2).all(|w| w[0].graph() == w[1].graph());
        ColoringSearch {
            edges: bfs_edge_order(host),
            patterns,
            interchangeable,
            budget,
            classes: vec![Graph::empty(host.n()); patterns.len()],
            colors: Vec::new(),
            nodes: 0,
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn run(&mut self) -> Outcome {
        self.colors.clear();
        match self.descend(0, 0) {
            Some(true) => Outcome::Avoiding(self.colors.clone()),
            Some(false) => Outcome::Exhausted,
            None => Outcome::BudgetHit,
        }
    }

    /// `Some(true)` when an avoiding coloring was completed, `Some(false)`
    /// when the subtree is exhausted, `None` when the budget ran out.
    fn descend(&mut self, i: usize, max_used: usize) -> Option<bool> {
        if self.nodes >= self.budget {
            return None;
        }
        self.nodes += 1;
        if i == self.edges.len() {
            return Some(true);
        }
        let e = self.edges[i];
        let t = self.patterns.len();
        let top = if self.interchangeable { t.min(max_used + 1) } else { t };
        for c in 1..=top {
            self.classes[c - 1].add_edge(e.u, e.v);
            if !self.patterns[c - 1].contains_through_edge(&self.classes[c - 1], e.u, e.v) {
                self.colors.push(c);
                let r = self.descend(i + 1, max_used.max(c));
                if r != Some(false) {
                    self.classes[c - 1].remove_edge(e.u, e.v);
                    return r;
                }
                self.colors.pop();
            }
            self.classes[c - 1].remove_edge(e.u, e.v);
        }
        Some(false)
    }
}
