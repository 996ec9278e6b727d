//! Trees on `k` vertices inside graphs of chromatic number at least `k`.
//!
//! A `k`-chromatic graph has a subgraph of minimum degree at least `k - 1`
//! (otherwise a degeneracy order would color it with fewer colors), and any
//! tree on `k` vertices embeds greedily in such a subgraph.

use std::collections::VecDeque;

use super::pattern::AcyclicPattern;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Subgraph left after repeatedly deleting vertices of degree below `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub graph: Graph,
    /// `vertices[i]` is the original index of core vertex `i`.
    pub vertices: Vec<usize>,
}

pub fn peel_to_min_degree(g: &Graph, d: usize) -> Option<Core> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < d).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < d {
                    alive[u] = false;
                    stack.push(u);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if vertices.is_empty() {
        return None;
    }
    Some(Core { graph: g.induced(&vertices), vertices })
}

/// Greedy embedding of the tree `h`, valid whenever
/// `|V(h)| <= chi_lower <= χ(g)`. Returns the image of each tree vertex.
pub fn embed_tree_folklore(g: &Graph, h: &AcyclicPattern, chi_lower: usize) -> Result<Vec<usize>> {
    let k = h.n();
    if !h.is_tree() {
        return Err(Error::input("pattern must be a non-empty tree"));
    }
    if k > chi_lower {
        return Err(Error::input(format!("tree has {k} vertices, more than the chromatic bound {chi_lower}")));
    }
    let core = peel_to_min_degree(g, k - 1).ok_or_else(|| {
        Error::Inconsistency(format!("no subgraph of minimum degree {}, so chromatic number is below {chi_lower}", k - 1))
    })?;
    let cg = &core.graph;
    let tree = h.graph();
    let mut img = vec![usize::MAX; k];
    let mut used = vec![false; cg.n()];
    img[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for y in tree.neighbors(x) {
            if img[y] != usize::MAX {
                continue;
            }
            // image of x has >= k-1 core neighbors and at most k-2 of them are used
            let w = cg
                .neighbors(img[x])
                .find(|&w| !used[w])
                .ok_or_else(|| Error::Inconsistency("core vertex ran out of free neighbors".into()))?;
            img[y] = w;
            used[w] = true;
            queue.push_back(y);
        }
    }
    Ok(img.into_iter().map(|i| core.vertices[i]).collect())
}
