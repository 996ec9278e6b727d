use std::collections::VecDeque;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A forest to look for inside (color classes of) host graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicPattern {
    graph: Graph,
    full: Plan,
    // one plan per oriented edge (a, b), starting a -> u, b -> v
    through: Vec<Plan>,
}

/// Placement order for backtracking: every vertex after the first of its
/// component has its parent placed earlier.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Plan {
    order: Vec<usize>,
    parent_pos: Vec<Option<usize>>,
    degree: Vec<usize>,
    /// Trailing isolated vertices, filled with any unused host vertices.
    isolated: usize,
}

impl Plan {
    fn build(h: &Graph, first_edge: Option<(usize, usize)>) -> Plan {
        let n = h.n();
        let mut comps = h.connected_components();
        let isolated: Vec<usize> = comps.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
        comps.retain(|c| c.len() > 1);
        let root_of = |c: &[usize]| *c.iter().max_by_key(|&&v| (h.degree(v), std::cmp::Reverse(v))).unwrap();
        let mut roots: Vec<(usize, usize)> = comps.iter().map(|c| (c.len(), root_of(c))).collect();
        // largest components first
        roots.sort_by_key(|&(len, r)| (std::cmp::Reverse(len), r));
        if let Some((a, _)) = first_edge {
            let i = roots.iter().position(|&(_, r)| comps.iter().any(|c| c.contains(&r) && c.contains(&a))).unwrap();
            let (len, _) = roots.remove(i);
            roots.insert(0, (len, a));
        }
        let mut order = Vec::with_capacity(n);
        let mut parent_pos = Vec::with_capacity(n);
        let mut pos = vec![usize::MAX; n];
        for (ci, &(_, root)) in roots.iter().enumerate() {
            let mut queue = VecDeque::from([root]);
            pos[root] = order.len();
            order.push(root);
            parent_pos.push(None);
            if ci == 0 {
                if let Some((a, b)) = first_edge {
                    pos[b] = order.len();
                    order.push(b);
                    parent_pos.push(Some(pos[a]));
                    queue.push_back(b);
                }
            }
            while let Some(x) = queue.pop_front() {
                for y in h.neighbors(x) {
                    if pos[y] == usize::MAX {
                        pos[y] = order.len();
                        order.push(y);
                        parent_pos.push(Some(pos[x]));
                        queue.push_back(y);
                    }
                }
            }
        }
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Plan { order, parent_pos, degree, isolated: isolated.len() }
            .with_isolated_tail(isolated)
    }

    fn with_isolated_tail(mut self, isolated: Vec<usize>) -> Plan {
        for v in isolated {
            self.order.push(v);
            self.parent_pos.push(None);
            self.degree.push(0);
        }
        self
    }

    fn placed(&self) -> usize {
        self.order.len() - self.isolated
    }

    /// Images of the plan positions, or `None` if no embedding extends
    /// `fixed` (images of the first `fixed.len()` positions).
    fn embed(&self, g: &Graph, fixed: &[usize]) -> Option<Vec<usize>> {
        if self.order.len() > g.n() {
            return None;
        }
        let words = g.words();
        let mut used = vec![0u64; words];
        let mut img = vec![usize::MAX; self.order.len()];
        for (i, &x) in fixed.iter().enumerate() {
            if g.degree(x) < self.degree[i] || used[x / 64] >> (x % 64) & 1 == 1 {
                return None;
            }
            if let Some(p) = self.parent_pos[i] {
                if !g.has_edge(img[p], x) {
                    return None;
                }
            }
            img[i] = x;
            used[x / 64] |= 1 << (x % 64);
        }
        if !self.extend(g, fixed.len(), &mut img, &mut used) {
            return None;
        }
        // `extend` unwinds `used`, so rebuild it from the placed images;
        // isolated pattern vertices take the smallest unused host vertices
        let (placed, tail) = img.split_at_mut(self.placed());
        let mut free = (0..g.n()).filter(|x| !placed.contains(x));
        for slot in tail {
            *slot = free.next()?;
        }
        Some(img)
    }

    fn extend(&self, g: &Graph, pos: usize, img: &mut [usize], used: &mut [u64]) -> bool {
        if pos == self.placed() {
            return g.n() - self.placed() >= self.isolated;
        }
        let need = self.degree[pos];
        let try_vertex = |x: usize, img: &mut [usize], used: &mut [u64]| -> bool {
            if g.degree(x) < need {
                return false;
            }
            img[pos] = x;
            used[x / 64] |= 1 << (x % 64);
            let ok = self.extend(g, pos + 1, img, used);
            used[x / 64] &= !(1 << (x % 64));
            ok
        };
        match self.parent_pos[pos] {
            Some(p) => {
                let row = g.row(img[p]);
                for w in 0..row.len() {
                    let mut bits = row[w] & !used[w];
                    while bits != 0 {
                        let x = w * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        if try_vertex(x, img, used) {
                            return true;
                        }
                    }
                }
                false
            }
            None => (0..g.n()).any(|x| used[x / 64] >> (x % 64) & 1 == 0 && try_vertex(x, img, used)),
        }
    }

    fn to_vertex_map(&self, img: &[usize]) -> Vec<usize> {
        let mut map = vec![0; img.len()];
        for (i, &x) in self.order.iter().enumerate() {
            map[x] = img[i];
        }
        map
    }
}

impl AcyclicPattern {
    pub fn new(graph: Graph) -> Result<Self> {
        if !graph.is_acyclic() {
            return Err(Error::input("pattern graph contains a cycle"));
        }
        let full = Plan::build(&graph, None);
        let through = graph
            .edges()
            .flat_map(|e| [(e.u, e.v), (e.v, e.u)])
            .map(|first| Plan::build(&graph, Some(first)))
            .collect();
        Ok(AcyclicPattern { graph, full, through })
    }

    /// Path on `k` vertices.
    pub fn path(k: usize) -> Self {
        AcyclicPattern::new(Graph::path(k)).unwrap()
    }

    /// Star `K_{1,k}`.
    pub fn star(k: usize) -> Self {
        AcyclicPattern::new(Graph::star(k)).unwrap()
    }

    /// Matching `aK_2`.
    pub fn matching(a: usize) -> Self {
        AcyclicPattern::new(Graph::matching(a)).unwrap()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_tree(&self) -> bool {
        self.graph.n() >= 1 && self.graph.is_connected()
    }

    /// An injective, edge-preserving map `V(H) -> V(g)`, indexed by pattern
    /// vertex.
    pub fn embed_in(&self, g: &Graph) -> Option<Vec<usize>> {
        self.full.embed(g, &[]).map(|img| self.full.to_vertex_map(&img))
    }

    /// Whether `g` has a copy of the pattern using the edge `uv`.
    pub fn contains_through_edge(&self, g: &Graph, u: usize, v: usize) -> bool {
        self.through.iter().any(|plan| plan.embed(g, &[u, v]).is_some())
    }
}

impl FromStr for AcyclicPattern {
    type Err = Error;

    /// `path:K` (K vertices), `star:K` (K leaves), `matching:K` (K edges).
    fn from_str(s: &str) -> Result<Self> {
        let (kind, k) = s.split_once(':').ok_or_else(|| Error::input(format!("bad pattern `{s}`")))?;
        let k: usize = k.parse().map_err(|_| Error::input(format!("bad pattern size in `{s}`")))?;
        match kind {
            "path" if k >= 1 => Ok(AcyclicPattern::path(k)),
            "star" => Ok(AcyclicPattern::star(k)),
            "matching" => Ok(AcyclicPattern::matching(k)),
            _ => Err(Error::input(format!("unknown pattern `{s}`"))),
        }
    }
}

/// Copy of `h` in `g`, if one exists.
pub fn contains_forest(g: &Graph, h: &AcyclicPattern) -> Option<Vec<usize>> {
    h.embed_in(g)
}

/// Checks that `map` is injective and sends every edge of `h` to an edge of
/// `g`.
pub fn is_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != h.n() || map.iter().any(|&x| x >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    map.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) && h.edges().all(|e| g.has_edge(map[e.u], map[e.v]))
}
