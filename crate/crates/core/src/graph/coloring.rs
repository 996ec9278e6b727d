use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Colors on the edges of a graph. Genuine colors are `1..=t`; color 0 is
/// reserved for the complement edges of an extended complete graph and is
/// only allowed when `extended` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    t: usize,
    extended: bool,
    colors: BTreeMap<Edge, usize>,
}

impl EdgeColoring {
    /// Checks that `colors` covers exactly the edges of `g` with colors in
    /// range.
    pub fn new(g: &Graph, t: usize, colors: BTreeMap<Edge, usize>, extended: bool) -> Result<Self> {
        if t == 0 {
            return Err(Error::input("need at least one genuine color"));
        }
        for (&e, &c) in &colors {
            if e.u == e.v || e.v >= g.n() || !g.has_edge(e.u, e.v) {
                return Err(Error::input(format!("colored pair {e} is not an edge")));
            }
            if c > t || (c == 0 && !extended) {
                return Err(Error::ColorRange { color: c, t });
            }
        }
        if colors.len() != g.m() {
            let missing = g.edges().find(|e| !colors.contains_key(e)).expect("uncovered edge");
            return Err(Error::input(format!("edge {missing} has no color")));
        }
        Ok(EdgeColoring { t, extended, colors })
    }

    pub fn from_pairs<I>(g: &Graph, t: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, usize)>,
    {
        let mut colors = BTreeMap::new();
        for (e, c) in pairs {
            if let Some(prev) = colors.insert(e, c) {
                if prev != c {
                    return Err(Error::input(format!("edge {e} colored both {prev} and {c}")));
                }
            }
        }
        EdgeColoring::new(g, t, colors, false)
    }

    /// Colors every edge of `g` with `f(edge)`.
    pub fn from_fn(g: &Graph, t: usize, mut f: impl FnMut(Edge) -> usize) -> Result<Self> {
        let colors = g.edges().map(|e| (e, f(e))).collect();
        EdgeColoring::new(g, t, colors, false)
    }

    pub fn uniform(g: &Graph, t: usize, c: usize) -> Self {
        EdgeColoring::from_fn(g, t, |_| c).expect("uniform color out of range")
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn color(&self, e: Edge) -> Option<usize> {
        self.colors.get(&e).copied()
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return None;
        }
        self.color(Edge::new(u, v))
    }

    /// `(edge, color)` pairs in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub(crate) fn from_parts_unchecked(t: usize, extended: bool, colors: BTreeMap<Edge, usize>) -> Self {
        EdgeColoring { t, extended, colors }
    }
}

/// A partition of `0..n` into `k` labeled classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    k: usize,
    class_of: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, class_of: Vec<usize>) -> Result<Self> {
        if let Some((v, &c)) = class_of.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::input(format!("vertex {v} has class {c} >= k = {k}")));
        }
        Ok(VertexColoring { k, class_of })
    }

    /// Builds a coloring of `0..n` from explicit classes. Every vertex must
    /// appear exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut class_of = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(Error::VertexRange { line: 0, vertex: v, n });
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::input(format!("vertex {v} listed in two classes")));
                }
                class_of[v] = i;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::input(format!("vertex {v} is not assigned a class")));
        }
        Ok(VertexColoring { k: classes.len(), class_of })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class_of
    }

    /// Vertex lists per class index (possibly empty).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Drops empty classes, keeping the relative order of the rest.
    pub fn compacted(&self) -> VertexColoring {
        let mut used = vec![false; self.k];
        for &c in &self.class_of {
            used[c] = true;
        }
        let mut relabel = vec![0; self.k];
        let mut next = 0;
        for c in 0..self.k {
            if used[c] {
                relabel[c] = next;
                next += 1;
            }
        }
        VertexColoring { k: next, class_of: self.class_of.iter().map(|&c| relabel[c]).collect() }
    }

    /// Number of non-empty classes.
    pub fn used_classes(&self) -> usize {
        self.compacted().k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverage_is_enforced() {
        let g = Graph::path(3);
        assert!(EdgeColoring::from_pairs(&g, 2, [(Edge::new(0, 1), 1)]).is_err());
        assert!(EdgeColoring::from_pairs(&g, 2, [(Edge::new(0, 1), 1), (Edge::new(1, 2), 3)]).is_err());
        assert!(EdgeColoring::from_pairs(&g, 2, [(Edge::new(0, 1), 1), (Edge::new(0, 2), 1)]).is_err());
        // color 0 is reserved
        assert!(matches!(
            EdgeColoring::from_pairs(&g, 2, [(Edge::new(0, 1), 0), (Edge::new(1, 2), 1)]),
            Err(Error::ColorRange { color: 0, .. })
        ));
    }

    #[test]
    fn compaction_keeps_order() {
        let vc = VertexColoring::new(4, vec![3, 1, 3, 1]).unwrap();
        let c = vc.compacted();
        assert_eq!(c.k(), 2);
        assert_eq!(c.as_slice(), &[1, 0, 1, 0]);
        assert_eq!(vc.used_classes(), 2);
    }

    #[test]
    fn from_classes_requires_partition() {
        assert!(VertexColoring::from_classes(3, &[vec![0, 1], vec![2]]).is_ok());
        assert!(VertexColoring::from_classes(3, &[vec![0, 1]]).is_err());
        assert!(VertexColoring::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
