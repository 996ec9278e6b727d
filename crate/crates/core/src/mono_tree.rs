//! Monochromatic trees in 2-edge-colored graphs.
//!
//! Every vertex lies in exactly one red and one blue monochromatic component
//! (isolated vertices count as singleton components). Joining, for each
//! vertex, its red component to its blue component gives a bipartite
//! multigraph whose maximum degree is the size of the largest monochromatic
//! component. A proper edge coloring of that multigraph with `Δ` colors
//! (König) is a proper vertex coloring of the host graph with `Δ` colors, so
//! some monochromatic component has at least `χ` vertices. This module builds
//! each of those objects explicitly so every step can be checked.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeColoring, Graph, VertexColoring};

/// Bipartite multigraph with red components on the left, blue components on
/// the right, and one link per host vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualMultigraph {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    /// `links[v] = (red component index, blue component index)` of vertex `v`.
    pub links: Vec<(usize, usize)>,
}

impl DualMultigraph {
    pub fn node_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Node ids: left `i` is `i`, right `j` is `left.len() + j`.
    pub fn endpoints(&self, link: usize) -> (usize, usize) {
        let (a, b) = self.links[link];
        (a, self.left.len() + b)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.node_count()];
        for l in 0..self.links.len() {
            let (a, b) = self.endpoints(l);
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCertificate {
    pub color: usize,
    pub edges: Vec<Edge>,
    pub vertices: Vec<usize>,
    pub chi_lower_used: usize,
}

fn require_two_colors(ec: &EdgeColoring) -> Result<()> {
    if ec.t() != 2 || ec.is_extended() {
        return Err(Error::input(format!(
            "expected a 2-coloring with genuine colors only, got t = {}{}",
            ec.t(),
            if ec.is_extended() { " (extended)" } else { "" }
        )));
    }
    Ok(())
}

pub fn build_dual(g: &Graph, ec: &EdgeColoring) -> Result<DualMultigraph> {
    require_two_colors(ec)?;
    let red = g.color_subgraph(ec, 1)?.connected_components();
    let blue = g.color_subgraph(ec, 2)?.connected_components();
    let mut links = vec![(usize::MAX, usize::MAX); g.n()];
    for (i, comp) in red.iter().enumerate() {
        for &v in comp {
            links[v].0 = i;
        }
    }
    for (j, comp) in blue.iter().enumerate() {
        for &v in comp {
            links[v].1 = j;
        }
    }
    Ok(DualMultigraph { left: red, right: blue, links })
}

/// Proper edge coloring of the dual with colors `1..=Δ`, indexed by link.
///
/// Links are inserted in order. When the first color free at one end is busy
/// at the other, the two-colored alternating path from the other end is
/// flipped; bipartiteness keeps that path away from the first end.
pub fn edge_color_dual(b: &DualMultigraph) -> Vec<usize> {
    let delta = b.max_degree();
    let mut slot: Vec<Vec<Option<usize>>> = vec![vec![None; delta]; b.node_count()];
    let mut color = vec![usize::MAX; b.links.len()];
    let other = |l: usize, x: usize| {
        let (p, q) = b.endpoints(l);
        if p == x {
            q
        } else {
            p
        }
    };
    for l in 0..b.links.len() {
        let (x, y) = b.endpoints(l);
        let alpha = slot[x].iter().position(Option::is_none).expect("degree bound");
        if slot[y][alpha].is_some() {
            let beta = slot[y].iter().position(Option::is_none).expect("degree bound");
            let mut path = Vec::new();
            let (mut node, mut c) = (y, alpha);
            while let Some(p) = slot[node][c] {
                path.push(p);
                node = other(p, node);
                c = if c == alpha { beta } else { alpha };
            }
            for &p in &path {
                let (s, t) = b.endpoints(p);
                slot[s][color[p]] = None;
                slot[t][color[p]] = None;
            }
            for &p in &path {
                color[p] = if color[p] == alpha { beta } else { alpha };
                let (s, t) = b.endpoints(p);
                slot[s][color[p]] = Some(p);
                slot[t][color[p]] = Some(p);
            }
            debug_assert!(slot[x][alpha].is_none() && slot[y][alpha].is_none());
        }
        color[l] = alpha;
        slot[x][alpha] = Some(l);
        slot[y][alpha] = Some(l);
    }
    color.into_iter().map(|c| c + 1).collect()
}

/// Each vertex takes the color of its link. Disjoint links are vertices in
/// no common monochromatic component, hence non-adjacent.
pub fn vertex_coloring_from_dual(g: &Graph, b: &DualMultigraph, link_colors: &[usize]) -> Result<VertexColoring> {
    if link_colors.len() != b.links.len() || b.links.len() != g.n() {
        return Err(Error::input(format!(
            "{} link colors for {} links on a {}-vertex graph",
            link_colors.len(),
            b.links.len(),
            g.n()
        )));
    }
    let k = link_colors.iter().copied().max().unwrap_or(0);
    if link_colors.contains(&0) {
        return Err(Error::input("link colors start at 1"));
    }
    let mut seen: Vec<Vec<bool>> = vec![vec![false; k]; b.node_count()];
    for (l, &c) in link_colors.iter().enumerate() {
        let (x, y) = b.endpoints(l);
        for node in [x, y] {
            if std::mem::replace(&mut seen[node][c - 1], true) {
                return Err(Error::input(format!("link coloring is improper: color {c} repeats at a dual node")));
            }
        }
    }
    VertexColoring::new(k, link_colors.iter().map(|c| c - 1).collect())
}

/// BFS spanning tree of a largest monochromatic component. Ties go to the
/// component with the smaller minimum vertex, then to red.
pub fn mono_tree_certificate(g: &Graph, ec: &EdgeColoring, chi_lower: usize) -> Result<TreeCertificate> {
    require_two_colors(ec)?;
    let mut best: Option<(usize, Vec<usize>, Graph)> = None;
    for color in 1..=2 {
        let sub = g.color_subgraph(ec, color)?;
        for comp in sub.connected_components() {
            let better = match &best {
                None => true,
                Some((_, b, _)) => comp.len() > b.len() || (comp.len() == b.len() && comp[0] < b[0]),
            };
            if better {
                best = Some((color, comp, sub.clone()));
            }
        }
    }
    let Some((color, comp, sub)) = best else {
        if chi_lower > 0 {
            return Err(Error::Inconsistency(format!("empty graph cannot have chromatic number {chi_lower}")));
        }
        return Ok(TreeCertificate { color: 1, edges: vec![], vertices: vec![], chi_lower_used: chi_lower });
    };
    if comp.len() < chi_lower {
        return Err(Error::Inconsistency(format!(
            "largest monochromatic component has {} vertices but chromatic number was claimed to be at least {chi_lower}",
            comp.len()
        )));
    }
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([comp[0]]);
    seen[comp[0]] = true;
    let mut edges = Vec::with_capacity(comp.len() - 1);
    while let Some(x) = queue.pop_front() {
        for y in sub.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                edges.push(Edge::new(x, y));
                queue.push_back(y);
            }
        }
    }
    Ok(TreeCertificate { color, edges, vertices: comp, chi_lower_used: chi_lower })
}

/// Independent re-check of a tree certificate: every edge present with the
/// stated color, the edges form a tree spanning exactly `vertices`, and the
/// size meets the claimed bound. Returns every problem found.
pub fn verify_tree_certificate(g: &Graph, ec: &EdgeColoring, cert: &TreeCertificate) -> Result<(), Vec<String>> {
    let mut problems = Vec::new();
    let n = g.n();
    // the only certificate for the empty graph
    if n == 0 && cert.vertices.is_empty() && cert.edges.is_empty() && cert.chi_lower_used == 0 {
        return Ok(());
    }
    if cert.vertices.iter().any(|&v| v >= n) {
        problems.push("vertex out of range".to_string());
        return Err(problems);
    }
    let mut in_tree = vec![false; n];
    for &v in &cert.vertices {
        if std::mem::replace(&mut in_tree[v], true) {
            problems.push(format!("vertex {v} listed twice"));
        }
    }
    for e in &cert.edges {
        if e.u == e.v || e.v >= n || !g.has_edge(e.u, e.v) {
            problems.push(format!("{e} is not an edge of the graph"));
            continue;
        }
        match ec.color(*e) {
            Some(c) if c == cert.color => {}
            other => problems.push(format!("edge {e} has color {other:?}, certificate claims {}", cert.color)),
        }
        if !in_tree[e.u] || !in_tree[e.v] {
            problems.push(format!("edge {e} leaves the vertex set"));
        }
    }
    if cert.vertices.len() != cert.edges.len() + 1 {
        problems.push(format!("{} vertices but {} edges", cert.vertices.len(), cert.edges.len()));
    }
    // union-find: a cycle shows up as an edge inside one set
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for e in cert.edges.iter().filter(|e| e.v < n && e.u != e.v) {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a == b {
            problems.push(format!("edge {e} closes a cycle"));
        } else {
            parent[a] = b;
        }
    }
    if let Some(&first) = cert.vertices.first() {
        let root = find(&mut parent, first);
        if cert.vertices.iter().any(|&v| find(&mut parent, v) != root) {
            problems.push("tree is not connected".to_string());
        }
    }
    if cert.vertices.len() < cert.chi_lower_used {
        problems.push(format!("tree has {} vertices, fewer than {}", cert.vertices.len(), cert.chi_lower_used));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::verify_proper;

    fn k4_matching_coloring() -> (Graph, EdgeColoring) {
        let g = Graph::complete(4);
        let ec = EdgeColoring::from_fn(&g, 2, |e| if e == Edge::new(0, 1) || e == Edge::new(2, 3) { 1 } else { 2 })
            .unwrap();
        (g, ec)
    }

    fn is_proper(b: &DualMultigraph, colors: &[usize]) -> bool {
        (0..b.node_count()).all(|node| {
            let mut cs: Vec<usize> =
                (0..b.links.len()).filter(|&l| { let (x, y) = b.endpoints(l); x == node || y == node }).map(|l| colors[l]).collect();
            let len = cs.len();
            cs.sort_unstable();
            cs.dedup();
            cs.len() == len
        })
    }

    #[test]
    fn all_red_gives_star() {
        let g = Graph::cycle(5);
        let ec = EdgeColoring::uniform(&g, 2, 1);
        let b = build_dual(&g, &ec).unwrap();
        assert_eq!(b.left, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(b.right.len(), 5);
        assert_eq!(b.max_degree(), 5);
        let colors = edge_color_dual(&b);
        let mut sorted = colors.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4, 5]);
        let vc = vertex_coloring_from_dual(&g, &b, &colors).unwrap();
        assert_eq!(vc.k(), 5);
        let cert = mono_tree_certificate(&g, &ec, 3).unwrap();
        assert_eq!(cert.color, 1);
        assert_eq!(cert.vertices.len(), 5);
        assert!(verify_tree_certificate(&g, &ec, &cert).is_ok());
    }

    #[test]
    fn k4_matching_example() {
        let (g, ec) = k4_matching_coloring();
        let b = build_dual(&g, &ec).unwrap();
        assert_eq!(b.left, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(b.right, vec![vec![0, 1, 2, 3]]);
        assert_eq!(b.max_degree(), 4);
        let colors = edge_color_dual(&b);
        assert!(is_proper(&b, &colors));
        let vc = vertex_coloring_from_dual(&g, &b, &colors).unwrap();
        assert_eq!(vc.k(), 4);
        assert!(verify_proper(&g, &vc).unwrap());
        let cert = mono_tree_certificate(&g, &ec, 4).unwrap();
        assert_eq!(cert.color, 2);
        assert_eq!(cert.vertices, vec![0, 1, 2, 3]);
        assert_eq!(cert.edges, vec![Edge::new(0, 2), Edge::new(0, 3), Edge::new(1, 2)]);
        assert!(verify_tree_certificate(&g, &ec, &cert).is_ok());
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::empty(4);
        let ec = EdgeColoring::from_fn(&g, 2, |_| 1).unwrap();
        let b = build_dual(&g, &ec).unwrap();
        assert_eq!((b.left.len(), b.right.len(), b.max_degree()), (4, 4, 1));
        let colors = edge_color_dual(&b);
        assert_eq!(colors, vec![1; 4]);
        assert_eq!(vertex_coloring_from_dual(&g, &b, &colors).unwrap().k(), 1);
        let cert = mono_tree_certificate(&g, &ec, 1).unwrap();
        assert_eq!((cert.vertices.len(), cert.edges.len()), (1, 0));
    }

    #[test]
    fn parallel_links_and_even_cycle() {
        // two vertices sharing both their red and blue component
        let b = DualMultigraph { left: vec![vec![0, 1]], right: vec![vec![0, 1]], links: vec![(0, 0), (0, 0)] };
        let c = edge_color_dual(&b);
        assert_eq!(c.len(), 2);
        assert_ne!(c[0], c[1]);
        // links forming the even cycle L0-R0-L1-R1-L0
        let b = DualMultigraph {
            left: vec![vec![0, 1], vec![2, 3]],
            right: vec![vec![0, 3], vec![1, 2]],
            links: vec![(0, 0), (0, 1), (1, 1), (1, 0)],
        };
        let c = edge_color_dual(&b);
        assert!(is_proper(&b, &c));
        assert_eq!(c.iter().max(), Some(&2));
    }

    #[test]
    fn improper_link_colors_rejected() {
        let (g, ec) = k4_matching_coloring();
        let b = build_dual(&g, &ec).unwrap();
        assert!(vertex_coloring_from_dual(&g, &b, &[1, 1, 2, 3]).is_err());
        assert!(vertex_coloring_from_dual(&g, &b, &[1, 2, 3]).is_err());
    }

    #[test]
    fn wrong_color_count_rejected() {
        let g = Graph::path(3);
        let ec = EdgeColoring::uniform(&g, 3, 1);
        assert!(build_dual(&g, &ec).is_err());
        assert!(mono_tree_certificate(&g, &ec, 1).is_err());
    }

    #[test]
    fn false_lower_bound_is_inconsistency() {
        let g = Graph::path(3);
        let ec = EdgeColoring::from_fn(&g, 2, |e| if e.u == 0 { 1 } else { 2 }).unwrap();
        assert!(matches!(mono_tree_certificate(&g, &ec, 3), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn tampered_certificate_rejected() {
        let (g, ec) = k4_matching_coloring();
        let mut cert = mono_tree_certificate(&g, &ec, 4).unwrap();
        cert.edges[1] = Edge::new(0, 1);
        let problems = verify_tree_certificate(&g, &ec, &cert).unwrap_err();
        assert!(problems.iter().any(|p| p.contains("color")));
    }
}
