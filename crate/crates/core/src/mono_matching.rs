//! Monochromatic matchings in `t`-edge-colored graphs.
//!
//! With targets `n_1..n_t` and `R = max n_i + 1 + Σ (n_i - 1)`, any graph of
//! chromatic number at least `R` has, in every `t`-coloring, a matching of
//! `n_i` edges in some color `i`. Two independent extraction routes live
//! here: per-color maximum matching on the graph itself, and the reduction
//! that contracts the classes of a proper vertex coloring into a colored
//! complete graph and lifts a matching found there back to the graph.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::chromatic::verify_proper;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeColoring, Graph, VertexColoring};

const NONE: usize = usize::MAX;

/// Matching size wanted in each color; `targets[i - 1]` belongs to color `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MatchingTargets(Vec<usize>);

impl MatchingTargets {
    pub fn new(targets: Vec<usize>) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::input("need at least one target"));
        }
        if targets.contains(&0) {
            return Err(Error::input("matching targets must be positive"));
        }
        Ok(MatchingTargets(targets))
    }

    pub fn t(&self) -> usize {
        self.0.len()
    }

    pub fn max(&self) -> usize {
        *self.0.iter().max().unwrap()
    }

    /// Target for genuine color `color` (1-based).
    pub fn target(&self, color: usize) -> usize {
        self.0[color - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for MatchingTargets {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        MatchingTargets::new(v)
    }
}

impl From<MatchingTargets> for Vec<usize> {
    fn from(t: MatchingTargets) -> Self {
        t.0
    }
}

impl std::str::FromStr for MatchingTargets {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::input(format!("bad target `{x}`"))))
            .collect::<Result<Vec<_>>>()?;
        MatchingTargets::new(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub color: usize,
    pub target: usize,
    pub edges: Vec<Edge>,
}

/// `max n_i + 1 + Σ (n_i - 1)`: the Ramsey number of the matchings
/// `n_1 K_2, ..., n_t K_2`.
pub fn ramsey_matching_number(targets: &MatchingTargets) -> usize {
    targets.max() + 1 + targets.as_slice().iter().map(|n| n - 1).sum::<usize>()
}

/// Maximum-cardinality matching by Edmonds' blossom algorithm, augmenting
/// from each free vertex in index order.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for root in 0..n {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_augmenting_path(root) {
                b.augment(end);
            }
        }
    }
    (0..n).filter(|&v| b.mate[v] != NONE && v < b.mate[v]).map(|v| Edge::new(v, b.mate[v])).collect()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let g = self.g;
        let n = g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

fn require_genuine(ec: &EdgeColoring, targets: &MatchingTargets) -> Result<()> {
    if ec.is_extended() {
        return Err(Error::input("coloring uses the reserved color 0"));
    }
    if ec.t() != targets.t() {
        return Err(Error::input(format!("coloring has {} colors but {} targets were given", ec.t(), targets.t())));
    }
    Ok(())
}

/// Returns the first color, in increasing order, whose maximum matching
/// reaches its target, truncated to exactly the target size.
pub fn find_mono_matching(g: &Graph, ec: &EdgeColoring, targets: &MatchingTargets) -> Result<MatchingCertificate> {
    require_genuine(ec, targets)?;
    for color in 1..=targets.t() {
        let target = targets.target(color);
        let mut edges = maximum_matching(&g.color_subgraph(ec, color)?);
        if edges.len() >= target {
            edges.truncate(target);
            return Ok(MatchingCertificate { color, target, edges });
        }
    }
    Err(Error::NotFound)
}

/// [`find_mono_matching`], where a miss on a graph known to have chromatic
/// number at least `chi_lower >= R` is reported as an inconsistency.
pub fn find_mono_matching_checked(
    g: &Graph,
    ec: &EdgeColoring,
    targets: &MatchingTargets,
    chi_lower: usize,
) -> Result<MatchingCertificate> {
    match find_mono_matching(g, ec, targets) {
        Err(Error::NotFound) if chi_lower >= ramsey_matching_number(targets) => Err(Error::Inconsistency(format!(
            "no color reaches its target although chromatic number >= {chi_lower} >= {}",
            ramsey_matching_number(targets)
        ))),
        other => other,
    }
}

pub fn verify_matching_certificate(g: &Graph, ec: &EdgeColoring, cert: &MatchingCertificate) -> Result<(), Vec<String>> {
    let mut problems = Vec::new();
    let mut used = vec![false; g.n()];
    for e in &cert.edges {
        if e.u == e.v || e.v >= g.n() || !g.has_edge(e.u, e.v) {
            problems.push(format!("{e} is not an edge of the graph"));
            continue;
        }
        if ec.color(*e) != Some(cert.color) {
            problems.push(format!("edge {e} has color {:?}, certificate claims {}", ec.color(*e), cert.color));
        }
        for x in [e.u, e.v] {
            if std::mem::replace(&mut used[x], true) {
                problems.push(format!("vertex {x} is covered twice"));
            }
        }
    }
    if cert.edges.len() < cert.target {
        problems.push(format!("{} edges, target {}", cert.edges.len(), cert.target));
    }
    if cert.color == 0 || cert.color > ec.t() {
        problems.push(format!("color {} is not a genuine color", cert.color));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

/// One class pair of a [`ReducedInstance`] with the color it received and an
/// edge of the graph carrying that color between the two classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPair {
    pub a: usize,
    pub b: usize,
    pub color: usize,
    pub provenance: Edge,
}

/// Colored complete graph on the classes of a proper vertex coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedInstance {
    pub k: usize,
    pub t: usize,
    pub classes: Vec<Vec<usize>>,
    /// All pairs `a < b`, in lexicographic order.
    pub pairs: Vec<ClassPair>,
}

impl ReducedInstance {
    pub fn pair(&self, a: usize, b: usize) -> Option<&ClassPair> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.pairs.binary_search_by_key(&(a, b), |p| (p.a, p.b)).ok().map(|i| &self.pairs[i])
    }

    /// The reduced instance as a colored `K_k`.
    pub fn complete_coloring(&self) -> (Graph, EdgeColoring) {
        let kg = Graph::complete(self.k);
        let colors = self.pairs.iter().map(|p| (Edge::new(p.a, p.b), p.color)).collect();
        (kg, EdgeColoring::from_parts_unchecked(self.t, false, colors))
    }
}

/// Contracts the classes of `vc` into a colored complete graph. Classes with
/// no edge between them are merged first (lowest index pair first); each
/// pair then takes the smallest color present between its classes, with the
/// lexicographically smallest such edge as provenance.
pub fn kiraly_reduce(g: &Graph, ec: &EdgeColoring, vc: &VertexColoring) -> Result<ReducedInstance> {
    if ec.is_extended() {
        return Err(Error::input("coloring uses the reserved color 0"));
    }
    if !verify_proper(g, vc)? {
        return Err(Error::input("vertex coloring is not proper"));
    }
    let mut classes: Vec<Vec<usize>> = vc.compacted().classes();
    let joined = |x: &[usize], y: &[usize]| x.iter().any(|&u| y.iter().any(|&v| g.has_edge(u, v)));
    'merge: loop {
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                if !joined(&classes[i], &classes[j]) {
                    let moved = classes.remove(j);
                    classes[i].extend(moved);
                    classes[i].sort_unstable();
                    continue 'merge;
                }
            }
        }
        break;
    }
    let k = classes.len();
    let mut class_of = vec![0; g.n()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    // edges() is lexicographic, so the first edge seen per (pair, color) is the smallest
    let mut best: BTreeMap<(usize, usize), (usize, Edge)> = BTreeMap::new();
    for e in g.edges() {
        let (a, b) = (class_of[e.u].min(class_of[e.v]), class_of[e.u].max(class_of[e.v]));
        let c = ec.color(e).expect("coloring covers the graph");
        best.entry((a, b))
            .and_modify(|cur| {
                if c < cur.0 {
                    *cur = (c, e);
                }
            })
            .or_insert((c, e));
    }
    let pairs = best
        .into_iter()
        .map(|((a, b), (color, provenance))| ClassPair { a, b, color, provenance })
        .collect::<Vec<_>>();
    debug_assert_eq!(pairs.len(), k * k.saturating_sub(1) / 2);
    Ok(ReducedInstance { k, t: ec.t(), classes, pairs })
}

/// Maps a matching of color `color` on the reduced complete graph back to
/// the provenance edges in the original graph.
pub fn lift_matching(ri: &ReducedInstance, reduced_matching: &[(usize, usize)], color: usize) -> Result<Vec<Edge>> {
    let mut used = vec![false; ri.k];
    let mut lifted = Vec::with_capacity(reduced_matching.len());
    for &(a, b) in reduced_matching {
        let pair = ri.pair(a, b).ok_or_else(|| Error::input(format!("({a}, {b}) is not a class pair")))?;
        if pair.color != color {
            return Err(Error::input(format!("class pair ({a}, {b}) has color {}, not {color}", pair.color)));
        }
        for x in [a, b] {
            if std::mem::replace(&mut used[x], true) {
                return Err(Error::input(format!("class {x} used twice in the reduced matching")));
            }
        }
        lifted.push(pair.provenance);
    }
    Ok(lifted)
}

/// Full reduction route: contract, match on the colored `K_k`, lift.
pub fn kiraly_route(
    g: &Graph,
    ec: &EdgeColoring,
    targets: &MatchingTargets,
    vc: &VertexColoring,
) -> Result<(ReducedInstance, MatchingCertificate)> {
    require_genuine(ec, targets)?;
    let ri = kiraly_reduce(g, ec, vc)?;
    let (kg, kec) = ri.complete_coloring();
    let reduced = match find_mono_matching(&kg, &kec, targets) {
        Err(Error::NotFound) if ri.k >= ramsey_matching_number(targets) => {
            return Err(Error::Inconsistency(format!(
                "colored K_{} has no monochromatic target matching",
                ri.k
            )))
        }
        other => other?,
    };
    let pairs: Vec<(usize, usize)> = reduced.edges.iter().map(|e| (e.u, e.v)).collect();
    let edges = lift_matching(&ri, &pairs, reduced.color)?;
    Ok((ri, MatchingCertificate { color: reduced.color, target: reduced.target, edges }))
}

/// Complete graph on the vertices of `g`: its edges keep their colors and
/// the complement edges get color 0.
pub fn extend_with_color_zero(g: &Graph, ec: &EdgeColoring) -> Result<(Graph, EdgeColoring)> {
    if ec.is_extended() {
        return Err(Error::input("coloring is already extended"));
    }
    let k = Graph::complete(g.n());
    let colors = k.edges().map(|e| (e, ec.color(e).unwrap_or(0))).collect();
    Ok((k, EdgeColoring::from_parts_unchecked(ec.t(), true, colors)))
}

/// Brute-force search for a cycle in which every two consecutive edges have
/// different colors (color 0 counts as a color). Shorter cycles are found
/// first; the cycle is returned as a vertex sequence starting at its
/// smallest vertex.
pub fn find_properly_colored_cycle(k: &Graph, ec: &EdgeColoring, max_n: usize) -> Result<Option<Vec<usize>>> {
    let n = k.n();
    if n > max_n {
        return Err(Error::TooLarge(format!("{n} vertices exceeds the brute-force bound {max_n}")));
    }
    let mut color = vec![NONE; n * n];
    for (e, c) in ec.iter() {
        if e.v < n && k.has_edge(e.u, e.v) {
            color[e.u * n + e.v] = c;
            color[e.v * n + e.u] = c;
        }
    }
    for len in 3..=n {
        for s in 0..n {
            let mut path = vec![s];
            let mut on = vec![false; n];
            on[s] = true;
            if extend_cycle(k, &color, len, &mut path, &mut on) {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

fn extend_cycle(k: &Graph, color: &[usize], len: usize, path: &mut Vec<usize>, on: &mut [bool]) -> bool {
    let n = k.n();
    let s = path[0];
    let last = *path.last().unwrap();
    let last_color = if path.len() >= 2 { color[path[path.len() - 2] * n + last] } else { NONE };
    if path.len() == len {
        let close = color[last * n + s];
        let first = color[s * n + path[1]];
        return k.has_edge(last, s) && close != last_color && close != first;
    }
    for w in k.neighbors(last) {
        if w <= s || on[w] || color[last * n + w] == last_color {
            continue;
        }
        on[w] = true;
        path.push(w);
        if extend_cycle(k, color, len, path, on) {
            return true;
        }
        path.pop();
        on[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn targets(v: &[usize]) -> MatchingTargets {
        MatchingTargets::new(v.to_vec()).unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(ramsey_matching_number(&targets(&[2, 2])), 5);
        assert_eq!(ramsey_matching_number(&targets(&[3, 2])), 7);
        assert_eq!(ramsey_matching_number(&targets(&[2, 3])), 7);
        assert_eq!(ramsey_matching_number(&targets(&[1])), 2);
        assert!(MatchingTargets::new(vec![]).is_err());
        assert!("2,0".parse::<MatchingTargets>().is_err());
        assert_eq!("3, 2".parse::<MatchingTargets>().unwrap(), targets(&[3, 2]));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(maximum_matching(&Graph::path(4)).len(), 2);
        assert_eq!(maximum_matching(&Graph::cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&Graph::empty(3)).len(), 0);
        assert_eq!(maximum_matching(&Graph::complete(7)).len(), 3);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendant paths; greedy 0-1 must be undone
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn single_color_certificate() {
        let g = Graph::complete(4);
        let ec = EdgeColoring::uniform(&g, 2, 1);
        let cert = find_mono_matching(&g, &ec, &targets(&[2, 2])).unwrap();
        assert_eq!((cert.color, cert.edges.len()), (1, 2));
        assert!(verify_matching_certificate(&g, &ec, &cert).is_ok());
    }

    #[test]
    fn k4_red_matching() {
        let g = Graph::complete(4);
        let ec =
            EdgeColoring::from_fn(&g, 2, |e| if e == Edge::new(0, 1) || e == Edge::new(2, 3) { 1 } else { 2 }).unwrap();
        let cert = find_mono_matching(&g, &ec, &targets(&[2, 2])).unwrap();
        assert_eq!(cert.color, 1);
        assert_eq!(cert.edges, vec![Edge::new(0, 1), Edge::new(2, 3)]);
    }

    #[test]
    fn not_found_and_inconsistency() {
        let g = Graph::star(3);
        let ec = EdgeColoring::uniform(&g, 2, 1);
        assert_eq!(find_mono_matching(&g, &ec, &targets(&[2, 2])), Err(Error::NotFound));
        assert!(matches!(find_mono_matching_checked(&g, &ec, &targets(&[2, 2]), 5), Err(Error::Inconsistency(_))));
        assert_eq!(find_mono_matching_checked(&g, &ec, &targets(&[2, 2]), 2), Err(Error::NotFound));
        assert!(find_mono_matching(&g, &ec, &targets(&[2])).is_err());
    }

    #[test]
    fn reduce_identity_on_complete() {
        let g = Graph::complete(4);
        let ec = EdgeColoring::from_fn(&g, 3, |e| (e.u + e.v) % 3 + 1).unwrap();
        let vc = VertexColoring::new(4, vec![0, 1, 2, 3]).unwrap();
        let ri = kiraly_reduce(&g, &ec, &vc).unwrap();
        assert_eq!(ri.k, 4);
        let (kg, kec) = ri.complete_coloring();
        assert_eq!(kg, g);
        assert_eq!(kec, ec);
    }

    #[test]
    fn reduce_c5() {
        let g = Graph::cycle(5);
        // edges 01,12,23,34,40 colored 1,2,1,2,2
        let ec = EdgeColoring::from_fn(&g, 2, |e| match (e.u, e.v) {
            (0, 1) | (2, 3) => 1,
            _ => 2,
        })
        .unwrap();
        let vc = VertexColoring::from_classes(5, &[vec![0, 2], vec![1, 3], vec![4]]).unwrap();
        let ri = kiraly_reduce(&g, &ec, &vc).unwrap();
        assert_eq!(ri.k, 3);
        // {0,2}-{1,3}: edges 01(1),12(2),23(1) -> color 1 via 01
        assert_eq!(ri.pair(0, 1).unwrap(), &ClassPair { a: 0, b: 1, color: 1, provenance: Edge::new(0, 1) });
        // {0,2}-{4}: edge 04(2)
        assert_eq!(ri.pair(0, 2).unwrap(), &ClassPair { a: 0, b: 2, color: 2, provenance: Edge::new(0, 4) });
        // {1,3}-{4}: edge 34(2)
        assert_eq!(ri.pair(1, 2).unwrap(), &ClassPair { a: 1, b: 2, color: 2, provenance: Edge::new(3, 4) });
        assert_eq!(lift_matching(&ri, &[(0, 1)], 1).unwrap(), vec![Edge::new(0, 1)]);
        assert_eq!(lift_matching(&ri, &[], 1).unwrap(), vec![]);
        assert!(lift_matching(&ri, &[(0, 1)], 2).is_err());
        assert!(lift_matching(&ri, &[(0, 2), (1, 2)], 2).is_err());
    }

    #[test]
    fn reduce_merges_unjoined_classes() {
        let g = Graph::empty(4);
        let ec = EdgeColoring::uniform(&g, 1, 1);
        let vc = VertexColoring::new(2, vec![0, 0, 1, 1]).unwrap();
        let ri = kiraly_reduce(&g, &ec, &vc).unwrap();
        assert_eq!(ri.k, 1);
        assert!(ri.pairs.is_empty());
        assert_eq!(ri.classes, vec![vec![0, 1, 2, 3]]);
        let bad = VertexColoring::new(1, vec![0; 4]).unwrap();
        assert!(kiraly_reduce(&Graph::path(4), &EdgeColoring::uniform(&Graph::path(4), 1, 1), &bad).is_err());
    }

    #[test]
    fn zero_extension() {
        let c5 = Graph::cycle(5);
        let (k, ext) = extend_with_color_zero(&c5, &EdgeColoring::uniform(&c5, 2, 2)).unwrap();
        assert_eq!(k, Graph::complete(5));
        assert!(ext.is_extended());
        assert_eq!(ext.iter().filter(|&(_, c)| c == 0).count(), 5);
        assert_eq!(ext.iter().filter(|&(_, c)| c == 2).count(), 5);
        let (_, ext) = extend_with_color_zero(&Graph::complete(4), &EdgeColoring::uniform(&Graph::complete(4), 1, 1)).unwrap();
        assert!(ext.iter().all(|(_, c)| c == 1));
        let e3 = Graph::empty(3);
        let (_, ext) = extend_with_color_zero(&e3, &EdgeColoring::uniform(&e3, 1, 1)).unwrap();
        assert_eq!(ext.len(), 3);
        assert!(ext.iter().all(|(_, c)| c == 0));
    }

    #[test]
    fn properly_colored_cycles() {
        let k3 = Graph::complete(3);
        let rainbow = EdgeColoring::from_fn(&k3, 3, |e| e.u + e.v).unwrap();
        assert_eq!(find_properly_colored_cycle(&k3, &rainbow, 8).unwrap(), Some(vec![0, 1, 2]));
        let mono = EdgeColoring::uniform(&k3, 1, 1);
        assert_eq!(find_properly_colored_cycle(&k3, &mono, 8).unwrap(), None);
        let k4 = Graph::complete(4);
        let alt = EdgeColoring::from_fn(&k4, 2, |e| match (e.u, e.v) {
            (0, 1) | (2, 3) => 1,
            (1, 2) | (0, 3) => 2,
            _ => 1,
        })
        .unwrap();
        assert_eq!(find_properly_colored_cycle(&k4, &alt, 8).unwrap(), Some(vec![0, 1, 2, 3]));
        assert!(matches!(find_properly_colored_cycle(&Graph::complete(9), &EdgeColoring::uniform(&Graph::complete(9), 1, 1), 8), Err(Error::TooLarge(_))));
    }

    #[test]
    fn color_zero_counts_for_properness() {
        // path 0-1-2 in color 1; the 0-colored complement edge 02 closes a
        // triangle whose two genuine edges share a color
        let g = Graph::path(3);
        let (k, ext) = extend_with_color_zero(&g, &EdgeColoring::uniform(&g, 1, 1)).unwrap();
        assert_eq!(find_properly_colored_cycle(&k, &ext, 8).unwrap(), None);
        // with 01 and 12 in different colors the triangle is proper
        let ec = EdgeColoring::from_fn(&g, 2, |e| e.u + 1).unwrap();
        let (k, ext) = extend_with_color_zero(&g, &ec).unwrap();
        assert_eq!(find_properly_colored_cycle(&k, &ext, 8).unwrap(), Some(vec![0, 1, 2]));
    }
}
