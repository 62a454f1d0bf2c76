use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use super::{Adjacency, SimpleGraph};

/// A natural number or infinity, for diameters and girths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Extended::Finite(n) => Some(*n),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinite)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(n) => write!(f, "{n}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(n) => serializer.serialize_u64(*n as u64),
            Extended::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Invariants of a simple graph. Vertex lists hold vertex positions.
///
/// Graphs on 0 or 1 vertices count as connected with diameter 0, and the
/// empty graph has domination number 0. A star needs at least two vertices;
/// `star_centers` lists every vertex that can serve as the center (both
/// endpoints of a single edge qualify).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub is_complete: bool,
    pub is_empty_graph: bool,
    pub is_connected: bool,
    pub diameter: Extended,
    pub girth: Extended,
    pub domination_number: usize,
    pub dominating_set: Vec<usize>,
    pub universal_vertices: Vec<usize>,
    pub isolated_vertices: Vec<usize>,
    pub is_star: bool,
    pub star_centers: Vec<usize>,
}

pub fn graph_metrics(g: &SimpleGraph) -> GraphMetrics {
    metrics_of(&g.adjacency)
}

pub fn metrics_of(adj: &Adjacency) -> GraphMetrics {
    let n = adj.len();
    let edge_count = adj.edge_count();
    let (is_connected, diameter) = connectivity_and_diameter(adj);
    let dominating_set = minimum_dominating_set(adj);
    let universal_vertices: Vec<usize> = (0..n).filter(|&v| adj.degree(v) + 1 == n).collect();
    let isolated_vertices: Vec<usize> = (0..n).filter(|&v| adj.degree(v) == 0).collect();
    let star_centers: Vec<usize> = if n >= 2 && edge_count == n - 1 {
        universal_vertices.clone()
    } else {
        Vec::new()
    };
    GraphMetrics {
        vertex_count: n,
        edge_count,
        is_complete: edge_count * 2 == n * n.saturating_sub(1),
        is_empty_graph: edge_count == 0,
        is_connected,
        diameter,
        girth: girth(adj),
        domination_number: dominating_set.len(),
        dominating_set,
        universal_vertices,
        isolated_vertices,
        is_star: !star_centers.is_empty(),
        star_centers,
    }
}

fn bfs_distances(adj: &Adjacency, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        for w in adj.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn connectivity_and_diameter(adj: &Adjacency) -> (bool, Extended) {
    let mut diameter = 0;
    for source in 0..adj.len() {
        for d in bfs_distances(adj, source) {
            match d {
                Some(d) => diameter = diameter.max(d),
                None => return (false, Extended::Infinite),
            }
        }
    }
    (true, Extended::Finite(diameter))
}

/// Shortest cycle over a breadth-first search from every vertex: a non-tree
/// edge `(u, w)` closes a cycle of length at most `d(u) + d(w) + 1`, and the
/// minimum over all roots is exact.
fn girth(adj: &Adjacency) -> Extended {
    let n = adj.len();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for w in adj.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best.map_or(Extended::Infinite, Extended::Finite)
}

/// Lexicographically first minimum dominating set.
///
/// A greedy pass bounds the size; sizes are then tried in increasing order
/// with a depth-first search over increasing vertex indices.
fn minimum_dominating_set(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let closed: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut row = adj.row(v).clone();
            row.insert(v);
            row
        })
        .collect();
    let upper = greedy_dominating_set(&closed).len();
    let max_cover = closed.iter().map(|c| c.count_ones(..)).max().unwrap_or(1);
    for size in 1..=upper {
        let mut chosen = Vec::with_capacity(size);
        let covered = FixedBitSet::with_capacity(n);
        if search(&closed, size, max_cover, 0, &covered, &mut chosen) {
            return chosen;
        }
    }
    unreachable!("the greedy set has size {upper}")
}

fn greedy_dominating_set(closed: &[FixedBitSet]) -> Vec<usize> {
    let n = closed.len();
    let mut covered = FixedBitSet::with_capacity(n);
    let mut chosen = Vec::new();
    while covered.count_ones(..) < n {
        let best = (0..n)
            .max_by_key(|&v| (closed[v].difference_count(&covered), std::cmp::Reverse(v)))
            .expect("nonempty graph");
        covered.union_with(&closed[best]);
        chosen.push(best);
    }
    chosen
}

fn search(
    closed: &[FixedBitSet],
    remaining: usize,
    max_cover: usize,
    next: usize,
    covered: &FixedBitSet,
    chosen: &mut Vec<usize>,
) -> bool {
    let n = closed.len();
    let Some(first_open) = (0..n).find(|&v| !covered.contains(v)) else {
        return true;
    };
    if remaining == 0 {
        return false;
    }
    let open = n - covered.count_ones(..);
    if remaining * max_cover < open {
        return false;
    }
    // Only vertices in the closed neighbourhood of the first undominated
    // vertex can cover it, and picks are made in increasing index order.
    if closed[first_open].ones().all(|v| v < next) {
        return false;
    }
    for v in next..n {
        if n - v < remaining {
            break;
        }
        let mut grown = covered.clone();
        grown.union_with(&closed[v]);
        chosen.push(v);
        if search(closed, remaining - 1, max_cover, v + 1, &grown, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Adjacency {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Adjacency::from_edges(n, &edges)
    }

    #[test]
    fn single_vertex_conventions() {
        let m = metrics_of(&Adjacency::empty(1));
        assert!(m.is_connected && m.is_complete && m.is_empty_graph);
        assert_eq!(m.diameter, Extended::Finite(0));
        assert_eq!(m.girth, Extended::Infinite);
        assert_eq!(m.domination_number, 1);
        assert!(!m.is_star);
    }

    #[test]
    fn empty_vertex_set() {
        let m = metrics_of(&Adjacency::empty(0));
        assert!(m.is_connected);
        assert_eq!(m.diameter, Extended::Finite(0));
        assert_eq!(m.domination_number, 0);
        assert!(m.dominating_set.is_empty());
    }

    #[test]
    fn edgeless_pair() {
        let m = metrics_of(&Adjacency::empty(2));
        assert!(!m.is_connected);
        assert_eq!(m.diameter, Extended::Infinite);
        assert_eq!(m.domination_number, 2);
        assert_eq!(m.isolated_vertices, vec![0, 1]);
    }

    #[test]
    fn cycles_and_paths() {
        for n in 3..=9 {
            let m = metrics_of(&cycle(n));
            assert_eq!(m.girth, Extended::Finite(n));
            assert_eq!(m.diameter, Extended::Finite(n / 2));
            assert_eq!(m.domination_number, n.div_ceil(3));
        }
        let path = Adjacency::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let m = metrics_of(&path);
        assert_eq!(m.girth, Extended::Infinite);
        assert_eq!(m.diameter, Extended::Finite(4));
        assert_eq!(m.dominating_set, vec![0, 3]);
    }

    #[test]
    fn petersen_graph() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let m = metrics_of(&Adjacency::from_edges(10, &edges));
        assert_eq!(m.girth, Extended::Finite(5));
        assert_eq!(m.diameter, Extended::Finite(2));
        assert_eq!(m.domination_number, 3);
    }

    #[test]
    fn stars() {
        let star = Adjacency::from_edges(4, &[(2, 0), (2, 1), (2, 3)]);
        let m = metrics_of(&star);
        assert!(m.is_star);
        assert_eq!(m.star_centers, vec![2]);
        assert_eq!(m.universal_vertices, vec![2]);
        assert_eq!(m.domination_number, 1);

        let k2 = metrics_of(&Adjacency::from_edges(2, &[(0, 1)]));
        assert!(k2.is_star && k2.is_complete);
        assert_eq!(k2.star_centers, vec![0, 1]);

        let triangle = metrics_of(&cycle(3));
        assert!(!triangle.is_star && triangle.is_complete);
    }
}
