//! Immutable simple undirected graphs and vertex-role classification.
//!
//! Vertices are the integers `0..n`. The adjacency lists are sorted, so all
//! derived quantities are independent of the order edges were supplied in.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

/// Errors produced while building or parsing a graph.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: expected `{expected}`, got `{got}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("diametral path requested on a disconnected graph")]
    Disconnected,
}

/// A simple undirected graph, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Rejects self-loops, out-of-range endpoints and duplicate edges
    /// (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        line: 0,
                        vertex: w,
                        n,
                    });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge { u, v: w[0] });
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// `m` lines `u v`.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (lineno, header) = lines.next().ok_or(GraphError::Malformed {
            line: 1,
            expected: "n m",
            got: String::new(),
        })?;
        let mut parts = header.split_whitespace();
        let parse_field = |s: Option<&str>, line: usize| -> Result<usize, GraphError> {
            s.and_then(|t| t.parse().ok()).ok_or(GraphError::Malformed {
                line,
                expected: "n m",
                got: header.to_string(),
            })
        };
        let n = parse_field(parts.next(), lineno + 1)?;
        let m = parse_field(parts.next(), lineno + 1)?;
        if parts.next().is_some() {
            return Err(GraphError::Malformed {
                line: lineno + 1,
                expected: "n m",
                got: header.to_string(),
            });
        }
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let mut parts = line.split_whitespace();
            let bad = || GraphError::Malformed {
                line: lineno + 1,
                expected: "u v",
                got: line.to_string(),
            };
            let u: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            let v: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            if parts.next().is_some() {
                return Err(bad());
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    line: lineno + 1,
                    vertex: u.max(v),
                    n,
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        Self::from_edges(n, &edges)
    }

    /// Renders the graph in the same edge-list format `from_edge_list` reads.
    /// Edges are listed as `u v` with `u < v`, sorted.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m == self.n() - 1 && self.is_connected()
    }

    /// 2-colorability check.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n()];
        for s in 0..self.n() {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n() == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// Exact: one BFS per vertex, taking the minimum closed walk witnessed by
    /// a non-tree edge. Intended for desk-scale graphs.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for s in 0..self.n() {
            let mut dist = vec![usize::MAX; self.n()];
            let mut parent = vec![usize::MAX; self.n()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn has_triangle(&self) -> bool {
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                // sorted lists: intersect
                let (mut i, mut j) = (0, 0);
                let (a, b) = (&self.adj[u], &self.adj[v]);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => return true,
                    }
                }
            }
        }
        false
    }
}

/// Role of a vertex with respect to leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// Degree exactly 1.
    Leaf,
    /// Adjacent to exactly one leaf (and degree at least 2).
    WeakStem,
    /// Adjacent to at least two leaves.
    StrongStem,
    /// Everything else.
    Internal,
}

/// Per-vertex roles plus the stem count, and a diametral path when the
/// input is a tree.
#[derive(Debug, Clone)]
pub struct VertexClassification {
    pub roles: Vec<VertexRole>,
    /// Number of vertices classified as weak or strong stems.
    pub stem_count: usize,
    /// Endpoint-to-endpoint vertex sequence of a longest path; `Some` only
    /// for tree inputs.
    pub diametral_path: Option<Vec<usize>>,
}

impl VertexClassification {
    /// Diameter of the tree, when known.
    pub fn diameter(&self) -> Option<usize> {
        self.diametral_path.as_ref().map(|p| p.len() - 1)
    }
}

/// Classifies every vertex as leaf / weak stem / strong stem / internal.
///
/// Degree-1 vertices are always classified `Leaf`, even when they are also
/// adjacent to a leaf (as in the two-vertex path).
pub fn classify_vertices(g: &Graph) -> VertexClassification {
    let n = g.n();
    let mut stem_count = 0;
    let roles: Vec<VertexRole> = (0..n)
        .map(|v| {
            if g.degree(v) == 1 {
                return VertexRole::Leaf;
            }
            let leaf_neighbors = g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count();
            match leaf_neighbors {
                0 => VertexRole::Internal,
                1 => {
                    stem_count += 1;
                    VertexRole::WeakStem
                }
                _ => {
                    stem_count += 1;
                    VertexRole::StrongStem
                }
            }
        })
        .collect();
    let diametral_path = if g.is_tree() { Some(tree_diametral_path(g)) } else { None };
    VertexClassification {
        roles,
        stem_count,
        diametral_path,
    }
}

/// Double BFS; exact on trees.
fn tree_diametral_path(g: &Graph) -> Vec<usize> {
    if g.n() == 1 {
        return vec![0];
    }
    let far = |src: usize| -> (usize, Vec<usize>) {
        let dist = g.bfs_distances(src);
        let end = (0..g.n()).max_by_key(|&v| dist[v]).unwrap();
        (end, dist)
    };
    let (a, _) = far(0);
    let (b, dist_a) = far(a);
    // walk back from b to a along strictly decreasing distance
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&u| dist_a[u] + 1 == dist_a[cur])
            .unwrap();
        path.push(next);
        cur = next;
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_single_edge() {
        let g = Graph::from_edge_list("2 1\n0 1\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parses_path_and_triangle() {
        let p4 = Graph::from_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!((p4.n(), p4.m()), (4, 3));
        assert_eq!(p4.degree(1), 2);
        let c3 = Graph::from_edge_list("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        assert_eq!(c3.regular_degree(), Some(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::from_edge_list("2 1\n0 x\n"),
            Err(GraphError::Malformed { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("2 1\n0 5\n"),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3 2\n0 1\n1 0\n"),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("2 1\n1 1\n"),
            Err(GraphError::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeCountMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = families::cycle(7).unwrap();
        let text = g.to_edge_list_string();
        let h = Graph::from_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = families::double_star(2, 3).unwrap();
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.m());
    }

    #[test]
    fn adjacency_is_order_independent() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 3), (2, 1), (1, 0)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn girth_and_triangles() {
        assert_eq!(families::cycle(8).unwrap().girth(), Some(8));
        assert_eq!(families::cycle(7).unwrap().girth(), Some(7));
        assert_eq!(families::path(9).unwrap().girth(), None);
        assert!(families::complete_bipartite(3, 3).unwrap().girth() == Some(4));
        assert!(!families::cycle(5).unwrap().has_triangle());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap().has_triangle());
    }

    #[test]
    fn classifies_star_center_as_strong_stem() {
        let star = families::star(5).unwrap(); // K_{1,4}
        let c = classify_vertices(&star);
        assert_eq!(c.roles[0], VertexRole::StrongStem);
        assert!(c.roles[1..].iter().all(|&r| r == VertexRole::Leaf));
        assert_eq!(c.stem_count, 1);
    }

    #[test]
    fn classifies_path_interior_as_weak_stems() {
        let p4 = families::path(4).unwrap();
        let c = classify_vertices(&p4);
        assert_eq!(c.roles[1], VertexRole::WeakStem);
        assert_eq!(c.roles[2], VertexRole::WeakStem);
        assert_eq!(c.stem_count, 2);
        assert_eq!(c.diameter(), Some(3));
    }

    #[test]
    fn classifies_double_star_centers() {
        let ds = families::double_star(2, 3).unwrap();
        let c = classify_vertices(&ds);
        assert_eq!(c.roles[0], VertexRole::StrongStem);
        assert_eq!(c.roles[1], VertexRole::StrongStem);
        assert_eq!(c.stem_count, 2);
    }

    #[test]
    fn diametral_path_only_on_trees() {
        let c5 = families::cycle(5).unwrap();
        assert!(classify_vertices(&c5).diametral_path.is_none());
        let p6 = families::path(6).unwrap();
        let c = classify_vertices(&p6);
        assert_eq!(c.diametral_path.as_ref().unwrap().len(), 6);
    }

    #[test]
    fn bipartite_detection() {
        assert!(families::cycle(6).unwrap().is_bipartite());
        assert!(!families::cycle(5).unwrap().is_bipartite());
        assert!(families::path(7).unwrap().is_bipartite());
    }
}
