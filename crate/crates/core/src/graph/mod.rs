//! Finite simple undirected graphs on vertices `0..n`.

mod generators;
mod gp;
mod io;
mod perm;

pub use generators::{complete, complete_bipartite, cycle, path, star, wagner};
pub use gp::{generalized_petersen, gp_dihedral_group, GpKind, GpLabel};
pub use io::{parse_edge_list, write_edge_list};
pub use perm::{nonedge_orbits, EdgeOrbit, VertexPermutation};

use itertools::Itertools;
use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

/// Unordered vertex pair stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("permutation has length {found}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group element {index} is not an automorphism")]
    NotAutomorphism { index: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Normalizes an unordered pair to `(min, max)`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An immutable simple graph. Neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-adjacent distinct pairs in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n())
            .tuple_combinations()
            .filter(|&(u, v)| !self.has_edge(u, v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Returns `G + uv` as a new graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            let (a, b) = edge(u, v);
            return Err(GraphError::EdgeExists(a, b));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = g.adj[a].binary_search(&b).unwrap_err();
            g.adj[a].insert(pos, b);
        }
        g.m += 1;
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::new(self.n(), self.edges().map(|(u, v)| edge(perm[u], perm[v])))
            .expect("relabel by a permutation keeps the graph simple")
    }

    /// Neighbor bitsets, for graphs small enough to fit a [`VertexSet`].
    pub(crate) fn neighbor_sets(&self) -> Vec<VertexSet> {
        assert!(self.n() <= MAX_VERTICES, "graph exceeds {MAX_VERTICES} vertices");
        self.adj.iter().map(|l| l.iter().copied().collect()).collect()
    }

    /// Minimum number of vertices whose removal disconnects the graph or
    /// leaves a single vertex. Complete graphs on `r` vertices give `r - 1`.
    pub fn vertex_connectivity(&self) -> Result<usize, GraphError> {
        let n = self.n();
        if n < 2 {
            return Err(GraphError::InvalidParameter(format!(
                "vertex connectivity needs at least 2 vertices, got {n}"
            )));
        }
        for k in 0..n.saturating_sub(1) {
            let cut_found = (0..n).combinations(k).any(|cut| {
                let mut removed = vec![false; n];
                for &v in &cut {
                    removed[v] = true;
                }
                !self.connected_after_removal(&removed)
            });
            if cut_found {
                return Ok(k);
            }
        }
        Ok(n - 1)
    }

    fn connected_after_removal(&self, removed: &[bool]) -> bool {
        let Some(start) = (0..self.n()).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let e2 = Graph::new(2, []).unwrap();
        assert_eq!(e2.m(), 0);
        let dup = Graph::new(4, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(dup.m(), 2);
        assert_eq!(dup.degrees().iter().sum::<usize>(), 2 * dup.m());
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
    }

    #[test]
    fn basic_queries() {
        assert_eq!(star(4).unwrap().min_degree(), 1);
        assert!(!Graph::empty(2).is_connected());
        assert!(complete(4).unwrap().is_connected());
        assert!(!complete(3).unwrap().is_triangle_free());
        assert!(cycle(4).unwrap().is_triangle_free());
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn add_edge_examples() {
        let p3 = path(3).unwrap();
        let tri = p3.add_edge(0, 2).unwrap();
        assert_eq!(tri, complete(3).unwrap());
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.add_edge(1, 0), Err(GraphError::EdgeExists(0, 1)));
        assert_eq!(p3.add_edge(2, 2), Err(GraphError::Loop(2)));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(complete(5).unwrap().vertex_connectivity(), Ok(4));
        assert_eq!(cycle(5).unwrap().vertex_connectivity(), Ok(2));
        assert_eq!(complete_bipartite(3, 3).unwrap().vertex_connectivity(), Ok(3));
        assert_eq!(Graph::empty(2).vertex_connectivity(), Ok(0));
        assert_eq!(path(4).unwrap().vertex_connectivity(), Ok(1));
        assert!(Graph::empty(1).vertex_connectivity().is_err());
    }

    #[test]
    fn induced_and_relabel() {
        let c5 = cycle(5).unwrap();
        let p = c5.induced_subgraph(&[1, 2, 3]);
        assert_eq!(p, path(3).unwrap());
        let r = c5.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(r, c5);
    }
}
