//! Simple undirected graphs over the dense vertex set `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {{{0},{1}}} listed twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("endpoint {vertex} out of range for n={n}")]
    EndpointOutOfRange { vertex: Vertex, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// Immutable simple graph. Adjacency lists are kept sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// Normalizes an edge so the smaller endpoint comes first.
pub fn ordered(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = ordered(u, v);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            adj,
            edge_count: seen.len(),
        })
    }

    /// Like [`Graph::from_edges`] but silently collapses repeated edges.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let set: BTreeSet<Edge> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        Self::from_edges(n, set)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile, GraphError> {
        DegreeProfile::of(self)
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
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
        best
    }

    /// Largest eccentricity, `None` if disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        let mut diam = 0;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        diam = diam.max(dist[w]);
                        queue.push_back(w);
                    }
                }
            }
        }
        Some(diam)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_sequence: Vec<usize>,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Result<Self, GraphError> {
        if g.n() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let degree_sequence: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let min_degree = *degree_sequence.iter().min().unwrap();
        let max_degree = *degree_sequence.iter().max().unwrap();
        let is_regular = min_degree == max_degree;
        Ok(Self {
            min_degree,
            max_degree,
            degree_sequence,
            is_regular,
            regular_degree: is_regular.then_some(min_degree),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn profiles() {
        let p = c4().degree_profile().unwrap();
        assert_eq!((p.min_degree, p.max_degree, p.is_regular, p.regular_degree), (2, 2, true, Some(2)));

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = star.degree_profile().unwrap();
        assert_eq!((p.min_degree, p.max_degree, p.is_regular, p.regular_degree), (1, 3, false, None));

        assert_eq!(Graph::empty(0).degree_profile(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn structure_queries() {
        let g = c4();
        assert!(g.is_bipartite());
        assert!(g.is_connected());
        assert_eq!(g.girth(), Some(4));
        assert_eq!(g.diameter(), Some(2));
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_bipartite());
        assert_eq!(tri.girth(), Some(3));
        assert_eq!(Graph::from_edges(3, [(0, 1)]).unwrap().girth(), None);
    }
}
