//! Simple undirected graphs with 1-based vertex labels, the builders for the
//! generalized-path family and the degree-sequence combinatorics around them.

mod builders;
mod degree;
mod io;
mod layout;

use std::collections::{BTreeSet, VecDeque};

pub use builders::{
    append_vertex, build_antiregular, build_generalized_path, build_path, interconnect_antiregular,
};
pub use degree::{
    conjugate, degree_sequence, is_graphical, is_threshold, trace_of, DegreeSequence,
    GraphicalReport,
};
pub use layout::BlockLayout;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, SymmetricMatrix};

/// Labeled simple undirected graph on vertices `1..=num_vertices`.
///
/// Edges are stored as sorted pairs `(u, v)` with `u < v`, so self-loops and
/// duplicates cannot be represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Graph with `num_vertices ≥ 1` vertices and no edges.
    pub fn empty(num_vertices: usize) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Self {
            num_vertices,
            edges: BTreeSet::new(),
        })
    }

    pub fn new<I>(num_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(num_vertices)?;
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u},{v}}}")));
            }
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.num_vertices {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices,
            });
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Degree of each vertex, indexed by `label - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    /// Zero-based adjacency lists.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj
    }

    /// Neighbors of vertex `v` (1-based labels).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        bfs_distances(&self.adjacency(), 0)
            .iter()
            .all(Option::is_some)
    }
}

fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Longest shortest path, by BFS from every vertex.
pub fn diameter(g: &Graph) -> Result<usize> {
    let adj = g.adjacency();
    let mut diam = 0;
    for s in 0..adj.len() {
        for d in bfs_distances(&adj, s) {
            diam = diam.max(d.ok_or(Error::Disconnected)?);
        }
    }
    Ok(diam)
}

pub fn max_degree(g: &Graph) -> usize {
    g.degrees().into_iter().max().unwrap_or(0)
}

/// `L = D − A`.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let n = g.num_vertices();
    let mut m = DenseMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        let (i, j) = (u - 1, v - 1);
        m[(i, j)] = -1.0;
        m[(j, i)] = -1.0;
        m[(i, i)] += 1.0;
        m[(j, j)] += 1.0;
    }
    SymmetricMatrix::new(m).expect("Laplacian is symmetric by construction")
}
