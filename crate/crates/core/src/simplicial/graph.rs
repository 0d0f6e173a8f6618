use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

use super::Complex;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Loops are ignored; repeated edges are stored once.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.distances(0).iter().all(Option::is_some)
    }

    /// All-pairs BFS; `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.vertex_count() == 0 {
            return None;
        }
        let mut best = 0;
        for s in 0..self.vertex_count() {
            for d in self.distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    fn masks(&self) -> Result<Vec<Face>> {
        if self.vertex_count() > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.vertex_count()));
        }
        Ok(self.adjacency.iter().map(|nb| nb.iter().collect()).collect())
    }
}

/// Flag complex of `graph`, vertices labelled by id.
pub fn flag_complex(graph: &Graph) -> Result<Complex> {
    flag_complex_labeled(graph, (0..graph.vertex_count()).map(|v| v.to_string()).collect())
}

/// Maximal faces are the maximal cliques (Bron–Kerbosch with Tomita pivoting).
pub fn flag_complex_labeled(graph: &Graph, labels: Vec<String>) -> Result<Complex> {
    if labels.len() != graph.vertex_count() {
        return Err(Error::Schema {
            path: "vertices".into(),
            message: format!("{} labels for {} graph vertices", labels.len(), graph.vertex_count()),
        });
    }
    let adj = graph.masks()?;
    let all: Face = (0..graph.vertex_count()).collect();
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, Face::EMPTY, all, Face::EMPTY, &mut cliques);
    Complex::new(labels, cliques)
}

fn bron_kerbosch(adj: &[Face], r: Face, mut p: Face, mut x: Face, out: &mut Vec<Face>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).iter().max_by_key(|&u| (p & adj[u]).len()).unwrap();
    for v in (p - adj[pivot]).iter() {
        bron_kerbosch(adj, r.with(v), p & adj[v], x & adj[v], out);
        p = p.without(v);
        x = x.with(v);
    }
}
