//! Simple undirected labeled graphs and their structural classification.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(min, max)` in insertion order; the
/// adjacency lists are kept sorted. Values are immutable once built, every
/// edit returns a fresh graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Self-loops, duplicate edges and
    /// out-of-range endpoints are each rejected with their own error.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::EndpointOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
            normalized.push((u, v));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Returns a copy with `remove` deleted and `add` inserted.
    pub fn edit(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let norm = |&(a, b): &(usize, usize)| if a < b { (a, b) } else { (b, a) };
        let removed: Vec<_> = remove.iter().map(norm).collect();
        for &(u, v) in &removed {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        edges.extend(add.iter().map(norm));
        Graph::new(self.n, &edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        self.distances_avoiding(source, None)
    }

    /// BFS distances from `source` ignoring the single edge `skip`.
    pub fn distances_avoiding(
        &self,
        source: usize,
        skip: Option<(usize, usize)>,
    ) -> Vec<Option<usize>> {
        let blocked = |a: usize, b: usize| match skip {
            Some((x, y)) => (a == x && b == y) || (a == y && b == x),
            None => false,
        };
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() && !blocked(x, y) {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// True when removing `uv` disconnects `u` from `v`.
    pub fn is_cut_edge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && self.distances_avoiding(u, Some((u, v)))[v].is_none()
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Vertices of the 2-core, in cycle order when the graph is unicyclic:
    /// starts at the smallest label and steps to its smaller core neighbour.
    fn cycle_order(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let Some(start) = (0..self.n).find(|&v| !removed[v]) else {
            return Vec::new();
        };
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| !removed[w] && w != prev);
            let Some(next) = next else { break };
            if next == start {
                break;
            }
            prev = cur;
            cur = next;
            order.push(cur);
        }
        order
    }
}

/// Structural summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub girth: Option<usize>,
    /// The unique cycle in traversal order; empty unless unicyclic.
    pub cycle_vertices: Vec<usize>,
    pub leaf_count: usize,
}

pub fn classify(g: &Graph) -> StructuralReport {
    let connected = g.is_connected();
    let is_tree = connected && g.size() + 1 == g.order();
    let is_unicyclic = connected && g.size() == g.order();
    let cycle_vertices = if is_unicyclic {
        g.cycle_order()
    } else {
        Vec::new()
    };
    let girth = if is_unicyclic {
        Some(cycle_vertices.len())
    } else {
        g.girth()
    };
    StructuralReport {
        order: g.order(),
        size: g.size(),
        connected,
        is_tree,
        is_unicyclic,
        girth,
        cycle_vertices,
        leaf_count: g.leaves().len(),
    }
}

/// A pendant path hanging off some vertex: `first` is the neighbour of the
/// attachment vertex, `leaf` its far end, `vertices` the path without the
/// attachment vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantPath {
    pub first: usize,
    pub leaf: usize,
    pub vertices: Vec<usize>,
}

impl PendantPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl Graph {
    /// Follows the edge `at -> first` through degree-2 vertices; returns the
    /// path if it ends in a leaf.
    pub fn pendant_path(&self, at: usize, first: usize) -> Option<PendantPath> {
        if !self.has_edge(at, first) {
            return None;
        }
        let mut vertices = vec![first];
        let mut prev = at;
        let mut cur = first;
        while self.degree(cur) == 2 {
            let next = if self.adj[cur][0] == prev {
                self.adj[cur][1]
            } else {
                self.adj[cur][0]
            };
            if next == at {
                return None;
            }
            prev = cur;
            cur = next;
            vertices.push(cur);
        }
        (self.degree(cur) == 1).then_some(PendantPath {
            first,
            leaf: cur,
            vertices,
        })
    }

    /// All pendant paths attached at `v`, in neighbour order.
    pub fn pendant_paths(&self, v: usize) -> Vec<PendantPath> {
        self.adj[v]
            .iter()
            .filter_map(|&x| self.pendant_path(v, x))
            .collect()
    }
}
