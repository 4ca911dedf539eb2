//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Transformations (contraction, induced
//! subgraphs, vertex splitting) return a fresh graph together with the vertex
//! map that relates old and new ids.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex {v} is an endpoint of more than one edge, so the edges are not a matching")]
    NotAMatching { v: usize },
    #[error("edge ({u}, {v}) lies in a triangle with {w}")]
    EdgeInTriangle { u: usize, v: usize, w: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
}

/// A set of vertices backed by a fixed-size bit set.
///
/// The capacity is only a storage hint; a set is interpreted against a graph
/// and every member must be a vertex of that graph.
#[derive(Clone, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_iter_with_capacity(capacity: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = VertexSet::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Inserts `v`, growing the storage when needed. Returns whether `v` was newly added.
    pub fn insert(&mut self, v: usize) -> bool {
        if v >= self.bits.len() {
            self.bits.grow(v + 1);
        }
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v < self.bits.len() && self.bits[v] {
            self.bits.set(v, false);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits[v]
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        self.iter().last().map_or(0, |v| v + 1)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.grow(other.bits.len());
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    /// `{0..n} - self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Images of the members under `map`.
    pub fn map(&self, map: impl Fn(usize) -> usize) -> VertexSet {
        let mut out = VertexSet::default();
        for v in self.iter() {
            out.insert(map(v));
        }
        out
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.iter().eq(other.iter())
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for v in self.iter() {
            v.hash(state);
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_iter_with_capacity(0, iter)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vertices: [usize; N]) -> Self {
        vertices.into_iter().collect()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        Ok(ids.into_iter().collect())
    }
}

/// A simple undirected graph with sorted adjacency lists and optional vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// are collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
            labels: BTreeMap::new(),
        })
    }

    /// Attaches display labels. Labels for ids outside the graph are dropped.
    pub fn with_labels(mut self, labels: impl IntoIterator<Item = (usize, String)>) -> Self {
        let n = self.n();
        self.labels = labels.into_iter().filter(|(v, _)| *v < n).collect();
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Label of `v` if present, otherwise its numeric id.
    pub fn display_name(&self, v: usize) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    /// Vertex carrying the given label.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().find(|(_, l)| l.as_str() == name).map(|(&v, _)| v)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.vertices().find(|&v| self.degree(v) == 0)
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n(), self.adjacency[v].iter().copied())
    }

    /// `N[v] = N(v) + v`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.open_neighborhood(v);
        set.insert(v);
        set
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut component = VertexSet::new(n);
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                component.insert(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Contracts the edges of a matching. Every merged pair becomes one vertex;
    /// the new ids follow the order of the smallest old id in each class.
    ///
    /// Returns the contracted graph and the total, surjective map old id to new id.
    pub fn contract_edges(&self, matching: &[(usize, usize)]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        let mut partner: Vec<Option<usize>> = vec![None; n];
        for &(u, v) in matching {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if !self.has_edge(u, v) {
                return Err(GraphError::NotAnEdge { u, v });
            }
            for x in [u, v] {
                if partner[x].is_some() {
                    return Err(GraphError::NotAMatching { v: x });
                }
            }
            if let Some(w) = self.common_neighbor(u, v) {
                return Err(GraphError::EdgeInTriangle { u, v, w });
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
        }

        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if map[v] != usize::MAX {
                continue;
            }
            map[v] = next;
            if let Some(p) = partner[v] {
                map[p] = next;
            }
            next += 1;
        }

        let edges = self.edges().map(|(u, v)| (map[u], map[v])).filter(|(a, b)| a != b);
        let mut contracted = Graph::from_edges(next, edges)?;
        if !self.labels.is_empty() {
            let mut labels = BTreeMap::new();
            for v in 0..n {
                if let Some(l) = self.labels.get(&v) {
                    labels
                        .entry(map[v])
                        .and_modify(|s: &mut String| {
                            s.push('+');
                            s.push_str(l);
                        })
                        .or_insert_with(|| l.clone());
                }
            }
            contracted.labels = labels;
        }
        Ok((contracted, map))
    }

    fn common_neighbor(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(a[i]),
            }
        }
        None
    }

    /// The subgraph induced by `subset`, with the map from new ids to old ids.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        if let Some(v) = subset.iter().find(|&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let new_to_old = subset.to_vec();
        let mut old_to_new = vec![usize::MAX; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| subset.contains(u) && subset.contains(v))
            .map(|(u, v)| (old_to_new[u], old_to_new[v]));
        let sub = Graph::from_edges(new_to_old.len(), edges)?;
        let labels = new_to_old
            .iter()
            .enumerate()
            .filter_map(|(new, old)| self.labels.get(old).map(|l| (new, l.clone())))
            .collect::<Vec<_>>();
        Ok((sub.with_labels(labels), new_to_old))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        let labels = self
            .labels
            .iter()
            .map(|(&v, l)| (v, l.clone()))
            .chain(other.labels.iter().map(|(&v, l)| (v + shift, l.clone())))
            .collect::<Vec<_>>();
        Graph::from_edges(shift + other.n(), edges)
            .expect("shifted edges stay in range")
            .with_labels(labels)
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
