//! Undirected simple graphs with optional desired edge lengths, and drawings.

use crate::geometry::Point;
use crate::{Error, Result};
use indexmap::{IndexMap, IndexSet};
use std::collections::HashMap;

/// An undirected edge between vertex indices `u < v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Desired length; `None` means the layout default.
    pub length: Option<f64>,
}

/// Simple undirected graph. Vertices keep insertion order.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    vertices: IndexSet<String>,
    edges: Vec<Edge>,
    edge_index: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex if absent and returns its index.
    pub fn add_vertex(&mut self, id: &str) -> usize {
        if let Some(i) = self.vertices.get_index_of(id) {
            return i;
        }
        self.vertices.insert(id.to_string());
        self.adjacency.push(Vec::new());
        self.vertices.len() - 1
    }

    /// Adds an edge, creating endpoints as needed.
    ///
    /// A repeated edge is merged into the first one, which keeps its length
    /// unless it had none.
    pub fn add_edge(&mut self, a: &str, b: &str, length: Option<f64>) -> Result<()> {
        if a == b {
            return Err(Error::InvalidConfig(format!("self-loop on vertex {a:?}")));
        }
        if let Some(l) = length {
            if !(l > 0.0 && l.is_finite()) {
                return Err(Error::InvalidConfig(format!("edge length must be positive, got {l}")));
            }
        }
        let (i, j) = (self.add_vertex(a), self.add_vertex(b));
        let key = (i.min(j), i.max(j));
        if let Some(&e) = self.edge_index.get(&key) {
            if self.edges[e].length.is_none() {
                self.edges[e].length = length;
            }
            return Ok(());
        }
        self.edge_index.insert(key, self.edges.len());
        self.edges.push(Edge { u: key.0, v: key.1, length });
        self.adjacency[i].push(j);
        self.adjacency[j].push(i);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.get_index_of(id)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index.contains_key(&(a.min(b), a.max(b)))
    }

    /// Desired length of the edge `a`-`b`, if the edge exists and has one.
    pub fn edge_length(&self, a: usize, b: usize) -> Option<f64> {
        self.edge_index
            .get(&(a.min(b), a.max(b)))
            .and_then(|&e| self.edges[e].length)
    }
}

/// Vertex positions keyed by vertex id.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Drawing {
    positions: IndexMap<String, Point>,
}

impl Drawing {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a drawing from positions listed in the graph's vertex order.
    pub fn from_points(g: &Graph, points: &[Point]) -> Self {
        assert_eq!(g.vertex_count(), points.len(), "one position per vertex");
        Self {
            positions: g.vertex_ids().map(str::to_string).zip(points.iter().copied()).collect(),
        }
    }

    pub fn insert(&mut self, id: &str, p: Point) {
        self.positions.insert(id.to_string(), p);
    }

    pub fn get(&self, id: &str) -> Option<Point> {
        self.positions.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Point)> {
        self.positions.iter().map(|(k, &p)| (k.as_str(), p))
    }

    /// Positions in the graph's vertex order.
    ///
    /// Fails if a vertex is missing or placed at a non-finite coordinate.
    pub fn aligned(&self, g: &Graph) -> Result<Vec<Point>> {
        g.vertex_ids()
            .map(|id| match self.get(id) {
                Some(p) if p.is_finite() => Ok(p),
                Some(_) => Err(Error::Numeric(format!("vertex {id:?} has a non-finite position"))),
                None => Err(Error::MissingVertex(id.to_string())),
            })
            .collect()
    }
}
