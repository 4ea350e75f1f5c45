use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// A cycle read in a fixed orientation: `vertices[i + 1]` is the successor
/// of `vertices[i]`, and the first vertex follows the last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedCycle {
    vertices: Vec<usize>,
    /// position of each vertex in `vertices`, `usize::MAX` when absent
    position: [usize; MAX_ORDER],
}

impl OrientedCycle {
    /// Validates `vertices` against `g`: at least three distinct vertices,
    /// cyclically consecutive ones adjacent.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut position = [usize::MAX; MAX_ORDER];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: g.order(),
                });
            }
            if position[v] != usize::MAX {
                return Err(Error::RepeatedVertex(v));
            }
            position[v] = i;
        }
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(Error::NonEdgeJunction(a, b));
            }
        }
        Ok(OrientedCycle { vertices, position })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_ORDER && self.position[v] != usize::MAX
    }

    pub fn position(&self, v: usize) -> Result<usize> {
        if self.contains(v) {
            Ok(self.position[v])
        } else {
            Err(Error::NotOnCycle(v))
        }
    }

    /// Vertex `steps` positions after `v` along the orientation.
    pub fn step(&self, v: usize, steps: isize) -> Result<usize> {
        let k = self.len() as isize;
        let p = self.position(v)? as isize;
        Ok(self.vertices[(p + steps).rem_euclid(k) as usize])
    }

    /// `v⁺`.
    pub fn successor(&self, v: usize) -> Result<usize> {
        self.step(v, 1)
    }

    /// `v⁻`.
    pub fn predecessor(&self, v: usize) -> Result<usize> {
        self.step(v, -1)
    }

    /// Same vertices, opposite orientation, same first vertex.
    pub fn reversed(&self) -> OrientedCycle {
        let mut vertices = self.vertices.clone();
        vertices[1..].reverse();
        let mut position = [usize::MAX; MAX_ORDER];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        OrientedCycle { vertices, position }
    }

    /// Rotation starting at the smallest vertex id, oriented so that the
    /// second vertex is the smaller of its two neighbors. Two cycles with the
    /// same edge set have the same normal form.
    pub fn normalized(&self) -> OrientedCycle {
        let start = *self.vertices.iter().min().expect("non-empty");
        let p = self.position[start];
        let k = self.len();
        let mut vertices: Vec<usize> = (0..k).map(|i| self.vertices[(p + i) % k]).collect();
        if vertices[k - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        let mut position = [usize::MAX; MAX_ORDER];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        OrientedCycle { vertices, position }
    }

    /// Re-checks the cycle against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        OrientedCycle::new(g, self.vertices.clone()).map(|_| ())
    }
}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedCycle{:?}", self.vertices)
    }
}

impl fmt::Display for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
