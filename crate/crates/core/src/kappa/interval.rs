use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeRef, Relabeling};
use crate::orientation::Orientation;

/// The vw-interval of an edge `{v, w}` (`v < w`): vertices on directed
/// paths from `v` to `w`, with the relations induced by the orientation.
/// Empty when the edge points `w -> v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Interval {
    vertices: Vec<usize>,
    relations: Vec<(usize, usize)>,
}

impl Interval {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Directed edges `(tail, head)` between interval vertices.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn contains(&self, x: usize) -> bool {
        self.vertices.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }
}

pub fn interval(o: &Orientation, e: EdgeRef) -> Result<Interval> {
    let edge = o.graph().edge(e)?;
    if !o.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let (v, w) = (edge.u, edge.v);
    if o.direction(e.0) != (v, w) {
        return Ok(Interval::empty());
    }
    let below_v = o.reachable_from(v);
    let above_w = o.reaching(w);
    let vertices: Vec<usize> = (1..=o.graph().n()).filter(|&x| below_v[x] && above_w[x]).collect();
    let relations = (0..o.bits().len())
        .map(|i| o.direction(i))
        .filter(|&(t, h)| below_v[t] && above_w[t] && below_v[h] && above_w[h])
        .collect();
    Ok(Interval { vertices, relations })
}

/// Interval of the κ-class of `o`: rotate `v` to a source, then take the
/// interval there. Any class member with `v -> w` gives the same vertices.
pub fn interval_of_class(o: &Orientation, e: EdgeRef) -> Result<Interval> {
    let edge = o.graph().edge(e)?;
    let (rotated, _) = o.rotate_to_source(edge.u)?;
    interval(&rotated, e)
}

/// Orientation induced on the graph with every interval vertex merged into
/// the smallest one.
pub fn contract_interval(o: &Orientation, i: &Interval) -> Result<(Orientation, Relabeling)> {
    if i.is_empty() {
        return Err(Error::EmptyInterval);
    }
    let (graph, relabel) = o.graph().contract_vertices(i.vertices(), Contraction::Simplify)?;
    let contracted = o.transport(Arc::new(graph), &relabel)?;
    Ok((contracted, relabel))
}
