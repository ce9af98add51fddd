//! Orientations of simple graphs and source-to-sink moves ("clicks").
//!
//! An orientation stores one flag per edge of the sorted edge list:
//! `false` means low label → high label, `true` means high → low. The text
//! form is the corresponding string over `{0,1}`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeKind, EdgeRef, Graph, Relabeling};
use crate::scalar::Count;

/// Default limit on the number of edges for brute-force enumeration.
pub const DEFAULT_EDGE_CAP: usize = 30;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Arc<Graph>,
    reversed: Vec<bool>,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({:?}, {})", self.graph, self)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.reversed {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Orientation {
    pub fn new(graph: Arc<Graph>, reversed: Vec<bool>) -> Result<Self> {
        if !graph.is_simple() {
            return Err(Error::NotSimple);
        }
        if reversed.len() != graph.edge_slots() {
            return Err(Error::LengthMismatch {
                expected: graph.edge_slots(),
                found: reversed.len(),
            });
        }
        Ok(Orientation { graph, reversed })
    }

    /// Every edge directed low → high.
    pub fn ascending(graph: Arc<Graph>) -> Result<Self> {
        let m = graph.edge_slots();
        Self::new(graph, vec![false; m])
    }

    pub fn from_bit_string(graph: Arc<Graph>, bits: &str) -> Result<Self> {
        let reversed = bits
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidBits(bits.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, reversed)
    }

    /// `O^π`: edge `{i, j}` points from whichever endpoint comes first in `pi`.
    pub fn from_permutation(graph: Arc<Graph>, pi: &[usize]) -> Result<Self> {
        let position = permutation_positions(graph.n(), pi)?;
        let reversed = graph.edges().iter().map(|e| position[e.v] < position[e.u]).collect();
        Self::new(graph, reversed)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn bits(&self) -> &[bool] {
        &self.reversed
    }

    /// `(tail, head)` of edge `i`.
    pub fn direction(&self, i: usize) -> (usize, usize) {
        let e = self.graph.edges()[i];
        if self.reversed[i] {
            (e.v, e.u)
        } else {
            (e.u, e.v)
        }
    }

    pub fn with_edge_reversed(&self, e: EdgeRef) -> Result<Self> {
        self.graph.edge(e)?;
        let mut out = self.clone();
        out.reversed[e.0] = !out.reversed[e.0];
        Ok(out)
    }

    /// Smallest-label-source topological order, or `None` if cyclic.
    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.graph.n();
        let mut indegree = vec![0usize; n + 1];
        for i in 0..self.reversed.len() {
            indegree[self.direction(i).1] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> = (1..=n).filter(|&x| indegree[x] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(x)) = ready.pop() {
            order.push(x);
            for &(y, ei) in self.graph.neighbors(x) {
                if self.direction(ei).0 == x {
                    indegree[y] -= 1;
                    if indegree[y] == 0 {
                        ready.push(Reverse(y));
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Deterministic linear extension: repeatedly remove the smallest-label
    /// current source.
    pub fn linear_extension(&self) -> Result<Vec<usize>> {
        self.topological_order().ok_or(Error::NotAcyclic)
    }

    /// Linear extension that starts with the source `first` and otherwise
    /// follows the smallest-label rule.
    pub fn linear_extension_starting_with(&self, first: usize) -> Result<Vec<usize>> {
        if !self.is_source(first)? {
            return Err(Error::NotASource { vertex: first });
        }
        // after the click `first` is a sink, so it has no influence on the
        // order of the remaining vertices
        let rest = self.click(first)?.linear_extension()?;
        let mut order = vec![first];
        order.extend(rest.into_iter().filter(|&x| x != first));
        Ok(order)
    }

    pub fn is_source(&self, x: usize) -> Result<bool> {
        self.graph.check_vertex(x)?;
        Ok(self.graph.neighbors(x).iter().all(|&(_, ei)| self.direction(ei).0 == x))
    }

    pub fn is_sink(&self, x: usize) -> Result<bool> {
        self.graph.check_vertex(x)?;
        Ok(self.graph.neighbors(x).iter().all(|&(_, ei)| self.direction(ei).1 == x))
    }

    /// Vertices with in-degree zero; isolated vertices included.
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.graph.n())
            .filter(|&x| self.is_source(x).unwrap_or(false))
            .collect()
    }

    /// Vertices with out-degree zero; isolated vertices included.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.graph.n())
            .filter(|&x| self.is_sink(x).unwrap_or(false))
            .collect()
    }

    /// Converts the source `x` into a sink.
    pub fn click(&self, x: usize) -> Result<Self> {
        if !self.is_source(x)? {
            return Err(Error::NotASource { vertex: x });
        }
        let mut out = self.clone();
        for &(_, ei) in self.graph.neighbors(x) {
            out.reversed[ei] = !out.reversed[ei];
        }
        Ok(out)
    }

    /// Left-to-right composition of clicks.
    pub fn apply_clicks(&self, clicks: &ClickSequence) -> Result<Self> {
        let mut current = self.clone();
        for (index, &x) in clicks.iter().enumerate() {
            current = current.click(x).map_err(|err| match err {
                Error::NotASource { vertex } => Error::IllegalClick { index, vertex },
                other => other,
            })?;
        }
        Ok(current)
    }

    /// κ-equivalent orientation in which `x` is a source, with the clicks
    /// that produce it: rotate the deterministic linear extension to start
    /// at `x` and click the skipped prefix.
    pub fn rotate_to_source(&self, x: usize) -> Result<(Self, ClickSequence)> {
        self.graph.check_vertex(x)?;
        let order = self.linear_extension()?;
        let pos = order.iter().position(|&y| y == x).expect("permutation");
        let prefix = ClickSequence(order[..pos].to_vec());
        let rotated = self.apply_clicks(&prefix)?;
        Ok((rotated, prefix))
    }

    /// Forward-minus-backward edge count along a walk.
    pub fn nu(&self, walk: &[usize]) -> Result<i64> {
        let mut total = 0;
        for pair in walk.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let ei = self.graph.edge_index(a, b).ok_or(Error::NotAnEdge { u: a, v: b })?;
            total += if self.direction(ei).0 == a { 1 } else { -1 };
        }
        Ok(total)
    }

    /// Vertices reachable from `x` along directed edges (including `x`).
    pub fn reachable_from(&self, x: usize) -> Vec<bool> {
        self.reach(x, true)
    }

    /// Vertices from which `x` is reachable (including `x`).
    pub fn reaching(&self, x: usize) -> Vec<bool> {
        self.reach(x, false)
    }

    fn reach(&self, x: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.graph.n() + 1];
        seen[x] = true;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &(z, ei) in self.graph.neighbors(y) {
                let (tail, _) = self.direction(ei);
                let outgoing = tail == y;
                if outgoing == forward && !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
        seen
    }

    /// Restriction to the graph with `e` deleted.
    pub fn restrict_delete(&self, e: EdgeRef) -> Result<Self> {
        let deleted = Arc::new(self.graph.delete_edge(e)?);
        let reversed = self
            .reversed
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e.0)
            .map(|(_, &b)| b)
            .collect();
        Self::new(deleted, reversed)
    }

    /// Induced orientation on a (simplified) contraction of this graph.
    /// Edges that become loops are dropped; parallel images must agree.
    pub fn transport(&self, target: Arc<Graph>, relabel: &Relabeling) -> Result<Self> {
        let mut assigned: Vec<Option<bool>> = vec![None; target.edge_slots()];
        for i in 0..self.reversed.len() {
            let (tail, head) = self.direction(i);
            let (t, h) = (relabel.apply(tail), relabel.apply(head));
            if t == h {
                continue;
            }
            let j = target.edge_index(t, h).ok_or(Error::NotAnEdge { u: t, v: h })?;
            let bit = t > h;
            match assigned[j] {
                Some(prev) if prev != bit => return Err(Error::InconsistentContraction),
                _ => assigned[j] = Some(bit),
            }
        }
        let reversed = assigned
            .into_iter()
            .map(|b| b.ok_or(Error::InconsistentContraction))
            .collect::<Result<Vec<_>>>()?;
        Self::new(target, reversed)
    }
}

fn permutation_positions(n: usize, pi: &[usize]) -> Result<Vec<usize>> {
    if pi.len() != n {
        return Err(Error::NotAPermutation { n });
    }
    let mut position = vec![usize::MAX; n + 1];
    for (i, &x) in pi.iter().enumerate() {
        if x == 0 || x > n || position[x] != usize::MAX {
            return Err(Error::NotAPermutation { n });
        }
        position[x] = i;
    }
    Ok(position)
}

/// Finite sequence of vertices to click in order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClickSequence(pub Vec<usize>);

impl ClickSequence {
    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for ClickSequence {
    fn from(v: Vec<usize>) -> Self {
        ClickSequence(v)
    }
}

impl fmt::Display for ClickSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

impl FromStr for ClickSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: 0,
                    reason: format!("bad vertex {:?}", t),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(ClickSequence)
    }
}

/// Every acyclic orientation of `graph`, in ascending bit-pattern order
/// (edge 0 is the most significant position).
pub fn enumerate_acyclic(graph: &Arc<Graph>, cap: usize) -> Result<AcyclicOrientations> {
    if !graph.is_simple() {
        return Err(Error::NotSimple);
    }
    let m = graph.edge_slots();
    if m > cap || m >= 64 {
        return Err(Error::CapExceeded { edges: m, cap });
    }
    Ok(AcyclicOrientations {
        graph: Arc::clone(graph),
        next: 0,
        end: 1u64 << m,
    })
}

pub struct AcyclicOrientations {
    graph: Arc<Graph>,
    next: u64,
    end: u64,
}

impl Iterator for AcyclicOrientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        let m = self.graph.edge_slots();
        while self.next < self.end {
            let pattern = self.next;
            self.next += 1;
            let reversed = (0..m).map(|i| (pattern >> (m - 1 - i)) & 1 == 1).collect();
            let o = Orientation {
                graph: Arc::clone(&self.graph),
                reversed,
            };
            if o.is_acyclic() {
                return Some(o);
            }
        }
        None
    }
}

/// α(Γ) by memoized deletion-contraction on the simplified graph.
pub fn count_acyclic(graph: &Graph) -> Result<u64> {
    count_acyclic_as(graph)
}

pub fn count_acyclic_as<C: Count>(graph: &Graph) -> Result<C> {
    let mut memo = HashMap::new();
    alpha(&graph.simplified(), &mut memo)
}

fn alpha<C: Count>(g: &Graph, memo: &mut HashMap<Graph, C>) -> Result<C> {
    if g.edge_slots() == 0 {
        return Ok(C::one());
    }
    if let Some(hit) = memo.get(g) {
        return Ok(hit.clone());
    }
    let kinds = g.classify_edges();
    let bridges = kinds.iter().filter(|&&k| k == EdgeKind::Bridge).count();
    let value = if bridges > 0 {
        let rest = g.retain_edges(|e| kinds[e.0] == EdgeKind::CycleEdge);
        C::two().try_pow(bridges)?.try_mul(&alpha(&rest, memo)?)?
    } else {
        let e = EdgeRef(0);
        let deleted = g.delete_edge(e)?;
        let (contracted, _) = g.contract_edge(e, Contraction::Simplify)?;
        alpha(&deleted, memo)?.try_add(&alpha(&contracted, memo)?)?
    };
    memo.insert(g.clone(), value.clone());
    Ok(value)
}

/// Image of an acyclic orientation under the deletion/contraction
/// bijection for a fixed edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Beta {
    Deleted(Orientation),
    Contracted(Orientation),
}

/// For `e = {v, w}` with `v < w`: if reversing `e` creates a cycle, or `e`
/// points `v -> w`, restrict to the deleted graph; otherwise transport to
/// the simplified contraction.
pub fn beta(o: &Orientation, e: EdgeRef) -> Result<Beta> {
    if !o.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    o.graph.edge(e)?;
    let flipped_acyclic = o.with_edge_reversed(e)?.is_acyclic();
    if !flipped_acyclic || !o.reversed[e.0] {
        Ok(Beta::Deleted(o.restrict_delete(e)?))
    } else {
        let (contracted, relabel) = o.graph.contract_edge(e, Contraction::Simplify)?;
        Ok(Beta::Contracted(o.transport(Arc::new(contracted), &relabel)?))
    }
}
