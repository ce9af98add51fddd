//! The bijection between κ-classes of Γ and the disjoint union of the
//! κ-classes of Γ with a cycle-edge deleted and contracted.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeKind, EdgeRef, Graph};
use crate::kappa::interval::interval;
use crate::kappa::{class_members, KappaClass};
use crate::orientation::{ClickSequence, Orientation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaImage {
    /// A class of Γ with the edge deleted.
    Deleted(KappaClass),
    /// A class of Γ with the edge contracted (simplified).
    Contracted(KappaClass),
}

impl ThetaImage {
    pub fn class(&self) -> &KappaClass {
        match self {
            ThetaImage::Deleted(c) | ThetaImage::Contracted(c) => c,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ThetaImage::Deleted(_) => "deleted",
            ThetaImage::Contracted(_) => "contracted",
        }
    }
}

fn check_cycle_edge(graph: &Graph, e: EdgeRef) -> Result<(usize, usize)> {
    let edge = graph.edge(e)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if graph.classify_edges()[e.0] == EdgeKind::Bridge {
        return Err(Error::Bridge { u: edge.u, v: edge.v });
    }
    Ok((edge.u, edge.v))
}

/// Θ on the class of `o`, for the cycle-edge `e = {v, w}` (`v < w`).
///
/// If the class interval is just `{v, w}`, a member whose linear extension
/// starts `v w ...` is contracted along `e`; otherwise a member with
/// `v -> w` is restricted to the deleted graph.
pub fn theta(o: &Orientation, e: EdgeRef) -> Result<ThetaImage> {
    let graph = o.graph();
    let (v, w) = check_cycle_edge(graph, e)?;
    let (rotated, _) = o.rotate_to_source(v)?;
    let i = interval(&rotated, e)?;
    if i.vertices() == [v, w] {
        let front = bring_w_after_v(&rotated, v, w)?;
        debug_assert!(front.click(v)?.is_source(w)?);
        let (contracted, relabel) = graph.contract_edge(e, Contraction::Simplify)?;
        let image = front.transport(Arc::new(contracted), &relabel)?;
        Ok(ThetaImage::Contracted(KappaClass::containing(&image)?))
    } else {
        let image = rotated.restrict_delete(e)?;
        Ok(ThetaImage::Deleted(KappaClass::containing(&image)?))
    }
}

/// With `v` a source and interval `{v, w}`, the ancestors of `w` other
/// than `v` form a down-set that `v` does not reach; clicking them yields a
/// member with linear extension `v w ...`.
fn bring_w_after_v(rotated: &Orientation, v: usize, w: usize) -> Result<Orientation> {
    let ancestors = rotated.reaching(w);
    let prefix: Vec<usize> = rotated
        .linear_extension()?
        .into_iter()
        .filter(|&x| x != v && x != w && ancestors[x])
        .collect();
    rotated.apply_clicks(&ClickSequence(prefix))
}

/// Unique Θ-preimage of a class over the deleted or contracted graph.
pub fn theta_inverse(graph: &Arc<Graph>, e: EdgeRef, target: &ThetaImage) -> Result<KappaClass> {
    let (v, w) = check_cycle_edge(graph, e)?;
    match target {
        ThetaImage::Contracted(class) => {
            let (contracted, relabel) = graph.contract_edge(e, Contraction::Simplify)?;
            if **class.representative.graph() != contracted {
                return Err(Error::GraphMismatch);
            }
            let merged = relabel.apply(v);
            let (rotated, _) = class.representative.rotate_to_source(merged)?;
            let order = rotated.linear_extension_starting_with(merged)?;
            let mut lifted = vec![v, w];
            for &y in &order[1..] {
                lifted.extend(relabel.preimage(y));
            }
            let o = Orientation::from_permutation(Arc::clone(graph), &lifted)?;
            KappaClass::containing(&o)
        }
        ThetaImage::Deleted(class) => {
            let deleted = graph.delete_edge(e)?;
            if **class.representative.graph() != deleted {
                return Err(Error::GraphMismatch);
            }
            let members = if class.members.is_empty() {
                class_members(&class.representative)?
            } else {
                class.members.clone()
            };
            if let Some(m) = members.iter().find(|m| m.reachable_from(v)[w]) {
                return KappaClass::containing(&add_edge(graph, m, e, false)?);
            }
            let path = simple_path(&deleted, v, w).ok_or(Error::Bridge { u: v, v: w })?;
            let mut best: Option<(i64, &Orientation)> = None;
            for m in &members {
                let score = m.nu(&path)?;
                if best.is_none_or(|(s, _)| score > s) {
                    best = Some((score, m));
                }
            }
            let (_, m) = best.expect("class is nonempty");
            KappaClass::containing(&add_edge(graph, m, e, true)?)
        }
    }
}

/// Orientation of `graph` agreeing with `o` (over `graph` minus `e`), with
/// `e` set to `reversed`.
fn add_edge(graph: &Arc<Graph>, o: &Orientation, e: EdgeRef, reversed: bool) -> Result<Orientation> {
    let mut bits = o.bits().to_vec();
    bits.insert(e.0, reversed);
    Orientation::new(Arc::clone(graph), bits)
}

/// Shortest `a`–`b` path, ties broken by ascending neighbor labels.
fn simple_path(graph: &Graph, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut parent = vec![0usize; graph.n() + 1];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut y = b;
            while y != a {
                y = parent[y];
                path.push(y);
            }
            path.reverse();
            return Some(path);
        }
        for &(y, _) in graph.neighbors(x) {
            if parent[y] == 0 {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
