//! κ-equivalence: orientations related by sequences of clicks.

mod interval;
mod normalize;
mod signature;
mod theta;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeKind, EdgeRef, Graph};
use crate::orientation::{enumerate_acyclic, Orientation};
use crate::scalar::Count;

pub use interval::{contract_interval, interval, interval_of_class, Interval};
pub use normalize::{normalize_click_sequence, NormalizedClicks, VertexRegion};
pub use signature::{nu_signature, same_kappa_class, NuSignature, SignatureBasis};
pub use theta::{theta, theta_inverse, ThetaImage};

/// A κ-class with its full membership. The representative is the member
/// with the lexicographically smallest bit pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaClass {
    pub representative: Orientation,
    pub signature: NuSignature,
    pub members: Vec<Orientation>,
}

impl KappaClass {
    /// The class of `o`, found by exploring every legal click.
    pub fn containing(o: &Orientation) -> Result<Self> {
        let basis = SignatureBasis::new(o.graph())?;
        Self::containing_with(o, &basis)
    }

    fn containing_with(o: &Orientation, basis: &SignatureBasis) -> Result<Self> {
        let members = class_members(o)?;
        let representative = members[0].clone();
        let signature = basis.signature(&representative)?;
        Ok(KappaClass {
            representative,
            signature,
            members,
        })
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, o: &Orientation) -> bool {
        self.members.binary_search_by(|m| m.bits().cmp(o.bits())).is_ok() && self.representative.graph() == o.graph()
    }
}

/// Every orientation click-reachable from `o`, sorted by bit pattern.
pub fn class_members(o: &Orientation) -> Result<Vec<Orientation>> {
    if !o.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let mut seen: HashSet<Orientation> = HashSet::from([o.clone()]);
    let mut queue = VecDeque::from([o.clone()]);
    while let Some(current) = queue.pop_front() {
        for x in current.sources() {
            let next = current.click(x)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<Orientation> = seen.into_iter().collect();
    members.sort_by(|a, b| a.bits().cmp(b.bits()));
    Ok(members)
}

/// Partition of all acyclic orientations into connected components of the
/// click graph, ordered by representative.
pub fn kappa_classes_bfs(graph: &Arc<Graph>, cap: usize) -> Result<Vec<KappaClass>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let basis = SignatureBasis::new(graph)?;
    let all: Vec<Orientation> = enumerate_acyclic(graph, cap)?.collect();
    let index: HashMap<&[bool], usize> = all.iter().enumerate().map(|(i, o)| (o.bits(), i)).collect();
    let mut class_of = vec![usize::MAX; all.len()];
    let mut classes = Vec::new();
    for start in 0..all.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for x in all[i].sources() {
                let j = index[all[i].click(x)?.bits()];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let members: Vec<Orientation> = members.into_iter().map(|i| all[i].clone()).collect();
        let representative = members[0].clone();
        classes.push(KappaClass {
            signature: basis.signature(&representative)?,
            representative,
            members,
        });
    }
    Ok(classes)
}

/// κ(Γ) by memoized deletion-contraction on the simplified graph. Bridges
/// never change κ, so they are dropped before recursing on the first
/// cycle-edge.
pub fn kappa_count(graph: &Graph) -> Result<u64> {
    kappa_count_as(graph)
}

pub fn kappa_count_as<C: Count>(graph: &Graph) -> Result<C> {
    let mut memo = HashMap::new();
    kappa(&graph.simplified(), &mut memo)
}

fn kappa<C: Count>(g: &Graph, memo: &mut HashMap<Graph, C>) -> Result<C> {
    if let Some(hit) = memo.get(g) {
        return Ok(hit.clone());
    }
    let kinds = g.classify_edges();
    let value = if kinds.iter().all(|&k| k == EdgeKind::Bridge) {
        C::one()
    } else if kinds.contains(&EdgeKind::Bridge) {
        let core = g.retain_edges(|e| kinds[e.0] == EdgeKind::CycleEdge);
        kappa(&core, memo)?
    } else {
        let e = EdgeRef(0);
        let deleted = g.delete_edge(e)?;
        let (contracted, _) = g.contract_edge(e, Contraction::Simplify)?;
        kappa(&deleted, memo)?.try_add(&kappa(&contracted, memo)?)?
    };
    memo.insert(g.clone(), value.clone());
    Ok(value)
}
