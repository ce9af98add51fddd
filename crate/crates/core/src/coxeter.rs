//! Coxeter elements of simply-laced Coxeter systems.
//!
//! The Coxeter graph is an ordinary simple graph: adjacent generators have
//! bond strength 3, non-adjacent ones commute. A Coxeter element is a word
//! using every generator once; it corresponds to the acyclic orientation in
//! which each edge points from the generator that appears first.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kappa::{NuSignature, SignatureBasis};
use crate::orientation::Orientation;

/// The product `s_{order[0]} s_{order[1]} ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterWord {
    order: Vec<usize>,
}

impl CoxeterWord {
    /// Requires a permutation of `1..=order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n + 1];
        for &s in &order {
            if s == 0 || s > n {
                return Err(Error::InvalidWord(format!("generator {} out of range 1..={}", s, n)));
            }
            if std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidWord(format!("generator {} repeated", s)));
            }
        }
        Ok(CoxeterWord { order })
    }

    pub fn identity(n: usize) -> Self {
        CoxeterWord {
            order: (1..=n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

impl fmt::Display for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// Space- or comma-separated generator indices, e.g. `"2 3 1"`.
impl FromStr for CoxeterWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let order = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidWord(format!("bad generator {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        CoxeterWord::new(order)
    }
}

fn check_size(graph: &Graph, w: &CoxeterWord) -> Result<()> {
    if w.len() != graph.n() {
        return Err(Error::InvalidWord(format!(
            "word has {} generators, graph has {} vertices",
            w.len(),
            graph.n()
        )));
    }
    Ok(())
}

pub fn word_to_orientation(graph: &Arc<Graph>, w: &CoxeterWord) -> Result<Orientation> {
    check_size(graph, w)?;
    Orientation::from_permutation(graph.clone(), &w.order)
}

/// Equal up to swapping adjacent commuting generators.
pub fn commutation_equivalent(graph: &Arc<Graph>, w1: &CoxeterWord, w2: &CoxeterWord) -> Result<bool> {
    Ok(word_to_orientation(graph, w1)? == word_to_orientation(graph, w2)?)
}

/// Conjugation by the first generator: the word rotated left by one.
pub fn cyclic_shift(w: &CoxeterWord) -> CoxeterWord {
    let mut order = w.order.clone();
    if !order.is_empty() {
        order.rotate_left(1);
    }
    CoxeterWord { order }
}

/// Verdict of [`conjugate_elements`] with the two signatures as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugacy {
    pub conjugate: bool,
    pub signatures: (NuSignature, NuSignature),
}

/// Decides conjugacy by comparing ν-signatures of the induced
/// orientations; no group arithmetic is performed. The graph must be
/// connected.
pub fn conjugate_elements(graph: &Arc<Graph>, w1: &CoxeterWord, w2: &CoxeterWord) -> Result<Conjugacy> {
    let o1 = word_to_orientation(graph, w1)?;
    let o2 = word_to_orientation(graph, w2)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let basis = SignatureBasis::new(graph)?;
    let (s1, s2) = (basis.signature(&o1)?, basis.signature(&o2)?);
    Ok(Conjugacy {
        conjugate: s1 == s2,
        signatures: (s1, s2),
    })
}
