//! Tutte polynomial by deletion-contraction on multigraphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Result;
use crate::graph::{Contraction, EdgeKind, EdgeRef, Graph};
use crate::scalar::Count;

/// Finitely supported map `(i, j) -> coefficient of x^i y^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TuttePolynomial<C> {
    coeffs: BTreeMap<(usize, usize), C>,
}

impl<C: Count> TuttePolynomial<C> {
    pub fn one() -> Self {
        TuttePolynomial {
            coeffs: BTreeMap::from([((0, 0), C::one())]),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), C)>>(terms: I) -> Result<Self> {
        let mut out = TuttePolynomial {
            coeffs: BTreeMap::new(),
        };
        for (k, c) in terms {
            out.add_term(k, &c)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, key: (usize, usize), c: &C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(key).or_insert_with(C::zero);
        *slot = slot.try_add(c)?;
        Ok(())
    }

    pub fn coefficient(&self, i: usize, j: usize) -> C {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    /// `(i, j, coefficient)` in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    fn shifted(&self, dx: usize, dy: usize) -> Self {
        TuttePolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((i + dx, j + dy), c.clone()))
                .collect(),
        }
    }

    fn try_sum(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, c)?;
        }
        Ok(out)
    }

    /// Evaluates at `(x, y)` in any wider scalar, reporting overflow.
    pub fn evaluate<S>(&self, x: &S, y: &S) -> Result<S>
    where
        S: Count + From<C>,
    {
        let mut total = S::zero();
        for (&(i, j), c) in &self.coeffs {
            let term = S::from(c.clone()).try_mul(&x.try_pow(i)?)?.try_mul(&y.try_pow(j)?)?;
            total = total.try_add(&term)?;
        }
        Ok(total)
    }
}

/// Human-readable sum, highest `(i, j)` first, e.g. `x^2 + x + y`.
impl<C: Count> fmt::Display for TuttePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.coeffs.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let constant = i == 0 && j == 0;
            if !c.is_one() || constant {
                write!(f, "{}", c)?;
            }
            for (var, exp) in [("x", i), ("y", j)] {
                match exp {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{}^{}", var, exp)?,
                }
            }
        }
        Ok(())
    }
}

/// Tutte polynomial with `u64` coefficients.
pub fn tutte(graph: &Graph) -> Result<TuttePolynomial<u64>> {
    tutte_as(graph)
}

/// Loops contribute `y`, bridges `x`, and any other edge (first in sorted
/// order) splits into deletion plus faithful contraction.
pub fn tutte_as<C: Count>(graph: &Graph) -> Result<TuttePolynomial<C>> {
    let mut memo = HashMap::new();
    expand(graph, &mut memo)
}

fn expand<C: Count>(g: &Graph, memo: &mut HashMap<Graph, TuttePolynomial<C>>) -> Result<TuttePolynomial<C>> {
    if g.edge_slots() == 0 {
        return Ok(TuttePolynomial::one());
    }
    if let Some(hit) = memo.get(g) {
        return Ok(hit.clone());
    }
    let loops: usize = (0..g.edge_slots())
        .filter(|&i| g.edges()[i].is_loop())
        .map(|i| g.multiplicity(EdgeRef(i)) as usize)
        .sum();
    let value = if loops > 0 {
        let rest = g.retain_edges(|e| !g.edges()[e.0].is_loop());
        expand(&rest, memo)?.shifted(0, loops)
    } else {
        let e = EdgeRef(0);
        let (contracted, _) = g.contract_edge(e, Contraction::Faithful)?;
        if g.classify_edges()[0] == EdgeKind::Bridge {
            expand(&contracted, memo)?.shifted(1, 0)
        } else {
            let deleted = g.delete_edge(e)?;
            expand(&deleted, memo)?.try_sum(&expand(&contracted, memo)?)?
        }
    };
    memo.insert(g.clone(), value.clone());
    Ok(value)
}
