use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{CyclePath, Graph};
use crate::orientation::Orientation;

/// ν-values over the canonical fundamental cycle basis, in sorted
/// non-tree-edge order. Equal signatures on the same connected graph
/// characterize the κ-class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NuSignature {
    pub values: Vec<i64>,
    pub graph_fingerprint: String,
}

/// Comma-separated values in basis order.
impl fmt::Display for NuSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Hex digest (16 chars) of the graph's canonical edge-list text.
pub fn fingerprint(graph: &Graph) -> String {
    let digest = Sha256::digest(graph.to_string().as_bytes());
    digest[..8].iter().map(|b| format!("{:02x}", b)).collect()
}

/// Fundamental cycles of a fixed connected graph, computed once.
#[derive(Debug, Clone)]
pub struct SignatureBasis {
    cycles: Vec<CyclePath>,
    fingerprint: String,
}

impl SignatureBasis {
    pub fn new(graph: &Graph) -> Result<Self> {
        let structure = graph.spanning_structure()?;
        Ok(SignatureBasis {
            cycles: structure.cycles.into_iter().map(|(_, c)| c).collect(),
            fingerprint: fingerprint(graph),
        })
    }

    pub fn cycles(&self) -> &[CyclePath] {
        &self.cycles
    }

    pub fn signature(&self, o: &Orientation) -> Result<NuSignature> {
        if !o.is_acyclic() {
            return Err(Error::NotAcyclic);
        }
        let values = self
            .cycles
            .iter()
            .map(|c| o.nu(c.vertices()))
            .collect::<Result<Vec<_>>>()?;
        Ok(NuSignature {
            values,
            graph_fingerprint: self.fingerprint.clone(),
        })
    }
}

pub fn nu_signature(o: &Orientation) -> Result<NuSignature> {
    SignatureBasis::new(o.graph())?.signature(o)
}

pub fn same_kappa_class(o1: &Orientation, o2: &Orientation) -> Result<bool> {
    if o1.graph() != o2.graph() {
        return Err(Error::GraphMismatch);
    }
    let basis = SignatureBasis::new(o1.graph())?;
    Ok(basis.signature(o1)?.values == basis.signature(o2)?.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn orient(g: &Graph, bits: &str) -> Orientation {
        Orientation::from_bit_string(Arc::new(g.clone()), bits).unwrap()
    }

    #[test]
    fn triangle_signatures() {
        let k3 = Graph::complete(3);
        // basis cycle 2,1,3,2: (2,1) against 1->2, (1,3) along, (3,2) against 2->3
        let s = nu_signature(&orient(&k3, "000")).unwrap();
        assert_eq!(s.values, vec![-1]);
        assert_eq!(s.to_string(), "-1");
        assert_eq!(nu_signature(&orient(&k3, "111")).unwrap().values, vec![1]);
    }

    #[test]
    fn tree_signature_is_empty() {
        let s = nu_signature(&orient(&Graph::path(4), "010")).unwrap();
        assert!(s.values.is_empty());
        assert_eq!(s.to_string(), "");
    }

    #[test]
    fn signature_errors() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(nu_signature(&orient(&g, "0")), Err(Error::Disconnected));
        assert_eq!(
            nu_signature(&orient(&Graph::complete(3), "010")),
            Err(Error::NotAcyclic)
        );
    }

    #[test]
    fn same_class_examples() {
        let k3 = Graph::complete(3);
        let a = orient(&k3, "000");
        assert!(same_kappa_class(&a, &orient(&k3, "110")).unwrap());
        assert!(!same_kappa_class(&a, &orient(&k3, "111")).unwrap());
        assert!(same_kappa_class(&a, &a).unwrap());
        assert_eq!(
            same_kappa_class(&a, &orient(&Graph::path(3), "00")),
            Err(Error::GraphMismatch)
        );
    }

    #[test]
    fn fingerprint_depends_on_edges() {
        assert_eq!(fingerprint(&Graph::complete(3)).len(), 16);
        assert_ne!(fingerprint(&Graph::complete(3)), fingerprint(&Graph::path(3)));
        assert_eq!(fingerprint(&Graph::cycle(3)), fingerprint(&Graph::complete(3)));
    }
}
