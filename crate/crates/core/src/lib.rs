//! Acyclic orientations of graphs under source-to-sink moves.
//!
//! The crate covers enumeration and counting of acyclic orientations, the
//! κ-equivalence generated by clicks (converting a source into a sink), its
//! deletion/contraction bijection and complete ν-invariant, the Tutte
//! polynomial, and conjugacy of Coxeter elements in simply-laced Coxeter
//! groups.

pub mod corpus;
pub mod coxeter;
pub mod error;
pub mod graph;
pub mod kappa;
pub mod orientation;
pub mod scalar;
pub mod tutte;

pub use coxeter::{
    commutation_equivalent, conjugate_elements, cyclic_shift, word_to_orientation, Conjugacy, CoxeterWord,
};
pub use error::{Error, Result};
pub use graph::{parse_graph, Contraction, CyclePath, Edge, EdgeKind, EdgeRef, Graph, Relabeling, SpanningStructure};
pub use kappa::{
    class_members, kappa_classes_bfs, kappa_count, kappa_count_as, nu_signature, same_kappa_class, theta,
    theta_inverse, Interval, KappaClass, NuSignature, ThetaImage,
};
pub use orientation::{
    beta, count_acyclic, count_acyclic_as, enumerate_acyclic, Beta, ClickSequence, Orientation, DEFAULT_EDGE_CAP,
};
pub use scalar::Count;
pub use tutte::{tutte, tutte_as, TuttePolynomial};

/// Tutte polynomial with machine-word coefficients.
pub type Tutte = TuttePolynomial<u64>;
/// Tutte polynomial with arbitrary-precision coefficients.
pub type BigTutte = TuttePolynomial<num_bigint::BigUint>;
