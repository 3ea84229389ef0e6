//! Primitive elements of the rank-2 free group F(A,B), genus-2 R-R diagrams,
//! underlying Heegaard graphs, and the classification of disjoint primitive
//! (or proper-power) curve pairs on the boundary of a genus-2 handlebody.
//!
//! ```
//! use handlebody::{classify, is_primitive, CanonicalParams, Word};
//!
//! let w: Word = "AABAABAAAB".parse().unwrap();
//! assert!(is_primitive(&w));
//!
//! let class = classify(&CanonicalParams::Fig2a { p: 5, q: 2 }).unwrap();
//! assert!(class.type_i && !class.type_ii);
//! ```

pub mod automorphism;
pub mod classifier;
pub mod error;
pub mod heegaard_graph;
pub mod oracle;
pub mod primitivity;
pub mod rr_diagram;
pub mod word;

pub use automorphism::{nielsen_generators, Automorphism};
pub use classifier::{
    classify, classify_power_pair, longitude_pair, separating_word, PairClass, PowerPairClass,
    ProductStructure,
};
pub use error::{Error, Result};
pub use heegaard_graph::{Curve, EdgeCounts, HGraph, MinimalityViolation, Vertex, Witness};
pub use oracle::{brute_is_basis, enumerate_primitives};
pub use primitivity::{cmz_form, is_basis_pair, is_primitive, is_proper_power, CmzForm};
pub use rr_diagram::{alpha_word_fig3a, build_canonical, CanonicalParams, RRDiagram, Violation};
pub use word::{cyclic_equal, CyclicWord, Generator, Letter, Syllable, Word};
