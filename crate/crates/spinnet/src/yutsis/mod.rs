//! Yutsis graphs: cubic multigraphs whose edges carry spin labels.

mod analysis;
mod canon;
mod dot;
mod families;
mod graph;
mod insert;

pub use analysis::{
    all_cuts3, chord_cycles, euler_characteristic, girth, hamiltonian_cycle, nontrivial_cut3, EmbeddingData,
};
pub use canon::{canonical_form, isomorphic, isomorphic_labelled, CanonicalForm, MAX_CANON_NODES};
pub use dot::to_dot;
pub use families::{cartwheel_type1, complete_bipartite_33, petersen, prism_type2, tetrahedron};
pub use graph::{label_binding, Edge, YutsisError, YutsisGraph};
pub use insert::{insert_bowtie, insert_square, BowtieLabels, SquareLabels};
