//! Fixed-parameter tools for editing a graph into a disjoint union of cliques
//! and complete ℓ-partite components.

pub mod error;
pub mod gadgets;
pub mod graph;
pub mod kernel;
pub mod md;
pub mod recognition;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{parse_edit_set, parse_graph, Edit, EditSet, Graph, Sign};
pub use recognition::{find_forbidden, is_l_cluster_graph, ComponentClass, Witness, WitnessKind};
