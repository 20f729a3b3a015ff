//! Crystal combinatorics on the level-2 Fock space: bipartitions, abaci,
//! affine and level-rank crystal operators, and the unitarity, finite
//! dimensionality and support classification of the attached type B
//! Cherednik algebra representations.

pub mod abacus;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod graph;
pub mod marked;
pub mod partition;
pub mod position;
pub mod slinf;
pub mod support;
pub mod unitarity;
pub mod verify;

pub use abacus::{Abacus, AbacusRow, Direction, EPeriod};
pub use error::{Error, ParseError, Result};
pub use fock::{c_function, ChargedBipartition, ChargedBox, FockParam};
pub use graph::{crystal_graph, CrystalEdge, CrystalGraph, CrystalKind, EdgeLabel};
pub use marked::{marked_boxes, MarkedBoxes};
pub use partition::{Bipartition, Cell, Component, Partition};
pub use slinf::{a_sigma, upsilon, Sign};
pub use position::{crystal_position, CrystalPosition};
pub use support::{support, SupportDescriptor};
pub use unitarity::{
    classify_unitary_fd, is_finite_dimensional, is_type_a_unitary, is_unitary, CaseLabel,
    UnitarityVerdict,
};
pub use verify::{run_sweep, Check, SweepSpec, VerifyReport};
