//! Exact combinatorics of invariant subspaces of nilpotent linear operators.
//!
//! The crate has two halves that check each other:
//!
//! * a combinatorial side: partitions, Littlewood-Richardson tableaux given as
//!   chains of partitions, partial maps on tableaux with the empty box
//!   property, height sequences and poles, box moves and the boundary poset;
//! * an operator side: explicit nilpotent operators over a small prime field,
//!   with invariant subspaces given by generator vectors. Tableaux are
//!   recomputed from ranks, so every combinatorial claim can be replayed on
//!   concrete matrices.
//!
//! Young diagrams are drawn with one *column* per part: the diagram of
//! `(5,2)` has a column of height 5 and a column of height 2, matching the
//! picture of a module as a pile of Jordan blocks. Rows count height levels
//! from the top, columns count blocks from the left.

#![forbid(unsafe_code)]

pub mod engine;
pub mod partition;
pub mod pmap;
pub mod pole;
pub mod poset;
pub mod tableau;
pub mod verify;

pub use engine::{direct_sum, EmbeddingInstance, EngineError, ModuleSpace, Subspace};
pub use partition::{Partition, SkewShape};
pub use pmap::{PartialMap, PoleDecomposition};
pub use pole::{CyclicType, HeightSequence, PoleData};
pub use poset::{BoxMove, TableauPoset};
pub use tableau::{ColumnTableau, LRTableau};
