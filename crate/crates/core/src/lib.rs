//! Excessive `[l,m]`-factorizations of graphs.
//!
//! An `[l,m]`-covering of a graph is a family of matchings, each with between
//! `l` and `m` edges, whose union is the whole edge set. The excessive
//! `[l,m]`-index is the size of a smallest such family, or infinity.
//!
//! * [`graph`]: graphs, multigraphs, matchings, coverings, file formats.
//! * [`matching`]: maximum matching and forced-edge extension.
//! * [`coloring`]: exact edge colouring, equalization, `m`-bounded colourings.
//! * [`excessive`]: the indices themselves, with witnesses.
//! * [`analysis`]: compatibility and coherence reports.
//! * [`oracle`]: brute-force ground truth and the small-graph sweep.

pub mod analysis;
pub mod budget;
pub mod coloring;
pub mod error;
pub mod excessive;
pub mod graph;
pub mod matching;
pub mod oracle;

pub use budget::Budget;
pub use error::{Error, Result};
pub use excessive::{IndexResult, IndexSolver, IndexValue, Rule};
pub use graph::{Covering, Edge, Matching, Multigraph, SimpleGraph};
