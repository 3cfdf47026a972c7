//! Recognition, certificates, minimality testing and exhaustive enumeration
//! for 2-cographs.
//!
//! A 2-cograph is a graph with no induced subgraph that is 2-connected with
//! a 2-connected complement; cographs are the analogous class one
//! connectivity level down, and k-cographs the generalization upwards. This
//! crate provides:
//!
//! * [`graph`]: an immutable bitset graph value on up to 32 vertices with
//!   the structural operations everything else builds on;
//! * [`canon`]: canonical labelling and exact isomorphism testing;
//! * [`recognize`]: cograph / 2-cograph / k-cograph recognizers, with
//!   constructive certificates for the 2-cograph case;
//! * [`minimal`]: induced-minor minimality of non-2-cographs and membership
//!   in the class of graphs that are minimal together with their
//!   complements;
//! * [`enumerate`]: isomorph-free generation of all small graphs and the
//!   census pipeline that lists every doubly minimal non-2-cograph on 5 to
//!   10 vertices;
//! * [`graph6`], [`dot`], [`report`]: interchange formats;
//! * [`checks`]: the end-to-end verification suite behind `cographs verify`.
//!
//! ```
//! use cographs::families;
//! use cographs::recognize::{check_2cograph, TwoCographVerdict};
//!
//! // the five-cycle is the smallest graph that is not a 2-cograph
//! assert!(matches!(
//!     check_2cograph(&families::cycle(5)),
//!     TwoCographVerdict::NotTwoCograph(_)
//! ));
//! assert!(matches!(
//!     check_2cograph(&families::path(4)),
//!     TwoCographVerdict::TwoCograph(_)
//! ));
//! ```

pub mod canon;
pub mod checks;
mod connectivity;
pub mod dot;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod minimal;
pub mod recognize;
pub mod report;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use graph::{Edge, GraphError, SmallGraph, VertexSet};
