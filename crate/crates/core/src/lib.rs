//! Magic polygons: labelings of the nodes of a regular n-gon (vertices, edge
//! midpoints and center) with `1..=2n+1` such that every side and every
//! diagonal through the center has the same sum.
//!
//! * [`polygon`]: node layout, lines and [`verify`].
//! * [`construct`](mod@construct): the closed-form labeling for even `n`.
//! * [`symmetry`]: the dihedral group, orbits and canonical forms.
//! * [`search`]: exhaustive enumeration and odd-order nonexistence checks.
//! * [`proofcheck`]: exact row reduction of the odd-order argument.
//! * [`document`], [`render`], [`cli`]: JSON exchange format, SVG output and
//!   the commands behind the `magic-polygon` binary.

pub mod cli;
pub mod construct;
pub mod document;
pub mod error;
pub mod polygon;
pub mod proofcheck;
pub mod render;
pub mod search;
pub mod symmetry;

pub use construct::{construct, range_partition_check};
pub use document::LabelingDocument;
pub use error::{Error, Result};
pub use polygon::{center_value, lines, magic_sum, verify, Labeling, Line, LineKind, NodeId};
pub use proofcheck::check_odd_contradiction;
pub use search::{enumerate, verify_nonexistence, SearchConfig, SearchMode};
