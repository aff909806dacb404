//! Magic and supermagic labelings of `d`-dimensional grid graphs with
//! respect to their unit-cube (`Q_d`) subgraphs.
//!
//! * [`grid`]: the grid graph, its edges and unit cubes.
//! * [`base_case`] and [`induction`]: the explicit labelings, built for
//!   `d = 2` in closed form and lifted one axis at a time.
//! * [`verify`]: exhaustive cube-sum checks and the predicted magic sums.
//! * [`oracle`]: brute-force enumeration over all labelings of tiny grids.
//! * [`document`] and [`render`]: file format, CSV, TikZ and DOT output.

pub mod base_case;
pub mod document;
pub mod error;
pub mod grid;
pub mod induction;
pub mod labeling;
pub mod oracle;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{canonicalize, AxisPermutation, CubeId, EdgeId, GridSpec, VertexCoord};
pub use induction::{build_labelings, combine_supermagic, LayerCounts};
pub use labeling::{EdgeLabeling, Label, LabelKind, TotalLabeling, VertexLabeling};
pub use verify::{closed_form_sums, MagicReport, PredictedSums};
