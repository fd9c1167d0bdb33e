//! Angular-resolution optimization for straight-line graph drawings.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`] and [`poly`]: planar primitives and real polynomial roots.
//! - [`solver`]: the max-min-angle (MMA) displacement problem for a single
//!   vertex, solved exactly for degree at most three and by grid search above.
//! - [`oracle`]: an independent dense-sampling solver used for validation.
//! - [`graph`], [`layout`], [`metrics`], [`io`], [`svg`]: the spring embedder
//!   that uses the MMA displacement as an angle force, plus graph ingestion,
//!   drawing persistence and quality measures.

pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod layout;
pub mod metrics;
pub mod oracle;
pub mod poly;
pub mod solver;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{min_incident_angle, Point, SimilarityTransform};
pub use graph::{Drawing, Graph};
pub use layout::{layout, LayoutConfig, LayoutResult, SpringModel};
pub use metrics::{compute_metrics, Metrics};
pub use poly::{real_roots, Polynomial};
pub use solver::{solve, DisplacementQuery, DisplacementResult, GridParams, Method};
