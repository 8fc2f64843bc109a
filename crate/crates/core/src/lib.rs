//! Exact combinatorics of the 600-cell and its colouring spaces.
//!
//! The crate builds the 600-cell from the icosian group over Q(√5), enumerates
//! its colourings, applies the colouring-space functor `B` repeatedly, relates
//! `B²` to 5×5 Latin squares, and packages every checked statement as a
//! claim in a deterministic report.

pub mod bspace;
pub mod chroma;
pub mod complexes;
pub mod error;
pub mod golden;
pub mod latin;
pub mod oracle;
pub mod pipeline;

pub use error::{Error, Result};
