//! Homogeneous vector bundles on projective spaces and Grassmannians,
//! modelled as representations of a quiver with relations.
//!
//! The cohomology engine turns a representation into a complex of
//! G-modules whose homology is H^*(E); see [`cohomology::cohomology`].

pub mod bott;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod pieri;
pub mod quiver;
pub mod rootsys;
pub mod stability;

pub use error::{Error, Result};
pub use linalg::{Matrix, Q};
pub use quiver::QuiverRep;
pub use rootsys::{BundleShape, Partition, Space, Weight};
