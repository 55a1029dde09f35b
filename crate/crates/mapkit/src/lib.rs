//! Flag-level kernel for maps on surfaces.
//!
//! A map (a cellular embedding of a connected graph in a surface) is
//! represented by its flags: three involutions `t0, t1, t2` acting on a
//! finite point set, one per colour. The same representation, with fixed
//! points allowed (semi-edges), covers symmetry type graphs — quotients of
//! a flag graph by the automorphism group of the map.
//!
//! On top of the core representation this crate provides
//!
//! - the dual, truncation, leapfrog and two-dimensional subdivision
//!   operations at flag level,
//! - automorphism groups, flag-orbit partitions and symmetry type graphs,
//! - truncation recognition and inversion via the natural tripartition of
//!   a truncated map's flags,
//! - isomorph-free enumeration of maps and of symmetry type graphs,
//! - a census and a verification harness for the classification of
//!   truncation and leapfrog symmetry types of k-orbit maps.

pub mod canon;
pub mod enumerate;
pub mod io;
pub mod ops;
mod par;
pub mod registry;
pub mod symmetry;
pub mod system;
pub mod tables;

pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonicalKey};
pub use system::{ColoredSystem, FlagMap, OrbitPartition, ValidationReport};
