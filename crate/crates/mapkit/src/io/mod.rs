//! File formats and named constructions: the `cis` text format for
//! involution systems, rotation-system import, DOT export and builders.

pub mod builders;
pub mod cis;
pub mod dot;
pub mod rot;

pub use builders::build_named;
pub use cis::{parse_cis, serialize_cis, Mode, ParsedCis};
pub use dot::export_dot;
pub use rot::{from_rotation_system, parse_rot, RotationSystem};
