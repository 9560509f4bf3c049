//! Rotation systems: group actions on graphs whose cliques are rotated by a
//! distinguished family of subgroups, and the periagroups they define.

pub mod action;
pub mod error;
pub mod extract;
pub mod perm;
pub mod pingpong;
pub mod system;

pub use action::{action_from_json, action_to_json, GroupAction, SubgroupSet, DEFAULT_ELEMENT_CAP};
pub use error::{Result, RotationError};
pub use extract::{cayley_action, extract_periagroup};
pub use perm::{Perm, PermGroup};
pub use pingpong::{rotation_subgroup, rotative_stabilizer, RotationDecomposition};
pub use system::{
    verify_presystem, verify_rotation_system, BarrierViolation, FreeTransitiveViolation, PresystemReport,
    RotationData, RotationReport,
};
