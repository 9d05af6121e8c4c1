//! Schur rings over small finite groups.
//!
//! Groups are explicit multiplication tables ([`group`]), S-rings are partitions
//! verified against the axioms ([`sring`]), and schurity is decided by computing the
//! automorphism group of the associated Cayley color matrix ([`schurity`]).

pub mod arith;
pub mod constructions;
pub mod cyclotomy;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod limits;
pub mod perm;
pub mod schurity;
pub mod sring;
pub mod suite;

pub use error::{Error, Result};
pub use group::{Group, Section, Subgroup};
pub use limits::Limits;
pub use perm::{PermGroup, Permutation};
pub use schurity::{is_schurian, SchurityReport};
pub use sring::{SRing, StructureConstants};
