//! Root polytopes of classical root systems: abelian ideals, border-strip
//! triangulations and the codimension-2 hyperplane arrangement.

pub mod arrangement;
pub mod error;
pub mod hull;
pub mod ideals;
pub mod linalg;
pub mod report;
pub mod rootsys;
pub mod triangulate;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Family, Root, RootSet, RootSystem, RootSystemType};
pub use weyl::{Covector, WeylElement};
