//! Θ_n, finite presheaves on it, and the cylinder constructions built from
//! them, with an exhaustive checker that verifies presheaf-level identities
//! over bounded universes of objects.

pub mod constructions;
pub mod error;
pub mod presheaf;
pub mod simplex;
pub mod term;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use presheaf::{Element, NatTransformation, Presheaf, UniverseSpec};
pub use simplex::{MonotoneMap, Ordinal};
pub use term::parse_object;
pub use theta::{ThetaMorphism, ThetaObject};
