//! Named presheaves and maps built from the presheaf toolkit: nerves of thin
//! categories, spines, and the cylinder objects.

pub mod nerve;
pub mod spine;
pub mod cylinder;
pub mod jcylinder;
