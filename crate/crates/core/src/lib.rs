//! Nested complexes of building sets over finite lattices and over Las Vergnas
//! face lattices of oriented matroids, together with their exact polytopal
//! realizations (nestohedra, acyclonestohedra, poset associahedra, affine
//! poset cyclohedra).
//!
//! All numeric kernels run over exact rationals; no floating point is used
//! outside of the lossy OFF export.

pub mod building;
pub mod cli;
pub mod embed;
pub mod facial;
pub mod geom;
pub mod lattice;
pub mod linalg;
pub mod om;
pub mod posets;
pub mod util;
pub mod verify;

pub use util::{Rat, Subset};
