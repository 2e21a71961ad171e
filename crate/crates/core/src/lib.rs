//! Exact computer algebra for Leibniz and Zinbiel algebras.
//!
//! The crate is layered: [`graded`] holds words, elements and Koszul signs;
//! [`zinbiel`] the free Zinbiel algebra and cofree coalgebra; [`cochains`] bar
//! cochains as coderivations; [`anticyclic`] anticyclic cochains, the dual
//! commutator and the universal pairing; [`world`] the symplectic Loday world
//! built on top of them.

pub mod anticyclic;
pub mod cochains;
mod combinatorics;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod scalar;
pub mod world;
pub mod zinbiel;

pub use anticyclic::{AcCochain, MultilinearForm, SignPolicy};
pub use cochains::{BarCochain, LeibnizTable};
pub use error::{AlgebraError, Result};
pub use graded::{koszul_sign, linear_combine, transpose, Element, GradedBasis, Parity, Word};
pub use scalar::Scalar;
pub use world::{Coordinate, LodayFunction, Metric, SymplecticPlane, Twist};
pub use zinbiel::{LinearMap, ZinbielTable, ZinbielTarget};
