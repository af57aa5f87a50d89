//! Exact structure-constant engine for noncommutative Poisson algebras,
//! coalgebras and bialgebras, their product and coproduct extensions on
//! direct sums, and equivalence of extending structures.

pub mod axioms;
pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod dsl;
pub mod env;
pub mod equivalence;
pub mod error;
pub mod io;
pub mod linmap;
pub mod registry;
pub mod scalar;
pub mod structures;
pub mod term;

pub use env::StructureEnv;
pub use error::{ForgeError, Result};
pub use linmap::{LinMap, SpaceDecl};
pub use scalar::{Field, Scalar};
