//! Exact computations with truncated simplicial commutative algebras over
//! prime fields: Moore complexes, hypercrossed pairings, and crossed,
//! 2-crossed and 3-crossed modules (commutative and Lie).

pub mod algebra;
pub mod corpus;
pub mod crossed;
pub mod error;
pub mod field;
pub mod functors;
pub mod ideal;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod moore;
pub mod morphism;
pub mod poset;
pub mod report;
pub mod simplicial;
pub mod supply;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use ideal::Ideal;
pub use linalg::{Matrix, Subspace};
pub use morphism::{BilinearMap, Morphism};
pub use report::{AxiomReport, CheckKind, CheckRecord, Status};
pub use simplicial::TruncatedSimplicialAlgebra;
pub use supply::SupplyConfig;
