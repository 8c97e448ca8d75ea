//! Exact arithmetic in the centre of the Iwahori–Hecke algebra of `S_n`.
//!
//! Modules build on each other in order: scalars ([`polyring`]),
//! permutations ([`symcore`]), compositions and characters ([`combin`]),
//! Young subgroups ([`cosets`]), the algebra ([`hecke`]), its centre
//! ([`central`], [`table`]) and the bounded invariant checks ([`verify`]).

pub mod central;
pub mod combin;
pub mod cosets;
pub mod error;
pub mod hecke;
pub mod polyring;
pub mod symcore;
pub mod table;
pub mod verify;

pub use central::{Centre, Method};
pub use combin::{Composition, Multipartition, Partition};
pub use error::{Error, Result};
pub use hecke::{AlgebraConfig, HeckeAlgebra, HeckeElement};
pub use polyring::XiPoly;
pub use symcore::Permutation;
