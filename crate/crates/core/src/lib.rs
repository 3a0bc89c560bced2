//! Ideal theory of finite monoids with zero given by Cayley tables:
//! ideals, waists, comparizers, radicals, Ore saturations, right
//! `P`-comparability and prime segments, plus executable checks of the
//! statements relating them over built-in and enumerated examples.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod elemset;
pub mod error;
pub mod ideals;
pub mod kernel;
pub mod localize;
pub mod report;
pub mod segments;
pub mod verify;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use ideals::{IdealFamily, IdealKind, DEFAULT_CAP};
pub use kernel::{Element, Semigroup};
