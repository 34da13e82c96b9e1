//! Zero-sum subset partitions of finite Abelian groups, with the Skolem-type,
//! orthomorphism and group-labeling applications built on them.

pub mod certificate;
pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod labeling;
pub mod orthomorphism;
pub mod partition;
pub mod search;
pub mod skolem;
pub mod zspp;

pub use error::{Error, Result};
pub use group::{Element, ElementSet, Group};
pub use search::{Budget, SearchVerdict};
