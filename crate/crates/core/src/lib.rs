//! Power graphs of finite groups: closed-form edge counts for cyclic groups,
//! brute-force graph construction for arbitrary small groups, and
//! verification of the extremal edge-count results over group catalogs.

pub mod catalog;
pub mod error;
pub mod group;
pub mod numth;
pub mod pgraph;
pub mod products;
pub mod scan;
pub mod verify;

pub use catalog::{Catalog, CatalogEntry, CatalogSource, CatalogSpec};
pub use error::{Error, Result};
pub use group::{FiniteGroup, SemidirectSpec};
pub use numth::{BoundCheck, BoundReport, Factorization};
pub use pgraph::{build_power_graph, EdgeCounts, PowerGraph};
pub use verify::{GroupReport, VerificationReport};
