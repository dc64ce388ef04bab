pub mod bitset;
pub mod canon;
pub mod checks;
pub mod construct;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hunt;
pub mod pattern;
pub mod registry;
pub mod saturate;
pub mod search;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::CliquePattern;
