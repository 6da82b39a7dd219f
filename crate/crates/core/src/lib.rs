//! Exhaustive edge-3-coloring counts on cubic graphs: Kászonyi numbers of
//! snarks, the constructions that build snarks from smaller ones, checks of
//! the counting identities relating them, and a ledger of computed values.
//!
//! ```
//! use snarkforge::{construct::petersen, color::psi, graph::EdgeId};
//!
//! assert_eq!(psi(&petersen(), EdgeId(0)).unwrap(), 1);
//! ```

pub mod analyze;
pub mod color;
pub mod construct;
pub mod error;
pub mod graph;
pub mod ledger;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
