//! Gabriel-Roiter measure for finite posets with a length function, and for
//! the subobject poset of indecomposable quiver representations over small
//! prime fields.

pub mod category;
pub mod chain;
pub mod error;
pub mod linalg;
pub mod poset;
pub mod quiver;
pub mod registry;
pub mod verify;

pub use chain::{lex_compare, NatChain};
pub use error::{Error, Result};
