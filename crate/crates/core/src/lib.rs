//! Exact computations in the mixed Chevalley group of type F4 over a pair of
//! characteristic-2 fields, its Tits involution, the normal form used to
//! compute the permutation τ, and the resulting Moufang set.

pub mod error;
pub mod chevalley;
pub mod fields;
pub mod involution;
pub mod moufang;
pub mod rewrite;
pub mod roots;

pub use error::{Error, Result};
