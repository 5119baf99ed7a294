//! Symbolic words and the normal form n_{e₄}·u·n_{e₄} = b·n_{e₄}·u′.

mod engine;
mod oracle;
pub mod rules;
mod u1;
mod word;

pub use engine::{collect, e4, tau_normal_form, NormalForm, RewriteOptions, TraceEntry, DEFAULT_STEP_BOUND};
pub use oracle::{conjugate_by_n, decompose, u1_from_matrix, unique_decomposition_check, Decomposition};
pub use u1::{Stratum, U1Elem};
pub use word::{Atom, Word};
