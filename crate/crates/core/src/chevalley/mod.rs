//! The adjoint Chevalley group of type F4 in characteristic 2.

mod group;
mod lie;
mod matrix;

pub use group::{
    basis_height, basis_label, check_commutator, check_level, commutator_factors, gen_h, gen_n, gen_u, identity,
    in_parabolic_pj, in_uj, in_uj_minus, mul_h_left, mul_h_right, mul_n_left, mul_n_right, mul_u_left, mul_u_right,
    pattern, pattern_from_exponential, torus, GroupMatrix, Pattern,
};
pub use lie::{h_index, structure_constants, StructureConstants, ZVec, DIM, RANK};
pub use matrix::Matrix;
