//! Constructors for the matrix, multiparametric, cocycle and comodule-algebra
//! families.

mod ast;
mod group;
mod matrix;
mod model;

pub use ast::{check_ast, gl_cogroupoid, make_gl_pq, make_s2n, make_s2n_explicit, r_tensor, s2n_cogroupoid, star, prime, AstMatrix};
pub use group::{group_cocycle_cogroupoid, make_group_cocycle_algebra, FiniteGroup, GroupCocycle};
pub use matrix::{b_cogroupoid, h_cogroupoid, make_b, make_h, matrix_generators, HomAlgebra};
pub use model::{make_amt, make_kpx, quadric_algebra, ComoduleAlgebra};

/// Generator name `x12` style (1-based), with a separator past 9.
pub(crate) fn idx_name(prefix: &str, i: usize, j: usize) -> String {
    if i < 9 && j < 9 {
        format!("{}{}{}", prefix, i + 1, j + 1)
    } else {
        format!("{}{}_{}", prefix, i + 1, j + 1)
    }
}
