//! Sparse polynomials and exact incremental row reduction.

mod monomial;
mod polynomial;
mod rowspace;

pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::{elementary_symmetric, eval_monomial, var_list, Polynomial};
pub use rowspace::{Reduction, RowSpace};
