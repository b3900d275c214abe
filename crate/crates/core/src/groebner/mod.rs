//! Gröbner bases for submodules of free modules and the operations built on
//! them: membership, lifting, syzygies, intersections, colons, annihilators
//! and dimension.

pub(crate) mod buchberger;
pub(crate) mod modpoly;
mod ops;
mod order;
pub(crate) mod schreyer;
mod submodule;

pub use ops::{
    annihilator, codimension, colength, colon_functionals, dimension, graded_degrees, ideal_diagonal,
    intersect, is_graded_matrix, is_monomial_matrix, kernel_mod, module_codimension, quotient,
    syzygies, Dimension,
};
pub use order::{ModuleOrder, SchreyerData};
pub use submodule::{groebner_basis, GroebnerBasis, Lift, Submodule};
