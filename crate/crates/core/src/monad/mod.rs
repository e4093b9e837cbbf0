//! The free-algebra monad `P̲(X) = ∐ₙ P(n) ×_{G(n)} Xⁿ` of a finite operad,
//! truncated at an arity bound, with its laws and the 2-cartesian criterion.

mod free;
mod laws;

pub use free::{flatten, free_algebra, mult_mu, unit_eta, FreeAlgebra, FreeAlgebraClass};
pub use laws::{
    cartesian_condition, check_monad_laws, pullback_witness_test, CartesianWitness, CROSS_CHECK_LIMIT,
};

#[cfg(test)]
mod tests;
