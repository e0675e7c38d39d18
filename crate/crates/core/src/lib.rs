//! Generalized prolate spheroidal wave functions.
//!
//! Eigenfunctions of the perturbed Jacobi operator
//! `L_c f = (1-x^2) f'' + ((b-a) - (a+b+2) x) f' - c^2 x^2 f`
//! on [-1, 1], which for a symmetric weight also diagonalize the weighted
//! finite Fourier transform `(F_c f)(x) = int e^{icxy} f(y) (1-y^2)^a dy`.
//! The crate computes the eigenpairs by the Bouwkamp (Jacobi-basis banded
//! eigenproblem) method, evaluates the eigenfunctions inside and outside the
//! interval, produces the Fourier eigenvalues `mu_n` / `lambda_n`, verifies
//! the known analytic bounds on all of it, and projects band-limited and
//! almost band-limited functions on the resulting basis.

pub mod approx;
pub(crate) mod dd;
pub mod eigensystem;
mod error;
pub mod prolate;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
