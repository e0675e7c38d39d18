//! Self-contained special-function kernel: log-Gamma/Beta, Bessel J of real
//! order, Kummer 1F1 on the imaginary axis, Jacobi polynomials with their
//! moment formulas and weighted finite Fourier transform.

pub mod bessel;
pub mod gamma;
pub mod jacobi;
pub mod kummer;

pub use bessel::{bessel_j, bessel_j_sequence};
pub use gamma::{beta_fn, ln_beta, ln_gamma};
pub use jacobi::{
    fourier_jacobi_general, jacobi_eval, jacobi_moment, weight_moment, JacobiRecurrence,
    WeightParams,
};
pub use kummer::kummer_1f1_imag;
