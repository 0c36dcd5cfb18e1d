//! Detection of non-trivial asymptotic non-regular values of polynomial
//! functions `f: C^n -> C` with rational coefficients.
//!
//! The crate computes a finite set `S`, given exactly as the roots of a
//! squarefree polynomial `rho(z)`, that contains every value at which `f`
//! fails Malgrange's condition at infinity for reasons other than critical
//! points escaping to infinity. Two methods are offered:
//!
//! * the super-polar curve method ([`detector::run_super_polar`]), one curve
//!   per run built from random combinations of `df/dx_j` and `x_k df/dx_j`;
//! * the iterated polar curve method ([`detector::iterated_polar_run`]),
//!   `n - 1` polar curves of successive hyperplane slices.
//!
//! Both reduce to non-properness sets of `f` restricted to affine curves.
//! For each coordinate `x_i` the relation between `x_i` and `f` on the curve
//! is found in `Q[x_i, z]` from one graded Gröbner basis of the graph ideal
//! ([`groebner`]), by linear algebra modulo word-size primes with an exact
//! check over the rationals.

pub mod bounds;
pub mod cli;
pub mod detector;
pub mod groebner;
pub mod nonproper;
pub mod polyalg;
pub mod univar;
