//! Exact computations in the subdivision algebra `X/J`.
//!
//! `X` is the polynomial ring in the variables `x[i,j]` (`1 <= i < j <= n`)
//! over ℚ[β, α], and `J` is the ideal generated by
//! `x[i,j]*x[j,k] - x[i,k]*(x[i,j] + x[j,k] + β) - α` for `i < j < k`.
//! The crate provides the pathless reduction game, the forkless Gröbner normal
//! form, the maps `D`, `A`, `B`, `E`, and executable checks of the identities
//! that tie them together.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod rewrite;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use poly::{format_poly, parse_monomial, parse_poly, parse_tpoly, PairIndex, TPoly, XMonomial, XPoly};
pub use ring::{ParamCoeff, Params, Rational};
