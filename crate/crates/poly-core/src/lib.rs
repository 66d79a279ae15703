//! Exact sparse Laurent polynomial arithmetic over the fixed variable ring
//! `Q[p^±1, x0^±1, x1^±1, x2^±1, x3^±1, x4^±1, X^±1]`.
//!
//! Everything downstream (symmetric coefficient tables, coset enumeration
//! images, power series in `X`) works in this one ring, so the variable set
//! is fixed and exponent vectors are plain arrays with a total lexicographic
//! order. Coefficients are arbitrary-precision rationals; there is no
//! floating point anywhere.

mod error;
mod exponent;
mod json;
mod poly;
mod rational;
mod text;

pub use error::PolyError;
pub use exponent::{ExpVec, Var, NVARS};
pub use json::{poly_from_json, poly_from_json_str, poly_to_json, poly_to_json_string};
pub use poly::{coeff_int, coeff_pow, coeff_ratio, Coeff, MultiPoly};
pub use rational::RationalFunction;
pub use text::parse_poly;
