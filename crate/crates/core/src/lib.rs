//! Exact computer algebra for one-parameter families of hypersurface germs
//! `F(z,t) = f(z) + Σ_k t^k g_k(z)`.
//!
//! The library decides whether the necessary multiplicity bounds for
//! Milnor-number-constant families hold, whether sufficient conditions for
//! equimultiplicity apply, and produces arc-valuation certificates when a
//! family fails the Lê–Saito–Teissier criterion. All arithmetic is exact,
//! over ℚ, ℚ(t) or ℚ(a).

pub mod analyze;
pub mod arc;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod extint;
pub mod family;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod parser;
pub mod poly;
pub mod singularity;
pub mod unipoly;

pub use arc::ArcCurve;
pub use error::{Error, Result};
pub use extint::{ExtInt, Gap};
pub use field::{Field, Rat, RatFuncA, RatFuncT};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring, RingRef};
pub use unipoly::UniPoly;
