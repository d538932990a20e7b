//! Polynomial Poisson algebras on `Q[x, y, z]`.

pub mod cm_exact;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod parser;
pub mod poisson;
pub mod poly;
pub mod report;
pub mod spectrum;

pub use error::{Error, Result};
pub use parser::{parse, render};
pub use poly::{Monomial, Point, Poly, Rational, Var};
