//! Bigraded multivariate polynomial arithmetic over the rationals.
//!
//! Variables are `x1..xk` followed by `y1..yn` in a fixed order, with the
//! bigrading `deg x_i = (1,0)`, `deg y_j = (0,1)`. Term lists are kept
//! canonical (strictly decreasing under degrevlex) so equality is structural;
//! order-sensitive computations sort into their working order at the
//! boundary.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, ParsePolyError};
pub use polynomial::Polynomial;
pub use ring::PolyRing;
