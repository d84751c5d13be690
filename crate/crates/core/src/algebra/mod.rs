//! Cox rings, monomials, monomial orders and polynomials.

mod degree;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use degree::MultiDegree;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_ideal_expr, parse_polynomial};
pub use poly::Polynomial;
pub(crate) use ring::binomial;
pub use ring::{CoxRing, Family, Variable};

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
