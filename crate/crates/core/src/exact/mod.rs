//! Exact polynomial arithmetic over the rationals.
//!
//! Everything that has to be *counted* rather than approximated goes through
//! this module: sparse multivariate polynomials with arbitrary-precision
//! rational coefficients, reduced Gröbner bases, and the quotient-ring
//! machinery used to count (and certify) the solutions of zero-dimensional
//! systems.

mod groebner;
mod monomial;
mod poly;
mod quotient;
mod univariate;

pub use groebner::{
    buchberger, buchberger_with_budget, normal_form, quotient_dimension, s_polynomial, Budget, GroebnerBasis,
    GroebnerStats, QuotientDimension,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{MultiPoly, Ring};
pub use quotient::{QuotientRing, RadicalCertificate};
pub use univariate::{is_squarefree_univariate, UniPoly};

use num_bigint::BigInt;

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("ring mismatch: {left:?} vs {right:?}")]
    RingMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("expected {expected} substitutions, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not univariate (uses variables {0:?})")]
    NotUnivariate(Vec<String>),
    #[error(
        "Gröbner budget exceeded after {pairs_processed} pair reductions \
         (basis size {basis_size}, {pairs_remaining} pairs pending)"
    )]
    BudgetExceeded {
        pairs_processed: u64,
        basis_size: usize,
        pairs_remaining: usize,
    },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn rationals_stay_canonical(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = ratio(a, b) * ratio(c, d) + ratio(a, d);
            let g = num_integer::Integer::gcd(x.numer(), x.denom());
            prop_assert!(g.is_one() || x.is_zero());
            prop_assert!(x.denom().is_positive());
            if x.is_zero() {
                prop_assert!(x.denom().is_one());
            }
        }
    }
}
