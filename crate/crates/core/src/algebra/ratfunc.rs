//! Univariate rational functions over Q.

use std::fmt;

use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::Rational;
use super::univariate::{div_rem, gcd_univariate};
use super::AlgebraError;

/// `numerator / denominator` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, AlgebraError> {
        if numerator.nvars() != 1 || denominator.nvars() != 1 {
            return Err(AlgebraError::NotUnivariate);
        }
        if denominator.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction {
                numerator,
                denominator: Polynomial::one(1),
            });
        }
        let g = gcd_univariate(&numerator, &denominator)?;
        let n = div_rem(&numerator, &g)?.0;
        let d = div_rem(&denominator, &g)?.0;
        let lc = d.leading_coeff().recip();
        Ok(RationalFunction {
            numerator: n.scale(&lc),
            denominator: d.scale(&lc),
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_constant(&self) -> bool {
        self.numerator.is_constant() && self.denominator.is_constant()
    }

    /// Degree as a map P^1 -> P^1, i.e. `max(deg num, deg den)`.
    pub fn degree(&self) -> u32 {
        self.numerator
            .degree_in(0)
            .unwrap_or(0)
            .max(self.denominator.degree_in(0).unwrap_or(0))
    }

    /// Value at `t`, `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(std::slice::from_ref(t));
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(std::slice::from_ref(t)) / d)
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}
