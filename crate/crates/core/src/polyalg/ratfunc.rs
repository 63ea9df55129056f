use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Ratio of two polynomials in `s`, kept unreduced.
///
/// No polynomial GCD is taken; [`RationalFunction::cancel_root`] removes
/// common linear factors at a chosen point when an evaluation needs it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: Polynomial,
    denom: Polynomial,
}

impl RationalFunction {
    pub fn new(numer: Polynomial, denom: Polynomial) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { numer, denom })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            numer: p,
            denom: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.denom.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(at.to_string()));
        }
        Ok(self.numer.eval(at) / d)
    }

    /// Divides numerator and denominator by `(s - at)` as long as both vanish there.
    pub fn cancel_root(&self, at: &Rational) -> Self {
        let factor = Polynomial::from_coeffs(vec![-at.clone(), Rational::one()]);
        let mut numer = self.numer.clone();
        let mut denom = self.denom.clone();
        while denom.eval(at).is_zero() && numer.eval(at).is_zero() {
            denom = denom.exact_div(&factor);
            if numer.is_zero() {
                break;
            }
            numer = numer.exact_div(&factor);
        }
        RationalFunction { numer, denom }
    }

    /// Value at `at`, cancelling removable singularities first.
    pub fn limit_at(&self, at: &Rational) -> Result<Rational> {
        self.cancel_root(at).eval(at)
    }

    /// Quotient rule: `(n'd - nd') / d^2`.
    pub fn derivative(&self) -> Self {
        let numer = &(&self.numer.derivative() * &self.denom) - &(&self.numer * &self.denom.derivative());
        RationalFunction {
            numer,
            denom: &self.denom * &self.denom,
        }
    }

    /// First `n + 1` Taylor coefficients at the origin.
    ///
    /// Uses `c_k = (numer_k - sum_{j>=1} denom_j c_{k-j}) / denom_0`.
    pub fn series_coefficients(&self, n: usize) -> Result<Vec<Rational>> {
        let d0 = self.denom.coeff(0);
        if d0.is_zero() {
            return Err(Error::SingularAtOrigin);
        }
        let den = self.denom.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numer.coeff(k);
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    acc -= dj * &out[k - j];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &RationalFunction) -> Self {
        RationalFunction {
            numer: &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom),
            denom: &self.denom * &rhs.denom,
        }
    }

    pub fn mul(&self, rhs: &RationalFunction) -> Self {
        RationalFunction {
            numer: &self.numer * &rhs.numer,
            denom: &self.denom * &rhs.denom,
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equivalent(&self, rhs: &RationalFunction) -> bool {
        &self.numer * &rhs.denom == &rhs.numer * &self.denom
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numer, self.denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rational::{int, rat};

    fn geometric() -> RationalFunction {
        RationalFunction::new(Polynomial::one(), Polynomial::one_minus_var()).unwrap()
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn series_of_forced_win() {
        let f = RationalFunction::from_polynomial(Polynomial::var());
        assert_eq!(f.series_coefficients(3).unwrap(), vec![int(0), int(1), int(0), int(0)]);
    }

    #[test]
    fn series_of_geometric() {
        assert_eq!(geometric().series_coefficients(3).unwrap(), vec![int(1); 4]);
    }

    #[test]
    fn series_singular_at_origin() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::var()).unwrap();
        assert_eq!(f.series_coefficients(2), Err(Error::SingularAtOrigin));
    }

    #[test]
    fn series_recomposes_numerator() {
        let f = RationalFunction::new(
            Polynomial::from_coeffs(vec![rat(1, 3), int(2), rat(-1, 7)]),
            Polynomial::from_coeffs(vec![rat(3, 2), rat(-1, 5), int(0), rat(2, 9)]),
        )
        .unwrap();
        let n = 12;
        let c = Polynomial::from_coeffs(f.series_coefficients(n).unwrap());
        let prod = &c * f.denom();
        for k in 0..=n {
            assert_eq!(prod.coeff(k), f.numer().coeff(k));
        }
    }

    #[test]
    fn derivative_rules() {
        let s2 = RationalFunction::from_polynomial(Polynomial::monomial(int(1), 2));
        assert!(s2
            .derivative()
            .equivalent(&RationalFunction::from_polynomial(Polynomial::monomial(int(2), 1))));
        let expected =
            RationalFunction::new(Polynomial::one(), Polynomial::one_minus_var().pow(2)).unwrap();
        assert!(geometric().derivative().equivalent(&expected));
        let c = RationalFunction::from_polynomial(Polynomial::constant(rat(4, 9)));
        assert!(c.derivative().numer().is_zero());
    }

    #[test]
    fn removable_singularity() {
        // (1 - s^2) / (1 - s) -> 2 at s = 1
        let f = RationalFunction::new(
            Polynomial::from_coeffs(vec![int(1), int(0), int(-1)]),
            Polynomial::one_minus_var(),
        )
        .unwrap();
        assert!(f.eval(&int(1)).is_err());
        assert_eq!(f.limit_at(&int(1)).unwrap(), int(2));
        assert_eq!(f.cancel_root(&int(1)).eval(&rat(1, 3)), f.eval(&rat(1, 3)));
    }
}
