//! Scalar coefficient functions of time with closed-form first and second
//! derivatives.
//!
//! The grammar is a closed set of four kinds so that pole analysis (and hence
//! blowup classification) is decidable: polynomials and constants are smooth
//! everywhere, the two pole kinds are C^1 exactly on t < pole.

use crate::rational::{self, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TimeFunctionError {
    #[error("time {t} is at or past the pole at {pole}")]
    AtOrPastPole { t: f64, pole: f64 },
    #[error("non-finite evaluation time")]
    NonFiniteTime,
}

/// Value and first two derivatives of a time function at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeJet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Which quantity diverges first at a pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PoleMechanism {
    /// |f(T)| = infinity (rational pole).
    ValueDivergence,
    /// f stays bounded but |f'(T)| = infinity (power ramp with exponent in (0,1)).
    DerivativeDivergence,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TimeFunction {
    /// c_0 + c_1 t + c_2 t^2 + ... with exact rational coefficients.
    Polynomial {
        #[serde(with = "rational::serde_str_vec")]
        coefficients: Vec<Rational>,
    },
    /// amplitude * (pole - t)^(-power), power > 0; defined for t < pole.
    RationalPole { amplitude: f64, pole: f64, power: f64 },
    /// amplitude * (pole - t)^exponent with exponent in (0, 1); the value stays
    /// bounded at the pole but the derivative diverges.
    PowerRamp {
        amplitude: f64,
        pole: f64,
        exponent: f64,
    },
    Constant {
        #[serde(with = "rational::serde_str")]
        value: Rational,
    },
}

impl TimeFunction {
    pub fn polynomial(coefficients: Vec<Rational>) -> Self {
        TimeFunction::Polynomial { coefficients }
    }

    pub fn constant(value: Rational) -> Self {
        TimeFunction::Constant { value }
    }

    pub fn constant_int(value: i64) -> Self {
        Self::constant(rational::rat_int(value))
    }

    pub fn zero() -> Self {
        Self::constant_int(0)
    }

    /// Closed-form (value, f', f'') at `t`.
    pub fn eval(&self, t: f64) -> Result<TimeJet, TimeFunctionError> {
        if !t.is_finite() {
            return Err(TimeFunctionError::NonFiniteTime);
        }
        match self {
            TimeFunction::Polynomial { coefficients } => {
                let mut value = 0.0;
                let mut d1 = 0.0;
                let mut d2 = 0.0;
                for c in coefficients.iter().rev() {
                    let c = rational::to_f64(c);
                    d2 = d2 * t + 2.0 * d1;
                    d1 = d1 * t + value;
                    value = value * t + c;
                }
                Ok(TimeJet { value, d1, d2 })
            }
            TimeFunction::RationalPole {
                amplitude,
                pole,
                power,
            } => {
                if t >= *pole {
                    return Err(TimeFunctionError::AtOrPastPole { t, pole: *pole });
                }
                let s = pole - t;
                let value = amplitude * s.powf(-power);
                let d1 = amplitude * power * s.powf(-power - 1.0);
                let d2 = amplitude * power * (power + 1.0) * s.powf(-power - 2.0);
                Ok(TimeJet { value, d1, d2 })
            }
            TimeFunction::PowerRamp {
                amplitude,
                pole,
                exponent,
            } => {
                if t >= *pole {
                    return Err(TimeFunctionError::AtOrPastPole { t, pole: *pole });
                }
                let s = pole - t;
                let value = amplitude * s.powf(*exponent);
                let d1 = -amplitude * exponent * s.powf(exponent - 1.0);
                let d2 = amplitude * exponent * (exponent - 1.0) * s.powf(exponent - 2.0);
                Ok(TimeJet { value, d1, d2 })
            }
            TimeFunction::Constant { value } => Ok(TimeJet {
                value: rational::to_f64(value),
                d1: 0.0,
                d2: 0.0,
            }),
        }
    }

    /// Exact (value, f', f'') at a rational instant; `None` for pole kinds.
    pub fn eval_exact(&self, t: &Rational) -> Option<(Rational, Rational, Rational)> {
        let coeffs = self.poly_coefficients()?;
        let zero = Rational::zero;
        let mut value = zero();
        let mut d1 = zero();
        let mut d2 = zero();
        for c in coeffs.iter().rev() {
            d2 = d2 * t + &d1 + &d1;
            d1 = d1 * t + &value;
            value = value * t + c;
        }
        Some((value, d1, d2))
    }

    /// Coefficient list when this is polynomial-kind (constants included).
    pub fn poly_coefficients(&self) -> Option<Vec<Rational>> {
        match self {
            TimeFunction::Polynomial { coefficients } => Some(coefficients.clone()),
            TimeFunction::Constant { value } => Some(vec![value.clone()]),
            _ => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(
            self,
            TimeFunction::Polynomial { .. } | TimeFunction::Constant { .. }
        )
    }

    /// The pole location and its divergence mechanism, if any.
    pub fn pole(&self) -> Option<(f64, PoleMechanism)> {
        match self {
            TimeFunction::RationalPole { pole, .. } => {
                Some((*pole, PoleMechanism::ValueDivergence))
            }
            TimeFunction::PowerRamp { pole, .. } => {
                Some((*pole, PoleMechanism::DerivativeDivergence))
            }
            _ => None,
        }
    }
}

/// The unique b(t) making the compressible continuity residual vanish for
/// a(t) = c0 + c1 t: integrates b' = 3 a' a, so
/// b(t) = c2 + 3 c0 c1 t + (3/2) c1^2 t^2.
pub fn mass_ode_solve(c0: &Rational, c1: &Rational, c2: &Rational) -> TimeFunction {
    let linear = rational::rat_int(3) * c0 * c1;
    let quadratic = rational::rat(3, 2) * c1 * c1;
    TimeFunction::polynomial(vec![c2.clone(), linear, quadratic])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn linear_polynomial_jet() {
        let tf = TimeFunction::polynomial(vec![rat_int(1), rat_int(2)]);
        let j = tf.eval(3.0).unwrap();
        assert_eq!((j.value, j.d1, j.d2), (7.0, 2.0, 0.0));
    }

    #[test]
    fn rational_pole_jet() {
        // a(t) = 1/(2-t): a(1)=1, a'(1)=1, a''(1)=2
        let tf = TimeFunction::RationalPole {
            amplitude: 1.0,
            pole: 2.0,
            power: 1.0,
        };
        let j = tf.eval(1.0).unwrap();
        assert!((j.value - 1.0).abs() < 1e-14);
        assert!((j.d1 - 1.0).abs() < 1e-14);
        assert!((j.d2 - 2.0).abs() < 1e-14);
        assert!(matches!(
            tf.eval(2.0),
            Err(TimeFunctionError::AtOrPastPole { .. })
        ));
        assert!(tf.eval(2.5).is_err());
    }

    #[test]
    fn constant_jet() {
        let tf = TimeFunction::constant_int(5);
        let j = tf.eval(-11.25).unwrap();
        assert_eq!((j.value, j.d1, j.d2), (5.0, 0.0, 0.0));
    }

    #[test]
    fn power_ramp_derivative_blows_up_near_pole() {
        // (1-t)^(1/2): bounded value, diverging derivative.
        let tf = TimeFunction::PowerRamp {
            amplitude: 1.0,
            pole: 1.0,
            exponent: 0.5,
        };
        let j = tf.eval(1.0 - 1e-8).unwrap();
        assert!(j.value < 1.0e-3);
        assert!(j.d1.abs() > 1.0e3);
        assert_eq!(
            tf.pole(),
            Some((1.0, PoleMechanism::DerivativeDivergence))
        );
    }

    #[test]
    fn exact_eval_matches_float() {
        let tf = TimeFunction::polynomial(vec![rat(1, 2), rat_int(-3), rat(5, 4)]);
        let (v, d1, d2) = tf.eval_exact(&rat_int(2)).unwrap();
        let j = tf.eval(2.0).unwrap();
        assert_eq!(crate::rational::to_f64(&v), j.value);
        assert_eq!(crate::rational::to_f64(&d1), j.d1);
        assert_eq!(crate::rational::to_f64(&d2), j.d2);
    }

    #[test]
    fn mass_ode_examples() {
        // (c0=1, c1=2, c2=0) -> 6t + 6t^2
        let b = mass_ode_solve(&rat_int(1), &rat_int(2), &rat_int(0));
        assert_eq!(
            b.poly_coefficients().unwrap(),
            vec![rat_int(0), rat_int(6), rat_int(6)]
        );
        // (0, 0, 7) -> 7
        let b = mass_ode_solve(&rat_int(0), &rat_int(0), &rat_int(7));
        assert_eq!(
            b.poly_coefficients().unwrap(),
            vec![rat_int(7), rat_int(0), rat_int(0)]
        );
        // (0, 1, 0) -> (3/2)t^2
        let b = mass_ode_solve(&rat_int(0), &rat_int(1), &rat_int(0));
        assert_eq!(
            b.poly_coefficients().unwrap(),
            vec![rat_int(0), rat_int(0), rat(3, 2)]
        );
    }
}
