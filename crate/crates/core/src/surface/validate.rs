//! Validation of a tri-quadratic surface.

use serde::{Deserialize, Serialize};

use super::{Axis, Surface222, SurfaceError, CHI_DEGREE};
use crate::algebra::univariate::gcd_univariate;
use crate::algebra::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    /// Degree of the fiberwise map for both fibrations.
    pub chi_degree: u32,
}

impl ValidationReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Content of `F` in one variable, as a binary form of formal degree 2:
/// the gcd of the coefficients of `F` viewed in the other two variables,
/// with the factor at infinity when the degree drops for every term.
fn one_variable_content(s: &Surface222, var: usize) -> Option<String> {
    let mut g = Polynomial::zero(1);
    let mut top_present = false;
    let others: Vec<usize> = (0..3).filter(|&v| v != var).collect();
    for a in 0..3 {
        for b in 0..3 {
            let mut coeffs = Vec::new();
            for k in 0..3 {
                let mut e = [0usize; 3];
                e[others[0]] = a;
                e[others[1]] = b;
                e[var] = k;
                coeffs.push(s.coeff(e[0], e[1], e[2]).clone());
            }
            let p = Polynomial::from_coeffs(&coeffs);
            if !p.is_zero() {
                top_present |= p.degree_in(0) == Some(2);
                g = gcd_univariate(&g, &p).expect("univariate");
            }
        }
    }
    let name = ["x", "y", "t"][var];
    if !g.is_constant() {
        let shown = g.to_string().replace('x', name);
        return Some(shown);
    }
    (!top_present).then(|| format!("{}1 (the line {} = oo)", name, name))
}

impl Surface222 {
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let mut warnings = Vec::new();
        let nonzero = !self.is_zero();
        checks.push(Check {
            name: "F is not identically zero".into(),
            passed: nonzero,
            witness: (!nonzero).then(|| "F = 0".into()),
        });
        if nonzero {
            for var in 0..3 {
                let w = one_variable_content(self, var);
                checks.push(Check {
                    name: format!("F has no factor depending only on {}", ["x", "y", "t"][var]),
                    passed: w.is_none(),
                    witness: w,
                });
            }
            for axis in Axis::both() {
                let r = self.singular_locus(axis);
                checks.push(Check {
                    name: format!("generic fiber of axis {} is a smooth genus one curve", axis.index()),
                    passed: r.is_ok(),
                    witness: r.err().map(|e| e.to_string()),
                });
            }
            match self.vertical_lines(Axis::One) {
                Ok(lines) => {
                    checks.push(Check {
                        name: "F has no factor free of y".into(),
                        passed: true,
                        witness: None,
                    });
                    for (x0, t0) in lines {
                        warnings.push(format!("surface contains the line x = {}, t = {}", x0, t0));
                    }
                }
                Err(e) => checks.push(Check {
                    name: "F has no factor free of y".into(),
                    passed: false,
                    witness: Some(e.to_string()),
                }),
            }
        }
        ValidationReport {
            valid: checks.iter().all(|c| c.passed),
            checks,
            warnings,
            chi_degree: CHI_DEGREE,
        }
    }

    /// `Ok(self)` if valid, otherwise the first failing check.
    pub fn validated(self) -> Result<Self, SurfaceError> {
        let report = self.validate();
        match report.first_failure() {
            None => Ok(self),
            Some(c) => Err(SurfaceError::Invalid {
                check: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            }),
        }
    }
}
