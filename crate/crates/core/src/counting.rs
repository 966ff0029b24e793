//! Point counts over several primes, counting polynomials and Euler characteristics.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::census::enumerate_subreps;
use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::quiver::DimVector;
use crate::representation::Representation;

/// Integer polynomial in `q`, coefficients from the constant term upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coefficients: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Degree, with the zero polynomial given degree 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &q + c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one() && power > 0;
            if !unit {
                write!(f, "{abs}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{power}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingPolynomial {
    pub polynomial: Polynomial,
    /// `(q, |Gr_e(M)(F_q)|)` used for interpolation.
    pub samples: Vec<(u32, u64)>,
    /// The extra sample the interpolant was checked against.
    pub check: (u32, u64),
    /// Value at `q = 1`.
    pub euler_characteristic: BigInt,
    /// Degree of the interpolant. Advisory only.
    pub estimated_dimension: usize,
}

/// `|Gr_e(M)(F_p)|` for a representation with rational entries.
pub fn point_count(m: &Representation<Rationals>, e: &DimVector, p: u32) -> Result<u64> {
    let reduced = m.reduce_mod_p(p)?;
    Ok(enumerate_subreps(&reduced, e)?.len() as u64)
}

/// Interpolates the point counts at all but the last prime and checks the result
/// against the last one.
pub fn counting_polynomial(
    m: &Representation<Rationals>,
    e: &DimVector,
    primes: &[u32],
) -> Result<CountingPolynomial> {
    if primes.len() < 3 {
        return Err(Error::TooFewSamples {
            needed: 3,
            got: primes.len(),
        });
    }
    let counts = primes
        .iter()
        .map(|&p| Ok((p, point_count(m, e, p)?)))
        .collect::<Result<Vec<_>>>()?;
    let (samples, check) = counts.split_at(counts.len() - 1);
    let check = check[0];
    let not_polynomial = || Error::NotPolynomial {
        counts: counts.clone(),
    };
    let polynomial = interpolate(samples).ok_or_else(not_polynomial)?;
    if polynomial.eval(i64::from(check.0)) != BigInt::from(check.1) {
        return Err(not_polynomial());
    }
    Ok(CountingPolynomial {
        euler_characteristic: polynomial.eval(1),
        estimated_dimension: polynomial.degree(),
        polynomial,
        samples: samples.to_vec(),
        check,
    })
}

/// Lagrange interpolation; `None` unless every coefficient is an integer.
fn interpolate(samples: &[(u32, u64)]) -> Option<Polynomial> {
    let n = samples.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, &(xi, yi)) in samples.iter().enumerate() {
        // ∏_{j≠i} (X − x_j)/(x_i − x_j), built up coefficient by coefficient.
        let mut basis = vec![BigRational::one()];
        for (j, &(xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(BigInt::from(i64::from(xi) - i64::from(xj)));
            let root = BigRational::from_integer(BigInt::from(xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c / &denom;
                next[k] -= c * &root / &denom;
            }
            basis = next;
        }
        let y = BigRational::from_integer(BigInt::from(yi));
        for (k, c) in basis.into_iter().enumerate() {
            acc[k] += c * &y;
        }
    }
    let ints = acc
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<Vec<_>>>()?;
    Some(Polynomial::new(ints))
}
