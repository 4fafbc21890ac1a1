//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients. Used for chromatic polynomials, Poincare polynomials and
//! Hilbert series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Polynomial in one variable `t`; `coeffs[i]` is the coefficient of `t^i`.
/// The trailing coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// The linear polynomial `a + b*t`.
    pub fn linear(a: i64, b: i64) -> Self {
        IntPolynomial::from_i64s(&[a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `t (t-1) (t-2) ... (t-k+1)`, the chromatic polynomial of a complete
    /// graph on `k` vertices.
    pub fn falling_factorial(k: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for j in 0..k {
            acc = &acc * &IntPolynomial::linear(-(j as i64), 1);
        }
        acc
    }

    /// All coefficients as decimal strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders like `1 + 6t + 13t^2 + 12t^3 + 4t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
