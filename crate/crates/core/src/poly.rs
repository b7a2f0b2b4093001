//! Exact univariate integer polynomials with overflow-checked arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring. `i64` arithmetic is checked; `BigInt` never overflows.
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + PartialEq + Ord + Zero + One + CheckedAdd + CheckedSub + CheckedMul + Signed
{
    fn from_u64(n: u64) -> Result<Self>;
}

impl Coeff for i64 {
    fn from_u64(n: u64) -> Result<Self> {
        i64::try_from(n).map_err(|_| Error::Overflow)
    }
}

impl Coeff for BigInt {
    fn from_u64(n: u64) -> Result<Self> {
        Ok(BigInt::from(n))
    }
}

/// Coefficients lowest degree first; no trailing zeros are stored, so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// The default 64-bit polynomial.
pub type IntPolynomial = Poly<i64>;
/// Arbitrary-precision variant.
pub type BigPolynomial = Poly<BigInt>;

impl<C: Coeff> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![C::one()] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = C::one();
        Self { coeffs }
    }

    /// `x^hi + x^(hi-1) + ... + x^lo`.
    pub fn ones_between(lo: usize, hi: usize) -> Self {
        let mut coeffs = vec![C::zero(); hi + 1];
        for c in &mut coeffs[lo..=hi] {
            *c = C::one();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(
                self.coeff(k)
                    .checked_add(&other.coeff(k))
                    .ok_or(Error::Overflow)?,
            );
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(
                self.coeff(k)
                    .checked_sub(&other.coeff(k))
                    .ok_or(Error::Overflow)?,
            );
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(&term).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `x`; fails unless the constant term vanishes.
    pub fn div_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if c.is_zero() => Ok(Self {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(Error::NotDivisibleByX),
        }
    }

    /// Value at an integer point, exactly.
    pub fn eval(&self, x: &C) -> Result<C> {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|a| a.checked_add(c))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Highest degree first, e.g. `x^2+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if !first || neg {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl From<&IntPolynomial> for BigPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        Poly::from_coeffs(p.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

/// Binomial coefficient with overflow detection.
pub fn binomial<C: Coeff>(n: usize, k: usize) -> Result<C> {
    if k > n {
        return Ok(C::zero());
    }
    let k = k.min(n - k);
    // exact running product: C(n, i+1) = C(n, i) * (n-i) / (i+1)
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow)?
            / (i as u128 + 1);
    }
    C::from_u64(u64::try_from(acc).map_err(|_| Error::Overflow)?)
}
