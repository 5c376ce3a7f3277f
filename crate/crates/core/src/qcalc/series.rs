use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

/// Truncated power series `sum_{i < order} c_i x^i`, exact modulo `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: alloc::vec![Rational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// Truncates (or zero-pads) the given coefficients to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order, Rational::zero());
        Self { coeffs }
    }

    /// `c x^e` modulo `x^order`.
    pub fn monomial(order: usize, c: Rational, e: usize) -> Self {
        let mut s = Self::zero(order);
        if e < order {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c0inv = self.coeffs[0].recip();
        let mut inv = alloc::vec![Rational::zero(); n];
        inv[0] = c0inv.clone();
        for i in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[i - j];
                }
            }
            inv[i] = -acc * &c0inv;
        }
        Ok(Self { coeffs: inv })
    }

    fn common(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common(rhs);
        PowerSeries { coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common(rhs);
        PowerSeries { coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common(rhs);
        let mut out = alloc::vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}
