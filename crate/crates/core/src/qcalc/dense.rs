//! Dense Laurent polynomials with `i128` coefficients and checked arithmetic.
//!
//! This is the fast path used by the state sum and by the cyclotomic
//! expansion solver. Every operation reports overflow instead of wrapping.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::LaurentPoly;
use crate::{Error, Rational, Result};

const WHERE: &str = "dense polynomial arithmetic";

fn ovf() -> Error {
    Error::Overflow(WHERE)
}

/// `sum_i coeffs[i] x^{low + i}`; trimmed so that both ends are nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly {
    low: i64,
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i128, e: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: e, coeffs: alloc::vec![c] }
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<i128>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> i128 {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    fn trim(&mut self) {
        let Some(first) = self.coeffs.iter().position(|c| *c != 0) else {
            self.coeffs.clear();
            self.low = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|c| *c != 0).unwrap();
        if first > 0 || last + 1 < self.coeffs.len() {
            self.coeffs = self.coeffs[first..=last].to_vec();
            self.low += first as i64;
        }
    }

    pub fn shift(&self, e: i64) -> Self {
        Self { low: if self.is_zero() { 0 } else { self.low + e }, coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: i128) -> Result<()> {
        if other.is_zero() || factor == 0 {
            return Ok(());
        }
        if self.is_zero() {
            self.low = other.low;
            self.coeffs = alloc::vec![0; other.coeffs.len()];
        }
        self.grow_to(other.low, other.high());
        let off = (other.low - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            let t = c.checked_mul(factor).ok_or_else(ovf)?;
            let slot = &mut self.coeffs[off + i];
            *slot = slot.checked_add(t).ok_or_else(ovf)?;
        }
        self.trim();
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    fn grow_to(&mut self, lo: i64, hi: i64) {
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut v = alloc::vec![0; pad];
            v.extend_from_slice(&self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let need = (hi - self.low + 1) as usize;
        if need > self.coeffs.len() {
            self.coeffs.resize(need, 0);
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = alloc::vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b == 0 {
                    continue;
                }
                let t = a.checked_mul(*b).ok_or_else(ovf)?;
                out[i + j] = out[i + j].checked_add(t).ok_or_else(ovf)?;
            }
        }
        Ok(Self::from_coeffs(self.low + other.low, out))
    }

    /// `self += a * b` without materializing the product.
    pub fn add_product(&mut self, a: &Self, b: &Self) -> Result<()> {
        if a.is_zero() || b.is_zero() {
            return Ok(());
        }
        let lo = a.low + b.low;
        let hi = a.high() + b.high();
        if self.is_zero() {
            self.low = lo;
            self.coeffs = alloc::vec![0; (hi - lo + 1) as usize];
        } else {
            self.grow_to(lo, hi);
        }
        let off = (lo - self.low) as usize;
        for (i, x) in a.coeffs.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            let row = &mut self.coeffs[off + i..];
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = x.checked_mul(*y).ok_or_else(ovf)?;
                row[j] = row[j].checked_add(t).ok_or_else(ovf)?;
            }
        }
        self.trim();
        Ok(())
    }

    /// `self * (1 - x^e)` for `e > 0`.
    pub fn mul_one_minus(&self, e: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = self.coeffs.clone();
        out.resize(self.coeffs.len() + e, 0);
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + e] = out[i + e].checked_sub(*c).ok_or_else(ovf)?;
        }
        Ok(Self::from_coeffs(self.low, out))
    }

    /// `self / (1 - x^e)` for `e > 0`; [`Error::NotDivisible`] if not exact.
    pub fn div_one_minus(&self, e: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        if n <= e {
            return Err(Error::NotDivisible);
        }
        let mut quot = alloc::vec![0i128; n - e];
        for t in 0..n - e {
            let back = if t >= e { quot[t - e] } else { 0 };
            quot[t] = self.coeffs[t].checked_add(back).ok_or_else(ovf)?;
        }
        // the top e coefficients must match -quot shifted by e
        for t in n - e..n {
            let back = if t >= e { quot[t - e] } else { 0 };
            if self.coeffs[t].checked_add(back).ok_or_else(ovf)? != 0 {
                return Err(Error::NotDivisible);
            }
        }
        Ok(Self::from_coeffs(self.low, quot))
    }

    /// Exact quotient with integer coefficients; [`Error::NotDivisible`] otherwise.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        let m = d.coeffs.len();
        if n < m {
            return Err(Error::NotDivisible);
        }
        let lead = *d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![0i128; n - m + 1];
        for i in (0..=n - m).rev() {
            let top = rem[i + m - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(Error::NotDivisible);
            }
            let c = top / lead;
            quot[i] = c;
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = c.checked_mul(*dj).ok_or_else(ovf)?;
                rem[i + j] = rem[i + j].checked_sub(t).ok_or_else(ovf)?;
            }
        }
        if rem.iter().any(|c| *c != 0) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(self.low - d.low, quot))
    }

    /// Reads the variable as `v` (so exponents are `v`-exponents).
    pub fn to_laurent_in_v(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(self.low + i as i64, Rational::from_integer(BigInt::from(*c)));
        }
        p
    }

    /// Reads the variable as `q`.
    pub fn to_laurent_in_q(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(4 * (self.low + i as i64), Rational::from_integer(BigInt::from(*c)));
        }
        p
    }

    /// Inverse of [`IntPoly::to_laurent_in_q`]; `None` unless q-integral and in range.
    pub fn from_laurent_in_q(p: &LaurentPoly) -> Option<Self> {
        let (low, cs) = p.q_integer_coeffs()?;
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            out.push(i128::try_from(c).ok()?);
        }
        Some(Self::from_coeffs(low, out))
    }

    /// Inverse of [`IntPoly::to_laurent_in_v`]; `None` unless integral and in range.
    pub fn from_laurent_in_v(p: &LaurentPoly) -> Option<Self> {
        let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
            return Some(Self::zero());
        };
        let mut out = alloc::vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            if !c.is_integer() {
                return None;
            }
            out[(e - lo) as usize] = i128::try_from(c.to_integer()).ok()?;
        }
        Some(Self::from_coeffs(lo, out))
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_minus_factors() {
        let p = IntPoly::from_coeffs(-2, alloc::vec![3, 0, -1, 5]);
        for e in 1..5 {
            let m = p.mul_one_minus(e).unwrap();
            assert_eq!(m, p.mul(&IntPoly::from_coeffs(0, {
                let mut v = alloc::vec![0; e + 1];
                v[0] = 1;
                v[e] = -1;
                v
            })).unwrap());
            assert_eq!(m.div_one_minus(e).unwrap(), p);
        }
        assert_eq!(p.div_one_minus(2), Err(Error::NotDivisible));
    }

    #[test]
    fn multiply_and_divide() {
        let a = IntPoly::from_coeffs(0, alloc::vec![1, -1]); // 1 - x
        let b = IntPoly::from_coeffs(0, alloc::vec![1, 0, -1]); // 1 - x^2
        let p = a.mul(&b).unwrap();
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(a.exact_div(&b), Err(Error::NotDivisible));
        let two = IntPoly::monomial(2, 0);
        assert_eq!(a.exact_div(&two), Err(Error::NotDivisible));
    }

    #[test]
    fn overflow_is_reported() {
        let big = IntPoly::monomial(i128::MAX / 2, 0);
        assert!(matches!(big.mul(&big), Err(Error::Overflow(_))));
    }

    #[test]
    fn add_product_matches_mul() {
        let a = IntPoly::from_coeffs(-2, alloc::vec![3, 0, -1, 4]);
        let b = IntPoly::from_coeffs(5, alloc::vec![1, 2]);
        let mut acc = IntPoly::monomial(7, 1);
        acc.add_product(&a, &b).unwrap();
        let expect = a.mul(&b).unwrap().add(&IntPoly::monomial(7, 1)).unwrap();
        assert_eq!(acc, expect);
    }
}
