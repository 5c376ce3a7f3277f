use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Sparse Laurent polynomial in `v`, where `v^4 = q`.
///
/// Coefficients are exact rationals and zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::v_monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c * v^e`.
    pub fn v_monomial(c: Rational, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `c * q^e`.
    pub fn q_monomial(c: Rational, e: i64) -> Self {
        Self::v_monomial(c, 4 * e)
    }

    /// `q^e` with unit coefficient.
    pub fn q_pow(e: i64) -> Self {
        Self::q_monomial(Rational::one(), e)
    }

    /// Builds `sum_i coeffs[i] q^{low + i}`.
    pub fn from_q_coeffs<I: Into<BigInt> + Clone>(low: i64, coeffs: &[I]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(4 * (low + i as i64), Rational::from_integer(c.clone().into()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order of the `v`-exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, v_exp: i64) -> Rational {
        self.terms.get(&v_exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// True iff every exponent is a whole power of `q` and every coefficient is an integer.
    pub fn is_q_integral(&self) -> bool {
        self.terms.iter().all(|(e, c)| e % 4 == 0 && c.is_integer())
    }

    /// True iff every `v`-exponent is divisible by 4.
    pub fn has_integral_q_powers(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// Dense integer coefficients in `q`, as `(lowest q-exponent, coefficients)`.
    /// `None` unless the polynomial is q-integral.
    pub fn q_integer_coeffs(&self) -> Option<(i64, Vec<BigInt>)> {
        if !self.is_q_integral() {
            return None;
        }
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Some((0, Vec::new()));
        };
        let mut out = alloc::vec![BigInt::zero(); ((hi - lo) / 4 + 1) as usize];
        for (e, c) in &self.terms {
            out[((e - lo) / 4) as usize] = c.to_integer();
        }
        Some((lo / 4, out))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by `v^e`.
    pub fn shift_v(&self, e: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect() }
    }

    /// Multiplies by `q^e`.
    pub fn shift_q(&self, e: i64) -> Self {
        self.shift_v(4 * e)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v -> v^m` (equivalently `q -> q^m`); `m` may be negative.
    pub fn substitute_power(&self, m: i64) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term(e * m, c.clone());
        }
        p
    }

    /// Reverses `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Evaluates at `q = 1` (and `v = 1`).
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Exact quotient `self / divisor`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        exact_div(self, divisor)
    }
}

/// Exact division of Laurent polynomials over the rationals.
///
/// Fails with [`Error::NotDivisible`] when `b` does not divide `a`, and with
/// [`Error::DivisionByZero`] when `b = 0`.
pub fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let (Some(bmin), Some(bmax)) = (b.min_exp(), b.max_exp()) else {
        return Err(Error::DivisionByZero);
    };
    let (Some(amin), Some(amax)) = (a.min_exp(), a.max_exp()) else {
        return Ok(LaurentPoly::zero());
    };
    // Both operands live on cosets of a common sublattice g*Z of exponents.
    let mut g: i64 = 0;
    for e in a.terms.keys() {
        g = g.gcd(&(e - amin));
    }
    for e in b.terms.keys() {
        g = g.gcd(&(e - bmin));
    }
    if g == 0 {
        g = 1;
    }
    if amax - bmax < amin - bmin || (amax - amin) % g != 0 || (bmax - bmin) % g != 0 {
        return Err(Error::NotDivisible);
    }
    let da = ((amax - amin) / g) as usize;
    let db = ((bmax - bmin) / g) as usize;
    let mut rem: Vec<Rational> = alloc::vec![Rational::zero(); da + 1];
    for (e, c) in &a.terms {
        rem[((e - amin) / g) as usize] = c.clone();
    }
    let mut den: Vec<Rational> = alloc::vec![Rational::zero(); db + 1];
    for (e, c) in &b.terms {
        den[((e - bmin) / g) as usize] = c.clone();
    }
    let lead = den[db].clone();
    let dq = da - db;
    let mut quot = LaurentPoly::zero();
    for i in (0..=dq).rev() {
        let c = &rem[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[i + j] -= &c * d;
            }
        }
        quot.add_term(amin - bmin + g * i as i64, c);
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotDivisible);
    }
    Ok(quot)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

/// Writes `q^e` for a `v`-exponent, e.g. `q^3`, `q^-1`, `q^(3/4)`.
pub(crate) fn fmt_q_power(v_exp: i64) -> String {
    use alloc::format;
    let r = Rational::new(v_exp.into(), 4.into());
    if r.is_integer() {
        match v_exp / 4 {
            1 => String::from("q"),
            e => format!("q^{}", e),
        }
    } else {
        format!("q^({})", r)
    }
}

/// Canonical text: ascending exponents, `-q^-1 + 2 + q^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if *e == 0 {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                f.write_str(&fmt_q_power(*e))?;
            } else {
                write!(f, "{}*{}", abs, fmt_q_power(*e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}
