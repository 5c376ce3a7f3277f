use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;
use crate::Rational;

/// A monomial `v^v_exp z^z_exp` with unit coefficient, where `z` stands for `q^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub v_exp: i64,
    pub z_exp: i64,
}

impl Monomial {
    pub const fn new(v_exp: i64, z_exp: i64) -> Self {
        Self { v_exp, z_exp }
    }

    /// `q^e`.
    pub const fn q(e: i64) -> Self {
        Self::new(4 * e, 0)
    }

    /// `z^a = q^{na}`.
    pub const fn z(a: i64) -> Self {
        Self::new(0, a)
    }
}

/// Laurent polynomial in `v` (with `v^4 = q`) and `z`, integer coefficients.
///
/// Keys are `(v-exponent, z-exponent)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), Monomial::new(0, 0))
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m.v_exp, m.z_exp, c);
        p
    }

    /// Embeds a q-integral Laurent polynomial (as a polynomial free of `z`).
    /// Non-integral coefficients are truncated, so callers must check first.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, 0, c.to_integer());
        }
        out
    }

    pub fn add_term(&mut self, v_exp: i64, z_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((v_exp, z_exp)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(v_exp, z_exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `((v_exp, z_exp), coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff every `v`-exponent is a multiple of 4.
    pub fn has_integral_q_powers(&self) -> bool {
        self.terms.keys().all(|(e, _)| e % 4 == 0)
    }

    /// Substitutes `z := q^n`; a ring homomorphism onto Laurent polynomials.
    pub fn substitute_z(&self, n: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((ve, ze), c) in &self.terms {
            out.add_term(ve + 4 * n * ze, Rational::from_integer(c.clone()));
        }
        out
    }

    /// `z -> z^{-1}`.
    pub fn invert_z(&self) -> Self {
        let mut out = Self::zero();
        for ((ve, ze), c) in &self.terms {
            out.add_term(*ve, -ze, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for ((ve, ze), x) in &self.terms {
            out.add_term(*ve, *ze, x * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Self { terms: self.terms.iter().map(|((ve, ze), c)| ((ve + m.v_exp, ze + m.z_exp), c.clone())).collect() }
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((ve, ze), c) in &rhs.terms {
            out.add_term(*ve, *ze, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((ve, ze), c) in &rhs.terms {
            out.add_term(*ve, *ze, -c.clone());
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((va, za), ca) in &self.terms {
            for ((vb, zb), cb) in &rhs.terms {
                out.add_term(va + vb, za + zb, ca * cb);
            }
        }
        out
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: BivariatePoly) -> BivariatePoly {
        &self + &rhs
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: BivariatePoly) -> BivariatePoly {
        &self - &rhs
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: BivariatePoly) -> BivariatePoly {
        &self * &rhs
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((ve, ze), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut parts: alloc::vec::Vec<alloc::string::String> = alloc::vec::Vec::new();
            if *ve != 0 {
                parts.push(super::laurent::fmt_q_power(*ve));
            }
            if *ze != 0 {
                parts.push(if *ze == 1 { "z".into() } else { alloc::format!("z^{}", ze) });
            }
            if parts.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({})", self)
    }
}
