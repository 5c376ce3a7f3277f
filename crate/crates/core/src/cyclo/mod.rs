//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Elements are kept in the power basis `1, zeta, ..., zeta^{phi(m)-1}`.

mod field;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use field::{CycField, CycInt};

use crate::qcalc::{cyclotomic_coeffs, euler_phi, factorize, LaurentPoly};
use crate::{Error, Rational, Result};

/// A primitive root `zeta_m^j` with `gcd(j, m) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSpec {
    pub m: u64,
    pub j: u64,
}

impl RootSpec {
    pub fn new(m: u64, j: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("root order must be positive".into()));
        }
        let j = j % m;
        if j.gcd(&m) != 1 && m != 1 {
            return Err(Error::InvalidArgument(alloc::format!("exponent {j} is not coprime to {m}")));
        }
        Ok(Self { m, j: if m == 1 { 0 } else { j } })
    }

    pub fn primitive(m: u64) -> Self {
        Self::new(m, 1).expect("j = 1 is always coprime")
    }

    /// The root `xi^c` as a root of order `m / gcd(m, c)`.
    pub fn power(&self, c: i64) -> Self {
        let g = (c.unsigned_abs()).gcd(&self.m).max(1);
        let m = self.m / g;
        let e = (c as i128 * self.j as i128).rem_euclid(self.m as i128) as u64 / g;
        Self::new(m, e).expect("power of a primitive root is primitive of its order")
    }

    /// How `v = q^{1/4}` is evaluated: `v -> zeta_M^t`, returned as `(M, t)`.
    ///
    /// Odd `m` uses `xi^{((m+1)/2)^2}`; even `m` moves to `Q(zeta_{4m})`.
    pub fn v_image(&self) -> (u64, u64) {
        if self.m % 2 == 1 {
            let h = (self.m as u128).div_ceil(2);
            let e = (self.j as u128 * (h * h % self.m as u128)) % self.m as u128;
            (self.m, e as u64)
        } else {
            (4 * self.m, self.j)
        }
    }
}

/// An element of `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct CycNumber {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    pub fn zero(order: u64) -> Self {
        Self { order, coeffs: alloc::vec![Rational::zero(); euler_phi(order) as usize] }
    }

    pub fn from_rational(order: u64, c: Rational) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[0] = c;
        x
    }

    pub fn from_int(order: u64, c: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(c.into()))
    }

    pub fn one(order: u64) -> Self {
        Self::from_int(order, 1)
    }

    /// Reduces `sum_i c_i zeta_m^i` for an arbitrary coefficient list.
    pub fn from_poly(order: u64, coeffs: &[Rational]) -> Self {
        let phi = euler_phi(order) as usize;
        let modulus = cyclotomic_coeffs(order);
        let mut buf: Vec<Rational> = coeffs.to_vec();
        // exponents are taken mod m first
        if buf.len() > order as usize {
            let mut folded = alloc::vec![Rational::zero(); order as usize];
            for (i, c) in buf.iter().enumerate() {
                folded[i % order as usize] += c;
            }
            buf = folded;
        }
        reduce_rational(&mut buf, &modulus[..phi]);
        buf.resize(phi, Rational::zero());
        Self { order, coeffs: buf }
    }

    /// Builds from power-basis coefficients, which must have length `phi(m)`.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 || coeffs.len() != euler_phi(order) as usize {
            return Err(Error::InvalidArgument("coefficient count must equal phi(order)".into()));
        }
        Ok(Self { order, coeffs })
    }

    /// `c * zeta_m^e`.
    pub fn zeta_pow(order: u64, e: i64) -> Self {
        let e = e.rem_euclid(order as i64) as usize;
        let mut buf = alloc::vec![Rational::zero(); e + 1];
        buf[e] = Rational::one();
        Self::from_poly(order, &buf)
    }

    pub fn from_cyc_int(x: &CycInt) -> Self {
        let order = x.field().order();
        Self { order, coeffs: x.coeffs().iter().map(|c| Rational::from_integer(BigInt::from(*c))).collect() }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(c)` if the element is the rational `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image in `Q(zeta_n)` for a multiple `n` of the order.
    pub fn lift(&self, n: u64) -> Result<Self> {
        if !n.is_multiple_of(self.order) {
            return Err(Error::InvalidArgument(alloc::format!("{n} is not a multiple of {}", self.order)));
        }
        if n == self.order {
            return Ok(self.clone());
        }
        let step = (n / self.order) as usize;
        let mut buf = alloc::vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            buf[i * step] = c.clone();
        }
        Ok(Self::from_poly(n, &buf))
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let n = self.order.lcm(&other.order);
        (self.lift(n).expect("lcm"), other.lift(n).expect("lcm"))
    }

    /// The automorphism `zeta_m -> zeta_m^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: u64) -> Result<Self> {
        if self.order > 1 && k.gcd(&self.order) != 1 {
            return Err(Error::InvalidArgument(alloc::format!("{k} is not a unit mod {}", self.order)));
        }
        let m = self.order as usize;
        let mut buf = alloc::vec![Rational::zero(); m.max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            buf[(i * k as usize) % m.max(1)] += c;
        }
        Ok(Self::from_poly(self.order, &buf))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended gcd with `Phi_m`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = self.coeffs.len();
        let modulus: Vec<Rational> =
            cyclotomic_coeffs(self.order).into_iter().map(Rational::from_integer).collect();
        // Invariant: r0 = s0 * x (mod Phi), r1 = s1 * x (mod Phi).
        let mut r0 = modulus;
        let mut s0: Vec<Rational> = Vec::new();
        let mut r1 = trim(self.coeffs.clone());
        let mut s1 = alloc::vec![Rational::one()];
        while r1.len() > 1 {
            let (quot, rem) = divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
        }
        let c = r1[0].clone();
        let mut out: Vec<Rational> = s1.into_iter().map(|x| x / &c).collect();
        out.resize(out.len().max(phi), Rational::zero());
        Ok(Self::from_poly(self.order, &out))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Norm down to `Q`.
    pub fn norm(&self) -> Rational {
        let mut acc = Self::one(self.order);
        for k in 1..=self.order.max(1) {
            if self.order == 1 || k.gcd(&self.order) == 1 {
                acc = &acc * &self.galois(k).expect("unit");
            }
            if self.order == 1 {
                break;
            }
        }
        acc.as_rational().expect("norm is rational")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = alloc::vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") / &lead;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Reduces modulo the monic polynomial whose lower coefficients are `low`.
fn reduce_rational(buf: &mut Vec<Rational>, low: &[BigInt]) {
    let phi = low.len();
    for d in (phi..buf.len()).rev() {
        let c = core::mem::take(&mut buf[d]);
        if c.is_zero() {
            continue;
        }
        for (i, m) in low.iter().enumerate() {
            if !m.is_zero() {
                buf[d - phi + i] -= &c * m;
            }
        }
    }
    buf.truncate(phi);
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, other: &CycNumber) -> CycNumber {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, other: &CycNumber) -> CycNumber {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, other: &CycNumber) -> CycNumber {
        let (a, b) = self.common(other);
        let mut buf = alloc::vec![Rational::zero(); 2 * a.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    buf[i + j] += x * y;
                }
            }
        }
        CycNumber::from_poly(a.order, &buf)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for CycNumber {
            type Output = CycNumber;
            fn $f(self, other: CycNumber) -> CycNumber { (&self).$f(&other) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl core::iter::Sum for CycNumber {
    fn sum<I: Iterator<Item = CycNumber>>(iter: I) -> Self {
        iter.fold(CycNumber::zero(1), |a, b| &a + &b)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let z = match i {
                0 => String::new(),
                1 => alloc::format!("e{}", self.order),
                _ => alloc::format!("e{}^{}", self.order, i),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&z)?;
            } else {
                write!(f, "{mag}*{z}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `ev_xi`: replace `q` by `zeta_m^j`.
///
/// Fractional powers of `q` need odd `m`; see [`RootSpec::v_image`].
pub fn ev_root(f: &LaurentPoly, xi: RootSpec) -> Result<CycNumber> {
    if f.has_integral_q_powers() {
        let mut buf = alloc::vec![Rational::zero(); xi.m as usize];
        for (e, c) in f.terms() {
            let k = ((e / 4) as i128 * xi.j as i128).rem_euclid(xi.m as i128) as usize;
            buf[k] += c;
        }
        return Ok(CycNumber::from_poly(xi.m, &buf));
    }
    if xi.m.is_multiple_of(2) {
        return Err(Error::FractionalPowerAtEvenOrder { order: xi.m });
    }
    ev_v(f, xi)
}

/// Evaluates at the root, placing fractional powers of `q` via [`RootSpec::v_image`].
/// For even `m` the result lives in `Q(zeta_{4m})`.
pub fn ev_v(f: &LaurentPoly, xi: RootSpec) -> Result<CycNumber> {
    let (order, t) = xi.v_image();
    let mut buf = alloc::vec![Rational::zero(); order as usize];
    for (e, c) in f.terms() {
        let k = (e as i128 * t as i128).rem_euclid(order as i128) as usize;
        buf[k] += c;
    }
    Ok(CycNumber::from_poly(order, &buf))
}

/// `gamma_b(xi) = sum_{n odd, 0<n<2m} xi^{b (n^2-1)/4}` for odd `m`.
pub fn gauss_sum(b: i64, xi: RootSpec) -> Result<CycNumber> {
    if xi.m.is_multiple_of(2) {
        return Err(Error::InvalidArgument("Gauss sum needs an odd root order".into()));
    }
    let m = xi.m as i128;
    let mut buf = alloc::vec![Rational::zero(); xi.m as usize];
    for n in (1..2 * m).step_by(2) {
        let e = (b as i128 * ((n * n - 1) / 4)).rem_euclid(m) * xi.j as i128 % m;
        buf[e as usize] += Rational::one();
    }
    Ok(CycNumber::from_poly(xi.m, &buf))
}

/// Whether all coefficients lie in `Z[1/b]`.
pub fn is_integral(x: &CycNumber, b: u64) -> bool {
    let primes: Vec<u64> = factorize(b.max(1)).into_iter().map(|(p, _)| p).collect();
    x.coeffs.iter().all(|c| {
        let mut d = c.denom().abs();
        for p in &primes {
            let p = BigInt::from(*p);
            while (&d % &p).is_zero() {
                d /= &p;
            }
        }
        d.is_one()
    })
}
