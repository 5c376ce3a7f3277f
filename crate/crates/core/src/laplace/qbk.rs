//! `Q_{b,k}`: the Laplace image of `A(n,k)` divided by that of `[n]^2`.
//!
//! `Q_{b,k} = L(N_k) (q + q^{-1} - 2) / ((1-q)(q^{k+1};q)_{k+1} L(z + z^{-1} - 2))`
//! where `N_k = prod_{i<=k} (z + z^{-1} - q^i - q^{-i})`. The quotient is taken
//! after tying `t` to `q` through `t^{b_1} = q^c`, which holds at every root the
//! transform is evaluated at:
//! - `gcd(c, b_1) = 1`: one variable `u` with `q = u^{b_1}`, `t = u^c`;
//! - `b_1 | c`: `t = zeta q^{c/b_1}` with `zeta` a primitive `|b_1|`-th root of unity.
//!
//! Anything else keeps the formal fraction.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::One;

use super::{ev_frac, laplace, FracPoly};
use crate::cyclo::{CycNumber, RootSpec};
use crate::qcalc::{a_poly, a_value, qint, BivariatePoly, LaurentPoly};
use crate::{BigInt, Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QbkValue {
    Exact(FracPoly),
    /// Division failed; only evaluation at roots where `den` does not vanish is possible.
    Fraction { num: FracPoly, den: FracPoly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbkElement {
    pub b: i64,
    pub c: u64,
    pub k: u32,
    pub value: QbkValue,
}

impl QbkElement {
    pub fn is_exact(&self) -> bool {
        matches!(self.value, QbkValue::Exact(_))
    }

    pub fn ev(&self, xi: RootSpec) -> Result<CycNumber> {
        match &self.value {
            QbkValue::Exact(p) => ev_frac(p, xi),
            QbkValue::Fraction { num, den } => ev_frac(num, xi)?.checked_div(&ev_frac(den, xi)?),
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `z + z^{-1} - 2`.
fn square_numerator() -> BivariatePoly {
    let mut f = BivariatePoly::zero();
    f.add_term(0, 1, BigInt::one());
    f.add_term(0, -1, BigInt::one());
    f.add_term(0, 0, BigInt::from(-2));
    f
}

fn parts(b: i64, c: u64, k: u32) -> Result<(FracPoly, FracPoly)> {
    let (nk, dk) = a_poly(k);
    let mut qq = FracPoly::zero(b, c);
    qq.add_term(1, 0, int(1));
    qq.add_term(-1, 0, int(1));
    qq.add_term(0, 0, int(-2));
    let num = laplace(&nk, b, c)?.mul(&qq);
    let den = FracPoly::from_laurent(b, c, &dk)?.mul(&laplace(&square_numerator(), b, c)?);
    Ok((num, den))
}

/// `Q_{b,k}` for roots with `gcd(r, b) = c`.
pub fn q_bk(b: i64, c: u64, k: u32) -> Result<QbkElement> {
    if b == 0 || c == 0 || !b.unsigned_abs().is_multiple_of(c) {
        return Err(Error::InvalidArgument(alloc::format!("c = {c} must divide b = {b}")));
    }
    let (num, den) = parts(b, c, k)?;
    let b1 = b / c as i64;
    let ci = c as i64;
    let exact = if b1.gcd(&ci) == 1 {
        divide_coprime(&num, &den, b1, ci)
    } else if ci % b1 == 0 {
        divide_with_root(&num, &den, b1.unsigned_abs(), ci / b1)
    } else {
        None
    };
    let value = match exact {
        Some(p) => QbkValue::Exact(p),
        None => QbkValue::Fraction { num, den },
    };
    Ok(QbkElement { b, c, k, value })
}

/// `Q_{+-1,k}` as a Laurent polynomial in `q`.
pub fn q_bk_unit(b: i64, k: u32) -> Result<LaurentPoly> {
    if b.abs() != 1 {
        return Err(Error::InvalidArgument("b must be +1 or -1".into()));
    }
    match q_bk(b, 1, k)?.value {
        QbkValue::Exact(p) => Ok(p.to_laurent().expect("|b| = 1")),
        QbkValue::Fraction { .. } => Err(Error::NotDivisible),
    }
}

/// `q = u^{b1}`, `t = u^c`; back via `u = q^x t^y` with `x b1 + y c = 1`.
fn divide_coprime(num: &FracPoly, den: &FracPoly, b1: i64, c: i64) -> Option<FracPoly> {
    let to_u = |p: &FracPoly| -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((i, e), x) in p.terms() {
            out.add_term(4 * (b1 * i + c * e), x.clone());
        }
        out
    };
    let quot = to_u(num).exact_div(&to_u(den)).ok()?;
    let g = b1.extended_gcd(&c);
    let (x, y) = if g.gcd == 1 { (g.x, g.y) } else { (-g.x, -g.y) };
    let mut out = FracPoly::zero(num.b(), num.c());
    for (e, a) in quot.terms() {
        if e % 4 != 0 {
            return None;
        }
        let e = e / 4;
        out.add_term(x * e, y * e, a.clone());
    }
    Some(out)
}

/// Dense Laurent polynomial over `Q(zeta_g)`.
struct CycPoly {
    low: i64,
    coeffs: Vec<CycNumber>,
}

impl CycPoly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(CycNumber::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|x| x.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        self
    }

    /// Exact quotient, or `None` when the remainder is nonzero.
    fn exact_div(&self, d: &CycPoly) -> Option<CycPoly> {
        let (a, dc) = (&self.coeffs, &d.coeffs);
        if dc.is_empty() {
            return None;
        }
        if a.is_empty() {
            return Some(CycPoly { low: 0, coeffs: Vec::new() });
        }
        if a.len() < dc.len() {
            return None;
        }
        let inv = dc.last()?.inverse().ok()?;
        let mut rem = a.clone();
        let n = a.len() - dc.len() + 1;
        let mut quot = Vec::with_capacity(n);
        for s in (0..n).rev() {
            let top = &rem[s + dc.len() - 1];
            if top.is_zero() {
                quot.push(CycNumber::zero(1));
                continue;
            }
            let f = top * &inv;
            for (i, y) in dc.iter().enumerate() {
                if !y.is_zero() {
                    rem[s + i] = &rem[s + i] - &(&f * y);
                }
            }
            quot.push(f);
        }
        if !rem.iter().all(CycNumber::is_zero) {
            return None;
        }
        quot.reverse();
        Some(CycPoly { low: self.low - d.low, coeffs: quot }.trim())
    }
}

/// `t = zeta q^{gamma}` with `zeta` of order `g`; back via `zeta = t q^{-gamma}`.
fn divide_with_root(num: &FracPoly, den: &FracPoly, g: u64, gamma: i64) -> Option<FracPoly> {
    let to_u = |p: &FracPoly| -> CycPoly {
        let Some(lo) = p.terms().map(|((i, e), _)| i + gamma * e).min() else {
            return CycPoly { low: 0, coeffs: Vec::new() };
        };
        let hi = p.terms().map(|((i, e), _)| i + gamma * e).max().unwrap_or(lo);
        let mut coeffs = alloc::vec![CycNumber::zero(g); (hi - lo + 1) as usize];
        for ((i, e), x) in p.terms() {
            let slot = &mut coeffs[(i + gamma * e - lo) as usize];
            *slot = &*slot + &CycNumber::zeta_pow(g, e).scale(x);
        }
        CycPoly { low: lo, coeffs }.trim()
    };
    let quot = to_u(num).exact_div(&to_u(den))?;
    let mut out = FracPoly::zero(num.b(), num.c());
    for (d, x) in quot.coeffs.iter().enumerate() {
        let e = quot.low + d as i64;
        if x.is_zero() {
            continue;
        }
        let x = if x.order() == g { x.clone() } else { x.lift(g).ok()? };
        for (s, a) in x.coeffs().iter().enumerate() {
            let s = s as i64;
            out.add_term(e - gamma * s, s, a.clone());
        }
    }
    Some(out)
}

/// `sum_{n odd, 0<n<2r} xi^{b(n^2-1)/4} ev_xi(f(n))`.
fn weighted_sum(b: i64, xi: RootSpec, f: impl Fn(i64) -> LaurentPoly) -> Result<CycNumber> {
    let r = xi.m as i64;
    let mut acc = CycNumber::zero(xi.m);
    for n in (1..2 * r).step_by(2) {
        let w = LaurentPoly::q_pow(b * ((n * n - 1) / 4));
        acc = &acc + &crate::cyclo::ev_root(&(&w * &f(n)), xi)?;
    }
    Ok(acc)
}

/// Outcome of the per-root identity for `Q_{b,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootOutcome {
    Holds,
    Fails,
    /// `Q` is a formal fraction whose denominator vanishes at the root.
    Undefined,
}

/// Checks `ev_xi(Q_{b,k}) F_{U^b}(xi) = sum^xi q^{b(n^2-1)/4} A(n,k)` with both
/// sums computed directly from `A(n,k)` and `[n]^2`.
pub fn verify_q_bk_root(q: &QbkElement, xi: RootSpec) -> Result<RootOutcome> {
    let value = match q.ev(xi) {
        Ok(x) => x,
        Err(Error::DivisionByZero) => return Ok(RootOutcome::Undefined),
        Err(e) => return Err(e),
    };
    let lhs = weighted_sum(q.b, xi, |n| a_value(n, q.k))?;
    let f = weighted_sum(q.b, xi, |n| qint(n).pow(2))?;
    Ok(if &value * &f == lhs { RootOutcome::Holds } else { RootOutcome::Fails })
}

/// [`verify_q_bk_root`] at every primitive root of every odd order `3 <= r <= r_max`.
pub fn verify_q_bk(b: i64, k: u32, r_max: u64) -> Result<Vec<(RootSpec, RootOutcome)>> {
    let mut cache: Vec<QbkElement> = Vec::new();
    let mut out = Vec::new();
    for r in (3..=r_max).step_by(2) {
        let c = r.gcd(&b.unsigned_abs());
        if !cache.iter().any(|q| q.c == c) {
            cache.push(q_bk(b, c, k)?);
        }
        let q = cache.iter().find(|q| q.c == c).expect("cached");
        for j in (1..r).filter(|j| j.gcd(&r) == 1) {
            let xi = RootSpec::new(r, j)?;
            out.push((xi, verify_q_bk_root(q, xi)?));
        }
    }
    Ok(out)
}
