//! The discrete Laplace transform `L_{b,c;n}` and the elements `Q_{b,k}`.
//!
//! Polynomials in `z = q^n` and `q` are sent to polynomials in `q` and a formal
//! symbol `t` standing for `q^{c^2/b}`: `z^a` goes to `t^{-a_1^2}` when
//! `a = c a_1` and to zero otherwise. At a root `xi` of odd order `r` with
//! `gcd(r, b) = c`, `t` is evaluated to `xi^{c b_1^*}` where `b_1 = b/c` and
//! `b_1 b_1^* = 1 mod r/c`.

mod identities;
mod qbk;

use alloc::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

pub use identities::{andrews_check, closed_form_check, rr_check, rr_sides, AndrewsParams};
pub use qbk::{q_bk, q_bk_unit, verify_q_bk, verify_q_bk_root, QbkElement, QbkValue, RootOutcome};

use crate::cyclo::{gauss_sum, CycNumber, RootSpec};
use crate::qcalc::{BivariatePoly, LaurentPoly};
use crate::{Error, Rational, Result};

/// Laurent polynomial in `q` and `t = q^{c^2/b}`, keys `(q-exponent, t-exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracPoly {
    b: i64,
    c: u64,
    terms: BTreeMap<(i64, i64), Rational>,
}

impl FracPoly {
    pub fn zero(b: i64, c: u64) -> Self {
        Self { b, c, terms: BTreeMap::new() }
    }

    pub fn monomial(b: i64, c: u64, coeff: Rational, q_exp: i64, t_exp: i64) -> Self {
        let mut p = Self::zero(b, c);
        p.add_term(q_exp, t_exp, coeff);
        p
    }

    /// Embeds a q-integral Laurent polynomial (no `t`).
    pub fn from_laurent(b: i64, c: u64, f: &LaurentPoly) -> Result<Self> {
        if !f.has_integral_q_powers() {
            return Err(Error::InvalidArgument("fractional power of q".into()));
        }
        let mut p = Self::zero(b, c);
        for (e, x) in f.terms() {
            p.add_term(e / 4, 0, x.clone());
        }
        Ok(p)
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn add_term(&mut self, q_exp: i64, t_exp: i64, x: Rational) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry((q_exp, t_exp)).or_insert_with(Rational::zero);
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Rational)> + '_ {
        self.terms.iter().map(|(k, x)| (*k, x))
    }

    pub fn coeff(&self, q_exp: i64, t_exp: i64) -> Rational {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_else(Rational::zero)
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, e), x) in &other.terms {
            out.add_term(*i, *e, x.clone());
        }
        out
    }

    pub fn scale(&self, x: &Rational) -> Self {
        let mut out = Self::zero(self.b, self.c);
        for ((i, e), y) in &self.terms {
            out.add_term(*i, *e, y * x);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.b, self.c);
        for ((i, e), x) in &self.terms {
            for ((j, f), y) in &other.terms {
                out.add_term(i + j, e + f, x * y);
            }
        }
        out
    }

    /// For `|b| = 1` the symbol `t` is `q^{b}`; folds it into `q` (as `v`-exponents).
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.b.abs() != 1 || self.c != 1 {
            return None;
        }
        let mut out = LaurentPoly::zero();
        for ((i, e), x) in &self.terms {
            out.add_term(4 * (i + self.b * e), x.clone());
        }
        Some(out)
    }
}

/// Exponent `s` with `t -> xi^s` (in units of `zeta_r`), checking `gcd(r, b) = c`.
pub(crate) fn t_exponent(b: i64, c: u64, xi: RootSpec) -> Result<u64> {
    let r = xi.m;
    let g = r.gcd(&b.unsigned_abs());
    if r.is_multiple_of(2) || g != c {
        return Err(Error::BadRootForTransform { order: r, gcd: g, expected: c });
    }
    let r1 = (r / c) as i128;
    let b1 = (b / c as i64) as i128;
    let b1_inv = if r1 == 1 { 0 } else { b1.extended_gcd(&r1).x.rem_euclid(r1) };
    Ok(((c as i128 * b1_inv * xi.j as i128).rem_euclid(r as i128)) as u64)
}

/// `L_{b,c;n}(f)`; `f` must have integral powers of `q`.
pub fn laplace(f: &BivariatePoly, b: i64, c: u64) -> Result<FracPoly> {
    if b == 0 || c == 0 {
        return Err(Error::InvalidArgument("b and c must be nonzero".into()));
    }
    if !f.has_integral_q_powers() {
        return Err(Error::InvalidArgument("fractional power of q".into()));
    }
    let mut out = FracPoly::zero(b, c);
    let c = c as i64;
    for ((ve, a), x) in f.terms() {
        if a % c == 0 {
            let a1 = a / c;
            out.add_term(ve / 4, -a1 * a1, Rational::from_integer(x.clone()));
        }
    }
    Ok(out)
}

/// `ev_xi` with `q -> xi` and `t -> xi^{c b_1^*}`.
pub fn ev_frac(x: &FracPoly, xi: RootSpec) -> Result<CycNumber> {
    let s = t_exponent(x.b, x.c, xi)? as i128;
    let r = xi.m as i128;
    let mut buf = alloc::vec![Rational::zero(); xi.m as usize];
    for ((i, e), y) in &x.terms {
        let k = (*i as i128 * xi.j as i128 + *e as i128 * s).rem_euclid(r);
        buf[k as usize] += y;
    }
    Ok(CycNumber::from_poly(xi.m, &buf))
}

/// `sum_{n odd, 0<n<2r} xi^{b(n^2-1)/4} f(xi^n, xi)`, computed directly.
pub fn gauss_weighted_sum(f: &BivariatePoly, b: i64, xi: RootSpec) -> Result<CycNumber> {
    if !f.has_integral_q_powers() || xi.m.is_multiple_of(2) {
        return Err(Error::InvalidArgument("need integral q-powers and an odd root".into()));
    }
    let r = xi.m as i128;
    let j = xi.j as i128;
    let mut buf = alloc::vec![Rational::zero(); xi.m as usize];
    for n in (1..2 * r).step_by(2) {
        let base = b as i128 * ((n * n - 1) / 4);
        for ((ve, a), x) in f.terms() {
            let e = ((base + ve as i128 / 4 + a as i128 * n) * j).rem_euclid(r);
            buf[e as usize] += Rational::from_integer(x.clone());
        }
    }
    Ok(CycNumber::from_poly(xi.m, &buf))
}

/// Checks `sum^xi q^{b(n^2-1)/4} f = gamma_b(xi) ev_xi(L_{b,c;n} f)` at `xi`.
pub fn verify_laplace_lemma_at(f: &BivariatePoly, b: i64, xi: RootSpec) -> Result<bool> {
    let c = xi.m.gcd(&b.unsigned_abs());
    let lhs = gauss_weighted_sum(f, b, xi)?;
    let rhs = &gauss_sum(b, xi)? * &ev_frac(&laplace(f, b, c)?, xi)?;
    Ok(lhs == rhs)
}

/// [`verify_laplace_lemma_at`] for every primitive root of the odd order `r`.
pub fn verify_laplace_lemma(f: &BivariatePoly, b: i64, r: u64) -> Result<bool> {
    if r.is_multiple_of(2) {
        return Err(Error::InvalidArgument("root order must be odd".into()));
    }
    for j in 1..r.max(2) {
        if (j.gcd(&r) == 1 || r == 1)
            && !verify_laplace_lemma_at(f, b, RootSpec::new(r, j)?)? {
                return Ok(false);
            }
    }
    Ok(true)
}
