//! Exact Laurent polynomials and q-calculus symbols.
//!
//! The base variable is `v` with `v^4 = q`, so that framing factors
//! `q^{(n^2-1)/4}` are monomials for every color `n`.

mod bivariate;
mod cyclotomic;
pub mod dense;
mod laurent;
mod series;

use num_bigint::BigInt;
use num_traits::One;

pub use bivariate::{BivariatePoly, Monomial};
pub use cyclotomic::{
    bareiss_det, cyclotomic_coeffs, cyclotomic_poly, cyclotomic_resultant, euler_phi, factorize, is_power_of,
    is_prime, prime_power_ratio, resultant,
};
pub use laurent::{exact_div, LaurentPoly};
pub use series::PowerSeries;

use crate::{Rational, Result};
use dense::IntPoly;

/// The quantum integer `[n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})`.
///
/// `[n] = v^{2(n-1)} + v^{2(n-3)} + ... + v^{-2(n-1)}`, and `[-n] = -[n]`.
pub fn qint(n: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let (sign, n) = if n < 0 { (-1, -n) } else { (1, n) };
    for i in 0..n {
        p.add_term(2 * (n - 1 - 2 * i), Rational::from_integer(sign.into()));
    }
    p
}

/// The q-Pochhammer symbol `(x; q)_k = prod_{j=1}^k (1 - x q^{j-1})`.
pub fn pochhammer(x: Monomial, k: u32) -> BivariatePoly {
    let mut acc = BivariatePoly::one();
    for j in 0..k as i64 {
        let factor = &BivariatePoly::one()
            - &BivariatePoly::monomial(BigInt::one(), Monomial::new(x.v_exp + 4 * j, x.z_exp));
        acc = &acc * &factor;
    }
    acc
}

/// `(q^a; q)_k` as a Laurent polynomial in `q`.
pub fn q_pochhammer(a: i64, k: u32) -> LaurentPoly {
    let one = LaurentPoly::one();
    (0..k as i64).map(|j| &one - &LaurentPoly::q_pow(a + j)).product()
}

/// Numerator and denominator of `A(n,k)` with `z = q^n`:
/// `prod_{i=0}^k (z + z^{-1} - q^i - q^{-i})` over `(1-q) (q^{k+1};q)_{k+1}`.
pub fn a_poly(k: u32) -> (BivariatePoly, LaurentPoly) {
    let mut num = BivariatePoly::one();
    for i in 0..=k as i64 {
        let mut f = BivariatePoly::zero();
        f.add_term(0, 1, BigInt::one());
        f.add_term(0, -1, BigInt::one());
        f.add_term(4 * i, 0, -BigInt::one());
        f.add_term(-4 * i, 0, -BigInt::one());
        num = &num * &f;
    }
    let den = &(&LaurentPoly::one() - &LaurentPoly::q_pow(1)) * &q_pochhammer(k as i64 + 1, k + 1);
    (num, den)
}

/// `A(n,k)` for a concrete `n >= 1`; always a Laurent polynomial in `q`.
pub fn a_value(n: i64, k: u32) -> LaurentPoly {
    if n >= 0 {
        if let Ok(p) = a_value_dense(n as u32, k) {
            return p.to_laurent_in_q();
        }
    }
    let (num, den) = a_poly(k);
    num.substitute_z(n).exact_div(&den).expect("A(n,k) is a Laurent polynomial for integer n")
}

/// `A(n, k)` in `q` for `n >= 0`, using
/// `A(n,k) = q^{-n(k+1)} (1-q^n)/(1-q) (q;q)_k [n+k, 2k+1]_q`.
pub fn a_value_dense(n: u32, k: u32) -> Result<IntPoly> {
    if n <= k {
        return Ok(IntPoly::zero());
    }
    let base = (n - k) as usize;
    let mut p = IntPoly::one();
    for i in 1..=2 * k as usize + 1 {
        p = p.mul_one_minus(base + i - 1)?.div_one_minus(i)?;
    }
    p = p.mul_one_minus(n as usize)?.div_one_minus(1)?;
    for i in 1..=k as usize {
        p = p.mul_one_minus(i)?;
    }
    Ok(p.shift(-(n as i64) * (k as i64 + 1)))
}
