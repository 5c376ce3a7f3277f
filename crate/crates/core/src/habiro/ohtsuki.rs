//! Coefficients of `tau'_M(e_r e_p)` in the basis `x^n`, `x = e_r e_p - e_r`,
//! and their congruences with the Taylor coefficients of `I_M` at `e_r`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{taylor_at, unified_ihs};
use crate::cyclo::{CycNumber, RootSpec};
use crate::qcalc::{euler_phi, is_prime};
use crate::wrt::{tau_prime, Manifold};
use crate::{Error, Rational, Result};

/// Solves the square system `a x = b` over `Q`; `None` if singular.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = &a[row][col] * &inv;
            for k in col..n {
                let d = &f * &a[col][k];
                a[row][k] -= d;
            }
            let d = &f * &b[col];
            b[row] -= d;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// `a_{p,0..p-2}` with `tau'_M(e_r e_p) = sum_n a_{p,n} x^n`, each in `Q(zeta_r)`.
pub fn ohtsuki_coeffs(mf: &Manifold, p: u64, r: u64) -> Result<Vec<CycNumber>> {
    if !is_prime(p) || p == 2 || r == 0 || r.is_multiple_of(2) || r.is_multiple_of(p) {
        return Err(Error::InvalidArgument(alloc::format!("need an odd prime p = {p} not dividing the odd r = {r}")));
    }
    let m = p * r;
    let xi = RootSpec::new(m, (p + r) % m)?;
    let value = tau_prime(mf, xi)?.lift(m)?;
    let e_r = CycNumber::zeta_pow(m, p as i64);
    let x = &CycNumber::zeta_pow(m, xi.j as i64) - &e_r;
    let (phi_r, phi_m) = (euler_phi(r) as usize, euler_phi(m) as usize);
    let mut columns = Vec::with_capacity(phi_m);
    let mut xn = CycNumber::one(m);
    for _ in 0..p - 1 {
        for i in 0..phi_r {
            columns.push((&CycNumber::zeta_pow(m, (p * i as u64) as i64) * &xn).coeffs().to_vec());
        }
        xn = &xn * &x;
    }
    let rows: Vec<Vec<Rational>> = (0..phi_m).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let sol = solve(rows, value.coeffs().to_vec()).ok_or_else(|| Error::BasisConversionFailure("singular basis matrix".into()))?;
    let coeffs: Vec<CycNumber> = sol
        .chunks(phi_r)
        .map(|c| CycNumber::from_coeffs(r, c.to_vec()))
        .collect::<Result<_>>()?;
    let mut back = CycNumber::zero(m);
    let mut xn = CycNumber::one(m);
    for a in &coeffs {
        back = &back + &(&a.lift(m)? * &xn);
        xn = &xn * &x;
    }
    if back != value {
        return Err(Error::BasisConversionFailure("reconstruction mismatch".into()));
    }
    Ok(coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationRow {
    pub p: u64,
    pub n: usize,
    /// Taylor coefficient of `I_M` at `e_r`.
    pub a_n: CycNumber,
    pub a_pn: CycNumber,
    pub holds: bool,
}

/// `x = 0 mod p` in `Z_(p)[zeta_r]`, coordinatewise in the power basis.
fn divisible_by(x: &CycNumber, p: u64) -> bool {
    let p = BigInt::from(p);
    x.coeffs().iter().all(|c| (c.numer() % &p).is_zero() && !(c.denom() % &p).is_zero())
}

/// Compares `a_n` from the Taylor expansion of `I_M` at `e_r` with `a_{p,n}`
/// modulo `p`, for `n <= min(n_max, p - 2)`. Needs a `+-1` diagonal presentation.
pub fn stabilization_check(mf: &Manifold, n_max: usize, primes: &[u64], r: u64) -> Result<Vec<StabilizationRow>> {
    let order = mf.h1().order().ok_or(Error::NotRationalHomologySphere)?;
    let depth = n_max + 1;
    let ihs = unified_ihs(mf.surgery(), (r as usize * depth).max(1) - 1)?;
    let taylor = taylor_at(&ihs, r, depth)?;
    let mut rows = Vec::new();
    for &p in primes {
        if BigInt::from(p) <= order || p <= r {
            return Err(Error::InvalidArgument(alloc::format!("p = {p} must exceed |H_1| and r")));
        }
        let a_p = ohtsuki_coeffs(mf, p, r)?;
        for n in 0..depth.min(p as usize - 1) {
            let a_n = taylor.coeffs[n].clone();
            let holds = divisible_by(&(&a_n - &a_p[n]), p);
            rows.push(StabilizationRow { p, n, a_n, a_pn: a_p[n].clone(), holds });
        }
    }
    Ok(rows)
}
