use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;

/// Integer factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// If `m/n = p^e` for a prime `p` and `e != 0`, returns `p`.
pub fn prime_power_ratio(n: u64, m: u64) -> Option<u64> {
    let g = n.gcd(&m);
    let (a, b) = (n / g, m / g);
    let big = match (a, b) {
        (1, x) | (x, 1) if x > 1 => x,
        _ => return None,
    };
    match factorize(big).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Coefficients of the `n`-th cyclotomic polynomial, ascending, `n >= 1`.
pub fn cyclotomic_coeffs(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    // Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiply the numerator
    // factors, then divide by the denominator factors.
    let mut num: Vec<BigInt> = alloc::vec![BigInt::one()];
    let mut dens: Vec<u64> = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        match mobius(n / d) {
            1 => num = mul_binomial(&num, d as usize),
            -1 => dens.push(d),
            _ => {}
        }
    }
    for d in dens {
        num = div_binomial(&num, d as usize);
    }
    num
}

fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|(_, e)| *e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Multiplies by `x^d - 1`.
fn mul_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

/// Divides exactly by `x^d - 1`.
fn div_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // p = (x^d - 1) s  =>  s_i = s_{i-d} - p_i, processed from the bottom.
    let n = p.len() - d;
    let mut s = alloc::vec![BigInt::zero(); n];
    for i in 0..n {
        let prev = if i >= d { s[i - d].clone() } else { BigInt::zero() };
        s[i] = prev - &p[i];
    }
    s
}

/// The `n`-th cyclotomic polynomial in `q`.
pub fn cyclotomic_poly(n: u64) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(0, &cyclotomic_coeffs(n))
}

/// Resultant of two integer polynomials given by ascending coefficients,
/// computed as the Sylvester determinant by fraction-free elimination.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut a = alloc::vec![alloc::vec![BigInt::zero(); size]; size];
    // Rows hold descending coefficients.
    for row in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            a[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            a[n + row][row + j] = c.clone();
        }
    }
    bareiss_det(a)
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `Res(Phi_n, Phi_m)`.
pub fn cyclotomic_resultant(n: u64, m: u64) -> BigInt {
    resultant(&cyclotomic_coeffs(n), &cyclotomic_coeffs(m))
}

/// True iff `|x|` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(x: &BigInt, p: u64) -> bool {
    let mut x = x.abs();
    let p = BigInt::from(p);
    if x.is_zero() {
        return false;
    }
    while (&x % &p).is_zero() {
        x /= &p;
    }
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1).to_string(), "-1 + q");
        assert_eq!(cyclotomic_poly(2).to_string(), "1 + q");
        assert_eq!(cyclotomic_poly(6).to_string(), "1 - q + q^2");
        // Oracle for Phi_6: (q^6 - 1) / (Phi_1 Phi_2 Phi_3).
        let q6 = &LaurentPoly::q_pow(6) - &LaurentPoly::one();
        let d = &(&cyclotomic_poly(1) * &cyclotomic_poly(2)) * &cyclotomic_poly(3);
        assert_eq!(q6.exact_div(&d).unwrap(), cyclotomic_poly(6));
        for n in 1..=40 {
            assert_eq!(cyclotomic_coeffs(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn small_resultants() {
        assert_eq!(cyclotomic_resultant(2, 3).abs(), BigInt::one());
        assert_eq!(cyclotomic_resultant(1, 2).abs(), BigInt::from(2));
        assert_eq!(cyclotomic_resultant(3, 5).abs(), BigInt::one());
    }

    #[test]
    fn ratio_classification() {
        assert_eq!(prime_power_ratio(3, 18), None);
        assert_eq!(prime_power_ratio(3, 12), Some(2));
        assert_eq!(prime_power_ratio(3, 27), Some(3));
        assert_eq!(prime_power_ratio(8, 2), Some(2));
        assert_eq!(prime_power_ratio(5, 5), None);
    }
}
