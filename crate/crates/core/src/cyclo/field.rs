use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::qcalc::{cyclotomic_coeffs, euler_phi};
use crate::{Error, Result};

/// Arithmetic data for `Z[x]/(Phi_m(x))`: the monic modulus and the reduced
/// power basis images of `x^e` for `0 <= e < m`.
#[derive(Debug)]
pub struct CycField {
    order: u64,
    phi: usize,
    /// Ascending coefficients of `Phi_m` without the leading 1.
    modulus: Vec<i128>,
    powers: Vec<Vec<i128>>,
}

impl CycField {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order >= 1);
        let phi = euler_phi(order) as usize;
        let full: Vec<BigInt> = cyclotomic_coeffs(order);
        let modulus: Vec<i128> = full[..phi].iter().map(|c| c.to_i128().expect("cyclotomic coefficient fits")).collect();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = alloc::vec![0i128; phi];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * modulus[i];
            }
            cur[0] = -top * modulus[0];
        }
        Arc::new(Self { order, phi, modulus, powers })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Reduced coefficients of `x^e`.
    pub fn power(&self, e: i64) -> &[i128] {
        &self.powers[e.rem_euclid(self.order as i64) as usize]
    }

    pub fn modulus(&self) -> &[i128] {
        &self.modulus
    }

    /// Reduces a coefficient vector of length `< 2 phi` in place; checked.
    pub(crate) fn reduce(&self, buf: &mut Vec<i128>) -> Result<()> {
        let phi = self.phi;
        for d in (phi..buf.len()).rev() {
            let c = buf[d];
            if c == 0 {
                continue;
            }
            buf[d] = 0;
            for (i, m) in self.modulus.iter().enumerate() {
                if *m != 0 {
                    let t = c.checked_mul(*m).ok_or(Error::Overflow("cyclotomic reduction"))?;
                    buf[d - phi + i] = buf[d - phi + i].checked_sub(t).ok_or(Error::Overflow("cyclotomic reduction"))?;
                }
            }
        }
        buf.truncate(phi);
        buf.resize(phi, 0);
        Ok(())
    }
}

/// Element of `Z[zeta_m]` with machine-integer coefficients in the power basis.
/// Used inside state sums; convert to [`super::CycNumber`] for anything else.
#[derive(Clone, Debug)]
pub struct CycInt {
    field: Arc<CycField>,
    coeffs: Vec<i128>,
}

impl CycInt {
    pub fn zero(field: &Arc<CycField>) -> Self {
        Self { field: field.clone(), coeffs: alloc::vec![0; field.phi] }
    }

    /// `c * zeta^e`.
    pub fn zeta_pow(field: &Arc<CycField>, c: i128, e: i64) -> Result<Self> {
        let mut coeffs = alloc::vec![0i128; field.phi];
        for (slot, x) in coeffs.iter_mut().zip(field.power(e)) {
            *slot = x.checked_mul(c).ok_or(Error::Overflow("cyclotomic integer"))?;
        }
        Ok(Self { field: field.clone(), coeffs })
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.checked_add(*b).ok_or(Error::Overflow("cyclotomic integer"))?;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let phi = self.field.phi;
        let mut buf = alloc::vec![0i128; 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b == 0 {
                    continue;
                }
                let t = a.checked_mul(*b).ok_or(Error::Overflow("cyclotomic integer"))?;
                buf[i + j] = buf[i + j].checked_add(t).ok_or(Error::Overflow("cyclotomic integer"))?;
            }
        }
        self.field.reduce(&mut buf)?;
        Ok(Self { field: self.field.clone(), coeffs: buf })
    }

    pub fn add_product(&mut self, a: &Self, b: &Self) -> Result<()> {
        let p = a.mul(b)?;
        self.add_assign(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_wrap_around() {
        for m in [1u64, 2, 3, 4, 9, 12, 15, 21] {
            let f = CycField::new(m);
            let one = CycInt::zeta_pow(&f, 1, 0).unwrap();
            let z = CycInt::zeta_pow(&f, 1, 1).unwrap();
            let mut acc = one.clone();
            for _ in 0..m {
                acc = acc.mul(&z).unwrap();
            }
            assert_eq!(acc.coeffs(), one.coeffs(), "zeta^m = 1 for m = {m}");
        }
    }
}
