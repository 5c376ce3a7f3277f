use alloc::sync::Arc;

use crate::cyclo::{CycField, CycInt};
use crate::qcalc::dense::IntPoly;
use crate::qcalc::LaurentPoly;
use crate::{Rational, Result};

/// Coefficient ring for the state sum, with `v = q^{1/4}` given by [`Scalars::v_pow`].
pub trait Scalars {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    /// `c * v^e`.
    fn v_pow(&self, c: i128, e: i64) -> Result<Self::Elem>;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_assign(&self, x: &mut Self::Elem, y: &Self::Elem) -> Result<()>;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    /// `acc += x * y`.
    fn add_product(&self, acc: &mut Self::Elem, x: &Self::Elem, y: &Self::Elem) -> Result<()> {
        let p = self.mul(x, y)?;
        self.add_assign(acc, &p)
    }
}

/// Laurent polynomials in `v` with checked machine-integer coefficients.
pub struct SmallPoly;

impl Scalars for SmallPoly {
    type Elem = IntPoly;
    fn zero(&self) -> IntPoly {
        IntPoly::zero()
    }
    fn v_pow(&self, c: i128, e: i64) -> Result<IntPoly> {
        Ok(IntPoly::monomial(c, e))
    }
    fn is_zero(&self, x: &IntPoly) -> bool {
        x.is_zero()
    }
    fn add_assign(&self, x: &mut IntPoly, y: &IntPoly) -> Result<()> {
        x.add_scaled(y, 1)
    }
    fn mul(&self, x: &IntPoly, y: &IntPoly) -> Result<IntPoly> {
        x.mul(y)
    }
    fn add_product(&self, acc: &mut IntPoly, x: &IntPoly, y: &IntPoly) -> Result<()> {
        acc.add_product(x, y)
    }
}

/// Arbitrary-precision Laurent polynomials; the fallback when [`SmallPoly`] overflows.
pub struct BigPoly;

impl Scalars for BigPoly {
    type Elem = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn v_pow(&self, c: i128, e: i64) -> Result<LaurentPoly> {
        Ok(LaurentPoly::v_monomial(Rational::from_integer(c.into()), e))
    }
    fn is_zero(&self, x: &LaurentPoly) -> bool {
        x.is_zero()
    }
    fn add_assign(&self, x: &mut LaurentPoly, y: &LaurentPoly) -> Result<()> {
        *x = &*x + y;
        Ok(())
    }
    fn mul(&self, x: &LaurentPoly, y: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(x * y)
    }
}

/// `Z[zeta_M]` with `v -> zeta_M^t`.
pub struct RootScalars {
    pub field: Arc<CycField>,
    pub t: i64,
}

impl RootScalars {
    pub fn new(order: u64, t: u64) -> Self {
        Self { field: CycField::new(order), t: t as i64 }
    }
}

impl Scalars for RootScalars {
    type Elem = CycInt;
    fn zero(&self) -> CycInt {
        CycInt::zero(&self.field)
    }
    fn v_pow(&self, c: i128, e: i64) -> Result<CycInt> {
        let m = self.field.order() as i128;
        let k = (e as i128 * self.t as i128).rem_euclid(m) as i64;
        CycInt::zeta_pow(&self.field, c, k)
    }
    fn is_zero(&self, x: &CycInt) -> bool {
        x.is_zero()
    }
    fn add_assign(&self, x: &mut CycInt, y: &CycInt) -> Result<()> {
        x.add_assign(y)
    }
    fn mul(&self, x: &CycInt, y: &CycInt) -> Result<CycInt> {
        x.mul(y)
    }
    fn add_product(&self, acc: &mut CycInt, x: &CycInt, y: &CycInt) -> Result<()> {
        acc.add_product(x, y)
    }
}
