use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{colored_jones, ColoredLink};
use crate::links::FramedLink;
use crate::qcalc::dense::IntPoly;
use crate::qcalc::{a_value, a_value_dense, q_pochhammer, qint, LaurentPoly};
use crate::{Error, Result};

/// `C_L(k)` for all multi-indices `0 <= k_i <= K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycExpansion {
    pub k_max: u32,
    pub components: usize,
    pub coeffs: BTreeMap<Vec<u32>, LaurentPoly>,
    /// Held-out points `n = 1 + (K+1) e_i`: whether the implied next coefficient
    /// `C((K+1) e_i)` exists and is integral.
    pub held_out: Vec<(Vec<u32>, bool)>,
}

impl CycExpansion {
    pub fn get(&self, k: &[u32]) -> Option<&LaurentPoly> {
        self.coeffs.get(k)
    }

    /// `sum_k C(k) A(n, k)`.
    pub fn reconstruct(&self, n: &[u32]) -> LaurentPoly {
        self.coeffs
            .iter()
            .map(|(k, c)| {
                let a: LaurentPoly = k.iter().zip(n).map(|(&ki, &ni)| a_value(ni as i64, ki)).product();
                c * &a
            })
            .sum()
    }
}

/// Per-index outcome of the divisibility `(q^{k+1};q)_{k+1} | (1-q) C(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrityReport {
    pub entries: Vec<(Vec<u32>, bool)>,
    pub held_out: Vec<(Vec<u32>, bool)>,
}

impl IntegrityReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().chain(&self.held_out).all(|(_, ok)| *ok)
    }
}

fn integral_after_division(c: &LaurentPoly, kmax: u32) -> bool {
    let num = &(&LaurentPoly::one() - &LaurentPoly::q_pow(1)) * c;
    let den = q_pochhammer(kmax as i64 + 1, kmax + 1);
    matches!(num.exact_div(&den), Ok(q) if q.is_q_integral())
}

pub fn verify_habiro_integrality(e: &CycExpansion) -> IntegrityReport {
    let entries = e
        .coeffs
        .iter()
        .map(|(k, c)| (k.clone(), integral_after_division(c, k.iter().copied().max().unwrap_or(0))))
        .collect();
    IntegrityReport { entries, held_out: e.held_out.clone() }
}

/// Coefficient ring for the triangular solve.
trait Coef: Sized + Clone {
    fn from_laurent(p: &LaurentPoly) -> Result<Self>;
    fn to_laurent(&self) -> LaurentPoly;
    fn mul(&self, b: &Self) -> Result<Self>;
    fn sub_assign(&mut self, b: &Self) -> Result<()>;
    fn divide(&self, d: &Self) -> Result<Self>;
    fn a(n: u32, k: u32) -> Result<Self> {
        Self::from_laurent(&a_value(n as i64, k))
    }
}

impl Coef for IntPoly {
    fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        IntPoly::from_laurent_in_q(p).ok_or(Error::Overflow("q-polynomial"))
    }
    fn to_laurent(&self) -> LaurentPoly {
        self.to_laurent_in_q()
    }
    fn mul(&self, b: &Self) -> Result<Self> {
        IntPoly::mul(self, b)
    }
    fn sub_assign(&mut self, b: &Self) -> Result<()> {
        self.add_scaled(b, -1)
    }
    fn divide(&self, d: &Self) -> Result<Self> {
        self.exact_div(d)
    }
    fn a(n: u32, k: u32) -> Result<Self> {
        a_value_dense(n, k)
    }
}

impl Coef for LaurentPoly {
    fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        Ok(p.clone())
    }
    fn to_laurent(&self) -> LaurentPoly {
        self.clone()
    }
    fn mul(&self, b: &Self) -> Result<Self> {
        Ok(self * b)
    }
    fn sub_assign(&mut self, b: &Self) -> Result<()> {
        *self = &*self - b;
        Ok(())
    }
    fn divide(&self, d: &Self) -> Result<Self> {
        let q = self.exact_div(d)?;
        if q.is_q_integral() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }
}

fn multi_indices(m: usize, k_max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u32; m];
    loop {
        out.push(cur.clone());
        let mut p = m;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if cur[p] < k_max {
                cur[p] += 1;
                break;
            }
            cur[p] = 0;
        }
    }
}

struct Solver<C> {
    a: BTreeMap<(u32, u32), C>,
}

impl<C: Coef> Solver<C> {
    fn a(&mut self, n: u32, k: u32) -> Result<C> {
        if let Some(x) = self.a.get(&(n, k)) {
            return Ok(x.clone());
        }
        let x = C::a(n, k)?;
        self.a.insert((n, k), x.clone());
        Ok(x)
    }

    fn a_multi(&mut self, n: &[u32], k: &[u32]) -> Result<Option<C>> {
        let mut acc: Option<C> = None;
        for (&ni, &ki) in n.iter().zip(k) {
            if ki >= ni {
                return Ok(None);
            }
            let x = self.a(ni, ki)?;
            acc = Some(match acc {
                None => x,
                Some(p) => p.mul(&x)?,
            });
        }
        Ok(acc)
    }

    /// `target - sum_{k in known} C(k) A(n, k)`.
    fn residual(&mut self, target: &LaurentPoly, n: &[u32], known: &BTreeMap<Vec<u32>, C>) -> Result<C> {
        let mut r = C::from_laurent(target)?;
        for (k, c) in known {
            if let Some(a) = self.a_multi(n, k)? {
                r.sub_assign(&c.mul(&a)?)?;
            }
        }
        Ok(r)
    }

    fn solve(&mut self, targets: &BTreeMap<Vec<u32>, LaurentPoly>, k_max: u32, m: usize) -> Result<(BTreeMap<Vec<u32>, C>, Vec<(Vec<u32>, bool)>)> {
        let mut known: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for k in multi_indices(m, k_max) {
            let n: Vec<u32> = k.iter().map(|x| x + 1).collect();
            let r = self.residual(&targets[&n], &n, &known)?;
            let d = self.a_multi(&n, &k)?.expect("A(k+1, k) is nonzero");
            let c = match r.divide(&d) {
                Ok(c) => c,
                Err(Error::NotDivisible) => return Err(Error::IntegralityViolation { index: k }),
                Err(e) => return Err(e),
            };
            if !integral_after_division(&c.to_laurent(), k.iter().copied().max().unwrap_or(0)) {
                return Err(Error::IntegralityViolation { index: k });
            }
            known.insert(k, c);
        }
        let mut held = Vec::new();
        for i in 0..m {
            let mut n = alloc::vec![1u32; m];
            n[i] = k_max + 2;
            let mut k = alloc::vec![0u32; m];
            k[i] = k_max + 1;
            let r = self.residual(&targets[&n], &n, &known)?;
            let d = self.a_multi(&n, &k)?.expect("A(n, n-1) is nonzero");
            let ok = match r.divide(&d) {
                Ok(c) => integral_after_division(&c.to_laurent(), k_max + 1),
                Err(Error::NotDivisible) => false,
                Err(e) => return Err(e),
            };
            held.push((k, ok));
        }
        Ok((known, held))
    }
}

/// Solves `J_L(n) prod [n_i] = sum_k C_L(k) A(n, k)` on the grid `1 <= n_i <= K+1`.
///
/// Requires zero framings and zero linking numbers. Every `C_L(k)` is checked
/// for the divisibility by `(q^{k+1};q)_{k+1} / (1-q)`, and the points
/// `n = 1 + (K+1) e_i` outside the grid are checked the same way.
pub fn cyclotomic_coeffs(link: &FramedLink, k_max: u32) -> Result<CycExpansion> {
    let lm = link.linking_matrix();
    if !lm.is_diagonal() || lm.diagonal().iter().any(|&b| b != 0) {
        return Err(Error::NotAlgebraicallySplit);
    }
    let m = link.num_components();
    let mut points: Vec<Vec<u32>> = multi_indices(m, k_max).into_iter().map(|k| k.iter().map(|x| x + 1).collect()).collect();
    for i in 0..m {
        let mut n = alloc::vec![1u32; m];
        n[i] = k_max + 2;
        points.push(n);
    }
    let mut targets = BTreeMap::new();
    for n in points {
        let j = colored_jones(&ColoredLink::new(link.clone(), n.clone())?)?;
        let t = n.iter().fold(j, |acc, &ni| &acc * &qint(ni as i64));
        if !t.is_q_integral() {
            return Err(Error::IntegralityViolation { index: n.iter().map(|x| x - 1).collect() });
        }
        targets.insert(n, t);
    }
    let (coeffs, held_out) = match (Solver::<IntPoly> { a: BTreeMap::new() }).solve(&targets, k_max, m) {
        Ok((c, h)) => (c.into_iter().map(|(k, c)| (k, c.to_laurent_in_q())).collect(), h),
        Err(Error::Overflow(_)) => (Solver::<LaurentPoly> { a: BTreeMap::new() }).solve(&targets, k_max, m)?,
        Err(e) => return Err(e),
    };
    Ok(CycExpansion { k_max, components: m, coeffs, held_out })
}
