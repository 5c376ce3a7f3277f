//! Truncated elements of the Habiro ring, written `sum_k f_k(q) (q;q)_k`.
//!
//! A truncation at `K` keeps `f_0..f_K`. The dropped tail is a multiple of
//! `(q;q)_{K+1}`, so evaluation at roots of order `<= K+1` is exact, and so is
//! the Taylor expansion at `e_n` up to `(q - e_n)`-degree `floor((K+1)/n) - 1`.

mod ohtsuki;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

pub use ohtsuki::{ohtsuki_coeffs, stabilization_check, StabilizationRow};

use crate::cyclo::{ev_root, CycNumber, RootSpec};
use crate::jones::cyclotomic_coeffs;
use crate::laplace::q_bk_unit;
use crate::links::FramedLink;
use crate::qcalc::{q_pochhammer, LaurentPoly};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HabiroElement {
    coeffs: Vec<LaurentPoly>,
}

impl HabiroElement {
    /// `sum_{k <= K} f_k (q;q)_k` with `K = coeffs.len() - 1`. Every `f_k` must
    /// have integral powers of `q`.
    pub fn new(coeffs: Vec<LaurentPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("need at least f_0".into()));
        }
        if coeffs.iter().any(|f| !f.has_integral_q_powers()) {
            return Err(Error::InvalidArgument("coefficients must be Laurent polynomials in q".into()));
        }
        Ok(Self { coeffs })
    }

    /// The constant `c`, known to every depth `K`.
    pub fn constant(c: LaurentPoly, k_max: usize) -> Result<Self> {
        let mut coeffs = alloc::vec![LaurentPoly::zero(); k_max + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    pub fn k_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// All `f_k` have integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_q_integral)
    }

    /// Termwise sum, truncated to the shallower of the two.
    pub fn add(&self, other: &Self) -> Self {
        let k = self.k_max().min(other.k_max());
        Self { coeffs: (0..=k).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    /// The Laurent polynomial `sum_k f_k (q;q)_k` of the kept terms.
    pub fn partial_sum(&self) -> LaurentPoly {
        self.coeffs.iter().enumerate().map(|(k, f)| f * &q_pochhammer(1, k as u32)).sum()
    }
}

/// Writes a Laurent polynomial `p` divisible by `(q;q)_k` as the single term `f_k (q;q)_k`.
fn single_term(p: &LaurentPoly, k: usize) -> Result<LaurentPoly> {
    p.exact_div(&q_pochhammer(1, k as u32))
}

/// `ev_xi(H)`; needs `ord(xi) <= K + 1`.
pub fn hab_eval(h: &HabiroElement, xi: RootSpec) -> Result<CycNumber> {
    let r = xi.m as usize;
    if r > h.k_max() + 1 {
        return Err(Error::TruncationTooShallow { required: r - 1, have: h.k_max() });
    }
    let mut acc = CycNumber::zero(xi.m);
    for (k, f) in h.coeffs.iter().enumerate().take(r) {
        if !f.is_zero() {
            acc = &acc + &ev_root(&(f * &q_pochhammer(1, k as u32)), xi)?;
        }
    }
    Ok(acc)
}

/// Coefficients `a_0..a_{D-1}` of `sum_d a_d (q - e_n)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorSeries {
    pub n: u64,
    pub coeffs: Vec<CycNumber>,
}

impl TaylorSeries {
    /// Every coefficient lies in `Z[e_n]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| crate::cyclo::is_integral(c, 1))
    }
}

/// Truncated series in `h = q - e_n` over `Q(zeta_n)`.
struct Local {
    n: u64,
    depth: usize,
}

impl Local {
    fn zero(&self) -> Vec<CycNumber> {
        alloc::vec![CycNumber::zero(self.n); self.depth]
    }

    /// `q^e = (e_n + h)^e = sum_i binom(e, i) e_n^{e-i} h^i`, valid for negative `e`.
    fn monomial(&self, e: i64) -> Vec<CycNumber> {
        let mut out = self.zero();
        let mut binom = Rational::one();
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = CycNumber::zeta_pow(self.n, e - i as i64).scale(&binom);
            binom = binom * Rational::from_integer(BigInt::from(e - i as i64)) / Rational::from_integer(BigInt::from(i as i64 + 1));
        }
        out
    }

    fn poly(&self, f: &LaurentPoly) -> Vec<CycNumber> {
        let mut out = self.zero();
        for (e, c) in f.terms() {
            for (slot, x) in out.iter_mut().zip(self.monomial(e / 4)) {
                *slot = &*slot + &x.scale(c);
            }
        }
        out
    }

    fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.depth - i) {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        out
    }
}

/// Taylor expansion at `e_n` to depth `D`; needs `K + 1 >= n D`.
pub fn taylor_at(h: &HabiroElement, n: u64, depth: usize) -> Result<TaylorSeries> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let need = (n as usize * depth).saturating_sub(1);
    if h.k_max() < need {
        return Err(Error::TruncationTooShallow { required: need, have: h.k_max() });
    }
    let loc = Local { n, depth };
    let mut poch = loc.monomial(0);
    let mut acc = loc.zero();
    for (k, f) in h.coeffs.iter().enumerate() {
        if k > 0 {
            let mut factor = loc.monomial(k as i64);
            for x in factor.iter_mut() {
                *x = -&*x;
            }
            factor[0] = &factor[0] + &CycNumber::one(n);
            poch = loc.mul(&poch, &factor);
        }
        if !f.is_zero() {
            let term = loc.mul(&loc.poly(f), &poch);
            for (a, t) in acc.iter_mut().zip(term) {
                *a = &*a + &t;
            }
        }
    }
    Ok(TaylorSeries { n, coeffs: acc })
}

/// `G_m`: `q -> q^m`, re-expanded in the `(q;q)_k` basis at the same depth.
pub fn frobenius_sub(h: &HabiroElement, m: u32) -> Result<HabiroElement> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let coeffs = h
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let qm: LaurentPoly = (1..=k as i64).map(|j| &LaurentPoly::one() - &LaurentPoly::q_pow(m as i64 * j)).product();
            single_term(&(&f.substitute_power(m as i64) * &qm), k)
        })
        .collect::<Result<_>>()?;
    HabiroElement::new(coeffs)
}

/// `I_M = sum_k C_{L_0}(k) prod_i Q_{b_i, k_i}` for a surgery link whose linking
/// matrix is diagonal with entries `+-1`; `L_0` is `L` with zero framings.
pub fn unified_ihs(link: &FramedLink, k_max: usize) -> Result<HabiroElement> {
    let lm = link.linking_matrix();
    let diag = lm.diagonal();
    if !lm.is_diagonal() || diag.iter().any(|b| b.abs() != 1) {
        return Err(Error::NotDiagonalPM1);
    }
    if link.num_components() == 0 {
        return HabiroElement::constant(LaurentPoly::one(), k_max);
    }
    let zeroed = FramedLink::new(link.strands(), link.word().to_vec(), alloc::vec![0; diag.len()])?;
    let exp = cyclotomic_coeffs(&zeroed, k_max as u32)?;
    let mut q_cache: BTreeMap<(i64, u32), LaurentPoly> = BTreeMap::new();
    let mut sums = alloc::vec![LaurentPoly::zero(); k_max + 1];
    for (k, c) in &exp.coeffs {
        let mut term = c.clone();
        for (&b, &ki) in diag.iter().zip(k) {
            if let alloc::collections::btree_map::Entry::Vacant(e) = q_cache.entry((b, ki)) {
                e.insert(q_bk_unit(b, ki)?);
            }
            term = &term * &q_cache[&(b, ki)];
        }
        let top = k.iter().copied().max().unwrap_or(0) as usize;
        sums[top] = &sums[top] + &term;
    }
    let coeffs = sums.iter().enumerate().map(|(k, p)| single_term(p, k)).collect::<Result<_>>()?;
    HabiroElement::new(coeffs)
}

/// `1/(1-q) sum_{k<=K} q^k (q^{k+1};q)_{k+1}`, with the `k`-th summand written
/// as `f_k (q;q)_k`.
pub fn poincare_series(k_max: usize) -> Result<HabiroElement> {
    let one_minus_q = LaurentPoly::from_q_coeffs(0, &[1, -1]);
    let coeffs = (0..=k_max)
        .map(|k| {
            let s = (&LaurentPoly::q_pow(k as i64) * &q_pochhammer(k as i64 + 1, k as u32 + 1)).exact_div(&one_minus_q)?;
            single_term(&s, k)
        })
        .collect::<Result<_>>()?;
    HabiroElement::new(coeffs)
}
