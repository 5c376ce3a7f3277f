//! Exact checks of q-series identities around the transform.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::laplace;
use crate::qcalc::{pochhammer, q_pochhammer, LaurentPoly, Monomial, PowerSeries};
use crate::{Error, Rational, Result};

/// `L_{-1,1;n}((z;q)_{k+1} (z^{-1};q)_{k+1}) = 2 (q^{k+1};q)_{k+1}`, with `t = q^{-1}`.
pub fn closed_form_check(k: u32) -> bool {
    let f = &pochhammer(Monomial::z(1), k + 1) * &pochhammer(Monomial::z(-1), k + 1);
    let image = laplace(&f, -1, 1).expect("integral q-powers").to_laurent().expect("|b| = 1");
    image == q_pochhammer(k as i64 + 1, k + 1).scale(&Rational::from_integer(2.into()))
}

/// Quotient of two Laurent polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
struct Frac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Frac {
    fn new(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    fn add(&self, o: &Frac) -> Frac {
        Frac { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    fn same(&self, o: &Frac) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

/// `(q^a; q)_n`, named for pole reports.
fn poch(a: i64, n: i64) -> LaurentPoly {
    q_pochhammer(a, n.max(0) as u32)
}

fn over(num: LaurentPoly, a: i64, n: i64, name: &str) -> Result<Frac> {
    if a <= 0 && a + n > 0 {
        return Err(Error::PoleAtSubstitution(alloc::format!("{name} = (q^{a};q)_{n}")));
    }
    Ok(Frac { num, den: poch(a, n) })
}

/// Parameters `b_i = q^{bs[i]}`, `c_i = q^{cs[i]}` for `i = 1..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndrewsParams {
    pub n: u32,
    pub bs: Vec<i64>,
    pub cs: Vec<i64>,
}

fn lhs(p: &AndrewsParams) -> Result<Frac> {
    let (nn, k) = (p.n as i64, p.bs.len() as i64);
    let mut total = Frac::new(LaurentPoly::one());
    for n in 1..=nn {
        let head = &(&LaurentPoly::q_pow(k * n + nn * n) * &(&LaurentPoly::one() + &LaurentPoly::q_pow(n))) * &poch(-nn, n);
        let mut term = over(head, nn + 1, n, "(q^{N+1})_n")?;
        for (i, (&b, &c)) in p.bs.iter().zip(&p.cs).enumerate() {
            let top = &(&poch(b, n) * &poch(c, n)) * &LaurentPoly::q_pow(-(b + c) * n);
            let f = over(top, 1 - b, n, &alloc::format!("(q/b_{})_{n}", i + 1))?;
            let g = over(LaurentPoly::one(), 1 - c, n, &alloc::format!("(q/c_{})_{n}", i + 1))?;
            term = term.mul(&f).mul(&g);
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// All chains `0 = n_1 <= n_2 <= ... <= n_k <= N`.
fn chains(k: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = alloc::vec![alloc::vec![0i64]];
    for _ in 1..k {
        out = out
            .into_iter()
            .flat_map(|ch| {
                let last = *ch.last().expect("nonempty");
                (last..=n).map(move |x| {
                    let mut c = ch.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    out
}

fn rhs(p: &AndrewsParams) -> Result<Frac> {
    let nn = p.n as i64;
    let k = p.bs.len();
    let (bk, ck) = (p.bs[k - 1], p.cs[k - 1]);
    let pre = over(&poch(1, nn) * &poch(1 - bk - ck, nn), 1 - bk, nn, &alloc::format!("(q/b_{k})_N"))?
        .mul(&over(LaurentPoly::one(), 1 - ck, nn, &alloc::format!("(q/c_{k})_N"))?);
    let mut sum = Frac::new(LaurentPoly::zero());
    for ch in chains(k, nn) {
        let m = ch[k - 1];
        let top = &(&(&LaurentPoly::q_pow(m) * &poch(-nn, m)) * &poch(bk, m)) * &poch(ck, m);
        let mut term = over(top, bk + ck - nn, m, "(q^{-N} b_k c_k)_{n_k}")?;
        for i in 0..k - 1 {
            let (b, c, ni, nj) = (p.bs[i], p.cs[i], ch[i], ch[i + 1]);
            let top = &(&(&LaurentPoly::q_pow(ni - (b + c) * ni) * &poch(b, ni)) * &poch(c, ni)) * &poch(1 - b - c, nj - ni);
            let name: String = alloc::format!("(q/b_{})_{nj}", i + 1);
            term = term
                .mul(&over(top, 1, nj - ni, "(q)_{n_{i+1}-n_i}")?)
                .mul(&over(LaurentPoly::one(), 1 - b, nj, &name)?)
                .mul(&over(LaurentPoly::one(), 1 - c, nj, &alloc::format!("(q/c_{})_{nj}", i + 1))?);
        }
        sum = sum.add(&term);
    }
    Ok(pre.mul(&sum))
}

/// Both sides of the Andrews identity as rational functions of `q` under the
/// substitutions, compared exactly.
pub fn andrews_check(p: &AndrewsParams) -> Result<bool> {
    if p.n == 0 || p.bs.is_empty() || p.bs.len() != p.cs.len() {
        return Err(Error::InvalidArgument("need N >= 1 and k >= 1 pairs (b_i, c_i)".into()));
    }
    Ok(lhs(p)?.same(&rhs(p)?))
}

/// The two sides of `prod_{k>=1} 1/((1-q^{5k-4})(1-q^{5k-1})) = sum_n q^{n^2}/(q;q)_n`
/// modulo `q^order`.
pub fn rr_sides(order: usize) -> (PowerSeries, PowerSeries) {
    let one_minus = |e: usize| {
        let mut c = alloc::vec![Rational::zero(); e + 1];
        c[0] = Rational::one();
        c[e] = -Rational::one();
        PowerSeries::from_coeffs(order, c)
    };
    let mut prod = PowerSeries::one(order);
    for e in (1..order).filter(|e| e % 5 == 1 || e % 5 == 4) {
        prod = &prod * &one_minus(e).inverse().expect("constant term 1");
    }
    let mut sum = PowerSeries::zero(order);
    let mut poch = PowerSeries::one(order);
    let mut n = 0usize;
    while n * n < order {
        if n > 0 {
            poch = &poch * &one_minus(n);
        }
        let mono = PowerSeries::monomial(order, Rational::one(), n * n);
        sum = &sum + &(&mono * &poch.inverse().expect("constant term 1"));
        n += 1;
    }
    (prod, sum)
}

pub fn rr_check(order: usize) -> bool {
    let (a, b) = rr_sides(order);
    a == b
}
