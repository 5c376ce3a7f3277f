use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::ring::Scalars;
use crate::links::FramedLink;
use crate::{Error, Result};

/// Default bound on the product of colors of one split block.
pub const DEFAULT_CAPACITY: u128 = 2_000_000;

const BITS: u32 = 16;
const MASK: u128 = (1 << BITS) - 1;
const MAX_STRANDS: usize = (128 / BITS) as usize;

fn get(key: u128, p: usize) -> u32 {
    ((key >> (BITS * p as u32)) & MASK) as u32
}

fn set(key: u128, p: usize, x: u32) -> u128 {
    (key & !(MASK << (BITS * p as u32))) | ((x as u128) << (BITS * p as u32))
}

/// Braiding coefficients of `V_{n1} (x) V_{n2} -> V_{n2} (x) V_{n1}`, memoised.
///
/// Basis `e_0, ..., e_{n-1}` of weights `n-1-2i`, `K e_i = s^{n-1-2i} e_i`,
/// `E e_i = [n-i] e_{i-1}`, `F e_i = [i+1] e_{i+1}` with `s = v^2`.
pub struct RMatrix<'a, S: Scalars> {
    sc: &'a S,
    qint: BTreeMap<u32, S::Elem>,
    rising: BTreeMap<(u32, u32), S::Elem>,
    binom: BTreeMap<(u32, u32), S::Elem>,
    diff: Vec<S::Elem>,
    head: BTreeMap<(u32, u32), S::Elem>,
    entries: BTreeMap<(bool, u32, u32, u32, u32, u32), S::Elem>,
}

impl<'a, S: Scalars> RMatrix<'a, S> {
    pub fn new(sc: &'a S) -> Self {
        Self {
            sc,
            qint: BTreeMap::new(),
            rising: BTreeMap::new(),
            binom: BTreeMap::new(),
            diff: Vec::new(),
            head: BTreeMap::new(),
            entries: BTreeMap::new(),
        }
    }

    pub fn scalars(&self) -> &'a S {
        self.sc
    }

    /// `[n]`.
    pub fn qint(&mut self, n: u32) -> Result<S::Elem> {
        if let Some(x) = self.qint.get(&n) {
            return Ok(x.clone());
        }
        let mut acc = self.sc.zero();
        for i in 0..n as i64 {
            self.sc.add_assign(&mut acc, &self.sc.v_pow(1, 2 * (n as i64 - 1 - 2 * i))?)?;
        }
        self.qint.insert(n, acc.clone());
        Ok(acc)
    }

    /// `[m][m+1]...[m+k-1]`.
    fn rising(&mut self, m: u32, k: u32) -> Result<S::Elem> {
        if k == 0 {
            return self.sc.v_pow(1, 0);
        }
        if let Some(x) = self.rising.get(&(m, k)) {
            return Ok(x.clone());
        }
        let prev = self.rising(m, k - 1)?;
        let x = self.sc.mul(&prev, &self.qint(m + k - 1)?)?;
        self.rising.insert((m, k), x.clone());
        Ok(x)
    }

    /// Balanced Gaussian binomial in `s`.
    fn binom(&mut self, m: u32, k: u32) -> Result<S::Elem> {
        if k == 0 || k == m {
            return self.sc.v_pow(1, 0);
        }
        if k > m {
            return Ok(self.sc.zero());
        }
        if let Some(x) = self.binom.get(&(m, k)) {
            return Ok(x.clone());
        }
        // [m,k] = s^k [m-1,k] + s^{-(m-k)} [m-1,k-1]
        let a = self.binom(m - 1, k)?;
        let b = self.binom(m - 1, k - 1)?;
        let mut x = self.sc.mul(&a, &self.sc.v_pow(1, 2 * k as i64)?)?;
        self.sc.add_product(&mut x, &b, &self.sc.v_pow(1, -2 * (m - k) as i64)?)?;
        self.binom.insert((m, k), x.clone());
        Ok(x)
    }

    /// `(s - s^{-1})^k`.
    fn diff(&mut self, k: u32) -> Result<S::Elem> {
        if self.diff.is_empty() {
            self.diff.push(self.sc.v_pow(1, 0)?);
        }
        while self.diff.len() <= k as usize {
            let mut d = self.sc.v_pow(1, 2)?;
            self.sc.add_assign(&mut d, &self.sc.v_pow(-1, -2)?)?;
            let next = self.sc.mul(self.diff.last().expect("nonempty"), &d)?;
            self.diff.push(next);
        }
        Ok(self.diff[k as usize].clone())
    }

    /// `(s - s^{-1})^k [m][m+1]...[m+k-1]`.
    fn head(&mut self, m: u32, k: u32) -> Result<S::Elem> {
        if let Some(x) = self.head.get(&(m, k)) {
            return Ok(x.clone());
        }
        let d = self.diff(k)?;
        let x = self.sc.mul(&d, &self.rising(m, k)?)?;
        self.head.insert((m, k), x.clone());
        Ok(x)
    }

    /// Coefficient of the `k`-th output term of `e_a (x) e_b`.
    ///
    /// Positive: `e_{b+k} (x) e_{a-k}`. Negative (the inverse of the braiding
    /// `V_{n2} (x) V_{n1} -> V_{n1} (x) V_{n2}`): `e_{b-k} (x) e_{a+k}`.
    pub fn coeff(&mut self, positive: bool, n1: u32, n2: u32, a: u32, b: u32, k: u32) -> Result<S::Elem> {
        let key = (positive, n1, n2, a, b, k);
        if let Some(x) = self.entries.get(&key) {
            return Ok(x.clone());
        }
        let (n1i, n2i, ai, bi, ki) = (n1 as i64, n2 as i64, a as i64, b as i64, k as i64);
        let x = if positive {
            let mu = n1i - 1 - 2 * (ai - ki);
            let nu = n2i - 1 - 2 * (bi + ki);
            let mono = self.sc.v_pow(1, mu * nu + ki * (ki - 1))?;
            let h = self.head(n1 - a, k)?;
            let c = self.binom(b + k, k)?;
            let x = self.sc.mul(&h, &c)?;
            self.sc.mul(&x, &mono)?
        } else {
            let mu = n1i - 1 - 2 * (ai + ki);
            let nu = n2i - 1 - 2 * (bi - ki);
            let e = -mu * nu + 2 * ki * (2 * bi - 2 * ai - 2 * ki + n1i - n2i) - ki * (ki - 1);
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            let mono = self.sc.v_pow(sign, e)?;
            let h = self.head(a + 1, k)?;
            let c = self.binom(n2 - 1 - b + k, k)?;
            let x = self.sc.mul(&h, &c)?;
            self.sc.mul(&x, &mono)?
        };
        self.entries.insert(key, x.clone());
        Ok(x)
    }
}

type Vector<E> = BTreeMap<u128, E>;

/// Colors sitting at each position before each letter, plus the final row.
fn color_rows(link: &FramedLink, colors: &[u32]) -> Vec<Vec<u32>> {
    let comp = link.component_of_position();
    let mut cur: Vec<u32> = comp.iter().map(|&c| colors[c]).collect();
    let mut rows = Vec::with_capacity(link.word().len() + 1);
    for &g in link.word() {
        rows.push(cur.clone());
        let i = g.unsigned_abs() as usize;
        cur.swap(i - 1, i);
    }
    rows.push(cur);
    rows
}

fn forward<S: Scalars>(
    rm: &mut RMatrix<'_, S>,
    g: i32,
    cols: &[u32],
    v: Vector<S::Elem>,
) -> Result<Vector<S::Elem>> {
    let sc = rm.scalars();
    let i = g.unsigned_abs() as usize;
    let (n1, n2) = (cols[i - 1], cols[i]);
    let mut out: Vector<S::Elem> = BTreeMap::new();
    for (key, x) in v {
        let (a, b) = (get(key, i - 1), get(key, i));
        let kmax = if g > 0 { a.min(n2 - 1 - b) } else { b.min(n1 - 1 - a) };
        for k in 0..=kmax {
            let (p, q) = if g > 0 { (b + k, a - k) } else { (b - k, a + k) };
            let c = rm.coeff(g > 0, n1, n2, a, b, k)?;
            let slot = out.entry(set(set(key, i - 1, p), i, q)).or_insert_with(|| sc.zero());
            sc.add_product(slot, &x, &c)?;
        }
    }
    out.retain(|_, x| !sc.is_zero(x));
    Ok(out)
}

/// Row vector times the crossing matrix; `cols` are the colors before the crossing.
fn backward<S: Scalars>(
    rm: &mut RMatrix<'_, S>,
    g: i32,
    cols: &[u32],
    w: Vector<S::Elem>,
    keep: Option<&Vector<S::Elem>>,
) -> Result<Vector<S::Elem>> {
    let sc = rm.scalars();
    let i = g.unsigned_abs() as usize;
    let (n1, n2) = (cols[i - 1], cols[i]);
    let mut out: Vector<S::Elem> = BTreeMap::new();
    for (key, x) in w {
        let (p, q) = (get(key, i - 1), get(key, i));
        // inputs (a, b) with e_a in V_{n1} and e_b in V_{n2}
        let kmax = if g > 0 { p.min(n1 - 1 - q) } else { q.min(n2 - 1 - p) };
        for k in 0..=kmax {
            let (a, b) = if g > 0 { (q + k, p - k) } else { (q - k, p + k) };
            let target = set(set(key, i - 1, a), i, b);
            if keep.is_some_and(|f| !f.contains_key(&target)) {
                continue;
            }
            let c = rm.coeff(g > 0, n1, n2, a, b, k)?;
            let slot = out.entry(target).or_insert_with(|| sc.zero());
            sc.add_product(slot, &x, &c)?;
        }
    }
    out.retain(|_, x| !sc.is_zero(x));
    Ok(out)
}

/// Invariant of one connected braid block (no framing correction), or of the
/// empty link when `strands = 0`.
fn block_invariant<S: Scalars>(rm: &mut RMatrix<'_, S>, link: &FramedLink, colors: &[u32], bound: u128) -> Result<S::Elem> {
    let sc = rm.scalars();
    let s = link.strands();
    if s == 0 {
        return sc.v_pow(1, 0);
    }
    if s > MAX_STRANDS {
        return Err(Error::InvalidArgument(alloc::format!("at most {MAX_STRANDS} strands are supported")));
    }
    if colors.iter().any(|&c| c == 0 || c > MASK as u32) {
        return Err(Error::InvalidArgument("colors must lie in 1..=65535".into()));
    }
    let rows = color_rows(link, colors);
    let dim: u128 = rows[0].iter().map(|&c| c as u128).product();
    if dim > bound {
        return Err(Error::CapacityExceeded { dimension: dim, bound });
    }
    let word = link.word();
    let half = word.len() / 2;
    let top = &rows[0];
    let mut total = sc.zero();
    // A fixed basis vector at position 0 (the result is the same for every one);
    // the top vector keeps positive crossings sparse, the bottom one negative.
    let negatives = word.iter().filter(|g| **g < 0).count();
    let mut idx = alloc::vec![0u32; s];
    if 2 * negatives > word.len() {
        idx[0] = top[0] - 1;
    }
    loop {
        let key = idx.iter().enumerate().fold(0u128, |k, (p, &x)| set(k, p, x));
        let weight: i64 = (1..s).map(|p| 2 * (top[p] as i64 - 1 - 2 * idx[p] as i64)).sum();
        let mut fwd: Vector<S::Elem> = BTreeMap::new();
        fwd.insert(key, sc.v_pow(1, 0)?);
        for (t, &g) in word[..half].iter().enumerate() {
            fwd = forward(rm, g, &rows[t], fwd)?;
        }
        let mut bwd: Vector<S::Elem> = BTreeMap::new();
        bwd.insert(key, sc.v_pow(1, weight)?);
        for t in (half..word.len()).rev() {
            let keep = (t == half).then_some(&fwd);
            bwd = backward(rm, word[t], &rows[t], bwd, keep)?;
        }
        for (k, x) in &fwd {
            if let Some(y) = bwd.get(k) {
                sc.add_product(&mut total, x, y)?;
            }
        }
        // next basis state of positions 1..s
        let mut p = 1;
        while p < s {
            idx[p] += 1;
            if idx[p] < top[p] {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
        if p >= s {
            break;
        }
    }
    let n0 = rm.qint(top[0])?;
    sc.mul(&total, &n0)
}

/// Colored Jones invariant of a framed link, as an element of the scalar ring.
pub fn invariant<S: Scalars>(sc: &S, link: &FramedLink, colors: &[u32], bound: u128) -> Result<S::Elem> {
    if colors.len() != link.num_components() {
        return Err(Error::InvalidArgument("one color per component is required".into()));
    }
    let mut rm = RMatrix::new(sc);
    let mut acc = sc.v_pow(1, 0)?;
    for (block, comps) in link.split_blocks() {
        let cols: Vec<u32> = comps.iter().map(|&c| colors[c]).collect();
        let x = block_invariant(&mut rm, &block, &cols, bound)?;
        acc = sc.mul(&acc, &x)?;
    }
    // framing correction: declared framing against braid self-writhe
    let e: i64 = link
        .framings()
        .iter()
        .zip(link.self_writhes())
        .zip(colors)
        .map(|((f, w), &n)| (f - w) * (n as i64 * n as i64 - 1))
        .sum();
    sc.mul(&acc, &sc.v_pow(1, e)?)
}
