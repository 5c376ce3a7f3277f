use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::qcalc::factorize;
use crate::{Error, Rational, Result};

/// Symmetric integer matrix of linking numbers with framings on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    rows: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidArgument("linking matrix must be square".into()));
            }
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidArgument("linking matrix must be symmetric".into()));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.rows[i][i]).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| i == j || self.rows[i][j] == 0))
    }

    pub fn neg(&self) -> Self {
        Self { rows: self.rows.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    /// `U^T A U`.
    pub fn congruent(&self, u: &[Vec<i64>]) -> Self {
        let n = self.dim();
        let mut au = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                au[i][j] = (0..n).map(|k| self.rows[i][k] * u[k][j]).sum();
            }
        }
        let rows = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| u[k][i] * au[k][j]).sum()).collect()).collect();
        Self { rows }
    }

    pub fn determinant(&self) -> BigInt {
        crate::qcalc::bareiss_det(self.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// `H_1` of the surgered manifold, the cokernel of the matrix.
    pub fn h1(&self) -> H1Group {
        H1Group::from_smith(smith_diagonal(&self.rows))
    }
}

/// `(sigma_+, sigma_-, sigma_0)`, by congruence diagonalisation over `Q`.
pub fn signature_counts(a: &LinkingMatrix) -> (usize, usize, usize) {
    let n = a.dim();
    let mut m: Vec<Vec<Rational>> =
        a.rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(p) = (k + 1..n).find(|&p| !m[p][p].is_zero()) {
                m.swap(k, p);
                for row in m.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some(p) = (k + 1..n).find(|&p| !m[k][p].is_zero()) {
                // row_k += row_p, col_k += col_p puts 2 m[k][p] on the diagonal
                for j in 0..n {
                    let t = m[p][j].clone();
                    m[k][j] += t;
                }
                for row in m.iter_mut() {
                    let t = row[p].clone();
                    row[k] += t;
                }
            }
        }
        let piv = m[k][k].clone();
        if piv.is_zero() {
            continue;
        }
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &piv;
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
            for row in m.iter_mut() {
                let t = &f * &row[k];
                row[i] -= t;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let n = m.len();
    let mut diag = Vec::new();
    for t in 0..n {
        loop {
            // smallest nonzero entry of the remaining block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                diag.resize(n, BigInt::zero());
                return diag;
            };
            m.swap(t, bi);
            for r in m.iter_mut() {
                r.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let s = &q * &m[t][j];
                        m[i][j] -= s;
                    }
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for r in m.iter_mut().skip(t) {
                        let s = &q * &r[t];
                        r[j] -= s;
                    }
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !(&m[i][j] % &m[t][t]).is_zero()));
            if let Some(i) = bad {
                for j in t..n {
                    let s = m[i][j].clone();
                    m[t][j] += s;
                }
                continue;
            }
            break;
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// A finitely generated abelian group `Z^betti + sum Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Group {
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
    pub betti: usize,
}

impl H1Group {
    fn from_smith(diag: Vec<BigInt>) -> Self {
        let betti = diag.iter().filter(|d| d.is_zero()).count();
        let mut torsion: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
        torsion.sort();
        Self { torsion, betti }
    }

    pub fn is_finite(&self) -> bool {
        self.betti == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Cyclic prime-power factors `p^e`, sorted ascending.
    pub fn prime_power_split(&self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for d in &self.torsion {
            let d: u64 = d.try_into().map_err(|_| Error::Overflow("invariant factor"))?;
            for (p, e) in factorize(d) {
                out.push(p.pow(e));
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
