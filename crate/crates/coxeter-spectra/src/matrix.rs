//! Dense matrices over arbitrary-precision rationals.
//!
//! This is deliberately small: multiplication, powers, kernels and row
//! reduction are all the exact linear algebra the rest of the crate needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Parse `"p"` or `"p/q"`.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |tok: &str| -> Result<BigInt> {
        tok.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Validation(format!("cannot parse rational '{s}'")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Validation("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Render as `"p"` or `"p/q"`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Exact for anything the crate produces at desk scale; falls back to a
    // quotient of lossy conversions for huge values.
    match (num.to_string().parse::<f64>(), den.to_string().parse::<f64>()) {
        (Ok(n), Ok(d)) => n / d,
        _ => 0.0,
    }
}

/// Exact conversion of an `f64` (which is a dyadic rational) into `Rat`.
pub fn rat_from_f64(x: f64) -> Result<Rat> {
    Rat::from_float(x).ok_or_else(|| Error::Validation(format!("cannot rationalize {x}")))
}

/// A dense N×M matrix with `BigRational` entries, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Validation("ragged matrix rows".into()));
        }
        Ok(QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Build from integer literals, mostly for tests and built-in tables.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| rat_int(v))).collect();
        QMatrix { rows: r, cols: c, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Validation("matrix shape mismatch in add".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Validation("matrix shape mismatch in sub".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &Rat) -> QMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::Validation("matrix shape mismatch in mul".into()));
        }
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Validation("pow requires a square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_involution(&self) -> bool {
        self.is_square() && self.pow(2).map(|m| m.is_identity()).unwrap_or(false)
    }

    /// `AᵀA = I`, i.e. the matrix is real orthogonal (unitary over the reals).
    pub fn is_orthogonal(&self) -> bool {
        self.is_square()
            && self
                .transpose()
                .mul(self)
                .map(|m| m.is_identity())
                .unwrap_or(false)
    }

    pub fn block_diag(blocks: &[&QMatrix]) -> QMatrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = QMatrix::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(ro + i, co + j)] = b[(i, j)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Reduced row echelon form; returns (rref, rank, pivot columns).
    pub fn rref(&self) -> (QMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &factor * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right kernel, one column vector per free variable.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, _, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rref[(row, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b` for square invertible `A` by fraction-free Bareiss
    /// elimination on the integer-scaled augmented system; intermediate
    /// entries stay minors of the input, which keeps their size in check.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::Validation("solve requires square A and matching b".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Vec::new());
        }
        // Clear denominators row by row (the solution is unchanged).
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = b[i].denom().clone();
            for j in 0..n {
                lcm = num_integer::lcm(lcm, self[(i, j)].denom().clone());
            }
            let mut row: Vec<BigInt> = (0..n)
                .map(|j| {
                    let v = &self[(i, j)];
                    v.numer() * (&lcm / v.denom())
                })
                .collect();
            row.push(b[i].numer() * (&lcm / b[i].denom()));
            m.push(row);
        }
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Err(Error::Validation("singular system".into()));
                };
                m.swap(k, p);
            }
            for i in k + 1..n {
                for j in k + 1..=n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        if m[n - 1][n - 1].is_zero() {
            return Err(Error::Validation("singular system".into()));
        }
        let mut x = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = Rat::from_integer(m[i][n].clone());
            for j in i + 1..n {
                acc -= Rat::from_integer(m[i][j].clone()) * &x[j];
            }
            x[i] = acc / Rat::from_integer(m[i][i].clone());
        }
        Ok(x)
    }

    /// Determinant by fraction-free Bareiss elimination over the integers
    /// after clearing denominators.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Validation("det requires a square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        // Clear denominators row by row; track the product of scalings.
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut scale = Rat::one();
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = num_integer::lcm(lcm, self[(i, j)].denom().clone());
            }
            scale *= Rat::new(BigInt::one(), lcm.clone());
            let row = (0..n)
                .map(|j| {
                    let v = &self[(i, j)];
                    v.numer() * (&lcm / v.denom())
                })
                .collect();
            m.push(row);
        }
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(Rat::zero());
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det_int = m[n - 1][n - 1].clone() * BigInt::from(sign);
        Ok(Rat::from_integer(det_int) * scale)
    }

    pub fn to_f64(&self) -> crate::numeric::FMatrix {
        let data = self.data.iter().map(rat_to_f64).collect();
        crate::numeric::FMatrix::from_vec(self.rows, self.cols, data)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn entries_to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(rat_to_string).collect())
            .collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<QMatrix> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| rat_from_str(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        QMatrix::from_rows(parsed)
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Max-norm distance to the identity, used by sanity checks in tests.
pub fn distance_to_identity(m: &QMatrix) -> Rat {
    let n = m.nrows();
    let mut worst = Rat::zero();
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { Rat::one() } else { Rat::zero() };
            let d = (&m[(i, j)] - target).abs();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}
