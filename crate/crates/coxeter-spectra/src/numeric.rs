//! Small dense f64 linear algebra for the floating-point analysis paths:
//! symmetric eigendecomposition (cyclic Jacobi), norms, LU determinants and
//! seeded random orthogonal matrices. Deterministic given fixed inputs.

use rand::Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct FMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(rows * cols, data.len());
        FMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        FMatrix { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> FMatrix {
        let mut out = FMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn matmul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        FMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        FMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: f64) -> FMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        FMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Linear combination of the columns with the given coefficients.
    pub fn apply_columns(&self, coeffs: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, coeffs.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * coeffs[j]).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn distance_to_identity(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self[(i, j)] - target).abs());
            }
        }
        worst
    }

    pub fn symmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn block_diag(blocks: &[&FMatrix]) -> FMatrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = FMatrix::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(ro + i, co + j)] = b[(i, j)];
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> f64 {
        assert!(self.rows == self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1.0;
        for k in 0..n {
            let (p, pval) = (k..n)
                .map(|i| (i, m[(i, k)].abs()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pval == 0.0 {
                return 0.0;
            }
            if p != k {
                for j in 0..n {
                    let tmp = m[(k, j)];
                    m[(k, j)] = m[(p, j)];
                    m[(p, j)] = tmp;
                }
                det = -det;
            }
            det *= m[(k, k)];
            for i in k + 1..n {
                let f = m[(i, k)] / m[(k, k)];
                for j in k..n {
                    let v = m[(k, j)];
                    m[(i, j)] -= f * v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for FMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigendecomposition of a symmetric matrix by the cyclic Jacobi method.
/// Returns eigenvalues in ascending order with matching orthonormal
/// eigenvectors as the columns of `vectors`.
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: FMatrix,
}

pub fn symmetric_eigen(a: &FMatrix) -> SymmetricEigen {
    assert!(a.rows == a.cols, "symmetric_eigen requires a square matrix");
    let n = a.rows;
    let mut m = a.clone();
    let mut v = FMatrix::identity(n);
    let max_sweeps = 64;
    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + m.frobenius_norm()) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).unwrap());
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vectors = FMatrix::zero(n, n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, new)] = v[(k, old)];
        }
    }
    SymmetricEigen { values, vectors }
}

/// Group eigenvalues into clusters whose members differ by at most `tol`.
/// Returns `(representative value, multiplicity, member indices)` per cluster.
pub fn cluster_eigenvalues(values: &[f64], tol: f64) -> Vec<(f64, usize, Vec<usize>)> {
    let mut clusters: Vec<(f64, usize, Vec<usize>)> = Vec::new();
    for (idx, &v) in values.iter().enumerate() {
        match clusters.last_mut() {
            Some(c) if (v - c.0).abs() <= tol => {
                c.1 += 1;
                c.2.push(idx);
                // Keep the representative as the running mean for stability.
                c.0 += (v - c.0) / c.1 as f64;
            }
            _ => clusters.push((v, 1, vec![idx])),
        }
    }
    clusters
}

/// A Haar-ish random orthogonal matrix from a seeded generator: Gaussian
/// entries followed by Gram–Schmidt.
pub fn random_orthogonal<R: Rng>(n: usize, rng: &mut R) -> FMatrix {
    loop {
        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
        for _ in 0..n {
            cols.push((0..n).map(|_| gaussian(rng)).collect());
        }
        if let Some(q) = gram_schmidt(&cols) {
            let mut m = FMatrix::zero(n, n);
            for (j, col) in q.iter().enumerate() {
                for i in 0..n {
                    m[(i, j)] = col[i];
                }
            }
            return m;
        }
    }
}

/// Random symmetric matrix with entries of size about 1.
pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R) -> FMatrix {
    let mut m = FMatrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let v = gaussian(rng);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller; deterministic for a fixed rng stream.
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn gram_schmidt(cols: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(cols.len());
    for col in cols {
        let mut v = col.clone();
        for q in &out {
            let dot: f64 = v.iter().zip(q).map(|(a, b)| a * b).sum();
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= dot * qi;
            }
        }
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-10 {
            return None;
        }
        for vi in v.iter_mut() {
            *vi /= norm;
        }
        out.push(v);
    }
    Some(out)
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
