//! Determinantal joint spectra of representations and their analysis:
//! proper spectra, bivariate slices, the line/ellipse decomposition for
//! involution pairs, the Chebyshev relation criterion, implicit-curve
//! identities, and the two-dimensional block decomposition.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{rat_from_f64, rat_int, rat_to_f64, rat_to_string, QMatrix, Rat};
use crate::numeric::{cluster_eigenvalues, symmetric_eigen, FMatrix};
use crate::poly::{charpoly, eval_univariate_at_matrix, pencil_det, rational_roots, tchebyshev, MultiPoly, Pencil};
use crate::rep::Representation;
use crate::system::{CoxeterSystem, Signature};

/// Default tolerance for floating identity checks.
pub const DEFAULT_IDENTITY_TOL: f64 = 1e-8;
/// Default tolerance for recovered block angles.
pub const DEFAULT_THETA_TOL: f64 = 1e-6;
/// Default cap on the total signature weight in trace sums.
pub const DEFAULT_TRACE_SUM_CAP: usize = 8;

/// The normalized determinantal polynomial of `x₀ρ(1) + x₁ρ(g₁) + …`,
/// with provenance attached.
#[derive(Debug, Clone)]
pub struct SpectrumPolynomial {
    pub poly: MultiPoly,
    pub system: CoxeterSystem,
    pub dim: usize,
    pub source: String,
}

/// Joint spectrum of an exact representation over `T = {1, g₁, …, g_n}`:
/// the pencil determinant, scale-normalized. Homogeneous of degree `dim ρ`.
pub fn joint_spectrum(rep: &Representation) -> Result<SpectrumPolynomial> {
    joint_spectrum_labeled(rep, "representation")
}

pub fn joint_spectrum_labeled(rep: &Representation, source: &str) -> Result<SpectrumPolynomial> {
    let mats = rep.exact_matrices()?;
    let mut pencil_mats = Vec::with_capacity(mats.len() + 1);
    pencil_mats.push(QMatrix::identity(rep.dim()));
    pencil_mats.extend(mats.iter().cloned());
    let pencil = Pencil::new(pencil_mats)?;
    let det = pencil_det(&pencil)?.scale_normalize();
    if !det.is_zero() && det.homogeneous_degree() != Some(rep.dim() as u64) {
        return Err(Error::InvariantViolation(
            "spectrum polynomial is not homogeneous of the representation dimension".into(),
        ));
    }
    Ok(SpectrumPolynomial {
        poly: det,
        system: rep.system().clone(),
        dim: rep.dim(),
        source: source.to_string(),
    })
}

/// The affine slice `x₀ := −1`, i.e. the defining polynomial of the proper
/// joint spectrum. Returned as computed, without rescaling.
pub fn proper_spectrum(p: &SpectrumPolynomial) -> Result<MultiPoly> {
    let nv = p.poly.nvars();
    let substituted = p.poly.substitute_value(0, &rat_int(-1))?;
    substituted.keep_vars(&(1..nv).collect::<Vec<_>>())
}

/// Slice onto the coordinate pair `(x_i, x_j)`: every other generator
/// coordinate is set to zero and `x₀ := −1`. The result is the defining
/// polynomial of the proper joint spectrum of `(ρ(g_i), ρ(g_j))` in the
/// variables `(x, y)`.
pub fn bivariate_slice(p: &SpectrumPolynomial, i: usize, j: usize) -> Result<MultiPoly> {
    let nv = p.poly.nvars();
    if i == 0 || j == 0 || i >= j || j >= nv {
        return Err(Error::Validation(format!(
            "slice indices must satisfy 1 <= i < j <= {}",
            nv - 1
        )));
    }
    let sliced = p.poly.zero_out_vars(&[0, i, j]);
    let substituted = sliced.substitute_value(0, &rat_int(-1))?;
    substituted.keep_vars(&[i, j])
}

/// Scheme equality of two joint spectra: the normalized polynomials are
/// identical. A dimension mismatch simply compares as unequal.
pub fn compare_spectra(r1: &Representation, r2: &Representation) -> Result<bool> {
    let p1 = joint_spectrum(r1)?;
    let p2 = joint_spectrum(r2)?;
    Ok(p1.poly == p2.poly)
}

/// An eigenvalue of `A₁A₂ + A₂A₁`, exact when the characteristic polynomial
/// splits over ℚ.
#[derive(Debug, Clone, PartialEq)]
pub enum AlphaValue {
    Exact(Rat),
    Approx(f64),
}

impl AlphaValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            AlphaValue::Exact(r) => rat_to_f64(r),
            AlphaValue::Approx(v) => *v,
        }
    }
}

impl Serialize for AlphaValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AlphaValue::Exact(r) => s.serialize_str(&rat_to_string(r)),
            AlphaValue::Approx(v) => s.serialize_f64(*v),
        }
    }
}

pub const LINE_LABELS: [&str; 4] = ["x+y=1", "x+y=-1", "x-y=1", "x-y=-1"];

/// Line and ellipse decomposition of the proper joint spectrum of an
/// involution pair. `lines[k]` is the multiplicity of `LINE_LABELS[k]`;
/// each `(α, n)` entry stands for the ellipse `x² + αxy + y² = 1` with
/// multiplicity `n`. `residual` flags an analysis this decomposition could
/// not complete.
#[derive(Debug, Clone, Serialize)]
pub struct DihedralSpectrumReport {
    pub dim: usize,
    pub lines: [usize; 4],
    pub ellipses: Vec<(AlphaValue, usize)>,
    pub residual: bool,
}

impl DihedralSpectrumReport {
    pub fn line_total(&self) -> usize {
        self.lines.iter().sum()
    }

    pub fn ellipse_total(&self) -> usize {
        self.ellipses.iter().map(|(_, n)| n).sum()
    }

    /// Assemble the defining polynomial of the proper joint spectrum from the
    /// reported components, as an exact polynomial in `(x, y)`, normalized to
    /// a leading coefficient of one. Approximate α values are embedded via
    /// their exact dyadic values.
    pub fn assemble_polynomial(&self) -> Result<MultiPoly> {
        let x = MultiPoly::var(2, 0)?;
        let y = MultiPoly::var(2, 1)?;
        let one = MultiPoly::one(2);
        let mut acc = one.clone();
        let line_factors = [
            x.add(&y)?.sub(&one)?,
            x.add(&y)?.add(&one)?,
            x.sub(&y)?.sub(&one)?,
            x.sub(&y)?.add(&one)?,
        ];
        for (factor, &mult) in line_factors.iter().zip(&self.lines) {
            acc = acc.mul(&factor.pow(mult)?)?;
        }
        for (alpha, mult) in &self.ellipses {
            let a = match alpha {
                AlphaValue::Exact(r) => r.clone(),
                AlphaValue::Approx(v) => rat_from_f64(*v)?,
            };
            let ellipse = x
                .pow(2)?
                .add(&y.pow(2)?)?
                .add(&x.mul(&y)?.scale(&a))?
                .sub(&one)?;
            acc = acc.mul(&ellipse.pow(*mult)?)?;
        }
        monic_normalize(&acc)
    }
}

/// Divide by the leading coefficient.
pub fn monic_normalize(p: &MultiPoly) -> Result<MultiPoly> {
    match p.leading() {
        None => Ok(p.clone()),
        Some((_, c)) => Ok(p.scale(&c.recip())),
    }
}

/// Exact common-eigenspace dimensions of an involution pair for the four
/// sign patterns `(+,+), (−,−), (+,−), (−,+)`.
fn common_eigenspace_dims(a1: &QMatrix, a2: &QMatrix) -> [usize; 4] {
    let n = a1.nrows();
    let patterns = [(1i64, 1i64), (-1, -1), (1, -1), (-1, 1)];
    let mut dims = [0usize; 4];
    for (slot, (s1, s2)) in patterns.iter().enumerate() {
        let mut stacked = QMatrix::zero(2 * n, n);
        for i in 0..n {
            for j in 0..n {
                let d1 = if i == j { rat_int(*s1) } else { Rat::zero() };
                let d2 = if i == j { rat_int(*s2) } else { Rat::zero() };
                stacked[(i, j)] = &a1[(i, j)] - d1;
                stacked[(n + i, j)] = &a2[(i, j)] - d2;
            }
        }
        dims[slot] = n - stacked.rank();
    }
    dims
}

/// Decompose the proper joint spectrum of an exact involution pair into
/// lines and ellipses via the spectral structure of `R = A₁A₂ + A₂A₁`:
/// eigenvalue ±2 parts give lines through the common eigenspaces, and every
/// other eigenvalue `α` of multiplicity `2n` gives the ellipse
/// `x² + αxy + y² = 1` with multiplicity `n`.
pub fn dihedral_report(a1: &QMatrix, a2: &QMatrix) -> Result<DihedralSpectrumReport> {
    if !a1.is_involution() || !a2.is_involution() {
        return Err(Error::NotInvolution);
    }
    if a1.nrows() != a2.nrows() {
        return Err(Error::Validation("involution pair must share a dimension".into()));
    }
    let n = a1.nrows();
    let r = a1.mul(a2)?.add(&a2.mul(a1)?)?;
    let cp = charpoly(&r)?;
    let (roots, rest) = rational_roots(&cp)?;

    let lines = {
        let dims = common_eigenspace_dims(a1, a2);
        [dims[0], dims[1], dims[2], dims[3]]
    };
    let mut residual = false;
    let mut ellipses: Vec<(AlphaValue, usize)> = Vec::new();
    let two = rat_int(2);
    for (root, mult) in &roots {
        if *root == two {
            if lines[0] + lines[1] != *mult {
                residual = true;
            }
        } else if *root == -two.clone() {
            if lines[2] + lines[3] != *mult {
                residual = true;
            }
        } else if mult % 2 == 0 {
            ellipses.push((AlphaValue::Exact(root.clone()), mult / 2));
        } else {
            residual = true;
        }
    }
    let rest_degree = rest.degree().unwrap_or(0);
    if rest_degree > 0 {
        // Irrational eigenvalues: fall back to numerics when R is symmetric.
        if r.is_symmetric() {
            let eig = symmetric_eigen(&r.to_f64());
            let mut remaining: Vec<f64> = eig.values.clone();
            // Remove the rational roots already accounted for.
            for (root, mult) in &roots {
                let target = rat_to_f64(root);
                for _ in 0..*mult {
                    if let Some(idx) = remaining
                        .iter()
                        .position(|v| (v - target).abs() < 1e-8)
                    {
                        remaining.remove(idx);
                    }
                }
            }
            for (alpha, mult, _) in cluster_eigenvalues(&remaining, 1e-8) {
                if mult % 2 == 0 {
                    ellipses.push((AlphaValue::Approx(alpha), mult / 2));
                } else {
                    residual = true;
                }
            }
        } else {
            residual = true;
        }
    }
    ellipses.sort_by(|a, b| b.0.as_f64().partial_cmp(&a.0.as_f64()).unwrap());
    let report = DihedralSpectrumReport { dim: n, lines, ellipses, residual };
    if report.line_total() + 2 * report.ellipse_total() != n {
        return Ok(DihedralSpectrumReport { residual: true, ..report });
    }
    Ok(report)
}

/// Floating-point variant of [`dihedral_report`] for symmetric involution
/// pairs; eigenvalues of `R` are clustered with the given tolerance.
pub fn dihedral_report_float(a1: &FMatrix, a2: &FMatrix, tol: f64) -> Result<DihedralSpectrumReport> {
    check_float_involution(a1, tol)?;
    check_float_involution(a2, tol)?;
    let n = a1.nrows();
    let r = a1.matmul(a2).add(&a2.matmul(a1));
    let eig = symmetric_eigen(&r);
    let clusters = cluster_eigenvalues(&eig.values, 1e-6_f64.max(10.0 * tol));
    let mut lines = [0usize; 4];
    let mut ellipses = Vec::new();
    let mut residual = false;
    for (alpha, mult, members) in clusters {
        if (alpha - 2.0).abs() < 1e-6 {
            let (plus, minus) = split_common_eigenvectors(a1, a2, &eig.vectors, &members, 1.0)?;
            lines[0] = plus;
            lines[1] = minus;
            if plus + minus != mult {
                residual = true;
            }
        } else if (alpha + 2.0).abs() < 1e-6 {
            let (plus, minus) = split_common_eigenvectors(a1, a2, &eig.vectors, &members, -1.0)?;
            lines[2] = plus;
            lines[3] = minus;
            if plus + minus != mult {
                residual = true;
            }
        } else if mult % 2 == 0 {
            ellipses.push((AlphaValue::Approx(alpha), mult / 2));
        } else {
            residual = true;
        }
    }
    ellipses.sort_by(|a, b| b.0.as_f64().partial_cmp(&a.0.as_f64()).unwrap());
    let report = DihedralSpectrumReport { dim: n, lines, ellipses, residual };
    if report.line_total() + 2 * report.ellipse_total() != n {
        return Ok(DihedralSpectrumReport { residual: true, ..report });
    }
    Ok(report)
}

fn check_float_involution(a: &FMatrix, tol: f64) -> Result<()> {
    if a.symmetry_defect() > tol {
        return Err(Error::ToleranceViolation(format!(
            "matrix is not symmetric within {tol:e}"
        )));
    }
    if a.matmul(a).distance_to_identity() > tol {
        return Err(Error::ToleranceViolation(format!(
            "matrix is not an involution within {tol:e}"
        )));
    }
    Ok(())
}

/// Within the `R = ±2` eigenspace the pair acts by common eigenvectors; count
/// them per sign of `A₁` (the `A₂` sign is then `±` that sign).
fn split_common_eigenvectors(
    a1: &FMatrix,
    a2: &FMatrix,
    vectors: &FMatrix,
    members: &[usize],
    sign_product: f64,
) -> Result<(usize, usize)> {
    let q = columns(vectors, members);
    let restricted = q.transpose().matmul(&a1.matmul(&q));
    let eig = symmetric_eigen(&restricted);
    let (mut plus, mut minus) = (0usize, 0usize);
    for (k, &val) in eig.values.iter().enumerate() {
        let coeffs: Vec<f64> = (0..members.len()).map(|i| eig.vectors[(i, k)]).collect();
        let v = q.apply_columns(&coeffs);
        let a2v = a2.apply(&v);
        let expected_sign = val.signum() * sign_product;
        let defect: f64 = a2v
            .iter()
            .zip(&v)
            .map(|(x, y)| (x - expected_sign * y).abs())
            .fold(0.0, f64::max);
        if (val.abs() - 1.0).abs() > 1e-6 || defect > 1e-6 {
            return Err(Error::InvariantViolation(
                "R = ±2 eigenspace is not spanned by common eigenvectors".into(),
            ));
        }
        if val > 0.0 {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    Ok((plus, minus))
}

fn columns(m: &FMatrix, indices: &[usize]) -> FMatrix {
    let n = m.nrows();
    let mut out = FMatrix::zero(n, indices.len());
    for (new_c, &c) in indices.iter().enumerate() {
        for i in 0..n {
            out[(i, new_c)] = m[(i, c)];
        }
    }
    out
}

/// The Chebyshev relation criterion: for exact unitary involutions,
/// `(A₁A₂)^m = I` iff `T_m(R/2) = I` with `R = A₁A₂ + A₂A₁`. Both sides are
/// computed exactly and must agree.
pub fn verify_relation_chebyshev(a1: &QMatrix, a2: &QMatrix, m: usize) -> Result<bool> {
    if m < 2 {
        return Err(Error::Validation("relation exponent must be at least 2".into()));
    }
    if !a1.is_involution() || !a2.is_involution() {
        return Err(Error::NotInvolution);
    }
    let r_half = a1
        .mul(a2)?
        .add(&a2.mul(a1)?)?
        .scale(&Rat::new(1.into(), 2.into()));
    let chebyshev_side = eval_univariate_at_matrix(&tchebyshev(m), &r_half)?.is_identity();
    let direct_side = a1.mul(a2)?.pow(m)?.is_identity();
    if chebyshev_side != direct_side {
        return Err(Error::InvariantViolation(
            "Chebyshev criterion disagrees with the direct power; are the inputs unitary?".into(),
        ));
    }
    Ok(direct_side)
}

/// `{2cos(2πk/m)}`, deduplicated, in descending order. Crystallographic
/// values land exactly on the integers −2, −1, 0, 1, 2.
pub fn alpha_candidates(m: usize) -> Result<Vec<f64>> {
    if m < 2 {
        return Err(Error::Validation("m must be at least 2".into()));
    }
    Ok((0..=m / 2)
        .map(|k| {
            let v = 2.0 * (std::f64::consts::TAU * k as f64 / m as f64).cos();
            if (v - v.round()).abs() < 1e-12 {
                v.round()
            } else {
                v
            }
        })
        .collect())
}

/// Outcome of the implicit-curve identity check at an eigenvalue `λ` of `A₁`.
#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub lambda: f64,
    pub x1_prime: f64,
    pub x1_double_prime: f64,
    pub identity_first_order: f64,
    pub identity_second_order: f64,
}

impl CurveReport {
    pub fn within(&self, tol: f64) -> bool {
        self.identity_first_order <= tol && self.identity_second_order <= tol
    }
}

/// Defining polynomial `det(−I + x₁A₁ + x₂A₂)` with the float entries
/// embedded exactly.
pub fn proper_pair_polynomial(a1: &FMatrix, a2: &FMatrix) -> Result<MultiPoly> {
    let n = a1.nrows();
    if a2.nrows() != n || a1.ncols() != n || a2.ncols() != n {
        return Err(Error::Validation("pair must be square of equal size".into()));
    }
    let x1 = MultiPoly::var(2, 0)?;
    let x2 = MultiPoly::var(2, 1)?;
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = x1.scale(&rat_from_f64(a1[(i, j)])?);
            e = e.add(&x2.scale(&rat_from_f64(a2[(i, j)])?))?;
            if i == j {
                e = e.sub(&MultiPoly::one(2))?;
            }
            row.push(e);
        }
        entries.push(row);
    }
    crate::poly::poly_matrix_det(entries, 2)
}

/// Verify the two projection identities of the implicit-curve analysis at a
/// nonzero eigenvalue `λ` of the self-adjoint `A₁`:
/// with `x₁(x₂)` the branch of `{ℱ = 0}` through `(1/λ, 0)`,
/// `P A₂ P = −λ x₁′(0) P` and `P A₂ T A₂ P = (λ x₁″(0)/2) P`, where `T`
/// reweights the spectral projections of `A₁` by `λ/(w − λ)`.
///
/// Derivatives are obtained by implicit differentiation of the exact pair
/// polynomial; hypothesis failures are reported as errors, never guessed.
pub fn curve_identity_check(a1: &FMatrix, a2: &FMatrix, lambda: f64) -> Result<CurveReport> {
    let n = a1.nrows();
    if a1.symmetry_defect() > 1e-9 || a2.symmetry_defect() > 1e-9 {
        return Err(Error::Validation("curve identities need self-adjoint matrices".into()));
    }
    if lambda.abs() < 1e-9 {
        return Err(Error::HypothesisNotMet("λ must be nonzero".into()));
    }

    let f = proper_pair_polynomial(a1, a2)?;
    let f1 = f.partial_derivative(0)?;
    let f2 = f.partial_derivative(1)?;
    let f11 = f1.partial_derivative(0)?;
    let f12 = f1.partial_derivative(1)?;
    let f22 = f2.partial_derivative(1)?;
    let pt = [1.0 / lambda, 0.0];
    let (d1, d2) = (f1.eval_f64(&pt), f2.eval_f64(&pt));
    let scale = 1.0 + d1.abs().max(d2.abs());
    if d1.abs() <= 1e-7 * scale {
        return Err(Error::HypothesisNotMet(format!(
            "ℱ_x1(1/λ, 0) ≈ {d1:.3e} vanishes; the implicit branch is not defined"
        )));
    }
    let x1_prime = -d2 / d1;
    let x1_double_prime =
        -(f22.eval_f64(&pt) + 2.0 * f12.eval_f64(&pt) * x1_prime + f11.eval_f64(&pt) * x1_prime * x1_prime)
            / d1;

    // Spectral projections of A₁.
    let eig = symmetric_eigen(a1);
    let clusters = cluster_eigenvalues(&eig.values, 1e-8);
    let Some(lambda_cluster) = clusters.iter().find(|(v, _, _)| (v - lambda).abs() < 1e-6) else {
        return Err(Error::HypothesisNotMet(format!("λ = {lambda} is not an eigenvalue of A₁")));
    };
    let separation = clusters
        .iter()
        .filter(|(v, _, _)| (v - lambda_cluster.0).abs() > 1e-12)
        .map(|(v, _, _)| (v - lambda_cluster.0).abs())
        .fold(f64::INFINITY, f64::min);
    if separation < 1e-6 {
        return Err(Error::HypothesisNotMet("λ-eigenspace is not separated".into()));
    }

    let projector = |members: &[usize]| -> FMatrix {
        let mut p = FMatrix::zero(n, n);
        for &k in members {
            for i in 0..n {
                for j in 0..n {
                    p[(i, j)] += eig.vectors[(i, k)] * eig.vectors[(j, k)];
                }
            }
        }
        p
    };
    let p = projector(&lambda_cluster.2);
    let mut t = FMatrix::zero(n, n);
    for (w, _, members) in &clusters {
        if (w - lambda_cluster.0).abs() > 1e-12 {
            let pw = projector(members);
            t = t.add(&pw.scale(lambda_cluster.0 / (w - lambda_cluster.0)));
        }
    }

    let pa2p = p.matmul(a2).matmul(&p);
    let first = pa2p.add(&p.scale(lambda_cluster.0 * x1_prime)).max_abs();
    let pa2ta2p = p.matmul(a2).matmul(&t).matmul(a2).matmul(&p);
    let second = pa2ta2p
        .sub(&p.scale(lambda_cluster.0 * x1_double_prime / 2.0))
        .max_abs();

    Ok(CurveReport {
        lambda: lambda_cluster.0,
        x1_prime,
        x1_double_prime,
        identity_first_order: first,
        identity_second_order: second,
    })
}

/// One two-dimensional common invariant block of an involution pair.
#[derive(Debug, Clone)]
pub struct InvolutionBlock {
    /// Angle parameter in `(0, 1/2)` with `α = 2cos(2πθ)`.
    pub theta: f64,
    pub alpha: f64,
    /// Orthonormal basis (two vectors) of the block.
    pub basis: [Vec<f64>; 2],
    /// The restricted pair on that basis.
    pub restricted: [FMatrix; 2],
}

/// Decomposition of a self-adjoint unitary involution pair into common
/// eigenvectors and two-dimensional common invariant blocks.
#[derive(Debug, Clone)]
pub struct PairDecomposition {
    /// `(sign for A₁, sign for A₂, eigenvector)`.
    pub common: Vec<(i8, i8, Vec<f64>)>,
    pub blocks: Vec<InvolutionBlock>,
}

impl PairDecomposition {
    pub fn theta_multiset(&self) -> Vec<f64> {
        let mut thetas: Vec<f64> = self.blocks.iter().map(|b| b.theta).collect();
        thetas.sort_by(|a, b| a.partial_cmp(b).unwrap());
        thetas
    }
}

/// Split an involution pair into `r` two-dimensional common invariant
/// subspaces per ellipse component plus common eigenvectors for the line
/// components, following the spectral decomposition of `R = A₁A₂ + A₂A₁`.
pub fn decompose_involution_pair(a1: &FMatrix, a2: &FMatrix, tol: f64) -> Result<PairDecomposition> {
    check_float_involution(a1, tol)?;
    check_float_involution(a2, tol)?;
    let r = a1.matmul(a2).add(&a2.matmul(a1));
    let eig = symmetric_eigen(&r);
    let clusters = cluster_eigenvalues(&eig.values, 1e-6_f64.max(10.0 * tol));

    let mut common = Vec::new();
    let mut blocks = Vec::new();
    for (alpha, mult, members) in &clusters {
        let q = columns(&eig.vectors, members);
        if (alpha - 2.0).abs() < 1e-6 || (alpha + 2.0).abs() < 1e-6 {
            let sign_product = if *alpha > 0.0 { 1.0 } else { -1.0 };
            let restricted = q.transpose().matmul(&a1.matmul(&q));
            let sub = symmetric_eigen(&restricted);
            for k in 0..*mult {
                let coeffs: Vec<f64> = (0..*mult).map(|i| sub.vectors[(i, k)]).collect();
                let v = q.apply_columns(&coeffs);
                let s1 = if sub.values[k] > 0.0 { 1i8 } else { -1i8 };
                let s2 = if sign_product > 0.0 { s1 } else { -s1 };
                let defect: f64 = a2
                    .apply(&v)
                    .iter()
                    .zip(&v)
                    .map(|(x, y)| (x - f64::from(s2) * y).abs())
                    .fold(0.0, f64::max);
                if defect > 1e-6 {
                    return Err(Error::InvariantViolation(
                        "line component vector is not a common eigenvector".into(),
                    ));
                }
                common.push((s1, s2, v));
            }
        } else {
            if mult % 2 != 0 {
                return Err(Error::InvariantViolation(format!(
                    "ellipse eigenvalue {alpha} has odd multiplicity {mult}"
                )));
            }
            let theta = (alpha / 2.0).acos() / std::f64::consts::TAU;
            let mut basis = q;
            for _ in 0..mult / 2 {
                let (block, rest) = extract_block(a1, a2, &basis, theta, *alpha)?;
                blocks.push(block);
                basis = rest;
            }
        }
    }
    blocks.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    Ok(PairDecomposition { common, blocks })
}

/// Take a `+1` eigenvector `e` of `A₁` restricted to the invariant subspace
/// spanned by `basis`, pair it with `A₂e`, orthonormalize, and return the
/// block plus an orthonormal basis of the orthocomplement inside the span.
fn extract_block(
    a1: &FMatrix,
    a2: &FMatrix,
    basis: &FMatrix,
    theta: f64,
    alpha: f64,
) -> Result<(InvolutionBlock, FMatrix)> {
    let d = basis.ncols();
    let restricted = basis.transpose().matmul(&a1.matmul(basis));
    let sub = symmetric_eigen(&restricted);
    // Eigenvalues ascend; take the top one (≈ +1).
    let k = d - 1;
    if (sub.values[k] - 1.0).abs() > 1e-6 {
        return Err(Error::InvariantViolation(
            "restricted involution has no +1 eigenvector".into(),
        ));
    }
    let coeffs: Vec<f64> = (0..d).map(|i| sub.vectors[(i, k)]).collect();
    let e = basis.apply_columns(&coeffs);
    let a2e = a2.apply(&e);
    let dot_e: f64 = crate::numeric::dot(&a2e, &e);
    let mut f: Vec<f64> = a2e.iter().zip(&e).map(|(x, y)| x - dot_e * y).collect();
    let norm_f = crate::numeric::norm(&f);
    if norm_f < 1e-8 {
        return Err(Error::InvariantViolation(
            "A₂e is parallel to e inside an ellipse component".into(),
        ));
    }
    for v in f.iter_mut() {
        *v /= norm_f;
    }

    let n = e.len();
    let restrict2 = |m: &FMatrix| -> FMatrix {
        let me = m.apply(&e);
        let mf = m.apply(&f);
        FMatrix::from_rows(&[
            vec![crate::numeric::dot(&me, &e), crate::numeric::dot(&mf, &e)],
            vec![crate::numeric::dot(&me, &f), crate::numeric::dot(&mf, &f)],
        ])
    };
    let block = InvolutionBlock {
        theta,
        alpha,
        basis: [e.clone(), f.clone()],
        restricted: [restrict2(a1), restrict2(a2)],
    };

    // Orthocomplement of {e, f} within the span of `basis`.
    let mut rest_cols: Vec<Vec<f64>> = Vec::new();
    for c in 0..d {
        let mut v: Vec<f64> = (0..n).map(|i| basis[(i, c)]).collect();
        for q in [&e, &f] {
            let dot = crate::numeric::dot(&v, q);
            for (vi, qi) in v.iter_mut().zip(q.iter()) {
                *vi -= dot * qi;
            }
        }
        for q in &rest_cols {
            let dot = crate::numeric::dot(&v, q);
            for (vi, qi) in v.iter_mut().zip(q.iter()) {
                *vi -= dot * qi;
            }
        }
        let nv = crate::numeric::norm(&v);
        if nv > 1e-7 {
            for vi in v.iter_mut() {
                *vi /= nv;
            }
            rest_cols.push(v);
        }
    }
    if rest_cols.len() != d - 2 {
        return Err(Error::InvariantViolation(format!(
            "orthocomplement has dimension {} instead of {}",
            rest_cols.len(),
            d - 2
        )));
    }
    let mut rest = FMatrix::zero(n, d - 2);
    for (c, col) in rest_cols.iter().enumerate() {
        for i in 0..n {
            rest[(i, c)] = col[i];
        }
    }
    Ok((block, rest))
}

/// Sum of `trace ρ(w)` over all words `w` with the given signature,
/// enumerating multiset permutations in lexicographic order.
pub fn signature_trace_sum(rep: &Representation, sig: &Signature, cap: usize) -> Result<Rat> {
    let total = sig.total();
    if total > cap {
        return Err(Error::CapExceeded { cap });
    }
    if sig.0.len() != rep.system().generator_count() {
        return Err(Error::LengthMismatch(sig.0.len(), rep.system().generator_count()));
    }
    let mut letters = Vec::with_capacity(total);
    for (idx, &count) in sig.0.iter().enumerate() {
        letters.extend(std::iter::repeat_n(idx + 1, count));
    }
    let mut sum = Rat::zero();
    loop {
        sum += rep.eval_word(&letters)?.trace();
        if !next_permutation(&mut letters) {
            break;
        }
    }
    Ok(sum)
}

fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

#[derive(Serialize, Deserialize)]
pub struct MatrixPairFile {
    pub a1: Vec<Vec<String>>,
    pub a2: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::{enumerate_group, regular_representation};
    use crate::rep::{alternating_rep, direct_sum, irrep_table, trivial_rep};
    use crate::system::Word;

    fn a2_sys() -> CoxeterSystem {
        CoxeterSystem::type_a(2).unwrap()
    }

    #[test]
    fn one_dimensional_spectra() {
        let sys = a2_sys();
        let triv = trivial_rep(&sys).unwrap();
        let js = joint_spectrum(&triv).unwrap();
        let expect: MultiPoly = {
            let x0 = MultiPoly::var(3, 0).unwrap();
            let x1 = MultiPoly::var(3, 1).unwrap();
            let x2 = MultiPoly::var(3, 2).unwrap();
            x0.add(&x1).unwrap().add(&x2).unwrap()
        };
        assert_eq!(js.poly, expect);

        let sign = alternating_rep(&sys).unwrap();
        let js = joint_spectrum(&sign).unwrap();
        let expect: MultiPoly = {
            let x0 = MultiPoly::var(3, 0).unwrap();
            let x1 = MultiPoly::var(3, 1).unwrap();
            let x2 = MultiPoly::var(3, 2).unwrap();
            x0.sub(&x1).unwrap().sub(&x2).unwrap()
        };
        assert_eq!(js.poly, expect);
    }

    #[test]
    fn regular_spectrum_of_s3_factors() {
        let sys = a2_sys();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        let js = joint_spectrum(&reg).unwrap();

        let x0 = MultiPoly::var(3, 0).unwrap();
        let x1 = MultiPoly::var(3, 1).unwrap();
        let x2 = MultiPoly::var(3, 2).unwrap();
        let lin1 = x0.add(&x1).unwrap().add(&x2).unwrap();
        let lin2 = x0.sub(&x1).unwrap().sub(&x2).unwrap();
        let quad = x0
            .pow(2)
            .unwrap()
            .sub(&x1.pow(2).unwrap())
            .unwrap()
            .sub(&x2.pow(2).unwrap())
            .unwrap()
            .add(&x1.mul(&x2).unwrap())
            .unwrap();
        let expected = lin1
            .mul(&lin2)
            .unwrap()
            .mul(&quad.pow(2).unwrap())
            .unwrap()
            .scale_normalize();
        assert_eq!(js.poly, expected);
    }

    #[test]
    fn proper_spectrum_substitutes_minus_one() {
        let sys = CoxeterSystem::type_a(1).unwrap();
        let triv = trivial_rep(&sys).unwrap();
        let js = joint_spectrum(&triv).unwrap();
        let proper = proper_spectrum(&js).unwrap();
        // x0 + x1 becomes x1 − 1.
        let x = MultiPoly::var(1, 0).unwrap();
        assert_eq!(proper, x.sub(&MultiPoly::one(1)).unwrap());
    }

    #[test]
    fn slice_of_trivial_summand_contains_the_line() {
        let sys = a2_sys();
        let triv = trivial_rep(&sys).unwrap();
        let js = joint_spectrum(&triv).unwrap();
        let slice = bivariate_slice(&js, 1, 2).unwrap();
        let x = MultiPoly::var(2, 0).unwrap();
        let y = MultiPoly::var(2, 1).unwrap();
        let line = x.add(&y).unwrap().sub(&MultiPoly::one(2)).unwrap();
        assert_eq!(slice, line);
        assert!(bivariate_slice(&js, 2, 1).is_err());
    }

    #[test]
    fn dihedral_report_small_cases() {
        // diag(1,−1) with the swap: R = 0, a single unit circle.
        let a1 = QMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let a2 = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let report = dihedral_report(&a1, &a2).unwrap();
        assert_eq!(report.lines, [0, 0, 0, 0]);
        assert_eq!(report.ellipses.len(), 1);
        assert_eq!(report.ellipses[0].1, 1);
        assert_eq!(report.ellipses[0].0.as_f64(), 0.0);
        assert!(!report.residual);

        // Identical diagonal involutions: two lines, no ellipses.
        let report = dihedral_report(&a1, &a1).unwrap();
        assert_eq!(report.lines, [1, 1, 0, 0]);
        assert!(report.ellipses.is_empty());
        assert!(!report.residual);

        // Non-involutions are rejected.
        let bad = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert!(dihedral_report(&bad, &a2).is_err());
    }

    #[test]
    fn b2_regular_pair_report() {
        let sys = CoxeterSystem::type_b(2).unwrap();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        let mats = reg.exact_matrices().unwrap();
        let report = dihedral_report(&mats[0], &mats[1]).unwrap();
        assert_eq!(report.lines, [1, 1, 1, 1]);
        assert_eq!(report.ellipses.len(), 1);
        assert_eq!(report.ellipses[0].0.as_f64(), 0.0);
        assert_eq!(report.ellipses[0].1, 2);
        assert!(!report.residual);
        // α values lie among the candidates for m = 4.
        let candidates = alpha_candidates(4).unwrap();
        assert_eq!(candidates, vec![2.0, 0.0, -2.0]);
        for (alpha, _) in &report.ellipses {
            assert!(candidates.iter().any(|c| (c - alpha.as_f64()).abs() < 1e-12));
        }
        // The assembled polynomial matches the bivariate slice.
        let js = joint_spectrum(&reg).unwrap();
        let slice = bivariate_slice(&js, 1, 2).unwrap();
        let assembled = report.assemble_polynomial().unwrap();
        assert_eq!(monic_normalize(&slice).unwrap(), assembled);
    }

    #[test]
    fn pentagon_reflections_mix_exact_and_numeric_alphas() {
        // Two reflections of the pentagon acting on the 5 vertices: the
        // vertex representation splits as trivial ⊕ θ=1/5 ⊕ θ=2/5, so the
        // report has one line and two golden-ratio ellipses. The α values are
        // irrational, which drives the numeric fallback of the exact path.
        let perm = |pairs: &[(usize, usize)]| {
            let mut m = QMatrix::identity(5);
            for &(a, b) in pairs {
                m[(a, a)] = rat_int(0);
                m[(b, b)] = rat_int(0);
                m[(a, b)] = rat_int(1);
                m[(b, a)] = rat_int(1);
            }
            m
        };
        let a1 = perm(&[(1, 4), (2, 3)]);
        let a2 = perm(&[(0, 1), (2, 4)]);
        let report = dihedral_report(&a1, &a2).unwrap();
        assert!(!report.residual);
        assert_eq!(report.lines, [1, 0, 0, 0]);
        assert_eq!(report.ellipses.len(), 2);
        let golden = [2.0 * (0.4 * std::f64::consts::PI).cos(), 2.0 * (0.8 * std::f64::consts::PI).cos()];
        for ((alpha, mult), expected) in report.ellipses.iter().zip(golden) {
            assert!(matches!(alpha, AlphaValue::Approx(_)));
            assert!((alpha.as_f64() - expected).abs() < 1e-9);
            assert_eq!(*mult, 1);
        }
        // Every α sits among the m = 5 candidates.
        let candidates = alpha_candidates(5).unwrap();
        for (alpha, _) in &report.ellipses {
            assert!(candidates.iter().any(|c| (c - alpha.as_f64()).abs() < 1e-9));
        }
    }

    #[test]
    fn b2_regular_r_matrix_charpoly() {
        // R = A1A2 + A2A1 for the B2 regular pair has eigenvalues 2, 0, −2
        // with multiplicities 2, 4, 2: charpoly x⁴(x−2)²(x+2)² = x⁸−8x⁶+16x⁴.
        let sys = CoxeterSystem::type_b(2).unwrap();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        let mats = reg.exact_matrices().unwrap();
        let r = mats[0].mul(&mats[1]).unwrap().add(&mats[1].mul(&mats[0]).unwrap()).unwrap();
        let cp = crate::poly::charpoly(&r).unwrap();
        assert_eq!(cp, crate::oracle::faddeev_leverrier_charpoly(&r).unwrap());
        let (roots, rest) = crate::poly::rational_roots(&cp).unwrap();
        assert_eq!(rest.degree().unwrap_or(0), 0);
        let mut found: Vec<(i64, usize)> = roots
            .iter()
            .map(|(root, m)| (rat_to_f64(root) as i64, *m))
            .collect();
        found.sort_unstable();
        assert_eq!(found, vec![(-2, 2), (0, 4), (2, 2)]);
    }

    #[test]
    fn proper_spectrum_matches_direct_determinant_values() {
        // F(1,1) and F(−1,−1) for the A2 regular pair equal the determinants
        // det(−I ± A1 ± A2) computed directly.
        let sys = a2_sys();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        let js = joint_spectrum(&reg).unwrap();
        let proper = proper_spectrum(&js).unwrap();
        let mats = reg.exact_matrices().unwrap();
        for sign in [1i64, -1] {
            let s = rat_int(sign);
            let mut m = mats[0].scale(&s).add(&mats[1].scale(&s)).unwrap();
            for i in 0..6 {
                m[(i, i)] -= rat_int(1);
            }
            let direct = m.det().unwrap();
            let via_poly = proper.eval(&[s.clone(), s.clone()]).unwrap();
            assert_eq!(direct, via_poly, "sign {sign}");
        }
    }

    #[test]
    fn a2_slice_follows_from_the_verified_sextic() {
        // Substituting into the independently verified factored sextic gives
        // the same bivariate slice as the implementation path.
        let sys = a2_sys();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        let js = joint_spectrum(&reg).unwrap();
        let slice = bivariate_slice(&js, 1, 2).unwrap();

        let x0 = MultiPoly::var(3, 0).unwrap();
        let x1 = MultiPoly::var(3, 1).unwrap();
        let x2 = MultiPoly::var(3, 2).unwrap();
        let sextic = x0
            .add(&x1)
            .unwrap()
            .add(&x2)
            .unwrap()
            .mul(&x0.sub(&x1).unwrap().sub(&x2).unwrap())
            .unwrap()
            .mul(
                &x0.pow(2)
                    .unwrap()
                    .sub(&x1.pow(2).unwrap())
                    .unwrap()
                    .sub(&x2.pow(2).unwrap())
                    .unwrap()
                    .add(&x1.mul(&x2).unwrap())
                    .unwrap()
                    .pow(2)
                    .unwrap(),
            )
            .unwrap();
        let expected = sextic
            .substitute_value(0, &rat_int(-1))
            .unwrap()
            .keep_vars(&[1, 2])
            .unwrap();
        assert_eq!(slice, expected);
        // The trivial summand contributes the line x + y = 1.
        let x = MultiPoly::var(2, 0).unwrap();
        let y = MultiPoly::var(2, 1).unwrap();
        let line = x.add(&y).unwrap().sub(&MultiPoly::one(2)).unwrap();
        assert!(slice.div_exact(&line).is_ok());
    }

    #[test]
    fn eigenvalue_multiplicity_matches_component_multiplicity() {
        // At a rational point of the circle component off the axes, the
        // kernel of u₁A₁ + u₂A₂ − I has the component's multiplicity.
        let sys = CoxeterSystem::type_b(2).unwrap();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        let mats = reg.exact_matrices().unwrap();
        // (3/5, 4/5) lies on x² + y² = 1, which has multiplicity 2 in the
        // 8-dimensional regular pair.
        let u1 = Rat::new(3.into(), 5.into());
        let u2 = Rat::new(4.into(), 5.into());
        let mut m = mats[0].scale(&u1).add(&mats[1].scale(&u2)).unwrap();
        for i in 0..8 {
            m[(i, i)] -= rat_int(1);
        }
        assert_eq!(m.kernel_basis().len(), 2);

        // In the 2-dimensional irreducible the same circle has multiplicity 1.
        let irreps = irrep_table(&sys).unwrap();
        let two_dim = irreps.iter().find(|r| r.dim() == 2).unwrap();
        let im = two_dim.exact_matrices().unwrap();
        let mut m = im[0].scale(&u1).add(&im[1].scale(&u2)).unwrap();
        for i in 0..2 {
            m[(i, i)] -= rat_int(1);
        }
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn canonical_pair_with_two_blocks_decomposes_at_quarter_theta() {
        // Two copies of the canonical reflection block at θ = 1/4 (the pair
        // generating B2): the decomposition finds two blocks, both θ = 1/4.
        let (c1, c2) = crate::rep::dihedral_reflection_pair(0.25);
        let a1 = FMatrix::block_diag(&[&c1, &c1]);
        let a2 = FMatrix::block_diag(&[&c2, &c2]);
        let decomp = decompose_involution_pair(&a1, &a2, 1e-10).unwrap();
        assert!(decomp.common.is_empty());
        let thetas = decomp.theta_multiset();
        assert_eq!(thetas.len(), 2);
        assert!(thetas.iter().all(|t| (t - 0.25).abs() < 1e-9));
    }

    #[test]
    fn chebyshev_relation_criterion() {
        let sys = a2_sys();
        let g1 = crate::realize::realize_generator(1, &sys).unwrap();
        let g2 = crate::realize::realize_generator(2, &sys).unwrap();
        let m1 = g1.as_signed().unwrap().matrix();
        let m2 = g2.as_signed().unwrap().matrix();
        assert!(verify_relation_chebyshev(&m1, &m2, 3).unwrap());
        assert!(!verify_relation_chebyshev(&m1, &m2, 2).unwrap());

        let b2 = CoxeterSystem::type_b(2).unwrap();
        let h1 = crate::realize::realize_generator(1, &b2).unwrap().as_signed().unwrap().matrix();
        let h2 = crate::realize::realize_generator(2, &b2).unwrap().as_signed().unwrap().matrix();
        assert!(verify_relation_chebyshev(&h1, &h2, 4).unwrap());
        assert!(!verify_relation_chebyshev(&h1, &h2, 3).unwrap());
    }

    #[test]
    fn alpha_candidate_sets() {
        assert_eq!(alpha_candidates(2).unwrap(), vec![2.0, -2.0]);
        let a3 = alpha_candidates(3).unwrap();
        assert_eq!(a3.len(), 2);
        assert!((a3[1] + 1.0).abs() < 1e-12);
        assert!(alpha_candidates(1).is_err());
    }

    #[test]
    fn curve_identities_on_the_circle() {
        let a1 = FMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
        let a2 = FMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let report = curve_identity_check(&a1, &a2, 1.0).unwrap();
        assert!(report.x1_prime.abs() < 1e-10);
        assert!((report.x1_double_prime + 1.0).abs() < 1e-8);
        assert!(report.within(1e-10), "{report:?}");

        // Degenerate A₂ = 0.
        let zero = FMatrix::zero(2, 2);
        let report = curve_identity_check(&a1, &zero, 1.0).unwrap();
        assert!(report.x1_prime.abs() < 1e-12);
        assert!(report.within(1e-10));

        // λ = 0 is rejected.
        assert!(matches!(
            curve_identity_check(&a1, &a2, 0.0),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn curve_identity_scales_with_lambda() {
        // A pair where λ ≠ 1 separates the correct identity
        // P A₂ P = −λ x₁′(0) P from the unscaled variant. Here
        // A₁ = diag(2, −2), A₂ = [[1, 1], [1, 0]], λ = 2:
        // ℱ = 1 − 4x₁² − x₂ − 2x₁x₂ − x₂², so x₁′(0) = −1/2 at (1/2, 0),
        // while P A₂ P = P exactly.
        let a1 = FMatrix::from_rows(&[vec![2.0, 0.0], vec![0.0, -2.0]]);
        let a2 = FMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 0.0]]);
        let report = curve_identity_check(&a1, &a2, 2.0).unwrap();
        assert!((report.x1_prime + 0.5).abs() < 1e-10, "{}", report.x1_prime);
        assert!(report.within(1e-10), "{report:?}");
        // The unscaled form would be off by |PA₂P + x₁′(0)P| = 1/2.
        let unscaled = 1.0 + report.x1_prime;
        assert!((unscaled - 0.5).abs() < 1e-10);
        // Finite-difference tracking agrees with the implicit derivatives.
        let (fd1, fd2) = crate::oracle::finite_difference_curve(&a1, &a2, 2.0, 2e-3).unwrap();
        assert!((report.x1_prime - fd1).abs() < 1e-7);
        assert!((report.x1_double_prime - fd2).abs() < 1e-6);
    }

    #[test]
    fn decompose_recovers_planted_blocks() {
        use crate::numeric::random_orthogonal;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        let thetas = [0.2, 0.4]; // 1/5 and 2/5
        let mut blocks1 = Vec::new();
        let mut blocks2 = Vec::new();
        for &theta in &thetas {
            let (c1, c2) = crate::rep::dihedral_reflection_pair(theta);
            blocks1.push(c1);
            blocks2.push(c2);
        }
        // One common (+,+) eigenvector and one (−,+).
        let plus = FMatrix::from_rows(&[vec![1.0]]);
        let minus = FMatrix::from_rows(&[vec![-1.0]]);
        blocks1.push(plus.clone());
        blocks2.push(plus.clone());
        blocks1.push(minus);
        blocks2.push(plus);
        let a1 = FMatrix::block_diag(&blocks1.iter().collect::<Vec<_>>());
        let a2 = FMatrix::block_diag(&blocks2.iter().collect::<Vec<_>>());

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let q = random_orthogonal(a1.nrows(), &mut rng);
        let s1 = q.matmul(&a1).matmul(&q.transpose());
        let s2 = q.matmul(&a2).matmul(&q.transpose());

        let decomp = decompose_involution_pair(&s1, &s2, 1e-9).unwrap();
        assert_eq!(decomp.common.len(), 2);
        let thetas_found = decomp.theta_multiset();
        assert_eq!(thetas_found.len(), 2);
        assert!((thetas_found[0] - 0.2).abs() < 1e-9);
        assert!((thetas_found[1] - 0.4).abs() < 1e-9);
        // Each restricted pair reproduces R = αI on its block.
        for block in &decomp.blocks {
            let r = block.restricted[0]
                .matmul(&block.restricted[1])
                .add(&block.restricted[1].matmul(&block.restricted[0]));
            assert!((r[(0, 0)] - block.alpha).abs() < 1e-8);
            assert!((r[(1, 1)] - block.alpha).abs() < 1e-8);
            assert!(r[(0, 1)].abs() < 1e-8);
        }
    }

    #[test]
    fn decompose_pure_common_eigenvectors() {
        let a = FMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
        let decomp = decompose_involution_pair(&a, &a, 1e-10).unwrap();
        assert_eq!(decomp.blocks.len(), 0);
        assert_eq!(decomp.common.len(), 2);
    }

    #[test]
    fn compare_spectra_examples() {
        let sys = a2_sys();
        let irreps = irrep_table(&sys).unwrap();
        let (triv, sign, std2) = (&irreps[0], &irreps[1], &irreps[2]);
        assert!(compare_spectra(std2, std2).unwrap());
        let ts = direct_sum(triv, sign).unwrap();
        assert!(!compare_spectra(&ts, std2).unwrap());
        let ab = direct_sum(triv, std2).unwrap();
        let ba = direct_sum(std2, triv).unwrap();
        assert!(compare_spectra(&ab, &ba).unwrap());
    }

    #[test]
    fn trace_sums() {
        let sys = a2_sys();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        // Single g₁.
        let s = signature_trace_sum(&reg, &Signature(vec![1, 0]), 8).unwrap();
        assert_eq!(s, rat_int(0));
        // One g₁ and one g₂: both orderings are fixed-point-free.
        let s = signature_trace_sum(&reg, &Signature(vec![1, 1]), 8).unwrap();
        assert_eq!(s, rat_int(0));
        // g₁g₁ = 1: trace is the group order.
        let s = signature_trace_sum(&reg, &Signature(vec![2, 0]), 8).unwrap();
        assert_eq!(s, rat_int(6));
        // Cap.
        assert!(signature_trace_sum(&reg, &Signature(vec![9, 0]), 8).is_err());
    }

    #[test]
    fn frobenius_consistency_for_a2_and_b2() {
        for sys in [a2_sys(), CoxeterSystem::type_b(2).unwrap()] {
            let table = enumerate_group(&sys).unwrap();
            let reg = regular_representation(&table);
            let js_reg = joint_spectrum(&reg).unwrap();
            let mut product = MultiPoly::one(sys.generator_count() + 1);
            for irrep in irrep_table(&sys).unwrap() {
                let js = joint_spectrum(&irrep).unwrap();
                product = product.mul(&js.poly.pow(irrep.dim()).unwrap()).unwrap();
            }
            assert_eq!(js_reg.poly, product.scale_normalize(), "{}", sys.name());
        }
    }

    #[test]
    fn word_eval_against_table_words() {
        let sys = a2_sys();
        let table = enumerate_group(&sys).unwrap();
        let reg = regular_representation(&table);
        // Degree law: deg D(T) = |G| for the regular representation.
        let js = joint_spectrum(&reg).unwrap();
        assert_eq!(js.poly.homogeneous_degree(), Some(table.order() as u64));
        let w = Word(vec![1, 2, 1]);
        let m = reg.eval_word(w.letters()).unwrap();
        assert!(m.pow(2).unwrap().is_identity());
    }
}
