//! Independent reference implementations used by the self-test suite and the
//! test harness. Everything here recomputes results along a different path
//! from the main code: cofactor determinants, Faddeev–LeVerrier
//! characteristic polynomials, full brute-force conjugacy, exhaustive
//! rewriting search, and finite-difference curve tracking.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{QMatrix, Rat};
use crate::numeric::FMatrix;
use crate::poly::{MultiPoly, Pencil};
use crate::realize::FiniteGroupTable;
use crate::rewrite::{apply_step, AdmissibleStep};
use crate::system::{CoxeterSystem, Word};

/// Determinant of a polynomial matrix by Laplace expansion along the first
/// row. Exponential; fine for the desk-scale cross-checks it serves.
pub fn cofactor_poly_det(entries: &[Vec<MultiPoly>], nvars: usize) -> Result<MultiPoly> {
    let n = entries.len();
    if n == 0 {
        return Ok(MultiPoly::one(nvars));
    }
    for row in entries {
        if row.len() != n {
            return Err(Error::Validation("cofactor determinant needs a square matrix".into()));
        }
    }
    if n == 1 {
        return Ok(entries[0][0].clone());
    }
    let mut acc = MultiPoly::zero(nvars);
    for (j, pivot) in entries[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = cofactor_poly_det(&minor, nvars)?;
        let term = pivot.mul(&sub)?;
        acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

/// Cofactor-expansion determinant of a pencil, the cross-check for the
/// fraction-free elimination path.
pub fn cofactor_pencil_det(pencil: &Pencil) -> Result<MultiPoly> {
    let n = pencil.size();
    let nv = pencil.nvars();
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|r| (0..n).map(|c| pencil.entry_poly(r, c)).collect())
        .collect();
    cofactor_poly_det(&entries, nv)
}

/// Characteristic polynomial by the Faddeev–LeVerrier recurrence:
/// `M₁ = A`, `c_k = −tr(A M_k)/k`… producing `det(xI − A)` exactly.
pub fn faddeev_leverrier_charpoly(a: &QMatrix) -> Result<MultiPoly> {
    if !a.is_square() {
        return Err(Error::Validation("charpoly needs a square matrix".into()));
    }
    let n = a.nrows();
    let mut coeffs = vec![Rat::one()]; // coefficient of x^n
    let mut m = QMatrix::identity(n);
    for k in 1..=n {
        m = a.mul(&m)?;
        let c = -m.trace() / Rat::from_integer(k.into());
        for i in 0..n {
            m[(i, i)] += c.clone();
        }
        coeffs.push(c);
    }
    let terms = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (vec![(n - k) as u32], c))
        .collect();
    MultiPoly::from_terms(1, terms)
}

/// Conjugacy classes by the definition: orbits under conjugation by every
/// group element. Quadratic in the order; used to cross-check the
/// generator-orbit computation.
pub fn brute_conjugacy_classes(table: &FiniteGroupTable) -> Vec<Vec<usize>> {
    let n = table.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for seed in 0..n {
        if seen[seed] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..n).map(|c| table.conjugate(c, seed)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x] = true;
        }
        classes.push(orbit);
    }
    classes
}

/// Breadth-first set of words reachable from `w` by at most `depth`
/// admissible steps. Exponential; for confirming small reduction examples.
pub fn reachable_words(w: &Word, sys: &CoxeterSystem, depth: usize) -> Result<Vec<Word>> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(w.clone());
    let mut frontier = vec![w.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for word in &frontier {
            for step in enumerate_steps(word.len()) {
                if let Ok(out) = apply_step(word, &step, sys) {
                    if seen.insert(out.clone()) {
                        next.push(out);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut all: Vec<Word> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}

fn enumerate_steps(len: usize) -> Vec<AdmissibleStep> {
    let mut steps = Vec::new();
    for pos in 0..len {
        steps.push(AdmissibleStep::Cancel { pos });
        steps.push(AdmissibleStep::Commute { pos });
        steps.push(AdmissibleStep::ReplaceBraid { pos });
        steps.push(AdmissibleStep::TentCommute { pos });
    }
    for cut in 1..len {
        steps.push(AdmissibleStep::Circular { cut });
    }
    steps
}

/// Track the implicit branch `x₁(x₂)` of `det(−I + x₁A₁ + x₂A₂) = 0` through
/// `(1/λ, 0)` numerically and return `(x₁′(0), x₁″(0))` by five-point finite
/// differences. Fully independent of the symbolic implicit-derivative path.
pub fn finite_difference_curve(a1: &FMatrix, a2: &FMatrix, lambda: f64, h: f64) -> Result<(f64, f64)> {
    let x1_at = |x2: f64| -> Result<f64> {
        newton_root(a1, a2, x2, 1.0 / lambda)
    };
    let xm2 = x1_at(-2.0 * h)?;
    let xm1 = x1_at(-h)?;
    let x0 = 1.0 / lambda;
    let xp1 = x1_at(h)?;
    let xp2 = x1_at(2.0 * h)?;
    let first = (xm2 - 8.0 * xm1 + 8.0 * xp1 - xp2) / (12.0 * h);
    let second = (-xm2 + 16.0 * xm1 - 30.0 * x0 + 16.0 * xp1 - xp2) / (12.0 * h * h);
    Ok((first, second))
}

fn newton_root(a1: &FMatrix, a2: &FMatrix, x2: f64, start: f64) -> Result<f64> {
    let n = a1.nrows();
    let f = |x1: f64| -> f64 {
        let mut m = a1.scale(x1).add(&a2.scale(x2));
        for i in 0..n {
            m[(i, i)] -= 1.0;
        }
        m.det()
    };
    let mut x = start;
    let fd_step = 1e-7 * (1.0 + x.abs());
    for _ in 0..100 {
        let fx = f(x);
        let fpx = (f(x + fd_step) - f(x - fd_step)) / (2.0 * fd_step);
        if fpx.abs() < 1e-14 {
            return Err(Error::HypothesisNotMet("flat determinant in curve tracking".into()));
        }
        let step = fx / fpx;
        x -= step;
        if step.abs() < 1e-14 * (1.0 + x.abs()) {
            return Ok(x);
        }
    }
    Err(Error::HypothesisNotMet("curve tracking did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{charpoly, pencil_det};
    use crate::realize::{conjugacy_classes, enumerate_group};

    #[test]
    fn cofactor_agrees_with_bareiss() {
        let mats = vec![
            QMatrix::from_i64(&[&[1, 0, 2], &[0, 1, 0], &[1, 1, 1]]),
            QMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 1], &[0, 2, 0]]),
        ];
        let pencil = Pencil::new(mats).unwrap();
        assert_eq!(cofactor_pencil_det(&pencil).unwrap(), pencil_det(&pencil).unwrap());
    }

    #[test]
    fn faddeev_leverrier_agrees_with_bareiss_charpoly() {
        let m = QMatrix::from_i64(&[&[2, 1, 0], &[1, -1, 3], &[0, 3, 1]]);
        assert_eq!(faddeev_leverrier_charpoly(&m).unwrap(), charpoly(&m).unwrap());
        let swap = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(faddeev_leverrier_charpoly(&swap).unwrap(), charpoly(&swap).unwrap());
    }

    #[test]
    fn brute_classes_match_generator_orbits() {
        for name in ["A2", "B2", "D3"] {
            let sys: CoxeterSystem = name.parse().unwrap();
            let table = enumerate_group(&sys).unwrap();
            assert_eq!(brute_conjugacy_classes(&table), conjugacy_classes(&table), "{name}");
        }
    }

    #[test]
    fn exhaustive_search_confirms_reduction_example() {
        // From g1 g2 g1 the single-letter word g1 is reachable in A2.
        let sys: CoxeterSystem = "A2".parse().unwrap();
        let reachable = reachable_words(&Word(vec![1, 2, 1]), &sys, 6).unwrap();
        assert!(reachable.contains(&Word(vec![1])));
        // And it is an echelon word of lower content.
        assert!(crate::rewrite::is_echelon(&Word(vec![1]), &sys).unwrap().is_some());
    }

    #[test]
    fn curve_tracking_on_the_circle() {
        let a1 = FMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
        let a2 = FMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let (d1, d2) = finite_difference_curve(&a1, &a2, 1.0, 1e-3).unwrap();
        assert!(d1.abs() < 1e-8, "{d1}");
        assert!((d2 + 1.0).abs() < 1e-6, "{d2}");
    }
}
