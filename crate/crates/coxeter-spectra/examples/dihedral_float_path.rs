//! The floating-point analysis path for dihedral representations: spectra of
//! the non-crystallographic I(m) irreducibles, assembled from numeric
//! line/ellipse reports with α values snapped to `2cos(2πk/m)`.
//!
//! ```sh
//! cargo run --example dihedral_float_path
//! ```

use coxeter_spectra::numeric::FMatrix;
use coxeter_spectra::rep::dihedral_reflection_pair;
use coxeter_spectra::spectra::{alpha_candidates, dihedral_report_float, monic_normalize};

fn main() -> coxeter_spectra::Result<()> {
    for m in [5usize, 7] {
        println!("I({m}), candidate α values {:?}", alpha_candidates(m)?);
        for j in 1..=(m - 1) / 2 {
            let theta = j as f64 / m as f64;
            let (a1, a2) = dihedral_reflection_pair(theta);
            let report = dihedral_report_float(&a1, &a2, 1e-9)?;
            let (alpha, mult) = (&report.ellipses[0].0, report.ellipses[0].1);
            println!(
                "  irrep θ = {j}/{m}: single ellipse, α = {:+.8}, multiplicity {mult}",
                alpha.as_f64()
            );
        }
    }

    // A reducible example: trivial ⊕ sign ⊕ (θ = 1/5) over I(5).
    let (c1, c2) = dihedral_reflection_pair(0.2);
    let one = FMatrix::from_rows(&[vec![1.0]]);
    let neg = FMatrix::from_rows(&[vec![-1.0]]);
    let a1 = FMatrix::block_diag(&[&one, &neg, &c1]);
    let a2 = FMatrix::block_diag(&[&one, &neg, &c2]);
    let report = dihedral_report_float(&a1, &a2, 1e-9)?;
    println!("trivial ⊕ sign ⊕ ρ(1/5) over I(5):");
    println!("  lines {:?}, ellipses {}", report.lines, report.ellipses.len());
    let poly = monic_normalize(&report.assemble_polynomial()?)?;
    println!("  proper spectrum ≈ {}", poly);
    Ok(())
}
