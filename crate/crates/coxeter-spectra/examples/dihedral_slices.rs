//! Bivariate slices of a joint spectrum and the line/ellipse decomposition
//! of involution pairs.
//!
//! ```sh
//! cargo run --example dihedral_slices
//! ```

use coxeter_spectra::realize::{enumerate_group, regular_representation};
use coxeter_spectra::spectra::{
    bivariate_slice, dihedral_report, joint_spectrum, proper_spectrum, LINE_LABELS,
};
use coxeter_spectra::system::CoxeterSystem;

fn main() -> coxeter_spectra::Result<()> {
    let sys: CoxeterSystem = "B2".parse()?;
    let table = enumerate_group(&sys)?;
    let reg = regular_representation(&table);
    let js = joint_spectrum(&reg)?;

    let proper = proper_spectrum(&js)?;
    println!("proper joint spectrum of the B2 regular pair (x0, x1 are the two generator coordinates):");
    println!("  F = {proper}");

    let slice = bivariate_slice(&js, 1, 2)?;
    println!("bivariate slice (the same polynomial here, as B2 has two generators):");
    println!("  {slice}");

    let mats = reg.exact_matrices()?;
    let report = dihedral_report(&mats[0], &mats[1])?;
    println!("component report (dim {}):", report.dim);
    for (label, mult) in LINE_LABELS.iter().zip(report.lines) {
        if mult > 0 {
            println!("  line {label} with multiplicity {mult}");
        }
    }
    for (alpha, mult) in &report.ellipses {
        println!(
            "  ellipse x^2 + {:.4}xy + y^2 = 1 with multiplicity {mult}",
            alpha.as_f64()
        );
    }
    println!("  residual: {}", report.residual);

    // The reported components assemble back into the slice polynomial.
    let assembled = report.assemble_polynomial()?;
    println!("assembled from the report: {assembled}");
    Ok(())
}
