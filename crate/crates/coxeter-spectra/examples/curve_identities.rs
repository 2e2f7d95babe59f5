//! Implicit-curve identities at an eigenvalue of a self-adjoint pair: the
//! first and second derivatives of the spectral branch through `(1/λ, 0)`
//! show up as projection identities, cross-checked by finite differences.
//!
//! ```sh
//! cargo run --example curve_identities
//! ```

use coxeter_spectra::numeric::{random_symmetric, symmetric_eigen, FMatrix};
use coxeter_spectra::oracle::finite_difference_curve;
use coxeter_spectra::spectra::curve_identity_check;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coxeter_spectra::Result<()> {
    // The unit circle: A1 = diag(1, −1), A2 = swap, branch through (1, 0).
    let a1 = FMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
    let a2 = FMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
    let report = curve_identity_check(&a1, &a2, 1.0)?;
    println!("unit circle at λ = 1:");
    println!("  x1'(0) = {:+.6}, x1''(0) = {:+.6}", report.x1_prime, report.x1_double_prime);
    println!(
        "  residuals: first {:.2e}, second {:.2e}",
        report.identity_first_order, report.identity_second_order
    );

    // A random self-adjoint pair with a simple, well-separated eigenvalue.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let a1 = random_symmetric(5, &mut rng);
    let a2 = random_symmetric(5, &mut rng);
    let eig = symmetric_eigen(&a1);
    let lambda = eig
        .values
        .iter()
        .copied()
        .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
        .unwrap();
    let report = curve_identity_check(&a1, &a2, lambda)?;
    let (fd1, fd2) = finite_difference_curve(&a1, &a2, lambda, 2e-3)?;
    println!("random 5x5 pair at λ = {lambda:.6}:");
    println!("  implicit x1'(0)  = {:+.8}   finite-difference {fd1:+.8}", report.x1_prime);
    println!("  implicit x1''(0) = {:+.8}   finite-difference {fd2:+.8}", report.x1_double_prime);
    println!(
        "  projection identities hold to {:.2e} / {:.2e}",
        report.identity_first_order, report.identity_second_order
    );
    Ok(())
}
