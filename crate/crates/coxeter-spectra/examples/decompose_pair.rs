//! Recover the hidden block structure of a scrambled involution pair: common
//! eigenvectors for the line components, 2×2 reflection blocks with their
//! angles for the ellipses.
//!
//! ```sh
//! cargo run --example decompose_pair
//! ```

use coxeter_spectra::numeric::{random_orthogonal, FMatrix};
use coxeter_spectra::rep::dihedral_reflection_pair;
use coxeter_spectra::spectra::decompose_involution_pair;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coxeter_spectra::Result<()> {
    // Plant blocks with θ = 1/5 and 2/5 (an I(5) flavor) plus two common
    // eigenvectors, then hide everything behind a random rotation.
    let thetas = [0.2, 0.4];
    let mut blocks1 = Vec::new();
    let mut blocks2 = Vec::new();
    for &theta in &thetas {
        let (c1, c2) = dihedral_reflection_pair(theta);
        blocks1.push(c1);
        blocks2.push(c2);
    }
    blocks1.push(FMatrix::from_rows(&[vec![1.0]]));
    blocks2.push(FMatrix::from_rows(&[vec![1.0]]));
    blocks1.push(FMatrix::from_rows(&[vec![-1.0]]));
    blocks2.push(FMatrix::from_rows(&[vec![1.0]]));
    let a1 = FMatrix::block_diag(&blocks1.iter().collect::<Vec<_>>());
    let a2 = FMatrix::block_diag(&blocks2.iter().collect::<Vec<_>>());

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let q = random_orthogonal(a1.nrows(), &mut rng);
    let s1 = q.matmul(&a1).matmul(&q.transpose());
    let s2 = q.matmul(&a2).matmul(&q.transpose());

    let decomp = decompose_involution_pair(&s1, &s2, 1e-9)?;
    println!("recovered {} common eigenvectors:", decomp.common.len());
    for (sa, sb, _) in &decomp.common {
        println!("  sign pattern (A1: {sa:+}, A2: {sb:+})");
    }
    println!("recovered {} two-dimensional blocks:", decomp.blocks.len());
    for block in &decomp.blocks {
        println!(
            "  θ = {:.10} (α = {:+.6}); restricted A1 = [[{:+.4}, {:+.4}], [{:+.4}, {:+.4}]]",
            block.theta,
            block.alpha,
            block.restricted[0][(0, 0)],
            block.restricted[0][(0, 1)],
            block.restricted[0][(1, 0)],
            block.restricted[0][(1, 1)],
        );
    }
    let recovered = decomp.theta_multiset();
    assert!(recovered.len() == 2);
    assert!((recovered[0] - 0.2).abs() < 1e-9 && (recovered[1] - 0.4).abs() < 1e-9);
    Ok(())
}
