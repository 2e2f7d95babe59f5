//! The group determinant over `T = {1, g₁, …, g_n}`: joint spectra of
//! regular representations and their factorization into irreducible spectra
//! with multiplicities equal to the irreducible dimensions.
//!
//! ```sh
//! cargo run --example regular_spectrum
//! ```

use coxeter_spectra::poly::MultiPoly;
use coxeter_spectra::realize::{enumerate_group, regular_representation};
use coxeter_spectra::rep::irrep_table;
use coxeter_spectra::spectra::joint_spectrum;
use coxeter_spectra::system::CoxeterSystem;

fn main() -> coxeter_spectra::Result<()> {
    for name in ["A2", "B2"] {
        let sys: CoxeterSystem = name.parse()?;
        let table = enumerate_group(&sys)?;
        let reg = regular_representation(&table);
        let js = joint_spectrum(&reg)?;
        println!("{name}: |G| = {}, spectrum degree {:?}", table.order(), js.poly.homogeneous_degree());
        println!("  D(T) = {}", js.poly);

        // Frobenius: the regular spectrum is the product of the irreducible
        // spectra, each raised to its dimension.
        let mut product = MultiPoly::one(sys.generator_count() + 1);
        for irrep in irrep_table(&sys)? {
            let factor = joint_spectrum(&irrep)?;
            println!("  irreducible of dim {}: {}", irrep.dim(), factor.poly);
            product = product.mul(&factor.poly.pow(irrep.dim())?)?;
        }
        assert_eq!(js.poly, product.scale_normalize());
        println!("  product of irreducible factors matches exactly");
    }
    Ok(())
}
