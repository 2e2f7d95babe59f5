//! Arithmetic in the affine group C̃2: exact normal forms, the integral
//! affine-reflection model, and conjugacy-class labels with certificates.
//!
//! ```sh
//! cargo run --example affine_c2
//! ```

use coxeter_spectra::affine::{
    class_label, conjugate, element_from_word, element_matrix, faithful_check, gen_b2, gen_r1,
    inverse, mul,
};

fn main() -> coxeter_spectra::Result<()> {
    println!("faithful matrix model verifies the relation table: {}", faithful_check());

    // b2 r1 b2 = r2, straight from the exchange laws.
    let x = mul(&mul(&gen_b2(), &gen_r1()), &gen_b2());
    println!("b2 · r1 · b2 = coset {} with exponents ({}, {})", x.coset.label(), x.m1, x.m2);

    // Normal form of a word and its class label.
    let words = ["b2,r1,r1,b3", "b1,b2,b3,b2,r2", "b2,b3,b2,b3,r1,r2,r2", "r1,r1,r2"];
    for word in words {
        let x = element_from_word(word)?;
        let label = class_label(&x)?;
        println!("word {word}:");
        println!("  normal form: {} · r1^{} r2^{}", x.coset.label(), x.m1, x.m2);
        println!("  class: w_{}({}, {})", label.j, label.m1, label.m2);
        // The certificate is checkable by anyone with mul and inverse.
        let carried = conjugate(&label.conjugator, &x);
        assert_eq!(carried, label.representative());
        println!(
            "  certified by conjugator {} · r1^{} r2^{}",
            label.conjugator.coset.label(),
            label.conjugator.m1,
            label.conjugator.m2
        );
    }

    // The matrix model is an exact homomorphism.
    let a = element_from_word("b2,r1")?;
    let b = element_from_word("b3,r2,r2")?;
    assert_eq!(
        element_matrix(&mul(&a, &b)),
        element_matrix(&a).mul(&element_matrix(&b))?
    );
    assert_eq!(element_matrix(&mul(&a, &inverse(&a))), element_matrix(&element_from_word("")?));
    println!("matrix model agrees with the exact arithmetic");
    Ok(())
}
