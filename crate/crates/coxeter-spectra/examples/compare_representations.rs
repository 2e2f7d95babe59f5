//! Joint spectra pin down representations: equal spectra means equal
//! characters means the same multiset of irreducibles — and trace sums over
//! fixed signatures agree.
//!
//! ```sh
//! cargo run --example compare_representations
//! ```

use coxeter_spectra::realize::enumerate_group;
use coxeter_spectra::rep::{character, direct_sum, equivalent, irrep_table};
use coxeter_spectra::spectra::{compare_spectra, signature_trace_sum};
use coxeter_spectra::system::{CoxeterSystem, Signature};

fn main() -> coxeter_spectra::Result<()> {
    let sys: CoxeterSystem = "A2".parse()?;
    let table = enumerate_group(&sys)?;
    let irreps = irrep_table(&sys)?;
    let (triv, sign, std2) = (&irreps[0], &irreps[1], &irreps[2]);

    // Same multiset, different order: indistinguishable.
    let ab = direct_sum(&direct_sum(triv, std2)?, sign)?;
    let ba = direct_sum(sign, &direct_sum(std2, triv)?)?;
    println!("triv ⊕ std ⊕ sign vs sign ⊕ std ⊕ triv:");
    println!("  equal spectra:    {}", compare_spectra(&ab, &ba)?);
    println!("  equivalent:       {}", equivalent(&ab, &ba, &table)?);

    // Same dimension, different multiset: told apart.
    let ts = direct_sum(triv, sign)?;
    println!("triv ⊕ sign vs the standard 2-dim irreducible:");
    println!("  equal spectra:    {}", compare_spectra(&ts, std2)?);
    let show = |chi: &coxeter_spectra::rep::Character| -> String {
        let vals: Vec<String> = chi.0.iter().map(coxeter_spectra::matrix::rat_to_string).collect();
        format!("({})", vals.join(", "))
    };
    println!(
        "  characters:       {} vs {}",
        show(&character(&ts, &table)?),
        show(&character(std2, &table)?)
    );

    // Trace sums over all words of a fixed signature agree for equal spectra.
    for sig in [Signature(vec![1, 1]), Signature(vec![2, 1]), Signature(vec![2, 2])] {
        let s1 = signature_trace_sum(&ab, &sig, 8)?;
        let s2 = signature_trace_sum(&ba, &sig, 8)?;
        println!("  signature {:?}: trace sums {} and {}", sig.0, s1, s2);
        assert_eq!(s1, s2);
    }
    Ok(())
}
