//! Detect Coxeter relations through Chebyshev polynomials: for unitary
//! involutions, `(A₁A₂)^m = I` exactly when `T_m((A₁A₂ + A₂A₁)/2) = I`.
//!
//! ```sh
//! cargo run --example chebyshev_relations
//! ```

use coxeter_spectra::realize::realize_generator;
use coxeter_spectra::spectra::{alpha_candidates, verify_relation_chebyshev};
use coxeter_spectra::system::CoxeterSystem;

fn main() -> coxeter_spectra::Result<()> {
    for name in ["A3", "B3", "D4"] {
        let sys: CoxeterSystem = name.parse()?;
        let gc = sys.generator_count();
        println!("{name}:");
        for i in 1..=gc {
            for j in i + 1..=gc {
                let a = realize_generator(i, &sys)?.as_signed().unwrap().matrix();
                let b = realize_generator(j, &sys)?.as_signed().unwrap().matrix();
                let m = sys.exponent(i, j)?;
                let verdicts: Vec<String> = (2..=m)
                    .map(|cand| {
                        let ok = verify_relation_chebyshev(&a, &b, cand).expect("exact check");
                        format!("m'={cand}:{}", if ok { "yes" } else { "no" })
                    })
                    .collect();
                println!("  pair (g{i}, g{j}), exponent {m}: {}", verdicts.join(" "));
            }
        }
    }

    println!("allowed eigenvalues of A1A2+A2A1 when (A1A2)^m = 1:");
    for m in [2usize, 3, 4, 6] {
        println!("  m={m}: {:?}", alpha_candidates(m)?);
    }
    Ok(())
}
