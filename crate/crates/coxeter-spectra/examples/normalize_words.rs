//! Reduce words to echelon form and watch the admissible moves do it.
//!
//! ```sh
//! cargo run --example normalize_words
//! ```

use coxeter_spectra::rewrite::{to_echelon, verify_tent_identities};
use coxeter_spectra::system::{content, CoxeterSystem, Word};

fn main() -> coxeter_spectra::Result<()> {
    let samples: [(&str, &[usize]); 5] = [
        ("A2", &[1, 2, 1]),
        ("B2", &[2, 1, 2, 1]),
        ("B3", &[3, 1, 2, 1, 3, 2, 1, 2]),
        ("D3", &[3, 1, 2, 1, 3]),
        ("D4", &[4, 3, 2, 1, 2, 3, 4, 1]),
    ];
    for (name, letters) in samples {
        let sys: CoxeterSystem = name.parse()?;
        let word = Word(letters.to_vec());
        let (form, trace) = to_echelon(&word, &sys)?;
        println!("{name}: {word}");
        println!("  content {:?} -> {:?}", content(&word, &sys)?.0, content(&form.flatten(), &sys)?.0);
        println!("  echelon {} with slots {:?}", form.flatten(), form.labels());
        println!("  via {} steps ({} circular)", trace.steps.len(), trace.circular_count());
        // Traces replay, and they certify the conjugacy claim with an
        // explicit witness: end = c · start · c⁻¹.
        trace.replay(&sys)?;
        println!("  conjugator witness: {}", trace.conjugator_word(&sys)?);
    }

    for name in ["B3", "D4"] {
        let sys: CoxeterSystem = name.parse()?;
        println!("tent identities hold in {name}: {}", verify_tent_identities(&sys)?);
    }
    Ok(())
}
