//! Enumerate the small groups, their conjugacy classes, and conjugator
//! witnesses.
//!
//! ```sh
//! cargo run --example group_tables
//! ```

use coxeter_spectra::realize::{conjugacy_classes, conjugator_search, enumerate_group};
use coxeter_spectra::system::{CoxeterSystem, Word};

fn main() -> coxeter_spectra::Result<()> {
    for name in ["A2", "B2", "D3", "A3", "B3", "D4", "I5"] {
        let sys: CoxeterSystem = name.parse()?;
        let table = enumerate_group(&sys)?;
        let classes = conjugacy_classes(&table);
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        println!("{name}: order {}, {} classes, sizes {:?}", table.order(), classes.len(), sizes);
        for class in classes.iter().take(3) {
            println!("    class of size {} represented by {}", class.len(), table.word_for(class[0]));
        }
    }

    // A conjugator witness: (1 2) and (2 3) in S3 are conjugate by (1 3).
    let sys: CoxeterSystem = "A2".parse()?;
    let table = enumerate_group(&sys)?;
    let x = table.eval_word_index(&Word(vec![1]))?;
    let y = table.eval_word_index(&Word(vec![2]))?;
    let c = conjugator_search(x, y, &table).expect("transpositions are conjugate");
    println!("conjugator for g1 ~ g2 in A2: {}", table.word_for(c));
    Ok(())
}
