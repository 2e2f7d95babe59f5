//! Coxeter systems of types A, B, D and I(m), words over their generators,
//! and the content ordering used by the rewriting machinery.
//!
//! Generator indices are 1-based throughout, matching the usual diagram
//! labelling. The empty word stands for the identity element.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The four families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    I,
}

/// A Coxeter system from one of the supported families.
///
/// Only the named factories can build one; arbitrary Coxeter matrices are
/// rejected because the algorithms here are stated for these families only.
///
/// The field `n` is the chain parameter: `A_n` and `B_n` have `n` generators,
/// `D_{n+1}` has `n + 1` (the subscript passed to [`CoxeterSystem::type_d`]),
/// and `I(m)` always has two, with `n = 2` and the edge label stored in `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    family: Family,
    n: usize,
    /// Edge label for `I(m)`; 0 is the sentinel for the infinite dihedral group.
    m: usize,
    /// Symmetric matrix of Coxeter exponents, 0-indexed.
    matrix: Vec<Vec<usize>>,
}

impl CoxeterSystem {
    /// The symmetric group realization `A_n`, `n ≥ 1`.
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Validation("A_n requires n >= 1".into()));
        }
        let mut matrix = base_matrix(n);
        for i in 0..n.saturating_sub(1) {
            matrix[i][i + 1] = 3;
            matrix[i + 1][i] = 3;
        }
        Ok(Self { family: Family::A, n, m: 0, matrix })
    }

    /// The hyperoctahedral chain `B_n`, `n ≥ 2`, with the 4-labelled edge at the end.
    pub fn type_b(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Validation("B_n requires n >= 2".into()));
        }
        let mut matrix = base_matrix(n);
        for i in 0..n - 1 {
            matrix[i][i + 1] = 3;
            matrix[i + 1][i] = 3;
        }
        matrix[n - 2][n - 1] = 4;
        matrix[n - 1][n - 2] = 4;
        Ok(Self { family: Family::B, n, m: 0, matrix })
    }

    /// The fork diagram `D_subscript`, `subscript ≥ 3`. The two fork nodes are
    /// the last two generators; they commute with each other and both attach
    /// to generator `subscript − 2`.
    pub fn type_d(subscript: usize) -> Result<Self> {
        if subscript < 3 {
            return Err(Error::Validation("D_k requires k >= 3".into()));
        }
        let n = subscript - 1;
        let gc = n + 1;
        let mut matrix = base_matrix(gc);
        for i in 0..n.saturating_sub(2) {
            matrix[i][i + 1] = 3;
            matrix[i + 1][i] = 3;
        }
        matrix[n - 2][n - 1] = 3;
        matrix[n - 1][n - 2] = 3;
        matrix[n - 2][n] = 3;
        matrix[n][n - 2] = 3;
        Ok(Self { family: Family::D, n, m: 0, matrix })
    }

    /// The dihedral system `I(m)`, `m ≥ 2`.
    pub fn type_i(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Validation("I(m) requires m >= 2".into()));
        }
        let mut matrix = base_matrix(2);
        matrix[0][1] = m;
        matrix[1][0] = m;
        Ok(Self { family: Family::I, n: 2, m, matrix })
    }

    /// The infinite dihedral group, used only for spectrum analysis. The edge
    /// label is stored as the sentinel 0; rewriting and enumeration reject it.
    pub fn type_i_infinite() -> Self {
        let mut matrix = base_matrix(2);
        matrix[0][1] = 0;
        matrix[1][0] = 0;
        Self { family: Family::I, n: 2, m: 0, matrix }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Chain parameter `n` (for `D` this is one less than the subscript).
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Edge label of an `I(m)` system; 0 means `I(∞)`.
    pub fn edge_label(&self) -> usize {
        self.m
    }

    pub fn generator_count(&self) -> usize {
        match self.family {
            Family::A | Family::B => self.n,
            Family::D => self.n + 1,
            Family::I => 2,
        }
    }

    /// Coxeter exponent `m_ij` for 1-based generator indices; 0 encodes ∞.
    pub fn exponent(&self, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.matrix[i - 1][j - 1])
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.generator_count() {
            return Err(Error::Validation(format!(
                "generator index {i} out of range 1..={}",
                self.generator_count()
            )));
        }
        Ok(())
    }

    /// Display name such as `A3`, `B2`, `D4`, `I5`.
    pub fn name(&self) -> String {
        match self.family {
            Family::A => format!("A{}", self.n),
            Family::B => format!("B{}", self.n),
            Family::D => format!("D{}", self.n + 1),
            Family::I if self.m == 0 => "Iinf".to_string(),
            Family::I => format!("I{}", self.m),
        }
    }
}

fn base_matrix(gc: usize) -> Vec<Vec<usize>> {
    let mut matrix = vec![vec![2usize; gc]; gc];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = 1;
    }
    matrix
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CoxeterSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s.split_at(1);
        let parse = |rest: &str| -> Result<usize> {
            rest.parse::<usize>()
                .map_err(|_| Error::Validation(format!("cannot parse system '{s}'")))
        };
        match family {
            "A" | "a" => CoxeterSystem::type_a(parse(rest)?),
            "B" | "b" => CoxeterSystem::type_b(parse(rest)?),
            "D" | "d" => CoxeterSystem::type_d(parse(rest)?),
            "I" | "i" if rest.eq_ignore_ascii_case("inf") => Ok(CoxeterSystem::type_i_infinite()),
            "I" | "i" => CoxeterSystem::type_i(parse(rest)?),
            _ => Err(Error::Validation(format!("unknown system '{s}'"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SystemWire {
    family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
}

impl Serialize for CoxeterSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = match self.family {
            Family::A | Family::B => SystemWire { family: self.family, n: Some(self.n), m: None },
            Family::D => SystemWire { family: self.family, n: Some(self.n + 1), m: None },
            Family::I => SystemWire { family: self.family, n: None, m: Some(self.m) },
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoxeterSystem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SystemWire::deserialize(deserializer)?;
        let sys = match wire.family {
            Family::A => CoxeterSystem::type_a(wire.n.ok_or_else(|| D::Error::missing_field("n"))?),
            Family::B => CoxeterSystem::type_b(wire.n.ok_or_else(|| D::Error::missing_field("n"))?),
            Family::D => CoxeterSystem::type_d(wire.n.ok_or_else(|| D::Error::missing_field("n"))?),
            Family::I => match wire.m.ok_or_else(|| D::Error::missing_field("m"))? {
                0 => Ok(CoxeterSystem::type_i_infinite()),
                m => CoxeterSystem::type_i(m),
            },
        };
        sys.map_err(D::Error::custom)
    }
}

/// A word over the generators of a system: a finite sequence of 1-based
/// generator indices. Serializes as a plain JSON array of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Check every letter against the ambient system.
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<()> {
        for &letter in &self.0 {
            sys.check_index(letter)?;
        }
        Ok(())
    }

    /// Parse a comma-separated list such as `2,1,2,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Validation(format!("cannot parse letter '{tok}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| format!("g{g}")).collect();
        f.write_str(&parts.join(""))
    }
}

/// Per-generator letter counts of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<usize>);

impl Signature {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// The tuple `(|w|, a_1, …, a_{n−1})`: word length followed by the counts of
/// the first `n − 1` generators. The counts of the top generator(s) are folded
/// into the length only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Content(pub Vec<usize>);

/// Count the occurrences of each generator in `w`.
pub fn signature(w: &Word, sys: &CoxeterSystem) -> Result<Signature> {
    w.validate(sys)?;
    let mut counts = vec![0usize; sys.generator_count()];
    for &letter in w.letters() {
        counts[letter - 1] += 1;
    }
    Ok(Signature(counts))
}

/// The content of `w` over `sys`.
pub fn content(w: &Word, sys: &CoxeterSystem) -> Result<Content> {
    let sig = signature(w, sys)?;
    let n = sys.rank();
    let mut tuple = Vec::with_capacity(n);
    tuple.push(w.len());
    tuple.extend_from_slice(&sig.0[..n - 1]);
    Ok(Content(tuple))
}

/// Strict lexicographic comparison of two contents of equal length.
pub fn lex_less(c1: &Content, c2: &Content) -> Result<bool> {
    if c1.0.len() != c2.0.len() {
        return Err(Error::LengthMismatch(c1.0.len(), c2.0.len()));
    }
    for (a, b) in c1.0.iter().zip(&c2.0) {
        if a != b {
            return Ok(a < b);
        }
    }
    Ok(false)
}

/// Non-strict companion to [`lex_less`].
pub fn lex_leq(c1: &Content, c2: &Content) -> Result<bool> {
    Ok(c1 == c2 || lex_less(c1, c2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_matrices_match_the_diagrams() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert_eq!(a3.generator_count(), 3);
        assert_eq!(a3.exponent(1, 2).unwrap(), 3);
        assert_eq!(a3.exponent(1, 3).unwrap(), 2);
        assert_eq!(a3.exponent(2, 2).unwrap(), 1);

        let b3 = CoxeterSystem::type_b(3).unwrap();
        assert_eq!(b3.exponent(1, 2).unwrap(), 3);
        assert_eq!(b3.exponent(2, 3).unwrap(), 4);

        let d4 = CoxeterSystem::type_d(4).unwrap();
        assert_eq!(d4.generator_count(), 4);
        assert_eq!(d4.exponent(1, 2).unwrap(), 3);
        assert_eq!(d4.exponent(2, 3).unwrap(), 3);
        assert_eq!(d4.exponent(2, 4).unwrap(), 3);
        assert_eq!(d4.exponent(3, 4).unwrap(), 2);

        let i7 = CoxeterSystem::type_i(7).unwrap();
        assert_eq!(i7.exponent(1, 2).unwrap(), 7);
        assert_eq!(i7.generator_count(), 2);
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(CoxeterSystem::type_a(0).is_err());
        assert!(CoxeterSystem::type_b(1).is_err());
        assert!(CoxeterSystem::type_d(2).is_err());
        assert!(CoxeterSystem::type_i(1).is_err());
    }

    #[test]
    fn signature_counts_letters() {
        let a2 = CoxeterSystem::type_a(2).unwrap();
        let sig = signature(&Word(vec![2, 1, 2]), &a2).unwrap();
        assert_eq!(sig.0, vec![1, 2]);

        let empty = signature(&Word::empty(), &a2).unwrap();
        assert_eq!(empty.0, vec![0, 0]);

        let d3 = CoxeterSystem::type_d(3).unwrap();
        let sig = signature(&Word(vec![1, 2, 3, 1]), &d3).unwrap();
        assert_eq!(sig.0, vec![2, 1, 1]);
    }

    #[test]
    fn signature_rejects_out_of_range_letters() {
        let a2 = CoxeterSystem::type_a(2).unwrap();
        assert!(signature(&Word(vec![3]), &a2).is_err());
        assert!(signature(&Word(vec![0]), &a2).is_err());
    }

    #[test]
    fn content_folds_top_generators() {
        let a2 = CoxeterSystem::type_a(2).unwrap();
        assert_eq!(content(&Word(vec![2, 1, 2]), &a2).unwrap().0, vec![3, 1]);
        assert_eq!(content(&Word(vec![1, 2, 1]), &a2).unwrap().0, vec![3, 2]);

        // g2 g1 g2 < g1 g2 g1
        let c1 = content(&Word(vec![2, 1, 2]), &a2).unwrap();
        let c2 = content(&Word(vec![1, 2, 1]), &a2).unwrap();
        assert!(lex_less(&c1, &c2).unwrap());

        // In D the two fork generators fold into the length only.
        let d3 = CoxeterSystem::type_d(3).unwrap();
        assert_eq!(content(&Word(vec![2, 3, 2]), &d3).unwrap().0, vec![3, 0]);
    }

    #[test]
    fn lex_less_basics() {
        let t = |v: Vec<usize>| Content(v);
        assert!(lex_less(&t(vec![3, 1]), &t(vec![3, 2])).unwrap());
        assert!(!lex_less(&t(vec![3, 1]), &t(vec![3, 1])).unwrap());
        assert!(lex_less(&t(vec![2, 2]), &t(vec![3, 0])).unwrap());
        assert!(lex_less(&t(vec![1]), &t(vec![1, 2])).is_err());
    }

    #[test]
    fn content_and_signature_agree() {
        let d3 = CoxeterSystem::type_d(3).unwrap();
        for letters in [vec![], vec![1, 2, 3], vec![3, 3, 2, 1, 1, 2], vec![2, 3, 2, 3]] {
            let w = Word(letters);
            let sig = signature(&w, &d3).unwrap();
            let c = content(&w, &d3).unwrap();
            assert_eq!(c.0[0], sig.total());
            for k in 1..c.0.len() {
                assert_eq!(c.0[k], sig.0[k - 1]);
            }
        }
    }

    #[test]
    fn lex_less_is_a_strict_total_order_on_small_tuples() {
        // Exhaustive check on pairs of length-2 tuples with entries <= 5.
        let mut tuples = Vec::new();
        for a in 0..=5usize {
            for b in 0..=5usize {
                tuples.push(Content(vec![a, b]));
            }
        }
        for x in &tuples {
            assert!(!lex_less(x, x).unwrap());
            for y in &tuples {
                if x != y {
                    assert!(lex_less(x, y).unwrap() ^ lex_less(y, x).unwrap());
                }
                for z in &tuples {
                    if lex_less(x, y).unwrap() && lex_less(y, z).unwrap() {
                        assert!(lex_less(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn system_json_round_trip() {
        for sys in [
            CoxeterSystem::type_a(3).unwrap(),
            CoxeterSystem::type_b(2).unwrap(),
            CoxeterSystem::type_d(4).unwrap(),
            CoxeterSystem::type_i(5).unwrap(),
        ] {
            let json = serde_json::to_string(&sys).unwrap();
            let back: CoxeterSystem = serde_json::from_str(&json).unwrap();
            assert_eq!(sys, back);
        }
        let json = serde_json::to_string(&CoxeterSystem::type_a(3).unwrap()).unwrap();
        assert_eq!(json, r#"{"family":"A","n":3}"#);
    }

    #[test]
    fn system_names_parse_back() {
        for name in ["A3", "B2", "D4", "I5", "Iinf"] {
            let sys: CoxeterSystem = name.parse().unwrap();
            assert_eq!(sys.name(), name);
        }
    }
}
