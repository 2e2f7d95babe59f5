//! The affine Coxeter group C̃2 on `b₁, b₂, b₃` with
//! `b_j² = (b₁b₂)⁴ = (b₂b₃)⁴ = 1` and `b₁b₃ = b₃b₁`.
//!
//! Elements are kept in the normal form `c · r₁^{m₁} r₂^{m₂}` where
//! `r₁ = b₁b₂b₃b₂`, `r₂ = b₂b₁b₂b₃` generate the translation subgroup and
//! `c` runs over the eight reduced words in `b₂, b₃` that represent the
//! quotient by it. Conjugacy-class labels come with explicit conjugators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::realize::DihedralElement;

/// The eight coset representatives, as reduced words in `b₂` and `b₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coset {
    E,
    B2,
    B3,
    B2B3,
    B3B2,
    B2B3B2,
    B3B2B3,
    B2B3B2B3,
}

pub const ALL_COSETS: [Coset; 8] = [
    Coset::E,
    Coset::B2,
    Coset::B3,
    Coset::B2B3,
    Coset::B3B2,
    Coset::B2B3B2,
    Coset::B3B2B3,
    Coset::B2B3B2B3,
];

impl Coset {
    /// Letters of the representative word (2 for b₂, 3 for b₃).
    pub fn word(self) -> &'static [u8] {
        match self {
            Coset::E => &[],
            Coset::B2 => &[2],
            Coset::B3 => &[3],
            Coset::B2B3 => &[2, 3],
            Coset::B3B2 => &[3, 2],
            Coset::B2B3B2 => &[2, 3, 2],
            Coset::B3B2B3 => &[3, 2, 3],
            Coset::B2B3B2B3 => &[2, 3, 2, 3],
        }
    }

    pub fn label(self) -> String {
        if self == Coset::E {
            return "e".to_string();
        }
        self.word().iter().map(|l| format!("b{l}")).collect()
    }

    fn dihedral(self) -> DihedralElement {
        let mut acc = DihedralElement::identity(4);
        for &l in self.word() {
            let refl = DihedralElement::new(4, (l - 2) as usize, true);
            acc = acc.mul(&refl);
        }
        acc
    }

    fn from_dihedral(e: &DihedralElement) -> Coset {
        *ALL_COSETS
            .iter()
            .find(|c| c.dihedral() == *e)
            .expect("the eight words cover the dihedral group of order 8")
    }

    pub fn compose(self, other: Coset) -> Coset {
        Coset::from_dihedral(&self.dihedral().mul(&other.dihedral()))
    }

    pub fn inverse(self) -> Coset {
        Coset::from_dihedral(&self.dihedral().inverse())
    }
}

/// How pushing `r₁^{a} r₂^{b}` rightwards across a letter transforms the
/// exponent pair: `r^v · b = b · push(b)(v)`.
fn push_across(letter: u8, (a, b): (i64, i64)) -> (i64, i64) {
    match letter {
        1 => (-a, b),
        2 => (b, a),
        3 => (a, -b),
        _ => unreachable!("letters are 1, 2, 3"),
    }
}

fn push_across_word(word: &[u8], mut v: (i64, i64)) -> (i64, i64) {
    for &l in word {
        v = push_across(l, v);
    }
    v
}

/// An element of C̃2 in the normal form `coset · r₁^{m₁} r₂^{m₂}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CtildeElement {
    pub coset: Coset,
    pub m1: i64,
    pub m2: i64,
}

/// Generators and distinguished elements.
pub fn identity() -> CtildeElement {
    CtildeElement { coset: Coset::E, m1: 0, m2: 0 }
}

pub fn gen_b1() -> CtildeElement {
    // b₁ = b₂b₃b₂ · r₁⁻¹
    CtildeElement { coset: Coset::B2B3B2, m1: -1, m2: 0 }
}

pub fn gen_b2() -> CtildeElement {
    CtildeElement { coset: Coset::B2, m1: 0, m2: 0 }
}

pub fn gen_b3() -> CtildeElement {
    CtildeElement { coset: Coset::B3, m1: 0, m2: 0 }
}

pub fn gen_r1() -> CtildeElement {
    CtildeElement { coset: Coset::E, m1: 1, m2: 0 }
}

pub fn gen_r2() -> CtildeElement {
    CtildeElement { coset: Coset::E, m1: 0, m2: 1 }
}

/// Exact multiplication: push the left factor's translation part across the
/// right factor's coset word, then multiply cosets in the finite quotient.
pub fn mul(x: &CtildeElement, y: &CtildeElement) -> CtildeElement {
    let pushed = push_across_word(y.coset.word(), (x.m1, x.m2));
    CtildeElement {
        coset: x.coset.compose(y.coset),
        m1: pushed.0 + y.m1,
        m2: pushed.1 + y.m2,
    }
}

pub fn inverse(x: &CtildeElement) -> CtildeElement {
    let c_inv = x.coset.inverse();
    let pushed = push_across_word(c_inv.word(), (-x.m1, -x.m2));
    CtildeElement { coset: c_inv, m1: pushed.0, m2: pushed.1 }
}

pub fn conjugate(c: &CtildeElement, x: &CtildeElement) -> CtildeElement {
    mul(&mul(c, x), &inverse(c))
}

pub fn power(x: &CtildeElement, e: i64) -> CtildeElement {
    let (mut base, mut e) = if e < 0 { (inverse(x), (-e) as u64) } else { (*x, e as u64) };
    let mut acc = identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Letters for building elements from words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    B1,
    B2,
    B3,
    R1,
    R2,
    R1Inv,
    R2Inv,
}

impl Letter {
    pub fn element(self) -> CtildeElement {
        match self {
            Letter::B1 => gen_b1(),
            Letter::B2 => gen_b2(),
            Letter::B3 => gen_b3(),
            Letter::R1 => gen_r1(),
            Letter::R2 => gen_r2(),
            Letter::R1Inv => inverse(&gen_r1()),
            Letter::R2Inv => inverse(&gen_r2()),
        }
    }

    pub fn parse(tok: &str) -> Result<Letter> {
        match tok.trim() {
            "b1" => Ok(Letter::B1),
            "b2" => Ok(Letter::B2),
            "b3" => Ok(Letter::B3),
            "r1" => Ok(Letter::R1),
            "r2" => Ok(Letter::R2),
            "r1^-1" | "r1inv" | "R1inv" => Ok(Letter::R1Inv),
            "r2^-1" | "r2inv" | "R2inv" => Ok(Letter::R2Inv),
            other => Err(Error::Validation(format!("unknown letter '{other}'"))),
        }
    }
}

/// Fold a comma-separated word such as `b2,r1,r1,b3` into an element.
pub fn element_from_word(s: &str) -> Result<CtildeElement> {
    let s = s.trim();
    let mut acc = identity();
    if s.is_empty() {
        return Ok(acc);
    }
    for tok in s.split(',') {
        acc = mul(&acc, &Letter::parse(tok)?.element());
    }
    Ok(acc)
}

/// The integral affine-reflection model in homogeneous coordinates:
/// `b₁` reflects across `{x₁ = 1}`, `b₂` across `{x₁ = x₂}`, `b₃` across
/// `{x₂ = 0}`.
pub fn model_b(letter: u8) -> QMatrix {
    match letter {
        1 => QMatrix::from_i64(&[&[-1, 0, 2], &[0, 1, 0], &[0, 0, 1]]),
        2 => QMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
        3 => QMatrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]),
        _ => unreachable!(),
    }
}

fn model_word(letters: &[u8]) -> QMatrix {
    let mut acc = QMatrix::identity(3);
    for &l in letters {
        acc = acc.mul(&model_b(l)).expect("3x3");
    }
    acc
}

pub fn model_r1() -> QMatrix {
    model_word(&[1, 2, 3, 2])
}

pub fn model_r2() -> QMatrix {
    model_word(&[2, 1, 2, 3])
}

/// Matrix of an element in the affine model. Negative translation powers use
/// the reversed words, which are integral as well.
pub fn element_matrix(x: &CtildeElement) -> QMatrix {
    let signed_power = |fwd: &QMatrix, bwd: &QMatrix, e: i64| -> QMatrix {
        if e >= 0 {
            fwd.pow(e as usize).expect("3x3")
        } else {
            bwd.pow((-e) as usize).expect("3x3")
        }
    };
    let r1_inv = model_word(&[2, 3, 2, 1]);
    let r2_inv = model_word(&[3, 2, 1, 2]);
    model_word(x.coset.word())
        .mul(&signed_power(&model_r1(), &r1_inv, x.m1))
        .expect("3x3")
        .mul(&signed_power(&model_r2(), &r2_inv, x.m2))
        .expect("3x3")
}

/// Verify the presentation and the push-through relations as exact matrix
/// identities in the affine model: the defining relations, the seven
/// `b·r` exchange laws, and `r₁r₂ = r₂r₁` (eight identities beyond the
/// involutivity of the generators).
pub fn faithful_check() -> bool {
    let b1 = model_b(1);
    let b2 = model_b(2);
    let b3 = model_b(3);
    let r1 = model_r1();
    let r2 = model_r2();
    let r1_inv = model_word(&[2, 3, 2, 1]);
    let r2_inv = model_word(&[3, 2, 1, 2]);
    let mul = |a: &QMatrix, b: &QMatrix| a.mul(b).expect("3x3");

    // Sanity of the inverses themselves.
    if !mul(&r1, &r1_inv).is_identity() || !mul(&r2, &r2_inv).is_identity() {
        return false;
    }
    // Defining relations.
    for b in [&b1, &b2, &b3] {
        if !mul(b, b).is_identity() {
            return false;
        }
    }
    if !mul(&b1, &b2).pow(4).expect("3x3").is_identity() {
        return false;
    }
    if !mul(&b2, &b3).pow(4).expect("3x3").is_identity() {
        return false;
    }
    if mul(&b1, &b3) != mul(&b3, &b1) {
        return false;
    }
    // Exchange laws and commutativity of the translations.
    let checks = [
        (mul(&b1, &r1), mul(&r1_inv, &b1)),
        (mul(&b2, &r1), mul(&r2, &b2)),
        (mul(&b3, &r1), mul(&r1, &b3)),
        (mul(&b1, &r2), mul(&r2, &b1)),
        (mul(&b2, &r2), mul(&r1, &b2)),
        (mul(&b3, &r2), mul(&r2_inv, &b3)),
        (mul(&b3, &r2_inv), mul(&r2, &b3)),
        (mul(&r1, &r2), mul(&r2, &r1)),
    ];
    checks.iter().all(|(lhs, rhs)| lhs == rhs)
}

/// A conjugacy-class label `w_j(m₁, m₂)` together with the conjugator that
/// carries the input onto the representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub j: u8,
    pub m1: i64,
    pub m2: i64,
    pub conjugator: CtildeElement,
}

impl ClassLabel {
    /// The representative element `w_j(m₁, m₂)`.
    pub fn representative(&self) -> CtildeElement {
        let coset = match self.j {
            0 => Coset::E,
            1 => Coset::B2,
            2 => Coset::B3,
            3 => Coset::B2B3,
            _ => Coset::B2B3B2B3,
        };
        CtildeElement { coset, m1: self.m1, m2: self.m2 }
    }
}

/// Running state for the reduction: the current element and the accumulated
/// conjugator `c` with `c · x · c⁻¹ = current`.
struct Reduction {
    current: CtildeElement,
    conj: CtildeElement,
}

impl Reduction {
    fn by(&mut self, g: &CtildeElement) {
        self.current = conjugate(g, &self.current);
        self.conj = mul(g, &self.conj);
    }
}

/// Reduce an element to its class representative, certifying every move.
///
/// Shapes: cosets reduce to one of `1, b₂, b₃, b₂b₃, (b₂b₃)²`. Exponents then
/// reduce by the exchange laws: translations shear them (sum-preserving for
/// `j = 1`, by ±2 steps for `j ∈ {2, 3, 4}`), `b₂` interchanges them, `b₃`
/// flips the sign of `m₂`, and the central `(b₂b₃)²` negates both. The
/// resulting labels are genuine class invariants; the conjugator is verified
/// before returning.
pub fn class_label(x: &CtildeElement) -> Result<ClassLabel> {
    let mut red = Reduction { current: *x, conj: identity() };

    // Shape reduction.
    match red.current.coset {
        Coset::E | Coset::B2 | Coset::B3 | Coset::B2B3 | Coset::B2B3B2B3 => {}
        Coset::B3B2 => red.by(&gen_b3()),
        Coset::B2B3B2 => red.by(&gen_b2()),
        Coset::B3B2B3 => red.by(&gen_b3()),
    }

    let central = CtildeElement { coset: Coset::B2B3B2B3, m1: 0, m2: 0 };
    let r1 = gen_r1();
    let r2 = gen_r2();
    let r1_inv = inverse(&r1);
    let r2_inv = inverse(&r2);

    let j = match red.current.coset {
        Coset::E => {
            // Translation: sort |m₁| ≥ |m₂| ≥ 0.
            loop {
                let c = red.current;
                if c.m1 < 0 {
                    red.by(&gen_b1());
                } else if c.m2 < 0 {
                    red.by(&gen_b3());
                } else if c.m1 < c.m2 {
                    red.by(&gen_b2());
                } else {
                    break;
                }
            }
            0
        }
        Coset::B2 => {
            // Shear onto (m₁ + m₂, 0), then fix the sign with the center.
            while red.current.m2 > 0 {
                red.by(&r2);
            }
            while red.current.m2 < 0 {
                red.by(&r1);
            }
            if red.current.m1 < 0 {
                red.by(&central);
            }
            1
        }
        Coset::B3 => {
            while red.current.m2 > 1 {
                red.by(&r2);
            }
            while red.current.m2 < 0 {
                red.by(&r2_inv);
            }
            if red.current.m1 < 0 {
                red.by(&central);
                if red.current.m2 < 0 {
                    red.by(&gen_b3());
                }
            }
            2
        }
        Coset::B2B3 => {
            while red.current.m2 > 0 {
                red.by(&r2);
            }
            while red.current.m2 < 0 {
                red.by(&r2_inv);
            }
            while red.current.m1 > 1 {
                red.by(&r1);
                red.by(&r2_inv);
            }
            while red.current.m1 < 0 {
                red.by(&r1_inv);
                red.by(&r2);
            }
            3
        }
        Coset::B2B3B2B3 => {
            while red.current.m1 > 1 {
                red.by(&r1);
            }
            while red.current.m1 < 0 {
                red.by(&r1_inv);
            }
            while red.current.m2 > 1 {
                red.by(&r2);
            }
            while red.current.m2 < 0 {
                red.by(&r2_inv);
            }
            if red.current.m1 < red.current.m2 {
                red.by(&gen_b2());
            }
            4
        }
        _ => unreachable!("shape reduction covers all cosets"),
    };

    let label = ClassLabel { j, m1: red.current.m1, m2: red.current.m2, conjugator: red.conj };
    // Certify: conj · x · conj⁻¹ must equal the representative.
    if conjugate(&label.conjugator, x) != label.representative() {
        return Err(Error::InvariantViolation("class-label conjugator failed to verify".into()));
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_element<R: Rng>(rng: &mut R, bound: i64) -> CtildeElement {
        CtildeElement {
            coset: ALL_COSETS[rng.gen_range(0..8)],
            m1: rng.gen_range(-bound..=bound),
            m2: rng.gen_range(-bound..=bound),
        }
    }

    #[test]
    fn translations_commute() {
        let a = mul(&gen_r1(), &gen_r2());
        let b = mul(&gen_r2(), &gen_r1());
        assert_eq!(a, b);
        assert_eq!(a, CtildeElement { coset: Coset::E, m1: 1, m2: 1 });
    }

    #[test]
    fn b2_swaps_the_translations() {
        // b₂ r₁ b₂ = r₂.
        let x = mul(&mul(&gen_b2(), &gen_r1()), &gen_b2());
        assert_eq!(x, gen_r2());
        // b₃ r₂ b₃ = r₂⁻¹.
        let x = mul(&mul(&gen_b3(), &gen_r2()), &gen_b3());
        assert_eq!(x, inverse(&gen_r2()));
        // b₁ r₁ b₁ = r₁⁻¹.
        let x = mul(&mul(&gen_b1(), &gen_r1()), &gen_b1());
        assert_eq!(x, inverse(&gen_r1()));
    }

    #[test]
    fn b1_satisfies_the_presentation() {
        let b1 = gen_b1();
        assert_eq!(mul(&b1, &b1), identity());
        assert_eq!(power(&mul(&b1, &gen_b2()), 4), identity());
        assert_eq!(power(&mul(&gen_b2(), &gen_b3()), 4), identity());
        assert_eq!(mul(&b1, &gen_b3()), mul(&gen_b3(), &b1));
        // r₁ really is b₁b₂b₃b₂.
        let r1 = mul(&mul(&mul(&b1, &gen_b2()), &gen_b3()), &gen_b2());
        assert_eq!(r1, gen_r1());
        let r2 = mul(&mul(&mul(&gen_b2(), &b1), &gen_b2()), &gen_b3());
        assert_eq!(r2, gen_r2());
    }

    #[test]
    fn inverses_work_for_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = random_element(&mut rng, 10);
            assert_eq!(mul(&x, &inverse(&x)), identity());
            assert_eq!(mul(&inverse(&x), &x), identity());
        }
    }

    #[test]
    fn faithful_model_passes_and_agrees() {
        assert!(faithful_check());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let x = random_element(&mut rng, 6);
            let y = random_element(&mut rng, 6);
            let lhs = element_matrix(&mul(&x, &y));
            let rhs = element_matrix(&x).mul(&element_matrix(&y)).unwrap();
            assert_eq!(lhs, rhs);
        }
        // Faithfulness at small range: distinct elements, distinct matrices.
        let mut seen = std::collections::HashMap::new();
        for coset in ALL_COSETS {
            for m1 in -2..=2 {
                for m2 in -2..=2 {
                    let x = CtildeElement { coset, m1, m2 };
                    let key = format!("{:?}", element_matrix(&x).entries_to_strings());
                    assert!(seen.insert(key, x).is_none(), "collision at {x:?}");
                }
            }
        }
    }

    #[test]
    fn identity_labels_as_w0() {
        let label = class_label(&identity()).unwrap();
        assert_eq!((label.j, label.m1, label.m2), (0, 0, 0));
    }

    #[test]
    fn w4_unit_chains_share_a_label() {
        let w4 = |m1: i64, m2: i64| CtildeElement { coset: Coset::B2B3B2B3, m1, m2 };
        let base = class_label(&w4(1, 0)).unwrap();
        for x in [w4(0, 1), w4(-1, 0), w4(0, -1)] {
            let l = class_label(&x).unwrap();
            assert_eq!((l.j, l.m1, l.m2), (base.j, base.m1, base.m2), "{x:?}");
        }
        let base = class_label(&w4(1, 1)).unwrap();
        for x in [w4(-1, 1), w4(1, -1), w4(-1, -1)] {
            let l = class_label(&x).unwrap();
            assert_eq!((l.j, l.m1, l.m2), (base.j, base.m1, base.m2), "{x:?}");
        }
    }

    #[test]
    fn w4_interchange_and_reduction_moves() {
        let w4 = |m1: i64, m2: i64| CtildeElement { coset: Coset::B2B3B2B3, m1, m2 };
        for (k, l) in [(3, 1), (2, 5), (-4, 7), (0, 6)] {
            let a = class_label(&w4(k, l)).unwrap();
            let b = class_label(&w4(l, k)).unwrap();
            let c = class_label(&w4(k - 2, l)).unwrap();
            let d = class_label(&w4(k, l - 2)).unwrap();
            assert_eq!((a.j, a.m1, a.m2), (b.j, b.m1, b.m2));
            assert_eq!((a.j, a.m1, a.m2), (c.j, c.m1, c.m2));
            assert_eq!((a.j, a.m1, a.m2), (d.j, d.m1, d.m2));
        }
    }

    #[test]
    fn w3_collapses_onto_the_translation_sum() {
        // b₂b₃ r₁^{m₁} r₂^{m₂} is conjugate to b₂b₃ r₁^{m₁+m₂}.
        let w3 = |m1: i64, m2: i64| CtildeElement { coset: Coset::B2B3, m1, m2 };
        for (m1, m2) in [(2, 1), (0, 3), (4, 0), (1, 1)] {
            let a = class_label(&w3(m1, m2)).unwrap();
            let b = class_label(&w3(m1 + m2, 0)).unwrap();
            assert_eq!((a.j, a.m1, a.m2), (b.j, b.m1, b.m2));
        }
        // Mixed signs reduce too, with certified conjugators.
        for (m1, m2) in [(-2, 1), (3, -1), (-1, -1), (-3, 2)] {
            let l = class_label(&w3(m1, m2)).unwrap();
            assert_eq!(l.j, 3);
            assert!(l.m1 == 0 || l.m1 == 1);
            assert_eq!(l.m2, 0);
        }
    }

    #[test]
    fn labels_are_constant_under_generator_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let gens = [gen_b1(), gen_b2(), gen_b3(), gen_r1(), gen_r2()];
        for _ in 0..100 {
            let x = random_element(&mut rng, 6);
            let base = class_label(&x).unwrap();
            for g in &gens {
                let y = conjugate(g, &x);
                let l = class_label(&y).unwrap();
                assert_eq!(
                    (l.j, l.m1, l.m2),
                    (base.j, base.m1, base.m2),
                    "conjugating {x:?} by {g:?}"
                );
            }
        }
    }

    #[test]
    fn conjugators_certify_by_construction() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let x = random_element(&mut rng, 8);
            let label = class_label(&x).unwrap();
            assert_eq!(conjugate(&label.conjugator, &x), label.representative());
        }
    }
}
