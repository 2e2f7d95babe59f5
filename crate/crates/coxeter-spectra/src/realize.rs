//! Concrete, faithful realizations of the supported Coxeter groups: signed
//! permutations for types A/B/D, abstract rotation–reflection pairs for I(m),
//! group enumeration with Cayley lookup, conjugacy classes, and the left
//! regular representation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{rat_int, QMatrix};
use crate::rep::Representation;
use crate::system::{CoxeterSystem, Family, Word};

pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

/// A signed permutation of `{1..N}`: a permutation together with a sign per
/// coordinate. Acts on basis vectors by `e_i ↦ sign(π(i)) e_{π(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    /// 0-based images: `perm[i]` is π(i).
    perm: Vec<usize>,
    /// Signs attached to target coordinates, `signs[j] ∈ {+1, −1}`.
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.perm.swap(a, b);
        p
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        debug_assert_eq!(n, other.size());
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for (i, slot) in perm.iter_mut().enumerate() {
            let mid = other.perm[i];
            let target = self.perm[mid];
            *slot = target;
            signs[target] = other.signs[mid] * self.signs[target];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.size();
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for (i, sign) in signs.iter_mut().enumerate() {
            let j = self.perm[i];
            perm[j] = i;
            *sign = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// Number of −1 signs; type D preserves its parity.
    pub fn negative_signs(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// The matrix whose column `i` is the image of `e_i`.
    pub fn matrix(&self) -> QMatrix {
        let n = self.size();
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(self.perm[i], i)] = rat_int(self.signs[self.perm[i]] as i64);
        }
        m
    }
}

/// An element of the dihedral group I(m): a rotation exponent mod `m` and a
/// reflection flag. Kept abstract so Cayley tables stay exact for every `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    modulus: usize,
    rotation: usize,
    reflected: bool,
}

impl DihedralElement {
    pub fn identity(m: usize) -> Self {
        DihedralElement { modulus: m, rotation: 0, reflected: false }
    }

    pub fn new(m: usize, rotation: usize, reflected: bool) -> Self {
        DihedralElement { modulus: m, rotation: rotation % m, reflected }
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn reflected(&self) -> bool {
        self.reflected
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let rotation = if self.reflected {
            (self.rotation + m - other.rotation % m) % m
        } else {
            (self.rotation + other.rotation) % m
        };
        DihedralElement { modulus: m, rotation, reflected: self.reflected ^ other.reflected }
    }

    pub fn inverse(&self) -> Self {
        if self.reflected {
            self.clone()
        } else {
            DihedralElement {
                modulus: self.modulus,
                rotation: (self.modulus - self.rotation) % self.modulus,
                reflected: false,
            }
        }
    }
}

/// A realized group element from whichever family is in play.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Signed(SignedPermutation),
    Dihedral(DihedralElement),
}

impl GroupElement {
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (GroupElement::Signed(a), GroupElement::Signed(b)) => GroupElement::Signed(a.mul(b)),
            (GroupElement::Dihedral(a), GroupElement::Dihedral(b)) => {
                GroupElement::Dihedral(a.mul(b))
            }
            _ => panic!("mixed group element families"),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::Signed(a) => GroupElement::Signed(a.inverse()),
            GroupElement::Dihedral(a) => GroupElement::Dihedral(a.inverse()),
        }
    }

    pub fn as_signed(&self) -> Option<&SignedPermutation> {
        match self {
            GroupElement::Signed(p) => Some(p),
            _ => None,
        }
    }
}

/// Identity element of the realization of `sys`.
pub fn realize_identity(sys: &CoxeterSystem) -> Result<GroupElement> {
    Ok(match sys.family() {
        Family::A => GroupElement::Signed(SignedPermutation::identity(sys.rank() + 1)),
        Family::B => GroupElement::Signed(SignedPermutation::identity(sys.rank())),
        Family::D => GroupElement::Signed(SignedPermutation::identity(sys.rank() + 1)),
        Family::I => {
            let m = finite_edge_label(sys)?;
            GroupElement::Dihedral(DihedralElement::identity(m))
        }
    })
}

fn finite_edge_label(sys: &CoxeterSystem) -> Result<usize> {
    match sys.edge_label() {
        0 => Err(Error::UnsupportedSystem(
            "I(∞) has no finite realization here".into(),
        )),
        m => Ok(m),
    }
}

/// The standard realization of generator `i`.
///
/// * `A_n`: transposition `(i, i+1)` on `n + 1` letters.
/// * `B_n`: `(i, i+1)` for `i < n`; `g_n` flips the sign of coordinate `n`.
/// * `D_{n+1}`: `(i, i+1)` for `i ≤ n`; `g_{n+1}` sends `e_n ↦ −e_{n+1}`,
///   `e_{n+1} ↦ −e_n`.
/// * `I(m)`: two reflections whose product has order `m`.
pub fn realize_generator(i: usize, sys: &CoxeterSystem) -> Result<GroupElement> {
    sys.check_index(i)?;
    let n = sys.rank();
    Ok(match sys.family() {
        Family::A => {
            GroupElement::Signed(SignedPermutation::transposition(n + 1, i - 1, i))
        }
        Family::B => {
            if i < n {
                GroupElement::Signed(SignedPermutation::transposition(n, i - 1, i))
            } else {
                let mut p = SignedPermutation::identity(n);
                p.signs[n - 1] = -1;
                GroupElement::Signed(p)
            }
        }
        Family::D => {
            if i <= n {
                GroupElement::Signed(SignedPermutation::transposition(n + 1, i - 1, i))
            } else {
                let mut p = SignedPermutation::transposition(n + 1, n - 1, n);
                p.signs[n - 1] = -1;
                p.signs[n] = -1;
                GroupElement::Signed(p)
            }
        }
        Family::I => {
            let m = finite_edge_label(sys)?;
            GroupElement::Dihedral(DihedralElement::new(m, i - 1, true))
        }
    })
}

/// Left-to-right product of the realized letters; the empty word is the identity.
pub fn eval_word(w: &Word, sys: &CoxeterSystem) -> Result<GroupElement> {
    w.validate(sys)?;
    let mut acc = realize_identity(sys)?;
    for &letter in w.letters() {
        acc = acc.mul(&realize_generator(letter, sys)?);
    }
    Ok(acc)
}

/// Order of the realized product `g_i g_j`; used to validate realizations.
pub fn product_order(i: usize, j: usize, sys: &CoxeterSystem) -> Result<usize> {
    let gi = realize_generator(i, sys)?;
    let gj = realize_generator(j, sys)?;
    let prod = gi.mul(&gj);
    let id = realize_identity(sys)?;
    let mut acc = prod.clone();
    let mut order = 1usize;
    let bound = 4 * sys.generator_count().max(sys.edge_label()) + 8;
    while acc != id {
        acc = acc.mul(&prod);
        order += 1;
        if order > bound {
            return Err(Error::InvariantViolation(format!(
                "order of g{i}g{j} exceeds bound {bound}"
            )));
        }
    }
    Ok(order)
}

/// Check that the realization satisfies the defining relations exactly:
/// the order of `g_i g_j` equals the Coxeter exponent for every pair.
pub fn validate_realization(sys: &CoxeterSystem) -> Result<bool> {
    let gc = sys.generator_count();
    for i in 1..=gc {
        for j in 1..=gc {
            if product_order(i, j, sys)? != sys.exponent(i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A fully enumerated finite group: indexed elements, Cayley lookup, shortest
/// representative words, inverses, and the generator indices.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    sys: CoxeterSystem,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    words: Vec<Word>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroupTable {
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Shortest word reaching element `i` (breadth-first discovery order).
    pub fn word_for(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Index of the generator `g_k` (1-based `k`).
    pub fn generator(&self, k: usize) -> usize {
        self.generators[k - 1]
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        let prod = self.elements[i].mul(&self.elements[j]);
        self.index[&prod]
    }

    pub fn conjugate(&self, c: usize, x: usize) -> usize {
        self.product(self.product(c, x), self.inverses[c])
    }

    /// Materialized Cayley table (`order²` entries, row-major).
    pub fn product_table(&self) -> Vec<u32> {
        let n = self.order();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.product(i, j) as u32;
            }
        }
        table
    }

    /// Evaluate a word to its element index.
    pub fn eval_word_index(&self, w: &Word) -> Result<usize> {
        w.validate(&self.sys)?;
        let mut acc = self.identity();
        for &letter in w.letters() {
            acc = self.product(acc, self.generator(letter));
        }
        Ok(acc)
    }

    /// Spot-check associativity on a deterministic sample of triples.
    pub fn spot_check_associativity(&self, samples: usize) -> bool {
        let n = self.order();
        let mut state = 0xabcdef12345678u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        };
        for _ in 0..samples {
            let (a, b, c) = (next(), next(), next());
            if self.product(self.product(a, b), c) != self.product(a, self.product(b, c)) {
                return false;
            }
        }
        true
    }
}

/// Enumerate the group by closing the generators under multiplication, with
/// the default cap of 10,000 elements.
pub fn enumerate_group(sys: &CoxeterSystem) -> Result<FiniteGroupTable> {
    enumerate_group_capped(sys, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_group_capped(sys: &CoxeterSystem, cap: usize) -> Result<FiniteGroupTable> {
    let gc = sys.generator_count();
    let gens: Vec<GroupElement> = (1..=gc)
        .map(|i| realize_generator(i, sys))
        .collect::<Result<Vec<_>>>()?;
    let id = realize_identity(sys)?;

    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0usize);
    let mut words = vec![Word::empty()];
    let mut frontier = std::collections::VecDeque::from([0usize]);
    while let Some(head) = frontier.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let next = elements[head].mul(g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                let idx = elements.len();
                index.insert(next.clone(), idx);
                elements.push(next);
                let mut w = words[head].0.clone();
                w.push(k + 1);
                words.push(Word(w));
                frontier.push_back(idx);
            }
        }
    }

    let inverses = elements
        .iter()
        .map(|e| index[&e.inverse()])
        .collect::<Vec<_>>();
    let generators = gens.iter().map(|g| index[g]).collect();
    Ok(FiniteGroupTable { sys: sys.clone(), elements, index, words, inverses, generators })
}

/// Partition of element indices into conjugacy classes: orbits under
/// conjugation by the generators. Classes are ordered by their smallest
/// member, so the identity class comes first.
pub fn conjugacy_classes(table: &FiniteGroupTable) -> Vec<Vec<usize>> {
    let n = table.order();
    let gen_count = table.generator_count();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for seed in 0..n {
        if seen[seed] {
            continue;
        }
        let mut orbit = vec![seed];
        seen[seed] = true;
        let mut queue = vec![seed];
        while let Some(x) = queue.pop() {
            for k in 1..=gen_count {
                let g = table.generator(k);
                let y = table.conjugate(g, x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push(y);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    classes
}

/// Brute-force search for `c` with `c x c⁻¹ = y`.
pub fn conjugator_search(x: usize, y: usize, table: &FiniteGroupTable) -> Option<usize> {
    (0..table.order()).find(|&c| table.conjugate(c, x) == y)
}

/// The left regular representation: each generator becomes the permutation
/// matrix of left multiplication on the group elements.
pub fn regular_representation(table: &FiniteGroupTable) -> Representation {
    let n = table.order();
    let mut matrices = Vec::with_capacity(table.generator_count());
    for k in 1..=table.generator_count() {
        let g = table.generator(k);
        let mut m = QMatrix::zero(n, n);
        for h in 0..n {
            m[(table.product(g, h), h)] = rat_int(1);
        }
        matrices.push(m);
    }
    // Relations hold by construction on a validated Cayley table.
    Representation::new_exact_trusted(table.system().clone(), matrices)
}
