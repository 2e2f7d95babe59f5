//! Representations of the supported Coxeter groups: construction with
//! relation validation, direct sums, characters, equivalence by characters,
//! and built-in irreducible tables for A₂, B₂ and I(m).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{rat_int, QMatrix, Rat};
use crate::numeric::FMatrix;
use crate::realize::{conjugacy_classes, FiniteGroupTable};
use crate::system::{CoxeterSystem, Family};

pub const DEFAULT_FLOAT_TOL: f64 = 1e-10;

/// Generator matrices, exact or floating.
#[derive(Debug, Clone)]
pub enum RepMatrices {
    Exact(Vec<QMatrix>),
    Float(Vec<FMatrix>),
}

/// A representation given by one matrix per Coxeter generator.
#[derive(Debug, Clone)]
pub struct Representation {
    sys: CoxeterSystem,
    matrices: RepMatrices,
    dim: usize,
    /// Tolerance used to validate float representations.
    tol: f64,
}

impl Representation {
    /// Build an exact representation, validating the defining relations
    /// `(ρ(g_i) ρ(g_j))^{m_ij} = I` exactly.
    pub fn new_exact(sys: CoxeterSystem, matrices: Vec<QMatrix>) -> Result<Self> {
        let rep = Self::new_exact_trusted(sys, matrices);
        rep.validate_exact()?;
        Ok(rep)
    }

    /// Internal constructor for representations whose relations hold by
    /// construction (e.g. regular representations off a validated table).
    pub(crate) fn new_exact_trusted(sys: CoxeterSystem, matrices: Vec<QMatrix>) -> Self {
        let dim = matrices.first().map_or(0, |m| m.nrows());
        Representation { sys, matrices: RepMatrices::Exact(matrices), dim, tol: 0.0 }
    }

    /// Build a float representation, validating relations within `tol`.
    pub fn new_float(sys: CoxeterSystem, matrices: Vec<FMatrix>, tol: f64) -> Result<Self> {
        let dim = matrices.first().map_or(0, |m| m.nrows());
        let rep = Representation { sys, matrices: RepMatrices::Float(matrices), dim, tol };
        rep.validate_float()?;
        Ok(rep)
    }

    fn validate_exact(&self) -> Result<()> {
        let mats = self.exact_matrices()?;
        let gc = self.sys.generator_count();
        if mats.len() != gc {
            return Err(Error::Validation(format!(
                "expected {gc} generator matrices, got {}",
                mats.len()
            )));
        }
        for m in mats {
            if !m.is_square() || m.nrows() != self.dim {
                return Err(Error::Validation("generator matrices must be square of equal size".into()));
            }
        }
        for i in 1..=gc {
            for j in i..=gc {
                let mij = self.sys.exponent(i, j)?;
                if mij == 0 {
                    continue; // infinite exponent: no relation to check
                }
                let prod = mats[i - 1].mul(&mats[j - 1])?;
                if !prod.pow(mij)?.is_identity() {
                    return Err(Error::Validation(format!(
                        "relation (g{i} g{j})^{mij} = 1 fails"
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_float(&self) -> Result<()> {
        let mats = self.float_matrices()?;
        let gc = self.sys.generator_count();
        if mats.len() != gc {
            return Err(Error::Validation(format!(
                "expected {gc} generator matrices, got {}",
                mats.len()
            )));
        }
        for m in mats {
            if m.nrows() != self.dim || m.ncols() != self.dim {
                return Err(Error::Validation("generator matrices must be square of equal size".into()));
            }
        }
        for i in 1..=gc {
            for j in i..=gc {
                let mij = self.sys.exponent(i, j)?;
                if mij == 0 {
                    continue;
                }
                let prod = mats[i - 1].matmul(&mats[j - 1]);
                let mut acc = FMatrix::identity(self.dim);
                for _ in 0..mij {
                    acc = acc.matmul(&prod);
                }
                if acc.distance_to_identity() > self.tol {
                    return Err(Error::ToleranceViolation(format!(
                        "relation (g{i} g{j})^{mij} = 1 off by {:.3e}",
                        acc.distance_to_identity()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.matrices, RepMatrices::Exact(_))
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn exact_matrices(&self) -> Result<&[QMatrix]> {
        match &self.matrices {
            RepMatrices::Exact(m) => Ok(m),
            RepMatrices::Float(_) => Err(Error::NotExact),
        }
    }

    pub fn float_matrices(&self) -> Result<&[FMatrix]> {
        match &self.matrices {
            RepMatrices::Float(m) => Ok(m),
            RepMatrices::Exact(_) => Err(Error::Validation("representation is exact".into())),
        }
    }

    /// Generator matrix for 1-based index `i`, converted to floats if exact.
    pub fn matrix_f64(&self, i: usize) -> Result<FMatrix> {
        self.sys.check_index(i)?;
        Ok(match &self.matrices {
            RepMatrices::Exact(m) => m[i - 1].to_f64(),
            RepMatrices::Float(m) => m[i - 1].clone(),
        })
    }

    /// Evaluate an exact representation on a word.
    pub fn eval_word(&self, letters: &[usize]) -> Result<QMatrix> {
        let mats = self.exact_matrices()?;
        let mut acc = QMatrix::identity(self.dim);
        for &l in letters {
            self.sys.check_index(l)?;
            acc = acc.mul(&mats[l - 1])?;
        }
        Ok(acc)
    }

    /// Conjugate an exact representation by an invertible rational matrix.
    pub fn conjugated(&self, c: &QMatrix, c_inv: &QMatrix) -> Result<Representation> {
        let mats = self.exact_matrices()?;
        let conj = mats
            .iter()
            .map(|m| c.mul(m)?.mul(c_inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation::new_exact_trusted(self.sys.clone(), conj))
    }
}

/// Block-diagonal direct sum; both sides must share the system and exactness.
pub fn direct_sum(r1: &Representation, r2: &Representation) -> Result<Representation> {
    if r1.sys != r2.sys {
        return Err(Error::Validation("direct sum across different systems".into()));
    }
    match (&r1.matrices, &r2.matrices) {
        (RepMatrices::Exact(a), RepMatrices::Exact(b)) => {
            let mats = a
                .iter()
                .zip(b)
                .map(|(m1, m2)| QMatrix::block_diag(&[m1, m2]))
                .collect();
            Ok(Representation::new_exact_trusted(r1.sys.clone(), mats))
        }
        (RepMatrices::Float(a), RepMatrices::Float(b)) => {
            let mats: Vec<FMatrix> = a
                .iter()
                .zip(b)
                .map(|(m1, m2)| FMatrix::block_diag(&[m1, m2]))
                .collect();
            let dim = mats.first().map_or(0, |m| m.nrows());
            Ok(Representation {
                sys: r1.sys.clone(),
                matrices: RepMatrices::Float(mats),
                dim,
                tol: r1.tol.max(r2.tol),
            })
        }
        _ => Err(Error::Validation("direct sum across exactness kinds".into())),
    }
}

/// Class function of an exact representation: one trace per conjugacy class,
/// in the class order produced by [`conjugacy_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character(pub Vec<Rat>);

/// Character of an exact representation. Traces are computed on one
/// representative per class and cross-checked on a second when the class has
/// one.
pub fn character(rep: &Representation, table: &FiniteGroupTable) -> Result<Character> {
    if rep.system() != table.system() {
        return Err(Error::Validation("representation/table system mismatch".into()));
    }
    let classes = conjugacy_classes(table);
    let mut values = Vec::with_capacity(classes.len());
    for class in &classes {
        let first = trace_of_element(rep, table, class[0])?;
        if class.len() > 1 {
            let second = trace_of_element(rep, table, class[1])?;
            if first != second {
                return Err(Error::InvariantViolation(
                    "character is not constant on a conjugacy class".into(),
                ));
            }
        }
        values.push(first);
    }
    Ok(Character(values))
}

fn trace_of_element(rep: &Representation, table: &FiniteGroupTable, idx: usize) -> Result<Rat> {
    let word = table.word_for(idx);
    Ok(rep.eval_word(word.letters())?.trace())
}

/// Two exact finite-group representations are equivalent iff their characters
/// match; no intertwiner is constructed.
pub fn equivalent(r1: &Representation, r2: &Representation, table: &FiniteGroupTable) -> Result<bool> {
    if r1.dim() != r2.dim() {
        return Ok(false);
    }
    Ok(character(r1, table)? == character(r2, table)?)
}

/// One-dimensional sign representation from a sign per generator; the signs
/// must be compatible with the Coxeter exponents.
pub fn sign_rep(sys: &CoxeterSystem, signs: &[i64]) -> Result<Representation> {
    let mats = signs
        .iter()
        .map(|&s| {
            let mut m = QMatrix::zero(1, 1);
            m[(0, 0)] = rat_int(s);
            m
        })
        .collect();
    Representation::new_exact(sys.clone(), mats)
}

/// The trivial representation.
pub fn trivial_rep(sys: &CoxeterSystem) -> Result<Representation> {
    sign_rep(sys, &vec![1; sys.generator_count()])
}

/// The alternating (determinant) representation.
pub fn alternating_rep(sys: &CoxeterSystem) -> Result<Representation> {
    sign_rep(sys, &vec![-1; sys.generator_count()])
}

/// The canonical reflection pair for a two-dimensional dihedral block with
/// angle parameter `theta ∈ (0, 1/2)`:
/// `ρ(g₁) = [[cos πθ, sin πθ], [sin πθ, −cos πθ]]` and
/// `ρ(g₂) = [[cos πθ, −sin πθ], [−sin πθ, −cos πθ]]`.
pub fn dihedral_reflection_pair(theta: f64) -> (FMatrix, FMatrix) {
    let (c, s) = ((std::f64::consts::PI * theta).cos(), (std::f64::consts::PI * theta).sin());
    let a1 = FMatrix::from_rows(&[vec![c, s], vec![s, -c]]);
    let a2 = FMatrix::from_rows(&[vec![c, -s], vec![-s, -c]]);
    (a1, a2)
}

/// Built-in irreducible representations.
///
/// * `A₂`: trivial, sign, and the two-dimensional standard representation.
/// * `B₂`: four one-dimensional sign representations and one two-dimensional.
/// * `I(m)`: the one-dimensional representations (two for odd `m`, four for
///   even) and the two-dimensional `ρ_j` with `θ = j/m`, `1 ≤ j < m/2` —
///   exact integral models for crystallographic `m ∈ {2, 3, 4, 6}`, float
///   reflection pairs otherwise.
pub fn irrep_table(sys: &CoxeterSystem) -> Result<Vec<Representation>> {
    match (sys.family(), sys.rank(), sys.edge_label()) {
        (Family::A, 2, _) => {
            let std2 = Representation::new_exact(
                sys.clone(),
                vec![
                    QMatrix::from_i64(&[&[-1, 1], &[0, 1]]),
                    QMatrix::from_i64(&[&[1, 0], &[1, -1]]),
                ],
            )?;
            Ok(vec![trivial_rep(sys)?, alternating_rep(sys)?, std2])
        }
        (Family::B, 2, _) => irrep_table(&CoxeterSystem::type_i(4)?)
            .map(|reps| reps.into_iter().map(|r| r.resystem(sys.clone())).collect()),
        (Family::I, _, 0) => Err(Error::UnsupportedSystem("I(∞) has no finite table".into())),
        (Family::I, _, m) => {
            let mut reps = vec![trivial_rep(sys)?];
            if m % 2 == 0 {
                reps.push(sign_rep(sys, &[-1, 1])?);
                reps.push(sign_rep(sys, &[1, -1])?);
            }
            reps.push(alternating_rep(sys)?);
            for j in 1..=(m - 1) / 2 {
                reps.push(dihedral_2dim(sys, j, m)?);
            }
            Ok(reps)
        }
        _ => Err(Error::UnsupportedSystem(format!(
            "no built-in irreducible table for {}",
            sys.name()
        ))),
    }
}

/// Exact integral models exist exactly when the rotation trace `2cos(2πj/m)`
/// is an integer; everything else uses the float reflection pair.
fn dihedral_2dim(sys: &CoxeterSystem, j: usize, m: usize) -> Result<Representation> {
    let exact: Option<(QMatrix, QMatrix)> = match (m, j) {
        // Rotation traces 2cos(2πj/m) ∈ {1, 0, −1, −2}.
        (3, 1) => Some((
            QMatrix::from_i64(&[&[-1, 1], &[0, 1]]),
            QMatrix::from_i64(&[&[1, 0], &[1, -1]]),
        )),
        (4, 1) => Some((
            QMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            QMatrix::from_i64(&[&[1, 0], &[0, -1]]),
        )),
        (6, 1) => Some((
            QMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            QMatrix::from_i64(&[&[1, 1], &[0, -1]]),
        )),
        (6, 2) => Some((
            QMatrix::from_i64(&[&[-1, 1], &[0, 1]]),
            QMatrix::from_i64(&[&[1, 0], &[1, -1]]),
        )),
        (2, _) => None, // no two-dimensional irreducibles for I(2)
        _ => None,
    };
    match exact {
        Some((a1, a2)) => Representation::new_exact(sys.clone(), vec![a1, a2]),
        None => {
            let theta = j as f64 / m as f64;
            let (a1, a2) = dihedral_reflection_pair(theta);
            Representation::new_float(sys.clone(), vec![a1, a2], DEFAULT_FLOAT_TOL)
        }
    }
}

impl Representation {
    /// Retarget a representation onto an isomorphic presentation (B₂ ↔ I(4)).
    fn resystem(mut self, sys: CoxeterSystem) -> Representation {
        self.sys = sys;
        self
    }
}

#[derive(Serialize, Deserialize)]
struct RepWire {
    system: CoxeterSystem,
    dim: usize,
    exact: bool,
    matrices: Vec<Vec<Vec<String>>>,
}

impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let matrices = match &self.matrices {
            RepMatrices::Exact(mats) => mats.iter().map(|m| m.entries_to_strings()).collect(),
            RepMatrices::Float(mats) => mats
                .iter()
                .map(|m| {
                    (0..m.nrows())
                        .map(|i| (0..m.ncols()).map(|j| format!("{:?}", m[(i, j)])).collect())
                        .collect()
                })
                .collect(),
        };
        let wire = RepWire {
            system: self.sys.clone(),
            dim: self.dim,
            exact: self.is_exact(),
            matrices,
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = RepWire::deserialize(deserializer)?;
        if wire.exact {
            let mats = wire
                .matrices
                .iter()
                .map(|rows| QMatrix::from_strings(rows))
                .collect::<Result<Vec<_>>>()
                .map_err(D::Error::custom)?;
            Representation::new_exact(wire.system, mats).map_err(D::Error::custom)
        } else {
            let mats = wire
                .matrices
                .iter()
                .map(|rows| {
                    let parsed: std::result::Result<Vec<Vec<f64>>, D::Error> = rows
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|s| s.parse::<f64>().map_err(D::Error::custom))
                                .collect()
                        })
                        .collect();
                    parsed.map(|rows| FMatrix::from_rows(&rows))
                })
                .collect::<std::result::Result<Vec<_>, D::Error>>()?;
            Representation::new_float(wire.system, mats, DEFAULT_FLOAT_TOL)
                .map_err(D::Error::custom)
        }
    }
}
