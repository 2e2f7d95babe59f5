//! Exact computation in finite Coxeter groups of types A, B, D and I(m),
//! plus the affine group C̃2.
//!
//! The crate has two interlocking halves:
//!
//! * **Words and rewriting** — admissible transformations on words over the
//!   Coxeter generators, tent words, and a deterministic reduction of any
//!   word to *echelon form* that never increases the content of the word and
//!   never leaves its conjugacy class ([`rewrite`]).
//! * **Determinantal spectra** — the joint spectrum
//!   `det(x₀ρ(1) + x₁ρ(g₁) + … + x_nρ(g_n))` of a representation as an exact
//!   multivariate polynomial, its proper and bivariate slices, and the
//!   line/ellipse analysis of involution pairs, down to numeric
//!   block decompositions and implicit-curve identities ([`spectra`]).
//!
//! Everything exact is built on arbitrary-precision rationals ([`matrix`],
//! [`poly`]); the floating-point paths ([`numeric`]) are reserved for
//! eigendecompositions and the non-crystallographic dihedral models.
//!
//! Start with the runnable examples (`cargo run --example regular_spectrum`,
//! `…normalize_words`, and friends), or the `coxspec` command-line tool.
//! The `selftest` module hosts the acceptance suite: ten criteria that
//! exercise the whole crate end to end (`coxspec selftest`).

pub mod affine;
pub mod error;
pub mod matrix;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod realize;
pub mod rep;
pub mod rewrite;
pub mod selftest;
pub mod spectra;
pub mod system;

pub use error::{Error, Result};
pub use system::{content, lex_less, signature, Content, CoxeterSystem, Family, Signature, Word};
