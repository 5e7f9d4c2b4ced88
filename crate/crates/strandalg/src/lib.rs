//! Exact-arithmetic models of the strands differential graded algebras
//! `B(n,d)`, the higher Auslander algebras `A(n,d)`, and the Bruhat interval
//! complexes that tie them together.
//!
//! The crate is organized bottom-up:
//!
//! * [`combinat`]: subset and multiset posets over `{1..n}`, rank and
//!   complement maps, and the interleaving predicates that select the basis
//!   of `A(n,d)`.
//! * [`symgrp`]: permutations of `S_d`, time-ordered reduced words, Bruhat
//!   order, and the maximal permutation attached to a pair of subsets.
//! * [`exactla`]: sparse exact linear algebra over the rationals and prime
//!   fields, plus integer Smith normal form.
//! * [`bruhat`]: balanced signatures on Bruhat intervals and the associated
//!   cochain complexes.
//! * [`strands`]: the strands algebra `B(n,d)` with its signed product and
//!   differential, and its degree-zero cohomology algebra.
//! * [`auslander`]: the algebras `A(n,d)` under both definitions, the
//!   rank-graded dual model, complement duality, and the rotation map.
//! * [`homalg`]: modules, projective resolutions, Ext tables, homological
//!   dimensions, and the standard resolutions.
//!
//! Conventions that everything downstream depends on:
//!
//! * Products compose diagrammatically: `mul(a, b)` means "first `a`, then
//!   `b`". Words in simple transpositions are stored in time order, and the
//!   permutation of a concatenated word is the right-to-left composite of
//!   its letters.
//! * All scalars are exact: arbitrary-precision rationals, prime fields, or
//!   arbitrary-precision integers. No floating point anywhere.
//! * Every enumeration is deterministic (colexicographic subsets,
//!   inversion-graded then lexicographic permutations), so reports are
//!   byte-stable.

pub mod auslander;
pub mod bruhat;
pub mod combinat;
pub mod exactla;
pub mod homalg;
pub mod strands;
pub mod symgrp;

use thiserror::Error;

/// Crate-wide error type. Constructors and operations with contractual
/// failure modes return `Result<_, Error>`; violations of internal
/// preconditions (comparing objects over different ambients, say) panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("incomparable: {0}")]
    Incomparable(String),
    #[error("letter {letter} out of range for d = {d}")]
    LetterOutOfRange { letter: u8, d: usize },
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("word does not represent the given permutation")]
    WrongPermutation,
    #[error("permutation is not in the interval")]
    NotInInterval,
    #[error("signature is not balanced: {0}")]
    UnbalancedSignature(String),
    #[error("boundary mismatch: target {target} != source {src}")]
    BoundaryMismatch { target: String, src: String },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation not supported over this coefficient ring: {0}")]
    UnsupportedField(String),
    #[error("resolution exceeded maximum length {0}")]
    ResolutionOverflow(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
