//! Exact symbolic computation with welded braids up to link-homotopy.
//!
//! A welded braid acts on the reduced free group `RF_n` — the largest quotient
//! of the free group in which every generator commutes with all of its own
//! conjugates — by sending each generator to a conjugate of a generator. This
//! crate models that action faithfully over the integers:
//!
//! * [`lyndon`] — Lyndon words, Duval factorization, standard bracketings;
//! * [`algebra`] — the reduced free algebra `A[Y]` (tensor algebra modulo
//!   monomials with a repeated letter), with exact `BigInt` coefficients;
//! * [`rfree`] — `RF_n` through its Magnus-style expansion `x_i ↦ 1 + y_i`,
//!   which decides the word problem;
//! * [`rlie`] — the reduced free Lie ring, Lyndon coordinates, and tangential
//!   derivations;
//! * [`autos`] — basis-conjugating automorphisms: generators, composition,
//!   inversion, Milnor invariants, Johnson images, and the combing normal form;
//! * [`verify`] — a self-checking harness for the rank formulas and relation
//!   families satisfied by these groups, over exact integer linear algebra.
//!
//! Everything is immutable and pure; all arithmetic is exact.

pub mod algebra;
pub mod autos;
mod error;
pub mod lyndon;
pub mod rfree;
pub mod rlie;
pub mod verify;

pub use algebra::{Monomial, ReducedPoly};
pub use autos::{MilnorIndex, NormalForm, WeldedAuto};
pub use error::Error;
pub use lyndon::{Letter, LyndonTree, Word};
pub use rfree::{GroupWord, RFElement};
pub use rlie::{LieElement, TangentialDerivation};
pub use verify::{CheckReport, Family};

/// Convenience alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
