//! Constructive toolkit: base-n word codecs with dead/alive classification,
//! interleaving and diagonalization, the anti-diagonal pairing enumeration,
//! the fixed-point Schröder–Bernstein bijection, countable-enumeration
//! combinators, finite products with projections, and the finite
//! indicator-function counting argument. Exact rationals throughout; no
//! floating point.

pub mod bijection;
pub mod census;
pub mod pairing;
pub mod product;
pub mod word;

pub use bijection::{
    absorb_countable, remove_countable, schroder_bernstein, CountableMap, Enumeration,
    SbOutcome,
};
pub use census::indicator_census;
pub use pairing::{pairing, unpairing};
pub use product::{finite_product, FiniteProduct};
pub use word::{
    cantor_membership, deinterleave, diagonal, interleave, k_set, word_value, words_of,
    DeinterleaveOutcome, DiagonalReport, DiagonalRule, Word, WordError,
};
