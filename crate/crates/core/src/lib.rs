//! Exact computations with Seifert fibered spaces of class `Oo` and their
//! branched coverings along fibers.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: permutations, orbit and block computations, Smith normal
//!   form over arbitrary-precision integers.
//! - [`symbol`]: Seifert symbols, the classification moves, canonical forms,
//!   Euler numbers, first homology and recognition of `S²×S¹`.
//! - [`lift`]: frames, monodromy representations and the covering-lift
//!   engine, which computes the Seifert symbol of the cover associated to a
//!   representation.
//! - [`abelian`]: the Abelian branched covers of `(S²×S¹, t_{α,β})`,
//!   classified by 4-tuples, with closed-form symbols and homology.
//! - [`universal`]: explicit covering towers realising every Euler number
//!   zero manifold as a branched cover of `(S²×S¹, t_{α,β})` for `α ≥ 3`,
//!   together with an independent tower verifier.
//! - [`cli`]: the JSON front end used by the `seifert` binary.
//!
//! # Conventions
//!
//! Points are numbered from 1. [`algebra::Permutation::compose`] applies
//! its right argument first. Monodromy is a right action: a word
//! `g₁g₂…g_k` in a fundamental group maps to the permutation that applies
//! `ω(g₁)` first, see [`algebra::Permutation::then`] and
//! [`algebra::word_product`].

pub mod abelian;
pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod lift;
pub mod symbol;
pub mod universal;







pub use abelian::{AbelianCoverReport, FourTuple};
pub use algebra::{IntMatrix, Permutation};
pub use lift::{CoverResult, Frame, FrameRep};
pub use symbol::{AbelianGroup, CanonicalSymbol, FiberRatio, SeifertSymbol};
pub use universal::{CoveringPlan, PlanStep};
