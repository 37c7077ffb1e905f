//! Analysis of finite semigroups given by Cayley tables: nilpotency in the
//! sense of Malcev, the positively-Engel and Neumann-Taylor conditions, the
//! upper and lower non-nilpotent graphs and the non-commuting graph,
//! constructors for the standard example families, exhaustive enumeration of
//! small orders up to (anti-)isomorphism, and a verification suite over that
//! corpus.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod canonical;
pub mod constructions;
pub mod enumeration;
mod error;
pub mod graphs;
pub mod greens;
pub mod io;
pub mod nilpotency;
pub mod semigroup;
pub mod verify;

pub use canonical::{are_anti_isomorphic, are_isomorphic, canonical_form, CanonicalForm, IsoModulus};
pub use error::{Error, Result};
pub use graphs::SimpleGraph;
pub use nilpotency::{EngelSimulationState, NonNilpotentWitness, PairTarget, PairTransitionSystem};
pub use semigroup::{ElementSubset, FiniteSemigroup, Multiplier, SubSemigroup};
