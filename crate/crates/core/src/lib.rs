//! Exact graph invariants and hamiltonicity conditions for small graphs.
//!
//! Everything here works on labeled simple graphs of at most 64 vertices,
//! stored as one adjacency bitmask per vertex. All threshold comparisons are
//! carried out with exact rationals; nothing in the crate touches floating
//! point.
//!
//! The modules roughly layer as follows:
//!
//! * [`graph`] and [`graph6`]: representation, constructors, codec.
//! * [`rational`] and [`invariants`]: toughness, σ₂, independence number,
//!   component counts and friends.
//! * [`cycle`] and [`hamiltonian`]: oriented cycles, spanning-cycle search,
//!   the cycle-set index and the D_λ-cycle machinery.
//! * [`surgery`]: segment algebra on oriented cycles and certificate-producing
//!   reroutes.
//! * [`theorems`]: premise/conclusion checkers for the classical and
//!   toughness-based sufficient conditions.

#![forbid(unsafe_code)]

pub mod cycle;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hamiltonian;
pub mod invariants;
pub mod rational;
pub mod surgery;
pub mod theorems;

pub use cycle::OrientedCycle;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6, Graph6Error, Graph6ErrorKind};
pub use rational::Rational;
