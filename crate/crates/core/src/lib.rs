//! Łukasiewicz ∞-valued logic, Born-rule truth values, and the many-valued
//! representation of the lattice of closed subspaces of a finite-dimensional
//! Hilbert space.
//!
//! * [`truth`]: exact rational truth values and connectives.
//! * [`formula`]: parser, printer and evaluator for propositional formulas.
//! * [`hilbert`]: states, projectors, the subspace lattice and Pauli operators.
//! * [`representation`]: propositional functions `ψ ↦ ⟨ψ|P|ψ⟩` and a sampling
//!   verifier for the closure conditions of the representing family.
//! * [`ghz`]: the three-qubit GHZ argument, quantum, classical and many-valued.

pub mod formula;
pub mod ghz;
pub mod hilbert;
pub mod representation;
pub mod truth;
