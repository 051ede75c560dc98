//! Symbolic engine for the three operator algebras of fermionic quantum
//! simulation: Pauli strings on qubits, Majorana strings on 2M modes, and
//! normal-ordered fermionic strings on M modes.
//!
//! The crate provides exact (rational / symbolic) coefficient arithmetic,
//! unitary conjugation closed forms with their Clifford fast paths, the
//! Jordan-Wigner family of mappings between the algebras, a Z2-symmetry
//! qubit-tapering pipeline, and a dense-matrix oracle on small Fock spaces
//! that every symbolic rule can be checked against.

pub mod cli;
pub mod clifford;
pub mod coeff;
pub mod fermion;
pub mod gf2;
pub mod hamio;
pub mod lie;
pub mod majorana;
pub mod mappings;
pub mod oracle;
pub mod parser;
pub mod pauli;
pub mod tapering;
pub mod verify;

mod error;

pub use coeff::{Angle, Coeff, Rational, SymbolBindings};
pub use error::{Error, Result};

/// Which of the three operator algebras a value or angle refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Pauli,
    Majorana,
    Fermionic,
}

impl std::fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraKind::Pauli => write!(f, "pauli"),
            AlgebraKind::Majorana => write!(f, "majorana"),
            AlgebraKind::Fermionic => write!(f, "fermion"),
        }
    }
}
