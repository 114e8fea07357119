//! Electronic-structure Hamiltonians in qubit form.
//!
//! FCIDUMP integrals are expanded to spin orbitals, mapped to a weighted sum
//! of Pauli words with the Jordan-Wigner transform, and diagonalized exactly
//! to provide reference energies. Rank-one shifts ([`deflate`]) move low
//! eigenstates up so an excited state becomes the ground state.

mod deflation;
mod exact;
mod fcidump;
mod integrals;
mod jordan_wigner;
mod pauli;

pub use deflation::{deflate, DeflatedHamiltonian, Shift, DEFAULT_SHIFT_HARTREE};
pub use exact::{
    exact_diagonalize, exact_diagonalize_with, EdOptions, Sector, Spectrum, DENSE_QUBIT_LIMIT,
    SECTOR_QUBIT_LIMIT,
};
pub use fcidump::parse_fcidump;
pub use integrals::{to_spin_orbitals, MolecularIntegrals, SpinOrbitalIntegrals, SpinOrdering};
pub use jordan_wigner::jordan_wigner;
pub use pauli::{Pauli, PauliHamiltonian, PauliTerm, PauliWord, IMAGINARY_TOLERANCE, PRUNE_THRESHOLD};

use crate::error::Result;

/// A real Hermitian operator on `M` qubits that can be queried one
/// computational-basis matrix element at a time.
pub trait Observable: Sync {
    fn n_qubits(&self) -> usize;

    /// `<bra|H|ket>`; errors if the element has a non-negligible imaginary part.
    fn matrix_element(&self, bra: u64, ket: u64) -> Result<f64>;

    /// Append every basis state (other than `ket`) that may have a nonzero
    /// element with `ket` through a Pauli term. May over-report.
    fn coupled_states(&self, ket: u64, out: &mut Vec<u64>);

    /// Sets of basis states coupled by non-Pauli contributions.
    fn linked_sets(&self) -> Vec<Vec<u64>> {
        Vec::new()
    }

    /// Spin layout used for sector labels.
    fn spin_ordering(&self) -> Option<SpinOrdering> {
        None
    }
}

/// FCIDUMP text straight to a qubit Hamiltonian.
pub fn hamiltonian_from_fcidump(text: &str, ordering: SpinOrdering) -> Result<PauliHamiltonian> {
    let mi = parse_fcidump(text)?;
    jordan_wigner(&to_spin_orbitals(&mi, ordering))
}
