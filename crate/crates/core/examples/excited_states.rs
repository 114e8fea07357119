//! The lowest H2 triplet through deflation, one distance per k regime.
//!
//! ```text
//! cargo run --release --example excited_states
//! ```

use std::path::Path;

use varqa::hamiltonian::{PauliHamiltonian, DEFAULT_SHIFT_HARTREE};
use varqa::optimizer::{excited_state_search, h2_triplet_k, DigitizerKind, DigitizerSpec, SamplerConfig, SearchMode};
use varqa::units::hartree_to_kcal;

fn main() -> varqa::Result<()> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/pauli");
    let spec = DigitizerSpec::for_qubits(DigitizerKind::D1, 4, SearchMode::Exhaustive)?;
    for d in ["0.300", "0.600", "1.000"] {
        let h = PauliHamiltonian::from_text(&std::fs::read_to_string(fixtures.join(format!("h2_{d}.pauli")))?)?;
        let k = h2_triplet_k(d.parse().unwrap());
        let found = excited_state_search(&h, k, DEFAULT_SHIFT_HARTREE, &spec, &SamplerConfig::default(), 7)?;
        println!(
            "d = {d}  k = {k}  VarQA {:.8}  exact {:.8}  error {:.2e} kcal/mol",
            found.result.best_energy,
            found.target_energy,
            hartree_to_kcal(found.result.best_energy - found.target_energy)
        );
    }
    Ok(())
}
