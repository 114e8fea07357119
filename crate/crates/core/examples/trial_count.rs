//! Best energy against the number of random D1 trials on active-space LiH.
//!
//! ```text
//! cargo run --release --example trial_count
//! ```

use std::path::Path;

use varqa::hamiltonian::{exact_diagonalize, PauliHamiltonian};
use varqa::optimizer::{varqa_search, DigitizerKind, DigitizerSpec, SamplerConfig, SearchMode};
use varqa::units::hartree_to_kcal;

fn main() -> varqa::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/pauli/as-lih_1.600.pauli");
    let h = PauliHamiltonian::from_text(&std::fs::read_to_string(path)?)?;
    let exact = exact_diagonalize(&h)?.ground_energy();
    let spec = DigitizerSpec::for_qubits(DigitizerKind::D1, 4, SearchMode::Random { trials: 10_000, seed: 1 })?;
    let result = varqa_search(&h, &spec, &SamplerConfig::default(), 1, true)?;
    let trace = result.energy_trace.unwrap_or_default();
    for t in [10, 100, 1000, 10_000] {
        let best = trace.iter().take_while(|(i, _)| *i < t).last().map(|e| e.1);
        if let Some(e) = best {
            println!("T = {t:>6}: error {:.4} kcal/mol", hartree_to_kcal(e - exact));
        }
    }
    Ok(())
}
