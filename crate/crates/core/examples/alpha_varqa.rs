//! Averaging the distributions of two ansatz widens the trial support.
//!
//! ```text
//! cargo run --release --example alpha_varqa
//! ```

use std::path::Path;

use varqa::hamiltonian::{exact_diagonalize, PauliHamiltonian};
use varqa::optimizer::{alpha_varqa, SamplerConfig};
use varqa::sampler::{Backend, IsingAnsatz};
use varqa::units::hartree_to_kcal;

fn main() -> varqa::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/pauli/h2_1.500.pauli");
    let h = PauliHamiltonian::from_text(&std::fs::read_to_string(path)?)?;
    let exact = exact_diagonalize(&h)?.ground_energy();
    let config = SamplerConfig {
        backend: Backend::ExactGibbs { beta: 3.0 },
        ..Default::default()
    };
    // Strong fields pin each ansatz to one closed-shell determinant.
    let hf = IsingAnsatz::from_parameters(4, vec![2., -2., 2., -2., 0., 0., 0., 0., 0., 0., 0.])?;
    let doubly = IsingAnsatz::from_parameters(4, vec![-2., 2., -2., 2., 0., 0., 0., 0., 0., 0., 0.])?;

    for (name, thetas) in [
        ("first only", vec![hf.clone()]),
        ("second only", vec![doubly.clone()]),
        ("both", vec![hf, doubly]),
    ] {
        let t = alpha_varqa(&thetas, &h, &config, 0)?;
        println!(
            "{name:>12}: support {}  error {:.3} kcal/mol",
            t.state.len(),
            hartree_to_kcal(t.energy - exact)
        );
    }
    Ok(())
}
