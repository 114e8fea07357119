//! Refine an integer optimum of H2 at 1.950 Angstrom by tuning one angle.
//!
//! ```text
//! cargo run --release --example fine_tune
//! ```

use std::path::Path;

use varqa::bits::format_bits;
use varqa::hamiltonian::{exact_diagonalize, PauliHamiltonian};
use varqa::optimizer::{evaluate_trial, fine_tune, Coordinates, FineTuneOptions, SamplerConfig};
use varqa::sampler::{Backend, IsingAnsatz, SampleCount};
use varqa::units::hartree_to_kcal;

fn main() -> varqa::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/pauli/h2_1.950.pauli");
    let h = PauliHamiltonian::from_text(&std::fs::read_to_string(path)?)?;
    let exact = exact_diagonalize(&h)?.ground_energy();

    let theta = IsingAnsatz::from_parameters(4, vec![0., 0., 1., 0., 1., -1., 1., 1., -1., 1., 1.])?;
    let config = SamplerConfig {
        backend: Backend::ExactGibbs { beta: 1.0 },
        shots: SampleCount::Infinite,
        support_floor: 0.005,
        ..Default::default()
    };
    let options = FineTuneOptions {
        coordinates: Coordinates::Subset(vec![1]),
        ..Default::default()
    };
    let tuned = fine_tune(&theta, &h, &config, &options)?;
    let state = evaluate_trial(&h, &tuned.theta, &config, options.seed)?.state;

    println!("integer angles: error {:.4} kcal/mol", hartree_to_kcal(tuned.initial_energy - exact));
    println!(
        "theta_2 = {:.4}: error {:.4} kcal/mol after {} evaluations",
        tuned.theta.parameters()[1],
        hartree_to_kcal(tuned.energy - exact),
        tuned.evaluations
    );
    for &(m, a) in state.support() {
        println!("  |{}>  {a:+.4}", format_bits(m, 4));
    }
    Ok(())
}
