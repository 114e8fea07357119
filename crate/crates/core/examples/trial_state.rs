//! Build a signed trial state from shot counts and pick its signs.
//!
//! ```text
//! cargo run --release --example trial_state
//! ```

use std::path::Path;

use varqa::bits::parse_bits;
use varqa::hamiltonian::{exact_diagonalize, PauliHamiltonian};
use varqa::sampler::SampleDistribution;
use varqa::trial_state::{build_trial_state, expected_energy, optimize_signs, SignPattern};

fn main() -> varqa::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/pauli/h2_1.950.pauli");
    let h = PauliHamiltonian::from_text(&std::fs::read_to_string(path)?)?;
    let (a, _) = parse_bits("1010")?;
    let (b, _) = parse_bits("0101")?;
    let counts = SampleDistribution::from_counts(4, [(a, 727), (b, 273)])?;
    let probs = counts.probabilities();

    let same = build_trial_state(&probs, &SignPattern::all_positive([a, b]))?;
    println!("signs ++ : {:.6} Hartree", expected_energy(&same, &h)?);
    let best = optimize_signs(&probs, &h)?;
    println!("best signs {} : {:.6} Hartree", best.signs, best.energy);
    println!("exact       : {:.6} Hartree", exact_diagonalize(&h)?.ground_energy());
    print!("{}", best.state);
    Ok(())
}
