use super::digitizer::DigitizerSpec;
use super::evaluate::SamplerConfig;
use super::search::{varqa_search, VarqaResult};
use crate::error::{Error, Result};
use crate::hamiltonian::{deflate, exact_diagonalize, DeflatedHamiltonian, PauliHamiltonian, Spectrum};

/// Number of deflated states that makes the lowest H2 triplet the ground
/// state, by bond length in Angstrom.
pub fn h2_triplet_k(distance: f64) -> usize {
    if distance < 0.475 {
        5
    } else if distance < 0.75 {
        3
    } else {
        1
    }
}

#[derive(Debug, Clone)]
pub struct ExcitedResult {
    pub result: VarqaResult,
    pub hamiltonian: DeflatedHamiltonian,
    /// Eigenvalue `k` of the undeflated spectrum.
    pub target_energy: f64,
    pub spectrum: Spectrum,
}

/// Deflate the `k` lowest eigenstates of `h` by `alpha_shift` each and
/// search for the ground state of the result.
pub fn excited_state_search(
    h: &PauliHamiltonian,
    k: usize,
    alpha_shift: f64,
    spec: &DigitizerSpec,
    config: &SamplerConfig,
    master_seed: u64,
) -> Result<ExcitedResult> {
    let spectrum = exact_diagonalize(h)?;
    if k >= spectrum.len() {
        return Err(Error::Config(format!(
            "cannot deflate {k} states of a {}-state spectrum",
            spectrum.len()
        )));
    }
    let states: Vec<Vec<f64>> = spectrum.eigenvectors[..k].to_vec();
    let deflated = deflate(h, &states, &vec![alpha_shift; k])?;
    let result = varqa_search(&deflated, spec, config, master_seed, false)?;
    Ok(ExcitedResult {
        result,
        hamiltonian: deflated,
        target_energy: spectrum.eigenvalues[k],
        spectrum,
    })
}
