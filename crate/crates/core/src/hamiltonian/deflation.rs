use super::pauli::PauliHamiltonian;
use super::{Observable, SpinOrdering};
use crate::error::{Error, Result};

/// Default rank-one shift, 2 Hartree (1255.02 kcal/mol).
pub const DEFAULT_SHIFT_HARTREE: f64 = 2.0;

const NORM_TOLERANCE: f64 = 1e-8;
const MAX_SHIFT_QUBITS: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct Shift {
    pub alpha: f64,
    /// Dense real unit vector of length `2^M`.
    pub state: Vec<f64>,
}

/// `H + sum_i alpha_i |e_i><e_i|`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeflatedHamiltonian {
    base: PauliHamiltonian,
    shifts: Vec<Shift>,
}

impl DeflatedHamiltonian {
    pub fn base(&self) -> &PauliHamiltonian {
        &self.base
    }

    pub fn shifts(&self) -> &[Shift] {
        &self.shifts
    }
}

pub fn deflate(
    h: &PauliHamiltonian,
    states: &[Vec<f64>],
    alphas: &[f64],
) -> Result<DeflatedHamiltonian> {
    let m = h.n_qubits();
    if m > MAX_SHIFT_QUBITS {
        return Err(Error::DimensionTooLarge {
            qubits: m,
            limit: MAX_SHIFT_QUBITS,
        });
    }
    if states.len() != alphas.len() {
        return Err(Error::Shape {
            expected: states.len(),
            found: alphas.len(),
        });
    }
    let dim = 1usize << m;
    let mut shifts = Vec::with_capacity(states.len());
    for (state, &alpha) in states.iter().zip(alphas) {
        if state.len() != dim {
            return Err(Error::Shape {
                expected: dim,
                found: state.len(),
            });
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidShift(format!("alpha must be positive, got {alpha}")));
        }
        let norm = state.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NonUnitState { norm });
        }
        shifts.push(Shift {
            alpha,
            state: state.clone(),
        });
    }
    Ok(DeflatedHamiltonian {
        base: h.clone(),
        shifts,
    })
}

impl Observable for DeflatedHamiltonian {
    fn n_qubits(&self) -> usize {
        self.base.n_qubits()
    }

    fn matrix_element(&self, bra: u64, ket: u64) -> Result<f64> {
        let shift: f64 = self
            .shifts
            .iter()
            .map(|s| s.alpha * s.state[bra as usize] * s.state[ket as usize])
            .sum();
        Ok(self.base.matrix_element(bra, ket)? + shift)
    }

    fn coupled_states(&self, ket: u64, out: &mut Vec<u64>) {
        self.base.coupled_states(ket, out);
    }

    fn linked_sets(&self) -> Vec<Vec<u64>> {
        self.shifts
            .iter()
            .map(|s| {
                s.state
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0.0)
                    .map(|(i, _)| i as u64)
                    .collect()
            })
            .collect()
    }

    fn spin_ordering(&self) -> Option<SpinOrdering> {
        self.base.ordering()
    }
}
