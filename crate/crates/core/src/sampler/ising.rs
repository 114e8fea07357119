use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Number of ansatz parameters for `m` qubits: `m(m+1)/2 + 1`.
pub const fn parameter_count(m: usize) -> usize {
    m * (m + 1) / 2 + 1
}

/// Diagonal Ising Hamiltonian
/// `H(theta) = sum_i theta_i s_i + sum_{j>i} theta_ij s_i s_j + theta_0`,
/// with spin `s = +1` for bit 0 and `s = -1` for bit 1.
///
/// The flat parameter order is `(theta_1..theta_M, theta_12, theta_13, ..,
/// theta_{M-1,M}, theta_0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingAnsatz {
    n_qubits: usize,
    params: Vec<f64>,
}

impl IsingAnsatz {
    pub fn from_parameters(n_qubits: usize, params: Vec<f64>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > bits::MAX_QUBITS {
            return Err(Error::InvalidAnsatz(format!("{n_qubits} qubits")));
        }
        let nu = parameter_count(n_qubits);
        if params.len() != nu {
            return Err(Error::Shape {
                expected: nu,
                found: params.len(),
            });
        }
        if params.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidAnsatz("non-finite parameter".into()));
        }
        Ok(IsingAnsatz { n_qubits, params })
    }

    pub fn zeros(n_qubits: usize) -> Self {
        IsingAnsatz {
            n_qubits,
            params: vec![0.0; parameter_count(n_qubits)],
        }
    }

    /// Infer `M` from `nu = M(M+1)/2 + 1`.
    pub fn qubits_for_parameter_count(nu: usize) -> Option<usize> {
        (1..=bits::MAX_QUBITS).find(|&m| parameter_count(m) == nu)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn parameters(&self) -> &[f64] {
        &self.params
    }

    pub fn parameter_count(&self) -> usize {
        self.params.len()
    }

    pub fn set_parameter(&mut self, index: usize, value: f64) {
        self.params[index] = value;
    }

    pub fn linear(&self, i: usize) -> f64 {
        self.params[i]
    }

    /// Coupling `theta_ij` for `i < j` (0-based qubits).
    pub fn coupling(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < j && j < self.n_qubits);
        self.params[self.coupling_index(i, j)]
    }

    pub fn coupling_index(&self, i: usize, j: usize) -> usize {
        let m = self.n_qubits;
        // rows 0..i contribute (m-1) + (m-2) + ... + (m-i) couplings
        m + i * (2 * m - i - 1) / 2 + (j - i - 1)
    }

    pub fn offset(&self) -> f64 {
        self.params[self.params.len() - 1]
    }

    /// Ising energy of a basis state.
    pub fn energy(&self, state: u64) -> f64 {
        let m = self.n_qubits;
        let mut e = self.offset();
        let mut k = m;
        for i in 0..m {
            let si = spin(state, i, m);
            e += self.params[i] * si;
            for j in (i + 1)..m {
                e += self.params[k] * si * spin(state, j, m);
                k += 1;
            }
        }
        e
    }

    pub fn energy_of_spins(&self, spins: &[f64]) -> f64 {
        let m = self.n_qubits;
        let mut e = self.offset();
        let mut k = m;
        for i in 0..m {
            e += self.params[i] * spins[i];
            for j in (i + 1)..m {
                e += self.params[k] * spins[i] * spins[j];
                k += 1;
            }
        }
        e
    }

    /// Dense `M x M` symmetric coupling matrix (zero diagonal).
    pub fn coupling_matrix(&self) -> Vec<f64> {
        let m = self.n_qubits;
        let mut j = vec![0.0; m * m];
        let mut k = m;
        for a in 0..m {
            for b in (a + 1)..m {
                j[a * m + b] = self.params[k];
                j[b * m + a] = self.params[k];
                k += 1;
            }
        }
        j
    }
}

/// Ising energy of the `M`-character bit string `bits`.
pub fn ising_energy(theta: &IsingAnsatz, bit_string: &str) -> Result<f64> {
    let (state, m) = bits::parse_bits(bit_string)?;
    if m != theta.n_qubits() {
        return Err(Error::Shape {
            expected: theta.n_qubits(),
            found: m,
        });
    }
    Ok(theta.energy(state))
}

#[inline]
pub(crate) fn spin(state: u64, q: usize, m: usize) -> f64 {
    if bits::qubit(state, q, m) {
        -1.0
    } else {
        1.0
    }
}

impl fmt::Display for IsingAnsatz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.params.iter().map(|p| format!("{p}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}
