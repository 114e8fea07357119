use super::TrialState;
use crate::error::{Error, Result};
use crate::hamiltonian::Observable;

/// `<bra|H|ket>` from the operator's algebraic matrix elements.
pub fn transition_element<H: Observable + ?Sized>(bra: u64, ket: u64, h: &H) -> Result<f64> {
    h.matrix_element(bra, ket)
}

/// Matrix elements of `H` restricted to a sorted support.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportCouplings {
    pub states: Vec<u64>,
    pub diagonal: Vec<f64>,
    /// `(i, j, <s_i|H|s_j>)` with `i < j`, nonzero elements only, sorted.
    pub off_diagonal: Vec<(usize, usize, f64)>,
}

impl SupportCouplings {
    /// `states` must be sorted and distinct.
    pub fn new<H: Observable + ?Sized>(states: &[u64], h: &H) -> Result<Self> {
        debug_assert!(states.windows(2).all(|w| w[0] < w[1]));
        let index = |m: u64| states.binary_search(&m).ok();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut scratch = Vec::new();
        for (i, &m) in states.iter().enumerate() {
            scratch.clear();
            h.coupled_states(m, &mut scratch);
            pairs.extend(scratch.iter().filter_map(|&n| index(n)).filter(|&j| j > i).map(|j| (i, j)));
        }
        for set in h.linked_sets() {
            let members: Vec<usize> = set.into_iter().filter_map(index).collect();
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    pairs.push((i.min(j), i.max(j)));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let diagonal = states
            .iter()
            .map(|&m| h.matrix_element(m, m))
            .collect::<Result<Vec<_>>>()?;
        let mut off_diagonal = Vec::with_capacity(pairs.len());
        for (i, j) in pairs {
            let v = h.matrix_element(states[i], states[j])?;
            if v != 0.0 {
                off_diagonal.push((i, j, v));
            }
        }
        Ok(SupportCouplings {
            states: states.to_vec(),
            diagonal,
            off_diagonal,
        })
    }

    /// `sum_i a_i^2 H_ii + 2 sum_{i<j} a_i a_j H_ij` for amplitudes aligned with `states`.
    pub fn energy(&self, amplitudes: &[f64]) -> f64 {
        let diag: f64 = amplitudes.iter().zip(&self.diagonal).map(|(a, d)| a * a * d).sum();
        let off: f64 = self
            .off_diagonal
            .iter()
            .map(|&(i, j, v)| amplitudes[i] * amplitudes[j] * v)
            .sum();
        diag + 2.0 * off
    }
}

/// `<psi|H|psi>` summed over support pairs only.
pub fn expected_energy<H: Observable + ?Sized>(psi: &TrialState, h: &H) -> Result<f64> {
    if psi.n_qubits() != h.n_qubits() {
        return Err(Error::Shape {
            expected: h.n_qubits(),
            found: psi.n_qubits(),
        });
    }
    let states: Vec<u64> = psi.states().collect();
    let amps: Vec<f64> = psi.support().iter().map(|e| e.1).collect();
    Ok(SupportCouplings::new(&states, h)?.energy(&amps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{deflate, PauliHamiltonian};

    #[test]
    fn z_expectation_cancels() {
        let h = PauliHamiltonian::from_text("# qubits: 1\n1 Z\n").unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let psi = TrialState::new(1, [(0, r), (1, r)]).unwrap();
        assert!(expected_energy(&psi, &h).unwrap().abs() < 1e-15);
    }

    #[test]
    fn x_expectation_uses_off_diagonal() {
        let h = PauliHamiltonian::from_text("# qubits: 1\n1 X\n").unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let plus = TrialState::new(1, [(0, r), (1, r)]).unwrap();
        let minus = TrialState::new(1, [(0, r), (1, -r)]).unwrap();
        assert!((expected_energy(&plus, &h).unwrap() - 1.0).abs() < 1e-15);
        assert!((expected_energy(&minus, &h).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn deflation_shift_links_support_pairs() {
        let h = PauliHamiltonian::from_text("# qubits: 1\n1 Z\n").unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let d = deflate(&h, &[vec![r, r]], &[3.0]).unwrap();
        let plus = TrialState::new(1, [(0, r), (1, r)]).unwrap();
        assert!((expected_energy(&plus, &d).unwrap() - 3.0).abs() < 1e-12);
        let c = SupportCouplings::new(&[0, 1], &d).unwrap();
        assert_eq!(c.off_diagonal.len(), 1);
    }

    #[test]
    fn width_mismatch() {
        let h = PauliHamiltonian::from_text("# qubits: 2\n1 ZZ\n").unwrap();
        let psi = TrialState::basis_state(1, 0).unwrap();
        assert!(expected_energy(&psi, &h).is_err());
    }
}
