use std::collections::HashMap;

use num_complex::Complex64;

use super::integrals::SpinOrbitalIntegrals;
use super::pauli::{Pauli, PauliHamiltonian, PauliWord};
use crate::error::Result;

/// A ladder operator as a sum of two Pauli words.
type Ladder = [(Complex64, PauliWord); 2];

/// `a_j -> (X_j + iY_j)/2 Z_1 ... Z_{j-1}` and its adjoint.
fn ladder(j: usize, m: usize, creation: bool) -> Ladder {
    let mut tail = PauliWord::IDENTITY;
    for q in 0..j {
        tail.z |= PauliWord::single(Pauli::Z, q, m).z;
    }
    let x = PauliWord::single(Pauli::X, j, m);
    let y = PauliWord::single(Pauli::Y, j, m);
    let with_tail = |w: PauliWord| PauliWord {
        x: w.x | tail.x,
        z: w.z | tail.z,
    };
    let y_sign = if creation { -0.5 } else { 0.5 };
    [
        (Complex64::new(0.5, 0.0), with_tail(x)),
        (Complex64::new(0.0, y_sign), with_tail(y)),
    ]
}

fn product(ops: &[&Ladder], scale: f64, acc: &mut HashMap<PauliWord, Complex64>) {
    let mut partial: Vec<(Complex64, PauliWord)> = vec![(Complex64::new(scale, 0.0), PauliWord::IDENTITY)];
    for op in ops {
        let mut next = Vec::with_capacity(partial.len() * 2);
        for &(c, w) in &partial {
            for &(d, v) in op.iter() {
                let (phase, u) = w.mul(&v);
                next.push((c * d * phase, u));
            }
        }
        partial = next;
    }
    for (c, w) in partial {
        *acc.entry(w).or_default() += c;
    }
}

/// Map spin-orbital integrals to a qubit Hamiltonian; spin orbital `p` becomes qubit `p`.
pub fn jordan_wigner(so: &SpinOrbitalIntegrals) -> Result<PauliHamiltonian> {
    let m = so.n_spin_orbitals;
    let create: Vec<Ladder> = (0..m).map(|j| ladder(j, m, true)).collect();
    let annihilate: Vec<Ladder> = (0..m).map(|j| ladder(j, m, false)).collect();

    let mut acc: HashMap<PauliWord, Complex64> = HashMap::new();
    acc.insert(PauliWord::IDENTITY, Complex64::new(so.core_energy, 0.0));

    for (p, cp) in create.iter().enumerate() {
        for (q, aq) in annihilate.iter().enumerate() {
            let h = so.one_body(p, q);
            if h != 0.0 {
                product(&[cp, aq], h, &mut acc);
            }
        }
    }
    for p in 0..m {
        for q in 0..m {
            if p == q {
                continue;
            }
            for r in 0..m {
                for s in 0..m {
                    if r == s {
                        continue;
                    }
                    let g = so.two_body(p, q, r, s);
                    if g != 0.0 {
                        product(
                            &[&create[p], &create[q], &annihilate[r], &annihilate[s]],
                            0.5 * g,
                            &mut acc,
                        );
                    }
                }
            }
        }
    }

    Ok(PauliHamiltonian::from_complex_terms(m, acc.into_iter().map(|(w, c)| (c, w)))?.with_ordering(so.ordering))
}
