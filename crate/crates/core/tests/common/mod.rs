//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use varqa::hamiltonian::{MolecularIntegrals, PauliHamiltonian, PauliWord};

pub fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

pub fn load_pauli(name: &str) -> PauliHamiltonian {
    let text = std::fs::read_to_string(fixture(&format!("pauli/{name}.pauli"))).unwrap();
    PauliHamiltonian::from_text(&text).unwrap()
}

/// Random real integrals with the full 8-fold permutational symmetry.
pub struct RawIntegrals {
    pub n: usize,
    pub core: f64,
    pub h: Vec<f64>,
    pub g: Vec<f64>,
}

impl RawIntegrals {
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut h = vec![0.0; n * n];
        for p in 0..n {
            for q in p..n {
                let v = rng.random_range(-1.0..1.0);
                h[p * n + q] = v;
                h[q * n + p] = v;
            }
        }
        let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
        let raw: Vec<f64> = (0..n.pow(4)).map(|_| rng.random_range(-0.5..0.5)).collect();
        let mut g = vec![0.0; n.pow(4)];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let perms = [
                            idx(i, j, k, l),
                            idx(j, i, k, l),
                            idx(i, j, l, k),
                            idx(j, i, l, k),
                            idx(k, l, i, j),
                            idx(l, k, i, j),
                            idx(k, l, j, i),
                            idx(l, k, j, i),
                        ];
                        g[idx(i, j, k, l)] = perms.iter().map(|&p| raw[p]).sum::<f64>() / 8.0;
                    }
                }
            }
        }
        RawIntegrals {
            n,
            core: rng.random_range(-1.0..1.0),
            h,
            g,
        }
    }

    pub fn to_library(&self, electrons: usize) -> MolecularIntegrals {
        MolecularIntegrals::new(self.n, electrons, 0, self.core, self.h.clone(), self.g.clone()).unwrap()
    }

    fn g(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let n = self.n;
        self.g[((i * n + j) * n + k) * n + l]
    }
}

/// Fermionic ladder operator on an occupation bit string, with modes
/// numbered from the least significant bit and the sign counting occupied
/// modes below the target.
fn ladder(state: u64, mode: usize, create: bool) -> Option<(f64, u64)> {
    let bit = 1u64 << mode;
    if (state & bit != 0) == create {
        return None;
    }
    let sign = if (state & (bit - 1)).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
    Some((sign, state ^ bit))
}

fn apply(ops: &[(usize, bool)], ket: u64) -> Option<(f64, u64)> {
    let mut s = ket;
    let mut sign = 1.0;
    for &(mode, create) in ops.iter().rev() {
        let (f, next) = ladder(s, mode, create)?;
        sign *= f;
        s = next;
    }
    Some((sign, s))
}

/// Second-quantized electronic Hamiltonian in the full Fock space, built
/// from ladder operators without any qubit mapping.
pub fn fermionic_matrix(ints: &RawIntegrals) -> DMatrix<f64> {
    let n = ints.n;
    let modes = 2 * n;
    let dim = 1usize << modes;
    let mode = |p: usize, spin: usize| p + spin * n;
    let mut mat = DMatrix::<f64>::zeros(dim, dim);
    for ket in 0..dim as u64 {
        mat[(ket as usize, ket as usize)] += ints.core;
        for s1 in 0..2 {
            for p in 0..n {
                for q in 0..n {
                    let ops = [(mode(p, s1), true), (mode(q, s1), false)];
                    if let Some((f, bra)) = apply(&ops, ket) {
                        mat[(bra as usize, ket as usize)] += f * ints.h[p * n + q];
                    }
                    for s2 in 0..2 {
                        for r in 0..n {
                            for s in 0..n {
                                let v = ints.g(p, q, r, s);
                                if v == 0.0 {
                                    continue;
                                }
                                let ops = [
                                    (mode(p, s1), true),
                                    (mode(r, s2), true),
                                    (mode(s, s2), false),
                                    (mode(q, s1), false),
                                ];
                                if let Some((f, bra)) = apply(&ops, ket) {
                                    mat[(bra as usize, ket as usize)] += 0.5 * f * v;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    mat
}

pub fn sorted_eigenvalues(mat: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = mat.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn single_qubit(c: char) -> [[Complex64; 2]; 2] {
    let o = Complex64::new(0.0, 0.0);
    let r = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match c {
        'I' => [[r, o], [o, r]],
        'X' => [[o, r], [r, o]],
        'Y' => [[o, -i], [i, o]],
        'Z' => [[r, o], [o, -r]],
        _ => panic!("bad Pauli {c}"),
    }
}

/// Dense `2^M x 2^M` matrix of a Pauli sum by explicit Kronecker products,
/// with the leftmost character acting on the most significant index bit.
pub fn dense_pauli(m: usize, terms: &[(f64, String)]) -> Vec<Vec<Complex64>> {
    let dim = 1usize << m;
    let mut out = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (coef, word) in terms {
        let mut mat = vec![vec![Complex64::new(1.0, 0.0)]];
        for c in word.chars() {
            let p = single_qubit(c);
            let d = mat.len();
            let mut next = vec![vec![Complex64::new(0.0, 0.0); 2 * d]; 2 * d];
            for a in 0..d {
                for b in 0..d {
                    for x in 0..2 {
                        for y in 0..2 {
                            next[2 * a + x][2 * b + y] = mat[a][b] * p[x][y];
                        }
                    }
                }
            }
            mat = next;
        }
        for a in 0..dim {
            for b in 0..dim {
                out[a][b] += mat[a][b] * coef;
            }
        }
    }
    out
}

/// Random Hermitian Pauli sum as `(coefficient, word)` pairs.
pub fn random_pauli_terms(m: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<(f64, String)> {
    (0..count)
        .map(|_| {
            let word: String = (0..m).map(|_| ['I', 'X', 'Y', 'Z'][rng.random_range(0..4)]).collect();
            (rng.random_range(-1.0..1.0), word)
        })
        .collect()
}

pub fn pauli_from_terms(m: usize, terms: &[(f64, String)]) -> PauliHamiltonian {
    PauliHamiltonian::from_terms(
        m,
        terms.iter().map(|(c, w)| (*c, PauliWord::parse(w).unwrap().0)),
    )
    .unwrap()
}
