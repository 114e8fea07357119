use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;

/// How spatial orbitals and spins are laid out on qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinOrdering {
    /// All alpha spin orbitals, then all beta spin orbitals.
    #[default]
    Blocked,
    /// Alpha and beta alternate per spatial orbital.
    Interleaved,
}

impl SpinOrdering {
    /// Spin-orbital (qubit) index of spatial orbital `orbital` with spin `beta`.
    pub fn spin_orbital(self, orbital: usize, beta: bool, n_spatial: usize) -> usize {
        match self {
            SpinOrdering::Blocked => orbital + if beta { n_spatial } else { 0 },
            SpinOrdering::Interleaved => 2 * orbital + usize::from(beta),
        }
    }

    /// Inverse of [`SpinOrdering::spin_orbital`]: `(spatial orbital, is_beta)`.
    pub fn split(self, spin_orbital: usize, n_spatial: usize) -> (usize, bool) {
        match self {
            SpinOrdering::Blocked => (spin_orbital % n_spatial, spin_orbital >= n_spatial),
            SpinOrdering::Interleaved => (spin_orbital / 2, spin_orbital % 2 == 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpinOrdering::Blocked => "blocked",
            SpinOrdering::Interleaved => "interleaved",
        }
    }
}

impl std::str::FromStr for SpinOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "blocked" => Ok(SpinOrdering::Blocked),
            "interleaved" => Ok(SpinOrdering::Interleaved),
            other => Err(Error::Config(format!("unknown spin ordering '{other}'"))),
        }
    }
}

/// One- and two-electron integrals over real spatial orbitals, in Hartree.
///
/// `two_body` is stored in chemists' notation `(ij|kl)` as a dense row-major
/// `n^4` tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct MolecularIntegrals {
    n_orbitals: usize,
    n_electrons: usize,
    ms2: i32,
    core_energy: f64,
    one_body: Vec<f64>,
    two_body: Vec<f64>,
}

impl MolecularIntegrals {
    pub fn new(
        n_orbitals: usize,
        n_electrons: usize,
        ms2: i32,
        core_energy: f64,
        one_body: Vec<f64>,
        two_body: Vec<f64>,
    ) -> Result<Self> {
        let n = n_orbitals;
        if one_body.len() != n * n {
            return Err(Error::Shape {
                expected: n * n,
                found: one_body.len(),
            });
        }
        if two_body.len() != n.pow(4) {
            return Err(Error::Shape {
                expected: n.pow(4),
                found: two_body.len(),
            });
        }
        if n_electrons > 2 * n {
            return Err(Error::InvalidIntegrals(format!(
                "{n_electrons} electrons do not fit in {n} spatial orbitals"
            )));
        }
        if !core_energy.is_finite()
            || one_body.iter().chain(&two_body).any(|v| !v.is_finite())
        {
            return Err(Error::InvalidIntegrals("non-finite integral".into()));
        }
        let mi = MolecularIntegrals {
            n_orbitals,
            n_electrons,
            ms2,
            core_energy,
            one_body,
            two_body,
        };
        mi.check_symmetry()?;
        Ok(mi)
    }

    /// Integrals with only a constant term.
    pub fn constant(n_orbitals: usize, n_electrons: usize, core_energy: f64) -> Result<Self> {
        Self::new(
            n_orbitals,
            n_electrons,
            0,
            core_energy,
            vec![0.0; n_orbitals * n_orbitals],
            vec![0.0; n_orbitals.pow(4)],
        )
    }

    fn check_symmetry(&self) -> Result<()> {
        let n = self.n_orbitals;
        for p in 0..n {
            for q in 0..n {
                if (self.one_body(p, q) - self.one_body(q, p)).abs() > SYMMETRY_TOL {
                    return Err(Error::InvalidIntegrals(format!(
                        "one-body matrix not symmetric at ({p}, {q})"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = self.two_body(i, j, k, l);
                        let images = [
                            self.two_body(j, i, k, l),
                            self.two_body(i, j, l, k),
                            self.two_body(k, l, i, j),
                        ];
                        if images.iter().any(|w| (v - w).abs() > SYMMETRY_TOL) {
                            return Err(Error::InvalidIntegrals(format!(
                                "two-body tensor breaks 8-fold symmetry at ({i}{j}|{k}{l})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_orbitals(&self) -> usize {
        self.n_orbitals
    }

    pub fn n_electrons(&self) -> usize {
        self.n_electrons
    }

    pub fn ms2(&self) -> i32 {
        self.ms2
    }

    pub fn core_energy(&self) -> f64 {
        self.core_energy
    }

    pub fn one_body(&self, p: usize, q: usize) -> f64 {
        self.one_body[p * self.n_orbitals + q]
    }

    /// Chemists' notation `(ij|kl)`.
    pub fn two_body(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let n = self.n_orbitals;
        self.two_body[((i * n + j) * n + k) * n + l]
    }
}

/// Integrals over `M = 2n` spin orbitals in the index convention of
/// `H = sum h[p][q] a+_p a_q + 1/2 sum g[p][q][r][s] a+_p a+_q a_r a_s`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinOrbitalIntegrals {
    pub ordering: SpinOrdering,
    pub n_spin_orbitals: usize,
    pub core_energy: f64,
    one_body: Vec<f64>,
    two_body: Vec<f64>,
}

impl SpinOrbitalIntegrals {
    /// Build spin-orbital integrals directly (`one_body` is `M x M`, `two_body` is `M^4`,
    /// physicists' order).
    pub fn new(
        ordering: SpinOrdering,
        n_spin_orbitals: usize,
        core_energy: f64,
        one_body: Vec<f64>,
        two_body: Vec<f64>,
    ) -> Result<Self> {
        let m = n_spin_orbitals;
        if one_body.len() != m * m {
            return Err(Error::Shape {
                expected: m * m,
                found: one_body.len(),
            });
        }
        if two_body.len() != m.pow(4) {
            return Err(Error::Shape {
                expected: m.pow(4),
                found: two_body.len(),
            });
        }
        Ok(SpinOrbitalIntegrals {
            ordering,
            n_spin_orbitals,
            core_energy,
            one_body,
            two_body,
        })
    }

    pub fn one_body(&self, p: usize, q: usize) -> f64 {
        self.one_body[p * self.n_spin_orbitals + q]
    }

    /// Physicists'-order element `g[p][q][r][s] = (ps|qr)`, zero unless spin is conserved.
    pub fn two_body(&self, p: usize, q: usize, r: usize, s: usize) -> f64 {
        let m = self.n_spin_orbitals;
        self.two_body[((p * m + q) * m + r) * m + s]
    }
}

/// Expand spatial-orbital integrals to spin orbitals.
pub fn to_spin_orbitals(mi: &MolecularIntegrals, ordering: SpinOrdering) -> SpinOrbitalIntegrals {
    let n = mi.n_orbitals();
    let m = 2 * n;
    let split = |p: usize| ordering.split(p, n);

    let mut one_body = vec![0.0; m * m];
    for p in 0..m {
        let (op, sp) = split(p);
        for q in 0..m {
            let (oq, sq) = split(q);
            if sp == sq {
                one_body[p * m + q] = mi.one_body(op, oq);
            }
        }
    }

    let mut two_body = vec![0.0; m.pow(4)];
    for p in 0..m {
        let (op, sp) = split(p);
        for q in 0..m {
            let (oq, sq) = split(q);
            for r in 0..m {
                let (or, sr) = split(r);
                if sq != sr {
                    continue;
                }
                for s in 0..m {
                    let (os, ss) = split(s);
                    if sp != ss {
                        continue;
                    }
                    two_body[((p * m + q) * m + r) * m + s] = mi.two_body(op, os, oq, or);
                }
            }
        }
    }

    SpinOrbitalIntegrals {
        ordering,
        n_spin_orbitals: m,
        core_energy: mi.core_energy(),
        one_body,
        two_body,
    }
}
