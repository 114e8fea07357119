//! Exact diagonalization.
//!
//! The basis is split into blocks of states connected by nonzero matrix
//! elements (for electronic Hamiltonians these are the particle-number and
//! spin sectors), and each block is diagonalized densely. Eigenvectors are
//! therefore pure within a block even when eigenvalues are degenerate across
//! blocks.

use nalgebra::{DMatrix, SymmetricEigen};

use super::{Observable, SpinOrdering};
use crate::error::{Error, Result};

/// Largest register diagonalized over the full Fock space.
pub const DENSE_QUBIT_LIMIT: usize = 14;
/// Largest register diagonalized within a fixed particle-number sector.
pub const SECTOR_QUBIT_LIMIT: usize = 20;

const COUPLING_EPS: f64 = 1e-14;
const SECTOR_VARIANCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sector {
    pub particles: usize,
    /// `2 * Sz`.
    pub ms2: i32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub n_qubits: usize,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Dense unit vectors of length `2^M`, one per eigenvalue.
    pub eigenvectors: Vec<Vec<f64>>,
    /// `None` when the eigenvector is not a particle-number / spin eigenstate.
    pub sector_labels: Vec<Option<Sector>>,
}

impl Spectrum {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn ground_state(&self) -> &[f64] {
        &self.eigenvectors[0]
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct EdOptions {
    /// Keep only the lowest `n` eigenpairs.
    pub lowest: Option<usize>,
    /// Restrict to basis states with this many set bits.
    pub particles: Option<usize>,
}

/// Full spectrum of `h`.
pub fn exact_diagonalize<H: Observable + ?Sized>(h: &H) -> Result<Spectrum> {
    exact_diagonalize_with(h, &EdOptions::default())
}

pub fn exact_diagonalize_with<H: Observable + ?Sized>(h: &H, opts: &EdOptions) -> Result<Spectrum> {
    let m = h.n_qubits();
    if m > SECTOR_QUBIT_LIMIT {
        return Err(Error::DimensionTooLarge {
            qubits: m,
            limit: SECTOR_QUBIT_LIMIT,
        });
    }
    if m > DENSE_QUBIT_LIMIT && opts.particles.is_none() {
        return Err(Error::SectorRequired {
            limit: DENSE_QUBIT_LIMIT,
        });
    }
    let dim = 1usize << m;
    let in_domain = |s: u64| opts.particles.is_none_or(|n| s.count_ones() as usize == n);
    let domain: Vec<u64> = (0..dim as u64).filter(|&s| in_domain(s)).collect();

    let blocks = connected_blocks(h, &domain, dim)?;

    let mut pairs: Vec<(f64, Vec<f64>)> = Vec::with_capacity(domain.len());
    for block in &blocks {
        let n = block.len();
        let mut mat = DMatrix::<f64>::zeros(n, n);
        for (a, &bra) in block.iter().enumerate() {
            for (b, &ket) in block.iter().enumerate().skip(a) {
                let v = h.matrix_element(bra, ket)?;
                mat[(a, b)] = v;
                mat[(b, a)] = v;
            }
        }
        let eig = SymmetricEigen::new(mat);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        for i in order {
            let col = eig.eigenvectors.column(i);
            let mut dense = vec![0.0; dim];
            for (a, &s) in block.iter().enumerate() {
                dense[s as usize] = col[a];
            }
            canonicalize_sign(&mut dense);
            pairs.push((eig.eigenvalues[i], dense));
        }
    }
    // stable: ties keep block order
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    if let Some(k) = opts.lowest {
        pairs.truncate(k);
    }

    let ordering = h.spin_ordering().unwrap_or_default();
    let sector_labels = pairs
        .iter()
        .map(|(_, v)| sector_of(v, m, ordering))
        .collect();
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    Ok(Spectrum {
        n_qubits: m,
        eigenvalues,
        eigenvectors,
        sector_labels,
    })
}

fn connected_blocks<H: Observable + ?Sized>(h: &H, domain: &[u64], dim: usize) -> Result<Vec<Vec<u64>>> {
    let mut parent: Vec<u32> = (0..dim as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let up = parent[parent[x as usize] as usize];
            parent[x as usize] = up;
            x = up;
        }
        x
    }
    let union = |parent: &mut Vec<u32>, a: u64, b: u64| {
        let ra = find(parent, a as u32);
        let rb = find(parent, b as u32);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi as usize] = lo;
        }
    };
    let mut member = vec![false; dim];
    for &s in domain {
        member[s as usize] = true;
    }

    let mut neighbours = Vec::new();
    for &ket in domain {
        neighbours.clear();
        h.coupled_states(ket, &mut neighbours);
        for &bra in &neighbours {
            if bra <= ket || (bra as usize) >= dim || !member[bra as usize] {
                continue;
            }
            if h.matrix_element(bra, ket)?.abs() > COUPLING_EPS {
                union(&mut parent, bra, ket);
            }
        }
    }
    for set in h.linked_sets() {
        let inside: Vec<u64> = set.into_iter().filter(|&s| member[s as usize]).collect();
        for w in inside.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
    }

    let mut by_root: std::collections::BTreeMap<u32, Vec<u64>> = Default::default();
    for &s in domain {
        let r = find(&mut parent, s as u32);
        by_root.entry(r).or_default().push(s);
    }
    Ok(by_root.into_values().collect())
}

/// Make the largest-magnitude component positive.
fn canonicalize_sign(v: &mut [f64]) {
    let mut best = 0usize;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() + 1e-12 {
            best = i;
        }
    }
    if v[best] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

fn sector_of(v: &[f64], m: usize, ordering: SpinOrdering) -> Option<Sector> {
    if !m.is_multiple_of(2) {
        let (mean, var) = moments(v, |s| s.count_ones() as f64);
        return (var < SECTOR_VARIANCE_TOL).then(|| Sector {
            particles: mean.round() as usize,
            ms2: 0,
        });
    }
    let n_spatial = m / 2;
    let mut beta_mask = 0u64;
    for p in 0..m {
        if ordering.split(p, n_spatial).1 {
            beta_mask |= crate::bits::qubit_mask(p, m);
        }
    }
    let (n_mean, n_var) = moments(v, |s| s.count_ones() as f64);
    let (sz_mean, sz_var) = moments(v, |s| {
        let beta = (s & beta_mask).count_ones() as f64;
        let alpha = (s & !beta_mask).count_ones() as f64;
        alpha - beta
    });
    (n_var < SECTOR_VARIANCE_TOL && sz_var < SECTOR_VARIANCE_TOL).then(|| Sector {
        particles: n_mean.round() as usize,
        ms2: sz_mean.round() as i32,
    })
}

fn moments(v: &[f64], f: impl Fn(u64) -> f64) -> (f64, f64) {
    let mut mean = 0.0;
    let mut second = 0.0;
    for (s, c) in v.iter().enumerate() {
        let w = c * c;
        if w == 0.0 {
            continue;
        }
        let x = f(s as u64);
        mean += w * x;
        second += w * x * x;
    }
    (mean, (second - mean * mean).max(0.0))
}
