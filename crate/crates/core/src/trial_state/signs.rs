use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::energy::SupportCouplings;
use super::{build_trial_state, SignPattern, TrialState};
use crate::error::{Error, Result};
use crate::hamiltonian::Observable;
use crate::sampler::ProbabilityTable;

/// Largest component searched over all sign patterns.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 21;

/// Off-diagonal elements at or below this magnitude do not join components.
const EDGE_THRESHOLD: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignOptions {
    pub exhaustive_limit: usize,
    /// Random restarts of the greedy search, in addition to the all-plus start.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SignOptions {
    fn default() -> Self {
        SignOptions {
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            restarts: 8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignSearch {
    pub signs: SignPattern,
    pub state: TrialState,
    pub energy: f64,
    /// False when some component was too large to enumerate.
    pub exhaustive: bool,
}

pub fn optimize_signs<H: Observable + ?Sized>(probs: &ProbabilityTable, h: &H) -> Result<SignSearch> {
    optimize_signs_with(probs, h, &SignOptions::default())
}

/// Lowest-energy sign pattern for the amplitudes `sqrt(p(m))`.
///
/// The support splits into components connected by nonzero matrix elements;
/// the energy is a sum over components, and flipping a whole component leaves
/// it unchanged. Each component's most probable state (smallest on ties) is
/// pinned to `+` and the rest are searched exhaustively up to
/// `exhaustive_limit` states, greedily beyond. Ties go to the
/// lexicographically smallest pattern in state order, `+` before `-`.
pub fn optimize_signs_with<H: Observable + ?Sized>(
    probs: &ProbabilityTable,
    h: &H,
    opts: &SignOptions,
) -> Result<SignSearch> {
    if probs.is_empty() {
        return Err(Error::EmptyDistribution);
    }
    if probs.n_qubits() != h.n_qubits() {
        return Err(Error::Shape {
            expected: h.n_qubits(),
            found: probs.n_qubits(),
        });
    }
    let states: Vec<u64> = probs.entries().iter().map(|e| e.0).collect();
    let total = probs.total();
    let amps: Vec<f64> = probs.entries().iter().map(|e| (e.1 / total).sqrt()).collect();
    let couplings = SupportCouplings::new(&states, h)?;

    let k = states.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for &(i, j, v) in &couplings.off_diagonal {
        if v.abs() > EDGE_THRESHOLD {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        let r = find(&mut parent, i);
        members[r].push(i);
    }
    let mut local = vec![0usize; k];
    for comp in members.iter().filter(|c| !c.is_empty()) {
        for (r, &i) in comp.iter().enumerate() {
            local[i] = r;
        }
    }
    let mut weights: Vec<Vec<(usize, usize, f64)>> = vec![Vec::new(); k];
    for &(i, j, v) in &couplings.off_diagonal {
        if v.abs() > EDGE_THRESHOLD {
            let root = find(&mut parent, i);
            weights[root].push((local[i], local[j], amps[i] * amps[j] * v));
        }
    }

    let mut negative = vec![false; k];
    let mut exhaustive = true;
    for (root, comp) in members.iter().enumerate().filter(|(_, c)| c.len() > 1) {
        let anchor = comp
            .iter()
            .enumerate()
            .fold(0, |best, (r, &i)| if amps[i] > amps[comp[best]] { r } else { best });
        let problem = Component::new(comp.len(), anchor, &weights[root]);
        let flags = if comp.len() <= opts.exhaustive_limit {
            problem.exhaustive()
        } else {
            exhaustive = false;
            problem.greedy(opts.restarts, opts.seed ^ states[comp[0]])
        };
        for (r, &i) in comp.iter().enumerate() {
            negative[i] = flags[r];
        }
    }

    let signs = SignPattern::from_flags(states.iter().copied().zip(negative));
    let state = build_trial_state(probs, &signs)?;
    let amplitudes: Vec<f64> = state.support().iter().map(|e| e.1).collect();
    let energy = couplings.energy(&amplitudes);
    Ok(SignSearch {
        signs,
        state,
        energy,
        exhaustive,
    })
}

/// Off-diagonal energy `2 sum_{i<j} e_i e_j w_ij` of one component.
struct Component {
    size: usize,
    anchor: usize,
    adjacency: Vec<Vec<(usize, f64)>>,
    tolerance: f64,
}

impl Component {
    fn new(size: usize, anchor: usize, edges: &[(usize, usize, f64)]) -> Self {
        let mut adjacency = vec![Vec::new(); size];
        let mut scale = 0.0;
        for &(i, j, w) in edges {
            adjacency[i].push((j, w));
            adjacency[j].push((i, w));
            scale += w.abs();
        }
        Component {
            size,
            anchor,
            adjacency,
            tolerance: 1e-12 * (1.0 + scale),
        }
    }

    fn fields(&self, eps: &[f64]) -> Vec<f64> {
        self.adjacency
            .iter()
            .map(|row| row.iter().map(|&(l, w)| eps[l] * w).sum())
            .collect()
    }

    fn flip(&self, j: usize, eps: &mut [f64], fields: &mut [f64]) -> f64 {
        let delta = -4.0 * eps[j] * fields[j];
        for &(l, w) in &self.adjacency[j] {
            fields[l] -= 2.0 * eps[j] * w;
        }
        eps[j] = -eps[j];
        delta
    }

    fn energy(eps: &[f64], fields: &[f64]) -> f64 {
        eps.iter().zip(fields).map(|(e, f)| e * f).sum()
    }

    /// True if `(e, flags)` beats `(best_e, best)`.
    fn better(&self, e: f64, flags: &[bool], best_e: f64, best: &[bool]) -> bool {
        if e < best_e - self.tolerance {
            return true;
        }
        e <= best_e + self.tolerance && flags < best
    }

    /// Gray-code walk over the `2^(size-1)` patterns with the anchor fixed.
    fn exhaustive(&self) -> Vec<bool> {
        let free: Vec<usize> = (0..self.size).filter(|&r| r != self.anchor).collect();
        let mut eps = vec![1.0; self.size];
        let mut fields = self.fields(&eps);
        let mut e = Self::energy(&eps, &fields);
        let mut best_e = e;
        let mut best_mask = 0u64;
        // Lexicographic order of flag vectors is numeric order of this mask.
        let bit = |r: usize| 1u64 << (self.size - 1 - r);
        let mut mask = 0u64;
        for t in 1u64..(1u64 << free.len()) {
            let j = free[t.trailing_zeros() as usize];
            e += self.flip(j, &mut eps, &mut fields);
            mask ^= bit(j);
            if e < best_e - self.tolerance || (e <= best_e + self.tolerance && mask < best_mask) {
                best_e = e;
                best_mask = mask;
            }
        }
        (0..self.size).map(|r| best_mask & bit(r) != 0).collect()
    }

    /// Steepest single-flip descent from all-plus and from random starts.
    fn greedy(&self, restarts: usize, seed: u64) -> Vec<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best: Option<(f64, Vec<bool>)> = None;
        for attempt in 0..=restarts {
            let mut eps: Vec<f64> = (0..self.size)
                .map(|r| {
                    if attempt == 0 || r == self.anchor || rng.random::<bool>() {
                        1.0
                    } else {
                        -1.0
                    }
                })
                .collect();
            let mut fields = self.fields(&eps);
            loop {
                let step = (0..self.size)
                    .filter(|&j| j != self.anchor)
                    .map(|j| (j, -4.0 * eps[j] * fields[j]))
                    .fold(None, |acc: Option<(usize, f64)>, (j, d)| match acc {
                        Some((_, bd)) if bd <= d => acc,
                        _ => Some((j, d)),
                    });
                match step {
                    Some((j, d)) if d < -self.tolerance => {
                        self.flip(j, &mut eps, &mut fields);
                    }
                    _ => break,
                }
            }
            // Recompute to keep drift out of the comparison.
            let fields = self.fields(&eps);
            let e = Self::energy(&eps, &fields);
            let flags: Vec<bool> = eps.iter().map(|&s| s < 0.0).collect();
            match &best {
                Some((be, bf)) if !self.better(e, &flags, *be, bf) => {}
                _ => best = Some((e, flags)),
            }
        }
        best.map(|b| b.1).unwrap_or_else(|| vec![false; self.size])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::PauliHamiltonian;
    use crate::trial_state::expected_energy;

    fn table(m: usize, e: &[(u64, f64)]) -> ProbabilityTable {
        ProbabilityTable::new(m, e.iter().copied()).unwrap()
    }

    #[test]
    fn single_state_has_no_freedom() {
        let h = PauliHamiltonian::from_text("# qubits: 2\n0.5 ZI\n0.25 XX\n").unwrap();
        let r = optimize_signs(&table(2, &[(0b10, 1.0)]), &h).unwrap();
        assert_eq!(r.signs.to_string(), "+");
        assert!((r.energy + 0.5).abs() < 1e-15);
    }

    #[test]
    fn x_prefers_antisymmetric_state() {
        let h = PauliHamiltonian::from_text("# qubits: 1\n1 X\n").unwrap();
        let r = optimize_signs(&table(1, &[(0, 0.5), (1, 0.5)]), &h).unwrap();
        assert_eq!(r.signs.to_string(), "+-");
        assert!((r.energy + 1.0).abs() < 1e-15);
    }

    #[test]
    fn anchor_is_the_most_probable_state() {
        let h = PauliHamiltonian::from_text("# qubits: 1\n1 X\n").unwrap();
        let r = optimize_signs(&table(1, &[(0, 0.2), (1, 0.8)]), &h).unwrap();
        assert_eq!(r.signs.to_string(), "-+");
        assert!((r.energy + 0.8).abs() < 1e-12);
    }

    #[test]
    fn decoupled_states_stay_positive() {
        let h = PauliHamiltonian::from_text("# qubits: 2\n1 ZI\n0.3 IZ\n").unwrap();
        let r = optimize_signs(&table(2, &[(0, 0.25), (1, 0.25), (2, 0.25), (3, 0.25)]), &h).unwrap();
        assert_eq!(r.signs.to_string(), "++++");
    }

    #[test]
    fn greedy_matches_exhaustive_on_a_chain() {
        // Transverse-field chain: off-diagonal X terms couple every state.
        let h = PauliHamiltonian::from_text(
            "# qubits: 3\n0.7 XII\n-0.4 IXI\n0.9 IIX\n0.3 ZZI\n-0.2 IZZ\n0.1 ZIZ\n",
        )
        .unwrap();
        let p = table(3, &(0..8).map(|m| (m, 1.0 + m as f64)).collect::<Vec<_>>());
        let ex = optimize_signs(&p, &h).unwrap();
        let gr = optimize_signs_with(
            &p,
            &h,
            &SignOptions {
                exhaustive_limit: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(ex.exhaustive && !gr.exhaustive);
        assert!(ex.energy <= gr.energy + 1e-12);
        assert!((expected_energy(&ex.state, &h).unwrap() - ex.energy).abs() < 1e-12);
    }
}
