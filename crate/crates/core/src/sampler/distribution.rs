use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bits;
use crate::error::{Error, Result};

/// Number of shots requested from a sampler.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleCount {
    Finite(u64),
    /// Exact probabilities (the `S -> infinity` limit); only the exact Gibbs backend supports it.
    Infinite,
}

/// Empirical bit-string counts from `total` shots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SampleDistribution {
    n_qubits: usize,
    total: u64,
    counts: BTreeMap<u64, u64>,
}

impl SampleDistribution {
    /// Zero counts are dropped; `total` is the sum of the remaining counts.
    pub fn from_counts(n_qubits: usize, counts: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let valid = bits::full_mask(n_qubits);
        let mut map = BTreeMap::new();
        for (state, c) in counts {
            if state & !valid != 0 {
                return Err(Error::Shape {
                    expected: n_qubits,
                    found: 64 - state.leading_zeros() as usize,
                });
            }
            if c > 0 {
                *map.entry(state).or_insert(0) += c;
            }
        }
        let total = map.values().sum();
        Ok(SampleDistribution {
            n_qubits,
            total,
            counts: map,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, state: u64) -> u64 {
        self.counts.get(&state).copied().unwrap_or(0)
    }

    pub fn support_size(&self) -> usize {
        self.counts.len()
    }

    pub fn probabilities(&self) -> ProbabilityTable {
        let s = self.total as f64;
        ProbabilityTable {
            n_qubits: self.n_qubits,
            entries: self.counts.iter().map(|(&m, &c)| (m, c as f64 / s)).collect(),
        }
    }

    /// One `bitstring count` line per outcome.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (&m, &c) in &self.counts {
            let _ = writeln!(out, "{} {c}", bits::format_bits(m, self.n_qubits));
        }
        out
    }
}

/// Outcome probabilities over a sorted support; zero entries are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityTable {
    n_qubits: usize,
    entries: Vec<(u64, f64)>,
}

impl ProbabilityTable {
    /// Entries with non-positive probability are dropped and the rest sorted by state.
    pub fn new(n_qubits: usize, entries: impl IntoIterator<Item = (u64, f64)>) -> Result<Self> {
        let mut map: BTreeMap<u64, f64> = BTreeMap::new();
        let valid = bits::full_mask(n_qubits);
        for (m, p) in entries {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidState(format!("invalid probability {p}")));
            }
            if m & !valid != 0 {
                return Err(Error::Shape {
                    expected: n_qubits,
                    found: 64 - m.leading_zeros() as usize,
                });
            }
            if p > 0.0 {
                *map.entry(m).or_insert(0.0) += p;
            }
        }
        Ok(ProbabilityTable {
            n_qubits,
            entries: map.into_iter().collect(),
        })
    }

    pub(crate) fn from_dense(n_qubits: usize, probs: &[f64]) -> Self {
        ProbabilityTable {
            n_qubits,
            entries: probs
                .iter()
                .enumerate()
                .filter(|(_, p)| **p > 0.0)
                .map(|(m, &p)| (m as u64, p))
                .collect(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn entries(&self) -> &[(u64, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, state: u64) -> f64 {
        self.entries
            .binary_search_by_key(&state, |e| e.0)
            .map_or(0.0, |i| self.entries[i].1)
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Drop outcomes with probability below `floor`.
    pub fn truncated(&self, floor: f64) -> ProbabilityTable {
        ProbabilityTable {
            n_qubits: self.n_qubits,
            entries: self.entries.iter().copied().filter(|e| e.1 >= floor).collect(),
        }
    }

    /// Dense probability vector of length `2^M`.
    pub fn to_dense(&self) -> Vec<f64> {
        let mut v = vec![0.0; 1usize << self.n_qubits];
        for &(m, p) in &self.entries {
            v[m as usize] = p;
        }
        v
    }

    /// Total-variation distance `1/2 sum |p - q|`.
    pub fn total_variation(&self, other: &ProbabilityTable) -> f64 {
        let mut all: BTreeMap<u64, (f64, f64)> = BTreeMap::new();
        for &(m, p) in &self.entries {
            all.entry(m).or_default().0 = p;
        }
        for &(m, q) in &other.entries {
            all.entry(m).or_default().1 = q;
        }
        0.5 * all.values().map(|(p, q)| (p - q).abs()).sum::<f64>()
    }
}

impl From<&SampleDistribution> for ProbabilityTable {
    fn from(d: &SampleDistribution) -> Self {
        d.probabilities()
    }
}

/// Round `probs * total` to integers summing to `total` (largest remainder,
/// ties to the smaller state).
pub fn largest_remainder_counts(table: &ProbabilityTable, total: u64) -> Vec<(u64, u64)> {
    let s = total as f64;
    let norm = table.total();
    let mut rows: Vec<(u64, u64, f64)> = table
        .entries()
        .iter()
        .map(|&(m, p)| {
            let exact = p / norm * s;
            let floor = exact.floor();
            (m, floor as u64, exact - floor)
        })
        .collect();
    let assigned: u64 = rows.iter().map(|r| r.1).sum();
    let mut leftover = total.saturating_sub(assigned) as usize;
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&a, &b| rows[b].2.total_cmp(&rows[a].2).then(rows[a].0.cmp(&rows[b].0)));
    for &i in &order {
        if leftover == 0 {
            break;
        }
        rows[i].1 += 1;
        leftover -= 1;
    }
    rows.into_iter().map(|(m, c, _)| (m, c)).collect()
}
