use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use num_complex::Complex64;

use super::integrals::SpinOrdering;
use super::Observable;
use crate::bits::{self, MAX_QUBITS};
use crate::error::{Error, Result};

/// Coefficients with magnitude below this are dropped.
pub const PRUNE_THRESHOLD: f64 = 1e-12;
/// Largest tolerated imaginary part of a merged coefficient or matrix element.
pub const IMAGINARY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Tensor product of single-qubit Paulis in symplectic form.
///
/// Qubit `q` lives at bit `M - 1 - q` of both masks (see [`crate::bits`]);
/// `X = (1, 0)`, `Z = (0, 1)`, `Y = (1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliWord {
    pub x: u64,
    pub z: u64,
}

impl PauliWord {
    pub const IDENTITY: PauliWord = PauliWord { x: 0, z: 0 };

    pub fn single(pauli: Pauli, q: usize, m: usize) -> Self {
        let bit = bits::qubit_mask(q, m);
        match pauli {
            Pauli::I => Self::IDENTITY,
            Pauli::X => PauliWord { x: bit, z: 0 },
            Pauli::Y => PauliWord { x: bit, z: bit },
            Pauli::Z => PauliWord { x: 0, z: bit },
        }
    }

    pub fn get(&self, q: usize, m: usize) -> Pauli {
        let bit = bits::qubit_mask(q, m);
        match (self.x & bit != 0, self.z & bit != 0) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// `self * other = phase * result`, phase a power of `i`.
    pub fn mul(&self, other: &PauliWord) -> (Complex64, PauliWord) {
        // P(x, z) = i^{|x&z|} X^x Z^z and Z^a X^b = (-1)^{|a&b|} X^b Z^a.
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        let exponent = self.y_count() as i64 + other.y_count() as i64
            + 2 * (self.z & other.x).count_ones() as i64
            - (x & z).count_ones() as i64;
        (i_pow(exponent), PauliWord { x, z })
    }

    pub fn parse(text: &str) -> Result<(Self, usize)> {
        let m = text.chars().count();
        if m == 0 || m > MAX_QUBITS {
            return Err(Error::parse(0, format!("Pauli word of length {m}")));
        }
        let mut word = PauliWord::IDENTITY;
        for (q, c) in text.chars().enumerate() {
            let p = Pauli::from_char(c)
                .ok_or_else(|| Error::parse(0, format!("invalid Pauli '{c}' in '{text}'")))?;
            let single = PauliWord::single(p, q, m);
            word.x |= single.x;
            word.z |= single.z;
        }
        Ok((word, m))
    }

    pub fn render(&self, m: usize) -> String {
        (0..m).map(|q| self.get(q, m).as_char()).collect()
    }

    /// Lexicographic order of the printed words (`I < X < Y < Z`).
    pub fn cmp_lexicographic(&self, other: &PauliWord, m: usize) -> Ordering {
        let code = |w: &PauliWord, q: usize| w.get(q, m) as u8;
        (0..m)
            .map(|q| code(self, q).cmp(&code(other, q)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

fn i_pow(exponent: i64) -> Complex64 {
    match exponent.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliTerm {
    pub coefficient: f64,
    pub word: PauliWord,
}

/// Terms sharing one flip mask, stored as `(phase-folded coefficient, sign mask)`.
#[derive(Debug, Clone, PartialEq)]
struct FlipGroup {
    flip: u64,
    entries: Vec<(Complex64, u64)>,
}

/// A real weighted sum of Pauli words on `M` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliHamiltonian {
    n_qubits: usize,
    ordering: Option<SpinOrdering>,
    terms: Vec<PauliTerm>,
    groups: Vec<FlipGroup>,
    group_index: HashMap<u64, usize>,
}

impl PauliHamiltonian {
    /// Merge duplicate words, prune small coefficients and sort terms.
    pub fn from_terms<I>(n_qubits: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, PauliWord)>,
    {
        Self::from_complex_terms(
            n_qubits,
            terms
                .into_iter()
                .map(|(c, w)| (Complex64::new(c, 0.0), w)),
        )
    }

    pub(crate) fn from_complex_terms<I>(n_qubits: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Complex64, PauliWord)>,
    {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::DimensionTooLarge {
                qubits: n_qubits,
                limit: MAX_QUBITS,
            });
        }
        let valid = bits::full_mask(n_qubits);
        let mut merged: HashMap<PauliWord, Complex64> = HashMap::new();
        for (c, w) in terms {
            if (w.x | w.z) & !valid != 0 {
                return Err(Error::Shape {
                    expected: n_qubits,
                    found: 64 - (w.x | w.z).leading_zeros() as usize,
                });
            }
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::InvalidIntegrals("non-finite coefficient".into()));
            }
            *merged.entry(w).or_default() += c;
        }
        let mut out = Vec::with_capacity(merged.len());
        for (word, c) in merged {
            if c.im.abs() > IMAGINARY_TOLERANCE {
                return Err(Error::ImaginaryResidue { residue: c.im });
            }
            if c.re.abs() >= PRUNE_THRESHOLD {
                out.push(PauliTerm {
                    coefficient: c.re,
                    word,
                });
            }
        }
        out.sort_by(|a, b| a.word.cmp_lexicographic(&b.word, n_qubits));
        Ok(Self::assemble(n_qubits, out))
    }

    fn assemble(n_qubits: usize, terms: Vec<PauliTerm>) -> Self {
        let mut by_flip: BTreeMap<u64, Vec<(Complex64, u64)>> = BTreeMap::new();
        for t in &terms {
            let phase = i_pow(t.word.y_count() as i64);
            by_flip
                .entry(t.word.x)
                .or_default()
                .push((phase * t.coefficient, t.word.z));
        }
        let groups: Vec<FlipGroup> = by_flip
            .into_iter()
            .map(|(flip, entries)| FlipGroup { flip, entries })
            .collect();
        let group_index = groups.iter().enumerate().map(|(i, g)| (g.flip, i)).collect();
        PauliHamiltonian {
            n_qubits,
            ordering: None,
            terms,
            groups,
            group_index,
        }
    }

    pub fn with_ordering(mut self, ordering: SpinOrdering) -> Self {
        self.ordering = Some(ordering);
        self
    }

    /// Spin-orbital layout the Hamiltonian was built with, when known.
    pub fn ordering(&self) -> Option<SpinOrdering> {
        self.ordering
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `word`, zero when absent.
    pub fn coefficient(&self, word: &str) -> Result<f64> {
        let (w, m) = PauliWord::parse(word)?;
        if m != self.n_qubits {
            return Err(Error::Shape {
                expected: self.n_qubits,
                found: m,
            });
        }
        Ok(self
            .terms
            .iter()
            .find(|t| t.word == w)
            .map_or(0.0, |t| t.coefficient))
    }

    /// Distinct X/Y masks present in the Hamiltonian.
    pub fn flip_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.groups.iter().map(|g| g.flip)
    }

    /// `<bra|H|ket>` as a complex number.
    pub fn matrix_element_complex(&self, bra: u64, ket: u64) -> Complex64 {
        match self.group_index.get(&(bra ^ ket)) {
            None => Complex64::new(0.0, 0.0),
            Some(&g) => self.groups[g]
                .entries
                .iter()
                .map(|&(c, sign_mask)| {
                    if (ket & sign_mask).count_ones().is_multiple_of(2) {
                        c
                    } else {
                        -c
                    }
                })
                .sum(),
        }
    }

    /// Parse the `pauli_text` format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut n_qubits: Option<usize> = None;
        let mut ordering = None;
        let mut terms = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(v) = comment.strip_prefix("qubits:") {
                    let m = v.trim().parse::<usize>().map_err(|_| {
                        Error::parse(lineno, format!("invalid qubit count '{}'", v.trim()))
                    })?;
                    n_qubits = Some(m);
                } else if let Some(v) = comment.strip_prefix("ordering:") {
                    ordering = Some(
                        v.trim()
                            .parse::<SpinOrdering>()
                            .map_err(|e| Error::parse(lineno, e.to_string()))?,
                    );
                }
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (Some(coef), Some(word), None) = (tokens.next(), tokens.next(), tokens.next())
            else {
                return Err(Error::parse(lineno, format!("expected 'coefficient word', got '{line}'")));
            };
            let c: f64 = coef
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid coefficient '{coef}'")))?;
            let (w, m) = PauliWord::parse(word).map_err(|_| {
                Error::parse(lineno, format!("invalid Pauli word '{word}'"))
            })?;
            match n_qubits {
                None => {
                    return Err(Error::parse(lineno, "term before '# qubits: M' header"));
                }
                Some(expected) if expected != m => {
                    return Err(Error::parse(
                        lineno,
                        format!("word '{word}' has {m} qubits, header says {expected}"),
                    ));
                }
                _ => {}
            }
            terms.push((c, w));
        }
        let m = n_qubits.ok_or_else(|| Error::parse(1, "missing '# qubits: M' header"))?;
        let mut h = Self::from_terms(m, terms)?;
        h.ordering = ordering;
        Ok(h)
    }

    /// Render as `pauli_text`, terms sorted by word.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# qubits: {}", self.n_qubits);
        if let Some(o) = self.ordering {
            let _ = writeln!(out, "# ordering: {}", o.name());
        }
        for t in &self.terms {
            let _ = writeln!(out, "{} {}", t.coefficient, t.word.render(self.n_qubits));
        }
        out
    }
}

impl Observable for PauliHamiltonian {
    fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    fn matrix_element(&self, bra: u64, ket: u64) -> Result<f64> {
        let v = self.matrix_element_complex(bra, ket);
        if v.im.abs() >= IMAGINARY_TOLERANCE {
            return Err(Error::ImaginaryResidue { residue: v.im });
        }
        Ok(v.re)
    }

    fn coupled_states(&self, ket: u64, out: &mut Vec<u64>) {
        out.extend(self.groups.iter().filter(|g| g.flip != 0).map(|g| ket ^ g.flip));
    }

    fn spin_ordering(&self) -> Option<SpinOrdering> {
        self.ordering
    }
}

impl fmt::Display for PauliHamiltonian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
