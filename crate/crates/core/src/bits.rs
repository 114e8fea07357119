//! Computational-basis bit strings.
//!
//! A basis state of `M` qubits is stored as a `u64` read big-endian: the
//! leftmost character of the printed string is qubit 1 and occupies bit
//! `M - 1`. The integer value of a state is therefore its index in a dense
//! state vector, and integer order equals lexicographic string order.

use crate::error::{Error, Result};

/// Largest register width representable by a `u64` basis state.
pub const MAX_QUBITS: usize = 64;

/// Bit mask of qubit `q` (0-based, counted from the left) in an `m`-qubit register.
#[inline]
pub fn qubit_mask(q: usize, m: usize) -> u64 {
    debug_assert!(q < m);
    1u64 << (m - 1 - q)
}

/// Whether qubit `q` is set in `state`.
#[inline]
pub fn qubit(state: u64, q: usize, m: usize) -> bool {
    state & qubit_mask(q, m) != 0
}

pub fn format_bits(state: u64, m: usize) -> String {
    (0..m)
        .map(|q| if qubit(state, q, m) { '1' } else { '0' })
        .collect()
}

pub fn parse_bits(text: &str) -> Result<(u64, usize)> {
    let m = text.len();
    if m == 0 || m > MAX_QUBITS {
        return Err(Error::parse(0, format!("bit string of length {m}")));
    }
    let mut state = 0u64;
    for c in text.chars() {
        state <<= 1;
        match c {
            '0' => {}
            '1' => state |= 1,
            other => return Err(Error::parse(0, format!("invalid bit '{other}'"))),
        }
    }
    Ok((state, m))
}

#[inline]
pub(crate) fn full_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_endian_layout() {
        let (s, m) = parse_bits("1010").unwrap();
        assert_eq!((s, m), (0b1010, 4));
        assert!(qubit(s, 0, 4));
        assert!(!qubit(s, 1, 4));
        assert_eq!(format_bits(s, 4), "1010");
        assert_eq!(format_bits(1, 3), "001");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_bits("10a").is_err());
        assert!(parse_bits("").is_err());
    }
}
