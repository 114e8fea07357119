use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::{hamiltonian_from_fcidump, PauliHamiltonian, SpinOrdering};

/// Hamiltonian file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Fcidump,
    PauliText,
}

impl Format {
    pub fn name(&self) -> &'static str {
        match self {
            Format::Fcidump => "fcidump",
            Format::PauliText => "pauli_text",
        }
    }

    /// `.fcidump` / `FCIDUMP` files are FCIDUMP, anything else `pauli_text`.
    pub fn from_path(path: &Path) -> Format {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        let lower = name.to_ascii_lowercase();
        if lower.ends_with(".fcidump") || lower.starts_with("fcidump") {
            Format::Fcidump
        } else {
            Format::PauliText
        }
    }
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "fcidump" => Ok(Format::Fcidump),
            "pauli_text" | "pauli" => Ok(Format::PauliText),
            _ => Err(Error::Config(format!("unknown format '{s}' (expected fcidump or pauli_text)"))),
        }
    }
}

/// Parse a Hamiltonian from text in either format.
pub fn read_hamiltonian(text: &str, format: Format, ordering: SpinOrdering) -> Result<PauliHamiltonian> {
    match format {
        Format::Fcidump => hamiltonian_from_fcidump(text, ordering),
        Format::PauliText => PauliHamiltonian::from_text(text),
    }
}

/// Load a Hamiltonian file; errors carry the path.
pub fn load_hamiltonian(path: &Path, format: Format, ordering: SpinOrdering) -> Result<PauliHamiltonian> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::from(e).in_file(path))?;
    read_hamiltonian(&text, format, ordering).map_err(|e| e.in_file(path))
}

/// Convert Hamiltonian text. Only `pauli_text` output is supported.
pub fn convert_text(text: &str, from: Format, to: Format, ordering: SpinOrdering) -> Result<String> {
    if to != Format::PauliText {
        return Err(Error::UnsupportedConversion {
            from: from.name().into(),
            to: to.name().into(),
        });
    }
    Ok(read_hamiltonian(text, from, ordering)?.to_text())
}

pub fn convert(input: &Path, from: Format, output: &Path, to: Format, ordering: SpinOrdering) -> Result<()> {
    let text = std::fs::read_to_string(input).map_err(|e| Error::from(e).in_file(input))?;
    let out = convert_text(&text, from, to, ordering).map_err(|e| match e {
        Error::UnsupportedConversion { .. } => e,
        other => other.in_file(input),
    })?;
    std::fs::write(output, out).map_err(|e| Error::from(e).in_file(output))
}
