//! Regenerate `fixtures/pauli/*.pauli` from the bundled FCIDUMP files.
//!
//! ```text
//! cargo run --release --example convert_fixtures
//! ```

use std::path::Path;

use varqa::hamiltonian::SpinOrdering;
use varqa::scan::{convert, Format};

fn main() -> varqa::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out_dir = root.join("pauli");
    std::fs::create_dir_all(&out_dir)?;
    let mut inputs: Vec<_> = std::fs::read_dir(root.join("fcidump"))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "fcidump"))
        .collect();
    inputs.sort();
    for input in &inputs {
        let stem = input.file_stem().unwrap().to_string_lossy();
        let output = out_dir.join(format!("{stem}.pauli"));
        convert(input, Format::Fcidump, &output, Format::PauliText, SpinOrdering::Blocked)?;
    }
    println!("converted {} files into {}", inputs.len(), out_dir.display());
    Ok(())
}
