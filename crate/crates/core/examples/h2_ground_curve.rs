//! Ground-state dissociation curve of H2 from an exhaustive D2 search.
//!
//! ```text
//! cargo run --release --example h2_ground_curve [beta]
//! ```

use std::path::Path;

use varqa::optimizer::DigitizerKind;
use varqa::scan::{run_scan, BackendName, DigitizerSettings, ModeName, SamplerSettings, ScanConfig, Source};

fn main() -> varqa::Result<()> {
    let beta: f64 = std::env::args().nth(1).map_or(Ok(1.5), |s| s.parse()).expect("beta must be a number");
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/pauli");
    let sources = (0..72)
        .step_by(8)
        .map(|i| {
            let d = format!("{:.3}", 0.2 + 0.025 * i as f64);
            Source {
                path: fixtures.join(format!("h2_{d}.pauli")),
                label: d,
                format: None,
            }
        })
        .collect();
    let config = ScanConfig {
        sources,
        digitizer: DigitizerSettings {
            kind: DigitizerKind::D2,
            mode: ModeName::Exhaustive,
            ..Default::default()
        },
        sampler: SamplerSettings {
            backend: BackendName::Gibbs,
            beta,
            ..Default::default()
        },
        ..Default::default()
    };
    let out = run_scan(&config)?;
    println!("{:>7} {:>14} {:>14} {:>10} {:>4}", "d", "VarQA", "exact", "kcal/mol", "k");
    for r in &out.rows {
        println!(
            "{:>7} {:>14.8} {:>14.8} {:>10.4} {:>4}",
            r.label, r.varqa_energy, r.ed_energy, r.error_kcal_mol, r.support
        );
    }
    Ok(())
}
