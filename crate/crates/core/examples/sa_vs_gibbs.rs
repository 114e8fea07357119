//! Simulated annealing against the exact Gibbs distribution at its final temperature.
//!
//! ```text
//! cargo run --release --example sa_vs_gibbs
//! ```

use varqa::bits::format_bits;
use varqa::sampler::{gibbs_distribution, simulated_anneal, AnnealSchedule, Interpolation, IsingAnsatz};

fn main() -> varqa::Result<()> {
    let theta = IsingAnsatz::from_parameters(3, vec![0.5, -1.0, 0.25, 1.0, -0.5, 0.75, 0.0])?;
    for sweeps in [5, 20, 100, 400] {
        let schedule = AnnealSchedule {
            sweeps,
            beta_start: 0.1,
            beta_end: 1.0,
            interpolation: Interpolation::Geometric,
        };
        let sa = simulated_anneal(&theta, 50_000, &schedule, 1)?.probabilities();
        let exact = gibbs_distribution(&theta, schedule.beta_end)?;
        println!("{sweeps:>4} sweeps: total variation {:.4}", sa.total_variation(&exact));
    }
    let exact = gibbs_distribution(&theta, 1.0)?;
    for &(m, p) in exact.entries() {
        println!("  p({}) = {p:.4}", format_bits(m, 3));
    }
    Ok(())
}
