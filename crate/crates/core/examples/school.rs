//! The school problem, whose weight cone has three essential generators: the
//! most and least differentiating branches pick different weights.
use std::time::Instant;

use tropahp_core::ahp::{solve, SolveOptions};
use tropahp_core::datasets;

fn main() -> tropahp_core::Result<()> {
    let problem = datasets::school();
    let labels = problem.alternative_labels();
    let start = Instant::now();
    let report = solve(&problem, &SolveOptions::default())?;
    println!(
        "solved in {:?} ({} weight search)",
        start.elapsed(),
        report.weight_search.as_str()
    );

    for (name, branch) in [("most", &report.most), ("least", &report.least)] {
        let Some(b) = branch else { continue };
        println!("{name} branch: weights {:.4?}", b.weights.as_slice());
        println!(
            "  μ = {:.4}  Δ = {:.4}  δ = {:.4}",
            b.mu, b.delta_max, b.delta_min
        );
    }
    for r in report.most_diff() {
        println!("most  {:.4?}  {}", r.vector.as_slice(), r.render(labels));
    }
    for r in report.least_diff() {
        println!("least {:.4?}  {}", r.vector.as_slice(), r.render(labels));
    }
    for (name, order) in [
        ("most", &report.most_order),
        ("least", &report.least_order),
        ("all", &report.combined_order),
    ] {
        if let Some(o) = order {
            println!("{name:>5}: {}", o.render(labels));
        }
    }
    Ok(())
}
