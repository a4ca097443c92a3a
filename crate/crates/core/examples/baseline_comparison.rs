//! Classic eigenvector AHP next to the tropical orders for both bundled
//! problems.
use tropahp_core::ahp::{baseline_scores, solve, SolveOptions};
use tropahp_core::datasets;

fn main() -> tropahp_core::Result<()> {
    for (name, problem) in [("vacation", datasets::vacation()), ("school", datasets::school())] {
        let labels = problem.alternative_labels();
        let report = solve(
            &problem,
            &SolveOptions {
                baseline: true,
                ..Default::default()
            },
        )?;
        println!("{name}");
        println!(
            "  eigenvector scores {:.4?}",
            baseline_scores(&problem)?.as_slice()
        );
        println!(
            "  eigenvector order  {}",
            report.baseline.as_ref().unwrap().render(labels)
        );
        if let Some(o) = &report.most_order {
            println!("  most differentiating  {}", o.render(labels));
        }
        if let Some(o) = &report.least_order {
            println!("  least differentiating {}", o.render(labels));
        }
    }
    Ok(())
}
