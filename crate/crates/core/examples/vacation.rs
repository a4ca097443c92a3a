//! Full tropical AHP run on the vacation problem (four sites, five criteria).
use tropahp_core::ahp::{solve, SolveOptions};
use tropahp_core::datasets;

fn main() -> tropahp_core::Result<()> {
    let problem = datasets::vacation();
    let labels = problem.alternative_labels();
    let report = solve(
        &problem,
        &SolveOptions {
            baseline: true,
            ..Default::default()
        },
    )?;

    println!("criteria λ = {:.4}", report.weight_cone.lambda_c);
    println!(
        "weight cone: {} generators, search {}",
        report.weight_cone.essential_dim,
        report.weight_search.as_str()
    );
    if let Some(most) = &report.most {
        println!("weights {:.4?}", most.weights.as_slice());
        println!("B =\n{}", most.combined);
        println!("Δ = {:.4}", most.delta_max);
        for r in &most.most_diff {
            println!("  most  {:.4?}  {}", r.vector.as_slice(), r.render(labels));
        }
    }
    if let Some(least) = &report.least {
        println!("δ = {:.4}", least.delta_min);
        for r in &least.least_diff {
            println!("  least {:.4?}  {}", r.vector.as_slice(), r.render(labels));
        }
    }
    if let Some(order) = &report.combined_order {
        println!("combined: {}", order.render(labels));
    }
    if let Some(b) = &report.baseline {
        println!("eigenvector baseline: {}", b.render(labels));
    }
    Ok(())
}
