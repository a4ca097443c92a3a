//! Log-Chebyshev approximation of a single pairwise comparison matrix: the
//! approximation error, every optimal weight vector, and a consistency check.
use tropahp_core::ahp::{consistency_index, derive_weight_cone, rank};
use tropahp_core::{datasets, Tolerance};

fn main() -> tropahp_core::Result<()> {
    let tol = Tolerance::default();
    let problem = datasets::school();
    let c = problem.criteria();

    let lambda = consistency_index(c, &tol)?;
    println!("criteria matrix\n{c}");
    println!("λ = {lambda:.4} (log error {:.4})", lambda.ln());

    let cone = derive_weight_cone(c, &tol)?;
    println!("{} essential weight generators:", cone.essential_dim);
    println!("{}", cone.generators);
    for (j, g) in cone.generators.columns().enumerate() {
        let r = rank(&g, tol.tie_tol)?;
        println!("generator {}: {}", j + 1, r.render(problem.criteria_labels()));
    }
    Ok(())
}
