//! Max-times arithmetic on a small matrix: products, powers, spectral radius
//! and the Kleene star of the normalized matrix.
use tropahp_core::{Tolerance, TropMatrix, TropVector};

fn main() -> tropahp_core::Result<()> {
    let a = TropMatrix::from_rows(&[[1.0, 4.0, 0.5], [0.25, 1.0, 2.0], [2.0, 0.5, 1.0]])?;
    let x = TropVector::new(vec![1.0, 0.5, 2.0])?;

    println!("A =\n{a}");
    println!("A x   = {:?}", a.mul_vec(&x)?.as_slice());
    println!("A^2 =\n{}", a.power(2)?);
    println!("A⁻ (conjugate transpose) =\n{}", a.conjugate_transpose()?);

    let lambda = a.spectral_radius()?;
    println!("spectral radius λ = {lambda:.6}");
    println!("Tr(A) = {:.6}", a.tr_sum()?);

    let star = a.scale(1.0 / lambda).kleene_star(&Tolerance::default())?;
    println!("(λ⁻¹A)* =\n{star}");
    // every column is a subeigenvector of λ⁻¹A
    for (j, c) in star.columns().enumerate() {
        println!("column {}: x⁻Ax = {:.6}", j + 1, a.quad_form(&c)?);
    }
    Ok(())
}
