//! Extremes of the Hilbert seminorm over the column span of a 3×3 Kleene star,
//! printed as sections of the plane x₃ = 1.
use tropahp_core::geom::{section_at_unit_last_coord, section_of_blocks, SectionPlot};
use tropahp_core::opt::{max_hilbert_over_span, min_hilbert_over_kleene_cone};
use tropahp_core::{datasets, Tolerance, TropMatrix};

fn show(name: &str, plot: &SectionPlot) {
    println!("  {name}:");
    for (p, label) in plot.points.iter().zip(&plot.labels) {
        println!("    {label:>4} ({:.4}, {:.4})", p[0], p[1]);
    }
    for [a, b] in &plot.segments {
        println!(
            "    segment ({:.4}, {:.4}) - ({:.4}, {:.4})",
            a[0], a[1], b[0], b[1]
        );
    }
}

fn report(title: &str, a: &TropMatrix) -> tropahp_core::Result<()> {
    let tol = Tolerance::default();
    println!("{title}\n{a}");
    show("span", &section_at_unit_last_coord(a)?);

    let least = min_hilbert_over_kleene_cone(a, &tol)?;
    println!("  min seminorm δ = {:.4}", least.optimum);
    show(
        "least differentiating",
        &section_at_unit_last_coord(&least.generators)?,
    );

    let most = max_hilbert_over_span(a, &tol)?;
    let pairs: Vec<String> = most
        .witness_pairs
        .iter()
        .map(|p| format!("({},{})", p.k + 1, p.l + 1))
        .collect();
    println!(
        "  max seminorm Δ = {:.4}, pairs {}",
        most.optimum,
        pairs.join(" ")
    );
    show("most differentiating", &section_of_blocks(&most.blocks)?);
    println!();
    Ok(())
}

fn main() -> tropahp_core::Result<()> {
    report("span with a segment section", &datasets::span_segment())?;
    report("span with a region section", &datasets::span_region())
}
