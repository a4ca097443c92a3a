//! Independent oracles and randomized post-condition suites.
//!
//! Nothing here calls the library to compute the quantity under test: cycle
//! means are enumerated, products and objectives are evaluated naively, and
//! subeigenvectors are produced by relaxation instead of a Kleene star.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tropahp_core::geom::{hilbert_seminorm, in_span};
use tropahp_core::opt::{
    max_hilbert_over_span, max_ratio, min_hilbert_constrained, min_hilbert_over_kleene_cone,
    min_pseudo_quadratic,
};
use tropahp_core::{algebra::solve_subeigen, Tolerance, TropMatrix, TropVector};

pub type Rows = Vec<Vec<f64>>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Log-uniform positive entries in `[1/spread, spread]`.
pub fn random_positive(rng: &mut StdRng, rows: usize, cols: usize, spread: f64) -> Rows {
    let s = spread.ln();
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-s..=s).exp()).collect())
        .collect()
}

/// Like [`random_positive`] but each entry is zero with probability `p_zero`.
pub fn random_sparse(rng: &mut StdRng, n: usize, spread: f64, p_zero: f64) -> Rows {
    let mut a = random_positive(rng, n, n, spread);
    for row in &mut a {
        for x in row.iter_mut() {
            if rng.gen_bool(p_zero) {
                *x = 0.0;
            }
        }
    }
    a
}

/// Symmetrically reciprocal matrix with Saaty-style judgments.
#[allow(clippy::needless_range_loop)]
pub fn random_reciprocal(rng: &mut StdRng, n: usize) -> Rows {
    let mut a = vec![vec![1.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v: f64 = rng.gen_range(1..=9) as f64;
            let v = if rng.gen_bool(0.5) { v } else { 1.0 / v };
            a[i][j] = v;
            a[j][i] = 1.0 / v;
        }
    }
    a
}

pub fn random_vec(rng: &mut StdRng, n: usize, spread: f64) -> Vec<f64> {
    random_positive(rng, 1, n, spread).remove(0)
}

pub fn mat(rows: &Rows) -> TropMatrix {
    TropMatrix::from_rows(rows).unwrap()
}

pub fn vector(x: &[f64]) -> TropVector {
    TropVector::new(x.to_vec()).unwrap()
}

pub fn naive_mul(a: &Rows, b: &Rows) -> Rows {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut c = vec![vec![0.0; m]; n];
    for i in 0..n {
        for j in 0..m {
            for t in 0..k {
                c[i][j] = f64::max(c[i][j], a[i][t] * b[t][j]);
            }
        }
    }
    c
}

pub fn naive_mul_vec(a: &Rows, x: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(a, x)| a * x).fold(0.0, f64::max))
        .collect()
}

pub fn scale_rows(a: &Rows, c: f64) -> Rows {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn rel_close(a: f64, b: f64, eps: f64) -> bool {
    (a - b).abs() <= eps * a.abs().max(b.abs()).max(1e-300)
}

fn rows_close(a: &Rows, b: &Rows, eps: f64) -> bool {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .all(|(x, y)| rel_close(*x, *y, eps) || (*x == 0.0 && *y == 0.0))
}

/// Maximum geometric mean over all elementary cycles, by exhaustive search.
pub fn max_cycle_mean(a: &Rows) -> f64 {
    let n = a.len();
    let mut best: f64 = 0.0;
    // each cycle is enumerated from its smallest vertex
    fn walk(a: &Rows, start: usize, v: usize, prod: f64, len: usize, seen: &mut [bool], best: &mut f64) {
        for w in start..a.len() {
            let x = a[v][w];
            if x == 0.0 {
                continue;
            }
            if w == start {
                *best = best.max((prod * x).powf(1.0 / (len + 1) as f64));
            } else if !seen[w] {
                seen[w] = true;
                walk(a, start, w, prod * x, len + 1, seen, best);
                seen[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        walk(a, s, s, 1.0, 0, &mut seen, &mut best);
    }
    best
}

/// `x⁻Ax = max_ij a_ij x_j / x_i`.
pub fn pseudo_quadratic(a: &Rows, x: &[f64]) -> f64 {
    let mut v: f64 = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, &aij) in row.iter().enumerate() {
            v = v.max(aij * x[j] / x[i]);
        }
    }
    v
}

/// Minimum of `x⁻Ax` over a logarithmic grid on `x = (1, e^s, e^t)`.
/// Returns the minimum and the grid step in log scale.
pub fn grid_min_3x3(a: &Rows, half_width: f64, points: usize) -> (f64, f64) {
    let h = 2.0 * half_width / (points - 1) as f64;
    let mut best = f64::INFINITY;
    for i in 0..points {
        for j in 0..points {
            let x = [
                1.0,
                (-half_width + h * i as f64).exp(),
                (-half_width + h * j as f64).exp(),
            ];
            best = best.min(pseudo_quadratic(a, &x));
        }
    }
    (best, h)
}

/// Relaxation: repeatedly raise `x` to `x ⊕ Ax` until stable.
pub fn relax_to_subeigen(a: &Rows, mut x: Vec<f64>) -> Vec<f64> {
    for _ in 0..10 * a.len() + 10 {
        let ax = naive_mul_vec(a, &x);
        let next: Vec<f64> = x.iter().zip(&ax).map(|(x, y)| x.max(*y)).collect();
        if next == x {
            break;
        }
        x = next;
    }
    x
}

pub fn columns(m: &TropMatrix) -> Vec<Vec<f64>> {
    m.columns().map(|c| c.into_vec()).collect()
}

pub fn to_rows(m: &TropMatrix) -> Rows {
    m.to_rows()
}

/// Random positive combination `G u`.
pub fn sample(rng: &mut StdRng, g: &TropMatrix) -> Vec<f64> {
    let u = random_vec(rng, g.cols(), 10.0);
    naive_mul_vec(&to_rows(g), &u)
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Semiring laws, product agreement with the naive oracle, and Kleene star
/// identities (`A*A* = A*`, `A* = I ⊕ AA*`) on `count` random matrices.
pub fn semiring_kleene_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let tol = Tolerance::default();
    for case in 0..count {
        let n = r.gen_range(1..=6);
        let a = random_sparse(&mut r, n, 8.0, 0.2);
        let b = random_positive(&mut r, n, n, 8.0);
        let c = random_positive(&mut r, n, n, 8.0);
        let (ma, mb, mc) = (mat(&a), mat(&b), mat(&c));

        let ab = ma.mat_mul(&mb).unwrap();
        ensure(rows_close(&ab.to_rows(), &naive_mul(&a, &b), 1e-12), || {
            format!("case {case}: product differs from oracle")
        })?;
        let left = ab.mat_mul(&mc).unwrap();
        let right = ma.mat_mul(&mb.mat_mul(&mc).unwrap()).unwrap();
        ensure(left.approx_eq(&right, &tol), || {
            format!("case {case}: associativity")
        })?;
        let dist_l = ma.mat_mul(&mb.oplus(&mc).unwrap()).unwrap();
        let dist_r = ab.oplus(&ma.mat_mul(&mc).unwrap()).unwrap();
        ensure(dist_l.approx_eq(&dist_r, &tol), || {
            format!("case {case}: distributivity")
        })?;
        ensure(ma.oplus(&ma).unwrap() == ma, || {
            format!("case {case}: idempotent addition")
        })?;
        let id = TropMatrix::identity(n);
        ensure(ma.mat_mul(&id).unwrap() == ma, || {
            format!("case {case}: identity")
        })?;

        let lambda = max_cycle_mean(&a);
        let scaled = if lambda > 0.0 {
            scale_rows(&a, 1.0 / lambda)
        } else {
            a.clone()
        };
        let star = mat(&scaled)
            .kleene_star(&tol)
            .map_err(|e| format!("case {case}: {e}"))?;
        let ss = naive_mul(&star.to_rows(), &star.to_rows());
        ensure(rows_close(&ss, &star.to_rows(), 1e-9), || {
            format!("case {case}: A*A* != A*")
        })?;
        let ias = mat(&naive_mul(&scaled, &star.to_rows())).oplus(&id).unwrap();
        ensure(ias.approx_eq(&star, &Tolerance { rel_eq: 1e-9, ..tol }), || {
            format!("case {case}: A* != I + AA*")
        })?;
    }
    Ok(())
}

/// Spectral radius against exhaustive cycle enumeration.
pub fn spectral_radius_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for case in 0..count {
        let n = r.gen_range(1..=6);
        let a = random_sparse(&mut r, n, 8.0, 0.3);
        let got = mat(&a).spectral_radius().unwrap();
        let want = max_cycle_mean(&a);
        ensure(rel_close(got, want, 1e-12) || (got == 0.0 && want == 0.0), || {
            format!("case {case}: spectral radius {got} vs cycle oracle {want}")
        })?;
    }
    Ok(())
}

/// `min x⁻Ax` on a dense log grid agrees with `λ` within twice the grid step.
pub fn grid_oracle_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for case in 0..count {
        let a = random_positive(&mut r, 3, 3, 4.0);
        let lambda = mat(&a).spectral_radius().unwrap();
        // the optimal x has log-ratios bounded by log(spread²·n)
        let (min, h) = grid_min_3x3(&a, 4.0, 401);
        ensure(min >= lambda * (1.0 - 1e-12), || {
            format!("case {case}: grid found {min} below λ = {lambda}")
        })?;
        ensure(min <= lambda * (2.0 * h).exp(), || {
            format!("case {case}: grid minimum {min} too far above λ = {lambda}")
        })?;
    }
    Ok(())
}

/// Subeigenvectors: every generated `x` satisfies `Ax ≤ x`, and every
/// subeigenvector found by relaxation lies in the generated span. Matrices
/// with `Tr > 1` are rejected.
pub fn subeigen_span_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let tol = Tolerance::default();
    for case in 0..count {
        let n = r.gen_range(2..=5);
        let raw = random_positive(&mut r, n, n, 6.0);
        let lambda = max_cycle_mean(&raw);
        let shrink = r.gen_range(0.3..=1.0);
        let a = scale_rows(&raw, shrink / lambda);
        let cone = solve_subeigen(&mat(&a), &tol).map_err(|e| format!("case {case}: {e}"))?;
        for _ in 0..5 {
            let x = sample(&mut r, &cone.generators);
            let ax = naive_mul_vec(&a, &x);
            ensure(ax.iter().zip(&x).all(|(l, r)| *l <= r * (1.0 + 1e-9)), || {
                format!("case {case}: generated x violates Ax <= x")
            })?;
        }
        let x = relax_to_subeigen(&a, random_vec(&mut r, n, 10.0));
        ensure(in_span(&cone.generators, &vector(&x), &tol).unwrap(), || {
            format!("case {case}: relaxed subeigenvector not in the span")
        })?;
        let too_big = scale_rows(&raw, 1.5 / lambda);
        ensure(solve_subeigen(&mat(&too_big), &tol).is_err(), || {
            format!("case {case}: Tr > 1 accepted")
        })?;
    }
    Ok(())
}

/// `min x⁻Ax = λ`: generated vectors attain `λ`, random vectors do not go below.
pub fn pseudo_quadratic_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let tol = Tolerance::default();
    for case in 0..count {
        let n = r.gen_range(2..=6);
        let a = random_sparse(&mut r, n, 6.0, 0.15);
        let lambda = max_cycle_mean(&a);
        if lambda == 0.0 {
            continue;
        }
        let cone = min_pseudo_quadratic(&mat(&a), &tol).map_err(|e| format!("case {case}: {e}"))?;
        ensure(rel_close(cone.optimum, lambda, 1e-12), || {
            format!("case {case}: optimum")
        })?;
        for _ in 0..5 {
            let x = sample(&mut r, &cone.generators);
            let v = pseudo_quadratic(&a, &x);
            ensure(rel_close(v, lambda, 1e-9), || {
                format!("case {case}: solution value {v} != λ = {lambda}")
            })?;
            let y = random_vec(&mut r, n, 10.0);
            let w = pseudo_quadratic(&a, &y);
            ensure(w >= lambda * (1.0 - 1e-12), || {
                format!("case {case}: random vector beats the optimum")
            })?;
        }
    }
    Ok(())
}

/// `q⁻x (Ax)⁻p`, computed directly.
pub fn ratio_objective(a: &Rows, p: &[f64], q: &[f64], x: &[f64]) -> f64 {
    let ax = naive_mul_vec(a, x);
    let num = q.iter().zip(x).map(|(q, x)| x / q).fold(0.0, f64::max);
    let den = ax
        .iter()
        .zip(p)
        .filter(|(_, p)| **p > 0.0)
        .map(|(ax, p)| ax / p)
        .fold(f64::INFINITY, f64::min);
    num / den
}

/// `max q⁻x(Ax)⁻p`: each block attains `Δ`, random vectors stay below, and
/// the witness pairs are exactly those found by brute force.
pub fn max_ratio_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let tol = Tolerance::default();
    for case in 0..count {
        let m = r.gen_range(2..=5);
        let n = r.gen_range(2..=5);
        // integer entries make exact ties (several witness pairs) common
        let a: Rows = (0..m)
            .map(|_| (0..n).map(|_| r.gen_range(1..=4) as f64).collect())
            .collect();
        let p: Vec<f64> = (0..m).map(|_| r.gen_range(1..=3) as f64).collect();
        let q: Vec<f64> = (0..n).map(|_| r.gen_range(1..=3) as f64).collect();
        let sol =
            max_ratio(&mat(&a), &vector(&p), &vector(&q), &tol).map_err(|e| format!("case {case}: {e}"))?;

        let mut delta: f64 = 0.0;
        for l in 0..m {
            for k in 0..n {
                delta = delta.max(p[l] / (q[k] * a[l][k]));
            }
        }
        ensure(rel_close(sol.optimum, delta, 1e-12), || format!("case {case}: Δ"))?;
        let mut want = Vec::new();
        for l in 0..m {
            for k in 0..n {
                if rel_close(p[l] / (q[k] * a[l][k]), delta, 1e-9) {
                    want.push((k, l));
                }
            }
        }
        let mut got: Vec<(usize, usize)> = sol.witness_pairs.iter().map(|w| (w.k, w.l)).collect();
        got.sort();
        want.sort();
        ensure(got == want, || {
            format!("case {case}: witness pairs {got:?} vs {want:?}")
        })?;

        for block in &sol.blocks {
            for _ in 0..3 {
                let x = sample(&mut r, block);
                let v = ratio_objective(&a, &p, &q, &x);
                ensure(rel_close(v, delta, 1e-9), || {
                    format!("case {case}: block solution value {v} != Δ = {delta}")
                })?;
            }
        }
        for _ in 0..5 {
            let y = random_vec(&mut r, n, 10.0);
            ensure(ratio_objective(&a, &p, &q, &y) <= delta * (1.0 + 1e-12), || {
                format!("case {case}: random vector exceeds Δ")
            })?;
        }
    }
    Ok(())
}

/// `min q⁻x x⁻p` subject to `Ax ≤ x`: solutions are feasible and attain `δ`;
/// feasible points from relaxation never go below `δ`.
pub fn constrained_min_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let tol = Tolerance::default();
    let objective = |x: &[f64], p: &[f64], q: &[f64]| {
        let a = q.iter().zip(x).map(|(q, x)| x / q).fold(0.0, f64::max);
        let b = p.iter().zip(x).map(|(p, x)| p / x).fold(0.0, f64::max);
        a * b
    };
    for case in 0..count {
        let n = r.gen_range(2..=5);
        let raw = random_sparse(&mut r, n, 6.0, 0.25);
        let lambda = max_cycle_mean(&raw);
        let a = if lambda > 0.0 {
            scale_rows(&raw, r.gen_range(0.3..=1.0) / lambda)
        } else {
            raw
        };
        let p = random_vec(&mut r, n, 5.0);
        let q = random_vec(&mut r, n, 5.0);
        let sol = min_hilbert_constrained(&mat(&a), &vector(&p), &vector(&q), &tol)
            .map_err(|e| format!("case {case}: {e}"))?;
        let delta = sol.optimum;
        for _ in 0..5 {
            let x = sample(&mut r, &sol.generators);
            let ax = naive_mul_vec(&a, &x);
            ensure(ax.iter().zip(&x).all(|(l, r)| *l <= r * (1.0 + 1e-9)), || {
                format!("case {case}: solution infeasible")
            })?;
            let v = objective(&x, &p, &q);
            ensure(rel_close(v, delta, 1e-9), || {
                format!("case {case}: solution value {v} != δ = {delta}")
            })?;
            let y = relax_to_subeigen(&a, random_vec(&mut r, n, 10.0));
            ensure(objective(&y, &p, &q) >= delta * (1.0 - 1e-9), || {
                format!("case {case}: feasible point below δ")
            })?;
        }
    }
    Ok(())
}

/// `δ ≤ H(x) ≤ Δ` for random members `x` of the cone `(λ⁻¹A)*`.
pub fn sandwich_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let tol = Tolerance::default();
    for case in 0..count {
        let n = r.gen_range(2..=5);
        let a = mat(&random_reciprocal(&mut r, n));
        let lambda = a.spectral_radius().unwrap();
        let s = a
            .scale(1.0 / lambda)
            .kleene_star(&Tolerance { rel_eq: 1e-9, ..tol })
            .unwrap();
        let most = max_hilbert_over_span(&s, &tol).map_err(|e| format!("case {case}: {e}"))?;
        let least = min_hilbert_over_kleene_cone(&a, &tol).map_err(|e| format!("case {case}: {e}"))?;
        ensure(least.optimum <= most.optimum * (1.0 + 1e-12), || {
            format!("case {case}: δ > Δ")
        })?;
        for _ in 0..10 {
            let x = vector(&sample(&mut r, &s));
            let h = hilbert_seminorm(&x).unwrap();
            ensure(
                h >= least.optimum * (1.0 - 1e-9) && h <= most.optimum * (1.0 + 1e-9),
                || {
                    format!(
                        "case {case}: H = {h} outside [{}, {}]",
                        least.optimum, most.optimum
                    )
                },
            )?;
        }
        for g in most.generators.columns() {
            let h = hilbert_seminorm(&g).unwrap();
            ensure(rel_close(h, most.optimum, 1e-9), || {
                format!("case {case}: max generator H")
            })?;
        }
        for g in least.generators.columns() {
            let h = hilbert_seminorm(&g).unwrap();
            ensure(h <= least.optimum * (1.0 + 1e-9), || {
                format!("case {case}: min generator H")
            })?;
        }
    }
    Ok(())
}

/// `λ = 1` for `x x⁻`, and `λ > 1` once a single reciprocal pair is perturbed.
/// Every 2×2 reciprocal matrix is consistent, so perturbations need `n ≥ 3`.
pub fn consistency_suite(count: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for case in 0..count {
        let n = r.gen_range(3..=6);
        let x = random_vec(&mut r, n, 9.0);
        let mut a: Rows = (0..n).map(|i| (0..n).map(|j| x[i] / x[j]).collect()).collect();
        let lambda = mat(&a).spectral_radius().unwrap();
        ensure(rel_close(lambda, 1.0, 1e-9), || {
            format!("case {case}: consistent λ = {lambda}")
        })?;
        let (i, j) = (0, r.gen_range(1..n));
        let f = r.gen_range(1.05..3.0);
        a[i][j] *= f;
        a[j][i] /= f;
        let lambda = mat(&a).spectral_radius().unwrap();
        ensure(lambda > 1.0 + 1e-9, || {
            format!("case {case}: inconsistent λ = {lambda}")
        })?;
    }
    Ok(())
}
