use proptest::prelude::*;
use tropahp_core::ahp::rank;
use tropahp_core::geom::hilbert_seminorm;
use tropahp_core::{Tolerance, TropMatrix, TropVector};

fn entry() -> impl Strategy<Value = f64> {
    (-3.0f64..3.0).prop_map(f64::exp)
}

fn square(n: usize) -> impl Strategy<Value = TropMatrix> {
    prop::collection::vec(entry(), n * n).prop_map(move |d| TropMatrix::new(n, n, d).unwrap())
}

fn sized_square() -> impl Strategy<Value = TropMatrix> {
    (1usize..=5).prop_flat_map(square)
}

fn triple() -> impl Strategy<Value = (TropMatrix, TropMatrix, TropMatrix)> {
    (1usize..=5).prop_flat_map(|n| (square(n), square(n), square(n)))
}

fn positive_vec(n: usize) -> impl Strategy<Value = TropVector> {
    prop::collection::vec(entry(), n).prop_map(|v| TropVector::new(v).unwrap())
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-10 * a.abs().max(b.abs())
}

proptest! {
    #[test]
    fn addition_is_commutative_and_idempotent((a, b, _) in triple()) {
        prop_assert_eq!(a.oplus(&b).unwrap(), b.oplus(&a).unwrap());
        prop_assert_eq!(a.oplus(&a).unwrap(), a);
    }

    #[test]
    fn multiplication_is_associative_and_distributive((a, b, c) in triple()) {
        let tol = Tolerance::default();
        let l = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
        let r = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
        prop_assert!(l.approx_eq(&r, &tol));
        let d1 = a.mat_mul(&b.oplus(&c).unwrap()).unwrap();
        let d2 = a.mat_mul(&b).unwrap().oplus(&a.mat_mul(&c).unwrap()).unwrap();
        prop_assert!(d1.approx_eq(&d2, &tol));
    }

    #[test]
    fn product_is_monotone((a, b, c) in triple()) {
        // b ≤ b ⊕ c implies ab ≤ a(b ⊕ c)
        let tol = Tolerance::default();
        let lo = a.mat_mul(&b).unwrap();
        let hi = a.mat_mul(&b.oplus(&c).unwrap()).unwrap();
        prop_assert!(lo.approx_le(&hi, &tol));
    }

    #[test]
    fn spectral_radius_is_homogeneous(a in sized_square(), c in entry()) {
        let l = a.spectral_radius().unwrap();
        prop_assert!(close(a.scale(c).spectral_radius().unwrap(), c * l));
    }

    #[test]
    fn spectral_radius_is_transpose_invariant(a in sized_square()) {
        prop_assert!(close(a.spectral_radius().unwrap(), a.transpose().spectral_radius().unwrap()));
    }

    #[test]
    fn spectral_radius_bounds_quadratic_form(a in sized_square(), seed in 0u64..1000) {
        let n = a.rows();
        let x = TropVector::new((0..n).map(|i| (((seed + i as u64 * 7) % 13) as f64 / 3.0).exp()).collect()).unwrap();
        prop_assert!(a.quad_form(&x).unwrap() >= a.spectral_radius().unwrap() * (1.0 - 1e-12));
    }

    #[test]
    fn kleene_star_is_idempotent(a in sized_square()) {
        let l = a.spectral_radius().unwrap();
        let star = a.scale(1.0 / l).kleene_star(&Tolerance::default()).unwrap();
        let sq = star.mat_mul(&star).unwrap();
        prop_assert!(sq.approx_eq(&star, &Tolerance::default()));
        for i in 0..a.rows() {
            prop_assert!(star.get(i, i) >= 1.0);
        }
    }

    #[test]
    fn conjugate_transpose_is_an_involution(a in sized_square()) {
        let back = a.conjugate_transpose().unwrap().conjugate_transpose().unwrap();
        prop_assert!(back.approx_eq(&a, &Tolerance::default()));
    }

    #[test]
    fn seminorm_is_scale_invariant(x in (1usize..6).prop_flat_map(positive_vec), c in entry()) {
        let h = hilbert_seminorm(&x).unwrap();
        prop_assert!(close(hilbert_seminorm(&x.scale(c)).unwrap(), h));
        prop_assert!(h >= 1.0);
    }

    #[test]
    fn ranking_is_scale_invariant(x in (1usize..6).prop_flat_map(positive_vec), c in entry()) {
        let a = rank(&x, 1e-7).unwrap();
        let b = rank(&x.scale(c), 1e-7).unwrap();
        prop_assert_eq!(a.groups, b.groups);
    }

    #[test]
    fn ranking_groups_partition_indices(x in (1usize..8).prop_flat_map(positive_vec)) {
        let r = rank(&x, 1e-7).unwrap();
        let mut all: Vec<usize> = r.groups.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..x.dim()).collect::<Vec<_>>());
    }
}
