use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use localspec::batch::{
    analyze_many, analyze_many_sequential, random_connected_graph, random_set, Instance,
};
use localspec::linalg::norm;
use localspec::poly::local_inner_product;
use localspec::{
    analyze, apply_polynomial, distance_partition, local_spectrum, spectral_decomposition, Config,
    Graph, Polynomial, VertexSet,
};

fn instance(seed: u64, n: usize, extra: f64) -> (Graph, VertexSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_connected_graph(&mut rng, n, extra);
    let c = random_set(&mut rng, n);
    (g, c)
}

fn inst() -> impl Strategy<Value = (Graph, VertexSet)> {
    (any::<u64>(), 3usize..=12, 0.0f64..0.6).prop_map(|(s, n, e)| instance(s, n, e))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn layers_partition_vertices_by_distance((g, c) in inst()) {
        let dp = distance_partition(&g, &c).unwrap();
        let total: usize = dp.layers().iter().map(VertexSet::len).sum();
        prop_assert_eq!(total, g.n());
        let from_each: Vec<Vec<usize>> = c.members().iter().map(|&v| g.distances_from(v)).collect();
        for v in 0..g.n() {
            let best = from_each.iter().map(|d| d[v]).min().unwrap();
            prop_assert_eq!(dp.distances()[v], best);
            prop_assert!(dp.layer(best).contains(v));
        }
    }

    #[test]
    fn projectors_resolve_identity((g, _c) in inst(), seed in any::<u64>()) {
        let s = spectral_decomposition(&g, 1e-8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u: Vec<f64> = (0..g.n()).map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0)).collect();
        let mut sum = vec![0.0; g.n()];
        for l in 0..s.distinct_count() {
            let e = s.project(l, &u).unwrap();
            for (acc, x) in sum.iter_mut().zip(&e) {
                *acc += x;
            }
        }
        for (a, b) in sum.iter().zip(&u) {
            prop_assert!((a - b).abs() < 1e-10);
        }
        prop_assert!(s.identity_defect(&g) < 1e-9 * g.n() as f64);
    }

    #[test]
    fn lagrange_polynomial_projects((g, _c) in inst(), seed in any::<u64>()) {
        let s = spectral_decomposition(&g, 1e-8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u: Vec<f64> = (0..g.n()).map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0)).collect();
        for l in 0..s.distinct_count() {
            let z = s.lagrange(l).unwrap();
            // Horner rounding is bounded by eps times Σ|c_i| r^i with r ≥ max|λ|.
            let r = s.largest();
            let scale: f64 = z.coeffs().iter().enumerate().map(|(i, c)| c.abs() * r.powi(i as i32)).sum();
            for (h, &lam) in s.eigenvalues().iter().enumerate() {
                let want = if h == l { 1.0 } else { 0.0 };
                prop_assert!((z.eval(lam) - want).abs() <= 1e-12 * scale.max(1.0));
            }
            let via_poly = apply_polynomial(&g, &z, &u).unwrap();
            let via_proj = s.project(l, &u).unwrap();
            let diff: Vec<f64> = via_poly.iter().zip(&via_proj).map(|(a, b)| a - b).collect();
            prop_assert!(
                norm(&diff) <= 1e-12 * scale.max(1.0) * norm(&u),
                "l = {}: {} (scale {})", l, norm(&diff), scale
            );
        }
    }

    #[test]
    fn local_multiplicities_are_a_distribution((g, c) in inst()) {
        let s = spectral_decomposition(&g, 1e-8).unwrap();
        let ls = local_spectrum(&s, &c, 1e-10).unwrap();
        let total: f64 = ls.all_multiplicities().iter().sum();
        prop_assert!((total - 1.0).abs() < 1e-9);
        prop_assert!(ls.all_multiplicities().iter().all(|&m| m >= -1e-12));
        let m0 = ls.all_multiplicities()[0];
        prop_assert!((m0 - ls.rho_norm_sq() / s.perron_norm_sq()).abs() < 1e-9);
        prop_assert_eq!(ls.parent_indices()[0], 0);
    }

    #[test]
    fn analysis_invariants((g, c) in inst()) {
        let a = analyze(&g, &c, &Config::default()).unwrap();
        let ext = a.report.extremality;
        prop_assert!(ext.eccentricity <= ext.dual_degree);
        prop_assert!(a.report.hoffman_residual < 1e-6, "hoffman residual {}", a.report.hoffman_residual);
        prop_assert!(a.system.orthogonality_defect() < 1e-8);
        prop_assert!(a.system.degree_ladder_holds(1e-10));
        if let Some(ex) = &a.report.excess {
            prop_assert!(ex.lhs <= ex.rhs * (1.0 + 1e-8));
        }
        if let Some(p) = &a.report.multiplicity_products {
            prop_assert!(p.rows.iter().all(|r| r.slack >= -1e-9));
        }
        if a.report.verdicts[0].cprc {
            prop_assert!(ext.is_extremal());
        }
    }

    #[test]
    fn inner_product_is_symmetric(
        (g, c) in inst(),
        p in prop::collection::vec(-2.0f64..2.0, 1..5),
        q in prop::collection::vec(-2.0f64..2.0, 1..5),
    ) {
        let s = spectral_decomposition(&g, 1e-8).unwrap();
        let ls = local_spectrum(&s, &c, 1e-10).unwrap();
        let (p, q) = (Polynomial::new(p), Polynomial::new(q));
        let pq = local_inner_product(&p, &q, &ls);
        let qp = local_inner_product(&q, &p, &ls);
        prop_assert!((pq - qp).abs() <= 1e-12 * pq.abs().max(1.0));
        prop_assert!(local_inner_product(&p, &p, &ls) >= 0.0);
    }
}

#[test]
fn batch_modes_agree() {
    let corpus: Vec<Instance> = (0..24)
        .map(|i| {
            let (graph, set) = instance(i, 4 + (i as usize % 9), 0.3);
            Instance { graph, set }
        })
        .collect();
    let cfg = Config::default();
    let par = analyze_many(&corpus, &cfg);
    let seq = analyze_many_sequential(&corpus, &cfg);
    for (p, s) in par.iter().zip(&seq) {
        let (p, s) = (p.as_ref().unwrap(), s.as_ref().unwrap());
        assert_eq!(p.report.overall, s.report.overall);
        assert_eq!(p.local.mult(), s.local.mult());
        assert_eq!(
            p.report.predistance.residuals,
            s.report.predistance.residuals
        );
    }
}
