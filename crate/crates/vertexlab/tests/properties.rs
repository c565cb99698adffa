//! Property tests for the spec's structural invariants.

use num_complex::Complex64 as C64;
use proptest::prelude::*;
use vertexlab::correlations::{antisymmetrize, ContourSpec};
use vertexlab::rational::Rat;
use vertexlab::sixv::*;
use vertexlab::twentyv::{composite_weights, Weights20V};

fn weight_strategy() -> impl Strategy<Value = Weights6V<f64>> {
    (
        0.2f64..2.0,
        0.2f64..2.0,
        0.2f64..2.0,
        0.2f64..2.0,
        0.2f64..2.0,
        0.2f64..2.0,
    )
        .prop_map(|(a1, a2, b1, b2, c1, c2)| Weights6V {
            a1,
            a2,
            b1,
            b2,
            c1,
            c2,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scaling_leaves_probabilities_invariant(w in weight_strategy(), kappa in 0.5f64..3.0) {
        let n = 2usize;
        let mut scaled = w.clone();
        for f in [&mut scaled.a1, &mut scaled.a2, &mut scaled.b1, &mut scaled.b2, &mut scaled.c1, &mut scaled.c2] {
            *f *= kappa;
        }
        let z = partition_brute(n, &w, BoundaryConvention::default(), 6).unwrap();
        let zs = partition_brute(n, &scaled, BoundaryConvention::default(), 6).unwrap();
        prop_assert!((zs / z - kappa.powi((n * n) as i32)).abs() <= 1e-10 * kappa.powi((n * n) as i32));
        for_each_dwbc(n, BoundaryConvention::default(), 6, |cfg| {
            let p = weight(cfg, &w).unwrap() / z;
            let ps = weight(cfg, &scaled).unwrap() / zs;
            assert!((p - ps).abs() < 1e-12);
        }).unwrap();
    }

    #[test]
    fn wire_round_trip_is_lossless(index in 0usize..42) {
        let cfgs = enumerate_dwbc(4, BoundaryConvention::default(), 6).unwrap();
        let cfg = &cfgs[index % cfgs.len()];
        let wire = Configuration6VWire::from(cfg);
        let json = serde_json::to_string(&wire).unwrap();
        let back: Configuration6VWire = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Configuration6V::try_from(back).unwrap(), cfg.clone());
    }

    #[test]
    fn antisymmetrizer_is_a_projector(
        coeffs in proptest::array::uniform4(-2.0f64..2.0),
        x1 in -0.9f64..0.9, x2 in 1.0f64..1.9, x3 in 2.0f64..2.9,
    ) {
        let f = move |zs: &[C64]| {
            let c: Vec<C64> = coeffs.iter().map(|&x| C64::new(x, 0.0)).collect();
            c[0] + c[1] * zs[0] + c[2] * zs[1] * zs[1] + c[3] * zs[0] * zs[2]
        };
        let pts = [C64::new(x1, 0.0), C64::new(x2, 0.0), C64::new(x3, 0.0)];
        let once = antisymmetrize(&f, &pts).unwrap();
        let anti = |zs: &[C64]| antisymmetrize(&f, zs).unwrap();
        let twice = antisymmetrize(&anti, &pts).unwrap();
        prop_assert!((once - twice).norm() <= 1e-13 * once.norm().max(1.0));
    }

    #[test]
    fn composite_weights_scale_cubically(num in 1i64..40, den in 1i64..40, k_num in 1i64..9, k_den in 1i64..9) {
        let base = Weights20V::<Rat>::uniform(Rat::new(num.into(), den.into()));
        let kappa = Rat::new(k_num.into(), k_den.into());
        let mut scaled = base.clone();
        for f in [
            &mut scaled.a1, &mut scaled.a2, &mut scaled.a3,
            &mut scaled.b1, &mut scaled.b2, &mut scaled.b3,
            &mut scaled.c1, &mut scaled.c2, &mut scaled.c3,
        ] {
            *f *= kappa.clone();
        }
        let w = composite_weights(&base);
        let ws = composite_weights(&scaled);
        let k3 = &kappa * &kappa * &kappa;
        for i in 0..7 {
            prop_assert_eq!(ws.w[i].clone(), &w.w[i] * &k3);
        }
    }

    #[test]
    fn quadrature_is_radius_invariant_for_simple_poles(radius in 0.2f64..0.8, nodes_pow in 7u32..9) {
        let spec = ContourSpec { center: (0.0, 0.0), radius, nodes: 1 << nodes_pow };
        let v = vertexlab::correlations::contour_integral(|z| (z * 3.0 + 1.0) / z, &spec).unwrap();
        prop_assert!((v - C64::new(1.0, 0.0)).norm() < 1e-11);
    }
}
