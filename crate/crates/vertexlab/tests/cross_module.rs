//! Cross-module oracle checks: values derived in one representation verified
//! against an independent route.

use num_complex::Complex64 as C64;
use vertexlab::correlations::*;
use vertexlab::determinants::*;
use vertexlab::numeric::extrapolate_to_zero;
use vertexlab::rational::{format_rat, Rat};
use vertexlab::sixv::*;
use vertexlab::twentyv::*;
use vertexlab::yba::dwbc_bridge;

#[test]
fn difrancesco_untruncated_matches_enumeration_through_cap() {
    let table = BoundaryTable20V::dwbc_default();
    let unit = Weights20V::<Rat>::uniform(Rat::from_integer(1.into()));
    for n in 1..=3 {
        let z = partition_brute_20v(n, &unit, &table, 3).unwrap();
        assert_eq!(format_rat(&z), format_rat(&difrancesco_partition(n)), "n={n}");
    }
}

#[test]
fn bottom_contour_matches_enumeration_at_s2() {
    let w = Weights6V::isotropic(1.15, 0.85, 1.05);
    let n = 4;
    for r1 in 1..n {
        for r2 in (r1 + 1)..=n {
            let region = RegionSpec::new(vec![r1, r2]);
            let brute =
                restricted_partition_brute(n, &w, Restriction::Bottom, &region, 6).unwrap();
            let contour =
                bottom_contour_6v(n, &w, &region, &ContourSpec::around_zero(), 6).unwrap();
            assert!(
                (contour.re - brute).abs() <= 1e-10 * brute.abs().max(1.0),
                "rs=({r1},{r2}): contour {} vs brute {brute}",
                contour.re
            );
        }
    }
}

#[test]
fn top_contour_matches_frozen_strip_at_mirrored_index() {
    let (a, b, c) = (1.2, 0.8, 1.1);
    let w = Weights6V::isotropic(a, b, c);
    for n in [3usize, 4] {
        for r in 1..n {
            let tc = top_contour_6v(n, &w, &RegionSpec::new(vec![r]), &ContourSpec::around_one())
                .unwrap();
            let strip = a.powi((n - r) as i32 - 1) * b.powi(r as i32) * c;
            assert!((tc.re - strip).abs() < 1e-12 * strip);
        }
    }
}

#[test]
fn h_multi_symmetry_and_confluent_limit() {
    let w = Weights6V::isotropic(1.1, 0.9, 1.2);
    let h = HFunction::build(4, &w, 6).unwrap();
    let z1 = C64::new(0.31, 0.12);
    let z2 = C64::new(0.54, -0.2);
    let a = h.h_multi(&[z1, z2]).unwrap();
    let b = h.h_multi(&[z2, z1]).unwrap();
    assert!((a - b).norm() < 1e-12, "h_multi must be symmetric");
    // confluent z2 -> z1 approaches a finite limit (derivative rule)
    let near = h.h_multi(&[z1, z1 + C64::new(1e-5, 0.0)]).unwrap();
    let nearer = h.h_multi(&[z1, z1 + C64::new(5e-6, 0.0)]).unwrap();
    assert!((near - nearer).norm() < 1e-4 * near.norm().max(1.0));
    // below tolerance the evaluator reports confluence
    assert!(matches!(
        h.h_multi(&[z1, z1 + C64::new(1e-12, 0.0)]),
        Err(CorrelationError::ConfluentPoints(_))
    ));
    // s = 1 reduces to the single polynomial
    assert_eq!(h.h_multi(&[z1]).unwrap(), h.h_single(z1));
}

#[test]
fn bridge_equals_richardson_homogenization_chain() {
    // one chained consistency pass: bridge = determinant, determinant
    // homogenizes to the derivative form
    let (lambda, nu, eta) = (1.0, 0.05, 0.4);
    let n = 3;
    let spread = 0.1;
    let deltas: Vec<f64> = (0..n).map(|i| spread * (i as f64 + 1.0) / n as f64).collect();
    let deltas_nu: Vec<f64> = (0..n).map(|i| -spread * (i as f64 + 0.5) / n as f64).collect();
    let mut pts = Vec::new();
    for &eps in &[1e-2, 5e-3, 2.5e-3] {
        let lams: Vec<f64> = deltas.iter().map(|d| lambda + eps * d).collect();
        let nus: Vec<f64> = deltas_nu.iter().map(|d| nu + eps * d).collect();
        let bridge = dwbc_bridge(&lams, &nus, eta).unwrap();
        pts.push((eps, bridge));
    }
    let limit = extrapolate_to_zero(&pts);
    let hom = homogeneous_partition(
        lambda,
        nu,
        eta,
        n,
        HomogeneousKernel::Limit,
        DerivScheme::default(),
    )
    .unwrap();
    assert!(
        (hom - limit).norm() <= 1e-6 * limit.norm(),
        "bridge-homogenization chain: {} vs {}",
        hom.re,
        limit.re
    );
}

#[test]
fn homogeneous_derivative_scheme_consistency() {
    // h vs h/2 agreement for both derivative schemes
    let (lambda, nu, eta, n) = (0.95, 0.1, 0.35, 3);
    let c1 = homogeneous_partition(
        lambda,
        nu,
        eta,
        n,
        HomogeneousKernel::Limit,
        DerivScheme::Cauchy {
            radius: 0.3,
            nodes: 256,
        },
    )
    .unwrap();
    let c2 = homogeneous_partition(
        lambda,
        nu,
        eta,
        n,
        HomogeneousKernel::Limit,
        DerivScheme::Cauchy {
            radius: 0.15,
            nodes: 256,
        },
    )
    .unwrap();
    assert!((c1 - c2).norm() <= 1e-8 * c1.norm());
    let f1 = homogeneous_partition(
        lambda,
        nu,
        eta,
        n,
        HomogeneousKernel::Limit,
        DerivScheme::Central { step: 2e-3 },
    )
    .unwrap();
    let f2 = homogeneous_partition(
        lambda,
        nu,
        eta,
        n,
        HomogeneousKernel::Limit,
        DerivScheme::Central { step: 1e-3 },
    )
    .unwrap();
    // central differences carry O(h^2) error; halving shrinks the gap
    assert!((f2 - c1).norm() < (f1 - c1).norm() + 1e-12);
    // the printed kernel variant evaluates but differs from the limit
    let printed = homogeneous_partition(
        lambda,
        nu,
        eta,
        n,
        HomogeneousKernel::AsPrinted,
        DerivScheme::default(),
    )
    .unwrap();
    assert!((printed - c1).norm() > 1e-3 * c1.norm());
}

#[test]
fn efp20v_contour_reports_conventions() {
    let w6 = Weights6V::isotropic(1.0, 0.8, 1.1);
    let result = efp20v_contour(
        2,
        1,
        1,
        &w6,
        1,
        1,
        &ContourSpec::around_zero().with_nodes(64),
        &ContourSpec::around_one().with_nodes(64),
        6,
    )
    .unwrap();
    assert!(result.value_re.is_finite());
    assert!(!result.conventions.h_def.is_empty());
    assert!(!result.conventions.dwbc_variant.is_empty());
}

#[test]
fn twenty_vertex_c_zero_reduces_to_through_and_w3_classes() {
    // with every c weight zero only slots {w0, w1, w3, w6} can appear
    let table = BoundaryTable20V::dwbc_default();
    let mut w = Weights20V::unit();
    w.c1 = 0.0;
    w.c2 = 0.0;
    w.c3 = 0.0;
    let composites = composite_weights(&w);
    let mut z_filtered = 0.0;
    let mut z_direct = 0.0;
    for_each_dwbc_20v(2, &table, 3, |cfg| {
        let weight = weight_20v(cfg, &composites).unwrap();
        z_direct += weight;
        let slots = cfg.slot_counts().unwrap();
        if slots[2] == 0 && slots[4] == 0 && slots[5] == 0 {
            let mut alt = 1.0;
            for (slot, &count) in slots.iter().enumerate() {
                alt *= composites.w[slot].powi(count as i32);
            }
            z_filtered += alt;
        }
    })
    .unwrap();
    assert_eq!(z_direct, z_filtered);
}
