//! Cross-module flows through the public API only, the way a downstream
//! crate would use the library: catalog points flowing into the area map,
//! both volume routes, rank checks, JSON round trips, and the tracker.

use simplex_lab::catalog::{build_catalog, CatalogPoint};
use simplex_lab::curves::{witness_degree_certificate, CurveFamily, Witness};
use simplex_lab::jacobian::jacobian;
use simplex_lab::json::{edge_vector_to_json, AnyEdgeVector};
use simplex_lab::linalg::ExactScalar;
use simplex_lab::metrics::area_map;
use simplex_lab::scalar::Rational;
use simplex_lab::tracker::{track_fiber, TrackerConfig};
use simplex_lab::{cm_volume_squared, gram_volume_squared};

#[test]
fn every_catalog_point_survives_a_json_round_trip() {
    for n in 4..=5 {
        for point in build_catalog(n).expect("catalog builds") {
            let rendered = match &point {
                CatalogPoint::Pairing { edges, .. } => edge_vector_to_json(edges),
                CatalogPoint::Cycle { edges, .. } => edge_vector_to_json(edges),
            };
            let recovered = AnyEdgeVector::from_json(&rendered).expect("parses back");
            match (&point, recovered) {
                (CatalogPoint::Pairing { edges, .. }, AnyEdgeVector::Rational(back)) => {
                    assert_eq!(edges, &back);
                }
                (CatalogPoint::Cycle { edges, .. }, AnyEdgeVector::QuadExt(back)) => {
                    assert_eq!(edges, &back);
                }
                _ => panic!("round trip changed the ring"),
            }
        }
    }
}

#[test]
fn both_volume_routes_agree_across_the_catalog() {
    for point in build_catalog(4).expect("catalog builds") {
        let edges = point.quadext_edges();
        let direct = cm_volume_squared(&edges).expect("determinant").value;
        let gram = gram_volume_squared(&edges).expect("determinant").value;
        assert_eq!(direct, gram, "at {}", point.label());
    }
}

#[test]
fn relabeling_a_catalog_point_preserves_areas_and_volume() {
    let point = CatalogPoint::parse(4, "pairing:0-2,1-4:-1").expect("parses");
    let edges = match &point {
        CatalogPoint::Pairing { edges, .. } => edges.clone(),
        CatalogPoint::Cycle { .. } => unreachable!(),
    };
    let relabeled = edges.relabel(&[4, 2, 0, 1, 3]);

    let target = Rational::ratio(3, 16);
    for s in area_map(&relabeled).entries() {
        assert_eq!(s, &target);
    }
    assert_eq!(
        cm_volume_squared(&edges).unwrap().value,
        cm_volume_squared(&relabeled).unwrap().value
    );
}

#[test]
fn jacobians_stay_full_rank_on_a_restricted_point() {
    // dropping the last vertex of a 5-simplex catalog point lands on a
    // 4-simplex equiareal point whose Jacobian must again be invertible
    let point = CatalogPoint::parse(5, "pairing:0-1,2-3:+1").expect("parses");
    let edges = match &point {
        CatalogPoint::Pairing { edges, .. } => edges.clone(),
        CatalogPoint::Cycle { .. } => unreachable!(),
    };
    let restricted = edges.restrict(&[0, 1, 2, 3, 4]);
    assert_eq!(restricted.n(), 4);

    let target = Rational::ratio(3, 16);
    for s in area_map(&restricted).entries() {
        assert_eq!(s, &target);
    }
    let m = jacobian(&restricted);
    assert_eq!(Rational::rank(&m), 10);
}

#[test]
fn tracking_the_equiareal_target_recovers_the_catalog_classes() {
    let point = build_catalog(4).expect("catalog builds").remove(0);
    let target = area_map(&point.complex_edges());
    let result = track_fiber(&target, &TrackerConfig::with_seed(5)).expect("square system");
    assert!(result.all_paths_converged());
    assert_eq!(result.distinct_endpoints, 64);
    assert_eq!(result.class_count, 32);
    assert_eq!(result.real_positive_classes, 26);
}

#[test]
fn certificates_and_exact_witness_values_tie_together() {
    // the witness that certifies the 4-dimensional family takes a nonzero
    // constant value at the equiareal catalog points: every factor sees the
    // triple (3/16, 3/16, 3/16) and contributes 3 * (3/16)^2 = 27/256
    let point = CatalogPoint::parse(4, "pairing:empty:+1").expect("parses");
    let areas = area_map(&point.quadext_edges());
    let value = simplex_lab::curves::evaluate_witness(&Witness::HeronProduct, &areas)
        .expect("dimension fits");
    let expected = Rational::ratio(27, 256).pow(10).expect("exact power");
    assert_eq!(value.to_rational(), Some(expected));

    let curve = CurveFamily::dim4(
        Rational::from_integer(1),
        Rational::from_integer(1),
        Rational::from_integer(1),
    )
    .expect("valid parameters");
    let report = witness_degree_certificate(&curve, &[Witness::HeronProduct]).expect("evaluates");
    assert!(report.holds);
}
