use octa_geodesic::oracle::{chord_3d, mesh_upper_bound, unfold_geodesic};
use octa_geodesic::*;

fn f(i: u8) -> FaceId {
    FaceId::of(i)
}

fn l(i: u8) -> LandscapeId {
    LandscapeId::new(i).unwrap()
}

#[test]
fn each_row_selects_its_landscape() {
    for row in WITNESS_ROWS {
        let a = row.p1.to_point::<f64>().unwrap();
        let b = row.p2.to_point::<f64>().unwrap();
        let d = surface_distance(&a, &b);
        assert_eq!(d.argmin, vec![row.landscape], "{}", row.landscape);
        assert!(!d.fallback);
        let oracle = unfold_geodesic(&a, &b, 8);
        assert!((d.distance - oracle).abs() <= 1e-9, "{}: {} vs {oracle}", row.landscape, d.distance);
    }
}

#[test]
fn row_formulas_in_identity_frame() {
    let frame = CanonicalFrame::IDENTITY;
    for row in WITNESS_ROWS {
        let p1 = row.p1.to_representation::<f64>().unwrap();
        let p2 = row.p2.to_representation::<f64>().unwrap();
        let len = trail_length(row.landscape, &p1, &p2, &frame).unwrap();
        let tr = trail_crossings(row.landscape, &p1, &p2, &frame).unwrap();
        assert!(tr.contained);
        assert!((tr.length().unwrap() - len).abs() < 1e-12);
        let a = row.p1.to_point::<f64>().unwrap();
        let b = row.p2.to_point::<f64>().unwrap();
        assert!((len - unfold_geodesic(&a, &b, 8)).abs() < 1e-9);
    }
}

#[test]
fn adjacent_row_is_point_four() {
    let row = WITNESS_ROWS[0];
    let d = surface_distance(&row.p1.to_point::<f64>().unwrap(), &row.p2.to_point().unwrap());
    assert!((d.distance - 0.4).abs() < 1e-15);
}

#[test]
fn l9_row_crosses_three_edges_in_order() {
    let row = WITNESS_ROWS[8];
    let tr = shortest_path(&row.p1.to_point::<f64>().unwrap(), &row.p2.to_point().unwrap());
    assert_eq!(tr.faces, vec![f(1), f(4), f(3), f(8)]);
    assert_eq!(tr.crossings.len(), 3);
    for (c, w) in tr.crossings.iter().zip(tr.faces.windows(2)) {
        for v in [c.edge.0, c.edge.1] {
            assert!(v.contains(w[0]) && v.contains(w[1]));
        }
    }
}

#[test]
fn antipodal_vertices_are_root_three_apart() {
    let a = SurfacePoint::new(f(1), f(2), 0.0, 0.0).unwrap();
    let b = SurfacePoint::new(f(5), f(6), 0.0, 0.0).unwrap();
    let oracle = unfold_geodesic(&a, &b, 8);
    let d = surface_distance(&a, &b);
    assert!((d.distance - oracle).abs() <= 1e-12);
    assert!((oracle - 3f64.sqrt()).abs() <= 1e-12);
    assert!(chord_3d(&a, &b) <= d.distance);
}

#[test]
fn witness_rows_are_bracketed() {
    for row in WITNESS_ROWS {
        let a = row.p1.to_point::<f64>().unwrap();
        let b = row.p2.to_point::<f64>().unwrap();
        let d = surface_distance(&a, &b).distance;
        assert!(chord_3d(&a, &b) <= d + 1e-12);
        assert!(d <= mesh_upper_bound(&a, &b, 16) + 1e-12);
    }
}

#[test]
fn oracle_needs_only_four_faces() {
    for p in sample_uniform::<f64>(11, 400).chunks(2) {
        let four = unfold_geodesic(&p[0], &p[1], 4);
        let eight = unfold_geodesic(&p[0], &p[1], 8);
        assert!((four - eight).abs() < 1e-12);
    }
}

#[test]
fn canonical_frame_for_non_identity_pair() {
    let choice = canonical_frame(f(8), f(7), f(1)).unwrap();
    assert_eq!(choice.relation, FaceRelation::Opposite);
    assert_eq!(choice.frame.face(8), f(1));
    let a = SurfacePoint::new(f(8), f(7), 0.3, 0.2).unwrap();
    let b = SurfacePoint::new(f(1), f(2), 0.6, 0.1).unwrap();
    let d = surface_distance(&a, &b);
    assert!(d.argmin.iter().all(|id| id.index() >= 4));
    assert!((d.distance - unfold_geodesic(&a, &b, 8)).abs() < 1e-9);
    let _ = l(1);
}
