use octa_geodesic::oracle::{chain_chord, chord_3d, dist3, embed_3d, unfold_geodesic};
use octa_geodesic::topology::{enumerate_dual_paths, neighbors_ccw};
use octa_geodesic::*;
use proptest::prelude::*;

fn rep_from(face: u8, slot: usize, u: f64, v: f64) -> Representation64 {
    let home = FaceId::of(face);
    let shared = neighbors_ccw(home)[slot];
    let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
    let h = 3f64.sqrt() / 2.0;
    Representation::new(home, shared, u + v * 0.5, v * h).unwrap()
}

fn any_rep() -> impl Strategy<Value = Representation64> {
    (1u8..=8, 0usize..3, 0.0..1.0f64, 0.0..1.0f64).prop_map(|(f, s, u, v)| rep_from(f, s, u, v))
}

fn edge_rep() -> impl Strategy<Value = Representation64> {
    (1u8..=8, 0usize..3, 0.0..=1.0f64).prop_map(|(f, s, x)| {
        let home = FaceId::of(f);
        Representation::new(home, neighbors_ccw(home)[s], x, 0.0).unwrap()
    })
}

fn any_point() -> impl Strategy<Value = SurfacePoint64> {
    any_rep().prop_map(|r| canonicalize(&r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rotation_keeps_embedding(r in any_rep()) {
        let p = embed_3d(&r);
        let once = r.rotate_shared();
        prop_assert!(dist3(p, embed_3d(&once)) < 1e-12);
        let thrice = once.rotate_shared().rotate_shared();
        prop_assert_eq!(thrice.shared(), r.shared());
        prop_assert!((thrice.x() - r.x()).abs() < 1e-12 && (thrice.y() - r.y()).abs() < 1e-12);
    }

    #[test]
    fn flip_keeps_embedding_and_is_involution(r in edge_rep()) {
        let flipped = flip_home_face(&r).unwrap();
        prop_assert!(dist3(embed_3d(&r), embed_3d(&flipped)) < 1e-12);
        let back = flip_home_face(&flipped).unwrap();
        prop_assert_eq!(back.home(), r.home());
        prop_assert!((back.x() - r.x()).abs() < 1e-15);
    }

    #[test]
    fn canonicalize_is_idempotent(r in any_rep()) {
        let p = canonicalize(&r).unwrap();
        let q = canonicalize(p.representation()).unwrap();
        prop_assert_eq!(p, q);
        prop_assert!(dist3(embed_3d(&r), embed_3d(p.representation())) < 1e-9);
    }

    #[test]
    fn all_representations_give_one_point(r in any_rep(), k in 0usize..3) {
        let mut s = r;
        for _ in 0..k {
            s = s.rotate_shared();
        }
        prop_assert_eq!(canonicalize(&r).unwrap().home(), canonicalize(&s).unwrap().home());
        prop_assert!(canonicalize(&r).unwrap().coincides(&canonicalize(&s).unwrap()));
    }

    #[test]
    fn formula_matches_layout(a in any_point(), b in any_point()) {
        let (p1, p2) = (a.representation(), b.representation());
        let rel = relation(p1.home(), p2.home());
        prop_assume!(rel != FaceRelation::Same);
        let frame = canonical_frame(p1.home(), p1.shared(), p2.home()).unwrap().frame;
        for &id in LandscapeId::for_relation(rel) {
            let len = trail_length(id, p1, p2, &frame).unwrap();
            let tr = trail_crossings(id, p1, p2, &frame).unwrap();
            prop_assert!((len - tr.chord_length()).abs() < 1e-12, "{}", id);
            prop_assert!((len - chain_chord(&tr.faces, &a, &b).unwrap()).abs() < 1e-12, "{}", id);
        }
    }

    #[test]
    fn matches_exhaustive_unfolding(a in any_point(), b in any_point()) {
        let d = surface_distance(&a, &b);
        prop_assert!((d.distance - unfold_geodesic(&a, &b, 8)).abs() <= 1e-9);
        prop_assert!(!d.fallback);
    }

    #[test]
    fn distance_is_symmetric(a in any_point(), b in any_point()) {
        let ab = surface_distance(&a, &b).distance;
        let ba = surface_distance(&b, &a).distance;
        prop_assert!((ab - ba).abs() <= 1e-12);
        prop_assert!(ab >= 0.0);
        prop_assert_eq!(surface_distance(&a, &a).distance, 0.0);
    }

    #[test]
    fn triangle_inequality(a in any_point(), b in any_point(), c in any_point()) {
        let ab = surface_distance(&a, &b).distance;
        let bc = surface_distance(&b, &c).distance;
        let ac = surface_distance(&a, &c).distance;
        prop_assert!(ac <= ab + bc + 1e-9);
    }

    #[test]
    fn bounded_below_by_chord(a in any_point(), b in any_point()) {
        prop_assert!(chord_3d(&a, &b) <= surface_distance(&a, &b).distance + 1e-12);
    }

    #[test]
    fn independent_of_input_representation(r1 in any_rep(), r2 in any_rep(), k in 1usize..3) {
        let base = surface_distance(&canonicalize(&r1).unwrap(), &canonicalize(&r2).unwrap()).distance;
        let mut s = r1;
        for _ in 0..k {
            s = s.rotate_shared();
        }
        let other = surface_distance(&canonicalize(&s).unwrap(), &canonicalize(&r2).unwrap()).distance;
        prop_assert!((base - other).abs() < 1e-12);
    }

    #[test]
    fn edge_points_agree_across_faces(r in edge_rep(), b in any_point()) {
        let a1 = canonicalize(&r).unwrap();
        let a2 = canonicalize(&flip_home_face(&r).unwrap()).unwrap();
        let d1 = surface_distance(&a1, &b).distance;
        let d2 = surface_distance(&a2, &b).distance;
        prop_assert!((d1 - d2).abs() < 1e-12);
    }

    #[test]
    fn single_precision_tracks_double(a in any_point(), b in any_point()) {
        let d64 = surface_distance(&a, &b).distance;
        let d32 = surface_distance(&a.cast::<f32>(), &b.cast::<f32>()).distance;
        prop_assert!((d64 - d32 as f64).abs() < 1e-4, "{} vs {}", d64, d32);
    }

    #[test]
    fn longer_paths_never_win(a in any_point(), b in any_point()) {
        let d = surface_distance(&a, &b).distance;
        for path in enumerate_dual_paths(a.home(), b.home(), 8) {
            if path.len() < 5 {
                continue;
            }
            if let Some(len) = chain_chord(&path, &a, &b) {
                prop_assert!(len >= d - 1e-9, "{:?}: {} < {}", path, len, d);
            }
        }
    }

    #[test]
    fn boundary_points_match_exhaustive_unfolding(r in edge_rep(), b in any_point(), v in 0usize..6) {
        let a = canonicalize(&r).unwrap();
        let d = surface_distance(&a, &b);
        prop_assert!((d.distance - unfold_geodesic(&a, &b, 8)).abs() <= 1e-9);
        let corner = canonicalize(&vertex_representations::<f64>(topology::VertexLabel::ALL[v])[0]).unwrap();
        let dv = surface_distance(&corner, &a);
        prop_assert!((dv.distance - unfold_geodesic(&corner, &a, 8)).abs() <= 1e-9);
    }
}
