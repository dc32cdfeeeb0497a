use octa_geodesic::topology::{enumerate_dual_paths, verify_tables};
use octa_geodesic::*;

#[test]
fn tables_are_consistent() {
    verify_tables().unwrap();
}

#[test]
fn shortest_dual_path_counts() {
    let mut classes = [0usize; 3];
    for a in FaceId::ALL {
        for b in FaceId::ALL {
            if a >= b {
                continue;
            }
            let (slot, len, count) = match relation(a, b) {
                FaceRelation::Adjacent => (0, 2, 1),
                FaceRelation::NeitherAdjacentNorOpposite => (1, 3, 2),
                FaceRelation::Opposite => (2, 4, 6),
                FaceRelation::Same => unreachable!(),
            };
            classes[slot] += 1;
            let paths = enumerate_dual_paths(a, b, len);
            assert_eq!(paths.len(), count, "{a}-{b}");
            assert!(paths.iter().all(|p| p.len() == len));
        }
    }
    assert_eq!(classes, [12, 12, 4]);
}

#[test]
fn canonical_landscapes_match_enumeration() {
    for a in FaceId::ALL {
        for b in FaceId::ALL {
            if a == b {
                continue;
            }
            let rel = relation(a, b);
            let shared = topology::neighbors_ccw(a)[0];
            let frame = canonical_frame(a, shared, b).unwrap().frame;
            let mut from_roles: Vec<Vec<FaceId>> = LandscapeId::for_relation(rel)
                .iter()
                .map(|&id| LandscapeInstance::new(id, frame).dual_path)
                .collect();
            let len = from_roles[0].len();
            let mut enumerated = topology::enumerate_dual_paths(a, b, len);
            from_roles.sort();
            enumerated.sort();
            assert_eq!(from_roles, enumerated, "{a}-{b}");
        }
    }
}
