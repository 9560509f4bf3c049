mod common;

use mediangle_core::{Graph, HyperplaneSystem, VertexSet};
use mediangle_periagroup::{cayley_ball, groups_isomorphic};
use mediangle_rotation::{cayley_action, GroupAction, rotation_subgroup, rotative_stabilizer, RotationError};

#[test]
fn prism_splits_as_two_times_three() {
    let (a, _) = common::z6_prism();
    let hs = HyperplaneSystem::new(a.graph(), None).unwrap();
    let vertical = hs.hyperplane_of(0, 3).unwrap();
    let d = rotation_subgroup(&a, &[vertical], 0).unwrap();
    assert!(d.passed, "{d:?}");
    assert_eq!(d.family, vec![vertical]);
    assert_eq!((d.group_order, d.rot.len(), d.stab_y.len()), (6, 2, 3));
    assert_eq!(d.y, VertexSet::from([0, 1, 2]));
    assert_eq!(d.presentation.vertex_count(), 1);
    assert!(d.presentation.group(0).has_order_two());
}

#[test]
fn hexagon_saturates_to_all_hyperplanes() {
    let (a, _) = common::s3_hexagon();
    let hs = HyperplaneSystem::new(a.graph(), None).unwrap();
    for j in 0..hs.len() {
        let d = rotation_subgroup(&a, &[j], 0).unwrap();
        assert!(d.passed);
        assert_eq!(d.family, vec![0, 1, 2]);
        assert_eq!((d.rot.len(), d.stab_y.len()), (6, 1));
        assert_eq!(d.y, VertexSet::from([0]));
        assert_eq!(d.presentation.edges(), vec![(0, 1, 3)]);
    }
}

#[test]
fn empty_seed_gives_trivial_rot() {
    let (a, _) = common::z6_prism();
    let d = rotation_subgroup(&a, &[], 4).unwrap();
    assert!(d.passed);
    assert_eq!(d.rot, vec![0]);
    assert_eq!(d.y.len(), 6);
    assert_eq!(d.stab_y.len(), 6);
    assert_eq!(d.presentation.vertex_count(), 0);
}

#[test]
fn prism_triangle_seed() {
    let (a, _) = common::z6_prism();
    let hs = HyperplaneSystem::new(a.graph(), None).unwrap();
    // all six triangle edges form one hyperplane with three sectors
    let triangles = hs.hyperplane_of(0, 1).unwrap();
    assert_eq!(hs.hyperplanes()[triangles].edges.len(), 6);
    assert_eq!(rotative_stabilizer(&a, &hs, triangles).unwrap().len(), 3);
    let d = rotation_subgroup(&a, &[triangles], 0).unwrap();
    assert!(d.passed);
    assert_eq!((d.rot.len(), d.stab_y.len()), (3, 2));
    assert_eq!(d.y, VertexSet::from([0, 3]));
}

#[test]
fn sector_action_is_required() {
    // the trivial group cannot permute the two sectors of an edge
    let a = GroupAction::new(Graph::complete(2), Vec::new(), 10).unwrap();
    assert!(matches!(rotation_subgroup(&a, &[0], 0), Err(RotationError::Precondition(_))));
    assert!(matches!(rotation_subgroup(&a, &[5], 0), Err(RotationError::Graph(_))));
}

#[test]
fn every_single_seed_on_cayley_graphs() {
    for (name, p) in common::finite_presentations() {
        let ball = cayley_ball(&p, None, 1000).unwrap();
        let (a, _) = cayley_action(&p, &ball).unwrap();
        let hs = HyperplaneSystem::new(a.graph(), None).unwrap();
        for j in 0..hs.len() {
            let d = rotation_subgroup(&a, &[j], 0).unwrap_or_else(|e| panic!("{name} seed {j}: {e}"));
            assert!(d.product_covers && d.trivial_intersection && d.basis_matches, "{name} {j}: {d:?}");
            assert_eq!(d.rot.len() * d.stab_y.len(), d.group_order);
            d.presentation.validate().unwrap();
            for h in d.presentation.groups() {
                assert!(p.groups().iter().any(|g| groups_isomorphic(g, h)), "{name} {j}");
            }
        }
    }
}
