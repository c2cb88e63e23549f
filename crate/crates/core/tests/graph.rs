mod common;

use common::*;
use spectope_core::builders::{build_a, build_b, build_r};
use spectope_core::canon::{canonical_form, isomorphic};
use spectope_core::connectivity::is_three_connected;
use spectope_core::planarity::embed;
use spectope_core::{EmbeddedGraph, Error};

#[test]
fn face_counts() {
    let t = tetrahedron().faces();
    assert_eq!(t.len(), 4);
    assert!(t.iter().all(|f| f.is_triangle()));
    let a = build_a(14).unwrap().faces();
    assert_eq!(a.len(), 2 * (14 - 5) - 4);
    assert!(a.iter().all(|f| f.is_triangle()));
    let c = cube().faces();
    assert_eq!(c.len(), 6);
    assert!(c.iter().all(|f| f.len() == 4));
}

#[test]
fn asymmetric_rotation_is_rejected() {
    let r = EmbeddedGraph::from_rotations(vec![vec![1, 2], vec![0], vec![1]]);
    assert!(matches!(r, Err(Error::Asymmetric { .. })));
}

#[test]
fn euler_check() {
    assert_eq!(tetrahedron().euler_valid(), Ok(true));
    // K5 with rotations in increasing order, and with a shuffled one.
    let k5: Vec<Vec<usize>> = (0..5).map(|v| (0..5).filter(|&w| w != v).collect()).collect();
    assert_eq!(EmbeddedGraph::from_rotations(k5.clone()).unwrap().euler_valid(), Ok(false));
    let mut other = k5;
    other[0].swap(1, 2);
    other[3].reverse();
    assert_eq!(EmbeddedGraph::from_rotations(other).unwrap().euler_valid(), Ok(false));
    assert_eq!(build_b(14).unwrap().graph.euler_valid(), Ok(true));
    let two = EmbeddedGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(two.euler_valid(), Err(Error::Disconnected));
}

#[test]
fn three_connectivity_examples() {
    assert_eq!(is_three_connected(&tetrahedron()), Ok(true));
    // Two tetrahedra 0123 and 0145 share the pair {0, 1}: a cut pair.
    let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)];
    assert_eq!(is_three_connected(&embedded(6, &e)), Ok(false));
    assert_eq!(is_three_connected(&build_r(14).unwrap().0), Ok(true));
    let tri = EmbeddedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(matches!(is_three_connected(&tri), Err(Error::TooSmall { .. })));
}

#[test]
fn embedding_k4() {
    let k4 = EmbeddedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let g = embed(&k4).unwrap();
    assert_eq!(g.euler_valid(), Ok(true));
    assert_eq!(g.face_count(), 4);
}

#[test]
fn duals() {
    assert_eq!(isomorphic(&tetrahedron().dualize().unwrap(), &tetrahedron()), Some(true));
    assert_eq!(isomorphic(&cube().dualize().unwrap(), &octahedron()), Some(true));
    let d = build_r(14).unwrap().0.dualize().unwrap();
    let mut sizes: Vec<usize> = d.faces().iter().map(|f| f.len()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    assert_eq!(sizes, (3..=14).collect::<Vec<_>>());
    let path = EmbeddedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(path.dualize(), Err(Error::NotPolytopal));
}

#[test]
fn double_dual_keeps_the_class() {
    for n in 3..=14 {
        let g = build_r(n).unwrap().0;
        let dd = g.dualize().unwrap().dualize().unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&dd), "n = {n}");
    }
}

#[test]
fn polytopal_means_all_three_checks() {
    for n in 3..=40 {
        let g = build_r(n).unwrap().0;
        assert!(g.is_polytopal());
        assert!(g.is_connected());
        assert_eq!(is_three_connected(&g), Ok(true));
        assert_plane_invariants(&g);
    }
}
