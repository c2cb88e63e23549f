#![allow(dead_code)]

use spectope_core::planarity::embed;
use spectope_core::EmbeddedGraph;

pub fn tetrahedron() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
}

/// The unique plane embedding of a 3-connected planar edge list.
pub fn embedded(n: usize, edges: &[(usize, usize)]) -> EmbeddedGraph {
    embed(&EmbeddedGraph::from_edges(n, edges).unwrap()).unwrap()
}

pub fn cube() -> EmbeddedGraph {
    let mut e = Vec::new();
    for i in 0..4 {
        e.extend([(i, (i + 1) % 4), (4 + i, 4 + (i + 1) % 4), (i, i + 4)]);
    }
    embedded(8, &e)
}

pub fn octahedron() -> EmbeddedGraph {
    let e: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        // 0-3, 1-4 and 2-5 are the opposite pairs.
        .filter(|&(u, v)| v != u + 3)
        .collect();
    embedded(6, &e)
}

/// Every degree-sum and face-count identity a plane graph has to satisfy.
pub fn assert_plane_invariants(g: &EmbeddedGraph) {
    let (p, q) = (g.order(), g.size());
    assert_eq!(g.degrees().iter().sum::<usize>(), 2 * q);
    assert_eq!(g.euler_valid(), Ok(true));
    assert!(q + 6 <= 3 * p);
}
