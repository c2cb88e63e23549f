//! Three-connectivity.
//!
//! On a genus-zero embedding the test is local: a connected plane graph with
//! at least four vertices is 3-connected exactly when every face is a simple
//! cycle and any two faces meet in nothing, one vertex, or one edge. Simple
//! triangulations pass trivially. Other embeddings fall back to counting
//! vertex-disjoint paths with unit-capacity augmentation.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Darts, EmbeddedGraph};

pub fn is_three_connected(g: &EmbeddedGraph) -> Result<bool, Error> {
    if g.order() < 4 {
        return Err(Error::TooSmall {
            order: g.order(),
            min: 4,
        });
    }
    if !g.is_connected() {
        return Ok(false);
    }
    if g.min_degree() < 3 {
        return Ok(false);
    }
    match g.euler_valid() {
        Ok(true) => Ok(face_criterion(g)),
        _ => Ok(three_connected_by_paths(g)),
    }
}

/// Face-intersection test. Assumes a connected genus-zero embedding.
pub fn face_criterion(g: &EmbeddedGraph) -> bool {
    let darts = Darts::new(g);
    let (face_of, nf) = darts.face_ids();
    let mut len = vec![0usize; nf];
    for &f in &face_of {
        len[f] += 1;
    }
    if len.iter().all(|&l| l == 3) {
        // Simple triangulations with p >= 4 are 3-connected.
        return true;
    }
    // Each face must visit each vertex at most once.
    for u in 0..g.order() {
        let lo = darts.offset[u];
        let hi = darts.offset[u + 1];
        let mut fs: Vec<usize> = face_of[lo..hi].to_vec();
        fs.sort_unstable();
        if fs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    let mut edge_pairs: Vec<(usize, usize)> = Vec::with_capacity(darts.count() / 2);
    for d in 0..darts.count() {
        let a = face_of[d];
        let b = face_of[darts.rev[d]];
        if a == b {
            return false;
        }
        if a < b {
            edge_pairs.push((a, b));
        }
    }
    edge_pairs.sort_unstable();
    if edge_pairs.windows(2).any(|w| w[0] == w[1]) {
        // Two faces sharing two edges share at least three vertices or bound a digon.
        return false;
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..g.order() {
        let lo = darts.offset[u];
        let hi = darts.offset[u + 1];
        let fs = &face_of[lo..hi];
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                let (a, b) = if fs[i] < fs[j] {
                    (fs[i], fs[j])
                } else {
                    (fs[j], fs[i])
                };
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_unstable();
    let mut i = 0;
    while i < pairs.len() {
        let mut j = i;
        while j < pairs.len() && pairs[j] == pairs[i] {
            j += 1;
        }
        let shared = j - i;
        if shared > 2 {
            return false;
        }
        if shared == 2 && edge_pairs.binary_search(&pairs[i]).is_err() {
            return false;
        }
        i = j;
    }
    true
}

/// Exact test by local connectivity between non-adjacent pairs.
pub fn three_connected_by_paths(g: &EmbeddedGraph) -> bool {
    let p = g.order();
    if p < 4 || !g.is_connected() {
        return false;
    }
    for s in 0..p {
        for t in s + 1..p {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, 3) < 3 {
                return false;
            }
        }
    }
    // K_p for p >= 4 has no non-adjacent pair and is 3-connected.
    true
}

/// Number of internally vertex-disjoint `s`-`t` paths, capped at `cap`.
pub fn local_connectivity(g: &EmbeddedGraph, s: usize, t: usize, cap: usize) -> usize {
    // Vertex v splits into v_in = 2v and v_out = 2v + 1.
    let p = g.order();
    let n = 2 * p;
    let mut head: Vec<usize> = Vec::new();
    let mut capv: Vec<i32> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut add = |u: usize, v: usize, c: i32, head: &mut Vec<usize>, capv: &mut Vec<i32>| {
        adj[u].push(head.len());
        head.push(v);
        capv.push(c);
        adj[v].push(head.len());
        head.push(u);
        capv.push(0);
    };
    for v in 0..p {
        let c = if v == s || v == t { cap as i32 } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut head, &mut capv);
    }
    for u in 0..p {
        for &v in g.rotation(u) {
            add(2 * u + 1, 2 * v, 1, &mut head, &mut capv);
        }
    }
    let src = 2 * s + 1;
    let dst = 2 * t;
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[src] = true;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            if u == dst {
                break;
            }
            for &e in &adj[u] {
                let v = head[e];
                if capv[e] > 0 && !seen[v] {
                    seen[v] = true;
                    prev[v] = e;
                    queue.push_back(v);
                }
            }
        }
        if !seen[dst] {
            break;
        }
        let mut v = dst;
        while v != src {
            let e = prev[v];
            capv[e] -= 1;
            capv[e ^ 1] += 1;
            v = head[e ^ 1];
        }
        flow += 1;
    }
    flow
}
