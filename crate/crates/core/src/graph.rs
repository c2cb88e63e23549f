//! Rotation-system graphs, faces and duals.
//!
//! A rotation lists the neighbors of a vertex in cyclic order. Faces are
//! orbits of the dart map `u -> v  ↦  v -> prev_v(u)`, where `prev_v(u)` is
//! the neighbor preceding `u` in the rotation of `v`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::connectivity;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    cycle: Vec<usize>,
}

impl Face {
    pub fn new(cycle: Vec<usize>) -> Self {
        Face { cycle }
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_triangle(&self) -> bool {
        self.cycle.len() == 3
    }

    pub fn contains(&self, v: usize) -> bool {
        self.cycle.contains(&v)
    }

    /// The same cycle read from `v`.
    pub fn starting_at(&self, v: usize) -> Option<Face> {
        let i = self.cycle.iter().position(|&x| x == v)?;
        let mut c = Vec::with_capacity(self.cycle.len());
        c.extend_from_slice(&self.cycle[i..]);
        c.extend_from_slice(&self.cycle[..i]);
        Some(Face { cycle: c })
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.cycle.clone();
        v.sort_unstable();
        v
    }

    /// True when the cycle visits no vertex twice.
    pub fn is_simple(&self) -> bool {
        let s = self.sorted_vertices();
        s.windows(2).all(|w| w[0] != w[1])
    }
}

/// Vertex degrees in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_graphical_parity(&self) -> bool {
        self.sum() % 2 == 0
    }

    pub fn count(&self, d: usize) -> usize {
        self.0.iter().filter(|&&x| x == d).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rot: Vec<Vec<usize>>,
    labels: BTreeMap<String, usize>,
}

impl EmbeddedGraph {
    /// Builds a graph from rotations, checking range, loops, repeats and symmetry.
    pub fn from_rotations(rot: Vec<Vec<usize>>) -> Result<Self, Error> {
        let g = EmbeddedGraph {
            rot,
            labels: BTreeMap::new(),
        };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_rotations_unchecked(rot: Vec<Vec<usize>>) -> Self {
        EmbeddedGraph {
            rot,
            labels: BTreeMap::new(),
        }
    }

    /// Rotations taken in increasing neighbor order. This is not an embedding
    /// in general; see [`crate::planarity::embed`] for that.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut rot = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order,
                });
            }
            rot[u].push(v);
            rot[v].push(u);
        }
        for r in rot.iter_mut() {
            r.sort_unstable();
        }
        Self::from_rotations(rot)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let p = self.rot.len();
        for (u, r) in self.rot.iter().enumerate() {
            let mut seen = r.clone();
            seen.sort_unstable();
            for w in seen.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedNeighbor {
                        vertex: u,
                        neighbor: w[0],
                    });
                }
            }
            for &v in r {
                if v >= p {
                    return Err(Error::VertexOutOfRange { vertex: v, order: p });
                }
                if v == u {
                    return Err(Error::Loop(u));
                }
            }
        }
        for (u, r) in self.rot.iter().enumerate() {
            for &v in r {
                if !self.rot[v].contains(&u) {
                    return Err(Error::Asymmetric { u, v });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.rot.len()
    }

    pub fn size(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rot.iter().map(Vec::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn max_degree(&self) -> usize {
        self.rot.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rot.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.rot[u].len() <= self.rot[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.rot[a].contains(&b)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::with_capacity(self.size());
        for (u, r) in self.rot.iter().enumerate() {
            for &v in r {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e.sort_unstable();
        e
    }

    pub fn labels(&self) -> &BTreeMap<String, usize> {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.get(name).copied()
    }

    pub fn set_label(&mut self, name: &str, v: usize) {
        self.labels.insert(String::from(name), v);
    }

    pub fn remove_label(&mut self, name: &str) {
        self.labels.remove(name);
    }

    pub fn clear_labels(&mut self) {
        self.labels.clear();
    }

    pub fn with_label(mut self, name: &str, v: usize) -> Self {
        self.set_label(name, v);
        self
    }

    pub fn is_connected(&self) -> bool {
        let p = self.rot.len();
        if p == 0 {
            return true;
        }
        let mut seen = vec![false; p];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.rot[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == p
    }

    pub fn faces(&self) -> Vec<Face> {
        Darts::new(self).faces()
    }

    pub fn face_count(&self) -> usize {
        Darts::new(self).face_ids().1
    }

    /// Genus-zero test `p - q + F = 2`.
    pub fn euler_valid(&self) -> Result<bool, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let f = self.face_count() as i64;
        Ok(self.order() as i64 - self.size() as i64 + f == 2)
    }

    pub fn is_triangulation(&self) -> bool {
        self.faces().iter().all(Face::is_triangle)
    }

    /// The reflected embedding: every rotation reversed.
    pub fn mirror(&self) -> EmbeddedGraph {
        let rot = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph {
            rot,
            labels: self.labels.clone(),
        }
    }

    /// The face traced from the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<Face> {
        if !self.rot[u].contains(&v) {
            return None;
        }
        let mut cycle = vec![u];
        let (mut a, mut b) = (u, v);
        loop {
            let j = self.rot[b].iter().position(|&x| x == a)?;
            let d = self.rot[b].len();
            let c = self.rot[b][(j + d - 1) % d];
            if b == u && c == v {
                break;
            }
            cycle.push(b);
            a = b;
            b = c;
            if cycle.len() > 2 * self.size() + 1 {
                return None;
            }
        }
        Some(Face { cycle })
    }

    /// The successor of dart `u -> v`, or `None` if `uv` is not an edge.
    pub fn next_dart(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let j = self.rot[v].iter().position(|&x| x == u)?;
        let d = self.rot[v].len();
        Some((v, self.rot[v][(j + d - 1) % d]))
    }

    /// True when `f` is traced, in its stated direction, by the dart map.
    pub fn is_face(&self, f: &Face) -> bool {
        let c = f.cycle();
        let k = c.len();
        if k < 3 {
            return false;
        }
        for i in 0..k {
            match self.next_dart(c[i], c[(i + 1) % k]) {
                Some((_, w)) if w == c[(i + 2) % k] => {}
                _ => return false,
            }
        }
        true
    }

    /// A triangular face on the vertex set `{a, b, c}`, in dart orientation.
    pub fn triangle_face(&self, a: usize, b: usize, c: usize) -> Option<Face> {
        for (x, y, z) in [(a, b, c), (b, a, c)] {
            if let Some((_, w)) = self.next_dart(x, y) {
                if w == z {
                    if let Some((_, w2)) = self.next_dart(y, z) {
                        if w2 == x {
                            return Some(Face::new(vec![x, y, z]));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_polytopal(&self) -> bool {
        self.order() >= 4
            && self.is_connected()
            && self.euler_valid().unwrap_or(false)
            && connectivity::is_three_connected(self).unwrap_or(false)
    }

    /// The dual embedding: one vertex per face, in the order of [`Self::faces`].
    pub fn dualize(&self) -> Result<EmbeddedGraph, Error> {
        if !self.is_polytopal() {
            return Err(Error::NotPolytopal);
        }
        let darts = Darts::new(self);
        let (face_of, nf) = darts.face_ids();
        let mut rot = vec![Vec::new(); nf];
        let mut done = vec![false; darts.count()];
        for d0 in 0..darts.count() {
            if done[d0] {
                continue;
            }
            let f = face_of[d0];
            let mut d = d0;
            loop {
                done[d] = true;
                rot[f].push(face_of[darts.rev[d]]);
                d = darts.next(d);
                if d == d0 {
                    break;
                }
            }
        }
        EmbeddedGraph::from_rotations(rot)
    }

    /// Adjacency rows as bit sets, available up to 64 vertices.
    pub fn adjacency_bits(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.rot
                .iter()
                .map(|r| r.iter().fold(0u64, |m, &v| m | (1u64 << v)))
                .collect(),
        )
    }

    pub(crate) fn rot_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.rot
    }

    /// Deletes the edge `uv` if present; the embedding stays consistent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let Some(i) = self.rot[u].iter().position(|&x| x == v) else {
            return false;
        };
        self.rot[u].remove(i);
        if let Some(j) = self.rot[v].iter().position(|&x| x == u) {
            self.rot[v].remove(j);
        }
        true
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Option<EmbeddedGraph> {
        let mut g = self.clone();
        if g.remove_edge(u, v) {
            Some(g)
        } else {
            None
        }
    }
}

/// Dart numbering with reverse and successor tables.
pub(crate) struct Darts<'a> {
    g: &'a EmbeddedGraph,
    pub(crate) offset: Vec<usize>,
    pub(crate) rev: Vec<usize>,
    pub(crate) tail: Vec<usize>,
}

impl<'a> Darts<'a> {
    pub(crate) fn new(g: &'a EmbeddedGraph) -> Self {
        let p = g.rot.len();
        let mut offset = Vec::with_capacity(p + 1);
        let mut acc = 0;
        for r in &g.rot {
            offset.push(acc);
            acc += r.len();
        }
        offset.push(acc);
        let mut tail = Vec::with_capacity(acc);
        for (u, r) in g.rot.iter().enumerate() {
            tail.extend(core::iter::repeat(u).take(r.len()));
        }
        let mut sorted: Vec<(usize, usize, usize)> = Vec::with_capacity(acc);
        for (u, r) in g.rot.iter().enumerate() {
            for (i, &v) in r.iter().enumerate() {
                sorted.push((u, v, offset[u] + i));
            }
        }
        sorted.sort_unstable();
        let mut rev = vec![usize::MAX; acc];
        for &(u, v, d) in &sorted {
            if let Ok(k) = sorted.binary_search_by(|&(a, b, _)| (a, b).cmp(&(v, u))) {
                rev[d] = sorted[k].2;
            }
        }
        Darts {
            g,
            offset,
            rev,
            tail,
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.tail.len()
    }

    pub(crate) fn next(&self, d: usize) -> usize {
        let r = self.rev[d];
        let w = self.tail[r];
        let deg = self.g.rot[w].len();
        let j = r - self.offset[w];
        self.offset[w] + (j + deg - 1) % deg
    }

    pub(crate) fn face_ids(&self) -> (Vec<usize>, usize) {
        let n = self.count();
        let mut face_of = vec![usize::MAX; n];
        let mut nf = 0;
        for d0 in 0..n {
            if face_of[d0] != usize::MAX {
                continue;
            }
            let mut d = d0;
            while face_of[d] == usize::MAX {
                face_of[d] = nf;
                d = self.next(d);
            }
            nf += 1;
        }
        (face_of, nf)
    }

    pub(crate) fn faces(&self) -> Vec<Face> {
        let n = self.count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for d0 in 0..n {
            if seen[d0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = d0;
            while !seen[d] {
                seen[d] = true;
                cycle.push(self.tail[d]);
                d = self.next(d);
            }
            out.push(Face { cycle });
        }
        out
    }
}
