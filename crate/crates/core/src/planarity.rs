//! Left-right planarity test with embedding extraction.
//!
//! Non-recursive formulation of the LR criterion: orient by DFS, compute
//! lowpoints and nesting depths, then test the conflict-pair constraints and
//! read the rotation system from the signed nesting order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::EmbeddedGraph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    g: &'a EmbeddedGraph,
    offset: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
    rev: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    parent_edge: Vec<usize>,
    ordered: Vec<Vec<usize>>,
    refs: Vec<usize>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    roots: Vec<usize>,
}

impl<'a> Lr<'a> {
    fn new(g: &'a EmbeddedGraph) -> Self {
        let p = g.order();
        let mut offset = Vec::with_capacity(p + 1);
        let mut acc = 0;
        for v in 0..p {
            offset.push(acc);
            acc += g.degree(v);
        }
        offset.push(acc);
        let mut head = Vec::with_capacity(acc);
        let mut tail = Vec::with_capacity(acc);
        for v in 0..p {
            for &w in g.rotation(v) {
                head.push(w);
                tail.push(v);
            }
        }
        let mut rev = vec![NONE; acc];
        for d in 0..acc {
            let (v, w) = (tail[d], head[d]);
            let j = g.rotation(w).iter().position(|&x| x == v).unwrap();
            rev[d] = offset[w] + j;
        }
        Lr {
            g,
            offset,
            head,
            tail,
            rev,
            oriented: vec![false; acc],
            height: vec![NONE; p],
            lowpt: vec![0; acc],
            lowpt2: vec![0; acc],
            nesting: vec![0; acc],
            parent_edge: vec![NONE; p],
            ordered: vec![Vec::new(); p],
            refs: vec![NONE; acc],
            side: vec![1; acc],
            stack: Vec::new(),
            stack_bottom: vec![0; acc],
            lowpt_edge: vec![NONE; acc],
            roots: Vec::new(),
        }
    }

    fn lowest(&self, q: &ConflictPair) -> usize {
        if q.left.is_empty() {
            return self.lowpt[q.right.low];
        }
        if q.right.is_empty() {
            return self.lowpt[q.left.low];
        }
        self.lowpt[q.left.low].min(self.lowpt[q.right.low])
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn orient(&mut self, root: usize) {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.g.order()];
        let mut skip_init = vec![false; self.head.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.g.degree(v) {
                let vw = self.offset[v] + ind[v];
                let w = self.head[vw];
                if !skip_init[vw] {
                    if self.oriented[vw] || self.oriented[self.rev[vw]] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        stack.push(v);
                        stack.push(w);
                        skip_init[vw] = true;
                        break;
                    }
                    self.lowpt[vw] = self.height[w];
                }
                self.nesting[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.g.order()];
        let mut skip_init = vec![false; self.head.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            let mut skip_final = false;
            while ind[v] < self.ordered[v].len() {
                let ei = self.ordered[v][ind[v]];
                let w = self.head[ei];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if ei == self.parent_edge[w] {
                        stack.push(v);
                        stack.push(w);
                        skip_init[ei] = true;
                        skip_final = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::EMPTY,
                        right: Interval { low: ei, high: ei },
                    });
                }
                if self.lowpt[ei] < self.height[v] {
                    if ind[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !skip_final && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        loop {
            let mut q = self.stack.pop().unwrap();
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.refs[p.right.low] = q.right.high;
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let q = self.stack.pop().unwrap();
            if q.left.low != NONE {
                self.side[q.left.low] = -1;
            }
        }
        if let Some(mut q) = self.stack.pop() {
            while q.left.high != NONE && self.head[q.left.high] == u {
                q.left.high = self.refs[q.left.high];
            }
            if q.left.high == NONE && q.left.low != NONE {
                self.refs[q.left.low] = q.right.low;
                self.side[q.left.low] = -1;
                q.left.low = NONE;
            }
            while q.right.high != NONE && self.head[q.right.high] == u {
                q.right.high = self.refs[q.right.high];
            }
            if q.right.high == NONE && q.right.low != NONE {
                self.refs[q.right.low] = q.left.low;
                self.side[q.right.low] = -1;
                q.right.low = NONE;
            }
            self.stack.push(q);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        let mut cur = e;
        while self.refs[cur] != NONE {
            cur = self.refs[cur];
            chain.push(cur);
        }
        // Resolve from the far end so every link sees a finished sign.
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.refs[a] = NONE;
        }
        self.side[e]
    }

    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        let p = self.g.order();
        if p > 2 && self.g.size() > 3 * p - 6 {
            return None;
        }
        for v in 0..p {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        self.sort_ordered();
        let roots = self.roots.clone();
        for &r in &roots {
            if !self.test(r) {
                return None;
            }
        }
        for d in 0..self.head.len() {
            if self.oriented[d] {
                let s = self.sign(d);
                self.nesting[d] *= s;
            }
        }
        self.sort_ordered();

        let mut emb = Embedding::new(p);
        for v in 0..p {
            let mut prev = NONE;
            for &d in &self.ordered[v] {
                let w = self.head[d];
                emb.add_cw(v, w, prev);
                prev = w;
            }
        }
        let mut left_ref = vec![NONE; p];
        let mut right_ref = vec![NONE; p];
        for &r in &roots {
            let mut stack = vec![r];
            let mut ind = vec![0usize; p];
            while let Some(v) = stack.pop() {
                while ind[v] < self.ordered[v].len() {
                    let ei = self.ordered[v][ind[v]];
                    ind[v] += 1;
                    let w = self.head[ei];
                    if ei == self.parent_edge[w] {
                        emb.add_first(w, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        stack.push(v);
                        stack.push(w);
                        break;
                    }
                    if self.side[ei] == 1 {
                        emb.add_cw(w, v, right_ref[w]);
                    } else {
                        emb.add_ccw(w, v, left_ref[w]);
                        left_ref[w] = v;
                    }
                }
            }
        }
        Some(emb.rot)
    }

    fn sort_ordered(&mut self) {
        for v in 0..self.g.order() {
            let lo = self.offset[v];
            let hi = self.offset[v + 1];
            let mut out: Vec<usize> = (lo..hi).filter(|&d| self.oriented[d]).collect();
            let nesting = &self.nesting;
            out.sort_by_key(|&d| nesting[d]);
            self.ordered[v] = out;
        }
    }
}

/// Clockwise neighbor lists with a distinguished first neighbor.
struct Embedding {
    rot: Vec<Vec<usize>>,
    first: Vec<usize>,
}

impl Embedding {
    fn new(p: usize) -> Self {
        Embedding {
            rot: vec![Vec::new(); p],
            first: vec![NONE; p],
        }
    }

    /// Inserts `end` right after `reference` around `start`.
    fn add_cw(&mut self, start: usize, end: usize, reference: usize) {
        if reference == NONE {
            debug_assert!(self.rot[start].is_empty());
            self.rot[start].push(end);
            self.first[start] = end;
            return;
        }
        let i = self.rot[start].iter().position(|&x| x == reference).unwrap();
        self.rot[start].insert(i + 1, end);
    }

    /// Inserts `end` right before `reference` around `start`.
    fn add_ccw(&mut self, start: usize, end: usize, reference: usize) {
        if reference == NONE {
            self.add_cw(start, end, NONE);
            return;
        }
        let i = self.rot[start].iter().position(|&x| x == reference).unwrap();
        self.rot[start].insert(i, end);
        if reference == self.first[start] {
            self.first[start] = end;
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        if self.rot[start].is_empty() {
            self.add_cw(start, end, NONE);
        } else {
            let f = self.first[start];
            self.add_ccw(start, end, f);
        }
    }
}

/// A planar rotation system for the underlying graph of `g`, if one exists.
/// Labels are carried over.
pub fn embed(g: &EmbeddedGraph) -> Result<EmbeddedGraph, Error> {
    let rot = Lr::new(g)
        .run()
        .ok_or_else(|| Error::Infeasible(alloc::string::String::from("graph is not planar")))?;
    let mut out = EmbeddedGraph::from_rotations(rot)?;
    for (k, &v) in g.labels() {
        out.set_label(k, v);
    }
    Ok(out)
}

pub fn is_planar(g: &EmbeddedGraph) -> bool {
    Lr::new(g).run().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[(usize, usize)]) -> EmbeddedGraph {
        let p = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
        EmbeddedGraph::from_edges(p, edges).unwrap()
    }

    fn check_embedding(g: &EmbeddedGraph) {
        let h = embed(g).unwrap();
        assert_eq!(h.edges(), g.edges());
        // Genus zero on every component.
        let comps = {
            let p = g.order();
            let mut seen = vec![false; p];
            let mut c = 0;
            for s in 0..p {
                if !seen[s] {
                    c += 1;
                    let mut st = vec![s];
                    seen[s] = true;
                    while let Some(u) = st.pop() {
                        for &v in g.rotation(u) {
                            if !seen[v] {
                                seen[v] = true;
                                st.push(v);
                            }
                        }
                    }
                }
            }
            c as i64
        };
        let isolated = (0..g.order()).filter(|&v| g.degree(v) == 0).count() as i64;
        let f = h.face_count() as i64 + isolated;
        assert_eq!(h.order() as i64 - h.size() as i64 + f, 2 * comps);
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        let mut k5 = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                k5.push((a, b));
            }
        }
        assert!(!is_planar(&graph(&k5)));
        let mut k33 = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                k33.push((a, b));
            }
        }
        assert!(!is_planar(&graph(&k33)));
    }

    #[test]
    fn goldner_harary_embeds() {
        let e = [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 7),
            (1, 8),
            (1, 10),
            (1, 11),
            (2, 3),
            (2, 4),
            (2, 6),
            (2, 7),
            (2, 9),
            (2, 10),
            (2, 11),
            (3, 4),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 7),
            (6, 7),
            (7, 8),
            (7, 9),
            (7, 10),
            (8, 10),
            (9, 10),
            (10, 11),
        ];
        let g = graph(&e);
        assert!(is_planar(&g));
        check_embedding(&g);
    }

    #[test]
    fn subdivided_obstruction() {
        // Petersen-like graph with no literal K5 or K3,3.
        let e = [
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 6),
            (2, 3),
            (3, 5),
            (3, 7),
            (4, 5),
            (4, 6),
            (4, 7),
        ];
        assert!(!is_planar(&graph(&e)));
    }

    #[test]
    fn grid_embeds() {
        let e = [
            (0, 1),
            (1, 2),
            (3, 4),
            (4, 5),
            (6, 7),
            (7, 8),
            (0, 3),
            (3, 6),
            (1, 4),
            (4, 7),
            (2, 5),
            (5, 8),
        ];
        check_embedding(&graph(&e));
    }
}
