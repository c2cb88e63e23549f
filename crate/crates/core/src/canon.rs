//! Canonical forms.
//!
//! Two flavors. [`canonical_form`] works on the abstract graph by colour
//! refinement and individualization over 64-bit adjacency rows, so it is
//! limited to 64 vertices. [`planar_code`] works on the embedding: the least
//! breadth-first map code over all darts and both orientations. For
//! 3-connected planar graphs the embedding is unique up to reflection, so the
//! planar code is a complete invariant of the abstract graph as well.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::EmbeddedGraph;

/// Adjacency rows of a graph under its canonical labeling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(adj: &[u64], mut cells: Partition) -> Partition {
    loop {
        let n = adj.len();
        let mut cell_mask = Vec::with_capacity(cells.len());
        for c in &cells {
            cell_mask.push(c.iter().fold(0u64, |m, &v| m | (1u64 << v)));
        }
        let mut out: Partition = Vec::with_capacity(n);
        let mut changed = false;
        for c in &cells {
            if c.len() == 1 {
                out.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| {
                    let sig = cell_mask
                        .iter()
                        .map(|&m| (adj[v] & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let before = out.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
            if out.len() - before > 1 {
                changed = true;
            }
        }
        cells = out;
        if !changed {
            return cells;
        }
    }
}

fn relabeled_rows(adj: &[u64], order: &[usize]) -> Vec<u64> {
    // order[i] = old vertex placed at new position i
    let n = adj.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut bits = adj[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1u64 << pos[w];
            }
            row
        })
        .collect()
}

fn search(adj: &[u64], cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = relabeled_rows(adj, &order);
        match best {
            Some((b, _)) if *b <= rows => {}
            _ => *best = Some((rows, order)),
        }
        return;
    };
    for &v in &cells[t] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![v]);
        next.push(cells[t].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[t + 1..]);
        search(adj, next, best);
    }
}

/// Canonical labeling as `new_id[old_id]`, for graphs of order at most 64.
pub fn canonical_labeling(g: &EmbeddedGraph) -> Option<Vec<usize>> {
    let adj = g.adjacency_bits()?;
    let n = adj.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (adj[v].count_ones(), v));
    let mut cells: Partition = Vec::new();
    for &v in &by_degree {
        match cells.last_mut() {
            Some(c) if adj[c[0]].count_ones() == adj[v].count_ones() => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(&adj, cells, &mut best);
    let (_, order) = best?;
    let mut new_id = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        new_id[v] = i;
    }
    Some(new_id)
}

pub fn canonical_form(g: &EmbeddedGraph) -> Option<CanonicalForm> {
    let lab = canonical_labeling(g)?;
    let adj = g.adjacency_bits()?;
    let mut order = vec![0; lab.len()];
    for (v, &i) in lab.iter().enumerate() {
        order[i] = v;
    }
    Some(CanonicalForm {
        order: g.order(),
        rows: relabeled_rows(&adj, &order),
    })
}

/// Abstract-graph isomorphism for graphs of order at most 64.
pub fn isomorphic(g: &EmbeddedGraph, h: &EmbeddedGraph) -> Option<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Some(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Some(false);
    }
    Some(canonical_form(g)? == canonical_form(h)?)
}

fn code_from(g: &EmbeddedGraph, u: usize, v: usize, mirror: bool, best: &[u32]) -> Option<Vec<u32>> {
    let p = g.order();
    let mut num = vec![0u32; p];
    let mut first = vec![usize::MAX; p];
    let mut queue = Vec::with_capacity(p);
    num[u] = 1;
    first[u] = v;
    queue.push(u);
    let mut next = 2;
    let mut code = Vec::with_capacity(2 * g.size() + p + 1);
    code.push(p as u32);
    let mut head = 0;
    // Tracks whether the prefix is still tied with `best`.
    let mut tied = !best.is_empty();
    if tied && (p as u32) > best[0] {
        return None;
    }
    let mut emit = |x: u32, code: &mut Vec<u32>| -> bool {
        let i = code.len();
        code.push(x);
        if tied {
            match x.cmp(&best[i]) {
                core::cmp::Ordering::Less => tied = false,
                core::cmp::Ordering::Greater => return false,
                core::cmp::Ordering::Equal => {}
            }
        }
        true
    };
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let r = g.rotation(x);
        let d = r.len();
        let s = r.iter().position(|&y| y == first[x]).unwrap();
        for k in 0..d {
            let y = if mirror { r[(s + d - k) % d] } else { r[(s + k) % d] };
            if num[y] == 0 {
                num[y] = next;
                next += 1;
                first[y] = x;
                queue.push(y);
            }
            if !emit(num[y], &mut code) {
                return None;
            }
        }
        if !emit(0, &mut code) {
            return None;
        }
    }
    Some(code)
}

/// Least breadth-first map code of a connected embedded graph, taken over
/// every starting dart and both orientations. Equal codes mean the
/// embeddings agree up to relabeling and reflection.
pub fn planar_code(g: &EmbeddedGraph) -> Vec<u32> {
    let mut best: Vec<u32> = Vec::new();
    for u in 0..g.order() {
        for &v in g.rotation(u) {
            for mirror in [false, true] {
                if let Some(c) = code_from(g, u, v, mirror, &best) {
                    if best.is_empty() || c < best {
                        best = c;
                    }
                }
            }
        }
    }
    if best.is_empty() {
        best.push(g.order() as u32);
    }
    best
}

/// Embedded isomorphism up to reflection.
pub fn same_map(g: &EmbeddedGraph, h: &EmbeddedGraph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && planar_code(g) == planar_code(h)
}
