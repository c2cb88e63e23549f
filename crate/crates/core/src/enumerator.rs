//! Exhaustive generation of small polytopes.
//!
//! Triangulations come first, grown one vertex at a time by inserting a
//! vertex of degree 3, 4 or 5; every triangulation has a vertex of degree at
//! most five whose removal leaves a smaller triangulation, so nothing is
//! missed. Polytopes of a given order are then reached from the
//! triangulations by deleting one edge at a time. 3-connectivity can only
//! be lost by deleting edges, and every non-triangulated polytope gains a
//! chord inside some face, so this level-by-level descent is complete.
//! Duplicates are removed by planar code.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::planar_code;
use crate::connectivity::face_criterion;
use crate::error::Error;
use crate::graph::EmbeddedGraph;
use crate::spectra::has_degree_spectrum;
use crate::transform::stellate_unchecked;

/// Default largest order; a full run stays well under a minute.
pub const DEFAULT_CAP: usize = 8;
/// Orders above this are refused.
pub const HARD_CAP: usize = 10;

fn k4() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations_unchecked(vec![
        vec![1, 2, 3],
        vec![0, 3, 2],
        vec![0, 1, 3],
        vec![0, 2, 1],
    ])
}

fn check_cap(order: usize) -> Result<(), Error> {
    if order > HARD_CAP {
        return Err(Error::CapExceeded {
            cap: HARD_CAP,
            requested: order,
        });
    }
    if order < 4 {
        return Err(Error::TooSmall { order, min: 4 });
    }
    Ok(())
}

fn insert(map: &mut BTreeMap<Vec<u32>, EmbeddedGraph>, g: EmbeddedGraph) {
    let c = planar_code(&g);
    map.entry(c).or_insert(g);
}

fn grow(t: &EmbeddedGraph, out: &mut BTreeMap<Vec<u32>, EmbeddedGraph>) {
    // Degree 3: split a face.
    for f in t.faces() {
        let mut g = t.clone();
        stellate_unchecked(&mut g, f.cycle());
        insert(out, g);
    }
    for (x, y) in t.edges() {
        // Degree 4: open the edge xy into a quadrilateral.
        let mut g = t.clone();
        g.remove_edge(x, y);
        let quad = g.faces().into_iter().find(|f| f.len() == 4).unwrap();
        stellate_unchecked(&mut g, quad.cycle());
        insert(out, g);
    }
    // Degree 5: open two consecutive edges at a into a pentagon.
    for a in 0..t.order() {
        let r = t.rotation(a);
        let d = r.len();
        if d < 4 {
            continue;
        }
        for i in 0..d {
            let mut g = t.clone();
            g.remove_edge(a, r[(i + 1) % d]);
            g.remove_edge(a, r[(i + 2) % d]);
            let pent = g.faces().into_iter().find(|f| f.len() == 5).unwrap();
            stellate_unchecked(&mut g, pent.cycle());
            insert(out, g);
        }
    }
}

/// All triangulations of the sphere with `order` vertices, up to isomorphism.
pub fn triangulations(order: usize) -> Result<Vec<EmbeddedGraph>, Error> {
    check_cap(order)?;
    let mut level = vec![k4()];
    for _ in 5..=order {
        let mut next = BTreeMap::new();
        for t in &level {
            grow(t, &mut next);
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All polytopes with exactly `order` vertices, up to isomorphism, sorted
/// by edge count and then planar code.
pub fn polytopes_of_order(order: usize) -> Result<Vec<EmbeddedGraph>, Error> {
    let tris = triangulations(order)?;
    let mut out: Vec<(usize, Vec<u32>, EmbeddedGraph)> = Vec::new();
    let mut level: BTreeMap<Vec<u32>, EmbeddedGraph> =
        tris.into_iter().map(|g| (planar_code(&g), g)).collect();
    while !level.is_empty() {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for (u, v) in g.edges() {
                if g.degree(u) <= 3 || g.degree(v) <= 3 {
                    continue;
                }
                let h = g.without_edge(u, v).unwrap();
                if face_criterion(&h) {
                    insert(&mut next, h);
                }
            }
        }
        for (c, g) in core::mem::take(&mut level) {
            out.push((g.size(), c, g));
        }
        level = next;
    }
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|x| x.2).collect())
}

/// Every polytope of order at most `max_order`, by order, then edges, then code.
pub fn enumerate_polytopes(max_order: usize) -> Result<Vec<EmbeddedGraph>, Error> {
    check_cap(max_order)?;
    let mut all = Vec::new();
    for p in 4..=max_order {
        all.extend(polytopes_of_order(p)?);
    }
    Ok(all)
}

/// Evidence for the small entries of the minimal-order table.
#[derive(Clone, Debug)]
pub struct Table1Certificate {
    pub n: usize,
    /// Orders scanned without finding a full spectrum.
    pub below: Vec<usize>,
    /// The minimal order found.
    pub order: usize,
    pub witnesses: Vec<EmbeddedGraph>,
}

/// Scans orders upward from 4 until some polytope has every degree 3..=n.
pub fn certify_table1_small(n: usize, cap: usize) -> Result<Table1Certificate, Error> {
    if n < 3 {
        return Err(Error::Domain {
            what: "n",
            value: n as i64,
        });
    }
    let mut below = Vec::new();
    for p in 4..=cap.min(HARD_CAP) {
        let w: Vec<EmbeddedGraph> = polytopes_of_order(p)?
            .into_iter()
            .filter(|g| has_degree_spectrum(g, n))
            .collect();
        if !w.is_empty() {
            return Ok(Table1Certificate {
                n,
                below,
                order: p,
                witnesses: w,
            });
        }
        below.push(p);
    }
    Err(Error::CapExceeded {
        cap,
        requested: n + 1,
    })
}
