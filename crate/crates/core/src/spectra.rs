//! Degree-spectrum properties and their witnesses.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds;
use crate::error::Error;
use crate::graph::{EmbeddedGraph, Face};

/// True when every degree in `3..=n` occurs.
pub fn has_degree_spectrum(g: &EmbeddedGraph, n: usize) -> bool {
    if n < 3 {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for v in 0..g.order() {
        let d = g.degree(v);
        if d <= n {
            seen[d] = true;
        }
    }
    seen[3..].iter().all(|&b| b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    P,
    Q,
    R,
    Faces,
}

/// Where the minimality half of a verdict comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Small n: backed by exhaustive enumeration.
    Oracle,
    /// Backed by the table of small values and the closed-form lower bound.
    Bound,
}

/// One designated triangle: `v1`, `v2` carry degrees, `v3` is the third corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WitnessFace {
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QnWitness {
    pub faces: Vec<WitnessFace>,
}

impl QnWitness {
    /// Drops the leading face; turns an extended witness into a plain one.
    pub fn without_first(&self) -> QnWitness {
        QnWitness {
            faces: self.faces.iter().skip(1).copied().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub property: Property,
    pub n: usize,
    pub pass: bool,
    pub failures: Vec<String>,
    pub order: usize,
    pub expected_order: Option<usize>,
    pub certification: Option<Certification>,
    pub witness: Option<QnWitness>,
}

impl SpectrumReport {
    fn new(property: Property, n: usize, g: &EmbeddedGraph) -> Self {
        SpectrumReport {
            property,
            n,
            pass: false,
            failures: Vec::new(),
            order: g.order(),
            expected_order: None,
            certification: None,
            witness: None,
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn finish(mut self) -> Self {
        self.pass = self.failures.is_empty();
        self
    }
}

/// Full spectrum, minimal order and polytopality.
pub fn check_p(g: &EmbeddedGraph, n: usize) -> SpectrumReport {
    let mut r = SpectrumReport::new(Property::P, n, g);
    if n < 3 {
        r.fail(format!("n = {n} is below 3"));
        return r.finish();
    }
    if !has_degree_spectrum(g, n) {
        let missing: Vec<usize> = (3..=n)
            .filter(|&d| (0..g.order()).all(|v| g.degree(v) != d))
            .collect();
        r.fail(format!("missing degrees {missing:?}"));
    }
    let p = bounds::p_of(n as u64).unwrap() as usize;
    r.expected_order = Some(p);
    if g.order() != p {
        r.fail(format!("order {} differs from the minimum {p}", g.order()));
    }
    if !g.is_polytopal() {
        r.fail(String::from("not polytopal"));
    }
    r.certification = Some(if n <= 7 {
        Certification::Oracle
    } else {
        Certification::Bound
    });
    r.finish()
}

/// Face sizes 3..=n all occur and the face count is minimal.
pub fn check_face_spectrum(g: &EmbeddedGraph, n: usize) -> Result<SpectrumReport, Error> {
    let d = g.dualize()?;
    let mut r = check_p(&d, n);
    r.property = Property::Faces;
    Ok(r)
}

/// Triangular faces, indexed by sorted corner triple.
struct Triangles {
    by_vertex: Vec<Vec<[usize; 3]>>,
    set: BTreeSet<[usize; 3]>,
}

impl Triangles {
    fn new(g: &EmbeddedGraph) -> Self {
        let mut by_vertex = vec![Vec::new(); g.order()];
        let mut set = BTreeSet::new();
        for f in g.faces() {
            if f.is_triangle() {
                let mut t = [f.cycle()[0], f.cycle()[1], f.cycle()[2]];
                t.sort_unstable();
                if set.insert(t) {
                    for &v in &t {
                        by_vertex[v].push(t);
                    }
                }
            }
        }
        Triangles { by_vertex, set }
    }
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Clause checks shared by both properties. `extended` selects the form with
/// a leading face on two vertices of degree n - 1.
fn verify_witness(g: &EmbeddedGraph, n: usize, w: &QnWitness, extended: bool, r: &mut SpectrumReport) {
    let base = (n - 3) / 2;
    let want = if extended { base + 1 } else { base };
    if w.faces.len() != want {
        r.fail(format!("witness has {} faces, expected {want}", w.faces.len()));
    }
    let tri = Triangles::new(g);
    let mut seen_faces = BTreeSet::new();
    let mut designated = BTreeSet::new();
    let mut degrees = Vec::new();
    for (j, f) in w.faces.iter().enumerate() {
        if [f.v1, f.v2, f.v3].iter().any(|&v| v >= g.order()) {
            r.fail(format!("face {j} names a vertex out of range"));
            continue;
        }
        let t = sorted3(f.v1, f.v2, f.v3);
        if t[0] == t[1] || t[1] == t[2] {
            r.fail(format!("face {j} repeats a vertex"));
            continue;
        }
        if !tri.set.contains(&t) {
            r.fail(format!("face {j} {t:?} is not a triangular face"));
        }
        if !seen_faces.insert(t) {
            r.fail(format!("face {j} {t:?} is used twice"));
        }
        for v in [f.v1, f.v2] {
            if !designated.insert(v) {
                r.fail(format!("vertex {v} is designated twice"));
            }
        }
        if extended && j == 0 {
            for v in [f.v1, f.v2] {
                if g.degree(v) != n - 1 {
                    r.fail(format!("leading face vertex {v} has degree {}", g.degree(v)));
                }
            }
        } else {
            degrees.push(g.degree(f.v1));
            degrees.push(g.degree(f.v2));
        }
    }
    for (j, f) in w.faces.iter().enumerate() {
        if designated.contains(&f.v3) {
            r.fail(format!("third vertex {} of face {j} is designated", f.v3));
        }
    }
    degrees.sort_unstable();
    let target: Vec<usize> = (4..=n).collect();
    if degrees != target {
        r.fail(format!("designated degrees {degrees:?} are not 4..={n}"));
    }
    if (0..g.order()).all(|v| g.degree(v) != 3) {
        r.fail(String::from("no vertex of degree 3"));
    }
    if !g.is_polytopal() {
        r.fail(String::from("not polytopal"));
    }
}

struct Cover<'a> {
    g: &'a EmbeddedGraph,
    tri: &'a Triangles,
    by_degree: BTreeMap<usize, Vec<usize>>,
    open: BTreeSet<usize>,
    designated: BTreeSet<usize>,
    thirds: BTreeMap<usize, usize>,
    used: BTreeSet<[usize; 3]>,
    chosen: Vec<WitnessFace>,
    nodes: u64,
}

impl<'a> Cover<'a> {
    fn options(&self, d: usize) -> Vec<WitnessFace> {
        let mut out = Vec::new();
        let Some(vs) = self.by_degree.get(&d) else {
            return out;
        };
        for &u in vs {
            if self.designated.contains(&u) || self.thirds.contains_key(&u) {
                continue;
            }
            for t in &self.tri.by_vertex[u] {
                if self.used.contains(t) {
                    continue;
                }
                let others: Vec<usize> = t.iter().copied().filter(|&x| x != u).collect();
                for (v, z) in [(others[0], others[1]), (others[1], others[0])] {
                    let dv = self.g.degree(v);
                    if dv == d || !self.open.contains(&dv) {
                        continue;
                    }
                    if self.designated.contains(&v) || self.thirds.contains_key(&v) {
                        continue;
                    }
                    if self.designated.contains(&z) {
                        continue;
                    }
                    out.push(WitnessFace { v1: u, v2: v, v3: z });
                }
            }
        }
        out
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.open.is_empty() {
            return true;
        }
        let mut best: Option<(usize, Vec<WitnessFace>)> = None;
        for &d in &self.open {
            let o = self.options(d);
            if best.as_ref().map_or(true, |b| o.len() < b.1.len()) {
                let empty = o.is_empty();
                best = Some((d, o));
                if empty {
                    break;
                }
            }
        }
        let (_, opts) = best.unwrap();
        for f in opts {
            let t = sorted3(f.v1, f.v2, f.v3);
            let (d1, d2) = (self.g.degree(f.v1), self.g.degree(f.v2));
            self.open.remove(&d1);
            self.open.remove(&d2);
            self.designated.insert(f.v1);
            self.designated.insert(f.v2);
            *self.thirds.entry(f.v3).or_insert(0) += 1;
            self.used.insert(t);
            self.chosen.push(f);
            if self.solve() {
                return true;
            }
            self.chosen.pop();
            self.used.remove(&t);
            let c = self.thirds.get_mut(&f.v3).unwrap();
            *c -= 1;
            if *c == 0 {
                self.thirds.remove(&f.v3);
            }
            self.designated.remove(&f.v1);
            self.designated.remove(&f.v2);
            self.open.insert(d1);
            self.open.insert(d2);
        }
        false
    }
}

fn cover<'a>(
    g: &'a EmbeddedGraph,
    tri: &'a Triangles,
    n: usize,
    designated: &[usize],
    thirds: &[usize],
    used: &[[usize; 3]],
) -> Option<Vec<WitnessFace>> {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        let d = g.degree(v);
        if (4..=n).contains(&d) {
            by_degree.entry(d).or_default().push(v);
        }
    }
    let mut th = BTreeMap::new();
    for &z in thirds {
        *th.entry(z).or_insert(0) += 1;
    }
    let mut c = Cover {
        g,
        tri,
        by_degree,
        open: (4..=n).collect(),
        designated: designated.iter().copied().collect(),
        thirds: th,
        used: used.iter().copied().collect(),
        chosen: Vec::new(),
        nodes: 0,
    };
    if c.solve() {
        Some(c.chosen)
    } else {
        None
    }
}

fn odd_domain(n: usize, r: &mut SpectrumReport) -> bool {
    if n < 5 || n % 2 == 0 {
        r.fail(format!("n = {n} must be odd and at least 5"));
        return false;
    }
    true
}

/// Searches for a plain witness: (n−3)/2 distinct triangles whose designated
/// pairs realize degrees 4..=n, no third corner designated.
pub fn find_q_witness(g: &EmbeddedGraph, n: usize) -> Option<QnWitness> {
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let tri = Triangles::new(g);
    let faces = cover(g, &tri, n, &[], &[], &[])?;
    Some(QnWitness { faces })
}

/// Searches for an extended witness. With `free_opposite`, the face across
/// the edge of the leading pair must be a triangle whose third corner is not
/// designated; such a face can host a gluing.
pub fn find_r_witness(g: &EmbeddedGraph, n: usize, free_opposite: bool) -> Option<QnWitness> {
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let tri = Triangles::new(g);
    let tops: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == n - 1).collect();
    for &a in &tops {
        for t in &tri.by_vertex[a] {
            for &b in t {
                if b == a || g.degree(b) != n - 1 || b < a {
                    continue;
                }
                let y = t.iter().copied().find(|&x| x != a && x != b).unwrap();
                let mut thirds = vec![y];
                if free_opposite {
                    let Some(z) = opposite_third(g, a, b, y) else {
                        continue;
                    };
                    // z stays undesignated: it is identified with a third
                    // corner of the host later.
                    thirds.push(z);
                }
                if let Some(rest) = cover(g, &tri, n, &[a, b], &thirds, &[*t]) {
                    let mut faces = vec![WitnessFace { v1: a, v2: b, v3: y }];
                    faces.extend(rest);
                    return Some(QnWitness { faces });
                }
            }
        }
    }
    None
}

/// Third corner of the triangle across edge `ab` from the triangle `aby`.
pub fn opposite_third(g: &EmbeddedGraph, a: usize, b: usize, y: usize) -> Option<usize> {
    for (x0, x1) in [(a, b), (b, a)] {
        let (_, w) = g.next_dart(x0, x1)?;
        if w != y {
            let f = g.face_of_dart(x0, x1)?;
            if f.is_triangle() {
                return Some(w);
            }
            return None;
        }
    }
    None
}

/// Plain property: checks `witness` if given, otherwise searches for one.
pub fn check_q(g: &EmbeddedGraph, n: usize, witness: Option<&QnWitness>) -> SpectrumReport {
    let mut r = SpectrumReport::new(Property::Q, n, g);
    if !odd_domain(n, &mut r) {
        return r.finish();
    }
    let w = match witness {
        Some(w) => Some(w.clone()),
        None => find_q_witness(g, n),
    };
    match w {
        Some(w) => {
            verify_witness(g, n, &w, false, &mut r);
            r.witness = Some(w);
        }
        None => {
            r.fail(String::from("no witness exists"));
            if (0..g.order()).all(|v| g.degree(v) != 3) {
                r.fail(String::from("no vertex of degree 3"));
            }
        }
    }
    r.finish()
}

/// Extended property: a leading triangle on two vertices of degree n−1
/// followed by a plain witness, all designated vertices distinct.
pub fn check_r(g: &EmbeddedGraph, n: usize, witness: Option<&QnWitness>) -> SpectrumReport {
    let mut r = SpectrumReport::new(Property::R, n, g);
    if !odd_domain(n, &mut r) {
        return r.finish();
    }
    let w = match witness {
        Some(w) => Some(w.clone()),
        None => find_r_witness(g, n, false),
    };
    match w {
        Some(w) => {
            verify_witness(g, n, &w, true, &mut r);
            r.witness = Some(w);
        }
        None => r.fail(String::from("no witness exists")),
    }
    r.finish()
}

/// The triangle of `g` on the corners of `f`, as a face value.
pub fn witness_face(g: &EmbeddedGraph, f: &WitnessFace) -> Option<Face> {
    g.triangle_face(f.v1, f.v2, f.v3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_spectrum() {
        let g = EmbeddedGraph::from_rotations(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap();
        assert!(has_degree_spectrum(&g, 3));
        assert!(!has_degree_spectrum(&g, 4));
        assert!(check_p(&g, 3).pass);
        assert!(!check_q(&g, 5, None).pass);
    }
}
