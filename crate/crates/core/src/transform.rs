//! Splitting, h-splitting and gluing.
//!
//! All three keep existing vertex ids, so a graph built earlier in a chain
//! embeds into every later one by the identity on its ids. New vertices are
//! numbered from the old order upward.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{EmbeddedGraph, Face};

fn check_face(g: &EmbeddedGraph, f: &Face) -> Result<(), Error> {
    for &v in f.cycle() {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    if !g.is_face(f) {
        return Err(Error::NotAFace);
    }
    Ok(())
}

fn insert_before(r: &mut Vec<usize>, anchor: usize, x: usize) {
    let i = r.iter().position(|&y| y == anchor).expect("anchor in rotation");
    r.insert(i, x);
}

/// Adds a vertex inside the face `cycle` joined to every vertex on it.
/// The caller guarantees that `cycle` is a face with distinct vertices.
pub(crate) fn stellate_unchecked(g: &mut EmbeddedGraph, cycle: &[usize]) -> usize {
    let d = g.order();
    let k = cycle.len();
    let rot = g.rot_mut();
    rot.push(cycle.to_vec());
    for i in 0..k {
        let x = cycle[i];
        let y = cycle[(i + 1) % k];
        insert_before(&mut rot[y], x, d);
    }
    d
}

/// Undoes the last [`stellate_unchecked`] on `cycle`.
pub(crate) fn unstellate(g: &mut EmbeddedGraph, cycle: &[usize]) {
    let rot = g.rot_mut();
    let d = rot.len() - 1;
    rot.pop();
    for &x in cycle {
        rot[x].retain(|&y| y != d);
    }
}

/// Inserts a vertex into any face whose boundary is a simple cycle.
pub fn stellate(g: &EmbeddedGraph, f: &Face) -> Result<(EmbeddedGraph, usize), Error> {
    check_face(g, f)?;
    if !f.is_simple() {
        return Err(Error::NotAFace);
    }
    let mut h = g.clone();
    let d = stellate_unchecked(&mut h, f.cycle());
    Ok((h, d))
}

/// In-place [`split`].
pub fn split_mut(g: &mut EmbeddedGraph, f: &Face) -> Result<usize, Error> {
    if !f.is_triangle() {
        return Err(Error::NotTriangle(f.len()));
    }
    check_face(g, f)?;
    Ok(stellate_unchecked(g, f.cycle()))
}

/// Adds one vertex inside the triangular face `f`, joined to its corners.
pub fn split(g: &EmbeddedGraph, f: &Face) -> Result<(EmbeddedGraph, usize), Error> {
    let mut h = g.clone();
    let d = split_mut(&mut h, f)?;
    Ok((h, d))
}

/// In-place [`h_split`].
pub fn h_split_mut(
    g: &mut EmbeddedGraph,
    f: &Face,
    about: usize,
    h: usize,
) -> Result<Vec<usize>, Error> {
    if !f.is_triangle() {
        return Err(Error::NotTriangle(f.len()));
    }
    if h == 0 {
        return Err(Error::Domain {
            what: "h",
            value: 0,
        });
    }
    check_face(g, f)?;
    // Rotate so the apex comes last: the face reads a -> b -> about.
    let rot = f.starting_at(about).ok_or(Error::NotOnFace(about))?;
    let (a, b) = (rot.cycle()[1], rot.cycle()[2]);
    let mut apex = about;
    let mut out = Vec::with_capacity(h);
    for _ in 0..h {
        apex = stellate_unchecked(g, &[a, b, apex]);
        out.push(apex);
    }
    Ok(out)
}

/// Splits `f`, then repeatedly splits the new face on the edge opposite
/// `about`, `h` times in all. The two corners other than `about` gain `h`
/// each, `about` gains one, and the new vertices have degrees 4, ..., 4, 3.
pub fn h_split(
    g: &EmbeddedGraph,
    f: &Face,
    about: usize,
    h: usize,
) -> Result<(EmbeddedGraph, Vec<usize>), Error> {
    let mut out = g.clone();
    let vs = h_split_mut(&mut out, f, about, h)?;
    Ok((out, vs))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    /// At each rim vertex the region lies on the forward arc from the
    /// previous rim vertex to the next.
    Left,
    Right,
}

/// Neighbors strictly between `from` and `to`, walking the rotation forward.
fn arc(r: &[usize], from: usize, to: usize) -> Option<Vec<usize>> {
    let d = r.len();
    let i = r.iter().position(|&x| x == from)?;
    let mut out = Vec::new();
    for k in 1..d {
        let y = r[(i + k) % d];
        if y == to {
            return Some(out);
        }
        out.push(y);
    }
    None
}

fn is_face_cycle(g: &EmbeddedGraph, c: &[usize]) -> Option<bool> {
    // Some(true) forward orbit, Some(false) reversed orbit, None otherwise.
    let f = Face::new(c.to_vec());
    if g.is_face(&f) {
        return Some(true);
    }
    let mut r = c.to_vec();
    r.reverse();
    if g.is_face(&Face::new(r)) {
        return Some(false);
    }
    None
}

fn glue_err(msg: String) -> Error {
    Error::Glue(msg)
}

/// Region of `host` on `side` of the rim cycle, or `None` if it is not
/// exactly `expected`.
fn region(
    host: &EmbeddedGraph,
    rim: &[usize],
    side: Side,
    expected: &BTreeSet<usize>,
) -> Result<Option<BTreeSet<usize>>, Error> {
    let r = rim.len();
    let rim_set: BTreeSet<usize> = rim.iter().copied().collect();
    let mut seeds = Vec::new();
    for i in 0..r {
        let t = rim[i];
        let prev = rim[(i + r - 1) % r];
        let next = rim[(i + 1) % r];
        let a = match side {
            Side::Left => arc(host.rotation(t), prev, next),
            Side::Right => arc(host.rotation(t), next, prev),
        }
        .ok_or_else(|| glue_err(format!("rim vertices {prev} {t} {next} are not a path")))?;
        for y in a {
            if rim_set.contains(&y) {
                // A chord of the rim inside the region.
                return Ok(None);
            }
            seeds.push(y);
        }
    }
    let mut seen = BTreeSet::new();
    let mut stack = seeds;
    while let Some(x) = stack.pop() {
        if !seen.insert(x) {
            continue;
        }
        if !expected.contains(&x) || seen.len() > expected.len() {
            return Ok(None);
        }
        for &y in host.rotation(x) {
            if !rim_set.contains(&y) && !seen.contains(&y) {
                stack.push(y);
            }
        }
    }
    if &seen == expected {
        Ok(Some(seen))
    } else {
        Ok(None)
    }
}

/// Replaces a region of `host` by the inside of `gadget`.
///
/// The attachments split into a rim, the longest prefix that bounds a face
/// of the gadget, and interior attachments. The matching host terminals must
/// form a cycle whose one side holds exactly the interior terminals. That
/// side is cut out and the gadget, minus its rim face, is sewn in with
/// attachments identified with terminals. Returns the merged graph and the
/// id of every gadget vertex in it.
pub fn glue(
    host: &EmbeddedGraph,
    host_terminals: &[usize],
    gadget: &EmbeddedGraph,
    gadget_attachments: &[usize],
) -> Result<(EmbeddedGraph, Vec<usize>), Error> {
    let k = host_terminals.len();
    if k != gadget_attachments.len() {
        return Err(glue_err(format!(
            "{} terminals against {} attachments",
            k,
            gadget_attachments.len()
        )));
    }
    if k < 3 {
        return Err(glue_err(String::from("need at least three attachments")));
    }
    for &t in host_terminals {
        if t >= host.order() {
            return Err(Error::VertexOutOfRange {
                vertex: t,
                order: host.order(),
            });
        }
    }
    for &a in gadget_attachments {
        if a >= gadget.order() {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                order: gadget.order(),
            });
        }
    }
    let distinct: BTreeSet<usize> = host_terminals.iter().copied().collect();
    let distinct_g: BTreeSet<usize> = gadget_attachments.iter().copied().collect();
    if distinct.len() != k || distinct_g.len() != k {
        return Err(glue_err(String::from("repeated terminal or attachment")));
    }

    let mut rim_len = 0;
    let mut orient = true;
    for r in (3..=k).rev() {
        if let Some(o) = is_face_cycle(gadget, &gadget_attachments[..r]) {
            rim_len = r;
            orient = o;
            break;
        }
    }
    if rim_len == 0 {
        return Err(glue_err(String::from("attachments do not bound a gadget face")));
    }
    let rim = &host_terminals[..rim_len];
    let interior: BTreeSet<usize> = host_terminals[rim_len..].iter().copied().collect();

    let mut chosen = None;
    for side in [Side::Left, Side::Right] {
        if let Some(reg) = region(host, rim, side, &interior)? {
            chosen = Some((side, reg));
            break;
        }
    }
    let (side, reg) = chosen.ok_or_else(|| {
        glue_err(String::from(
            "no side of the terminal cycle holds exactly the interior terminals",
        ))
    })?;

    let mirror = (side == Side::Left) != orient;
    let gadget = if mirror { gadget.mirror() } else { gadget.clone() };

    // Gadget id -> merged id.
    let mut map = vec![usize::MAX; gadget.order()];
    for (i, &a) in gadget_attachments.iter().enumerate() {
        map[a] = host_terminals[i];
    }
    let mut next = host.order();
    for m in map.iter_mut() {
        if *m == usize::MAX {
            *m = next;
            next += 1;
        }
    }

    // Host edges inside the region must be present in the gadget.
    let mut inv = alloc::collections::BTreeMap::new();
    for (i, &t) in host_terminals.iter().enumerate() {
        inv.insert(t, gadget_attachments[i]);
    }
    for &x in &reg {
        for &y in host.rotation(x) {
            let gx = inv[&x];
            let gy = *inv.get(&y).ok_or_else(|| {
                glue_err(format!("region vertex {x} has neighbor {y} outside the terminals"))
            })?;
            if !gadget.has_edge(gx, gy) {
                return Err(glue_err(format!("host edge {x}-{y} is missing from the gadget")));
            }
        }
    }

    let mut rot: Vec<Vec<usize>> = host.rotations().to_vec();
    rot.resize(next, Vec::new());
    for (v, r) in gadget.rotations().iter().enumerate() {
        if gadget_attachments[..rim_len].contains(&v) {
            continue;
        }
        rot[map[v]] = r.iter().map(|&w| map[w]).collect();
    }
    let r = rim_len;
    for i in 0..r {
        let t = rim[i];
        let tp = rim[(i + r - 1) % r];
        let tn = rim[(i + 1) % r];
        let a = gadget_attachments[i];
        let ap = gadget_attachments[(i + r - 1) % r];
        let an = gadget_attachments[(i + 1) % r];
        let (first, last, gfrom, gto) = match side {
            Side::Left => (tp, tn, ap, an),
            Side::Right => (tn, tp, an, ap),
        };
        let inner = arc(gadget.rotation(a), gfrom, gto)
            .ok_or_else(|| glue_err(format!("gadget rim broken at attachment {a}")))?;
        let kept = arc(host.rotation(t), last, first)
            .ok_or_else(|| glue_err(format!("host rim broken at terminal {t}")))?;
        let mut merged = Vec::with_capacity(inner.len() + kept.len() + 2);
        merged.push(first);
        merged.extend(inner.iter().map(|&w| map[w]));
        merged.push(last);
        merged.extend(kept);
        rot[t] = merged;
    }

    let mut out = EmbeddedGraph::from_rotations(rot).map_err(|e| {
        glue_err(format!("merged rotation is not a simple graph: {e}"))
    })?;
    if !out.euler_valid()? {
        return Err(glue_err(String::from("merged embedding is not planar")));
    }
    for (name, &v) in host.labels() {
        out.set_label(name, v);
    }
    Ok((out, map))
}

/// One recorded construction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Split {
        face: Face,
        new_vertex: usize,
    },
    HSplit {
        face: Face,
        about: usize,
        h: usize,
        new_vertices: Vec<usize>,
    },
    Glue {
        name: String,
        host_terminals: Vec<usize>,
        gadget_attachments: Vec<usize>,
        id_map: Vec<usize>,
    },
}

/// A named intermediate graph and its vertex map into the current graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub name: String,
    pub order: usize,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstructionTrace {
    steps: Vec<Step>,
    checkpoints: Vec<Checkpoint>,
}

impl ConstructionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn checkpoints(&self) -> &[Checkpoint] {
        &self.checkpoints
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    /// Records `g` as a named stage. Ids are never renumbered, so its map
    /// into every later graph is the identity on `0..order`.
    pub fn checkpoint(&mut self, name: &str, g: &EmbeddedGraph) {
        self.checkpoints.push(Checkpoint {
            name: String::from(name),
            order: g.order(),
            map: (0..g.order()).collect(),
        });
    }

    pub fn checkpoint_named(&self, name: &str) -> Option<&Checkpoint> {
        self.checkpoints.iter().find(|c| c.name == name)
    }

    pub fn split(&mut self, g: &mut EmbeddedGraph, f: &Face) -> Result<usize, Error> {
        let d = split_mut(g, f)?;
        self.steps.push(Step::Split {
            face: f.clone(),
            new_vertex: d,
        });
        Ok(d)
    }

    pub fn h_split(
        &mut self,
        g: &mut EmbeddedGraph,
        f: &Face,
        about: usize,
        h: usize,
    ) -> Result<Vec<usize>, Error> {
        let vs = h_split_mut(g, f, about, h)?;
        self.steps.push(Step::HSplit {
            face: f.clone(),
            about,
            h,
            new_vertices: vs.clone(),
        });
        Ok(vs)
    }

    pub fn glue(
        &mut self,
        name: &str,
        host: &EmbeddedGraph,
        host_terminals: &[usize],
        gadget: &EmbeddedGraph,
        gadget_attachments: &[usize],
    ) -> Result<(EmbeddedGraph, Vec<usize>), Error> {
        let (g, map) = glue(host, host_terminals, gadget, gadget_attachments)?;
        self.steps.push(Step::Glue {
            name: String::from(name),
            host_terminals: host_terminals.to_vec(),
            gadget_attachments: gadget_attachments.to_vec(),
            id_map: map.clone(),
        });
        Ok((g, map))
    }
}

/// True when `map` is injective and sends every edge of `from` to an edge of `to`.
pub fn is_injective_homomorphism(from: &EmbeddedGraph, to: &EmbeddedGraph, map: &[usize]) -> bool {
    if map.len() != from.order() {
        return false;
    }
    let mut seen = BTreeSet::new();
    for &m in map {
        if m >= to.order() || !seen.insert(m) {
            return false;
        }
    }
    from.edges()
        .iter()
        .all(|&(u, v)| to.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> EmbeddedGraph {
        EmbeddedGraph::from_rotations(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap()
    }

    #[test]
    fn split_adds_a_degree_three_vertex() {
        let g = k4();
        let f = g.faces()[0].clone();
        let (h, d) = split(&g, &f).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.size(), 9);
        assert_eq!(h.degree(d), 3);
        assert!(h.is_polytopal());
        assert_eq!(h.face_count(), 6);
    }

    #[test]
    fn h_split_degrees() {
        let g = k4();
        let f = g.faces()[0].clone();
        let c = f.cycle()[2];
        let (h, vs) = h_split(&g, &f, c, 5).unwrap();
        assert_eq!(vs.len(), 5);
        for (i, &v) in vs.iter().enumerate() {
            assert_eq!(h.degree(v), if i + 1 == vs.len() { 3 } else { 4 });
        }
        assert_eq!(h.degree(c), 4);
        for &x in f.cycle() {
            if x != c {
                assert_eq!(h.degree(x), 8);
            }
        }
        assert!(h.is_polytopal());
    }

    #[test]
    fn non_face_is_rejected() {
        let g = k4();
        let mut f = g.faces()[0].cycle().to_vec();
        f.reverse();
        assert_eq!(split(&g, &Face::new(f)).unwrap_err(), Error::NotAFace);
    }

    #[test]
    fn glue_tetrahedron_into_a_face() {
        // Gluing K4 onto a face by its own face is a split.
        let g = k4();
        let f = g.faces()[1].clone();
        let gf = g.faces()[2].clone();
        let (h, map) = glue(&g, f.cycle(), &g, gf.cycle()).unwrap();
        assert_eq!(h.order(), 5);
        assert!(h.is_polytopal());
        assert!(is_injective_homomorphism(&g, &h, &(0..4).collect::<Vec<_>>()));
        assert_eq!(map.iter().filter(|&&m| m >= 4).count(), 1);
    }

    #[test]
    fn glue_replaces_a_hub() {
        // Host: K4 with hub 3 inside triangle 0,1,2. Gadget: split K4 with
        // the hub kept, so the hub becomes degree 4 after gluing.
        let host = k4();
        let f = host.triangle_face(0, 1, 3).unwrap();
        let (gadget, _) = split(&host, &f).unwrap();
        let (h, _) = glue(&host, &[0, 1, 2, 3], &gadget, &[0, 1, 2, 3]).unwrap();
        assert_eq!(h.order(), 5);
        assert!(h.is_polytopal());
        assert_eq!(h.degree(3), 4);
    }
}
