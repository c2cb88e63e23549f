//! Gadgets glued into a host during the constructions.
//!
//! A gadget is pinned down only by what it does to degrees: how much each
//! attachment vertex gains, how many vertices come with it, and which new
//! vertices must end up with which degrees. [`GadgetContract`] records that
//! arithmetic. Realizations are recovered by search and frozen as
//! [`Template`]s; any template whose instances pass [`validate_instance`] is
//! as good as any other.
//!
//! The four-attachment gadgets all start from a tetrahedron `a, b, c, d` whose
//! outer face `a b c` becomes the rim and whose inner vertex `d` is glued to
//! the host's hub. The scaffold is a handful of plain splits. On top of it,
//! a few faces holding two attachments are h-split with `h` linear in the
//! gadget's parameter, which is what lets one template serve every `n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::builders;
use crate::enumerator;
use crate::error::Error;
use crate::graph::EmbeddedGraph;
use crate::transform::{glue, h_split_mut, split_mut};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GadgetKind {
    Pc,
    End1,
    End0,
    EndPrime,
    S,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 5] = [
        GadgetKind::Pc,
        GadgetKind::End1,
        GadgetKind::End0,
        GadgetKind::EndPrime,
        GadgetKind::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Pc => "pc",
            GadgetKind::End1 => "end1",
            GadgetKind::End0 => "end0",
            GadgetKind::EndPrime => "endprime",
            GadgetKind::S => "S",
        }
    }
}

/// Degree change at one attachment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Delta {
    Exact(i64),
    AtLeast(i64),
}

impl Delta {
    pub fn admits(self, d: i64) -> bool {
        match self {
            Delta::Exact(x) => d == x,
            Delta::AtLeast(x) => d >= x,
        }
    }

    fn lower(self) -> i64 {
        match self {
            Delta::Exact(x) | Delta::AtLeast(x) => x,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// A new vertex.
    Fresh,
    /// The attachment with this index.
    Attachment(usize),
}

/// A vertex with a prescribed degree after gluing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marked {
    pub label: String,
    pub degree: usize,
    pub source: Source,
}

/// A triangle that must exist after gluing. Its third corner has to be a
/// new vertex carrying no mark; `third` names it when the instance labels it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RequiredFace {
    pub pair: [String; 2],
    pub third: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetContract {
    pub kind: GadgetKind,
    /// `k` for pc, `n` for the others, 0 for S.
    pub param: u64,
    pub attachments: Vec<String>,
    pub required_host_degrees: Option<Vec<usize>>,
    pub deltas: Vec<Delta>,
    pub added_vertices: usize,
    /// Known whenever the gadget fills a triangulated region.
    pub added_edges: Option<usize>,
    /// Degree constraints on new vertices, plus attachments that are
    /// exposed again.
    pub marked: Vec<Marked>,
    /// Labels handed to the next gluing, in terminal order.
    pub exposed: Vec<String>,
    /// Exposed label adjacent to exactly the other exposed ones.
    pub hub: Option<String>,
    pub required_faces: Vec<RequiredFace>,
}

fn s(x: &str) -> String {
    x.to_string()
}

fn marked(label: &str, degree: usize, source: Source) -> Marked {
    Marked {
        label: s(label),
        degree,
        source,
    }
}

fn req(a: &str, b: &str, third: Option<&str>) -> RequiredFace {
    RequiredFace {
        pair: [s(a), s(b)],
        third: third.map(s),
    }
}

const TERMINAL_DEGREES: [usize; 4] = [10, 8, 6, 3];

fn quad(kind: GadgetKind, param: u64, deltas: [i64; 4], added: usize) -> GadgetContract {
    GadgetContract {
        kind,
        param,
        attachments: ["a", "b", "c", "d"].iter().map(|x| s(x)).collect(),
        required_host_degrees: Some(TERMINAL_DEGREES.to_vec()),
        deltas: deltas.iter().map(|&x| Delta::Exact(x)).collect(),
        added_vertices: added,
        added_edges: Some(3 * added),
        marked: Vec::new(),
        exposed: Vec::new(),
        hub: None,
        required_faces: Vec::new(),
    }
}

fn domain(what: &'static str, v: u64) -> Error {
    Error::Domain {
        what,
        value: v as i64,
    }
}

/// Raises the host terminals from (10, 8, 6, 3) to (4k+14, 4k+12, 4k+11,
/// 4k+13) and exposes a fresh terminal quadruple.
pub fn contract_pc(k: u64) -> Result<GadgetContract, Error> {
    if k < 1 {
        return Err(domain("k", k));
    }
    let k = k as i64;
    let mut c = quad(
        GadgetKind::Pc,
        k as u64,
        [4 * k + 4, 4 * k + 4, 4 * k + 5, 4 * k + 10],
        (8 * k + 13) as usize,
    );
    c.marked = vec![
        marked("u", 10, Source::Fresh),
        marked("v", 8, Source::Fresh),
        marked("w", 6, Source::Fresh),
        marked("x", 3, Source::Fresh),
    ];
    c.exposed = vec![s("u"), s("v"), s("w"), s("x")];
    c.hub = Some(s("x"));
    Ok(c)
}

/// Closes an odd chain: terminals go to (n, n−1, n−2, 10) and `d` is exposed
/// again together with fresh `v, w, x`.
pub fn contract_end1(n: u64) -> Result<GadgetContract, Error> {
    if n < 17 || n % 4 != 1 {
        return Err(domain("n", n));
    }
    let m = n as i64;
    let mut c = quad(
        GadgetKind::End1,
        n,
        [m - 10, m - 9, m - 8, 7],
        ((3 * m - 21) / 2) as usize,
    );
    c.marked = vec![
        marked("d", 10, Source::Attachment(3)),
        marked("v", 8, Source::Fresh),
        marked("w", 6, Source::Fresh),
        marked("x", 3, Source::Fresh),
    ];
    c.exposed = vec![s("d"), s("v"), s("w"), s("x")];
    c.hub = Some(s("x"));
    c.required_faces = vec![req("a", "b", None), req("c", "w", None), req("d", "v", None)];
    Ok(c)
}

/// Terminals go to (n, n−1, 10, 8); one new vertex of degree 6.
pub fn contract_end0(n: u64) -> Result<GadgetContract, Error> {
    if n < 16 || !matches!(n % 4, 0 | 3) {
        return Err(domain("n", n));
    }
    let m = n as i64;
    let mut c = quad(GadgetKind::End0, n, [m - 10, m - 9, 4, 5], (m - 6) as usize);
    c.marked = vec![marked("wbar", 6, Source::Fresh)];
    Ok(c)
}

/// Terminals go to (n−1, n−1, 10, 8), the two of degree n−1 sharing a
/// triangle; one new vertex of degree 6 next to the degree-8 one.
pub fn contract_endprime(n: u64) -> Result<GadgetContract, Error> {
    if n < 17 || n % 4 != 1 {
        return Err(domain("n", n));
    }
    let m = n as i64;
    let mut c = quad(GadgetKind::EndPrime, n, [m - 11, m - 9, 4, 5], (m - 7) as usize);
    c.marked = vec![marked("w'", 6, Source::Fresh)];
    c.required_faces = vec![req("a", "b", None), req("d", "w'", None)];
    Ok(c)
}

/// Replaces a triangle `a b c`: `a` and `b` gain two each, four new
/// vertices among which `d` of degree 5 and `e` of degree 4.
pub fn contract_s() -> GadgetContract {
    GadgetContract {
        kind: GadgetKind::S,
        param: 0,
        attachments: vec![s("a"), s("b"), s("c")],
        required_host_degrees: None,
        deltas: vec![Delta::Exact(2), Delta::Exact(2), Delta::AtLeast(0)],
        added_vertices: 4,
        added_edges: None,
        marked: vec![marked("d", 5, Source::Fresh), marked("e", 4, Source::Fresh)],
        exposed: Vec::new(),
        hub: None,
        required_faces: vec![req("a", "b", Some("g")), req("d", "e", Some("f"))],
    }
}

pub fn contract(kind: GadgetKind, param: u64) -> Result<GadgetContract, Error> {
    match kind {
        GadgetKind::Pc => contract_pc(param),
        GadgetKind::End1 => contract_end1(param),
        GadgetKind::End0 => contract_end0(param),
        GadgetKind::EndPrime => contract_endprime(param),
        GadgetKind::S => Ok(contract_s()),
    }
}

impl GadgetContract {
    /// Degree sum the new vertices must carry, `2·edges − Σ deltas`, when
    /// both are fixed.
    pub fn new_degree_sum(&self) -> Option<i64> {
        let e = self.added_edges? as i64;
        let mut sum = 0;
        for d in &self.deltas {
            match d {
                Delta::Exact(x) => sum += x,
                Delta::AtLeast(_) => return None,
            }
        }
        Some(2 * e - sum)
    }

    /// Handshake feasibility: the new vertices can absorb the degree sum
    /// left over by the deltas, each with degree at least 3 and the marked
    /// ones with their prescribed degree.
    pub fn handshake_consistent(&self) -> bool {
        if self.deltas.len() != self.attachments.len() {
            return false;
        }
        let fresh: Vec<&Marked> = self
            .marked
            .iter()
            .filter(|m| m.source == Source::Fresh)
            .collect();
        if fresh.len() > self.added_vertices || fresh.iter().any(|m| m.degree < 3) {
            return false;
        }
        let Some(sum) = self.new_degree_sum() else {
            return self.deltas.iter().all(|d| d.lower() >= 0);
        };
        let unmarked = (self.added_vertices - fresh.len()) as i64;
        let marked_sum: i64 = fresh.iter().map(|m| m.degree as i64).sum();
        let rest = sum - marked_sum;
        rest >= 3 * unmarked && (unmarked > 0 || rest == 0)
    }

    fn label_index(&self, name: &str) -> Option<Ref> {
        if let Some(i) = self.attachments.iter().position(|a| a == name) {
            return Some(Ref::Att(i));
        }
        let j = self.marked.iter().position(|m| m.label == name)?;
        match self.marked[j].source {
            Source::Attachment(i) => Some(Ref::Att(i)),
            Source::Fresh => Some(Ref::Mark(j)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ref {
    Att(usize),
    Mark(usize),
}

/// `h = slope · param + intercept` splittings of `face` about `about`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRule {
    pub face: [usize; 3],
    pub about: usize,
    pub slope: i64,
    pub intercept: i64,
}

/// A frozen gadget realization: a base rotation system, plain splits given
/// by vertex triples, parametric h-splits, and vertex labels. Attachments
/// are the first three or four ids of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub kind: GadgetKind,
    pub base: Vec<Vec<usize>>,
    pub splits: Vec<[usize; 3]>,
    pub hsplits: Vec<HRule>,
    pub labels: Vec<(String, usize)>,
}

/// Linear degree arithmetic of a family, in the template parameter.
struct Family {
    delta_const: [i64; 4],
    pairs: Vec<([usize; 2], i64)>,
    added_const: i64,
    min_param: i64,
}

fn family(kind: GadgetKind) -> Option<Family> {
    // Parameters: k for pc, t = (n−17)/4 for end1, n for end0 and end'.
    let f = match kind {
        GadgetKind::Pc => Family {
            delta_const: [4, 4, 5, 10],
            pairs: vec![([0, 1], 4), ([2, 3], 4)],
            added_const: 13,
            min_param: 1,
        },
        GadgetKind::End1 => Family {
            delta_const: [7, 8, 9, 7],
            pairs: vec![([0, 1], 2), ([1, 2], 2), ([0, 2], 2)],
            added_const: 15,
            min_param: 0,
        },
        GadgetKind::End0 => Family {
            delta_const: [-10, -9, 4, 5],
            pairs: vec![([0, 1], 1)],
            added_const: -6,
            min_param: 16,
        },
        GadgetKind::EndPrime => Family {
            delta_const: [-11, -9, 4, 5],
            pairs: vec![([0, 1], 1)],
            added_const: -7,
            min_param: 17,
        },
        GadgetKind::S => return None,
    };
    Some(f)
}

/// The template parameter for a contract parameter.
pub fn template_param(kind: GadgetKind, param: u64) -> i64 {
    match kind {
        GadgetKind::End1 => (param as i64 - 17) / 4,
        GadgetKind::S => 0,
        _ => param as i64,
    }
}

fn k4_rotations() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]
}

/// Sentinel for a vertex created by an h-split.
const HSPLIT: usize = usize::MAX;

struct Spec<'a> {
    contract: &'a GadgetContract,
    tg: [i64; 4],
    pairs: Vec<[usize; 2]>,
    s: usize,
    need: Vec<i64>,
    slack: i64,
    hub: Option<usize>,
    exposed: Vec<Ref>,
    required: Vec<(Ref, Ref)>,
}

struct Found {
    ops: Vec<[usize; 3]>,
    sel: Vec<[usize; 3]>,
    marks: Vec<usize>,
}

struct Dfs<'a> {
    spec: &'a Spec<'a>,
    faces: Vec<[usize; 3]>,
    alive: Vec<bool>,
    deg: Vec<i64>,
    ops: Vec<[usize; 3]>,
    nodes: u64,
    budget: u64,
    found: Option<Found>,
}

impl Dfs<'_> {
    fn done(&self) -> bool {
        self.found.is_some() || self.nodes > self.budget
    }

    fn waste(&self) -> i64 {
        let mut ex: Vec<i64> = self.deg[4..].iter().map(|d| d - 3).collect();
        ex.sort_unstable_by(|a, b| b.cmp(a));
        let mut w = 0;
        for (i, e) in ex.iter().enumerate() {
            let cap = self.spec.need.get(i).copied().unwrap_or(0);
            if *e > cap {
                w += e - cap;
            }
        }
        w
    }

    fn rec(&mut self, start: usize) {
        self.nodes += 1;
        if self.done() {
            return;
        }
        let left = (self.spec.s - self.ops.len()) as i64;
        let bumps = self.spec.pairs.len() as i64;
        for a in 0..4 {
            let got = self.deg[a] - 3;
            if got > self.spec.tg[a] || got + left + bumps < self.spec.tg[a] {
                return;
            }
        }
        if self.waste() > self.spec.slack {
            return;
        }
        if left == 0 {
            self.finish();
            return;
        }
        for fi in start..self.faces.len() {
            if !self.alive[fi] {
                continue;
            }
            let [x, y, z] = self.faces[fi];
            let nv = self.deg.len();
            self.alive[fi] = false;
            self.faces.extend([[x, y, nv], [y, z, nv], [z, x, nv]]);
            self.alive.extend([true; 3]);
            self.deg.push(3);
            for v in [x, y, z] {
                self.deg[v] += 1;
            }
            self.ops.push([x, y, z]);
            self.rec(fi + 1);
            self.ops.pop();
            for v in [x, y, z] {
                self.deg[v] -= 1;
            }
            self.deg.pop();
            self.alive.truncate(self.alive.len() - 3);
            self.faces.truncate(self.faces.len() - 3);
            self.alive[fi] = true;
            if self.done() {
                return;
            }
        }
    }

    fn finish(&mut self) {
        let live: Vec<[usize; 3]> = self
            .faces
            .iter()
            .zip(&self.alive)
            .filter(|(_, &a)| a)
            .map(|(f, _)| *f)
            .collect();
        let choices: Vec<Vec<[usize; 3]>> = self
            .spec
            .pairs
            .iter()
            .map(|p| {
                live.iter()
                    .filter(|f| f.contains(&p[0]) && f.contains(&p[1]))
                    .copied()
                    .collect()
            })
            .collect();
        let mut sel = Vec::new();
        self.select(&live, &choices, &mut sel);
    }

    fn select(&mut self, live: &[[usize; 3]], choices: &[Vec<[usize; 3]>], sel: &mut Vec<[usize; 3]>) {
        if self.found.is_some() {
            return;
        }
        let i = sel.len();
        if i == choices.len() {
            self.check(live, sel);
            return;
        }
        for &f in &choices[i] {
            if sel.contains(&f) {
                continue;
            }
            sel.push(f);
            self.select(live, choices, sel);
            sel.truncate(i);
        }
    }

    fn check(&mut self, live: &[[usize; 3]], sel: &[[usize; 3]]) {
        let spec = self.spec;
        let mut d = self.deg.clone();
        for (f, p) in sel.iter().zip(&spec.pairs) {
            let apex = f.iter().copied().find(|v| !p.contains(v)).unwrap();
            d[apex] += 1;
        }
        if (0..4).any(|a| d[a] - 3 != spec.tg[a]) {
            return;
        }
        let nv = d.len();
        let mut adj: Vec<BTreeSet<usize>> = k4_rotations()
            .into_iter()
            .map(|r| r.into_iter().collect())
            .collect();
        for (i, f) in self.ops.iter().enumerate() {
            let x = 4 + i;
            adj.push(f.iter().copied().collect());
            for &v in f {
                adj[v].insert(x);
            }
        }
        let mut faces: Vec<[usize; 3]> = live.iter().filter(|f| !sel.contains(f)).copied().collect();
        for (f, p) in sel.iter().zip(&spec.pairs) {
            let apex = f.iter().copied().find(|v| !p.contains(v)).unwrap();
            faces.push([p[0], p[1], HSPLIT]);
            faces.push([p[0], apex, HSPLIT]);
            faces.push([p[1], apex, HSPLIT]);
        }
        let ctx = CheckCtx {
            spec,
            d: &d,
            adj: &adj,
            faces: &faces,
            nv,
        };
        let mut marks = Vec::new();
        if ctx.assign(&mut marks) {
            self.found = Some(Found {
                ops: self.ops.clone(),
                sel: sel.to_vec(),
                marks,
            });
        }
    }
}

struct CheckCtx<'a> {
    spec: &'a Spec<'a>,
    d: &'a [i64],
    adj: &'a [BTreeSet<usize>],
    faces: &'a [[usize; 3]],
    nv: usize,
}

impl CheckCtx<'_> {
    fn vertex(&self, r: Ref, marks: &[usize]) -> usize {
        match r {
            Ref::Att(i) => i,
            Ref::Mark(j) => marks[j],
        }
    }

    fn assign(&self, marks: &mut Vec<usize>) -> bool {
        let c = self.spec.contract;
        let j = marks.len();
        if j == c.marked.len() {
            return self.verify(marks);
        }
        match c.marked[j].source {
            Source::Attachment(i) => {
                marks.push(i);
                if self.assign(marks) {
                    return true;
                }
                marks.pop();
            }
            Source::Fresh => {
                for v in 4..self.nv {
                    if self.d[v] != c.marked[j].degree as i64 || marks.contains(&v) {
                        continue;
                    }
                    marks.push(v);
                    if self.assign(marks) {
                        return true;
                    }
                    marks.pop();
                }
            }
        }
        false
    }

    fn verify(&self, marks: &[usize]) -> bool {
        if let Some(h) = self.spec.hub {
            let x = marks[h];
            let others: BTreeSet<usize> = self
                .spec
                .exposed
                .iter()
                .map(|&r| self.vertex(r, marks))
                .filter(|&v| v != x)
                .collect();
            if self.adj[x] != others {
                return false;
            }
        }
        let fresh = |t: usize| t == HSPLIT || (t >= 4 && !marks.contains(&t));
        self.spec.required.iter().all(|&(p, q)| {
            let (p, q) = (self.vertex(p, marks), self.vertex(q, marks));
            self.faces.iter().any(|f| {
                f.contains(&p) && f.contains(&q) && f.iter().any(|&t| t != p && t != q && fresh(t))
            })
        })
    }
}

/// Default node budget for [`synthesize`].
pub const DEFAULT_BUDGET: u64 = 200_000_000;
/// Largest scaffold tried by the template search.
const MAX_SCAFFOLD: i64 = 16;

fn intercepts(fam: &Family) -> Vec<(i64, Vec<i64>)> {
    let lo: Vec<i64> = fam.pairs.iter().map(|p| 1 - p.1 * fam.min_param).collect();
    let hi = 16;
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let s = fam.added_const - cur.iter().sum::<i64>();
        let mut tg = fam.delta_const;
        for (c, p) in cur.iter().zip(&fam.pairs) {
            tg[p.0[0]] -= c;
            tg[p.0[1]] -= c;
        }
        if (0..=MAX_SCAFFOLD).contains(&s) && tg.iter().all(|&t| t >= 0) {
            out.push((s, cur.clone()));
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                out.sort();
                return out;
            }
            if cur[i] < hi {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// Searches scaffolds in a fixed order: scaffold size first, then
/// intercept tuple, then split sequence by face index. The result does not
/// depend on the contract's parameter, only on its family.
pub fn search_template(kind: GadgetKind, budget: u64) -> Result<Template, Error> {
    let Some(fam) = family(kind) else {
        return search_s();
    };
    let c = contract(kind, fam_contract_param(kind, fam.min_param))?;
    let hub = c.hub.as_ref().and_then(|h| c.marked.iter().position(|m| &m.label == h));
    let exposed: Vec<Ref> = c.exposed.iter().map(|l| c.label_index(l).unwrap()).collect();
    let required: Vec<(Ref, Ref)> = c
        .required_faces
        .iter()
        .map(|r| (c.label_index(&r.pair[0]).unwrap(), c.label_index(&r.pair[1]).unwrap()))
        .collect();
    let mut need: Vec<i64> = c
        .marked
        .iter()
        .filter(|m| m.source == Source::Fresh)
        .map(|m| m.degree as i64 - 3)
        .collect();
    need.sort_unstable_by(|a, b| b.cmp(a));
    let mut nodes = 0u64;
    for (s, cs) in intercepts(&fam) {
        let mut tg = fam.delta_const;
        for (c, p) in cs.iter().zip(&fam.pairs) {
            tg[p.0[0]] -= c;
            tg[p.0[1]] -= c;
        }
        let excess = 3 * s + fam.pairs.len() as i64 - tg.iter().sum::<i64>();
        let slack = excess - need.iter().sum::<i64>();
        if slack < 0 {
            continue;
        }
        let spec = Spec {
            contract: &c,
            tg,
            pairs: fam.pairs.iter().map(|p| p.0).collect(),
            s: s as usize,
            need: need.clone(),
            slack,
            hub,
            exposed: exposed.clone(),
            required: required.clone(),
        };
        let mut dfs = Dfs {
            spec: &spec,
            faces: vec![[0, 1, 3], [1, 2, 3], [2, 0, 3]],
            alive: vec![true; 3],
            deg: vec![3; 4],
            ops: Vec::new(),
            nodes: 0,
            budget: budget - nodes,
            found: None,
        };
        dfs.rec(0);
        nodes += dfs.nodes.min(budget - nodes);
        if let Some(f) = dfs.found {
            return Ok(template_from(kind, &c, &fam, &cs, f));
        }
        if nodes >= budget {
            return Err(Error::SearchExhausted(format!(
                "{} template: node budget {budget} spent",
                kind.name()
            )));
        }
    }
    Err(Error::SearchExhausted(format!(
        "{} template: no scaffold of at most {MAX_SCAFFOLD} splits",
        kind.name()
    )))
}

fn fam_contract_param(kind: GadgetKind, p: i64) -> u64 {
    match kind {
        GadgetKind::End1 => (4 * p + 17) as u64,
        _ => p as u64,
    }
}

fn template_from(kind: GadgetKind, c: &GadgetContract, fam: &Family, cs: &[i64], f: Found) -> Template {
    let hsplits = f
        .sel
        .iter()
        .zip(fam.pairs.iter().zip(cs))
        .map(|(face, (p, &icpt))| {
            let about = face.iter().copied().find(|v| !p.0.contains(v)).unwrap();
            HRule {
                face: *face,
                about,
                slope: p.1,
                intercept: icpt,
            }
        })
        .collect();
    let mut labels: Vec<(String, usize)> = c
        .attachments
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i))
        .collect();
    for (m, &v) in c.marked.iter().zip(&f.marks) {
        if m.source == Source::Fresh {
            labels.push((m.label.clone(), v));
        }
    }
    Template {
        kind,
        base: k4_rotations(),
        splits: f.ops,
        hsplits,
        labels,
    }
}

/// S: the first polytope on seven vertices, in enumeration order, that has
/// a triangle `a b c` and vertices meeting the contract.
fn search_s() -> Result<Template, Error> {
    for g in enumerator::polytopes_of_order(7)? {
        for face in g.faces() {
            if !face.is_triangle() {
                continue;
            }
            let t = face.cycle();
            for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)] {
                let (a, b, c) = (t[a], t[b], t[c]);
                if let Some(tpl) = s_labels(&g, a, b, c) {
                    return Ok(tpl);
                }
            }
        }
    }
    Err(Error::SearchExhausted(String::from("S: no polytope of order 7 fits")))
}

fn s_labels(g: &EmbeddedGraph, a: usize, b: usize, c: usize) -> Option<Template> {
    if g.degree(a) != 4 || g.degree(b) != 4 {
        return None;
    }
    let rest: Vec<usize> = (0..7).filter(|v| ![a, b, c].contains(v)).collect();
    let faces = g.faces();
    let third = |x: usize, y: usize, avoid: &[usize]| -> Option<usize> {
        faces.iter().find_map(|f| {
            if f.len() != 3 || !f.contains(x) || !f.contains(y) {
                return None;
            }
            let z = f.cycle().iter().copied().find(|&z| z != x && z != y)?;
            (!avoid.contains(&z)).then_some(z)
        })
    };
    for &d in &rest {
        if g.degree(d) != 5 {
            continue;
        }
        for &e in &rest {
            if e == d || g.degree(e) != 4 {
                continue;
            }
            let avoid = [a, b, c, d, e];
            let (Some(f), Some(gg)) = (third(d, e, &avoid), third(a, b, &avoid)) else {
                continue;
            };
            let mut order = vec![a, b, c, d, e];
            order.extend(rest.iter().copied().filter(|&v| v != d && v != e));
            let mut new_id = [0usize; 7];
            for (i, &v) in order.iter().enumerate() {
                new_id[v] = i;
            }
            let base = order
                .iter()
                .map(|&v| g.rotation(v).iter().map(|&w| new_id[w]).collect())
                .collect();
            let labels = [("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f), ("g", gg)]
                .iter()
                .map(|&(l, v)| (s(l), new_id[v]))
                .collect();
            return Some(Template {
                kind: GadgetKind::S,
                base,
                splits: Vec::new(),
                hsplits: Vec::new(),
                labels,
            });
        }
    }
    None
}

/// A gadget graph with its attachments, labeled, and the contract it meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub graph: EmbeddedGraph,
    pub attachments: Vec<usize>,
    pub contract: GadgetContract,
}

impl GadgetInstance {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.graph.label(label)
    }
}

/// Builds the template at a contract parameter.
pub fn instantiate(t: &Template, contract: &GadgetContract) -> Result<GadgetInstance, Error> {
    if t.kind != contract.kind {
        return Err(Error::Infeasible(format!(
            "{} template for a {} contract",
            t.kind.name(),
            contract.kind.name()
        )));
    }
    let param = template_param(t.kind, contract.param);
    let mut g = EmbeddedGraph::from_rotations(t.base.clone())?;
    for &[x, y, z] in &t.splits {
        let f = g.triangle_face(x, y, z).ok_or(Error::NotAFace)?;
        split_mut(&mut g, &f)?;
    }
    for r in &t.hsplits {
        let h = r.slope * param + r.intercept;
        if h < 1 {
            return Err(Error::Domain { what: "h", value: h });
        }
        let [x, y, z] = r.face;
        let f = g.triangle_face(x, y, z).ok_or(Error::NotAFace)?;
        h_split_mut(&mut g, &f, r.about, h as usize)?;
    }
    for (l, v) in &t.labels {
        g.set_label(l, *v);
    }
    Ok(GadgetInstance {
        graph: g,
        attachments: (0..contract.attachments.len()).collect(),
        contract: contract.clone(),
    })
}

/// The frozen template of a family.
pub fn template(kind: GadgetKind) -> Template {
    crate::data::template(kind)
}

/// Instantiates the frozen template for `contract`.
pub fn instance(contract: &GadgetContract) -> Result<GadgetInstance, Error> {
    instantiate(&template(contract.kind), contract)
}

/// Searches for a template, instantiates it and validates the result.
pub fn synthesize(contract: &GadgetContract, budget: u64) -> Result<GadgetInstance, Error> {
    if !contract.handshake_consistent() {
        return Err(Error::Infeasible(format!(
            "{} contract fails the handshake count",
            contract.kind.name()
        )));
    }
    let t = search_template(contract.kind, budget)?;
    let inst = instantiate(&t, contract)?;
    let report = validate_instance(&inst, contract);
    if !report.pass {
        return Err(Error::Infeasible(report.failures.join("; ")));
    }
    Ok(inst)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    pub pass: bool,
    pub failures: Vec<String>,
    pub host_order: usize,
    pub merged_order: usize,
}

/// The standard host: B(14), terminals at degrees (10, 8, 6, 3). Gadgets on
/// three attachments go into its first triangle instead.
fn test_host(k: usize) -> Result<(EmbeddedGraph, Vec<usize>), Error> {
    let st = builders::build_b(14)?;
    if k == 4 {
        return Ok((st.graph, st.terminals.to_vec()));
    }
    let f = st
        .graph
        .faces()
        .into_iter()
        .find(|f| f.is_triangle())
        .ok_or(Error::NotAFace)?;
    Ok((st.graph, f.cycle().to_vec()))
}

/// Glues `inst` onto the standard host and checks every clause of `contract`.
pub fn validate_instance(inst: &GadgetInstance, contract: &GadgetContract) -> GadgetReport {
    let mut fails = Vec::new();
    let (host, terms) = match test_host(contract.attachments.len()) {
        Ok(x) => x,
        Err(e) => {
            return GadgetReport {
                pass: false,
                failures: vec![format!("no test host: {e}")],
                host_order: 0,
                merged_order: 0,
            }
        }
    };
    let mut report = GadgetReport {
        pass: false,
        failures: Vec::new(),
        host_order: host.order(),
        merged_order: 0,
    };
    if let Some(req) = &contract.required_host_degrees {
        let got: Vec<usize> = terms.iter().map(|&t| host.degree(t)).collect();
        if &got != req {
            fails.push(format!("host terminals have degrees {got:?}, expected {req:?}"));
        }
    }
    let (merged, map) = match glue(&host, &terms, &inst.graph, &inst.attachments) {
        Ok(x) => x,
        Err(e) => {
            report.failures = vec![format!("glue failed: {e}")];
            return report;
        }
    };
    report.merged_order = merged.order();
    if !merged.is_polytopal() {
        fails.push(String::from("result is not polytopal"));
    }
    for (i, (&t, delta)) in terms.iter().zip(&contract.deltas).enumerate() {
        let got = merged.degree(t) as i64 - host.degree(t) as i64;
        if !delta.admits(got) {
            fails.push(format!("attachment {} changed by {got}, expected {delta:?}", contract.attachments[i]));
        }
    }
    let added = merged.order() - host.order();
    if added != contract.added_vertices {
        fails.push(format!("{added} vertices added, expected {}", contract.added_vertices));
    }
    if let Some(e) = contract.added_edges {
        let got = merged.size() - host.size();
        if got != e {
            fails.push(format!("{got} edges added, expected {e}"));
        }
    }
    let lookup = |label: &str| -> Option<usize> {
        if let Some(i) = contract.attachments.iter().position(|a| a == label) {
            return Some(terms[i]);
        }
        inst.graph.label(label).map(|v| map[v])
    };
    let mut mark_ids = BTreeSet::new();
    for m in &contract.marked {
        let v = match m.source {
            Source::Attachment(i) => Some(terms[i]),
            Source::Fresh => inst.graph.label(&m.label).map(|v| map[v]),
        };
        match v {
            Some(v) => {
                mark_ids.insert(v);
                if merged.degree(v) != m.degree {
                    fails.push(format!("{} has degree {}, expected {}", m.label, merged.degree(v), m.degree));
                }
            }
            None => fails.push(format!("label {} missing", m.label)),
        }
    }
    if let Some(h) = &contract.hub {
        if let Some(x) = lookup(h) {
            let want: BTreeSet<usize> = contract
                .exposed
                .iter()
                .filter(|l| *l != h)
                .filter_map(|l| lookup(l))
                .collect();
            let got: BTreeSet<usize> = merged.rotation(x).iter().copied().collect();
            if got != want {
                fails.push(format!("hub {h} is not adjacent to exactly the other terminals"));
            }
        }
    }
    let faces = merged.faces();
    for r in &contract.required_faces {
        let (Some(p), Some(q)) = (lookup(&r.pair[0]), lookup(&r.pair[1])) else {
            fails.push(format!("required face {:?}: label missing", r.pair));
            continue;
        };
        let named = r.third.as_ref().map(|l| lookup(l));
        let ok = faces.iter().any(|f| {
            if !f.is_triangle() || !f.contains(p) || !f.contains(q) {
                return false;
            }
            let t = f.cycle().iter().copied().find(|&t| t != p && t != q).unwrap();
            let fresh = t >= host.order() && !mark_ids.contains(&t);
            fresh && named.is_none_or(|n| n == Some(t))
        });
        if !ok {
            fails.push(format!("no face on {}{} with a fresh third corner", r.pair[0], r.pair[1]));
        }
    }
    report.pass = fails.is_empty();
    report.failures = fails;
    report
}
