//! The named constructions.
//!
//! * `r_n`, a polytope of minimal order with every degree `3..=n`: small
//!   cases come from a frozen catalog, `r_14` is `B(14)`, and larger cases
//!   grow from `r_14` by gluing gadgets, four degrees at a time.
//! * `A(n)`, `B(n)` and group raising: an explicit route for `n ≡ 2 mod 4`.
//! * `s_n = r_n` with `end'` glued on: three vertices of degree `n − 1`.
//! * Odd `n` sequences with a designated system of triangles, grown by
//!   m-splitting those triangles and gluing `s_{m+3}` (or `S` for m = 2).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds;
use crate::connectivity::face_criterion;
use crate::data;
use crate::enumerator;
use crate::error::Error;
use crate::gadgets::{self, GadgetContract, GadgetInstance};
use crate::graph::{EmbeddedGraph, Face};
use crate::spectra::{self, has_degree_spectrum, QnWitness, WitnessFace};
use crate::transform::{self, h_split_mut, split_mut, stellate_unchecked, unstellate, ConstructionTrace};

fn domain(what: &'static str, n: usize) -> Error {
    Error::Domain {
        what,
        value: n as i64,
    }
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

fn face3(g: &EmbeddedGraph, a: usize, b: usize, c: usize) -> Result<Face, Error> {
    g.triangle_face(a, b, c).ok_or(Error::NotAFace)
}

/// Stacked triangulation on `v_1..v_{n−5}` (ids `0..n−5`): each `v_i` goes
/// into the face `v_{i−1} v_{i−2} v_{i−3}`.
pub fn build_a(n: usize) -> Result<EmbeddedGraph, Error> {
    if n < 9 {
        return Err(domain("n", n));
    }
    let mut g = EmbeddedGraph::from_rotations_unchecked(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
    for i in 3..n - 5 {
        let f = face3(&g, i - 1, i - 2, i - 3)?;
        stellate_unchecked(&mut g, f.cycle());
    }
    Ok(g)
}

/// `B(n)` plus the bookkeeping needed to raise it.
#[derive(Clone, Debug)]
pub struct StackedState {
    pub graph: EmbeddedGraph,
    /// Degree-12 vertices held back for raising, in index order.
    pub v_prime: Vec<usize>,
    /// `(u, v, w, x)` at degrees (10, 8, 6, 3), `x` inside `u v w`.
    pub terminals: [usize; 4],
    /// Groups raised so far.
    pub groups: usize,
}

/// Splits every face of `A(n)`, then the face on the dart `v_1 → v_4`, then
/// the two faces through the split vertex of `v_2 v_3 v_5` on `v_2 v_5` and
/// `v_3 v_5`.
pub fn build_b(n: usize) -> Result<StackedState, Error> {
    if n < 14 {
        return Err(domain("n", n));
    }
    let a = build_a(n)?;
    let mut g = a.clone();
    let mut split_of = BTreeMap::new();
    for f in a.faces() {
        let c = f.cycle();
        let v = stellate_unchecked(&mut g, c);
        split_of.insert(sorted3(c[0], c[1], c[2]), v);
    }
    let f = g.face_of_dart(0, 3).ok_or(Error::NotAFace)?;
    split_mut(&mut g, &f)?;
    let s = split_of[&[1, 2, 4]];
    for x in [1, 2] {
        let f = face3(&g, x, 4, s)?;
        split_mut(&mut g, &f)?;
    }
    let x = split_of[&[n - 8, n - 7, n - 6]];
    Ok(StackedState {
        graph: g,
        v_prime: (6..n - 8).collect(),
        terminals: [n - 8, n - 7, n - 6, x],
        groups: 0,
    })
}

/// A face on the edge `xy` whose third corner has degree 3 and is not a
/// terminal, preferring the face on the dart `x → y`.
fn raising_face(st: &StackedState, x: usize, y: usize) -> Result<(Face, usize), Error> {
    for (p, q) in [(x, y), (y, x)] {
        let Some(f) = st.graph.face_of_dart(p, q) else {
            continue;
        };
        if !f.is_triangle() {
            continue;
        }
        let z = f.cycle()[2];
        if st.graph.degree(z) == 3 && !st.terminals.contains(&z) {
            return Ok((f, z));
        }
    }
    Err(Error::Infeasible(format!("no free face on edge {x}-{y}")))
}

/// Raises the next four held-back vertices to 4k+11, 4k+12, 4k+13, 4k+14
/// with 8k+1 splits: the low pair's face is h-split 4k−1 times, the high
/// pair's 4k+1 times, and one face on the second and fourth gets a split.
pub fn raise_group(st: &mut StackedState, k: usize, trace: Option<&mut ConstructionTrace>) -> Result<(), Error> {
    if k < 1 {
        return Err(domain("k", k));
    }
    let lo = 4 * (k - 1);
    if st.v_prime.len() < lo + 4 {
        return Err(Error::Infeasible(format!("group {k} needs four more held-back vertices")));
    }
    let [t1, t2, t3, t4] = [st.v_prime[lo], st.v_prime[lo + 1], st.v_prime[lo + 2], st.v_prime[lo + 3]];
    let mut local = ConstructionTrace::new();
    let tr = match trace {
        Some(t) => t,
        None => &mut local,
    };
    let (f, z) = raising_face(st, t1, t2)?;
    tr.h_split(&mut st.graph, &f, z, 4 * k - 1)?;
    let (f, z) = raising_face(st, t3, t4)?;
    tr.h_split(&mut st.graph, &f, z, 4 * k + 1)?;
    let (f, _) = raising_face(st, t2, t4)?;
    tr.split(&mut st.graph, &f)?;
    st.groups = k;
    Ok(())
}

/// How the `n ≡ 2 mod 4` base of a chain is built.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Route {
    /// `B(n)` and group raising.
    #[default]
    Stacked,
    /// `r_14` followed by `pc_1, pc_2, …`.
    Gadget,
}

/// A graph in a gadget chain with its exposed terminals.
struct Chain {
    graph: EmbeddedGraph,
    terminals: Vec<usize>,
    trace: ConstructionTrace,
}

impl Chain {
    fn attach(&mut self, name: &str, inst: &GadgetInstance) -> Result<(), Error> {
        let (g, map) = self
            .trace
            .glue(name, &self.graph, &self.terminals, &inst.graph, &inst.attachments)?;
        let c = &inst.contract;
        let mut next = Vec::new();
        for l in &c.exposed {
            let v = match c.attachments.iter().position(|a| a == l) {
                Some(i) => self.terminals[i],
                None => map[inst.vertex(l).ok_or(Error::Infeasible(format!("label {l} missing")))?],
            };
            next.push(v);
        }
        self.graph = g;
        self.terminals = next;
        Ok(())
    }

    fn glue_contract(&mut self, name: &str, c: GadgetContract) -> Result<(), Error> {
        let inst = gadgets::instance(&c)?;
        self.attach(name, &inst)
    }

    fn mark(&mut self, n: usize) {
        self.trace.checkpoint(&format!("r_{n}"), &self.graph);
    }
}

fn base_chain(n: usize, route: Route) -> Result<Chain, Error> {
    debug_assert!(n >= 14 && n % 4 == 2);
    let kmax = (n - 14) / 4;
    let mut trace = ConstructionTrace::new();
    match route {
        Route::Stacked => {
            let mut st = build_b(n)?;
            for k in 1..=kmax {
                raise_group(&mut st, k, Some(&mut trace))?;
            }
            let mut c = Chain {
                graph: st.graph,
                terminals: st.terminals.to_vec(),
                trace,
            };
            c.mark(n);
            Ok(c)
        }
        Route::Gadget => {
            let st = build_b(14)?;
            let mut c = Chain {
                graph: st.graph,
                terminals: st.terminals.to_vec(),
                trace,
            };
            c.mark(14);
            for k in 1..=kmax {
                c.glue_contract(&format!("pc_{k}"), gadgets::contract_pc(k as u64)?)?;
                c.mark(14 + 4 * k);
            }
            Ok(c)
        }
    }
}

fn chain(n: usize, route: Route) -> Result<Chain, Error> {
    match n % 4 {
        2 => base_chain(n, route),
        1 => {
            let mut c = base_chain(n - 3, route)?;
            c.glue_contract(&format!("end1_{n}"), gadgets::contract_end1(n as u64)?)?;
            c.mark(n);
            Ok(c)
        }
        0 => {
            let mut c = base_chain(n - 2, route)?;
            c.glue_contract(&format!("end0_{n}"), gadgets::contract_end0(n as u64)?)?;
            c.mark(n);
            Ok(c)
        }
        _ => {
            let mut c = chain(n - 2, route)?;
            c.glue_contract(&format!("end0_{n}"), gadgets::contract_end0(n as u64)?)?;
            c.mark(n);
            Ok(c)
        }
    }
}

/// `r_n` along the default route.
pub fn build_r(n: usize) -> Result<(EmbeddedGraph, ConstructionTrace), Error> {
    build_r_route(n, Route::default())
}

pub fn build_r_route(n: usize, route: Route) -> Result<(EmbeddedGraph, ConstructionTrace), Error> {
    if n < 3 {
        return Err(domain("n", n));
    }
    if n <= 13 || n == 15 {
        let g = catalog_r(n);
        let mut t = ConstructionTrace::new();
        t.checkpoint(&format!("r_{n}"), &g);
        return Ok((g, t));
    }
    if n == 14 {
        let g = build_b(14)?.graph;
        let mut t = ConstructionTrace::new();
        t.checkpoint("r_14", &g);
        return Ok((g, t));
    }
    let c = chain(n, route)?;
    Ok((c.graph, c.trace))
}

/// Lower members of a chain certified inside `r_n`: `(m, map)` with `map`
/// sending `r_m`'s ids into `r_n`.
pub fn nested(trace: &ConstructionTrace) -> Vec<(usize, Vec<usize>)> {
    trace
        .checkpoints()
        .iter()
        .filter_map(|c| {
            let m = c.name.strip_prefix("r_")?.parse().ok()?;
            Some((m, c.map.clone()))
        })
        .collect()
}

/// The chain members `r_n` is expected to contain by construction.
pub fn expected_predecessors(n: usize) -> Vec<usize> {
    match n % 4 {
        2 => vec![n - 4],
        1 => vec![n - 3],
        0 => vec![n - 2],
        _ => vec![n - 2, n - 5],
    }
}

/// A catalog entry: name and graph.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub n: usize,
    pub graph: EmbeddedGraph,
}

/// The frozen `r_n` for `n ≤ 13` and `n = 15`; for `n ≤ 7` the first of
/// the witnesses.
pub fn catalog_r(n: usize) -> EmbeddedGraph {
    let entries = data::catalog();
    let (_, rot) = entries
        .iter()
        .find(|(name, _)| name_n(name) == Some(n))
        .expect("catalog covers n <= 13 and n = 15");
    EmbeddedGraph::from_rotations(rot.clone()).expect("catalog graphs are valid")
}

fn name_n(name: &str) -> Option<usize> {
    let rest = name.strip_prefix("r_")?;
    rest.split('.').next()?.parse().ok()
}

/// Every frozen catalog graph.
pub fn build_catalog() -> Vec<CatalogEntry> {
    data::catalog()
        .into_iter()
        .map(|(name, rot)| CatalogEntry {
            n: name_n(&name).unwrap(),
            name,
            graph: EmbeddedGraph::from_rotations(rot).expect("catalog graphs are valid"),
        })
        .collect()
}

/// Recomputes the catalog from scratch: the enumerator for n ≤ 7, split
/// search for 8..=13, and the `r_15` search.
pub fn search_catalog() -> Result<Vec<CatalogEntry>, Error> {
    let mut out = Vec::new();
    let mut seeds = Vec::new();
    for n in 3..=7 {
        let cert = enumerator::certify_table1_small(n, n + 1)?;
        let many = cert.witnesses.len() > 1;
        for (i, g) in cert.witnesses.iter().enumerate() {
            let name = if many { format!("r_{n}.{}", i + 1) } else { format!("r_{n}") };
            out.push(CatalogEntry {
                name,
                n,
                graph: g.clone(),
            });
        }
        if n == 7 {
            seeds = cert.witnesses;
        }
    }
    // Extend the previous entry when it can be done, else restart from
    // the order-8 graphs.
    let mut prev: Option<EmbeddedGraph> = None;
    for n in 8..=13 {
        let order = bounds::p_of(n as u64)? as usize;
        let mut tries: Vec<EmbeddedGraph> = prev.take().into_iter().collect();
        tries.extend(seeds.iter().cloned());
        let graph = split_search(&tries, n, order)?;
        prev = Some(graph.clone());
        out.push(CatalogEntry {
            name: format!("r_{n}"),
            n,
            graph,
        });
    }
    out.push(CatalogEntry {
        name: String::from("r_15"),
        n: 15,
        graph: search_r15()?,
    });
    Ok(out)
}

/// True when `r` more splits cannot make every degree of `4..=n` appear.
/// Each split hands out exactly three unit raises, and each missing degree
/// needs its own vertex raised to it, either an existing one or a degree-3
/// vertex added later. Matching degrees from the top down to the largest
/// unused start value below them minimizes the raises needed.
fn hopeless(g: &EmbeddedGraph, n: usize, r: usize) -> bool {
    let mut start: Vec<usize> = g.degrees();
    start.extend(core::iter::repeat_n(3, r));
    start.sort_unstable();
    let mut used = vec![false; start.len()];
    let mut cost = 0;
    for t in (4..=n).rev() {
        let Some(i) = (0..start.len()).rev().find(|&i| !used[i] && start[i] <= t) else {
            return true;
        };
        used[i] = true;
        cost += t - start[i];
        if cost > 3 * r {
            return true;
        }
    }
    false
}

struct SplitDfs {
    n: usize,
    faces: Vec<[usize; 3]>,
    alive: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl SplitDfs {
    fn run(&mut self, g: &mut EmbeddedGraph, start: usize, left: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if left == 0 {
            return has_degree_spectrum(g, self.n);
        }
        if hopeless(g, self.n, left) {
            return false;
        }
        for i in start..self.faces.len() {
            if !self.alive[i] {
                continue;
            }
            let [x, y, z] = self.faces[i];
            stellate_unchecked(g, &[x, y, z]);
            let d = g.order() - 1;
            self.alive[i] = false;
            let mark = self.faces.len();
            self.faces.extend([[x, y, d], [y, z, d], [z, x, d]]);
            self.alive.extend([true; 3]);
            if self.run(g, i + 1, left - 1) {
                return true;
            }
            self.faces.truncate(mark);
            self.alive.truncate(mark);
            self.alive[i] = true;
            unstellate(g, &[x, y, z]);
        }
        false
    }
}

/// Node budget for one [`split_search`] call.
pub const SPLIT_BUDGET: u64 = 50_000_000;

/// Depth-first over sets of triangle splits applied to each seed in turn.
/// Returns the first polytope of the target order with full spectrum.
pub fn split_search(seeds: &[EmbeddedGraph], n: usize, order: usize) -> Result<EmbeddedGraph, Error> {
    for seed in seeds {
        if seed.order() > order {
            continue;
        }
        let faces: Vec<[usize; 3]> = seed
            .faces()
            .iter()
            .filter(|f| f.is_triangle())
            .map(|f| {
                let c = f.cycle();
                [c[0], c[1], c[2]]
            })
            .collect();
        let mut dfs = SplitDfs {
            n,
            alive: vec![true; faces.len()],
            faces,
            nodes: 0,
            budget: SPLIT_BUDGET,
        };
        let mut g = seed.clone();
        if dfs.run(&mut g, 0, order - seed.order()) && g.is_polytopal() {
            return Ok(g);
        }
    }
    Err(Error::SearchExhausted(format!("no split extension reaches n = {n} at order {order}")))
}

/// `r_15`: drop one edge of `B(14)` keeping 3-connectivity, then split five
/// times.
pub fn search_r15() -> Result<EmbeddedGraph, Error> {
    let b = build_b(14)?.graph;
    for (u, v) in b.edges() {
        if b.degree(u) <= 3 || b.degree(v) <= 3 {
            continue;
        }
        let h = b.without_edge(u, v).ok_or(Error::NotAFace)?;
        if !face_criterion(&h) {
            continue;
        }
        if let Ok(g) = split_search(&[h], 15, 31) {
            return Ok(g);
        }
    }
    Err(Error::SearchExhausted(String::from("r_15")))
}

/// `s_n`: `r_n` with `end'` glued onto the terminals left by `end1`.
pub fn build_s(n: usize) -> Result<EmbeddedGraph, Error> {
    build_s_route(n, Route::default()).map(|c| c.0)
}

pub fn build_s_route(n: usize, route: Route) -> Result<(EmbeddedGraph, ConstructionTrace), Error> {
    if n < 17 || n % 4 != 1 {
        return Err(domain("n", n));
    }
    let mut c = chain(n, route)?;
    c.glue_contract(&format!("endprime_{n}"), gadgets::contract_endprime(n as u64)?)?;
    c.trace.checkpoint(&format!("s_{n}"), &c.graph);
    Ok((c.graph, c.trace))
}

/// A square pyramid with one apex triangle split: degrees 5, 4, 4, 3, 3, 3.
pub fn build_t_seed5() -> EmbeddedGraph {
    // Square 0 1 2 3, apex 4.
    let mut g = EmbeddedGraph::from_rotations_unchecked(vec![
        vec![1, 4, 3],
        vec![2, 4, 0],
        vec![3, 4, 1],
        vec![0, 4, 2],
        vec![0, 1, 2, 3],
    ]);
    let f = g.triangle_face(4, 0, 1).expect("apex triangle");
    stellate_unchecked(&mut g, f.cycle());
    g
}

/// Which gadget replaces the leading triangle in [`extend_q`].
#[derive(Clone, Debug)]
pub enum Variant {
    /// `s_{m+3}` with an extended witness whose leading pair has a free
    /// opposite corner.
    Alg2 {
        s: EmbeddedGraph,
        witness: QnWitness,
    },
    /// The seven-vertex gadget `S`, with m = 2.
    Lemma7,
}

impl Variant {
    /// Builds `s_{m+3}` and its witness.
    pub fn alg2(m: usize) -> Result<Variant, Error> {
        if m < 14 || m % 4 != 2 {
            return Err(domain("m", m));
        }
        let s = build_s(m + 3)?;
        let witness = spectra::find_r_witness(&s, m + 3, true)
            .ok_or_else(|| Error::SearchExhausted(format!("no extended witness on s_{}", m + 3)))?;
        Ok(Variant::Alg2 { s, witness })
    }
}

/// One member `t_n` of an extension sequence.
#[derive(Clone, Debug)]
pub struct QStep {
    pub n: usize,
    pub graph: EmbeddedGraph,
    pub witness: QnWitness,
    /// `map[v]` is the id in this graph of vertex `v` of the previous one.
    pub map: Vec<usize>,
}

/// Grows `t` (with a witness for `l`) by `steps` rounds. Each round
/// m-splits every designated triangle but the first about its third corner,
/// and replaces the first by the variant's gadget.
pub fn extend_q(t: &EmbeddedGraph, witness: &QnWitness, l: usize, variant: &Variant, steps: usize) -> Result<Vec<QStep>, Error> {
    let m = match variant {
        Variant::Alg2 { s, .. } => {
            let m = s.max_degree() - 3;
            if m < 14 || m % 4 != 2 {
                return Err(domain("m", m));
            }
            m
        }
        Variant::Lemma7 => 2,
    };
    let report = spectra::check_q(t, l, Some(witness));
    if !report.pass {
        return Err(Error::Infeasible(format!("seed fails the property: {}", report.failures.join("; "))));
    }
    let lemma7 = match variant {
        Variant::Lemma7 => Some(gadgets::instance(&gadgets::contract_s())?),
        Variant::Alg2 { .. } => None,
    };
    let mut out = Vec::with_capacity(steps);
    let mut g = t.clone();
    let mut w = witness.clone();
    let mut n = l;
    for _ in 0..steps {
        let first = w.faces[0];
        let mut faces = Vec::with_capacity(w.faces.len() + 1);
        let mut kept = Vec::new();
        for f in &w.faces[1..] {
            let face = face3(&g, f.v1, f.v2, f.v3)?;
            let vs = h_split_mut(&mut g, &face, f.v3, m)?;
            kept.push(WitnessFace {
                v1: f.v1,
                v2: f.v2,
                v3: *vs.last().unwrap(),
            });
        }
        let merged = match variant {
            Variant::Alg2 { s, witness: sw } => {
                let lead = sw.faces[0];
                let z = spectra::opposite_third(s, lead.v1, lead.v2, lead.v3).ok_or(Error::NotAFace)?;
                let (merged, map) = transform::glue(&g, &[first.v1, first.v2, first.v3], s, &[lead.v1, lead.v2, z])?;
                faces.push(WitnessFace {
                    v1: first.v1,
                    v2: first.v2,
                    v3: map[lead.v3],
                });
                for f in &sw.faces[1..] {
                    faces.push(WitnessFace {
                        v1: map[f.v1],
                        v2: map[f.v2],
                        v3: map[f.v3],
                    });
                }
                faces.extend(kept);
                merged
            }
            Variant::Lemma7 => {
                let inst = lemma7.as_ref().unwrap();
                let (merged, map) = transform::glue(&g, &[first.v1, first.v2, first.v3], &inst.graph, &inst.attachments)?;
                let at = |l: &str| map[inst.vertex(l).unwrap()];
                faces.push(WitnessFace {
                    v1: at("d"),
                    v2: at("e"),
                    v3: at("f"),
                });
                faces.extend(kept);
                faces.push(WitnessFace {
                    v1: first.v1,
                    v2: first.v2,
                    v3: at("g"),
                });
                merged
            }
        };
        g = merged;
        w = QnWitness { faces };
        let prev = out.last().map_or(t.order(), |s: &QStep| s.graph.order());
        n += m;
        out.push(QStep {
            n,
            graph: g.clone(),
            witness: w.clone(),
            map: (0..prev).collect(),
        });
    }
    Ok(out)
}

/// Orders along an extension sequence from the step formula: round k adds
/// `m·(J−1) + added` vertices, J the number of designated triangles before
/// the round and `added` the gadget's new vertex count.
pub fn extension_orders(p0: usize, l: usize, m: usize, added: usize, steps: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(steps);
    let mut p = p0;
    for k in 1..=steps {
        let cur = l + m * (k - 1);
        let j = (cur - 3) / 2;
        p += m * (j - 1) + added;
        out.push(p);
    }
    out
}

/// Slack `n²/4 − 11n/4 + (5/(2m) + eps)n − p` of the order bound, scaled by
/// `4m·den` to stay in integers; `eps = num/den`.
pub fn order_bound_slack(n: usize, p: usize, m: usize, num: i128, den: i128) -> i128 {
    let (n, p, m) = (n as i128, p as i128, m as i128);
    // 4m·den·(n²/4 − 11n/4 + 5n/(2m) + (num/den)n − p)
    m * den * n * n - 11 * m * den * n + 10 * den * n + 4 * m * num * n - 4 * m * den * p
}

/// First step from which the order bound holds for every later step of the
/// exact recurrence, or `None` if the slack is not eventually increasing.
pub fn order_bound_threshold(p0: usize, l: usize, m: usize, added: usize, num: i128, den: i128, horizon: usize) -> Option<usize> {
    let orders = extension_orders(p0, l, m, added, horizon);
    let slack: Vec<i128> = orders
        .iter()
        .enumerate()
        .map(|(i, &p)| order_bound_slack(l + m * (i + 1), p, m, num, den))
        .collect();
    let last = slack.len().checked_sub(2)?;
    if slack[last + 1] <= slack[last] || slack[last + 1] < 0 {
        return None;
    }
    let mut k = slack.len();
    while k > 0 && slack[k - 1] >= 0 {
        k -= 1;
    }
    Some(k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_and_b_shapes() {
        let a = build_a(14).unwrap();
        assert_eq!((a.order(), a.size()), (9, 21));
        assert_eq!(build_a(12).unwrap().degree_sequence().as_slice(), [6, 5, 5, 4, 4, 3, 3]);
        let b = build_b(14).unwrap();
        assert_eq!(b.graph.order(), 26);
        let t = b.terminals;
        assert_eq!(
            t.iter().map(|&v| b.graph.degree(v)).collect::<Vec<_>>(),
            [10, 8, 6, 3]
        );
    }

    #[test]
    fn seed_shape() {
        let g = build_t_seed5();
        assert_eq!(g.degree_sequence().as_slice(), [5, 4, 4, 3, 3, 3]);
    }
}
