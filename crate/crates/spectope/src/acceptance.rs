//! The acceptance suite. Each criterion returns a pass flag and a short
//! detail line; `selftest` and the `acceptance` test target both run it.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectope_core::builders::{self, Route, Variant};
use spectope_core::canon::canonical_form;
use spectope_core::gadgets;
use spectope_core::spectra::{self, has_degree_spectrum};
use spectope_core::transform::{self, h_split_mut, is_injective_homomorphism, split_mut};
use spectope_core::{bounds, enumerator, EmbeddedGraph};

use crate::cli;
use crate::io::{self, Emit};

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<28} {:>8.2}s  {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = fn() -> Result<String, String>;

pub const CRITERIA: [(u8, &str, Check); 11] = [
    (1, "small table", table_small),
    (2, "closed form", closed_form),
    (3, "lower bounds", lower_bounds),
    (4, "ten small witnesses", small_witnesses),
    (5, "stacked route identities", stacked_identities),
    (6, "nesting", nesting),
    (7, "three of degree n-1", three_high),
    (8, "extension bookkeeping", extension_bookkeeping),
    (9, "S-gadget sequence", s_sequence),
    (10, "dual form", dual_form),
    (11, "random operation sequences", random_sequences),
];

pub fn run(id: u8) -> CriterionResult {
    let (id, name, f) = CRITERIA[(id - 1) as usize];
    let t = Instant::now();
    let r = f();
    let elapsed = t.elapsed();
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        id,
        name,
        pass,
        detail,
        elapsed,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA.len() as u8).map(run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn p_of(n: usize) -> usize {
    bounds::p_of(n as u64).unwrap() as usize
}

const SMALL_ORDERS: [usize; 11] = [4, 5, 6, 7, 8, 10, 11, 14, 16, 19, 23];

fn table_small() -> Result<String, String> {
    let t = Instant::now();
    let searched = builders::search_catalog().map_err(s)?;
    let search_time = t.elapsed();
    ensure(search_time < Duration::from_secs(300), || format!("catalog search took {search_time:?}"))?;
    let frozen = builders::build_catalog();
    ensure(searched.len() == frozen.len(), || String::from("search and frozen catalog differ in size"))?;
    for (a, b) in searched.iter().zip(&frozen) {
        ensure(a.name == b.name && a.graph == b.graph, || format!("{} differs from the frozen copy", a.name))?;
    }
    let t = Instant::now();
    for n in 3..=13 {
        let (g, _) = cli::construct_r(n, Route::Stacked).map_err(s)?;
        let back = io::from_json(&io::emit(&g, Emit::Json)).map_err(s)?;
        let r = spectra::check_p(&back, n);
        ensure(r.pass, || format!("r_{n}: {}", r.failures.join("; ")))?;
        ensure(back.order() == SMALL_ORDERS[n - 3], || format!("r_{n} has order {}", back.order()))?;
    }
    let cached = t.elapsed();
    ensure(cached < Duration::from_secs(1), || format!("cached construction took {cached:?}"))?;
    Ok(format!(
        "orders {SMALL_ORDERS:?}; search {:.2}s, cached {:.0}ms",
        search_time.as_secs_f64(),
        cached.as_secs_f64() * 1e3
    ))
}

fn closed_form() -> Result<String, String> {
    let mut worst = Duration::ZERO;
    for n in 14..=300usize {
        let t = Instant::now();
        let (g, _) = builders::build_r(n).map_err(s)?;
        worst = worst.max(t.elapsed());
        let want = (n * n + 62 - 11 * n).div_ceil(4);
        ensure(g.order() == want, || format!("r_{n} has order {}, want {want}", g.order()))?;
        ensure(has_degree_spectrum(&g, n), || format!("r_{n} misses a degree"))?;
        ensure(g.is_polytopal(), || format!("r_{n} is not polytopal"))?;
    }
    ensure(worst < Duration::from_secs(1), || format!("slowest build {worst:?}"))?;
    Ok(format!("n = 14..=300, slowest build {:.0}ms", worst.as_secs_f64() * 1e3))
}

fn lower_bounds() -> Result<String, String> {
    let best = |n: u64| bounds::bound6(n).unwrap().max(bounds::bound4(n).unwrap());
    for n in 8..=13u64 {
        let want = SMALL_ORDERS[(n - 3) as usize] as u64;
        ensure(best(n) == want, || format!("n = {n}: bounds give {}, table {want}", best(n)))?;
    }
    for n in 14..=10_000u64 {
        let closed = (n * n + 62 - 11 * n).div_ceil(4);
        ensure(best(n) == closed, || format!("n = {n}: bounds give {}, closed form {closed}", best(n)))?;
        ensure(bounds::p_of(n) == Ok(closed), || format!("p_of({n}) disagrees"))?;
    }
    Ok(String::from("n = 8..=13 and 14..=10000"))
}

fn small_witnesses() -> Result<String, String> {
    let all = enumerator::enumerate_polytopes(8).map_err(s)?;
    let counts: Vec<usize> = (3..=7)
        .map(|n| {
            all.iter()
                .filter(|g| g.order() == n + 1 && has_degree_spectrum(g, n))
                .count()
        })
        .collect();
    ensure(counts == [1, 2, 2, 3, 2], || format!("counts {counts:?}"))?;
    Ok(format!("{} polytopes of order <= 8, witnesses {counts:?}", all.len()))
}

/// The degree sequence of B(n), written out the same way as in the text.
fn b_sequence(n: usize) -> Vec<usize> {
    let mut v = vec![7, 9, 11, 13, 14, 12];
    v.extend(std::iter::repeat_n(12, n - 14));
    v.extend([10, 8, 6, 5, 4]);
    v.extend(std::iter::repeat_n(3, 2 * n - 13));
    v
}

fn stacked_identities() -> Result<String, String> {
    for n in (14..=102).step_by(4) {
        let a = builders::build_a(n).map_err(s)?;
        ensure(a.order() == n - 5, || format!("|A({n})| = {}", a.order()))?;
        let b = builders::build_b(n).map_err(s)?.graph;
        ensure(b.order() == 3 * n - 16, || format!("|B({n})| = {}", b.order()))?;
        let mut got = b.degrees();
        got.sort_unstable();
        let mut want = b_sequence(n);
        want.sort_unstable();
        ensure(got == want, || format!("B({n}) degree sequence differs"))?;
        ensure(b.is_polytopal(), || format!("B({n}) is not polytopal"))?;
    }
    let b14 = builders::build_b(14).map_err(s)?.graph;
    for route in [Route::Stacked, Route::Gadget] {
        let (r14, _) = builders::build_r_route(14, route).map_err(s)?;
        ensure(canonical_form(&b14) == canonical_form(&r14), || String::from("B(14) and r_14 differ"))?;
    }
    Ok(String::from("n = 14, 18, ..., 102"))
}

fn nesting() -> Result<String, String> {
    let mut maps = 0;
    for n in 16..=100 {
        let (g, tr) = builders::build_r_route(n, Route::Gadget).map_err(s)?;
        let found = builders::nested(&tr);
        for m in builders::expected_predecessors(n) {
            let (_, map) = found
                .iter()
                .find(|(k, _)| *k == m)
                .ok_or_else(|| format!("r_{n} trace lacks r_{m}"))?;
            let (h, _) = builders::build_r_route(m, Route::Gadget).map_err(s)?;
            ensure(is_injective_homomorphism(&h, &g, map), || format!("r_{m} does not map into r_{n}"))?;
            maps += 1;
        }
        ensure(g.order() == p_of(n) && has_degree_spectrum(&g, n) && g.is_polytopal(), || {
            format!("gadget-route r_{n} fails the property")
        })?;
    }
    Ok(format!("{maps} embeddings for n = 16..=100"))
}

fn three_high() -> Result<String, String> {
    for n in (17..=101).step_by(4) {
        let g = builders::build_s(n).map_err(s)?;
        let want = bounds::lemma6_bound(n as u64).unwrap() as usize;
        ensure(g.order() == want, || format!("s_{n} has order {}, want {want}", g.order()))?;
        let high = (0..g.order()).filter(|&v| g.degree(v) == n - 1).count();
        ensure(high >= 3, || format!("s_{n} has {high} vertices of degree n-1"))?;
        let r = spectra::check_r(&g, n, None);
        ensure(r.pass, || format!("s_{n}: {}", r.failures.join("; ")))?;
    }
    Ok(String::from("n = 17, 21, ..., 101"))
}

fn extension_bookkeeping() -> Result<String, String> {
    let (m, l, steps) = (14, 17, 10);
    let v = Variant::alg2(m).map_err(s)?;
    let Variant::Alg2 { s: seed, witness } = &v else {
        unreachable!()
    };
    let added = seed.order() - 3;
    let out = builders::extend_q(seed, &witness.without_first(), l, &v, steps).map_err(s)?;
    let want = builders::extension_orders(seed.order(), l, m, added, steps);
    for (st, &p) in out.iter().zip(&want) {
        ensure(st.graph.order() == p, || format!("t_{} has order {}, recurrence {p}", st.n, st.graph.order()))?;
        let r = spectra::check_q(&st.graph, st.n, Some(&st.witness));
        ensure(r.pass, || format!("t_{}: {}", st.n, r.failures.join("; ")))?;
    }
    ensure(out[0].n == 31 && out[0].graph.order() == 183, || format!("|V(t_31)| = {}", out[0].graph.order()))?;
    // The slack grows linearly, so past the threshold it stays non-negative.
    let k0 = builders::order_bound_threshold(seed.order(), l, m, added, 1, 10, 200)
        .ok_or_else(|| String::from("slack is not eventually increasing"))?;
    let orders = builders::extension_orders(seed.order(), l, m, added, k0 + steps);
    for k in k0..k0 + steps {
        let n = (l + m * k) as f64;
        let p = orders[k - 1] as f64;
        let bound = n * n / 4.0 - 11.0 * n / 4.0 + (5.0 / 28.0 + 0.1) * n;
        ensure(p <= bound, || format!("step {k}: order {p} above {bound:.2}"))?;
    }
    Ok(format!(
        "t_31 = 183; bound holds from step {k0} (n = {}) on, checked for {steps} steps",
        l + m * k0
    ))
}

fn s_sequence() -> Result<String, String> {
    let seed = builders::build_t_seed5();
    let w = spectra::find_q_witness(&seed, 5).ok_or_else(|| String::from("seed has no witness"))?;
    let out = builders::extend_q(&seed, &w, 5, &Variant::Lemma7, 20).map_err(s)?;
    let mut prev = seed.order();
    for (i, st) in out.iter().enumerate() {
        let (k, l) = (i + 1, 5);
        let inc = 2 * ((l - 3 + 2 * (k - 1)) / 2 - 1) + 4;
        ensure(st.graph.order() == prev + inc, || format!("step {k}: order {}", st.graph.order()))?;
        let r = spectra::check_q(&st.graph, st.n, Some(&st.witness));
        ensure(r.pass, || format!("t_{}: {}", st.n, r.failures.join("; ")))?;
        ensure(st.graph.is_polytopal(), || format!("t_{} is not polytopal", st.n))?;
        prev = st.graph.order();
    }
    ensure(out[0].graph.order() == 10, || format!("|V(t_7)| = {}", out[0].graph.order()))?;
    Ok(format!("20 steps, t_45 has order {prev}"))
}

fn dual_form() -> Result<String, String> {
    for n in 3..=100 {
        let (g, _) = builders::build_r(n).map_err(s)?;
        let d = g.dualize().map_err(s)?;
        let r = spectra::check_face_spectrum(&d, n).map_err(s)?;
        ensure(r.pass, || format!("dual of r_{n}: {}", r.failures.join("; ")))?;
        ensure(d.face_count() == p_of(n), || format!("dual of r_{n} has {} faces", d.face_count()))?;
    }
    Ok(String::from("n = 3..=100"))
}

/// One random operation on a triangle of `g`: split, h-split, or glue of a
/// K4, an S gadget or a four-terminal gadget.
fn random_op(g: &mut EmbeddedGraph, rng: &mut ChaCha8Rng, gadgets: &[gadgets::GadgetInstance]) -> Result<(), String> {
    let tris: Vec<_> = g.faces().into_iter().filter(|f| f.is_triangle()).collect();
    let f = tris.choose(rng).ok_or_else(|| String::from("no triangle"))?.clone();
    let c = f.cycle().to_vec();
    match rng.gen_range(0..4) {
        0 => {
            split_mut(g, &f).map_err(s)?;
        }
        1 => {
            let about = c[rng.gen_range(0..3)];
            h_split_mut(g, &f, about, rng.gen_range(1..=4)).map_err(s)?;
        }
        2 => {
            let k4 = EmbeddedGraph::from_rotations(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap();
            let inst = &gadgets[0];
            let (gadget, atts) = if rng.gen_bool(0.5) {
                (&k4, vec![0, 1, 2])
            } else {
                (&inst.graph, inst.attachments.clone())
            };
            *g = glue_any(g, &c, gadget, &atts)?;
        }
        _ => {
            // A fresh degree-3 vertex inside the triangle gives four terminals.
            let x = split_mut(g, &f).map_err(s)?;
            let inst = &gadgets[rng.gen_range(1..gadgets.len())];
            let mut terms = c.clone();
            terms.rotate_left(rng.gen_range(0..3));
            terms.push(x);
            *g = glue_any(g, &terms, &inst.graph, &inst.attachments)?;
        }
    }
    Ok(())
}

/// Glues with the host terminals in the orientation that matches the gadget.
fn glue_any(host: &EmbeddedGraph, terms: &[usize], gadget: &EmbeddedGraph, atts: &[usize]) -> Result<EmbeddedGraph, String> {
    let mut flipped = terms.to_vec();
    flipped.swap(1, 2);
    transform::glue(host, terms, gadget, atts)
        .or_else(|_| transform::glue(host, &flipped, gadget, atts))
        .map(|x| x.0)
        .map_err(s)
}

fn invariants(g: &EmbeddedGraph) -> Result<(), String> {
    let (p, q) = (g.order(), g.size());
    ensure(g.is_polytopal(), || String::from("not polytopal"))?;
    ensure(g.degrees().iter().sum::<usize>() == 2 * q, || String::from("handshake"))?;
    ensure(p + g.face_count() == q + 2, || String::from("Euler"))?;
    ensure(q + 6 <= 3 * p, || String::from("q > 3p - 6"))
}

pub const RANDOM_SEQUENCES: usize = 10_000;

/// Runs `count` random sequences from a fixed seed; returns the total
/// number of operations applied.
pub fn random_sequences_with(count: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let catalog = builders::build_catalog();
    let mut insts = vec![gadgets::instance(&gadgets::contract_s()).map_err(s)?];
    for c in [
        gadgets::contract_pc(1),
        gadgets::contract_end1(17),
        gadgets::contract_end0(16),
        gadgets::contract_endprime(17),
    ] {
        insts.push(gadgets::instance(&c.map_err(s)?).map_err(s)?);
    }
    let mut ops = 0;
    for i in 0..count {
        let mut g = catalog.choose(&mut rng).unwrap().graph.clone();
        for _ in 0..rng.gen_range(1..=6) {
            random_op(&mut g, &mut rng, &insts).map_err(|e| format!("sequence {i}: {e}"))?;
            invariants(&g).map_err(|e| format!("sequence {i}: {e}"))?;
            ops += 1;
        }
    }
    Ok(ops)
}

fn random_sequences() -> Result<String, String> {
    let ops = random_sequences_with(RANDOM_SEQUENCES, 0x5eed)?;
    Ok(format!("{RANDOM_SEQUENCES} sequences, {ops} operations"))
}
