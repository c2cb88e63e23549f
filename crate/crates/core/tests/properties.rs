mod common;

use common::assert_plane_invariants;
use proptest::prelude::*;
use spectope_core::builders::{build_catalog, build_r, extension_orders};
use spectope_core::canon::{canonical_form, planar_code};
use spectope_core::gadgets::{contract_endprime, contract_pc, contract_s, instance};
use spectope_core::transform::{glue, h_split, split};
use spectope_core::{bounds, EmbeddedGraph};

#[derive(Clone, Debug)]
enum Op {
    Split(usize),
    HSplit(usize, usize, usize),
    GlueS(usize),
    GlueQuad(usize, bool),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        any::<usize>().prop_map(Op::Split),
        (any::<usize>(), 0..3usize, 1..8usize).prop_map(|(f, a, h)| Op::HSplit(f, a, h)),
        any::<usize>().prop_map(Op::GlueS),
        (any::<usize>(), any::<bool>()).prop_map(|(f, pc)| Op::GlueQuad(f, pc)),
    ]
}

fn triangle(g: &EmbeddedGraph, pick: usize) -> spectope_core::Face {
    let t: Vec<_> = g.faces().into_iter().filter(|f| f.is_triangle()).collect();
    t[pick % t.len()].clone()
}

fn glue_either(g: &EmbeddedGraph, terms: &[usize], gadget: &EmbeddedGraph, atts: &[usize]) -> EmbeddedGraph {
    let mut flipped = terms.to_vec();
    flipped.swap(1, 2);
    glue(g, terms, gadget, atts)
        .or_else(|_| glue(g, &flipped, gadget, atts))
        .expect("a triangle takes the gadget in one orientation")
        .0
}

fn apply(g: &EmbeddedGraph, op: &Op) -> EmbeddedGraph {
    match *op {
        Op::Split(f) => {
            let (h, _) = split(g, &triangle(g, f)).unwrap();
            assert_eq!((h.order(), h.size()), (g.order() + 1, g.size() + 3));
            h
        }
        Op::HSplit(f, a, k) => {
            let face = triangle(g, f);
            let (h, _) = h_split(g, &face, face.cycle()[a], k).unwrap();
            assert_eq!((h.order(), h.size()), (g.order() + k, g.size() + 3 * k));
            h
        }
        Op::GlueS(f) => {
            let inst = instance(&contract_s()).unwrap();
            let h = glue_either(g, triangle(g, f).cycle(), &inst.graph, &inst.attachments);
            assert_eq!(h.order(), g.order() + 4);
            h
        }
        Op::GlueQuad(f, pc) => {
            let face = triangle(g, f);
            let (mut h, x) = split(g, &face).unwrap();
            let c = if pc { contract_pc(1) } else { contract_endprime(17) }.unwrap();
            let inst = instance(&c).unwrap();
            let mut terms = face.cycle().to_vec();
            terms.push(x);
            h = glue_either(&h, &terms, &inst.graph, &inst.attachments);
            assert_eq!(h.order(), g.order() + 1 + c.added_vertices);
            h
        }
    }
}

fn relabel(g: &EmbeddedGraph, perm: &[usize]) -> EmbeddedGraph {
    let mut rot = vec![Vec::new(); g.order()];
    for v in 0..g.order() {
        rot[perm[v]] = g.rotation(v).iter().map(|&w| perm[w]).collect();
    }
    EmbeddedGraph::from_rotations(rot).unwrap()
}

fn seed(i: usize) -> EmbeddedGraph {
    let cat = build_catalog();
    cat[i % cat.len()].graph.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn operations_keep_polytopes(i in any::<usize>(), ops in prop::collection::vec(op(), 1..6)) {
        let mut g = seed(i);
        for o in &ops {
            g = apply(&g, o);
            prop_assert!(g.is_polytopal());
            assert_plane_invariants(&g);
        }
    }

    #[test]
    fn planar_code_ignores_labels(i in any::<usize>(), ops in prop::collection::vec(op(), 0..3), shuffle in any::<u64>(), mirror in any::<bool>()) {
        let mut g = seed(i);
        for o in &ops {
            g = apply(&g, o);
        }
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut x = shuffle;
        for k in (1..perm.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (x >> 33) as usize % (k + 1));
        }
        let mut h = relabel(&g, &perm);
        if mirror {
            h = h.mirror();
        }
        prop_assert_eq!(planar_code(&g), planar_code(&h));
        if g.order() <= 64 {
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }

    #[test]
    fn double_dual(i in any::<usize>(), ops in prop::collection::vec(op(), 0..4)) {
        let mut g = seed(i);
        for o in &ops {
            g = apply(&g, o);
        }
        let d = g.dualize().unwrap();
        prop_assert_eq!(d.order(), g.face_count());
        prop_assert_eq!(d.size(), g.size());
        prop_assert_eq!(planar_code(&d.dualize().unwrap()), planar_code(&g));
    }

    #[test]
    fn bounds_are_monotone(n in 3u64..100_000) {
        prop_assert!(bounds::p_of(n + 1).unwrap() >= bounds::p_of(n).unwrap());
        prop_assert!(bounds::bound6(n + 1).unwrap() >= bounds::bound6(n).unwrap());
    }

    #[test]
    fn extension_step_formula(p0 in 6usize..1000, half in 2usize..50, m in 1usize..30, added in 0usize..100, steps in 1usize..40) {
        let l = 2 * half + 1;
        let got = extension_orders(p0, l, m, added, steps);
        let mut p = p0;
        for (k, &x) in got.iter().enumerate() {
            let j = (l + m * k - 3) / 2;
            p += m * (j - 1) + added;
            prop_assert_eq!(x, p);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn r_n_has_the_property(n in 3usize..400) {
        let g = build_r(n).unwrap().0;
        prop_assert_eq!(g.order() as u64, bounds::p_of(n as u64).unwrap());
        prop_assert!(spectope_core::spectra::has_degree_spectrum(&g, n));
        prop_assert!(g.is_polytopal());
    }
}
