mod common;

use common::*;
use spectope_core::bounds::{lemma6_bound, p_of};
use spectope_core::builders::*;
use spectope_core::canon::isomorphic;
use spectope_core::spectra::{check_p, check_q, find_q_witness, has_degree_spectrum};
use spectope_core::transform::Step;
use spectope_core::ConstructionTrace;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn catalog(name: &str) -> spectope_core::EmbeddedGraph {
    build_catalog().into_iter().find(|e| e.name == name).unwrap().graph
}

#[test]
fn stacked_triangulation() {
    assert_eq!(isomorphic(&build_a(9).unwrap(), &tetrahedron()), Some(true));
    let a14 = build_a(14).unwrap();
    assert_eq!((a14.order(), a14.size()), (9, 3 + 3 * 6));
    assert!(a14.is_triangulation());
    assert_eq!(sorted(build_a(12).unwrap().degrees()), sorted(vec![3, 4, 5, 6, 5, 4, 3]));
    for n in 11..=60 {
        let mut want = vec![3, 4, 5, 5, 4, 3];
        want.extend(std::iter::repeat_n(6, n - 11));
        assert_eq!(sorted(build_a(n).unwrap().degrees()), sorted(want));
    }
}

#[test]
fn small_stacked_graphs_are_catalog_members() {
    for (n, name) in [(9, "r_3"), (10, "r_4.2"), (11, "r_5.2"), (12, "r_6.3")] {
        assert_eq!(isomorphic(&build_a(n).unwrap(), &catalog(name)), Some(true), "A({n})");
    }
}

#[test]
fn b14() {
    let st = build_b(14).unwrap();
    assert_eq!(st.graph.order(), 26);
    let mut want = vec![7, 9, 11, 13, 14, 12, 10, 8, 6, 5, 4];
    want.extend([3; 15]);
    assert_eq!(sorted(st.graph.degrees()), sorted(want));
    assert!(st.v_prime.is_empty());
    let degs: Vec<usize> = st.terminals.iter().map(|&t| st.graph.degree(t)).collect();
    assert_eq!(degs, [10, 8, 6, 3]);
    assert_eq!(isomorphic(&st.graph, &build_r(14).unwrap().0), Some(true));
    let b18 = build_b(18).unwrap();
    assert_eq!(b18.v_prime.len(), 4);
    assert!(b18.v_prime.iter().all(|&v| b18.graph.degree(v) == 12));
}

fn splits(tr: &ConstructionTrace) -> usize {
    tr.steps()
        .iter()
        .map(|s| match s {
            Step::Split { .. } => 1,
            Step::HSplit { h, .. } => *h,
            Step::Glue { .. } => 0,
        })
        .sum()
}

#[test]
fn group_raising() {
    let mut st = build_b(22).unwrap();
    let mut tr = ConstructionTrace::new();
    raise_group(&mut st, 1, Some(&mut tr)).unwrap();
    assert_eq!(splits(&tr), 9);
    let d: Vec<usize> = st.v_prime[..4].iter().map(|&v| st.graph.degree(v)).collect();
    assert_eq!(d, [15, 16, 17, 18]);
    let mut tr = ConstructionTrace::new();
    raise_group(&mut st, 2, Some(&mut tr)).unwrap();
    assert_eq!(splits(&tr), 17);
    let d: Vec<usize> = st.v_prime[4..8].iter().map(|&v| st.graph.degree(v)).collect();
    assert_eq!(d, [19, 20, 21, 22]);
    assert!(raise_group(&mut st, 3, None).is_err());
}

#[test]
fn stacked_order_identity() {
    for big_k in 0..=300usize {
        let total: usize = (1..=big_k).map(|k| 8 * k + 1).sum();
        assert_eq!(total, 4 * big_k * big_k + 5 * big_k);
        let n = 14 + 4 * big_k;
        if n <= 1000 {
            assert_eq!(3 * n - 16 + total, (n * n - 11 * n + 62) / 4);
        }
    }
    for n in (14..=102).step_by(4) {
        let (g, tr) = build_r_route(n, Route::Stacked).unwrap();
        assert_eq!(g.order(), build_b(n).unwrap().graph.order() + splits(&tr));
    }
}

#[test]
fn listed_orders() {
    for (n, p) in [(8, 10), (13, 23), (14, 26), (15, 31), (16, 36), (17, 41)] {
        assert_eq!(build_r(n).unwrap().0.order(), p);
    }
}

#[test]
fn every_r_n_up_to_300() {
    for n in 3..=300 {
        for route in [Route::Stacked, Route::Gadget] {
            if route == Route::Gadget && n > 120 {
                continue;
            }
            let g = build_r_route(n, route).unwrap().0;
            assert_eq!(g.order() as u64, p_of(n as u64).unwrap(), "n = {n}");
            assert!(has_degree_spectrum(&g, n) && g.is_polytopal(), "n = {n}");
        }
    }
}

#[test]
fn catalog_contents() {
    let cat = build_catalog();
    let tight = cat.iter().filter(|e| e.n <= 7 && e.graph.order() == e.n + 1).count();
    assert_eq!(tight, 10);
    for e in &cat {
        assert!(check_p(&e.graph, e.n).pass, "{}", e.name);
    }
    assert_eq!(catalog_r(13).order(), 23);
    assert_eq!(catalog_r(15).order(), 31);
    assert!(split_search(&[catalog_r(7)], 8, 9).is_err());
}

#[test]
fn s_graphs() {
    let s17 = build_s(17).unwrap();
    assert_eq!(s17.order(), 51);
    assert!((0..51).filter(|&v| s17.degree(v) == 16).count() >= 3);
    for n in (17..=101).step_by(4) {
        let g = build_s(n).unwrap();
        assert_eq!(g.order() as u64, lemma6_bound(n as u64).unwrap());
        assert!(g.is_polytopal());
        let (gg, _) = build_s_route(n, Route::Gadget).unwrap();
        assert_eq!(gg.order(), g.order());
    }
    assert!(build_s(19).is_err());
}

#[test]
fn seed5() {
    let g = build_t_seed5();
    assert_eq!(g.order(), 6);
    assert_eq!(sorted(g.degrees()), [3, 3, 3, 4, 4, 5]);
    assert!(check_q(&g, 5, None).pass);
}

#[test]
fn lemma7_first_step() {
    let seed = build_t_seed5();
    let w = find_q_witness(&seed, 5).unwrap();
    let out = extend_q(&seed, &w, 5, &Variant::Lemma7, 1).unwrap();
    let t7 = &out[0];
    assert_eq!((t7.n, t7.graph.order()), (7, 10));
    let mut pairs: Vec<[usize; 2]> = t7
        .witness
        .faces
        .iter()
        .map(|f| {
            let mut p = [t7.graph.degree(f.v1), t7.graph.degree(f.v2)];
            p.sort_unstable();
            p
        })
        .collect();
    pairs.sort_unstable();
    assert_eq!(pairs, [[4, 5], [6, 7]]);
}

#[test]
fn alg2_first_step_and_recurrence() {
    let v = Variant::alg2(14).unwrap();
    let Variant::Alg2 { s, witness } = &v else { unreachable!() };
    assert_eq!(s.order(), 51);
    let out = extend_q(s, &witness.without_first(), 17, &v, 3).unwrap();
    assert_eq!(out[0].graph.order(), 51 + 84 + 48);
    let rec = extension_orders(51, 17, 14, 48, 3);
    assert_eq!(out.iter().map(|s| s.graph.order()).collect::<Vec<_>>(), rec);
    for st in &out {
        assert!(check_q(&st.graph, st.n, Some(&st.witness)).pass);
    }
    assert!(Variant::alg2(15).is_err());
}

#[test]
fn orders_approach_a_quarter_n_squared() {
    // Ratio |V(t_n)|·4/n² along the recurrence drifts to 1.
    let rec = extension_orders(51, 17, 14, 48, 4000);
    let ratio = |k: usize| {
        let n = (17 + 14 * k) as f64;
        rec[k - 1] as f64 * 4.0 / (n * n)
    };
    assert!((ratio(4000) - 1.0).abs() < 0.01);
    assert!((ratio(4000) - 1.0).abs() < (ratio(100) - 1.0).abs());
    assert!((ratio(100) - 1.0).abs() < (ratio(10) - 1.0).abs());
}

#[test]
fn order_bound_threshold_is_where_the_slack_turns() {
    let k0 = order_bound_threshold(51, 17, 14, 48, 1, 10, 200).unwrap();
    let rec = extension_orders(51, 17, 14, 48, 200);
    for k in 1..=200 {
        let n = 17 + 14 * k;
        let ok = order_bound_slack(n, rec[k - 1], 14, 1, 10) >= 0;
        assert_eq!(ok, k >= k0, "step {k}");
    }
}
