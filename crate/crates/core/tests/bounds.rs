use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectope_core::bounds::{bc_inequality_holds, bound4, bound6, lemma6_bound, p_of, report, TABLE1};
use spectope_core::builders::{build_catalog, build_r};
use spectope_core::transform::split;
use spectope_core::DegreeSequence;

/// Ceiling of a rational with positive denominator, by floating point and
/// a correction, as a second way to evaluate the bounds.
fn ceil_frac(num: i64, den: i64) -> i64 {
    let f = (num as f64 / den as f64).ceil() as i64;
    if (f - 1) * den >= num {
        f - 1
    } else if f * den < num {
        f + 1
    } else {
        f
    }
}

#[test]
fn listed_values() {
    assert_eq!(bound6(10), Ok(14));
    assert_eq!(bound6(13), Ok(23));
    assert_eq!(bound6(3), Ok(4));
    assert_eq!(bound4(14), Ok(26));
    assert_eq!(bound4(11), Ok(16));
    assert_eq!(bound4(12), Ok(19));
    assert_eq!(p_of(8), Ok(10));
    assert_eq!(p_of(15), Ok(31));
    assert_eq!(p_of(20), Ok(61));
    assert_eq!(lemma6_bound(17), Ok(51));
    assert_eq!(lemma6_bound(21), Ok(82));
}

#[test]
fn table_is_verbatim() {
    let orders: Vec<u64> = TABLE1.iter().map(|x| x.1).collect();
    assert_eq!(orders, [4, 5, 6, 7, 8, 10, 11, 14, 16, 19, 23]);
    assert!(TABLE1.iter().enumerate().all(|(i, x)| x.0 == i as u64 + 3));
}

#[test]
fn closed_forms_against_rationals() {
    for n in 3..=10_000i64 {
        assert_eq!(bound6(n as u64).unwrap() as i64, ceil_frac(n * n - 5 * n + 30, 6));
        if n >= 8 {
            assert_eq!(bound4(n as u64).unwrap() as i64, ceil_frac(n * n - 11 * n + 62, 4));
        }
    }
}

#[test]
fn largest_bound_matches_the_table() {
    for n in 8..=13u64 {
        assert_eq!(bound6(n).unwrap().max(bound4(n).unwrap()), p_of(n).unwrap());
    }
    for n in 15..=10_000u64 {
        assert!(bound4(n).unwrap() >= bound6(n).unwrap());
        assert_eq!(p_of(n), bound4(n));
    }
    for n in 3..=10_000u64 {
        assert!(p_of(n).unwrap() > n);
        assert_eq!(report(n).unwrap().strongest.max(p_of(n).unwrap()), p_of(n).unwrap());
    }
}

#[test]
fn lemma6_numerator_is_divisible() {
    for n in (17..=100_000u64).step_by(4) {
        assert_eq!((n * n + 34 - 7 * n) % 4, 0);
        assert!(lemma6_bound(n).is_ok());
    }
}

#[test]
fn bounds_never_exceed_witnesses() {
    for n in 3..=120 {
        let g = build_r(n).unwrap().0;
        assert!(bound6(n as u64).unwrap() as usize <= g.order());
        if n >= 8 {
            assert!(bound4(n as u64).unwrap() as usize <= g.order());
        }
    }
}

#[test]
fn octahedron_and_r14() {
    let oct = DegreeSequence::new(vec![4; 6]);
    assert_eq!(bc_inequality_holds(&oct, 6, 3), Ok(true));
    let r14 = build_r(14).unwrap().0;
    assert_eq!(bc_inequality_holds(&r14.degree_sequence(), 26, 9), Ok(true));
    // The nine largest degrees of r_14 sum to 14+13+...+6 = 90 = 2·26 + 54 − 16.
    let top: usize = r14.degree_sequence().as_slice()[..9].iter().sum();
    assert_eq!(top, 90);
}

#[test]
fn planar_graphs_satisfy_the_partial_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let seeds = build_catalog();
    let mut checked = 0;
    for _ in 0..400 {
        let mut g = seeds[rng.gen_range(0..10)].graph.clone();
        let target = rng.gen_range(g.order()..=12);
        while g.order() < target {
            let tris: Vec<_> = g.faces().into_iter().filter(|f| f.is_triangle()).collect();
            g = split(&g, &tris[rng.gen_range(0..tris.len())]).unwrap().0;
        }
        // Drop a few edges while staying polytopal.
        for _ in 0..rng.gen_range(0..4) {
            let e = g.edges();
            let (u, v) = e[rng.gen_range(0..e.len())];
            if let Some(h) = g.without_edge(u, v) {
                if h.is_polytopal() {
                    g = h;
                }
            }
        }
        let p = g.order() as u64;
        let d = g.degree_sequence();
        for k in 3..=(p + 4) / 3 {
            assert_eq!(bc_inequality_holds(&d, p, k), Ok(true));
            checked += 1;
        }
    }
    assert!(checked > 400);
}
