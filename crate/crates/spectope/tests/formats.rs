use proptest::prelude::*;
use spectope::io;
use spectope_core::builders::build_r;
use spectope_core::canon::planar_code;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(n in 3usize..120, mirror in any::<bool>()) {
        let mut g = build_r(n).unwrap().0;
        if mirror {
            g = g.mirror();
        }
        let text = io::to_json(&g);
        let back = io::from_json(&text).unwrap();
        prop_assert_eq!(io::to_json(&back), text);
        prop_assert_eq!(planar_code(&back), planar_code(&g));
    }

    #[test]
    fn graph6_keeps_the_edges(n in 3usize..120) {
        let g = build_r(n).unwrap().0;
        let line = io::to_graph6(&g);
        let (order, mut edges) = io::parse_graph6(&line).unwrap();
        prop_assert_eq!(order, g.order());
        let mut want: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|u| g.rotation(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        want.sort();
        edges.sort();
        prop_assert_eq!(edges, want);
        let back = io::from_graph6(&line).unwrap();
        prop_assert_eq!(io::to_graph6(&back), line);
        prop_assert!(back.is_polytopal());
    }

    #[test]
    fn graph6_rejects_garbage(s in "[ -~]{0,12}") {
        // Never panics; either a graph or an error.
        let _ = io::parse_graph6(&s);
        let _ = io::read_graph(&s);
    }
}
