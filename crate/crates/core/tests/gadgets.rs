use spectope_core::gadgets::{
    contract, contract_end0, contract_end1, contract_endprime, contract_pc, contract_s, instance, search_template,
    synthesize, template, validate_instance, Delta, GadgetKind, DEFAULT_BUDGET,
};

fn exact(c: &spectope_core::gadgets::GadgetContract) -> Vec<i64> {
    c.deltas
        .iter()
        .map(|d| match d {
            Delta::Exact(x) => *x,
            Delta::AtLeast(x) => *x,
        })
        .collect()
}

fn after(c: &spectope_core::gadgets::GadgetContract) -> Vec<i64> {
    [10, 8, 6, 3].iter().zip(exact(c)).map(|(h, d)| h + d).collect()
}

#[test]
fn pc_arithmetic() {
    let c = contract_pc(1).unwrap();
    assert_eq!(after(&c), [18, 16, 15, 17]);
    assert_eq!(c.added_vertices, 21);
    for k in 1..=250u64 {
        let c = contract_pc(k).unwrap();
        let n = 14 + 4 * k as i64;
        assert_eq!(after(&c), [n, n - 2, n - 3, n - 1]);
        // Twelve fixed vertices plus 2n − 27 from the h-splittings.
        assert_eq!(c.added_vertices as i64, 12 + 2 * n - 27);
        assert_eq!(c.added_vertices as u64, 8 * k + 13);
    }
    assert!(contract_pc(0).is_err());
}

#[test]
fn end_gadget_arithmetic() {
    let c = contract_end1(17).unwrap();
    assert_eq!(c.added_vertices, 9 + 3 + 2 + 1);
    assert_eq!(after(&c), [17, 16, 15, 10]);
    let c = contract_end0(16).unwrap();
    assert_eq!(c.added_vertices, 8 + 2);
    assert_eq!(after(&c), [16, 15, 10, 8]);
    let c = contract_endprime(17).unwrap();
    assert_eq!(c.added_vertices, 6 + 4);
    assert_eq!(after(&c), [16, 16, 10, 8]);
    for n in (17..=1001u64).step_by(4) {
        let c = contract_end1(n).unwrap();
        assert_eq!(c.added_vertices as u64, 9 + (n - 11) / 2 + (n - 13) / 2 + (n - 15) / 2);
        let c = contract_endprime(n).unwrap();
        assert_eq!(c.added_vertices as u64, 6 + (n - 13));
    }
    for n in (16..=1000u64).filter(|n| n % 4 == 0 || n % 4 == 3) {
        assert_eq!(contract_end0(n).unwrap().added_vertices as u64, 8 + (n - 14));
    }
    assert!(contract_end1(19).is_err());
    assert!(contract_end0(18).is_err());
}

#[test]
fn s_arithmetic() {
    let c = contract_s();
    assert_eq!(c.added_vertices, 4);
    assert_eq!(c.deltas[..2], [Delta::Exact(2), Delta::Exact(2)]);
}

#[test]
fn handshake_holds_for_every_parameter() {
    for p in 1..=1000u64 {
        for kind in GadgetKind::ALL {
            if let Ok(c) = contract(kind, p) {
                assert!(c.handshake_consistent(), "{} at {p}", kind.name());
            }
        }
    }
}

#[test]
fn starved_contract_is_refused() {
    let mut c = contract_endprime(17).unwrap();
    c.deltas[0] = Delta::Exact(100);
    assert!(!c.handshake_consistent());
    assert!(synthesize(&c, 1000).is_err());
}

#[test]
fn frozen_templates_match_a_fresh_search() {
    for kind in GadgetKind::ALL {
        assert_eq!(search_template(kind, DEFAULT_BUDGET).unwrap(), template(kind), "{}", kind.name());
    }
}

#[test]
fn synthesized_small_gadgets() {
    let s = synthesize(&contract_s(), DEFAULT_BUDGET).unwrap();
    assert_eq!(s.graph.order(), 7);
    assert!(s.graph.is_polytopal());
    let e = synthesize(&contract_endprime(17).unwrap(), DEFAULT_BUDGET).unwrap();
    assert_eq!(e.graph.order(), 4 + 10);
    assert!(validate_instance(&e, &e.contract).pass);
}

#[test]
fn instances_validate_across_parameters() {
    let mut cases = Vec::new();
    cases.extend((1..=12).map(|k| contract_pc(k).unwrap()));
    cases.extend((17..=81).step_by(4).map(|n| contract_end1(n).unwrap()));
    cases.extend((16..=80).filter(|n| n % 4 == 0 || n % 4 == 3).map(|n| contract_end0(n).unwrap()));
    cases.extend((17..=81).step_by(4).map(|n| contract_endprime(n).unwrap()));
    cases.push(contract_s());
    for c in cases {
        let inst = instance(&c).unwrap();
        let r = validate_instance(&inst, &c);
        assert!(r.pass, "{} {}: {:?}", c.kind.name(), c.param, r.failures);
        assert_eq!(r.merged_order, r.host_order + c.added_vertices);
    }
}
