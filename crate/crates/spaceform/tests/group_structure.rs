//! Group-level integration checks: orders, polyhedral presentations with
//! common power value −1, subgroup chains, and the quotient onto `S₃`.

use spaceform::group::{abelianization, check_presentation, quotient_map_o_to_s3};
use spaceform::Groups;

fn groups() -> Groups {
    Groups::build().unwrap()
}

#[test]
fn orders_are_24_48_120() {
    let gs = groups();
    assert_eq!(gs.q8.order(), 8);
    assert_eq!(gs.t.order(), 24);
    assert_eq!(gs.o.order(), 48);
    assert_eq!(gs.i.order(), 120);
    assert_eq!(gs.s3.order(), 6);
}

#[test]
fn axioms_hold_for_every_group() {
    let gs = groups();
    for g in [&gs.q8, &gs.t, &gs.o, &gs.i, &gs.s3] {
        g.verify_axioms().unwrap();
    }
}

#[test]
fn polyhedral_presentations_share_the_central_value() {
    let gs = groups();

    let rep = check_presentation(
        &gs.t,
        gs.t.named("omega_0").unwrap(),
        gs.t.named("omega_k").unwrap(),
        (2, 3, 3),
    )
    .unwrap();
    assert!(rep.all_equal, "2-3-3 relations");
    assert!(rep.common_is_minus_one, "2-3-3 common value");

    let rep = check_presentation(
        &gs.o,
        gs.o.named("omega_0").unwrap(),
        gs.o.named("tau_i").unwrap(),
        (2, 3, 4),
    )
    .unwrap();
    assert!(rep.all_equal, "2-3-4 relations");
    assert!(rep.common_is_minus_one, "2-3-4 common value");

    let t5 = gs.i.named("sigma_i_plus").unwrap();
    let s5 = gs.i.mul(gs.i.named("sigma_i_minus").unwrap(), gs.i.pow(t5, 2));
    let rep = check_presentation(&gs.i, s5, t5, (2, 3, 5)).unwrap();
    assert!(rep.all_equal, "2-3-5 relations");
    assert!(rep.common_is_minus_one, "2-3-5 common value");
}

#[test]
fn subgroup_chain_q8_t_o_and_t_in_i() {
    let gs = groups();
    assert!(gs.t.contains_subgroup(&gs.q8), "Q8 ≤ T");
    assert!(gs.o.contains_subgroup(&gs.t), "T ≤ O");
    assert!(gs.o.contains_subgroup(&gs.q8), "Q8 ≤ O");
    assert!(gs.i.contains_subgroup(&gs.q8), "Q8 ≤ I");
    assert!(gs.i.contains_subgroup(&gs.t), "T ≤ I");
    // The binary octahedral group is *not* inside the binary icosahedral one.
    assert!(!gs.i.contains_subgroup(&gs.o), "O ≰ I");
}

#[test]
fn quotient_onto_s3_has_quaternion_kernel() {
    let gs = groups();
    let pi = quotient_map_o_to_s3(&gs.o, &gs.s3).unwrap();
    assert_eq!(pi.len(), 48);
    // Kernel = preimage of the identity = the quaternion subgroup.
    let kernel: Vec<u16> = (0..48u16).filter(|&g| pi[g as usize] == 0).collect();
    assert_eq!(kernel.len(), 8);
    for &k in &kernel {
        let q = gs.o.quaternion(k).unwrap();
        assert!(gs.q8.index_of(q).is_some(), "kernel element outside Q8");
    }
    // Every fiber has exactly 8 elements.
    for target in 0..6u16 {
        assert_eq!(pi.iter().filter(|&&v| v == target).count(), 8);
    }
}

#[test]
fn abelianizations_match_the_expected_invariant_factors() {
    let gs = groups();
    assert_eq!(abelianization(&gs.t), vec![3]);
    assert_eq!(abelianization(&gs.o), vec![2]);
    assert_eq!(abelianization(&gs.i), Vec::<u64>::new());
    assert_eq!(abelianization(&gs.s3), vec![2]);
}
