//! Chain-complex and homology integration checks: exactness of every
//! catalog complex and its periodic extensions, sphere and quotient
//! homology, group cohomology tables through degree 12, the flag-variety
//! tables, and the explicit homotopy equivalences.

use num_bigint::BigInt;
use spaceform::{
    build_by_label, build_k, build_k_s3, build_k_t_min, extend_periodic, group_cohomology_table,
    h1_generators_flag, integral_homology, poincare_determinant, quotient_h1_matches_abelianization,
    quotient_homology, sphere_homology, verify_minimal_resolution_t, verify_tz_equivalence,
    DegreeHomology, GroupTag, Groups, HomologyResult, Realization, S3Mode, CATALOG_LABELS,
};

fn groups() -> Groups {
    Groups::build().unwrap()
}

fn result(degrees: Vec<(usize, Vec<u64>)>) -> HomologyResult {
    HomologyResult {
        degrees: degrees
            .into_iter()
            .map(|(betti, torsion)| DegreeHomology { betti, torsion })
            .collect(),
    }
}

fn sphere_pattern(len: usize) -> HomologyResult {
    let mut degrees = vec![(1, vec![])];
    degrees.extend(std::iter::repeat_n((0, vec![]), len - 2));
    degrees.push((1, vec![]));
    result(degrees)
}

#[test]
fn every_catalog_complex_and_extension_is_exactly_a_complex() {
    let gs = groups();
    for label in CATALOG_LABELS {
        let c = build_by_label(&gs, label).unwrap();
        c.verify().unwrap_or_else(|e| panic!("{label}: {e}"));
        for n in 1..=2 {
            let ext = extend_periodic(&c, n).unwrap();
            ext.verify().unwrap_or_else(|e| panic!("{label} ×{n}: {e}"));
            assert_eq!(ext.top_degree(), 4 * n - 1);
        }
    }
}

#[test]
fn sphere_homology_single_period_for_all_three_groups() {
    let gs = groups();
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        let h = sphere_homology(&gs, tag, 1).unwrap();
        assert_eq!(h, sphere_pattern(4), "{tag}");
    }
}

#[test]
fn sphere_homology_two_periods() {
    let gs = groups();
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        let h = sphere_homology(&gs, tag, 2).unwrap();
        assert_eq!(h, sphere_pattern(8), "{tag} at two periods");
    }
}

#[test]
fn quotient_homology_and_determinants() {
    let gs = groups();
    assert_eq!(
        quotient_homology(&gs, GroupTag::I).unwrap(),
        sphere_pattern(4),
        "order-120 quotient is a homology sphere"
    );
    assert_eq!(
        quotient_homology(&gs, GroupTag::O).unwrap(),
        result(vec![(1, vec![]), (0, vec![2]), (0, vec![]), (1, vec![])])
    );
    assert_eq!(
        quotient_homology(&gs, GroupTag::T).unwrap(),
        result(vec![(1, vec![]), (0, vec![3]), (0, vec![]), (1, vec![])])
    );
    assert_eq!(poincare_determinant(&gs, GroupTag::I).unwrap(), BigInt::from(1));
    assert_eq!(poincare_determinant(&gs, GroupTag::O).unwrap(), BigInt::from(2));
    assert_eq!(poincare_determinant(&gs, GroupTag::T).unwrap(), BigInt::from(3));
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        assert!(quotient_h1_matches_abelianization(&gs, tag).unwrap(), "{tag}");
    }
}

/// Expected `H^q` for `q = 0..=q_max`: `Z` at 0, `Z/|G|` at positive
/// multiples of 4, the odd-order torsion at `q ≡ 2 (mod 4)`, zero otherwise.
fn cohomology_pattern(order: u64, half_step: Option<u64>, q_max: usize) -> HomologyResult {
    let degrees = (0..=q_max)
        .map(|q| match (q, q % 4) {
            (0, _) => (1, vec![]),
            (_, 0) => (0, vec![order]),
            (_, 2) => (0, half_step.map(|t| vec![t]).unwrap_or_default()),
            _ => (0, vec![]),
        })
        .collect();
    result(degrees)
}

#[test]
fn group_cohomology_tables_through_degree_twelve() {
    let gs = groups();
    assert_eq!(
        group_cohomology_table(&gs, GroupTag::O, 12).unwrap(),
        cohomology_pattern(48, Some(2), 12)
    );
    assert_eq!(
        group_cohomology_table(&gs, GroupTag::T, 12).unwrap(),
        cohomology_pattern(24, Some(3), 12)
    );
    assert_eq!(
        group_cohomology_table(&gs, GroupTag::I, 12).unwrap(),
        cohomology_pattern(120, None, 12)
    );
}

#[test]
fn flag_variety_tables_and_actions() {
    let gs = groups();
    let report = spaceform::flag_homology_report(&gs).unwrap();
    assert_eq!(
        report.integral,
        result(vec![(1, vec![]), (0, vec![2, 2]), (0, vec![]), (1, vec![])])
    );
    assert_eq!(report.mod2_betti, vec![1, 2, 2, 1]);
    assert_eq!(report.mod2_total_dimension, 6);
    assert_eq!(report.generators.action_s_alpha, [[0, 1], [1, 0]]);
    assert_eq!(report.generators.action_s_beta, [[1, 0], [1, 1]]);
    assert!(report.generators.sigma_is_top_cycle);

    // The pushforward of the order-48 complex equals the typed matrices.
    let literal = build_k_s3(&gs, S3Mode::Literal).unwrap();
    let pushed = build_k_s3(&gs, S3Mode::Pushforward).unwrap();
    for k in 1..=3 {
        assert_eq!(literal.boundary(k), pushed.boundary(k), "degree {k}");
    }

    // Generator-level report stands on its own.
    let gen_report = h1_generators_flag(&gs).unwrap();
    assert!(gen_report.generators_are_cycles);
    assert!(gen_report.relation_holds);
    assert!(gen_report.independent_mod_boundaries);
}

#[test]
fn homotopy_equivalences_hold_exactly() {
    let gs = groups();
    let tz = verify_tz_equivalence(&gs).unwrap();
    assert!(tz.z_equals_minus_one);
    assert!(tz.binding_matches_base);
    assert!(tz.p_unimodular && tz.q_unimodular);
    assert_eq!(tz.relations_hold, [true, true, true]);

    let min = verify_minimal_resolution_t(&gs).unwrap();
    assert!(min.chain_maps_commute);
    assert!(min.retract_is_identity);
    assert!(min.homotopy_identity_holds);
    assert!(min.two_chain_identity_holds);

    // Homotopy-equivalent complexes have equal homology in both
    // realizations.
    let full = build_k(&gs, GroupTag::T).unwrap();
    let reduced = build_k_t_min(&gs).unwrap();
    for realization in [Realization::Augment, Realization::RegularRep] {
        assert_eq!(
            integral_homology(&full, realization).unwrap(),
            integral_homology(&reduced, realization).unwrap(),
            "{realization}"
        );
    }
}
