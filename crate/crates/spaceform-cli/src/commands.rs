//! Check runners shared by the individual subcommands and `verify-all`.
//!
//! Every runner appends named check records to a [`Report`]. Failures of the
//! property under verification become `fail` records; conditions that prevent
//! the verification from being posed at all (bad sizes, unreadable files)
//! surface as errors and map to a usage exit.

use std::collections::BTreeSet;
use std::fmt::Display;

use anyhow::{anyhow, Result};
use spaceform::complexes::{
    build_by_label, build_k_s3, extend_periodic, verify_minimal_resolution_t,
    verify_tz_equivalence, S3Mode, CATALOG_LABELS,
};
use spaceform::group::{abelianization, check_presentation, quotient_map_o_to_s3};
use spaceform::homology::{
    euler_consistency, flag_homology_report, group_cohomology_table, poincare_determinant,
    quotient_homology, sphere_homology, HomologyError, HomologyResult, Realization,
};
use spaceform::polytope::{build_orbit_polytope, brute_force_facets, fundamental_domain_cells};
use spaceform::{ChainComplex, Facet, GroupTag, Groups};

use crate::expected::{expected, Expected};
use crate::report::Report;

/// Shared state for all runners: the groups are built once per process.
pub struct Ctx {
    pub groups: Groups,
    pub exp: &'static Expected,
}

impl Ctx {
    pub fn new() -> Result<Self> {
        let groups = Groups::build().map_err(|e| anyhow!("group construction failed: {e}"))?;
        Ok(Ctx { groups, exp: expected() })
    }
}

/// How far the polytope facet check goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleLevel {
    /// Orbit construction only; the exhaustive facet enumeration is skipped.
    Orbit { skip_note: &'static str },
    /// Cross-check the orbit construction against exhaustive enumeration.
    Full,
}

/// The default skip wording for a plain `polytope` run without `--oracle full`.
pub const ORACLE_NOT_REQUESTED: &str = "orbit construction only; rerun with --oracle full";

/// Records `res` as a pass/fail check, returning the value on success.
fn record<T, E: Display>(
    report: &mut Report,
    name: String,
    ok_details: impl FnOnce(&T) -> String,
    res: std::result::Result<T, E>,
) -> Option<T> {
    match res {
        Ok(v) => {
            let details = ok_details(&v);
            report.check(name, true, details);
            Some(v)
        }
        Err(e) => {
            report.check(name, false, e.to_string());
            None
        }
    }
}

fn render_table(h: &HomologyResult, prefix: &str) -> String {
    h.render_rows(prefix).join("; ")
}

/// Pass/fail details for an equality-of-tables check.
fn table_details(got: &HomologyResult, want: &HomologyResult, prefix: &str) -> String {
    if got == want {
        render_table(got, prefix)
    } else {
        format!(
            "got [{}], expected [{}]",
            render_table(got, prefix),
            render_table(want, prefix)
        )
    }
}

// ---------------------------------------------------------------------------
// group

pub fn group_checks(report: &mut Report, ctx: &Ctx, tag: GroupTag, scope: &str) -> Result<()> {
    let g = ctx.groups.by_tag(tag);

    report.compare(format!("{scope}order"), &g.order(), &ctx.exp.order(tag));
    record(
        report,
        format!("{scope}group axioms"),
        |_| "associativity, identity, inverses all hold".to_string(),
        g.verify_axioms(),
    );

    let presentation = match tag {
        GroupTag::T => Some((
            g.named("omega_0").map_err(|e| anyhow!("{e}"))?,
            g.named("omega_k").map_err(|e| anyhow!("{e}"))?,
            (2u32, 3u32, 3u32),
        )),
        GroupTag::O => Some((
            g.named("omega_0").map_err(|e| anyhow!("{e}"))?,
            g.named("tau_i").map_err(|e| anyhow!("{e}"))?,
            (2, 3, 4),
        )),
        GroupTag::I => {
            let t5 = g.named("sigma_i_plus").map_err(|e| anyhow!("{e}"))?;
            let s5 = g.mul(g.named("sigma_i_minus").map_err(|e| anyhow!("{e}"))?, g.pow(t5, 2));
            Some((s5, t5, (2, 3, 5)))
        }
        _ => None,
    };
    if let Some((s, t, exponents)) = presentation {
        let (l, m, n) = exponents;
        if let Some(rep) = record(
            report,
            format!("{scope}presentation powers computable"),
            |_| "generator powers evaluated in the multiplication table".to_string(),
            check_presentation(g, s, t, exponents),
        ) {
            report.check(
                format!("{scope}presentation ({l},{m},{n}) central value"),
                rep.all_equal && rep.common_is_minus_one,
                if rep.all_equal && rep.common_is_minus_one {
                    format!("(st)^{l} = s^{m} = t^{n} = -1")
                } else {
                    format!("all_equal={}, common element index {}", rep.all_equal, rep.common_value)
                },
            );
        }
    }

    report.compare(
        format!("{scope}abelianization invariant factors"),
        &abelianization(g),
        &ctx.exp.abelianization(tag).to_vec(),
    );

    match tag {
        GroupTag::T => {
            report.check(
                format!("{scope}quaternion subgroup"),
                g.contains_subgroup(&ctx.groups.q8),
                "contains the order-8 quaternion group",
            );
        }
        GroupTag::O => {
            report.check(
                format!("{scope}subgroup chain"),
                g.contains_subgroup(&ctx.groups.t) && g.contains_subgroup(&ctx.groups.q8),
                "contains the binary tetrahedral group and the quaternion group",
            );
        }
        GroupTag::I => {
            report.check(
                format!("{scope}subgroup chain"),
                g.contains_subgroup(&ctx.groups.t) && g.contains_subgroup(&ctx.groups.q8),
                "contains the binary tetrahedral group and the quaternion group",
            );
            report.check(
                format!("{scope}octahedral exclusion"),
                !g.contains_subgroup(&ctx.groups.o),
                "the binary octahedral group is not a subgroup",
            );
        }
        GroupTag::S3 => {
            if let Some(pi) = record(
                report,
                format!("{scope}quotient map from the binary octahedral group"),
                |pi: &Vec<u16>| format!("defined on all {} elements", pi.len()),
                quotient_map_o_to_s3(&ctx.groups.o, g),
            ) {
                let kernel: Vec<u16> =
                    (0..ctx.groups.o.order() as u16).filter(|&x| pi[x as usize] == 0).collect();
                let kernel_is_q8 = kernel.len() == 8
                    && kernel.iter().all(|&x| {
                        let q = ctx.groups.o.quaternion(x).expect("index in range");
                        ctx.groups.q8.index_of(q).is_some()
                    });
                report.check(
                    format!("{scope}kernel is the quaternion group"),
                    kernel_is_q8,
                    format!("kernel has {} elements", kernel.len()),
                );
                let mut fiber_sizes = vec![0usize; g.order()];
                for &img in &pi {
                    fiber_sizes[img as usize] += 1;
                }
                report.check(
                    format!("{scope}fibers have order 8"),
                    fiber_sizes.iter().all(|&s| s == 8),
                    format!("fiber sizes {fiber_sizes:?}"),
                );
            }
        }
        _ => {}
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// polytope

fn facet_sets(facets: &[Facet]) -> BTreeSet<Vec<u16>> {
    facets
        .iter()
        .map(|f| {
            let mut v = f.vertices.clone();
            v.sort_unstable();
            v
        })
        .collect()
}

pub fn polytope_checks(
    report: &mut Report,
    ctx: &Ctx,
    tag: GroupTag,
    oracle: OracleLevel,
    scope: &str,
) -> Result<()> {
    let group = ctx.groups.by_tag(tag);
    let poly = build_orbit_polytope(group).map_err(|e| anyhow!("polytope construction: {e}"))?;

    if let Some(fv) = record(
        report,
        format!("{scope}f-vector computable"),
        |fv: &spaceform::FVector| {
            format!("({}, {}, {}, {})", fv.vertices, fv.edges, fv.faces, fv.cells)
        },
        poly.f_vector(),
    ) {
        let got = [fv.vertices, fv.edges, fv.faces, fv.cells];
        report.compare(format!("{scope}f-vector"), &got, &ctx.exp.f_vector(tag));
        let euler = fv.vertices as i64 - fv.edges as i64 + fv.faces as i64 - fv.cells as i64;
        report.check(
            format!("{scope}euler relation"),
            euler == 0,
            format!("V - E + F - C = {euler}"),
        );
    }

    report.compare(
        format!("{scope}facet orbit sizes"),
        &poly.orbit_sizes().to_vec(),
        &ctx.exp.facet_orbits(tag).to_vec(),
    );
    record(
        report,
        format!("{scope}facet set is group-stable"),
        |_| "every group element permutes the facet list".to_string(),
        poly.g_stability_check(),
    );
    report.check(
        format!("{scope}free facet action"),
        poly.free_facet_action_check(),
        "no nonidentity element fixes a facet",
    );

    match oracle {
        OracleLevel::Orbit { skip_note } => {
            report.skip(format!("{scope}exhaustive facet oracle"), skip_note);
        }
        OracleLevel::Full => {
            if tag == GroupTag::I {
                eprintln!(
                    "note: exhaustive facet enumeration for the order-120 group takes minutes"
                );
            }
            if let Some(oracle_facets) = record(
                report,
                format!("{scope}exhaustive facet enumeration"),
                |f: &Vec<Facet>| format!("{} facets found", f.len()),
                brute_force_facets(group),
            ) {
                report.check(
                    format!("{scope}exhaustive facet oracle"),
                    facet_sets(&oracle_facets) == facet_sets(poly.facets()),
                    format!(
                        "orbit construction and exhaustive enumeration agree on all {} facets",
                        poly.facets().len()
                    ),
                );
            }
        }
    }

    let cells = fundamental_domain_cells(group).map_err(|e| anyhow!("domain cells: {e}"))?;
    report.compare(
        format!("{scope}fundamental domain cell count"),
        &cells.len(),
        &ctx.exp.domain_cells(tag),
    );
    if let Some(cert) = record(
        report,
        format!("{scope}fundamental domain certificate"),
        |c: &spaceform::FundamentalDomainCertificate| {
            format!(
                "{} cells share the base vertex; vertex union {:?}",
                c.facet_indices.len(),
                c.vertex_union_names
            )
        },
        poly.verify_fundamental_domain(&cells),
    ) {
        report.check(
            format!("{scope}fundamental domain criteria"),
            cert.is_valid(),
            format!(
                "base_vertex_shared={}, trivial_self_intersection={}, count_matches={}, connected={}, orbit_distinct={}",
                cert.base_vertex_shared,
                cert.v_cap_v_inverse_trivial,
                cert.facet_count_matches,
                cert.union_connected,
                cert.orbit_distinct
            ),
        );
        report.compare(
            format!("{scope}fundamental domain vertex count"),
            &cert.vertex_union.len(),
            &ctx.exp.domain_vertices(tag),
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// complex

/// Verification checks for one complex: the boundary condition, the period-2
/// extension, and the label-specific certificates.
pub fn complex_checks(report: &mut Report, ctx: &Ctx, c: &ChainComplex, scope: &str) -> Result<()> {
    record(
        report,
        format!("{scope}boundary composition vanishes"),
        |_| {
            format!("ranks {:?}, every consecutive composite is zero over the group ring", c.ranks())
        },
        c.verify(),
    );

    if c.top_degree() >= 3 && c.ranks()[0] == 1 && c.ranks()[3] == 1 {
        record(
            report,
            format!("{scope}period-2 extension is a complex"),
            |ext: &ChainComplex| format!("extended ranks {:?}", ext.ranks()),
            extend_periodic(c, 2).and_then(|ext| ext.verify().map(|()| ext)),
        );
    }

    match c.label() {
        "KS3" => {
            if let Some(pushed) = record(
                report,
                format!("{scope}pushforward route certifies"),
                |_| "boundaries transported along the quotient map form the same complex".to_string(),
                build_k_s3(&ctx.groups, S3Mode::Pushforward),
            ) {
                let literal = build_k_s3(&ctx.groups, S3Mode::Literal)
                    .map_err(|e| anyhow!("literal route: {e}"))?;
                report.check(
                    format!("{scope}pushforward equals literal"),
                    pushed == literal,
                    "entrywise identical boundary matrices",
                );
            }
        }
        "KO_TZ" => {
            if let Some(tz) = record(
                report,
                format!("{scope}two-generator equivalence computable"),
                |_| "comparison matrices constructed".to_string(),
                verify_tz_equivalence(&ctx.groups),
            ) {
                report.check(
                    format!("{scope}central element relation"),
                    tz.z_equals_minus_one,
                    "fourth powers of both generators equal -1",
                );
                report.check(
                    format!("{scope}binding matches base complex"),
                    tz.binding_matches_base,
                    "the two-generator boundary data reproduces the base boundaries",
                );
                report.check(
                    format!("{scope}comparison matrices unimodular"),
                    tz.p_unimodular && tz.q_unimodular,
                    "both change-of-basis matrices have two-sided inverses",
                );
                report.check(
                    format!("{scope}boundary intertwining relations"),
                    tz.relations_hold.iter().all(|&b| b),
                    format!("{:?}", tz.relations_hold),
                );
            }
        }
        "KT_MIN" => {
            if let Some(min) = record(
                report,
                format!("{scope}minimal resolution comparison computable"),
                |_| "chain maps and homotopy constructed".to_string(),
                verify_minimal_resolution_t(&ctx.groups),
            ) {
                report.check(
                    format!("{scope}chain maps commute with boundaries"),
                    min.chain_maps_commute,
                    "both comparison maps are chain maps",
                );
                report.check(
                    format!("{scope}retract is the identity"),
                    min.retract_is_identity,
                    "the round trip on the small complex is the identity",
                );
                report.check(
                    format!("{scope}chain homotopy identity"),
                    min.homotopy_identity_holds,
                    "the round trip on the large complex equals the identity plus the homotopy boundary",
                );
                report.check(
                    format!("{scope}two-chain identity"),
                    min.two_chain_identity_holds,
                    "the distinguished degree-2 chain maps to the top boundary",
                );
            }
        }
        _ => {}
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// homology / cohomology

pub fn sphere_checks(
    report: &mut Report,
    ctx: &Ctx,
    tag: GroupTag,
    n: usize,
    scope: &str,
) -> Result<()> {
    let res = sphere_homology(&ctx.groups, tag, n);
    if let Err(HomologyError::SizeLimitExceeded { rows, limit, .. }) = &res {
        return Err(anyhow!(
            "sphere computation refused: realized work {rows} exceeds the size limit {limit}; choose a smaller period count"
        ));
    }
    let want = HomologyResult { degrees: ctx.exp.sphere_table(n) };
    if let Some(got) = record(
        report,
        format!("{scope}homology computable"),
        |h: &HomologyResult| format!("{} degrees computed", h.degrees.len()),
        res,
    ) {
        report.check(
            format!("{scope}homology sphere pattern"),
            got == want,
            table_details(&got, &want, "H_"),
        );
    }
    Ok(())
}

pub fn quotient_checks(report: &mut Report, ctx: &Ctx, tag: GroupTag, scope: &str) -> Result<()> {
    let want = HomologyResult { degrees: ctx.exp.quotient_table(tag) };
    if let Some(got) = record(
        report,
        format!("{scope}quotient homology computable"),
        |h: &HomologyResult| format!("{} degrees computed", h.degrees.len()),
        quotient_homology(&ctx.groups, tag),
    ) {
        report.check(
            format!("{scope}quotient homology table"),
            got == want,
            table_details(&got, &want, "H_"),
        );
        let h1 = &got.degrees[1];
        let ab = abelianization(ctx.groups.by_tag(tag));
        report.check(
            format!("{scope}degree-1 homology equals abelianization"),
            h1.betti == 0 && h1.torsion == ab,
            format!("H_1 torsion {:?}, abelianization {:?}", h1.torsion, ab),
        );
    }

    if let Some(det) = record(
        report,
        format!("{scope}middle boundary determinant computable"),
        |d: &String| format!("det = {d}"),
        poincare_determinant(&ctx.groups, tag).map(|d| d.to_string()),
    ) {
        let want = ctx.exp.determinant(tag).to_string();
        report.check(
            format!("{scope}middle boundary determinant"),
            det == want,
            if det == want {
                format!("det = {det}")
            } else {
                format!("got {det}, expected {want}")
            },
        );
    }
    Ok(())
}

pub fn cohomology_checks(
    report: &mut Report,
    ctx: &Ctx,
    tag: GroupTag,
    q_max: usize,
    scope: &str,
) -> Result<()> {
    if q_max < 4 {
        return Err(anyhow!("--qmax must be at least 4 to reach past one period"));
    }
    let want = HomologyResult { degrees: ctx.exp.cohomology_table(tag, q_max) };
    if let Some(got) = record(
        report,
        format!("{scope}cohomology computable"),
        |h: &HomologyResult| format!("{} degrees computed", h.degrees.len()),
        group_cohomology_table(&ctx.groups, tag, q_max),
    ) {
        report.check(
            format!("{scope}cohomology table through degree {q_max}"),
            got == want,
            table_details(&got, &want, "H^"),
        );
    }
    Ok(())
}

pub fn flag_checks(report: &mut Report, ctx: &Ctx, scope: &str) -> Result<()> {
    let Some(rep) = record(
        report,
        format!("{scope}flag homology computable"),
        |_| "integral, mod-2, and generator data computed".to_string(),
        flag_homology_report(&ctx.groups),
    ) else {
        return Ok(());
    };

    let want = HomologyResult { degrees: ctx.exp.flag_integral() };
    report.check(
        format!("{scope}integral homology table"),
        rep.integral == want,
        table_details(&rep.integral, &want, "H_"),
    );
    report.compare(format!("{scope}mod-2 betti numbers"), &rep.mod2_betti, &ctx.exp.flag_mod2_betti);
    report.compare(
        format!("{scope}total mod-2 dimension"),
        &rep.mod2_total_dimension,
        &ctx.exp.order(GroupTag::S3),
    );

    let g = &rep.generators;
    report.check(
        format!("{scope}degree-1 generators are cycles"),
        g.generators_are_cycles,
        "both explicit generators lie in the kernel of the boundary",
    );
    report.check(
        format!("{scope}generator relation holds"),
        g.relation_holds,
        "the doubled relation is a boundary with explicit preimage",
    );
    report.check(
        format!("{scope}generators independent modulo boundaries"),
        g.independent_mod_boundaries,
        "the generators span two dimensions of degree-1 homology mod 2",
    );
    report.compare(
        format!("{scope}reflection action on generators (first)"),
        &g.action_s_alpha,
        &ctx.exp.flag_action_s_alpha,
    );
    report.compare(
        format!("{scope}reflection action on generators (second)"),
        &g.action_s_beta,
        &ctx.exp.flag_action_s_beta,
    );
    report.check(
        format!("{scope}norm element generates top homology"),
        g.sigma_is_top_cycle,
        "the norm element is a top-degree cycle",
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// verify-all

pub fn verify_all_checks(report: &mut Report, ctx: &Ctx, fast: bool) -> Result<()> {
    for tag in [GroupTag::T, GroupTag::O, GroupTag::I, GroupTag::S3] {
        group_checks(report, ctx, tag, &format!("group {tag}: "))?;
    }

    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        let oracle = if tag == GroupTag::I && fast {
            OracleLevel::Orbit {
                skip_note: "skipped under --fast; the full run cross-checks every facet exhaustively",
            }
        } else {
            OracleLevel::Full
        };
        polytope_checks(report, ctx, tag, oracle, &format!("polytope {tag}: "))?;
    }

    for label in CATALOG_LABELS {
        let scope = format!("complex {label}: ");
        let c = build_by_label(&ctx.groups, label).map_err(|e| anyhow!("catalog {label}: {e}"))?;
        complex_checks(report, ctx, &c, &scope)?;
        for realization in [Realization::Augment, Realization::RegularRep] {
            let name = match realization {
                Realization::Augment => format!("{scope}euler consistency (augmentation)"),
                Realization::RegularRep => {
                    format!("{scope}euler consistency (regular representation)")
                }
            };
            match euler_consistency(&c, realization) {
                Ok(ok) => report.check(
                    name,
                    ok,
                    if ok {
                        "alternating rank sum equals alternating betti sum"
                    } else {
                        "alternating sums differ"
                    },
                ),
                Err(e) => report.check(name, false, e.to_string()),
            }
        }
    }

    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        sphere_checks(report, ctx, tag, 1, &format!("sphere {tag} n=1: "))?;
        if fast {
            report.skip(
                format!("sphere {tag} n=2: homology sphere pattern"),
                "skipped under --fast; the full run verifies the period-2 extension",
            );
        } else {
            sphere_checks(report, ctx, tag, 2, &format!("sphere {tag} n=2: "))?;
        }
    }

    for tag in [GroupTag::T, GroupTag::O, GroupTag::I] {
        quotient_checks(report, ctx, tag, &format!("quotient {tag}: "))?;
        cohomology_checks(report, ctx, tag, 12, &format!("cohomology {tag}: "))?;
    }

    flag_checks(report, ctx, "flag: ")?;
    Ok(())
}
