pub mod complexes;
pub mod group;
pub mod homology;
pub mod matrix;
pub mod polytope;
pub mod quaternion;
pub mod ring;
pub mod scalar;

pub use complexes::{
    build_by_label, build_k, build_k_o_tz, build_k_s3, build_k_t_min, extend_periodic,
    h1_generators_flag, verify_minimal_resolution_t, verify_tz_equivalence, ChainComplex,
    ComplexError, FlagH1Report, MinimalResolutionReport, S3Mode, TzReport, CATALOG_LABELS,
};
pub use group::{Group, GroupError, GroupTag, Groups};
pub use homology::{
    euler_consistency, flag_homology_report, group_cohomology_table, integral_homology,
    poincare_determinant, quotient_h1_matches_abelianization, quotient_homology, realize,
    sphere_homology, DegreeHomology, FlagHomologyReport, HomologyError, HomologyResult,
    Realization, REALIZATION_SIZE_LIMIT,
};
pub use matrix::{BitMatrix, IntMatrix, MatrixError, SnfResult};
pub use polytope::{Facet, FVector, FundamentalDomainCertificate, Polytope, PolytopeError};
pub use quaternion::Quaternion;
pub use ring::{RingElem, RingError, RingMatrix, Side};
pub use scalar::{QuadScalar, ScalarError};
