//! Exact computations with factorizations in universal enveloping algebras
//! of structure-constant Lie algebras over Q: PBW normal forms, plus-minus
//! pair certificates, classification of three-dimensional algebras, and
//! finite-dimensional representation checks. No floating point anywhere.

pub mod algebras;
pub mod certificate;
pub mod classify;
pub mod error;
pub mod grading;
pub mod lie;
pub mod linalg;
pub mod pmfactor;
pub mod repcheck;
pub mod sample;
pub mod scalar;
pub mod subspace;
pub mod textfmt;
pub mod uea;

pub use algebras::{
    a_family, abelian, borcherds_rank1_zero, g_special, heisenberg, jacobson_case, k_family, sl2,
    sl3_chevalley, CaseTag, RClass, TriangularData,
};
pub use certificate::{Certificate, Verdict};
pub use classify::{
    a_isomorphic, classify_jacobson, classify_report, has_pm_pair, is_isomorphic_to_g,
    k_invariant, k_to_a, pf_class_of, regular_class, similar2, similar2_up_to_scalar,
    three_graded_classify, ClassifyReport, JacobsonCase, KClassOutcome, PFClass, RegularClass,
    ThreeGradedClass,
};
pub use error::{Error, Result};
pub use grading::{positivity, Grading, Sign};
pub use lie::{LieAlgebra, Vector};
pub use pmfactor::{
    borcherds_scheme, check_ak_bk, pair_search, span_certificate, uk_subspace, verify_pm_pair,
    verify_regular_pair, xyx_rewrite_linear, xyx_rewrite_recursive, zgraded_scheme,
    FactorizationScheme, UkLadder, XYXMonomial, XYXPoly, XyxSolver,
};
pub use linalg::QMatrix;
pub use repcheck::{
    generated_submodule, generated_submodule_stabilized, is_nilpotent, semisimple_on, sl2_irrep,
    verify_rep, Representation, SemisimpleReport,
};
pub use scalar::{rat, ratio, Scalar};
pub use subspace::Subspace;
pub use textfmt::{parse_algebra, parse_combination_of, parse_expression, ParseError};
pub use uea::{pbw_normal_form, power, verify_identity, NCPoly, PBWMonomial, PBWPoly, Word};
