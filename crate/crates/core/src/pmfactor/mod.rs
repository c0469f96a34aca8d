//! Plus-minus pair machinery: the U_k ladder with its congruence checks,
//! the two x-y-x rewriters, and the ordered-factorization spanning
//! certificates used by the Borcherds-style and graded schemes.

mod ladder;
mod span;
mod xyx;

pub use ladder::{check_ak_bk, uk_subspace, UkLadder};
pub use span::{
    borcherds_scheme, pair_search, span_certificate, verify_pm_pair, verify_regular_pair,
    zgraded_scheme, FactorizationScheme,
};
pub use xyx::{xyx_rewrite_linear, xyx_rewrite_recursive, XYXMonomial, XYXPoly, XyxSolver};
