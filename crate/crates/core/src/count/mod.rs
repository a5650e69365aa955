//! Exact cardinalities, generating functions and growth constants.

mod avoid;
mod codes;
mod growth;
mod series;

pub use avoid::{b_count_multinomial, b_count_recurrence, b_gf, b_table, cyclic_exactly_one_count, CodeSizeProfile};
pub use codes::{d_k_identity_check, r_count, r_gf, s_count, s_gf, u_count, u_gf, v_count, vcal_count, vcal_gf};
pub use growth::{
    epsilon_k, growth_rate, EpsilonResult, FixedPoint, GrowthFamily, DEFAULT_TOLERANCE, FRAC_BITS, MIN_TOLERANCE,
};
pub use series::{IntPolynomial, RationalSeries};
