//! Rational Betti-vector bookkeeping: Euler characteristics, exact-sequence
//! rank solving, trace sets and the fixed-point census.

mod betti;
mod gysin;
mod lefschetz;
mod profiles;

pub use betti::BettiVector;
pub use gysin::{forced_ranks, sequence_dims, smith_gysin_solve, ExactSolution};
pub use lefschetz::{
    divisibility_obstruction, integer_trace_set, lefschetz_value_set, surviving_indices,
    LefschetzSpec, QuotientGroup, Verdict,
};
pub use profiles::{
    allday_bound_check, borel_decomposition_exists, borel_feasible, enumerate_profiles,
    frankel_compatible, profile_admissible, ComponentType, FixedPointProfile, AMBIENT_GENERATORS,
};

pub fn euler_char(b: &BettiVector) -> i64 {
    b.euler_char()
}
