//! Periodic coloring words, their verifier, and the closed-form
//! constructions for each family.

mod constructors;
mod verify;
mod word;

pub use constructors::{
    expected_period_1a, expected_period_1aa1, expected_period_1ma, family_pattern, first_fit_bound,
    mod_p_pattern, pattern_1a, pattern_1aa1, pattern_1ma,
};
pub use verify::{verify, VerificationReport, Violation};
pub use word::{PatternError, PatternWord};
