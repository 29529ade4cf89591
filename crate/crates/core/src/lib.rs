//! 2-distance colorings of integer distance graphs.
//!
//! The integer distance graph `G(D)` has the integers as vertices and an
//! edge `uv` whenever `|u - v| ∈ D`. A 2-distance coloring gives distinct
//! colors to vertices at distance at most two, and `χ₂(G(D))` is the least
//! number of colors such a coloring needs. Since `G(D)² = G(D²)`, this is
//! the ordinary chromatic number of `G(D²)`.
//!
//! The crate provides:
//!
//! * [`DistanceSet`] and [`square_set`] for `D` and `D²`,
//! * [`patterns`]: periodic color words, their verifier, and the explicit
//!   constructions for `{1,a}`, `{1,a,a+1}` and `{1,...,m,a}`,
//! * [`families`]: the closed-form values and intervals for those families,
//! * [`solver`]: certified two-sided bounds from periodic search (upper) and
//!   finite-window refutation (lower).

pub mod circulant;
pub mod clique;
pub mod distance;
pub mod families;
pub mod patterns;
pub mod solver;
pub mod square;
pub mod window;

pub use circulant::{reduce_to_circulant, CirculantInstance, InfeasiblePeriod};
pub use clique::{clique_certificate, is_clique, CliqueCertificate};
pub use distance::{DistanceError, DistanceSet, MAX_DISTANCE};
pub use families::{classify, ChiValue, Family, FamilyClassification, FamilyTag, Source};
pub use patterns::{verify, PatternWord, VerificationReport};
pub use solver::{chi2_bounds, Chi2Bounds, SearchConfig};
pub use square::{square_set, SquareSet};
pub use window::{window_instance, WindowInstance};
