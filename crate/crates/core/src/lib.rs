//! Exact invariants of knotted tori in the 4-sphere built from braids.
//!
//! * [`braid`]: braid words, closures, Alexander polynomial, genus estimates.
//! * [`mapping_class`]: `SL(2, Z)` acting on slopes, Dehn twists, torsion.
//! * [`satellite`]: seminorms of braid tori and braid satellites, unit balls,
//!   singular genus and genus bounds.
//! * [`extendability`]: finiteness and index criteria for extendable subgroups.
//! * [`word`]: free-group words and a bounded commutator-length search.
//!
//! The numeric code is generic over [`Scalar`]; the aliases below pick exact
//! rationals, which is what every reported value uses.

pub mod braid;
pub mod error;
pub mod extendability;
pub mod mapping_class;
pub mod satellite;
pub mod scalar;
pub mod svg;
pub mod word;

pub use braid::laurent::{Coefficient, LaurentPolynomial};
pub use braid::{BraidWord, GenusEstimate, GenusMethod, Nontriviality, Permutation};
pub use error::{Citation, Error, Result};
pub use extendability::{Conclusion, ExtendabilityVerdict, Subject};
pub use mapping_class::{intersection_form, HomologyClass, MappingClass, Slope};
pub use satellite::{
    braid_torus_norm, pattern_pushforward, BallKind, BraidTorusSpec, GenusBounds, NormKind, SatelliteSpec,
    SeminormValue, SlopeReport, UnitBall,
};
pub use scalar::Scalar;
pub use word::{ClWitness, GroupWord};

/// Exact rationals used for every reported norm value.
pub type Rational = num_rational::Ratio<i64>;

/// Integer Laurent polynomials with unbounded coefficients.
pub type AlexanderPolynomial = LaurentPolynomial<num_bigint::BigInt>;

pub type Homology = HomologyClass<Rational>;
pub type HomologyF64 = HomologyClass<f64>;
pub type Seminorm = SeminormValue<Rational>;
pub type SeminormF64 = SeminormValue<f64>;
pub type RationalUnitBall = UnitBall<Rational>;
