use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mapping_class::Slope;

/// Named mathematical results the calculator relies on.
///
/// Every hypothesis violation and every extendability verdict carries one of
/// these tags so batch output can be traced back to the criterion involved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// Cardinality of a slope invariant's value set bounds the index of the
    /// stable extendable subgroup.
    ValueSetIndex,
    /// A nondegenerate seminorm forces a finite stable extendable subgroup,
    /// and positive norm bounds the singular genus from below.
    NormFiniteness,
    /// Seminorm of a standard braid torus.
    BraidTorusNorm,
    /// Schubert-type lower bound for braid satellites, sharp for plumbings.
    SatelliteNormBound,
    /// Twists not fixing the first basis class up to sign give finiteness.
    TwistFiniteness,
    /// Singular genus and genus estimates for plumbing braid satellites.
    PlumbingGenera,
    /// Dehn twists along slopes of vanishing singular genus stably extend.
    VanishingSingularGenus,
    /// Extendable subgroups of the unknotted torus.
    UnknottedTorus,
}

impl Citation {
    pub fn tag(self) -> &'static str {
        match self {
            Citation::ValueSetIndex => "value-set-index",
            Citation::NormFiniteness => "norm-finiteness",
            Citation::BraidTorusNorm => "braid-torus-norm",
            Citation::SatelliteNormBound => "satellite-norm-bound",
            Citation::TwistFiniteness => "twist-finiteness",
            Citation::PlumbingGenera => "plumbing-genera",
            Citation::VanishingSingularGenus => "vanishing-singular-genus",
            Citation::UnknottedTorus => "unknotted-torus",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i64, strands: usize },

    #[error("braid closure has {components} components; a knot is required")]
    NotAKnot { components: usize },

    #[error("{0} requires a nontrivial associated knot")]
    TrivialKnot(Citation),

    #[error("{0} requires a nontrivial associated knot, but nontriviality could not be certified")]
    UnknownNontriviality(Citation),

    #[error("{0} requires an exactly certified knot genus")]
    InexactGenus(Citation),

    #[error("{0} requires a plumbing twist (xi -> eta, eta -> -xi)")]
    NotPlumbing(Citation),

    #[error("{0}: exact norm unavailable, the twist is not a plumbing")]
    ExactNormUnavailable(Citation),

    #[error("{0} requires a positive seminorm lower bound")]
    NonPositiveNorm(Citation),

    #[error("norm lower bound vanishes along slope {null_direction}; unit ball is unbounded")]
    UnboundedUnitBall { null_direction: Slope },

    #[error("({x}, {y}) is not a primitive class")]
    NotPrimitive { x: i64, y: i64 },

    #[error("matrix [[{p}, {q}], [{r}, {s}]] has determinant {det}, expected 1")]
    NotUnimodular { p: i64, q: i64, r: i64, s: i64, det: i64 },

    #[error("{0} requires a nonnegative genus")]
    NegativeGenus(Citation),

    #[error("genus override must be a positive integer, got {0}")]
    InvalidGenusOverride(i64),

    #[error("{0} requires a nonempty value set")]
    EmptyValueSet(Citation),

    #[error("N ≥ 1 required")]
    InvalidRange,

    #[error("word not in commutator subgroup (exponent sums {0:?})")]
    NotInCommutatorSubgroup(Vec<i64>),

    #[error("letter {letter} out of range for free group of rank {rank}")]
    LetterOutOfRange { letter: i64, rank: usize },

    #[error("search needs {needed} nodes, above the limit of {limit}")]
    SearchBudget { needed: u128, limit: u64 },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    /// The cited result whose hypothesis this error reports as violated, if any.
    pub fn citation(&self) -> Option<Citation> {
        match self {
            Error::TrivialKnot(c)
            | Error::UnknownNontriviality(c)
            | Error::InexactGenus(c)
            | Error::NotPlumbing(c)
            | Error::ExactNormUnavailable(c)
            | Error::NonPositiveNorm(c)
            | Error::NegativeGenus(c)
            | Error::EmptyValueSet(c) => Some(*c),
            _ => None,
        }
    }

    /// Input that could not be read, as opposed to a mathematical hypothesis failing.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::GeneratorOutOfRange { .. }
                | Error::NotPrimitive { .. }
                | Error::NotUnimodular { .. }
                | Error::InvalidGenusOverride(_)
                | Error::InvalidRange
                | Error::LetterOutOfRange { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
