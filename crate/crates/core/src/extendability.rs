//! One-directional criteria for (stable) extendable subgroups of `Mod(T^2)`.
//!
//! Nothing here computes a subgroup. Each function turns invariants from
//! [`crate::satellite`] into a verdict that carries the criterion it used.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Citation, Error, Result};
use crate::mapping_class::{HomologyClass, MappingClass, Slope};
use crate::satellite::SatelliteSpec;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subject {
    ExtendableSubgroup,
    StableExtendableSubgroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conclusion {
    Finite,
    InfiniteIndex,
    IndexAtLeast(u64),
    StablyExtendable,
    NoConclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Justification {
    pub citation: Citation,
    pub parameters: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendabilityVerdict {
    pub subject: Subject,
    pub conclusion: Conclusion,
    pub justification: Justification,
}

impl ExtendabilityVerdict {
    fn new<const N: usize>(
        subject: Subject,
        conclusion: Conclusion,
        citation: Citation,
        parameters: [(&str, String); N],
    ) -> Self {
        ExtendabilityVerdict {
            subject,
            conclusion,
            justification: Justification {
                citation,
                parameters: parameters.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            },
        }
    }
}

fn genus_params(spec: &SatelliteSpec) -> [(&'static str, String); 3] {
    [
        ("companion_genus", spec.companion.genus().lower.to_string()),
        ("pattern_genus", spec.pattern.genus().lower.to_string()),
        ("twist", spec.twist.to_string()),
    ]
}

/// A nondegenerate exact seminorm makes the stable extendable subgroup finite.
///
/// Plumbing norms `(2g' - 1)|y| + (2g - 1)|x|` with `g, g' >= 1` never vanish
/// off the origin, so the verdict is always `Finite` once the norm is certified.
pub fn finiteness_from_norm(spec: &SatelliteSpec) -> Result<ExtendabilityVerdict> {
    if !spec.is_plumbing() {
        return Err(Error::ExactNormUnavailable(Citation::NormFiniteness));
    }
    let on_xi = spec.plumbing_norm(&HomologyClass::<Rational>::from_ints(1, 0))?.value;
    let on_eta = spec.plumbing_norm(&HomologyClass::<Rational>::from_ints(0, 1))?.value;
    // a norm that is a positive combination of |x| and |y| is nondegenerate
    let zero = Rational::from_integer(0);
    let conclusion = if on_xi > zero && on_eta > zero {
        Conclusion::Finite
    } else {
        Conclusion::NoConclusion
    };
    let [g, gp, tw] = genus_params(spec);
    Ok(ExtendabilityVerdict::new(
        Subject::StableExtendableSubgroup,
        conclusion,
        Citation::NormFiniteness,
        [
            g,
            gp,
            tw,
            ("norm_xi", on_xi.to_string()),
            ("norm_eta", on_eta.to_string()),
        ],
    ))
}

/// Twists moving `xi` off `+-xi` force a finite stable extendable subgroup.
pub fn finiteness_from_twist(spec: &SatelliteSpec) -> Result<ExtendabilityVerdict> {
    // The Schubert bound carries the same nontriviality hypotheses.
    spec.schubert_lower_bound(&HomologyClass::<Rational>::zero())
        .map_err(|e| match e {
            Error::TrivialKnot(_) => Error::TrivialKnot(Citation::TwistFiniteness),
            Error::UnknownNontriviality(_) => Error::UnknownNontriviality(Citation::TwistFiniteness),
            other => other,
        })?;
    let conclusion = if spec.twist.fixes_xi_up_to_sign() {
        Conclusion::NoConclusion
    } else {
        Conclusion::Finite
    };
    Ok(ExtendabilityVerdict::new(
        Subject::StableExtendableSubgroup,
        conclusion,
        Citation::TwistFiniteness,
        genus_params(spec),
    ))
}

/// Number of distinct values of a stably invariant slope function is a lower
/// bound for the index of the stable extendable subgroup.
pub fn index_lower_bound<V: Ord>(values: &BTreeMap<Slope, V>) -> Result<ExtendabilityVerdict> {
    if values.is_empty() {
        return Err(Error::EmptyValueSet(Citation::ValueSetIndex));
    }
    let distinct: BTreeSet<&V> = values.values().collect();
    let height = values.keys().map(Slope::height).max().unwrap_or(0);
    Ok(ExtendabilityVerdict::new(
        Subject::StableExtendableSubgroup,
        Conclusion::IndexAtLeast(distinct.len() as u64),
        Citation::ValueSetIndex,
        [("slopes", values.len().to_string()), ("max_height", height.to_string())],
    ))
}

/// Exact norm values on every slope of height at most `n`.
pub fn norm_values(spec: &SatelliteSpec, n: i64) -> Result<BTreeMap<Slope, Rational>> {
    if n < 1 {
        return Err(Error::InvalidRange);
    }
    Slope::enumerate(n)
        .into_iter()
        .map(|c| Ok((c, spec.plumbing_norm(&c.homology::<Rational>())?.value)))
        .collect()
}

/// [`index_lower_bound`] over exact norm values up to height `n`.
pub fn norm_index_bound(spec: &SatelliteSpec, n: i64) -> Result<ExtendabilityVerdict> {
    index_lower_bound(&norm_values(spec, n)?)
}

/// The Dehn twist along a slope of vanishing singular genus is stably extendable.
///
/// `singular_genus` must be a certified value of the singular genus of `c`.
pub fn dehn_twist_stably_extendable(c: Slope, singular_genus: i64) -> Result<ExtendabilityVerdict> {
    if singular_genus < 0 {
        return Err(Error::NegativeGenus(Citation::VanishingSingularGenus));
    }
    let conclusion = if singular_genus == 0 {
        Conclusion::StablyExtendable
    } else {
        Conclusion::NoConclusion
    };
    Ok(ExtendabilityVerdict::new(
        Subject::StableExtendableSubgroup,
        conclusion,
        Citation::VanishingSingularGenus,
        [
            ("slope", c.to_string()),
            ("singular_genus", singular_genus.to_string()),
            ("twist", MappingClass::dehn_twist(c).to_string()),
        ],
    ))
}

/// Known facts for the unknotted torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknottedTorusFacts {
    /// The stable extendable subgroup is all of `Mod(T^2)`.
    pub stable_is_all_of_mod: bool,
    /// Index of the extendable subgroup in `Mod(T^2)`.
    pub extendable_index: u64,
    /// Every knotted torus has extendable subgroup of at least this index.
    pub universal_index_floor: u64,
    pub stable_contains_extendable: bool,
    pub citation: Citation,
}

pub fn unknotted_torus_facts() -> UnknottedTorusFacts {
    UnknottedTorusFacts {
        stable_is_all_of_mod: true,
        extendable_index: 3,
        universal_index_floor: 3,
        stable_contains_extendable: true,
        citation: Citation::UnknottedTorus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::satellite::BraidTorusSpec;

    fn torus(g: i64) -> BraidTorusSpec {
        BraidTorusSpec::new(BraidWord::torus(2, (2 * g + 1) as usize)).unwrap()
    }

    fn sat(g: i64, gp: i64, twist: [i64; 4]) -> SatelliteSpec {
        SatelliteSpec::new(torus(g), MappingClass::try_from(twist).unwrap(), torus(gp))
    }

    const PLUMB: [i64; 4] = [0, -1, 1, 0];

    #[test]
    fn norm_finiteness() {
        let v = finiteness_from_norm(&sat(1, 1, PLUMB)).unwrap();
        assert_eq!(v.conclusion, Conclusion::Finite);
        assert_eq!(v.subject, Subject::StableExtendableSubgroup);
        assert_eq!(v.justification.citation, Citation::NormFiniteness);
        assert_eq!(
            finiteness_from_norm(&sat(3, 2, PLUMB)).unwrap().conclusion,
            Conclusion::Finite
        );
        let err = finiteness_from_norm(&sat(1, 1, [1, 1, 0, 1])).unwrap_err();
        assert!(err.to_string().contains("exact norm unavailable"));
    }

    #[test]
    fn twist_finiteness() {
        assert_eq!(
            finiteness_from_twist(&sat(1, 1, PLUMB)).unwrap().conclusion,
            Conclusion::Finite
        );
        assert_eq!(
            finiteness_from_twist(&sat(1, 1, [1, 1, 0, 1])).unwrap().conclusion,
            Conclusion::NoConclusion
        );
        assert_eq!(
            finiteness_from_twist(&sat(1, 1, [2, 1, 1, 1])).unwrap().conclusion,
            Conclusion::Finite
        );
        let unknot = BraidTorusSpec::new(BraidWord::new(1, vec![]).unwrap()).unwrap();
        let spec = SatelliteSpec::plumbing(unknot, torus(1));
        assert_eq!(
            finiteness_from_twist(&spec).unwrap_err(),
            Error::TrivialKnot(Citation::TwistFiniteness)
        );
    }

    #[test]
    fn index_bounds() {
        let v = norm_index_bound(&sat(1, 2, PLUMB), 3).unwrap();
        assert_eq!(v.conclusion, Conclusion::IndexAtLeast(9));
        let values = norm_values(&sat(1, 2, PLUMB), 3).unwrap();
        let distinct: BTreeSet<i64> = values.values().map(|q| q.to_integer()).collect();
        assert_eq!(distinct, BTreeSet::from([1, 3, 4, 5, 6, 7, 9, 10, 11]));

        let constant: BTreeMap<Slope, i64> = Slope::enumerate(4).into_iter().map(|c| (c, 7)).collect();
        assert_eq!(
            index_lower_bound(&constant).unwrap().conclusion,
            Conclusion::IndexAtLeast(1)
        );

        assert_eq!(
            norm_index_bound(&sat(1, 1, PLUMB), 2).unwrap().conclusion,
            Conclusion::IndexAtLeast(3)
        );
        assert_eq!(
            index_lower_bound::<i64>(&BTreeMap::new()).unwrap_err(),
            Error::EmptyValueSet(Citation::ValueSetIndex)
        );
        assert_eq!(norm_index_bound(&sat(1, 1, PLUMB), 0).unwrap_err(), Error::InvalidRange);
    }

    #[test]
    fn index_bound_grows() {
        let spec = sat(1, 2, PLUMB);
        let counts: Vec<u64> = (1..=10)
            .map(|n| match norm_index_bound(&spec, n).unwrap().conclusion {
                Conclusion::IndexAtLeast(k) => k,
                other => panic!("{other:?}"),
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        assert!(counts[9] > counts[2]);
    }

    #[test]
    fn dehn_twist_verdicts() {
        let c = Slope::new(2, 3).unwrap();
        let v = dehn_twist_stably_extendable(c, 0).unwrap();
        assert_eq!(v.conclusion, Conclusion::StablyExtendable);
        assert_eq!(v.justification.citation, Citation::VanishingSingularGenus);
        assert_eq!(
            dehn_twist_stably_extendable(c, 2).unwrap().conclusion,
            Conclusion::NoConclusion
        );
        assert!(dehn_twist_stably_extendable(c, -1).is_err());
    }

    #[test]
    fn unknotted_facts() {
        let f = unknotted_torus_facts();
        assert!(f.stable_is_all_of_mod && f.stable_contains_extendable);
        assert_eq!((f.extendable_index, f.universal_index_floor), (3, 3));
    }

    #[test]
    fn verdict_json_has_citation_tag() {
        let v = finiteness_from_twist(&sat(1, 1, PLUMB)).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains("\"citation\":\"twist-finiteness\""));
        assert_eq!(serde_json::from_str::<ExtendabilityVerdict>(&text).unwrap(), v);
    }
}
