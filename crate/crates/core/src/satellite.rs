//! Seminorms and genus bounds for braid tori and their braid satellites.
//!
//! A satellite `K_b^tau . P_b'` is described by a companion braid `b`, a
//! twist `tau` and a pattern braid `b'`. With `g`, `g'` the genera of the
//! closures and `w'` the winding number of `b'`, the seminorm of
//! `gamma = x xi + y eta` is bounded below by
//!
//! ```text
//! (2g' - 1)|y| + (2g - 1)|r x + s w' y|,     tau = [[p, q], [r, s]]
//! ```
//!
//! with equality for the plumbing twist `[[0, -1], [1, 0]]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::{BraidWord, GenusEstimate, GenusMethod, Nontriviality};
use crate::error::{Citation, Error, Result};
use crate::mapping_class::{HomologyClass, MappingClass, Slope};
use crate::scalar::Scalar;
use crate::Rational;

/// A standard braid torus: the spun torus of a braid closure, with the genus
/// of that closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidTorusSpec {
    braid: BraidWord,
    genus: GenusEstimate,
    nontriviality: Nontriviality,
}

impl BraidTorusSpec {
    /// Computes the genus estimate and nontriviality of the closure of `braid`.
    pub fn new(braid: BraidWord) -> Result<Self> {
        let genus = braid.knot_genus()?;
        let alexander = braid.alexander_polynomial()?;
        let nontriviality = Nontriviality::from_invariants(num_traits::One::is_one(&alexander), &genus);
        Ok(BraidTorusSpec {
            braid,
            genus,
            nontriviality,
        })
    }

    /// Uses a caller-certified genus in place of the computed estimate.
    pub fn with_genus(braid: BraidWord, genus: i64) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidGenusOverride(genus));
        }
        if !braid.closure_is_knot() {
            return Err(Error::NotAKnot {
                components: braid.closure_components(),
            });
        }
        Ok(BraidTorusSpec {
            braid,
            genus: GenusEstimate::exact(genus, GenusMethod::UserSupplied),
            nontriviality: Nontriviality::Nontrivial,
        })
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn genus(&self) -> &GenusEstimate {
        &self.genus
    }

    pub fn nontriviality(&self) -> Nontriviality {
        self.nontriviality
    }

    pub fn winding_number(&self) -> i64 {
        self.braid.strands() as i64
    }

    fn require_nontrivial(&self, citation: Citation) -> Result<()> {
        match self.nontriviality {
            Nontriviality::Nontrivial => Ok(()),
            Nontriviality::Trivial => Err(Error::TrivialKnot(citation)),
            Nontriviality::Unknown => Err(Error::UnknownNontriviality(citation)),
        }
    }

    /// `2g - 1` evaluated at the lower genus bound, and whether that genus is certified.
    fn norm_coefficient(&self, citation: Citation) -> Result<(i64, bool)> {
        self.require_nontrivial(citation)?;
        Ok(((2 * self.genus.lower - 1).max(0), self.genus.exact))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormKind {
    Exact,
    LowerBound,
}

/// A seminorm value, either exact or a certified lower bound.
#[derive(Clone, Debug, PartialEq)]
pub struct SeminormValue<T> {
    pub value: T,
    pub kind: NormKind,
}

impl<T: Scalar> SeminormValue<T> {
    fn new(value: T, exact: bool) -> Self {
        debug_assert!(value >= T::zero());
        SeminormValue {
            value,
            kind: if exact { NormKind::Exact } else { NormKind::LowerBound },
        }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == NormKind::Exact
    }
}

impl<T: Scalar> fmt::Display for SeminormValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NormKind::Exact => write!(f, "{}", self.value),
            NormKind::LowerBound => write!(f, ">= {}", self.value),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SeminormRepr {
    value: String,
    kind: NormKind,
}

impl<T: Scalar> Serialize for SeminormValue<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeminormRepr {
            value: self.value.to_string(),
            kind: self.kind,
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for SeminormValue<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeminormRepr::deserialize(deserializer)?;
        let value = repr
            .value
            .parse::<T>()
            .map_err(|_| serde::de::Error::custom(format!("bad scalar {:?}", repr.value)))?;
        Ok(SeminormValue { value, kind: repr.kind })
    }
}

/// Seminorm of a braid torus: `(2g - 1)|y|`.
///
/// The basis values are `||eta|| = 2g - 1` and `||xi|| = 0`; since `xi` is
/// null, the triangle inequality pins every other class to `(2g - 1)|y|`.
pub fn braid_torus_norm<T: Scalar>(torus: &BraidTorusSpec, gamma: &HomologyClass<T>) -> Result<SeminormValue<T>> {
    let (coeff, exact) = torus.norm_coefficient(Citation::BraidTorusNorm)?;
    Ok(SeminormValue::new(T::from_int(coeff) * gamma.y.abs(), exact))
}

/// Seminorm of the `tau`-twisted braid torus, `||gamma||_{K^tau} = ||tau(gamma)||_K`.
pub fn twisted_braid_torus_norm<T: Scalar>(
    torus: &BraidTorusSpec,
    twist: &MappingClass,
    gamma: &HomologyClass<T>,
) -> Result<SeminormValue<T>> {
    braid_torus_norm(torus, &twist.act(gamma))
}

/// Pushes a class on the satellite torus to the companion: `(x, y) -> (x, w' y)`.
pub fn pattern_pushforward<T: Scalar>(gamma: &HomologyClass<T>, winding: i64) -> HomologyClass<T> {
    HomologyClass::new(gamma.x.clone(), gamma.y.clone() * T::from_int(winding))
}

/// The braid satellite `K_b^tau . P_b'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatelliteSpec {
    pub companion: BraidTorusSpec,
    pub twist: MappingClass,
    pub pattern: BraidTorusSpec,
}

/// Shape of a computed unit ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BallKind {
    /// The unit ball of the seminorm itself.
    Exact,
    /// Unit ball of a lower-bound norm; it contains the true unit ball.
    OuterApproximation,
}

/// A convex polygon, vertices listed counterclockwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct UnitBall<T> {
    pub kind: BallKind,
    pub vertices: Vec<HomologyClass<T>>,
}

/// Singular genus interval and genus upper bound for one slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBounds {
    pub singular_lower: i64,
    pub singular_upper: Option<i64>,
    pub singular_exact: Option<i64>,
    pub genus_upper: Option<i64>,
}

impl SatelliteSpec {
    pub fn new(companion: BraidTorusSpec, twist: MappingClass, pattern: BraidTorusSpec) -> Self {
        SatelliteSpec {
            companion,
            twist,
            pattern,
        }
    }

    pub fn plumbing(companion: BraidTorusSpec, pattern: BraidTorusSpec) -> Self {
        Self::new(companion, MappingClass::PLUMBING, pattern)
    }

    pub fn is_plumbing(&self) -> bool {
        self.twist.is_plumbing()
    }

    /// Pattern and companion coefficients `(2g' - 1, 2g - 1)` and joint exactness.
    fn coefficients(&self, citation: Citation) -> Result<(i64, i64, bool)> {
        let (companion, c_exact) = self.companion.norm_coefficient(citation)?;
        let (pattern, p_exact) = self.pattern.norm_coefficient(citation)?;
        Ok((pattern, companion, c_exact && p_exact))
    }

    /// `(2g' - 1)|y| + (2g - 1)|r x + s w' y|`.
    ///
    /// Exact only for the plumbing twist with certified genera; otherwise a lower bound.
    pub fn schubert_lower_bound<T: Scalar>(&self, gamma: &HomologyClass<T>) -> Result<SeminormValue<T>> {
        let (pattern, companion, exact) = self.coefficients(Citation::SatelliteNormBound)?;
        let pushed = pattern_pushforward(gamma, self.pattern.winding_number());
        let twisted = self.twist.act(&pushed);
        let value = T::from_int(pattern) * gamma.y.abs() + T::from_int(companion) * twisted.y.abs();
        Ok(SeminormValue::new(value, exact && self.is_plumbing()))
    }

    /// `(2g' - 1)|y| + (2g - 1)|x|`, the seminorm of a plumbing satellite.
    pub fn plumbing_norm<T: Scalar>(&self, gamma: &HomologyClass<T>) -> Result<SeminormValue<T>> {
        if !self.is_plumbing() {
            return Err(Error::NotPlumbing(Citation::SatelliteNormBound));
        }
        let (pattern, companion, exact) = self.coefficients(Citation::SatelliteNormBound)?;
        if !exact {
            return Err(Error::InexactGenus(Citation::SatelliteNormBound));
        }
        let value = T::from_int(pattern) * gamma.y.abs() + T::from_int(companion) * gamma.x.abs();
        Ok(SeminormValue::new(value, true))
    }

    /// Unit ball of the Schubert bound: exact for plumbings, an outer
    /// approximation otherwise.
    ///
    /// In coordinates `(u, y)` with `u = r x + s w' y` the ball is the rhombus
    /// `B|u| + A|y| <= 1`; mapping its four corners back gives the vertices.
    pub fn unit_ball_polygon<T: Scalar>(&self) -> Result<UnitBall<T>> {
        let (pattern, companion, exact) = self.coefficients(Citation::SatelliteNormBound)?;
        let r = self.twist.r();
        if r == 0 || pattern == 0 || companion == 0 {
            let null_direction = if r == 0 || companion == 0 {
                // the bound only sees y
                Slope::XI
            } else {
                // the bound only sees r x + s w' y
                let w = self.pattern.winding_number();
                let (x, y) = (-self.twist.s() * w, r);
                let g = num_integer::Integer::gcd(&x, &y);
                Slope::new(x / g, y / g)?
            };
            return Err(Error::UnboundedUnitBall { null_direction });
        }
        let a = T::from_int(pattern);
        let b = T::from_int(companion);
        let rs = T::from_int(r);
        let sw = T::from_int(self.twist.s() * self.pattern.winding_number());
        let one = T::one();
        // (u, y) -> (x, y) with x = (u - s w' y) / r
        let corner = |u: T, y: T| HomologyClass::new((u - sw.clone() * y.clone()) / rs.clone(), y);
        let uv = [
            (one.clone() / b.clone(), T::zero()),
            (T::zero(), one.clone() / a.clone()),
            (-(one.clone() / b), T::zero()),
            (T::zero(), -(one / a)),
        ];
        let mut vertices: Vec<_> = uv.into_iter().map(|(u, y)| corner(u, y)).collect();
        if r < 0 {
            // orientation-reversing change of coordinates
            vertices[1..].reverse();
        }
        let kind = if self.is_plumbing() && exact {
            BallKind::Exact
        } else {
            BallKind::OuterApproximation
        };
        Ok(UnitBall { kind, vertices })
    }

    /// Singular genus bounds from the seminorm.
    ///
    /// For plumbings with `N = ||c||`: `ceil((N+1)/2) <= g* <= floor((N+3)/2)`,
    /// and `g* = N/2 + 1` when both coordinates are odd. Otherwise only the
    /// lower bound `ceil((L+1)/2)` from a positive Schubert bound `L`.
    pub fn singular_genus_bounds(&self, c: Slope) -> Result<GenusBounds> {
        let gamma = c.homology::<Rational>();
        let half = Rational::new(1, 2);
        if self.is_plumbing() {
            let n = self.plumbing_norm(&gamma)?.value;
            let lower = ((n + Rational::from_int(1)) * half).ceil_int();
            let upper = ((n + Rational::from_int(3)) * half).floor_int();
            let exact = if c.x() % 2 != 0 && c.y() % 2 != 0 {
                assert!(
                    n.is_integer() && n.to_integer() % 2 == 0,
                    "odd-odd slopes have even norm"
                );
                Some(n.to_integer() / 2 + 1)
            } else {
                None
            };
            return Ok(GenusBounds {
                singular_lower: lower,
                singular_upper: Some(upper),
                singular_exact: exact,
                genus_upper: None,
            });
        }
        let bound = self.schubert_lower_bound(&gamma)?.value;
        if bound <= Rational::from_int(0) {
            return Err(Error::NonPositiveNorm(Citation::NormFiniteness));
        }
        Ok(GenusBounds {
            singular_lower: ((bound + Rational::from_int(1)) * half).ceil_int(),
            singular_upper: None,
            singular_exact: None,
            genus_upper: None,
        })
    }

    /// `g|x| + g'|y| + (|x| - 1)(|y| - 1)/2` for plumbing satellites.
    pub fn genus_upper_bound(&self, c: Slope) -> Result<i64> {
        if !self.is_plumbing() {
            return Err(Error::NotPlumbing(Citation::PlumbingGenera));
        }
        self.coefficients(Citation::PlumbingGenera)?;
        let (Some(g), Some(g_pattern)) = (self.companion.genus.value(), self.pattern.genus.value()) else {
            return Err(Error::InexactGenus(Citation::PlumbingGenera));
        };
        let (x, y) = (c.x().abs(), c.y().abs());
        let corner = (x - 1) * (y - 1);
        assert!(corner % 2 == 0, "coprime coordinates are never both even");
        Ok(g * x + g_pattern * y + corner / 2)
    }

    /// Everything computable for one slope; failed parts are recorded with their reason.
    pub fn slope_report(&self, c: Slope) -> SlopeReport {
        let mut unavailable = BTreeMap::new();
        let norm = if self.is_plumbing() {
            self.plumbing_norm(&c.homology())
        } else {
            self.schubert_lower_bound(&c.homology())
        };
        let norm = norm
            .map_err(|e| unavailable.insert("norm".to_string(), e.to_string()))
            .ok();
        let genus_upper = self
            .genus_upper_bound(c)
            .map_err(|e| unavailable.insert("genus_upper".to_string(), e.to_string()))
            .ok();
        let singular_genus = self
            .singular_genus_bounds(c)
            .map(|mut b| {
                b.genus_upper = genus_upper;
                b
            })
            .map_err(|e| unavailable.insert("singular_genus".to_string(), e.to_string()))
            .ok();
        SlopeReport {
            slope: c,
            norm,
            singular_genus,
            genus_upper,
            unavailable,
        }
    }
}

/// Per-slope summary; `unavailable` maps omitted fields to the reason.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeReport {
    pub slope: Slope,
    pub norm: Option<SeminormValue<Rational>>,
    pub singular_genus: Option<GenusBounds>,
    pub genus_upper: Option<i64>,
    pub unavailable: BTreeMap<String, String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = Rational;

    fn torus_with_genus(g: i64) -> BraidTorusSpec {
        // (2, 2g+1) torus knot has genus g
        BraidTorusSpec::new(BraidWord::torus(2, (2 * g + 1) as usize)).unwrap()
    }

    fn trefoil() -> BraidTorusSpec {
        torus_with_genus(1)
    }

    fn figure_eight() -> BraidTorusSpec {
        BraidTorusSpec::new(BraidWord::new(3, vec![1, -2, 1, -2]).unwrap()).unwrap()
    }

    fn plumbing(g: i64, g_pattern: i64) -> SatelliteSpec {
        SatelliteSpec::plumbing(torus_with_genus(g), torus_with_genus(g_pattern))
    }

    fn h(x: i64, y: i64) -> HomologyClass<Q> {
        HomologyClass::from_ints(x, y)
    }

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn slope(x: i64, y: i64) -> Slope {
        Slope::new(x, y).unwrap()
    }

    #[test]
    fn pushforward_examples() {
        assert_eq!(pattern_pushforward(&h(1, 0), 2), h(1, 0));
        assert_eq!(pattern_pushforward(&h(0, 1), 2), h(0, 2));
        assert_eq!(pattern_pushforward(&h(3, -1), 3), h(3, -3));
    }

    #[test]
    fn braid_torus_norm_examples() {
        let t = trefoil();
        assert_eq!(
            braid_torus_norm(&t, &h(0, 1)).unwrap(),
            SeminormValue {
                value: q(1),
                kind: NormKind::Exact
            }
        );
        assert_eq!(braid_torus_norm(&t, &h(1, 0)).unwrap().value, q(0));
        let t25 = torus_with_genus(2);
        assert_eq!(
            braid_torus_norm(&t25, &h(7, 3)).unwrap(),
            SeminormValue {
                value: q(9),
                kind: NormKind::Exact
            }
        );
    }

    #[test]
    fn braid_torus_norm_hypotheses() {
        let unknot = BraidTorusSpec::new(BraidWord::new(1, vec![]).unwrap()).unwrap();
        assert_eq!(
            braid_torus_norm(&unknot, &h(0, 1)).unwrap_err(),
            Error::TrivialKnot(Citation::BraidTorusNorm)
        );
        let unclear = BraidTorusSpec::new(BraidWord::new(2, vec![1, -1, 1]).unwrap()).unwrap();
        assert_eq!(
            braid_torus_norm(&unclear, &h(0, 1)).unwrap_err(),
            Error::UnknownNontriviality(Citation::BraidTorusNorm)
        );
        assert!(BraidTorusSpec::with_genus(BraidWord::new(2, vec![1, 1]).unwrap(), 1).is_err());
        assert_eq!(
            BraidTorusSpec::with_genus(BraidWord::torus(2, 3), 0).unwrap_err(),
            Error::InvalidGenusOverride(0)
        );
    }

    #[test]
    fn inexact_genus_downgrades_to_lower_bound() {
        // Nontrivial (Alexander polynomial of the trefoil) but not homogeneous,
        // and the Seifert bound 2 exceeds the Alexander bound 1.
        let b = BraidWord::new(2, vec![1, 1, 1, 1, -1]).unwrap();
        let t = BraidTorusSpec::new(b).unwrap();
        assert_eq!((t.genus().lower, t.genus().upper, t.genus().exact), (1, 2, false));
        let v = braid_torus_norm(&t, &h(0, 2)).unwrap();
        assert_eq!(
            v,
            SeminormValue {
                value: q(2),
                kind: NormKind::LowerBound
            }
        );
        let sat = SatelliteSpec::plumbing(t, trefoil());
        assert_eq!(
            sat.plumbing_norm(&h(1, 1)).unwrap_err(),
            Error::InexactGenus(Citation::SatelliteNormBound)
        );
        assert_eq!(sat.schubert_lower_bound(&h(1, 1)).unwrap().kind, NormKind::LowerBound);
        assert_eq!(sat.unit_ball_polygon::<Q>().unwrap().kind, BallKind::OuterApproximation);
    }

    #[test]
    fn schubert_examples() {
        let sat = SatelliteSpec::new(trefoil(), MappingClass::new(1, 0, 1, 1).unwrap(), trefoil());
        assert_eq!(
            sat.schubert_lower_bound(&h(0, 1)).unwrap(),
            SeminormValue {
                value: q(3),
                kind: NormKind::LowerBound
            }
        );
        let p = plumbing(1, 1);
        for (x, y) in [(3, -4), (0, 5), (-2, 0)] {
            assert_eq!(p.schubert_lower_bound(&h(x, y)).unwrap().value, q(x.abs() + y.abs()));
        }
        assert_eq!(sat.schubert_lower_bound(&h(0, 0)).unwrap().value, q(0));
    }

    #[test]
    fn plumbing_norm_examples() {
        let p = SatelliteSpec::plumbing(trefoil(), figure_eight());
        assert_eq!(
            p.plumbing_norm(&h(1, 1)).unwrap(),
            SeminormValue {
                value: q(2),
                kind: NormKind::Exact
            }
        );
        assert_eq!(plumbing(2, 1).plumbing_norm(&h(1, 1)).unwrap().value, q(4));
        assert_eq!(plumbing(1, 2).plumbing_norm(&h(1, 0)).unwrap().value, q(1));
        let not = SatelliteSpec::new(trefoil(), MappingClass::IDENTITY, trefoil());
        assert_eq!(
            not.plumbing_norm(&h(1, 0)).unwrap_err(),
            Error::NotPlumbing(Citation::SatelliteNormBound)
        );
    }

    #[test]
    fn rhombus_vertices() {
        let ball = plumbing(1, 1).unit_ball_polygon::<Q>().unwrap();
        assert_eq!(ball.kind, BallKind::Exact);
        assert_eq!(ball.vertices, vec![h(1, 0), h(0, 1), h(-1, 0), h(0, -1)]);
        let ball = plumbing(2, 1).unit_ball_polygon::<Q>().unwrap();
        let third = Q::new(1, 3);
        assert_eq!(
            ball.vertices,
            vec![
                HomologyClass::new(third, q(0)),
                h(0, 1),
                HomologyClass::new(-third, q(0)),
                h(0, -1)
            ]
        );
    }

    #[test]
    fn degenerate_ball_reports_null_direction() {
        let sat = SatelliteSpec::new(trefoil(), MappingClass::new(1, 4, 0, 1).unwrap(), trefoil());
        assert_eq!(
            sat.unit_ball_polygon::<Q>().unwrap_err(),
            Error::UnboundedUnitBall {
                null_direction: Slope::XI
            }
        );
    }

    #[test]
    fn outer_approximation_vertices_have_bound_one() {
        for twist in [[2, 1, 1, 1], [1, 0, -3, 1], [0, 1, -1, 0], [5, 2, -3, -1]] {
            let sat = SatelliteSpec::new(
                torus_with_genus(2),
                MappingClass::try_from(twist).unwrap(),
                figure_eight(),
            );
            let ball = sat.unit_ball_polygon::<Q>().unwrap();
            assert_eq!(ball.kind, BallKind::OuterApproximation);
            for v in &ball.vertices {
                assert_eq!(sat.schubert_lower_bound(v).unwrap().value, q(1));
            }
            // counterclockwise: consecutive cross products positive
            for i in 0..4 {
                let (a, b) = (&ball.vertices[i], &ball.vertices[(i + 1) % 4]);
                assert!(a.intersection(b) > q(0), "twist {twist:?}");
            }
        }
    }

    #[test]
    fn float_scalars_agree_with_rationals() {
        let p = plumbing(2, 1);
        let exact = p.plumbing_norm(&h(3, -2)).unwrap().value;
        let approx = p.plumbing_norm(&HomologyClass::new(3.0f64, -2.0)).unwrap().value;
        assert_eq!(exact, q(11));
        assert!((approx - 11.0).abs() < 1e-12);
        let ball = p.unit_ball_polygon::<f32>().unwrap();
        assert!((ball.vertices[0].x - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn singular_genus_examples() {
        let b = plumbing(1, 1).singular_genus_bounds(slope(1, 1)).unwrap();
        assert_eq!(b.singular_exact, Some(2));
        let b = plumbing(1, 1).singular_genus_bounds(slope(2, 1)).unwrap();
        assert_eq!(
            (b.singular_lower, b.singular_upper, b.singular_exact),
            (2, Some(3), None)
        );
        let b = plumbing(2, 1).singular_genus_bounds(slope(1, 1)).unwrap();
        assert_eq!(b.singular_exact, Some(3));
        let sat = SatelliteSpec::new(trefoil(), MappingClass::new(1, 4, 0, 1).unwrap(), trefoil());
        assert_eq!(
            sat.singular_genus_bounds(Slope::XI).unwrap_err(),
            Error::NonPositiveNorm(Citation::NormFiniteness)
        );
    }

    #[test]
    fn genus_upper_examples() {
        assert_eq!(plumbing(1, 1).genus_upper_bound(slope(1, 1)).unwrap(), 2);
        assert_eq!(plumbing(1, 1).genus_upper_bound(slope(2, 1)).unwrap(), 3);
        assert_eq!(plumbing(1, 2).genus_upper_bound(slope(3, 2)).unwrap(), 8);
        let not = SatelliteSpec::new(trefoil(), MappingClass::IDENTITY, trefoil());
        assert_eq!(
            not.genus_upper_bound(slope(1, 1)).unwrap_err(),
            Error::NotPlumbing(Citation::PlumbingGenera)
        );
    }

    #[test]
    fn slope_report_examples() {
        let r = plumbing(1, 1).slope_report(slope(1, 1));
        assert_eq!(
            r.norm,
            Some(SeminormValue {
                value: q(2),
                kind: NormKind::Exact
            })
        );
        assert_eq!(r.singular_genus.as_ref().unwrap().singular_exact, Some(2));
        assert_eq!(r.genus_upper, Some(2));
        assert!(r.unavailable.is_empty());

        let sat = SatelliteSpec::new(trefoil(), MappingClass::new(1, 0, 1, 1).unwrap(), trefoil());
        let r = sat.slope_report(slope(0, 1));
        assert_eq!(
            r.norm,
            Some(SeminormValue {
                value: q(3),
                kind: NormKind::LowerBound
            })
        );
        let sg = r.singular_genus.unwrap();
        assert_eq!((sg.singular_lower, sg.singular_upper), (2, None));
        assert!(r.unavailable.contains_key("genus_upper"));

        let sat = SatelliteSpec::new(trefoil(), MappingClass::new(1, 1, 0, 1).unwrap(), trefoil());
        let r = sat.slope_report(Slope::XI);
        assert_eq!(
            r.norm,
            Some(SeminormValue {
                value: q(0),
                kind: NormKind::LowerBound
            })
        );
        assert!(r.singular_genus.is_none());
        assert!(r.unavailable["singular_genus"].contains("norm-finiteness"));
    }

    #[test]
    fn slope_report_json_round_trip() {
        let r = plumbing(2, 1).slope_report(slope(3, -1));
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"slope\":[3,-1]"));
        assert!(text.contains("\"value\":\"10\""));
        assert_eq!(serde_json::from_str::<SlopeReport>(&text).unwrap(), r);
    }

    fn genus_pair() -> impl Strategy<Value = (i64, i64)> {
        (1i64..4, 1i64..4)
    }

    proptest! {
        #[test]
        fn plumbing_norm_is_a_seminorm((g, gp) in genus_pair(), a in (-20i64..=20, -20i64..=20), b in (-20i64..=20, -20i64..=20), n in 0i64..=10) {
            let p = plumbing(g, gp);
            let (a, b) = (h(a.0, a.1), h(b.0, b.1));
            let na = p.plumbing_norm(&a).unwrap().value;
            prop_assert_eq!(p.plumbing_norm(&a.scale(&q(n))).unwrap().value, na * q(n));
            let sum = p.plumbing_norm(&a.add(&b)).unwrap().value;
            prop_assert!(sum <= na + p.plumbing_norm(&b).unwrap().value);
        }

        #[test]
        fn schubert_dominates_pattern_term(p in 0i64..5, r in 1i64..5, x in -15i64..15, y in -15i64..15) {
            // any twist with first column (p, r); complete it to SL(2,Z)
            prop_assume!(num_integer::Integer::gcd(&p, &r) == 1);
            let (q0, s0) = bezout_completion(p, r);
            let sat = SatelliteSpec::new(trefoil(), MappingClass::new(p, q0, r, s0).unwrap(), torus_with_genus(2));
            let bound = sat.schubert_lower_bound(&h(x, y)).unwrap().value;
            prop_assert!(bound >= q(3 * y.abs()));
        }

        #[test]
        fn twisted_norm_is_covariant(t in (-3i64..=3, -3i64..=3), c in (-9i64..=9, -9i64..=9)) {
            prop_assume!(num_integer::Integer::gcd(&t.0, &t.1) == 1);
            prop_assume!(num_integer::Integer::gcd(&c.0, &c.1) == 1);
            let (q0, s0) = bezout_completion(t.0, t.1);
            let tau = MappingClass::new(t.0, q0, t.1, s0).unwrap();
            let k = torus_with_genus(2);
            let c = slope(c.0, c.1);
            let via_slope = braid_torus_norm(&k, &tau.act_on_slope(c).homology::<Q>()).unwrap();
            let via_twist = twisted_braid_torus_norm(&k, &tau, &c.homology::<Q>()).unwrap();
            prop_assert_eq!(via_slope, via_twist);
        }

        #[test]
        fn plumbing_ball_separates((g, gp) in genus_pair(), num in (-12i64..=12, -12i64..=12), den in 1i64..6) {
            let p = plumbing(g, gp);
            let ball = p.unit_ball_polygon::<Q>().unwrap();
            let v = HomologyClass::new(Q::new(num.0, den), Q::new(num.1, den));
            // strictly inside the polygon iff strictly left of every edge
            let sides: Vec<Q> = (0..4)
                .map(|i| {
                    let a = &ball.vertices[i];
                    let b = &ball.vertices[(i + 1) % 4];
                    let edge = HomologyClass::new(b.x - a.x, b.y - a.y);
                    let rel = HomologyClass::new(v.x - a.x, v.y - a.y);
                    edge.intersection(&rel)
                })
                .collect();
            let norm = p.plumbing_norm(&v).unwrap().value;
            if sides.iter().all(|s| *s > q(0)) {
                prop_assert!(norm < q(1));
            } else if sides.iter().any(|s| *s < q(0)) {
                prop_assert!(norm > q(1));
            } else {
                prop_assert_eq!(norm, q(1));
            }
            for vertex in &ball.vertices {
                prop_assert_eq!(p.plumbing_norm(vertex).unwrap().value, q(1));
            }
        }
    }

    /// `(q, s)` with `p s - q r = 1`.
    fn bezout_completion(p: i64, r: i64) -> (i64, i64) {
        let e = num_integer::Integer::extended_gcd(&p, &r);
        // e.x * p + e.y * r = gcd = +-1
        let sign = e.gcd.signum();
        (-e.y * sign, e.x * sign)
    }
}
