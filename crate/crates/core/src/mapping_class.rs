//! Mapping classes of the torus as `SL(2, Z)` and their action on slopes and homology.
//!
//! Coordinates are taken in the basis `xi = [S^1 x pt]`, `eta = [pt x S^1]`.
//! Matrices act on column vectors from the left, so `a.compose(&b)` applies
//! `b` first.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An unoriented essential simple closed curve on the torus: a primitive
/// class `(x, y)` with `x > 0`, or `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    x: i64,
    y: i64,
}

impl Slope {
    pub const XI: Slope = Slope { x: 1, y: 0 };
    pub const ETA: Slope = Slope { x: 0, y: 1 };

    /// Canonicalizes the sign; fails unless `gcd(|x|, |y|) = 1`.
    pub fn new(x: i64, y: i64) -> Result<Self> {
        if x.gcd(&y) != 1 {
            return Err(Error::NotPrimitive { x, y });
        }
        Ok(Self::canonical(x, y))
    }

    fn canonical(x: i64, y: i64) -> Self {
        if x < 0 || (x == 0 && y < 0) {
            Slope { x: -x, y: -y }
        } else {
            Slope { x, y }
        }
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn homology<T: Scalar>(&self) -> HomologyClass<T> {
        HomologyClass::from_ints(self.x, self.y)
    }

    /// `max(|x|, |y|)`, the size used for slope enumeration.
    pub fn height(&self) -> i64 {
        self.x.abs().max(self.y.abs())
    }

    /// All slopes with `max(|x|, |y|) <= n`, in canonical order.
    pub fn enumerate(n: i64) -> Vec<Slope> {
        let mut out = Vec::new();
        for x in 0..=n {
            for y in -n..=n {
                if x.gcd(&y) == 1 && (x > 0 || y == 1) {
                    out.push(Slope { x, y });
                }
            }
        }
        out.sort();
        out
    }
}

/// Canonical slope order: by height, then `x`, then `y`.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height(), self.x, self.y).cmp(&(other.height(), other.x, other.y))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.x, self.y)
    }
}

/// Accepts `x/y` or `x y`.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = if s.contains('/') {
            s.split('/').map(str::trim).collect()
        } else {
            s.split_whitespace().collect()
        };
        if parts.len() != 2 {
            return Err(Error::parse(s, "expected a slope `x/y` or `x y`"));
        }
        let coord = |t: &str| t.parse::<i64>().map_err(|_| Error::parse(t, "not an integer"));
        Slope::new(coord(parts[0])?, coord(parts[1])?)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[i64; 2]>::deserialize(deserializer)?;
        Slope::new(x, y).map_err(serde::de::Error::custom)
    }
}

/// A real homology class `x xi + y eta`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyClass<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> HomologyClass<T> {
    pub fn new(x: T, y: T) -> Self {
        HomologyClass { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        HomologyClass::new(T::from_int(x), T::from_int(y))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn scale(&self, k: &T) -> Self {
        HomologyClass::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        HomologyClass::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }

    /// Algebraic intersection number, normalized so `I(xi, eta) = 1`.
    pub fn intersection(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }
}

pub fn intersection_form<T: Scalar>(a: &HomologyClass<T>, b: &HomologyClass<T>) -> T {
    a.intersection(b)
}

impl<T: Scalar> Serialize for HomologyClass<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for HomologyClass<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(deserializer)?;
        let parse = |s: &str| {
            s.parse::<T>()
                .map_err(|_| serde::de::Error::custom(format!("bad scalar {s:?}")))
        };
        Ok(HomologyClass::new(parse(&x)?, parse(&y)?))
    }
}

/// An element `[[p, q], [r, s]]` of `SL(2, Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 4]", into = "[i64; 4]")]
pub struct MappingClass {
    p: i64,
    q: i64,
    r: i64,
    s: i64,
}

impl TryFrom<[i64; 4]> for MappingClass {
    type Error = Error;

    fn try_from([p, q, r, s]: [i64; 4]) -> Result<Self> {
        MappingClass::new(p, q, r, s)
    }
}

impl From<MappingClass> for [i64; 4] {
    fn from(m: MappingClass) -> Self {
        m.entries()
    }
}

impl MappingClass {
    pub const IDENTITY: MappingClass = MappingClass { p: 1, q: 0, r: 0, s: 1 };
    /// `xi -> eta`, `eta -> -xi`.
    pub const PLUMBING: MappingClass = MappingClass {
        p: 0,
        q: -1,
        r: 1,
        s: 0,
    };

    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        let det = p * s - q * r;
        if det != 1 {
            return Err(Error::NotUnimodular { p, q, r, s, det });
        }
        Ok(MappingClass { p, q, r, s })
    }

    /// Row-major `[p, q, r, s]`.
    pub fn entries(&self) -> [i64; 4] {
        [self.p, self.q, self.r, self.s]
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `I(xi, tau(xi))`.
    pub fn r(&self) -> i64 {
        self.r
    }

    /// `I(xi, tau(eta))`.
    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn trace(&self) -> i64 {
        self.p + self.s
    }

    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        MappingClass {
            p: self.p * other.p + self.q * other.r,
            q: self.p * other.q + self.q * other.s,
            r: self.r * other.p + self.s * other.r,
            s: self.r * other.q + self.s * other.s,
        }
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass {
            p: self.s,
            q: -self.q,
            r: -self.r,
            s: self.p,
        }
    }

    pub fn pow(&self, n: u32) -> MappingClass {
        (0..n).fold(Self::IDENTITY, |acc, _| acc.compose(self))
    }

    pub fn apply_ints(&self, x: i64, y: i64) -> (i64, i64) {
        (self.p * x + self.q * y, self.r * x + self.s * y)
    }

    pub fn act<T: Scalar>(&self, v: &HomologyClass<T>) -> HomologyClass<T> {
        let [p, q, r, s] = self.entries().map(T::from_int);
        HomologyClass::new(p * v.x.clone() + q * v.y.clone(), r * v.x.clone() + s * v.y.clone())
    }

    pub fn act_on_slope(&self, c: Slope) -> Slope {
        let (x, y) = self.apply_ints(c.x, c.y);
        debug_assert_eq!(x.gcd(&y), 1, "unimodular maps keep classes primitive");
        Slope::canonical(x, y)
    }

    /// Right-handed Dehn twist along `c`: `alpha -> alpha + I(c, alpha) c`.
    pub fn dehn_twist(c: Slope) -> MappingClass {
        let (a, b) = (c.x, c.y);
        // Images of xi = (1,0) and eta = (0,1): I(c, xi) = -b, I(c, eta) = a.
        MappingClass {
            p: 1 - a * b,
            q: a * a,
            r: -b * b,
            s: 1 + a * b,
        }
    }

    /// Finite order of the class, found by explicit powering.
    pub fn torsion_order(&self) -> Option<u32> {
        // |trace| >= 2 is parabolic or hyperbolic, apart from +-identity.
        if self.trace().abs() >= 2 && (self.q, self.r) != (0, 0) {
            return None;
        }
        let mut power = *self;
        for k in 1..=6 {
            if power == Self::IDENTITY {
                return Some(k);
            }
            power = power.compose(self);
        }
        None
    }

    pub fn fixes_xi_up_to_sign(&self) -> bool {
        self.r == 0
    }

    pub fn is_plumbing(&self) -> bool {
        *self == Self::PLUMBING
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.p, self.q, self.r, self.s)
    }
}

/// Row-major `p q r s`.
impl FromStr for MappingClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::parse(t, "not an integer")))
            .collect::<Result<Vec<_>>>()?;
        let [p, q, r, s4]: [i64; 4] = entries
            .try_into()
            .map_err(|_| Error::parse(s, "expected four integers `p q r s`"))?;
        MappingClass::new(p, q, r, s4)
    }
}
