//! Integer Laurent polynomials in one variable `t`.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`LaurentPolynomial`].
pub trait Coefficient: Clone + Integer + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}

/// `sum c_k t^k` stored densely from the lowest nonzero exponent.
///
/// Invariant: `coeffs` has no leading or trailing zeros; the zero polynomial
/// has empty `coeffs` and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Coefficient> LaurentPolynomial<C> {
    /// Builds `sum coeffs[i] t^(low + i)`.
    pub fn new(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPolynomial { low, coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers, lowest exponent `low`.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::new(
            low,
            coeffs
                .iter()
                .map(|&c| C::from_i64(c).expect("coefficient fits"))
                .collect(),
        )
    }

    pub fn monomial(coeff: C, exp: i64) -> Self {
        Self::new(exp, vec![coeff])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    fn trim(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i64;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Difference between the highest and lowest exponents; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        self.coeffs.len().saturating_sub(1) as i64
    }

    pub fn coefficient(&self, exp: i64) -> C {
        let i = exp - self.low;
        if i < 0 {
            return C::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(C::zero)
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i64, c))
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn eval(&self, t: &C) -> Option<C> {
        if self.low < 0 && t.is_zero() {
            return None;
        }
        // Horner on the polynomial part, then the monomial shift.
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        if self.low >= 0 {
            for _ in 0..self.low {
                acc = acc * t.clone();
            }
            Some(acc)
        } else {
            let mut den = C::one();
            for _ in 0..-self.low {
                den = den * t.clone();
            }
            let (q, r) = acc.div_rem(&den);
            r.is_zero().then_some(q)
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPolynomial {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Representative of `self` up to units `±t^k`: lowest exponent 0 and
    /// positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let mut p = self.shift(-self.low);
        if p.leading_coefficient().is_some_and(|c| c.is_negative()) {
            p = -p;
        }
        p
    }

    /// Equality up to multiplication by a unit `±t^k`.
    pub fn associate_of(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Coefficients read from both ends agree.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return None;
        }
        let dlead = divisor.coeffs[dlen - 1].clone();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![C::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[qi + j] = rem[qi + j].clone() - q.clone() * d.clone();
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.low - divisor.low, quot))
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPolynomial<D> {
        LaurentPolynomial::new(self.low, self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coefficient> Zero for LaurentPolynomial<C> {
    fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPolynomial<C> {
    fn one() -> Self {
        Self::monomial(C::one(), 0)
    }
}

impl<C: Coefficient> Add for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn add(self, rhs: Self) -> Self::Output {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let coeffs = (low..=high).map(|e| self.coefficient(e) + rhs.coefficient(e)).collect();
        LaurentPolynomial::new(low, coeffs)
    }
}

impl<C: Coefficient> Neg for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn neg(self) -> Self::Output {
        LaurentPolynomial {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coefficient> Sub for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn sub(self, rhs: Self) -> Self::Output {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Mul for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn mul(self, rhs: Self) -> Self::Output {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPolynomial::new(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for LaurentPolynomial<C> {
            type Output = LaurentPolynomial<C>;

            fn $m(self, rhs: Self) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn neg(self) -> Self::Output {
        -&self
    }
}

/// Ascending powers: `1-3t+t^2`, `t^-1+2`.
impl<C: Coefficient> Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (exp, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if negative {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let unit = magnitude.is_one();
            if exp == 0 || !unit {
                write!(f, "{magnitude}")?;
            }
            match exp {
                0 => {}
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> Debug for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl<C: Coefficient + FromStr> FromStr for LaurentPolynomial<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::parse(s, "empty polynomial"));
        }
        let bad = |why: &str| Error::parse(s, why);
        let mut terms: Vec<(i64, C)> = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' if !terms.is_empty() => (false, &rest[1..]),
                _ if terms.is_empty() => (false, rest),
                _ => return Err(bad("expected '+' or '-' between terms")),
            };
            // A term ends at the next sign not directly after '^'.
            let bytes = body.as_bytes();
            let mut end = bytes.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            rest = &body[end..];
            let (coeff_text, exp) = match term.find('t') {
                None => (term, 0),
                Some(pos) => {
                    let exp_text = &term[pos + 1..];
                    let exp = if exp_text.is_empty() {
                        1
                    } else {
                        exp_text
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(|| bad("malformed exponent"))?
                    };
                    (&term[..pos], exp)
                }
            };
            let magnitude = if coeff_text.is_empty() {
                C::one()
            } else {
                coeff_text.parse::<C>().map_err(|_| bad("malformed coefficient"))?
            };
            terms.push((exp, if negative { -magnitude } else { magnitude }));
        }
        Ok(terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e)))
    }
}

impl<C: Coefficient> PartialOrd for LaurentPolynomial<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by lowest exponent, then coefficient vector; only used for canonical sorting.
impl<C: Coefficient> Ord for LaurentPolynomial<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}
