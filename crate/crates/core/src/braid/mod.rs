//! Braid words and the classical invariants of their closures.

pub mod burau;
pub mod laurent;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use laurent::{Coefficient, LaurentPolynomial};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `k` stands for `sigma_|k|` raised to `sign(k)`; letters compose left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i64>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid {
            strands: b.strands,
            letters: b.letters,
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::parse("0", "a braid needs at least one strand"));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::parse("0", "generator index must be nonzero"));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange {
                    index: l.abs(),
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed generator indices.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| Error::parse(tok, "not an integer")))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// Parses a braid file: first line `strands=N`, the remaining lines hold the word.
    pub fn parse_document(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("").trim();
        let strands = header
            .strip_prefix("strands=")
            .and_then(|n| n.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::parse(header, "expected header `strands=N`"))?;
        let body: Vec<&str> = lines.collect();
        Self::parse(&body.join(" "), strands)
    }

    /// Torus-knot braid `(sigma_1 ... sigma_{p-1})^q`.
    pub fn torus(p: usize, q: usize) -> Self {
        let letters = (0..q).flat_map(|_| 1..p as i64).collect();
        BraidWord {
            strands: p.max(1),
            letters,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn permutation(&self) -> Permutation {
        // occupant[p] = strand (by starting position) now at position p
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            occupant.swap(k - 1, k);
        }
        Permutation { images: occupant }
    }

    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn closure_is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    fn require_knot(&self) -> Result<()> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Algebraic intersection with a fiber disk. Every crossing of a braid with
    /// a fiber is positive, so this is the strand count.
    pub fn winding_number(&self) -> Result<i64> {
        self.require_knot()?;
        Ok(self.strands as i64)
    }

    /// Genus `(c - n + 1) / 2` of the surface Seifert's algorithm builds on the closure.
    pub fn seifert_genus_upper(&self) -> Result<i64> {
        self.require_knot()?;
        let twice = self.letters.len() as i64 - self.strands as i64 + 1;
        assert!(twice % 2 == 0, "knot closure forces c - n + 1 even");
        Ok(twice / 2)
    }

    /// Each generator index occurs with only one sign.
    pub fn is_homogeneous(&self) -> bool {
        let mut seen = vec![0i64; self.strands];
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            if seen[k] != 0 && seen[k] != l.signum() {
                return false;
            }
            seen[k] = l.signum();
        }
        true
    }

    /// Alexander polynomial over a chosen coefficient ring.
    ///
    /// `det(rho(b) - I) * (1 - t) / (1 - t^n)` with `rho` the reduced Burau
    /// representation, normalized to lowest exponent 0 and positive leading coefficient.
    pub fn alexander_polynomial_in<C: Coefficient>(&self) -> Result<LaurentPolynomial<C>> {
        self.require_knot()?;
        let det = burau::reduced_burau::<C>(self).sub_identity().determinant();
        // (1 - t^n) / (1 - t) = 1 + t + ... + t^{n-1}
        let geometric = LaurentPolynomial::new(0, vec![C::one(); self.strands]);
        let quotient = det
            .div_exact(&geometric)
            .ok_or_else(|| Error::Internal(format!("Burau determinant {det} not divisible by {geometric}")))?;
        Ok(quotient.normalized())
    }

    pub fn alexander_polynomial(&self) -> Result<LaurentPolynomial<BigInt>> {
        self.alexander_polynomial_in()
    }

    pub fn knot_genus(&self) -> Result<GenusEstimate> {
        let alexander = self.alexander_polynomial()?;
        let lower = alexander.span() / 2;
        let upper = self.seifert_genus_upper()?;
        debug_assert!(lower <= upper);
        let estimate = if self.is_homogeneous() {
            GenusEstimate::exact(upper, GenusMethod::HomogeneousBraid)
        } else if lower == upper {
            GenusEstimate::exact(upper, GenusMethod::BoundsCoincide)
        } else {
            GenusEstimate {
                lower,
                upper,
                exact: false,
                method: GenusMethod::SeifertAlgorithm,
            }
        };
        Ok(estimate)
    }

    pub fn is_nontrivial_knot(&self) -> Result<Nontriviality> {
        let alexander = self.alexander_polynomial()?;
        let genus = self.knot_genus()?;
        Ok(Nontriviality::from_invariants(alexander.is_one(), &genus))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

/// A permutation of `{1..n}` in one-line notation.
///
/// For a braid, `images[p - 1]` is the starting position of the strand that
/// ends at position `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// Cycle notation without fixed points, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GenusMethod {
    AlexanderSpan,
    SeifertAlgorithm,
    HomogeneousBraid,
    BoundsCoincide,
    UserSupplied,
}

/// Interval `[lower, upper]` containing a knot genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenusEstimate {
    pub lower: i64,
    pub upper: i64,
    pub exact: bool,
    pub method: GenusMethod,
}

impl GenusEstimate {
    pub fn exact(genus: i64, method: GenusMethod) -> Self {
        GenusEstimate {
            lower: genus,
            upper: genus,
            exact: true,
            method,
        }
    }

    /// The certified value, if any.
    pub fn value(&self) -> Option<i64> {
        self.exact.then_some(self.lower)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Nontriviality {
    Nontrivial,
    Unknown,
    Trivial,
}

impl Nontriviality {
    pub fn from_invariants(alexander_is_one: bool, genus: &GenusEstimate) -> Self {
        if !alexander_is_one || (genus.exact && genus.lower > 0) {
            Nontriviality::Nontrivial
        } else if genus.exact && genus.lower == 0 {
            Nontriviality::Trivial
        } else {
            Nontriviality::Unknown
        }
    }
}
