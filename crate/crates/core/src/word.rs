//! Reduced words in a free group and a bounded search for commutator length.
//!
//! The search only ever certifies upper bounds: finding `k` commutators whose
//! product is `w` proves `cl(w) <= k`; finding none proves nothing.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on search nodes (commutator table entries plus lookups).
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

const LETTER_NAMES: [char; 4] = ['x', 'y', 'z', 'w'];

/// A freely reduced word; letter `i` is the `i`-th generator, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupWord {
    rank: usize,
    letters: Vec<i64>,
}

fn free_reduce(raw: impl IntoIterator<Item = i64>) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    for l in raw {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl GroupWord {
    /// Reduces `raw` in the free group of rank `max |letter|` (at least 1).
    pub fn reduce(raw: &[i64]) -> Self {
        let rank = raw.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(1).max(1);
        GroupWord {
            rank,
            letters: free_reduce(raw.iter().copied().filter(|&l| l != 0)),
        }
    }

    pub fn with_rank(rank: usize, raw: &[i64]) -> Result<Self> {
        for &l in raw {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::LetterOutOfRange { letter: l, rank });
            }
        }
        Ok(GroupWord {
            rank: rank.max(1),
            letters: free_reduce(raw.iter().copied()),
        })
    }

    pub fn identity(rank: usize) -> Self {
        GroupWord {
            rank: rank.max(1),
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: i64) -> Self {
        Self::with_rank(rank, &[i]).expect("generator in range")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &GroupWord) -> Self {
        GroupWord {
            rank: self.rank.max(other.rank),
            letters: free_reduce(self.letters.iter().chain(&other.letters).copied()),
        }
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// `u self u^-1`.
    pub fn conjugate_by(&self, u: &GroupWord) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    /// Image in the abelianization `Z^rank`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum();
        }
        sums
    }

    /// Splits `self = u c u^-1` with `c` cyclically reduced.
    pub fn cyclic_reduction(&self) -> (GroupWord, GroupWord) {
        let l = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < l.len() && l[k] == -l[l.len() - 1 - k] {
            k += 1;
        }
        let u = GroupWord {
            rank: self.rank,
            letters: l[..k].to_vec(),
        };
        let core = GroupWord {
            rank: self.rank,
            letters: l[k..l.len() - k].to_vec(),
        };
        (u, core)
    }
}

/// Product `[a_1, b_1] ... [a_k, b_k]`, reduced.
pub fn commutator_product(pairs: &[(GroupWord, GroupWord)]) -> GroupWord {
    let rank = pairs.iter().map(|(a, b)| a.rank.max(b.rank)).max().unwrap_or(1);
    pairs.iter().fold(GroupWord::identity(rank), |acc, (a, b)| {
        acc.mul(&GroupWord::commutator(a, b))
    })
}

/// Letters `x y z w` with uppercase inverses, e.g. `x y X Y`; words written as
/// signed integers are accepted too.
impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let named = self.rank <= LETTER_NAMES.len();
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if named {
                    let c = LETTER_NAMES[l.unsigned_abs() as usize - 1];
                    if l > 0 {
                        c.to_string()
                    } else {
                        c.to_ascii_uppercase().to_string()
                    }
                } else {
                    l.to_string()
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(GroupWord::identity(1));
        }
        let numeric = trimmed
            .chars()
            .all(|c| c.is_ascii_digit() || c == '-' || c == '+' || c.is_whitespace());
        let letters = if numeric {
            trimmed
                .split_whitespace()
                .map(|t| match t.parse::<i64>() {
                    Ok(0) | Err(_) => Err(Error::parse(t, "expected a nonzero integer")),
                    Ok(l) => Ok(l),
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            trimmed
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    let idx = LETTER_NAMES
                        .iter()
                        .position(|&n| n == c.to_ascii_lowercase())
                        .ok_or_else(|| Error::parse(c.to_string(), "expected one of x y z w (uppercase = inverse)"))?;
                    let g = idx as i64 + 1;
                    Ok(if c.is_ascii_uppercase() { -g } else { g })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(GroupWord::reduce(&letters))
    }
}

/// `k` commutator pairs whose product is the target word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClWitness {
    pub pairs: Vec<(GroupWord, GroupWord)>,
}

impl ClWitness {
    pub fn length(&self) -> usize {
        self.pairs.len()
    }

    pub fn replay(&self, rank: usize) -> GroupWord {
        if self.pairs.is_empty() {
            GroupWord::identity(rank)
        } else {
            commutator_product(&self.pairs)
        }
    }
}

/// Reduced nonempty words of length `<= max_len`, in shortlex order.
fn words_up_to(rank: usize, max_len: usize) -> Vec<GroupWord> {
    let alphabet: Vec<i64> = (1..=rank as i64).flat_map(|g| [g, -g]).collect();
    let mut out = Vec::new();
    let mut layer = vec![Vec::<i64>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &a in &alphabet {
                if w.last() == Some(&-a) {
                    continue;
                }
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|letters| GroupWord {
            rank,
            letters: letters.clone(),
        }));
        layer = next;
    }
    out
}

fn word_count(rank: usize, max_len: usize) -> u128 {
    let r = 2 * rank as u128;
    (1..=max_len as u32).map(|l| r * (r - 1).pow(l - 1)).sum()
}

/// Smallest `k <= k_max` for which the bounded search writes `w` as a product
/// of `k` commutators of words of length `<= len_max`.
pub fn cl_upper_bound(w: &GroupWord, k_max: usize, len_max: usize) -> Result<Option<ClWitness>> {
    cl_upper_bound_with_limit(w, k_max, len_max, DEFAULT_NODE_LIMIT)
}

/// [`cl_upper_bound`] with an explicit node budget.
///
/// The search runs on the cyclic reduction `c` of `w = u c u^-1` and conjugates
/// the witness back by `u`, so returned pairs may exceed `len_max` by `2|u|`.
pub fn cl_upper_bound_with_limit(
    w: &GroupWord,
    k_max: usize,
    len_max: usize,
    node_limit: u64,
) -> Result<Option<ClWitness>> {
    let sums = w.exponent_sums();
    if sums.iter().any(|&s| s != 0) {
        return Err(Error::NotInCommutatorSubgroup(sums));
    }
    if w.is_identity() {
        return Ok(Some(ClWitness { pairs: Vec::new() }));
    }
    if k_max == 0 || len_max == 0 {
        return Ok(None);
    }
    let (conjugator, core) = w.cyclic_reduction();
    let m = word_count(w.rank, len_max);
    let table_nodes = m * m;
    if table_nodes > node_limit as u128 {
        return Err(Error::SearchBudget {
            needed: table_nodes,
            limit: node_limit,
        });
    }

    // Distinct commutator values with the first (a, b) producing each, in discovery order.
    let words = words_up_to(w.rank, len_max);
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut table: Vec<(GroupWord, GroupWord, GroupWord)> = Vec::new();
    for a in &words {
        for b in &words {
            let c = GroupWord::commutator(a, b);
            if !index.contains_key(&c.letters) {
                index.insert(c.letters.clone(), table.len());
                table.push((c, a.clone(), b.clone()));
            }
        }
    }

    for k in 1..=k_max {
        let lookups = (table.len() as u128).saturating_pow(k as u32 - 1);
        if table_nodes + lookups > node_limit as u128 {
            return Err(Error::SearchBudget {
                needed: table_nodes + lookups,
                limit: node_limit,
            });
        }
        let mut chosen = Vec::with_capacity(k);
        if let Some(found) = search_level(&core, k, &table, &index, &mut chosen) {
            let pairs = found
                .into_iter()
                .map(|i| {
                    let (_, a, b) = &table[i];
                    (a.conjugate_by(&conjugator), b.conjugate_by(&conjugator))
                })
                .collect();
            return Ok(Some(ClWitness { pairs }));
        }
    }
    Ok(None)
}

/// Depth-first over the first `k - 1` factors; the last factor is a table lookup
/// of the residual `(c_1 ... c_{k-1})^-1 target`.
fn search_level(
    residual: &GroupWord,
    k: usize,
    table: &[(GroupWord, GroupWord, GroupWord)],
    index: &HashMap<Vec<i64>, usize>,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if k == 1 {
        let &last = index.get(&residual.letters)?;
        let mut out = chosen.clone();
        out.push(last);
        return Some(out);
    }
    for (i, (c, _, _)) in table.iter().enumerate() {
        let next = c.inverse().mul(residual);
        chosen.push(i);
        if let Some(found) = search_level(&next, k - 1, table, index, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}
