//! Braid words in the Artin generators of `B_n`.
//!
//! A [`BraidWord`] is kept freely reduced: adjacent `σ_i σ_i⁻¹` pairs never
//! survive construction. No other rewriting happens here; deciding equality
//! of braids is the job of [`crate::dehornoy`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("malformed token {token:?} at position {position}")]
    Syntax { token: String, position: usize },
    #[error("generator index {index} is out of range for {strands} strands (valid: 1..={max})", max = .strands.saturating_sub(1))]
    IndexOutOfRange { index: u32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("operation needs at least {required} strands, got {strands}")]
    DegenerateStrands { strands: usize, required: usize },
}

/// A generator `σ_i^{±1}` encoded as a nonzero signed index: `i` for `σ_i`
/// and `-i` for `σ_i⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    /// Panics if `index == 0`.
    pub fn new(index: u32, positive: bool) -> Self {
        assert!(index > 0, "generator indices start at 1");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: u32) -> Self {
        Letter::new(index, true)
    }

    pub fn neg(index: u32) -> Self {
        Letter::new(index, false)
    }

    pub fn from_signed(value: i32) -> Option<Self> {
        (value != 0).then_some(Letter(value))
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "-s{}", self.index())
        }
    }
}

/// Cancels adjacent inverse pairs in place.
pub(crate) fn free_reduce(letters: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

/// A freely reduced word in `σ_1^{±1}, …, σ_{n-1}^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// Checks every index against `strands` and freely reduces.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::DegenerateStrands { strands, required: 1 });
        }
        if let Some(bad) = letters.iter().find(|l| l.index() as usize >= strands) {
            return Err(BraidError::IndexOutOfRange { index: bad.index(), strands });
        }
        let mut letters = letters;
        free_reduce(&mut letters);
        Ok(BraidWord { strands, letters })
    }

    /// Convenience constructor from the signed-integer notation.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self, BraidError> {
        let letters = letters
            .iter()
            .enumerate()
            .map(|(position, &v)| {
                Letter::from_signed(v).ok_or(BraidError::Syntax { token: v.to_string(), position })
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    /// Parses whitespace-separated tokens `s<i>`, `-s<i>`, or signed nonzero
    /// integers (`k` is `σ_k`, `-k` is `σ_k⁻¹`). The two forms may be mixed.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .enumerate()
            .map(|(position, token)| parse_token(token).ok_or_else(|| BraidError::Syntax { token: token.to_string(), position }))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub(crate) fn from_reduced_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        free_reduce(&mut letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Multiplies a sequence of words on the same number of strands.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord, BraidError>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        words.into_iter().try_fold(BraidWord::identity(strands), |acc, w| acc.compose(w))
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `k`-fold product; negative `k` uses the inverse word.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        free_reduce(&mut letters);
        BraidWord { strands: self.strands, letters }
    }

    /// The induced permutation of the strand endpoints: the composite
    /// `t_{i_1} ∘ t_{i_2} ∘ ⋯` of the transpositions `(i i+1)` read from the
    /// letters left to right.
    pub fn permutation(&self) -> Permutation {
        self.letters.iter().fold(Permutation::identity(self.strands), |acc, l| {
            let i = l.index() as usize;
            acc.compose(&Permutation::transposition(self.strands, i, i + 1))
        })
    }

    /// Number of components of the closed braid.
    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// Smallest generator index occurring in the word.
    pub fn min_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index()).min()
    }

    /// Conjugate `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &BraidWord) -> Result<BraidWord, BraidError> {
        g.compose(self)?.compose(&g.invert())
    }
}

fn parse_token(token: &str) -> Option<Letter> {
    let (positive, rest) = match token.strip_prefix('-') {
        Some(rest) => (false, rest),
        None => (true, token.strip_prefix('+').unwrap_or(token)),
    };
    let digits = rest.strip_prefix('s').unwrap_or(rest);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: u32 = digits.parse().ok()?;
    (index > 0).then(|| Letter::new(index, positive))
}

/// `s1 -s2 …`; the identity prints as the empty string.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `"<strands>:<word>"`, e.g. `"3: s1 -s2"`.
impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, word) = s.split_once(':').ok_or_else(|| BraidError::Syntax { token: s.to_string(), position: 0 })?;
        let strands = n
            .trim()
            .parse()
            .map_err(|_| BraidError::Syntax { token: n.trim().to_string(), position: 0 })?;
        BraidWord::parse(word, strands)
    }
}

/// `(σ_1 σ_2 ⋯ σ_{n-1})^n`, the full twist `Δ²` (the boundary Dehn twist
/// of the punctured disk).
pub fn full_twist(strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::DegenerateStrands { strands, required: 2 });
    }
    Ok(BraidWord::from_reduced_unchecked(strands, full_twist_letters(strands, 1)))
}

/// `Δ^{2k}` built from the fixed representative of [`full_twist`].
pub fn full_twist_power(strands: usize, k: i64) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::DegenerateStrands { strands, required: 2 });
    }
    Ok(BraidWord::from_reduced_unchecked(strands, full_twist_letters(strands, k)))
}

fn full_twist_letters(strands: usize, k: i64) -> Vec<Letter> {
    let n = strands as u32;
    let reps = strands * k.unsigned_abs() as usize;
    let mut out = Vec::with_capacity(reps * (strands - 1));
    if k >= 0 {
        for _ in 0..reps {
            out.extend((1..n).map(Letter::pos));
        }
    } else {
        for _ in 0..reps {
            out.extend((1..n).rev().map(Letter::neg));
        }
    }
    out
}

/// `σ_1 σ_2 ⋯ σ_{n-1}`; its `n`-th power is the full twist.
pub fn rotation(strands: usize) -> BraidWord {
    let letters = (1..strands as u32).map(Letter::pos).collect();
    BraidWord::from_reduced_unchecked(strands, letters)
}
