//! Handle reduction and the Dehornoy order.
//!
//! A `σ_i`-handle is a subword `σ_i^e u σ_i^{-e}` whose interior `u` only uses
//! generators of index `> i`. It is *permitted* when `u` contains no
//! `σ_{i+1}`-handle, i.e. all `σ_{i+1}` letters in `u` share one sign `d`;
//! reducing it deletes the two ends and replaces every `σ_{i+1}^d` in `u` by
//! `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. Each reduction is an instance of the braid
//! relations, so the braid element never changes.
//!
//! [`HandleReducer`] repeatedly reduces the leftmost handle of minimal index
//! (descending into nested handles until a permitted one is found) until the
//! minimal generator occurs with a single sign. The result decides
//! σ-positivity, the word problem and the left-invariant Dehornoy order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::braid::{free_reduce, BraidError, BraidWord, Letter};

/// Default step budget for one reduction.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DehornoyError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("handle reduction exceeded its budget of {budget} steps")]
    BudgetExceeded { budget: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SigmaClass {
    SigmaPositive,
    SigmaNegative,
    Trivial,
}

impl SigmaClass {
    pub fn flip(self) -> Self {
        match self {
            SigmaClass::SigmaPositive => SigmaClass::SigmaNegative,
            SigmaClass::SigmaNegative => SigmaClass::SigmaPositive,
            SigmaClass::Trivial => SigmaClass::Trivial,
        }
    }
}

/// Handle reduction with an explicit step budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HandleReducer {
    budget: u64,
}

impl Default for HandleReducer {
    fn default() -> Self {
        HandleReducer { budget: DEFAULT_BUDGET }
    }
}

impl HandleReducer {
    pub fn new(budget: u64) -> Self {
        HandleReducer { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Returns a word equal to `w` in `B_n` with no handle on its minimal
    /// generator index.
    pub fn reduce(&self, w: &BraidWord) -> Result<BraidWord, DehornoyError> {
        let mut letters = w.letters().to_vec();
        let mut steps = 0u64;
        loop {
            free_reduce(&mut letters);
            let Some((start, end, index)) = next_permitted_handle(&letters) else {
                break;
            };
            steps += 1;
            if steps > self.budget {
                return Err(DehornoyError::BudgetExceeded { budget: self.budget });
            }
            reduce_handle(&mut letters, start, end, index);
        }
        Ok(BraidWord::from_reduced_unchecked(w.strands(), letters))
    }

    pub fn sigma_class(&self, w: &BraidWord) -> Result<SigmaClass, DehornoyError> {
        let reduced = self.reduce(w)?;
        let Some(min) = reduced.min_index() else {
            return Ok(SigmaClass::Trivial);
        };
        let first = reduced.letters().iter().find(|l| l.index() == min).expect("min index occurs");
        Ok(if first.is_positive() { SigmaClass::SigmaPositive } else { SigmaClass::SigmaNegative })
    }

    /// Dehornoy order: `a < b` iff `a⁻¹ b` is σ-positive.
    pub fn compare(&self, a: &BraidWord, b: &BraidWord) -> Result<Ordering, DehornoyError> {
        let quotient = a.invert().compose(b)?;
        Ok(match self.sigma_class(&quotient)? {
            SigmaClass::SigmaPositive => Ordering::Less,
            SigmaClass::Trivial => Ordering::Equal,
            SigmaClass::SigmaNegative => Ordering::Greater,
        })
    }

    pub fn is_trivial(&self, w: &BraidWord) -> Result<bool, DehornoyError> {
        Ok(self.sigma_class(w)? == SigmaClass::Trivial)
    }

    /// Equality of braid elements.
    pub fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool, DehornoyError> {
        Ok(self.compare(a, b)? == Ordering::Equal)
    }
}

pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord, DehornoyError> {
    HandleReducer::default().reduce(w)
}

pub fn sigma_class(w: &BraidWord) -> Result<SigmaClass, DehornoyError> {
    HandleReducer::default().sigma_class(w)
}

pub fn compare(a: &BraidWord, b: &BraidWord) -> Result<Ordering, DehornoyError> {
    HandleReducer::default().compare(a, b)
}

pub fn is_trivial(w: &BraidWord) -> Result<bool, DehornoyError> {
    HandleReducer::default().is_trivial(w)
}

/// First pair of consecutive occurrences of `index` inside `range` with
/// opposite signs.
fn first_sign_change(letters: &[Letter], range: std::ops::Range<usize>, index: u32) -> Option<(usize, usize)> {
    let mut last: Option<(usize, bool)> = None;
    for pos in range {
        let l = letters[pos];
        if l.index() != index {
            continue;
        }
        if let Some((prev, positive)) = last {
            if positive != l.is_positive() {
                return Some((prev, pos));
            }
        }
        last = Some((pos, l.is_positive()));
    }
    None
}

/// Locates the leftmost handle on the minimal index and descends into its
/// first nested handle until the handle found is permitted.
fn next_permitted_handle(letters: &[Letter]) -> Option<(usize, usize, u32)> {
    let min = letters.iter().map(|l| l.index()).min()?;
    let (mut start, mut end) = first_sign_change(letters, 0..letters.len(), min)?;
    let mut index = min;
    while let Some((s, e)) = first_sign_change(letters, start + 1..end, index + 1) {
        start = s;
        end = e;
        index += 1;
    }
    Some((start, end, index))
}

fn reduce_handle(letters: &mut Vec<Letter>, start: usize, end: usize, index: u32) {
    let e = letters[start].is_positive();
    let mut replacement = Vec::with_capacity(3 * (end - start));
    for &l in &letters[start + 1..end] {
        if l.index() == index + 1 {
            replacement.push(Letter::new(index + 1, !e));
            replacement.push(Letter::new(index, l.is_positive()));
            replacement.push(Letter::new(index + 1, e));
        } else {
            replacement.push(l);
        }
    }
    letters.splice(start..=end, replacement);
}
