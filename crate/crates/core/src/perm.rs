//! Permutations of `{1, …, n}`, stored 0-based.
//!
//! Composition is functional: `a.compose(&b)` maps `x ↦ a(b(x))`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, thiserror::Error)]
pub enum PermError {
    #[error("point {point} is outside 1..={size}")]
    OutOfRange { point: usize, size: usize },
    #[error("point {0} appears more than once")]
    Repeated(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (0..size).collect() }
    }

    /// Builds a permutation from 0-based images. Returns `None` unless `images`
    /// is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images })
    }

    /// Builds a permutation of `{1, …, size}` from disjoint 1-based cycles.
    pub fn from_cycles(size: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..size).collect();
        let mut used = vec![false; size];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > size {
                    return Err(PermError::OutOfRange { point: p, size });
                }
                if used[p - 1] {
                    return Err(PermError::Repeated(p));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging the 1-based points `a` and `b`.
    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..size).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The cycle `(1 2 … size)`.
    pub fn long_cycle(size: usize) -> Self {
        Permutation { images: (0..size).map(|i| (i + 1) % size).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(x, &y)| x == y).count()
    }

    /// Disjoint cycles (fixed points included) as 1-based points, each cycle
    /// starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Cycle notation, omitting fixed points; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}
