//! Branched covers of a page encoded by permutation monodromy.
//!
//! The page `S = S_{g,b}` with `n` marked points has free fundamental group
//! (after removing the points) generated by loops `c_1, …, c_n` around the
//! points together with `2g + b − 1` further generators (handle generators
//! first, then loops around all but one boundary component). A connected
//! `δ`-sheeted branched cover is a transitive assignment of permutations of
//! `{1, …, δ}` to these generators.
//!
//! Generator words use 1-based signed indices: `k ≤ n` is `c_k`, `k > n` is
//! extra generator `k − n`, and a negative index is the inverse loop. Words are
//! read left to right, so the first loop is followed first.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("covering degree must be at least 2, got {0}")]
    BadDegree(usize),
    #[error("need at least one branch point")]
    NoBranchPoints,
    #[error("the base surface needs at least one boundary component")]
    NoBoundary,
    #[error("permutation {which} acts on {found} points, expected {degree}")]
    PermSize { which: String, found: usize, degree: usize },
    #[error("expected {expected} handle/boundary generator permutations, got {found}")]
    ExtraGeneratorCount { expected: usize, found: usize },
    #[error("boundary word {boundary} uses generator {index}, valid range is ±1..=±{max}")]
    BadGenerator { boundary: usize, index: i32, max: usize },
    #[error("monodromy is not transitive: the cover is disconnected")]
    NotConnected,
    #[error("boundary words give {boundaries} boundary components with χ = {euler_char}, which no connected surface has")]
    InconsistentBoundary { euler_char: i64, boundaries: usize },
    #[error("bad permutation: {0}")]
    Perm(#[from] PermError),
    #[error("cover spec: {0}")]
    Spec(String),
}

/// `S_{g,b}`; `boundary_words[j]` expresses the `j`-th boundary loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSurface {
    pub genus: u32,
    pub boundary_words: Vec<Vec<i32>>,
}

impl BaseSurface {
    /// The disk with `n` marked points; its boundary is `c_1 c_2 ⋯ c_n`.
    pub fn disk(n: usize) -> Self {
        BaseSurface { genus: 0, boundary_words: vec![(1..=n as i32).collect()] }
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_words.len()
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count() as i64
    }

    /// Number of generators beyond the `c_i`.
    pub fn extra_generators(&self) -> usize {
        2 * self.genus as usize + self.boundary_count().saturating_sub(1)
    }

    pub fn is_disk(&self) -> bool {
        self.genus == 0 && self.boundary_count() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyRep {
    degree: usize,
    branch_perms: Vec<Permutation>,
    extra_perms: Vec<Permutation>,
    base: BaseSurface,
}

impl MonodromyRep {
    pub fn new(
        degree: usize,
        branch_perms: Vec<Permutation>,
        extra_perms: Vec<Permutation>,
        base: BaseSurface,
    ) -> Result<Self, CoverError> {
        if degree < 2 {
            return Err(CoverError::BadDegree(degree));
        }
        if branch_perms.is_empty() {
            return Err(CoverError::NoBranchPoints);
        }
        if base.boundary_count() == 0 {
            return Err(CoverError::NoBoundary);
        }
        for (k, p) in branch_perms.iter().enumerate() {
            if p.size() != degree {
                return Err(CoverError::PermSize { which: format!("c{}", k + 1), found: p.size(), degree });
            }
        }
        if extra_perms.len() != base.extra_generators() {
            return Err(CoverError::ExtraGeneratorCount { expected: base.extra_generators(), found: extra_perms.len() });
        }
        for (k, p) in extra_perms.iter().enumerate() {
            if p.size() != degree {
                return Err(CoverError::PermSize { which: format!("extra generator {}", k + 1), found: p.size(), degree });
            }
        }
        let max = branch_perms.len() + extra_perms.len();
        for (boundary, word) in base.boundary_words.iter().enumerate() {
            if let Some(&index) = word.iter().find(|&&g| g == 0 || g.unsigned_abs() as usize > max) {
                return Err(CoverError::BadGenerator { boundary, index, max });
            }
        }
        let rep = MonodromyRep { degree, branch_perms, extra_perms, base };
        if !rep.is_transitive() {
            return Err(CoverError::NotConnected);
        }
        Ok(rep)
    }

    /// Convenience constructor for covers of the disk.
    pub fn over_disk(degree: usize, branch_perms: Vec<Permutation>) -> Result<Self, CoverError> {
        let base = BaseSurface::disk(branch_perms.len());
        MonodromyRep::new(degree, branch_perms, Vec::new(), base)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn branch_points(&self) -> usize {
        self.branch_perms.len()
    }

    pub fn branch_perms(&self) -> &[Permutation] {
        &self.branch_perms
    }

    pub fn extra_perms(&self) -> &[Permutation] {
        &self.extra_perms
    }

    pub fn base(&self) -> &BaseSurface {
        &self.base
    }

    fn generator(&self, index: i32) -> Permutation {
        let k = index.unsigned_abs() as usize - 1;
        let n = self.branch_perms.len();
        let p = if k < n { &self.branch_perms[k] } else { &self.extra_perms[k - n] };
        if index < 0 {
            p.inverse()
        } else {
            p.clone()
        }
    }

    /// Monodromy of a loop given as a generator word.
    pub fn word_monodromy(&self, word: &[i32]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(self.degree), |acc, &g| self.generator(g).compose(&acc))
    }

    fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for p in self.branch_perms.iter().chain(&self.extra_perms) {
                for y in [p.apply(x), p.inverse().apply(x)] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Every local monodromy around a branch point is fixed-point-free, so
    /// each preimage point is a genuine branch point of the cover.
    pub fn is_fully_ramified(&self) -> bool {
        self.branch_perms.iter().all(|p| p.fixed_points() == 0)
    }

    /// Topology of the covering surface via Riemann–Hurwitz and boundary
    /// monodromy.
    pub fn geometry(&self) -> Result<CoverGeometry, CoverError> {
        let degree = self.degree as i64;
        let n = self.branch_points() as i64;
        let cycle_total: i64 = self.branch_perms.iter().map(|p| p.cycle_count() as i64).sum();
        let euler_char = degree * (self.base.euler_char() - n) + cycle_total;

        let mut boundaries = Vec::new();
        for (base_boundary, word) in self.base.boundary_words.iter().enumerate() {
            for (component, length) in self.word_monodromy(word).cycle_lengths().into_iter().enumerate() {
                boundaries.push(BoundaryComponent { base_boundary, component, degree: length as u64 });
            }
        }
        let twice_genus = 2 - euler_char - boundaries.len() as i64;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(CoverError::InconsistentBoundary { euler_char, boundaries: boundaries.len() });
        }
        let branch_preimages = self
            .branch_perms
            .iter()
            .enumerate()
            .map(|(branch_point, p)| {
                let mut ramification_indices: Vec<u64> = p.cycle_lengths().into_iter().map(|l| l as u64).collect();
                ramification_indices.sort_unstable_by(|a, b| b.cmp(a));
                BranchPreimage { branch_point, preimage_count: ramification_indices.len(), ramification_indices }
            })
            .collect();
        Ok(CoverGeometry {
            degree: self.degree as u64,
            euler_char,
            genus: (twice_genus / 2) as u64,
            boundaries,
            branch_preimages,
        })
    }
}

/// A boundary component `C̃` over base boundary `base_boundary`, mapping
/// onto it with degree `d(π, C̃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryComponent {
    pub base_boundary: usize,
    pub component: usize,
    pub degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchPreimage {
    pub branch_point: usize,
    pub preimage_count: usize,
    pub ramification_indices: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverGeometry {
    pub degree: u64,
    pub euler_char: i64,
    pub genus: u64,
    pub boundaries: Vec<BoundaryComponent>,
    pub branch_preimages: Vec<BranchPreimage>,
}

impl CoverGeometry {
    pub fn boundary_count(&self) -> usize {
        self.boundaries.len()
    }

    pub fn find_boundary(&self, base_boundary: usize, component: usize) -> Option<&BoundaryComponent> {
        self.boundaries.iter().find(|b| b.base_boundary == base_boundary && b.component == component)
    }

    pub fn components_over(&self, base_boundary: usize) -> impl Iterator<Item = &BoundaryComponent> {
        self.boundaries.iter().filter(move |b| b.base_boundary == base_boundary)
    }

    pub fn base_boundary_count(&self) -> usize {
        self.boundaries.iter().map(|b| b.base_boundary + 1).max().unwrap_or(0)
    }

    /// `true` for an annulus or a disk, where the division formula fails.
    pub fn is_nonhyperbolic(&self) -> bool {
        self.euler_char >= 0
    }
}

/// The standard `d`-fold cyclic cover of the disk branched at `n` points:
/// every loop `c_i` maps to `1 ∈ ℤ/d`, i.e. to the cycle `(1 2 … d)`.
pub fn standard_cyclic(n: usize, d: usize) -> Result<MonodromyRep, CoverError> {
    if d < 2 {
        return Err(CoverError::BadDegree(d));
    }
    if n == 0 {
        return Err(CoverError::NoBranchPoints);
    }
    MonodromyRep::over_disk(d, vec![Permutation::long_cycle(d); n])
}

/// Boundary components of the standard cyclic cover: `gcd(n, d)` circles,
/// each of degree `d / gcd(n, d)`.
pub fn boundary_connectivity(n: u64, d: u64) -> (u64, u64) {
    let g = n.gcd(&d);
    (g, d / g)
}

/// JSON cover specification, e.g.
/// `{"n": 3, "degree": 2, "branch_perms": "standard_cyclic"}` or
/// `{"n": 2, "degree": 3, "branch_perms": [[[1,2]], [[2,3]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    pub n: usize,
    pub degree: usize,
    pub branch_perms: BranchPermsSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BranchPermsSpec {
    Named(String),
    /// One permutation per branch point, each a list of 1-based cycles.
    Cycles(Vec<Vec<Vec<usize>>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    #[serde(default)]
    pub genus: u32,
    pub boundaries: Vec<Vec<i32>>,
    /// Permutations for the handle and extra boundary generators; defaults to
    /// identities, matching a cyclic cover that is trivial on the homology of
    /// the page.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handle_perms: Option<Vec<Vec<Vec<usize>>>>,
}

impl CoverSpec {
    pub fn from_json(text: &str) -> Result<Self, CoverError> {
        serde_json::from_str(text).map_err(|e| CoverError::Spec(e.to_string()))
    }

    pub fn standard(n: usize, degree: usize) -> Self {
        CoverSpec { n, degree, branch_perms: BranchPermsSpec::Named("standard_cyclic".into()), base: None }
    }

    pub fn build(&self) -> Result<MonodromyRep, CoverError> {
        if self.degree < 2 {
            return Err(CoverError::BadDegree(self.degree));
        }
        let branch_perms = match &self.branch_perms {
            BranchPermsSpec::Named(name) if name == "standard_cyclic" => vec![Permutation::long_cycle(self.degree); self.n],
            BranchPermsSpec::Named(name) => return Err(CoverError::Spec(format!("unknown cover kind {name:?}"))),
            BranchPermsSpec::Cycles(perms) => {
                if perms.len() != self.n {
                    return Err(CoverError::Spec(format!("{} branch permutations for n = {}", perms.len(), self.n)));
                }
                perms
                    .iter()
                    .map(|cycles| Permutation::from_cycles(self.degree, cycles))
                    .collect::<Result<_, _>>()?
            }
        };
        let base = match &self.base {
            None => BaseSurface::disk(self.n),
            Some(spec) => BaseSurface { genus: spec.genus, boundary_words: spec.boundaries.clone() },
        };
        let extra_perms = match self.base.as_ref().and_then(|b| b.handle_perms.as_ref()) {
            Some(perms) => perms
                .iter()
                .map(|cycles| Permutation::from_cycles(self.degree, cycles))
                .collect::<Result<_, _>>()?,
            None => vec![Permutation::identity(self.degree); base.extra_generators()],
        };
        MonodromyRep::new(self.degree, branch_perms, extra_perms, base)
    }
}
