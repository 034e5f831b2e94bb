//! Fractional Dehn twist coefficients of closed braids in the disk open book.
//!
//! The FDTC of a braid `β ∈ B_n` is computed as the homogenized Dehornoy
//! floor. With `⌊β⌋` the largest `m` such that `Δ^{2m} ⪯ β`, the coefficient
//! satisfies `⌊β^m⌋ ≤ m·c(β) ≤ ⌊β^m⌋ + 1` for every `m ≥ 1`, so each power
//! contributes a certified interval and their intersection brackets `c(β)`.
//!
//! Exact values are only reported for braids with a periodic certificate
//! `β^N = Δ^{2M}`, giving `c(β) = M/N`. The full twist has FDTC `1`, so a
//! positive half twist `σ_1 ∈ B_2` has FDTC `1/2`.

use serde::{Deserialize, Serialize};

use crate::braid::{full_twist_power, BraidError, BraidWord};
use crate::dehornoy::{DehornoyError, HandleReducer};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FdtcError {
    #[error(transparent)]
    Dehornoy(#[from] DehornoyError),
    #[error("FDTC needs at least 2 strands, got {0}")]
    DegenerateStrands(usize),
    #[error("{name} must be at least 1")]
    InvalidParameter { name: &'static str },
    #[error("floor interval for power {power} is disjoint from the running bound [{lower}, {upper}]")]
    EmptyIntersection { power: u32, lower: Rational, upper: Rational },
    #[error("Dehornoy floor of a {letters}-letter word fell outside ±{bound}")]
    FloorOutOfRange { letters: usize, bound: i64 },
}

impl From<BraidError> for FdtcError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::DegenerateStrands { strands, .. } => FdtcError::DegenerateStrands(strands),
            other => FdtcError::Dehornoy(DehornoyError::Braid(other)),
        }
    }
}

/// `β^period = Δ^{2·twist}` as braid elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicCertificate {
    pub period: u64,
    pub twist: i64,
}

impl PeriodicCertificate {
    pub fn value(&self) -> Rational {
        Rational::new(self.twist, self.period as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FdtcValue {
    Exact { value: Rational, certificate: PeriodicCertificate },
    Interval { lower: Rational, upper: Rational },
}

impl FdtcValue {
    pub fn exact(certificate: PeriodicCertificate) -> Self {
        FdtcValue::Exact { value: certificate.value(), certificate }
    }

    pub fn lower(&self) -> Rational {
        match self {
            FdtcValue::Exact { value, .. } => *value,
            FdtcValue::Interval { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> Rational {
        match self {
            FdtcValue::Exact { value, .. } => *value,
            FdtcValue::Interval { upper, .. } => *upper,
        }
    }

    pub fn exact_value(&self) -> Option<Rational> {
        match self {
            FdtcValue::Exact { value, .. } => Some(*value),
            FdtcValue::Interval { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<PeriodicCertificate> {
        match self {
            FdtcValue::Exact { certificate, .. } => Some(*certificate),
            FdtcValue::Interval { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, FdtcValue::Exact { .. })
    }

    pub fn contains(&self, r: Rational) -> bool {
        self.lower() <= r && r <= self.upper()
    }

    pub fn width(&self) -> Rational {
        self.upper() - self.lower()
    }

    /// Certified lower bound on `|c|`.
    pub fn abs_lower(&self) -> Rational {
        let (lo, hi) = (self.lower(), self.upper());
        if lo.is_positive() {
            lo
        } else if hi.is_negative() {
            -hi
        } else {
            Rational::ZERO
        }
    }

    /// Certified upper bound on `|c|`.
    pub fn abs_upper(&self) -> Rational {
        self.lower().abs().max(self.upper().abs())
    }
}

impl std::fmt::Display for FdtcValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FdtcValue::Exact { value, certificate } => write!(
                f,
                "{value} (exact, N = {}, M = {})",
                certificate.period, certificate.twist
            ),
            FdtcValue::Interval { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RightVeeringStatus {
    RightVeering,
    NotRightVeering,
    Indeterminate,
}

/// FDTC computations sharing one handle-reduction budget.
#[derive(Clone, Copy, Debug, Default)]
pub struct FdtcEngine {
    reducer: HandleReducer,
}

impl FdtcEngine {
    pub fn new(reducer: HandleReducer) -> Self {
        FdtcEngine { reducer }
    }

    pub fn with_budget(budget: u64) -> Self {
        FdtcEngine { reducer: HandleReducer::new(budget) }
    }

    pub fn reducer(&self) -> &HandleReducer {
        &self.reducer
    }

    /// `Δ^{2m} ⪯ w`.
    fn twist_below(&self, w: &BraidWord, m: i64) -> Result<bool, FdtcError> {
        let quotient = full_twist_power(w.strands(), -m)?.compose(w).map_err(FdtcError::from)?;
        Ok(self.reducer.sigma_class(&quotient)? != crate::dehornoy::SigmaClass::SigmaNegative)
    }

    /// Largest `m` with `Δ^{2m} ⪯ w`, searched within `±(|w| + 1)`.
    pub fn dehornoy_floor(&self, w: &BraidWord) -> Result<i64, FdtcError> {
        if w.strands() < 2 {
            return Err(FdtcError::DegenerateStrands(w.strands()));
        }
        let bound = w.len() as i64 + 1;
        let out_of_range = || FdtcError::FloorOutOfRange { letters: w.len(), bound };
        // Gallop outward from 0 to bracket the floor, then bisect.
        let (mut good, mut bad) = if self.twist_below(w, 0)? {
            let mut good = 0;
            let mut step = 1;
            loop {
                let probe = (good + step).min(bound);
                if !self.twist_below(w, probe)? {
                    break (good, probe);
                }
                if probe == bound {
                    return Err(out_of_range());
                }
                good = probe;
                step *= 2;
            }
        } else {
            let mut bad = 0;
            let mut step = 1;
            loop {
                let probe = (bad - step).max(-bound);
                if self.twist_below(w, probe)? {
                    break (probe, bad);
                }
                if probe == -bound {
                    return Err(out_of_range());
                }
                bad = probe;
                step *= 2;
            }
        };
        while bad - good > 1 {
            let mid = good + (bad - good) / 2;
            if self.twist_below(w, mid)? {
                good = mid;
            } else {
                bad = mid;
            }
        }
        Ok(good)
    }

    /// Intersects `[f_m/m, (f_m+1)/m]` over `m = 1..=m_max`, where
    /// `f_m = ⌊w^m⌋`. Trivial braids short-circuit to exact `0`.
    pub fn fdtc_bounds(&self, w: &BraidWord, m_max: u32) -> Result<FdtcValue, FdtcError> {
        if m_max == 0 {
            return Err(FdtcError::InvalidParameter { name: "m_max" });
        }
        if w.is_empty() || self.reducer.is_trivial(w)? {
            return Ok(FdtcValue::exact(PeriodicCertificate { period: 1, twist: 0 }));
        }
        if w.strands() < 2 {
            return Err(FdtcError::DegenerateStrands(w.strands()));
        }
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for m in 1..=m_max {
            let floor = self.dehornoy_floor(&w.power(m as i64))?;
            let lo = Rational::new(floor, m as i64);
            let hi = Rational::new(floor + 1, m as i64);
            let new_lower = lower.map_or(lo, |l| l.max(lo));
            let new_upper = upper.map_or(hi, |u| u.min(hi));
            if new_lower > new_upper {
                return Err(FdtcError::EmptyIntersection {
                    power: m,
                    lower: lower.unwrap_or(lo),
                    upper: upper.unwrap_or(hi),
                });
            }
            lower = Some(new_lower);
            upper = Some(new_upper);
        }
        Ok(FdtcValue::Interval { lower: lower.expect("m_max >= 1"), upper: upper.expect("m_max >= 1") })
    }

    /// Looks for `w^N = Δ^{2M}` with `N ≤ max_period`. The exponent sum pins
    /// `M = e(w)·N / (n(n-1))`, so only integral candidates are tested.
    pub fn certify_periodic(&self, w: &BraidWord, max_period: u64) -> Result<Option<PeriodicCertificate>, FdtcError> {
        let n = w.strands() as i64;
        if n < 2 {
            return Ok(w.is_empty().then_some(PeriodicCertificate { period: 1, twist: 0 }));
        }
        let twist_exponent = n * (n - 1);
        let e = w.exponent_sum();
        for period in 1..=max_period {
            let scaled = e * period as i64;
            if scaled % twist_exponent != 0 {
                continue;
            }
            let twist = scaled / twist_exponent;
            let candidate = w.power(period as i64).compose(&full_twist_power(w.strands(), -twist)?)?;
            if self.reducer.is_trivial(&candidate)? {
                return Ok(Some(PeriodicCertificate { period, twist }));
            }
        }
        Ok(None)
    }

    /// Exact value when a periodic certificate exists within `max_period`,
    /// otherwise the interval from [`FdtcEngine::fdtc_bounds`].
    pub fn fdtc(&self, w: &BraidWord, m_max: u32, max_period: u64) -> Result<FdtcValue, FdtcError> {
        if let Some(cert) = self.certify_periodic(w, max_period)? {
            return Ok(FdtcValue::exact(cert));
        }
        self.fdtc_bounds(w, m_max)
    }

    /// Sign-based right-veering status; the identity braid counts as
    /// right-veering and `c = 0` alone decides nothing.
    pub fn right_veering_status(&self, v: &FdtcValue, w: &BraidWord) -> Result<RightVeeringStatus, FdtcError> {
        if v.lower().is_positive() || w.is_empty() || self.reducer.is_trivial(w)? {
            return Ok(RightVeeringStatus::RightVeering);
        }
        if v.upper().is_negative() {
            return Ok(RightVeeringStatus::NotRightVeering);
        }
        Ok(RightVeeringStatus::Indeterminate)
    }
}

pub fn dehornoy_floor(w: &BraidWord) -> Result<i64, FdtcError> {
    FdtcEngine::default().dehornoy_floor(w)
}

pub fn fdtc_bounds(w: &BraidWord, m_max: u32) -> Result<FdtcValue, FdtcError> {
    FdtcEngine::default().fdtc_bounds(w, m_max)
}

pub fn certify_periodic(w: &BraidWord, max_period: u64) -> Result<Option<PeriodicCertificate>, FdtcError> {
    FdtcEngine::default().certify_periodic(w, max_period)
}

pub fn right_veering_status(v: &FdtcValue, w: &BraidWord) -> Result<RightVeeringStatus, FdtcError> {
    FdtcEngine::default().right_veering_status(v, w)
}
