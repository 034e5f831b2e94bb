//! Transfer of FDTCs and right-veering status along fully ramified covers.
//!
//! For a fully ramified branched cover `π: (S̃, P̃) → (S, P)` with
//! `χ(S̃) < 0`, a boundary component `C̃` over `C` mapping with degree
//! `d(π, C̃)` satisfies
//!
//! ```text
//! c(φ̃, C̃) = c(φ̃, L̃, C̃) = c(φ, L, C) / d(π, C̃).
//! ```
//!
//! The formula fails when `S̃` is an annulus: the positive half twist on two
//! points (FDTC `1/2`) lifts under the double cover to the Dehn twist about
//! the core of the annulus, whose FDTC is `1` on a degree-1 boundary.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cover::CoverGeometry;
use crate::fdtc::{FdtcValue, PeriodicCertificate, RightVeeringStatus};
use crate::rational::Rational;

/// FDTC of the lifted monodromy in the annulus counterexample.
pub const ANNULUS_LIFTED_FDTC: Rational = Rational::ONE;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransferError {
    #[error("cover is not fully ramified: some branch point has an unramified preimage, so the division formula is not licensed")]
    NotFullyRamified,
    #[error(
        "covering surface has Euler characteristic {euler_char} >= 0; the division formula does not hold there \
         (naive value {naive}, but the half twist on two points lifts to the annulus core twist with FDTC {counterexample} on a degree-1 boundary)"
    )]
    AnnulusException { euler_char: i64, naive: String, counterexample: Rational },
    #[error("no boundary component {component} over base boundary {base_boundary}")]
    UnknownBoundary { base_boundary: usize, component: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferInput {
    pub base_fdtc: FdtcValue,
    pub geometry: CoverGeometry,
    pub fully_ramified: bool,
    /// `(base_boundary, component)` indexing `geometry.boundaries`.
    pub boundary_selector: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferResult {
    pub base_boundary: usize,
    pub component: usize,
    /// `d(π, C̃)`.
    pub divisor: u64,
    /// `c(φ̃, C̃)`.
    pub monodromy_fdtc: FdtcValue,
    /// `c(φ̃, L̃, C̃)`; always equal to `monodromy_fdtc`.
    pub braid_fdtc: FdtcValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RightVeeringPropagation {
    pub braid: RightVeeringStatus,
    pub lifted_monodromy: RightVeeringStatus,
    pub lifted_braid: RightVeeringStatus,
}

fn divide(value: &FdtcValue, divisor: u64, lcm_degree: u64) -> FdtcValue {
    let d = Rational::integer(divisor as i64);
    match value {
        FdtcValue::Exact { certificate, .. } => {
            // β^N = Δ^{2M} downstairs lifts, after raising to the power D
            // (any common multiple of the boundary degrees), to
            // φ̃^{ND} = T_{C̃}^{MD/d} upstairs.
            let lifted = PeriodicCertificate {
                period: certificate.period * lcm_degree,
                twist: certificate.twist * (lcm_degree / divisor) as i64,
            };
            FdtcValue::exact(lifted)
        }
        FdtcValue::Interval { lower, upper } => FdtcValue::Interval { lower: *lower / d, upper: *upper / d },
    }
}

/// Applies the division formula to the selected boundary component.
pub fn lift_fdtc(input: &TransferInput) -> Result<TransferResult, TransferError> {
    if !input.fully_ramified {
        return Err(TransferError::NotFullyRamified);
    }
    let (base_boundary, component) = input.boundary_selector;
    let boundary = input
        .geometry
        .find_boundary(base_boundary, component)
        .ok_or(TransferError::UnknownBoundary { base_boundary, component })?;
    let divisor = boundary.degree;
    if input.geometry.is_nonhyperbolic() {
        let naive = divide(&input.base_fdtc, divisor, divisor);
        let naive = match naive.exact_value() {
            Some(v) => v.to_string(),
            None => format!("[{}, {}]", naive.lower(), naive.upper()),
        };
        return Err(TransferError::AnnulusException {
            euler_char: input.geometry.euler_char,
            naive,
            counterexample: ANNULUS_LIFTED_FDTC,
        });
    }
    let lcm_degree = input.geometry.boundaries.iter().fold(1u64, |acc, b| acc.lcm(&b.degree));
    let lifted = divide(&input.base_fdtc, divisor, lcm_degree);
    Ok(TransferResult {
        base_boundary,
        component,
        divisor,
        braid_fdtc: lifted.clone(),
        monodromy_fdtc: lifted,
    })
}

/// Lifts to every boundary component of the cover.
pub fn lift_all(
    base_fdtc: &FdtcValue,
    geometry: &CoverGeometry,
    fully_ramified: bool,
) -> Result<Vec<TransferResult>, TransferError> {
    geometry
        .boundaries
        .iter()
        .map(|b| {
            lift_fdtc(&TransferInput {
                base_fdtc: base_fdtc.clone(),
                geometry: geometry.clone(),
                fully_ramified,
                boundary_selector: (b.base_boundary, b.component),
            })
        })
        .collect()
}

/// The braid, its lifted monodromy and the lifted braid are simultaneously
/// right-veering or not. Annular covers are allowed here.
pub fn propagate_right_veering(
    base: RightVeeringStatus,
    input: &TransferInput,
) -> Result<RightVeeringPropagation, TransferError> {
    if !input.fully_ramified {
        return Err(TransferError::NotFullyRamified);
    }
    Ok(RightVeeringPropagation { braid: base, lifted_monodromy: base, lifted_braid: base })
}

/// `M / (d·N)` straight from a periodic certificate.
pub fn periodic_lift_check(cert: &PeriodicCertificate, divisor: u64) -> Rational {
    assert!(divisor >= 1, "boundary degree must be positive");
    Rational::new(cert.twist, cert.period as i64 * divisor as i64)
}
