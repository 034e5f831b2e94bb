//! Rule engine for the topological and contact consequences of the transfer
//! formula.
//!
//! Each rule takes FDTC values, covering data and user assertions, and
//! returns a [`Verdict`] listing every hypothesis with its status. A verdict
//! is `Proved` exactly when every hypothesis is `Satisfied`; the conclusion
//! string is fixed per rule and never strengthened. Strict inequalities on an
//! interval are certified only when the whole interval satisfies them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cover::CoverGeometry;
use crate::fdtc::{FdtcValue, RightVeeringStatus};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    User,
    Computed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeometryType {
    SeifertFibered,
    Toroidal,
    Hyperbolic,
}

impl fmt::Display for GeometryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryType::SeifertFibered => "Seifert fibered",
            GeometryType::Toroidal => "toroidal",
            GeometryType::Hyperbolic => "hyperbolic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NielsenThurston {
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl NielsenThurston {
    /// Geometry of the open book's 3-manifold matching this type once
    /// `|c| ≥ 1`.
    pub fn geometry(self) -> GeometryType {
        match self {
            NielsenThurston::Periodic => GeometryType::SeifertFibered,
            NielsenThurston::Reducible => GeometryType::Toroidal,
            NielsenThurston::PseudoAnosov => GeometryType::Hyperbolic,
        }
    }
}

/// `c(φ, L, C_i) = k_i / p_i` with `p_i` prongs at `C_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Prong {
    pub k: i64,
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AssertionKind {
    /// Geometric type of the complement of the closed braid.
    GeometryType { value: GeometryType },
    /// Whether the cyclic branched cover is an L-space.
    IsLSpace { value: bool },
    ProngData { prongs: Vec<Prong> },
    PseudoAnosov,
    NielsenThurston { value: NielsenThurston },
    GcdCoprime { k: u64, d: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assertion {
    #[serde(flatten)]
    pub kind: AssertionKind,
    #[serde(default = "user")]
    pub provenance: Provenance,
}

fn user() -> Provenance {
    Provenance::User
}

impl Assertion {
    pub fn user(kind: AssertionKind) -> Self {
        Assertion { kind, provenance: Provenance::User }
    }

    pub fn computed(kind: AssertionKind) -> Self {
        Assertion { kind, provenance: Provenance::Computed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisStatus {
    Satisfied,
    Violated,
    Unknown,
}

impl HypothesisStatus {
    fn from_bool(b: bool) -> Self {
        if b {
            HypothesisStatus::Satisfied
        } else {
            HypothesisStatus::Violated
        }
    }

    fn from_option(b: Option<bool>) -> Self {
        b.map_or(HypothesisStatus::Unknown, HypothesisStatus::from_bool)
    }

    /// Conjunction over tri-state values.
    pub fn all<I: IntoIterator<Item = HypothesisStatus>>(items: I) -> Self {
        let mut out = HypothesisStatus::Satisfied;
        for s in items {
            match s {
                HypothesisStatus::Violated => return HypothesisStatus::Violated,
                HypothesisStatus::Unknown => out = HypothesisStatus::Unknown,
                HypothesisStatus::Satisfied => {}
            }
        }
        out
    }

    /// Disjunction over tri-state values.
    pub fn any<I: IntoIterator<Item = HypothesisStatus>>(items: I) -> Self {
        let mut out = HypothesisStatus::Violated;
        for s in items {
            match s {
                HypothesisStatus::Satisfied => return HypothesisStatus::Satisfied,
                HypothesisStatus::Unknown => out = HypothesisStatus::Unknown,
                HypothesisStatus::Violated => {}
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypothesis {
    pub cond: String,
    pub status: HypothesisStatus,
}

impl Hypothesis {
    pub fn new(cond: impl Into<String>, status: HypothesisStatus) -> Self {
        Hypothesis { cond: cond.into(), status }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Proved,
    /// Reserved for rules whose conclusion can be contradicted; none of the
    /// built-in rules produce it.
    Refuted,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    GeometryTransfer,
    LspaceObstruction,
    UniversalTightness,
    Looseness,
    VirtualLooseness,
    Overtwisted,
    GeometryFromMagnitude,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Verdict {
    pub rule: RuleId,
    pub conclusion: String,
    pub status: VerdictStatus,
    pub hypotheses: Vec<Hypothesis>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    /// `Proved` iff every hypothesis is satisfied.
    pub fn from_hypotheses(rule: RuleId, conclusion: impl Into<String>, hypotheses: Vec<Hypothesis>) -> Self {
        let status = if hypotheses.iter().all(|h| h.status == HypothesisStatus::Satisfied) {
            VerdictStatus::Proved
        } else {
            VerdictStatus::Inconclusive
        };
        Verdict { rule, conclusion: conclusion.into(), status, hypotheses, notes: Vec::new() }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn is_proved(&self) -> bool {
        self.status == VerdictStatus::Proved
    }

    pub fn hypothesis(&self, cond_prefix: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.cond.starts_with(cond_prefix))
    }
}

/// `|c| > t`.
pub fn certify_abs_gt(v: &FdtcValue, t: Rational) -> HypothesisStatus {
    if v.abs_lower() > t {
        HypothesisStatus::Satisfied
    } else if v.abs_upper() <= t {
        HypothesisStatus::Violated
    } else {
        HypothesisStatus::Unknown
    }
}

/// `|c| ≥ t`.
pub fn certify_abs_ge(v: &FdtcValue, t: Rational) -> HypothesisStatus {
    if v.abs_lower() >= t {
        HypothesisStatus::Satisfied
    } else if v.abs_upper() < t {
        HypothesisStatus::Violated
    } else {
        HypothesisStatus::Unknown
    }
}

/// `c < 0`.
pub fn certify_negative(v: &FdtcValue) -> HypothesisStatus {
    if v.upper().is_negative() {
        HypothesisStatus::Satisfied
    } else if !v.lower().is_negative() {
        HypothesisStatus::Violated
    } else {
        HypothesisStatus::Unknown
    }
}

fn non_right_veering(rv: RightVeeringStatus) -> HypothesisStatus {
    match rv {
        RightVeeringStatus::NotRightVeering => HypothesisStatus::Satisfied,
        RightVeeringStatus::RightVeering => HypothesisStatus::Violated,
        RightVeeringStatus::Indeterminate => HypothesisStatus::Unknown,
    }
}

pub fn find_geometry(assertions: &[Assertion]) -> Option<GeometryType> {
    assertions.iter().find_map(|a| match a.kind {
        AssertionKind::GeometryType { value } => Some(value),
        _ => None,
    })
}

pub fn find_nielsen_thurston(assertions: &[Assertion]) -> Option<NielsenThurston> {
    assertions.iter().find_map(|a| match a.kind {
        AssertionKind::NielsenThurston { value } => Some(value),
        AssertionKind::PseudoAnosov => Some(NielsenThurston::PseudoAnosov),
        _ => None,
    })
}

pub fn find_prongs(assertions: &[Assertion]) -> Option<&[Prong]> {
    assertions.iter().find_map(|a| match &a.kind {
        AssertionKind::ProngData { prongs } => Some(prongs.as_slice()),
        _ => None,
    })
}

pub fn asserts_pseudo_anosov(assertions: &[Assertion]) -> bool {
    find_nielsen_thurston(assertions) == Some(NielsenThurston::PseudoAnosov)
}

/// Inputs to [`rule_geometry_transfer`].
#[derive(Clone, Debug)]
pub struct GeometryTransferInput<'a> {
    /// FDTC per base boundary component, indexed like `geometry.boundaries`.
    pub fdtc: &'a [FdtcValue],
    pub geometry: &'a CoverGeometry,
    pub fully_ramified: bool,
    /// Asserted geometric type of the link complement.
    pub base_geometry: Option<GeometryType>,
}

/// The cover `M_(S̃,φ̃)` inherits the geometric type of the link complement
/// when the FDTC is large compared with the covering degree.
pub fn rule_geometry_transfer(input: &GeometryTransferInput<'_>) -> Verdict {
    let geom = input.geometry;
    let d = geom.degree as i64;
    let base_boundaries = geom.base_boundary_count().max(input.fdtc.len());

    let fdtc_known = input.fdtc.len() == base_boundaries && !input.fdtc.is_empty();
    let condition_a = if base_boundaries == 1 && geom.boundary_count() == 1 && fdtc_known {
        certify_abs_gt(&input.fdtc[0], Rational::integer(d))
    } else {
        HypothesisStatus::Violated
    };
    let condition_b = if fdtc_known {
        HypothesisStatus::all(
            geom.boundaries
                .iter()
                .map(|b| certify_abs_gt(&input.fdtc[b.base_boundary], Rational::integer(4 * b.degree as i64))),
        )
    } else {
        HypothesisStatus::Unknown
    };

    let conclusion = match input.base_geometry {
        Some(g) => format!("the branched cover M_(S~,phi~) is {g}"),
        None => "the branched cover M_(S~,phi~) has the geometric type of the link complement".to_string(),
    };
    Verdict::from_hypotheses(
        RuleId::GeometryTransfer,
        conclusion,
        vec![
            Hypothesis::new("cover is fully ramified", HypothesisStatus::from_bool(input.fully_ramified)),
            Hypothesis::new("chi(S~) < 0", HypothesisStatus::from_bool(geom.euler_char < 0)),
            Hypothesis::new(
                format!(
                    "(a) boundaries of S and S~ connected and |c(phi,L,dS)| > {d}, or (b) |c(phi,L,C)| > 4 d(pi,C~) for all C~"
                ),
                HypothesisStatus::any([condition_a, condition_b]),
            ),
            Hypothesis::new(
                "geometric type of the link complement asserted",
                HypothesisStatus::from_bool(input.base_geometry.is_some()),
            ),
        ],
    )
    .with_notes(vec![format!("condition (a): {condition_a:?}; condition (b): {condition_b:?}")])
}

/// Contrapositive form: a closed `k`-braid with `(k, d) = 1` and `|c| ≥ d`
/// representing a hyperbolic link forces the `d`-fold cyclic branched cover
/// to admit a taut foliation, hence not be an L-space.
pub fn rule_lspace_obstruction(
    fdtc: &FdtcValue,
    k: u64,
    d: u64,
    link_geometry: Option<GeometryType>,
    asserted_lspace: Option<bool>,
) -> Verdict {
    let hypotheses = vec![
        Hypothesis::new(format!("(k,d) = 1 for k = {k}, d = {d}"), HypothesisStatus::from_bool(k.gcd(&d) == 1)),
        Hypothesis::new("d >= 2", HypothesisStatus::from_bool(d >= 2)),
        Hypothesis::new(
            "link is hyperbolic",
            HypothesisStatus::from_option(link_geometry.map(|g| g == GeometryType::Hyperbolic)),
        ),
        Hypothesis::new(format!("|c(id,L,dD)| >= {d}"), certify_abs_ge(fdtc, Rational::integer(d as i64))),
    ];
    let verdict = Verdict::from_hypotheses(
        RuleId::LspaceObstruction,
        format!("the {d}-fold cyclic branched cover of the link is not an L-space (it admits a taut foliation)"),
        hypotheses,
    );
    let mut notes = Vec::new();
    if verdict.is_proved() && asserted_lspace == Some(true) {
        notes.push("the user assertion that this cover is an L-space contradicts the proved conclusion".to_string());
    }
    verdict.with_notes(notes)
}

/// Universal tightness of the lifted contact structure from prong data.
/// `geometry`, when given, supplies the boundary degrees `d_{ij}` used to
/// report the lifted prong counts `p_i d_{ij}` and FDTCs `k_i / (p_i d_{ij})`.
pub fn rule_universal_tightness(
    prongs: Option<&[Prong]>,
    pseudo_anosov: bool,
    fully_ramified: bool,
    geometry: Option<&CoverGeometry>,
) -> Verdict {
    let prongs = prongs.unwrap_or(&[]);
    let complete = match geometry {
        Some(g) => !prongs.is_empty() && prongs.len() == g.base_boundary_count(),
        None => !prongs.is_empty(),
    };
    let hypotheses = vec![
        Hypothesis::new("L is pseudo-Anosov", HypothesisStatus::from_bool(pseudo_anosov)),
        Hypothesis::new("cover is fully ramified", HypothesisStatus::from_bool(fully_ramified)),
        Hypothesis::new("prong data c(phi,L,C_i) = k_i/p_i given for every boundary", HypothesisStatus::from_bool(complete)),
        Hypothesis::new("p_i >= 1", HypothesisStatus::from_bool(prongs.iter().all(|p| p.p >= 1))),
        Hypothesis::new(
            "k_i >= 2 for every boundary C_i",
            HypothesisStatus::from_bool(!prongs.is_empty() && prongs.iter().all(|p| p.k >= 2)),
        ),
    ];
    let mut notes = Vec::new();
    for (i, prong) in prongs.iter().enumerate().filter(|(_, p)| p.p >= 1) {
        match geometry {
            Some(g) => {
                for b in g.components_over(i) {
                    let lifted = Rational::new(prong.k, prong.p as i64 * b.degree as i64);
                    notes.push(format!(
                        "boundary {i}.{}: degree {}, {} prongs, lifted FDTC {lifted}",
                        b.component,
                        b.degree,
                        prong.p * b.degree
                    ));
                }
            }
            None => notes.push(format!("boundary {i}: lifted FDTC {}/({} d)", prong.k, prong.p)),
        }
    }
    Verdict::from_hypotheses(
        RuleId::UniversalTightness,
        "the lifted open book (S~,phi~) supports a universally tight contact structure",
        hypotheses,
    )
    .with_notes(notes)
}

pub fn rule_looseness(base_rv: RightVeeringStatus, fully_ramified: bool) -> Verdict {
    Verdict::from_hypotheses(
        RuleId::Looseness,
        "(S~,phi~) supports an overtwisted contact structure and the lift L~ is a loose transverse link",
        vec![
            Hypothesis::new("L is not right-veering", non_right_veering(base_rv)),
            Hypothesis::new("cover is fully ramified", HypothesisStatus::from_bool(fully_ramified)),
        ],
    )
}

/// Only the proved direction: non-right-veering implies virtually loose.
/// Nothing is ever concluded about universal non-looseness.
pub fn rule_virtually_loose(base_rv: RightVeeringStatus) -> Verdict {
    Verdict::from_hypotheses(
        RuleId::VirtualLooseness,
        "the transverse link represented by L is virtually loose",
        vec![Hypothesis::new("L is not right-veering", non_right_veering(base_rv))],
    )
    .with_notes(vec!["witnessed by the standard d-fold cyclic branched cover, which always exists".to_string()])
}

pub fn rule_overtwisted(fdtc: &FdtcValue) -> Verdict {
    Verdict::from_hypotheses(
        RuleId::Overtwisted,
        "the supported contact structure is overtwisted",
        vec![Hypothesis::new("c(phi) < 0", certify_negative(fdtc))],
    )
}

pub fn rule_geometry_from_magnitude(fdtc: &FdtcValue, nt_type: Option<NielsenThurston>) -> Verdict {
    let conclusion = match nt_type {
        Some(t) => format!("M_(S,phi) is {}", t.geometry()),
        None => "M_(S,phi) has the geometry matching the Nielsen-Thurston type of phi".to_string(),
    };
    Verdict::from_hypotheses(
        RuleId::GeometryFromMagnitude,
        conclusion,
        vec![
            Hypothesis::new("|c(phi)| >= 1", certify_abs_ge(fdtc, Rational::ONE)),
            Hypothesis::new("Nielsen-Thurston type asserted", HypothesisStatus::from_bool(nt_type.is_some())),
        ],
    )
}
