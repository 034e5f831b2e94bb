//! End-to-end pipelines behind the command line, and their reports.
//!
//! Every numeric quantity in a [`Report`] is an integer or an exact rational
//! rendered `"p/q"`. Timings are opt-in so that the canonical JSON body is
//! byte-for-byte reproducible.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidError, BraidWord};
use crate::classifier::{self, Assertion, GeometryTransferInput, Verdict};
use crate::cover::{CoverError, CoverGeometry, CoverSpec};
use crate::dehornoy::{DehornoyError, DEFAULT_BUDGET};
use crate::fdtc::{FdtcEngine, FdtcError, FdtcValue, RightVeeringStatus};
use crate::transfer::{self, RightVeeringPropagation, TransferError, TransferInput, TransferResult};

pub const DEFAULT_M_MAX: u32 = 12;
pub const DEFAULT_MAX_PERIOD: u64 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    pub m_max: u32,
    pub max_period: u64,
    pub budget: u64,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { m_max: DEFAULT_M_MAX, max_period: DEFAULT_MAX_PERIOD, budget: DEFAULT_BUDGET, timings: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Fdtc(#[from] FdtcError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error("assertions: {0}")]
    Assertions(String),
    #[error("{0}")]
    Io(String),
}

impl PipelineError {
    /// 2 for bad input, 3 for a failed hypothesis guard, 4 for an internal
    /// invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Transfer(TransferError::AnnulusException { .. } | TransferError::NotFullyRamified) => 3,
            PipelineError::Fdtc(
                FdtcError::EmptyIntersection { .. }
                | FdtcError::FloorOutOfRange { .. }
                | FdtcError::Dehornoy(DehornoyError::BudgetExceeded { .. }),
            ) => 4,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PipelineError::Braid(BraidError::Syntax { .. }) => "syntax_error",
            PipelineError::Braid(BraidError::IndexOutOfRange { .. }) => "index_out_of_range",
            PipelineError::Braid(BraidError::StrandMismatch { .. }) => "strand_mismatch",
            PipelineError::Braid(BraidError::DegenerateStrands { .. }) => "degenerate_strands",
            PipelineError::Fdtc(FdtcError::DegenerateStrands(_)) => "degenerate_strands",
            PipelineError::Fdtc(FdtcError::InvalidParameter { .. }) => "invalid_parameter",
            PipelineError::Fdtc(FdtcError::EmptyIntersection { .. }) => "empty_intersection",
            PipelineError::Fdtc(FdtcError::FloorOutOfRange { .. }) => "floor_out_of_range",
            PipelineError::Fdtc(FdtcError::Dehornoy(DehornoyError::BudgetExceeded { .. })) => "budget_exceeded",
            PipelineError::Fdtc(FdtcError::Dehornoy(DehornoyError::Braid(_))) => "braid_error",
            PipelineError::Cover(CoverError::NotConnected) => "not_connected",
            PipelineError::Cover(CoverError::BadDegree(_)) => "bad_degree",
            PipelineError::Cover(_) => "cover_error",
            PipelineError::Transfer(TransferError::AnnulusException { .. }) => "annulus_exception",
            PipelineError::Transfer(TransferError::NotFullyRamified) => "not_fully_ramified",
            PipelineError::Transfer(TransferError::UnknownBoundary { .. }) => "unknown_boundary",
            PipelineError::Assertions(_) => "assertion_schema",
            PipelineError::Io(_) => "io_error",
        }
    }

    pub fn to_report(&self) -> ErrorReport {
        let detail = match self {
            PipelineError::Transfer(TransferError::AnnulusException { euler_char, naive, counterexample }) => {
                Some(serde_json::json!({
                    "euler_char": euler_char,
                    "naive_lifted_fdtc": naive,
                    "guard": "division formula requires chi(S~) < 0",
                    "counterexample": {
                        "base": "positive half twist in B_2, c = 1/2",
                        "cover": "double cover of the disk branched at two points (annulus)",
                        "lifted_fdtc": counterexample.to_string(),
                        "divisor": 1,
                        "naive_quotient": "1/2",
                    }
                }))
            }
            PipelineError::Transfer(TransferError::NotFullyRamified) => Some(serde_json::json!({
                "guard": "every local monodromy around a branch point must be fixed-point-free",
            })),
            _ => None,
        };
        ErrorReport { error: self.kind().to_string(), message: self.to_string(), exit_code: self.exit_code(), detail }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub message: String,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub braid: String,
    pub strands: usize,
    pub m_max: u32,
    pub max_period: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<Assertion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSummary {
    pub fully_ramified: bool,
    pub geometry: CoverGeometry,
}

/// Microseconds per stage.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub fdtc_us: u64,
    pub cover_us: u64,
    pub transfer_us: u64,
    pub classify_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    pub components: usize,
    pub fdtc: FdtcValue,
    pub right_veering: RightVeeringStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transfer: Vec<TransferResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transfer_error: Option<ErrorReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_veering_propagation: Option<RightVeeringPropagation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let braid = if self.input.braid.trim().is_empty() { "(identity)" } else { self.input.braid.as_str() };
        let _ = writeln!(out, "braid      {braid} in B_{}", self.input.strands);
        let _ = writeln!(out, "components {}", self.components);
        let _ = writeln!(out, "FDTC       {}", self.fdtc);
        let _ = writeln!(out, "veering    {:?}", self.right_veering);
        if let Some(cover) = &self.cover {
            let g = &cover.geometry;
            let degrees: Vec<String> = g.boundaries.iter().map(|b| b.degree.to_string()).collect();
            let _ = writeln!(
                out,
                "cover      degree {}, chi = {}, genus {}, {} boundary component(s) of degree {}, fully ramified: {}",
                g.degree,
                g.euler_char,
                g.genus,
                g.boundary_count(),
                degrees.join(","),
                cover.fully_ramified
            );
        }
        for t in &self.transfer {
            let _ = writeln!(
                out,
                "lift       boundary {}.{} (d = {}): {}",
                t.base_boundary, t.component, t.divisor, t.monodromy_fdtc
            );
        }
        if let Some(e) = &self.transfer_error {
            let _ = writeln!(out, "lift       unavailable: {}", e.message);
        }
        if let Some(p) = &self.right_veering_propagation {
            let _ = writeln!(out, "propagated braid {:?}, lifted monodromy {:?}, lift {:?}", p.braid, p.lifted_monodromy, p.lifted_braid);
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "[{:?}] {:?}: {}", v.status, v.rule, v.conclusion);
            for h in &v.hypotheses {
                let _ = writeln!(out, "    {:<10} {}", format!("{:?}", h.status), h.cond);
            }
            for n in &v.notes {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(
                out,
                "timings    fdtc {}us, cover {}us, transfer {}us, classify {}us",
                t.fdtc_us, t.cover_us, t.transfer_us, t.classify_us
            );
        }
        out
    }
}

struct Stage {
    word: BraidWord,
    fdtc: FdtcValue,
    rv: RightVeeringStatus,
    echo: InputEcho,
    timings: Timings,
}

fn elapsed_us(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

fn fdtc_stage(braid: &str, strands: usize, opts: &Options) -> Result<Stage, PipelineError> {
    let start = Instant::now();
    let word = BraidWord::parse(braid, strands)?;
    let engine = FdtcEngine::with_budget(opts.budget);
    let fdtc = engine.fdtc(&word, opts.m_max, opts.max_period)?;
    let rv = engine.right_veering_status(&fdtc, &word)?;
    let echo = InputEcho {
        braid: word.to_string(),
        strands,
        m_max: opts.m_max,
        max_period: opts.max_period,
        cover: None,
        assertions: Vec::new(),
    };
    let timings = Timings { fdtc_us: elapsed_us(start), ..Timings::default() };
    Ok(Stage { word, fdtc, rv, echo, timings })
}

fn finish(command: &str, stage: Stage, opts: &Options) -> Report {
    Report {
        command: command.to_string(),
        components: stage.word.component_count(),
        input: stage.echo,
        fdtc: stage.fdtc,
        right_veering: stage.rv,
        cover: None,
        transfer: Vec::new(),
        transfer_error: None,
        right_veering_propagation: None,
        verdicts: Vec::new(),
        timings: opts.timings.then_some(stage.timings),
    }
}

/// FDTC and right-veering status of a closed braid.
pub fn cmd_fdtc(braid: &str, strands: usize, opts: &Options) -> Result<Report, PipelineError> {
    let stage = fdtc_stage(braid, strands, opts)?;
    Ok(finish("fdtc", stage, opts))
}

fn resolve_cover(strands: usize, cover: Option<CoverSpec>, degree: Option<usize>) -> Result<CoverSpec, PipelineError> {
    let spec = cover.unwrap_or_else(|| CoverSpec::standard(strands, degree.unwrap_or(2)));
    if spec.n != strands {
        return Err(CoverError::Spec(format!("cover has {} branch points but the braid has {strands} strands", spec.n)).into());
    }
    Ok(spec)
}

/// FDTC downstairs, cover topology, guards, and the lifted FDTC on every
/// boundary component. Uses the standard cyclic cover of the given degree
/// unless `cover` is supplied.
pub fn cmd_transfer(
    braid: &str,
    strands: usize,
    degree: Option<usize>,
    cover: Option<CoverSpec>,
    opts: &Options,
) -> Result<Report, PipelineError> {
    let mut stage = fdtc_stage(braid, strands, opts)?;
    let spec = resolve_cover(strands, cover, degree)?;

    let start = Instant::now();
    let rep = spec.build()?;
    let geometry = rep.geometry()?;
    let fully_ramified = rep.is_fully_ramified();
    stage.timings.cover_us = elapsed_us(start);

    let start = Instant::now();
    let lifted = transfer::lift_all(&stage.fdtc, &geometry, fully_ramified)?;
    let propagation = transfer::propagate_right_veering(
        stage.rv,
        &TransferInput {
            base_fdtc: stage.fdtc.clone(),
            geometry: geometry.clone(),
            fully_ramified,
            boundary_selector: (0, 0),
        },
    )?;
    stage.timings.transfer_us = elapsed_us(start);

    stage.echo.cover = Some(spec);
    let mut report = finish("transfer", stage, opts);
    report.cover = Some(CoverSummary { fully_ramified, geometry });
    report.transfer = lifted;
    report.right_veering_propagation = Some(propagation);
    Ok(report)
}

/// Parses an assertions file: a JSON array of assertions.
pub fn parse_assertions(text: &str) -> Result<Vec<Assertion>, PipelineError> {
    serde_json::from_str(text).map_err(|e| PipelineError::Assertions(e.to_string()))
}

/// Runs every rule on the pipeline output. Rules about an open book's own
/// monodromy are applied to the lifted open book on the cover.
pub fn cmd_classify(
    braid: &str,
    strands: usize,
    degree: Option<usize>,
    cover: Option<CoverSpec>,
    assertions: Vec<Assertion>,
    opts: &Options,
) -> Result<Report, PipelineError> {
    let mut stage = fdtc_stage(braid, strands, opts)?;
    let spec = resolve_cover(strands, cover, degree)?;

    let start = Instant::now();
    let rep = spec.build()?;
    let geometry = rep.geometry()?;
    let fully_ramified = rep.is_fully_ramified();
    stage.timings.cover_us = elapsed_us(start);

    let start = Instant::now();
    let (lifted, transfer_error) = match transfer::lift_all(&stage.fdtc, &geometry, fully_ramified) {
        Ok(l) => (l, None),
        Err(e) => (Vec::new(), Some(PipelineError::from(e).to_report())),
    };
    let propagation = transfer::propagate_right_veering(
        stage.rv,
        &TransferInput {
            base_fdtc: stage.fdtc.clone(),
            geometry: geometry.clone(),
            fully_ramified,
            boundary_selector: (0, 0),
        },
    )
    .ok();
    stage.timings.transfer_us = elapsed_us(start);

    let start = Instant::now();
    let verdicts = classify(&stage.fdtc, stage.rv, strands, &geometry, fully_ramified, &lifted, &assertions);
    stage.timings.classify_us = elapsed_us(start);

    stage.echo.cover = Some(spec);
    stage.echo.assertions = assertions;
    let mut report = finish("classify", stage, opts);
    report.cover = Some(CoverSummary { fully_ramified, geometry });
    report.transfer = lifted;
    report.transfer_error = transfer_error;
    report.right_veering_propagation = propagation;
    report.verdicts = verdicts;
    Ok(report)
}

/// Evaluates all rules for a braid in the disk open book and one of its
/// branched covers.
pub fn classify(
    fdtc: &FdtcValue,
    rv: RightVeeringStatus,
    strands: usize,
    geometry: &CoverGeometry,
    fully_ramified: bool,
    lifted: &[TransferResult],
    assertions: &[Assertion],
) -> Vec<Verdict> {
    let link_geometry = classifier::find_geometry(assertions);
    let nt_type = classifier::find_nielsen_thurston(assertions);
    let asserted_lspace = assertions.iter().find_map(|a| match a.kind {
        classifier::AssertionKind::IsLSpace { value } => Some(value),
        _ => None,
    });

    let mut verdicts = vec![
        classifier::rule_geometry_transfer(&GeometryTransferInput {
            fdtc: std::slice::from_ref(fdtc),
            geometry,
            fully_ramified,
            base_geometry: link_geometry,
        }),
        classifier::rule_lspace_obstruction(fdtc, strands as u64, geometry.degree, link_geometry, asserted_lspace),
        classifier::rule_universal_tightness(
            classifier::find_prongs(assertions),
            classifier::asserts_pseudo_anosov(assertions),
            fully_ramified,
            Some(geometry),
        ),
        classifier::rule_looseness(rv, fully_ramified),
        classifier::rule_virtually_loose(rv),
    ];
    for t in lifted {
        let note = format!("applied to the lifted open book at boundary {}.{}", t.base_boundary, t.component);
        verdicts.push(classifier::rule_overtwisted(&t.monodromy_fdtc).with_notes(vec![note.clone()]));
        if geometry.boundary_count() == 1 {
            let v = classifier::rule_geometry_from_magnitude(&t.monodromy_fdtc, nt_type);
            verdicts.push(v.with_notes(vec![
                note,
                "the Nielsen-Thurston type of L carries over to phi~ on a fully ramified cover with chi(S~) < 0".to_string(),
            ]));
        }
    }
    verdicts
}
