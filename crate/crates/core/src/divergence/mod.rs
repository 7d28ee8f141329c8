//! Divergence certificates for the non-admissible catalog and their exact
//! verifiers.

mod catalog;
mod data;
mod json;
mod kappa;
mod linear;
mod parametric;
mod region;

use std::fmt;

use thiserror::Error;

pub use catalog::certificate_catalog;
pub use json::{certificate_from_json, certificate_to_json, CERTIFICATE_VERSION};
pub use kappa::{
    build_kappa_certificate, check_round, play_round, verify_kappa, KappaCertificate, KappaReport,
    ROUND_BOUND,
};
pub use linear::{combine, find_witness, Constraint, LinearForm, Witness};
pub use parametric::{
    verify_parametric, AffineStep, ParametricLoopCertificate, ParametricPosition, ParametricReport,
};
pub use region::{
    build_region_certificate, push_forms, verify_invariant_region, InvariantRegionCertificate,
    RegionReport,
};

use crate::catalog::{build_inadmissible, CatalogError, InadmissibleFamilyId};
use crate::game::{FiringSequence, GameOutcome};
use crate::gcm::GcmGraph;
use crate::position::Position;
use crate::rational::{join, Rational};

/// Where a witness was required.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessTarget {
    /// The fired value at this (1-based) step of the cycle.
    Step(usize),
    /// This (1-based) region constraint after the cycle.
    Closure(usize),
}

impl fmt::Display for WitnessTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessTarget::Step(k) => write!(f, "cycle step {k}"),
            WitnessTarget::Closure(k) => write!(f, "closure constraint {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DivergenceError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("node {index} is out of range for a graph with {nodes} nodes")]
    IndexOutOfRange { index: usize, nodes: usize },
    #[error("certificate dimensions do not match the graph")]
    DimensionMismatch,
    #[error("certificate was made for a different graph")]
    GraphMismatch,
    #[error("prefix firing {step} is illegal")]
    PrefixIllegal { step: usize },
    #[error("prefix does not land on the family at coordinate {coordinate}")]
    LandingMismatch { coordinate: usize },
    #[error("prefix lands outside the region (constraint {constraint})")]
    LandingOutsideRegion { constraint: usize },
    #[error("loop firing {step} has value {}k + {} which is not positive for all k", fmt_r(.alpha), fmt_r(.beta))]
    LoopIllegal {
        step: usize,
        alpha: Rational,
        beta: Rational,
    },
    #[error("loop does not return to the family at coordinate {coordinate}")]
    FamilyMismatch { coordinate: usize },
    #[error("witness for {at} gives ({}) instead of ({})", join(.combination), join(.expected))]
    WitnessMismatch {
        at: WitnessTarget,
        expected: Vec<Rational>,
        combination: Vec<Rational>,
    },
    #[error("witness for {at} puts no weight on a strict constraint")]
    NonStrictWitness { at: WitnessTarget },
    #[error("Q = {}, Q1 = {}, Q2 = {} fail the sign conditions", fmt_r(.q), fmt_r(.q1), fmt_r(.q2))]
    NonpositiveQ {
        q: Rational,
        q1: Rational,
        q2: Rational,
    },
    #[error("sample {sample}: round exceeded {} right-hand firings", ROUND_BOUND)]
    RoundBound { sample: usize },
    #[error("sample {sample}: round disagrees with the closed forms")]
    ClosedFormMismatch { sample: usize },
    #[error("sample {sample}: round leaves the region")]
    RegionEscape { sample: usize },
    #[error("certificate json: {0}")]
    Json(String),
}

fn fmt_r(r: &Rational) -> String {
    crate::rational::format_rational(r)
}

impl From<CatalogError> for DivergenceError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownFamily(s) => DivergenceError::UnknownFamily(s),
            other => DivergenceError::BadParameters(other.to_string()),
        }
    }
}

/// A triangle certificate together with the start it is applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaEntry {
    pub certificate: KappaCertificate,
    pub start: Position,
    pub prefix: FiringSequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivergenceCertificate {
    Parametric(ParametricLoopCertificate),
    Region(InvariantRegionCertificate),
    Kappa(KappaEntry),
}

impl DivergenceCertificate {
    pub fn start(&self) -> &Position {
        match self {
            DivergenceCertificate::Parametric(c) => &c.start,
            DivergenceCertificate::Region(c) => &c.start,
            DivergenceCertificate::Kappa(c) => &c.start,
        }
    }

    pub fn prefix(&self) -> &[usize] {
        match self {
            DivergenceCertificate::Parametric(c) => &c.prefix,
            DivergenceCertificate::Region(c) => &c.prefix,
            DivergenceCertificate::Kappa(c) => &c.prefix,
        }
    }

    /// A firing sequence that keeps the game going: the prefix followed by
    /// `rounds` passes through the cycle. Triangles have no fixed cycle.
    pub fn unrolled(&self, rounds: usize) -> Option<FiringSequence> {
        let (prefix, cycle, m) = match self {
            DivergenceCertificate::Parametric(c) => (&c.prefix, &c.cycle, c.repeats),
            DivergenceCertificate::Region(c) => (&c.prefix, &c.cycle, 1),
            DivergenceCertificate::Kappa(_) => return None,
        };
        let mut seq = prefix.clone();
        for _ in 0..rounds * m {
            seq.extend(cycle);
        }
        Some(seq)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DivergenceCertificate::Parametric(_) => "parametric",
            DivergenceCertificate::Region(_) => "region",
            DivergenceCertificate::Kappa(_) => "kappa",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofReport {
    Parametric(ParametricReport),
    Region(RegionReport),
    Kappa(KappaReport),
}

/// Samples drawn per triangle certificate.
pub const KAPPA_SAMPLES: usize = 100;
/// Rounds replayed from the landing point of a triangle certificate.
pub const KAPPA_LANDING_ROUNDS: usize = 3;

/// Verifies one certificate of any kind on `g`.
pub fn verify_certificate(
    g: &GcmGraph,
    cert: &DivergenceCertificate,
) -> Result<ProofReport, DivergenceError> {
    match cert {
        DivergenceCertificate::Parametric(c) => {
            verify_parametric(g, c).map(ProofReport::Parametric)
        }
        DivergenceCertificate::Region(c) => verify_invariant_region(g, c).map(ProofReport::Region),
        DivergenceCertificate::Kappa(entry) => verify_kappa_entry(g, entry).map(ProofReport::Kappa),
    }
}

fn verify_kappa_entry(g: &GcmGraph, entry: &KappaEntry) -> Result<KappaReport, DivergenceError> {
    if entry.start.len() != 3 || g.n() != 3 {
        return Err(DivergenceError::DimensionMismatch);
    }
    let seed = entry
        .start
        .values()
        .iter()
        .position(|x| !num_traits::Zero::is_zero(x))
        .unwrap_or(0) as u64;
    let mut report = verify_kappa(g, &entry.certificate, KAPPA_SAMPLES, seed)?;
    let mut current = entry.start.values().to_vec();
    for (k, &s) in entry.prefix.iter().enumerate() {
        if s == 0 || s > 3 || !num_traits::Signed::is_positive(&current[s - 1]) {
            return Err(DivergenceError::PrefixIllegal { step: k + 1 });
        }
        crate::game::reflect(g, &mut current, s);
    }
    if !entry.certificate.in_region(&current) {
        return Err(DivergenceError::LandingOutsideRegion { constraint: 1 });
    }
    for round in 1..=KAPPA_LANDING_ROUNDS {
        let (next, count) = check_round(g, &entry.certificate, &current, KAPPA_SAMPLES + round)?;
        report.longest_round = report.longest_round.max(count);
        report.samples += 1;
        current = next;
    }
    Ok(report)
}

/// The verdict for one fundamental position.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaVerdict {
    pub omega: usize,
    pub result: Result<ProofReport, DivergenceError>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyAllReport {
    pub family: InadmissibleFamilyId,
    pub verdicts: Vec<OmegaVerdict>,
}

impl VerifyAllReport {
    pub fn verified(&self) -> usize {
        self.verdicts.iter().filter(|v| v.result.is_ok()).count()
    }

    pub fn total(&self) -> usize {
        self.verdicts.len()
    }

    pub fn passed(&self) -> bool {
        self.verified() == self.total()
    }

    /// The game outcome established for ω_i, if its certificate verified.
    pub fn outcome(&self, omega: usize) -> Option<GameOutcome> {
        let v = self.verdicts.iter().find(|v| v.omega == omega)?;
        v.result.is_ok().then(|| GameOutcome::CertifiedDivergent {
            certificate: certificate_label(self.family, omega),
        })
    }
}

pub fn certificate_label(id: InadmissibleFamilyId, omega: usize) -> String {
    format!("{id}#omega{omega}")
}

/// Fetches and verifies the certificate of every fundamental position.
pub fn verify_all(id: InadmissibleFamilyId) -> Result<VerifyAllReport, DivergenceError> {
    let id = id.validate()?;
    let g = build_inadmissible(id)?;
    let verdicts = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=g.n())
            .map(|omega| {
                let g = &g;
                scope.spawn(move || {
                    let result =
                        certificate_catalog(id, omega).and_then(|c| verify_certificate(g, &c));
                    OmegaVerdict { omega, result }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification does not panic"))
            .collect()
    });
    Ok(VerifyAllReport {
        family: id,
        verdicts,
    })
}
