use num_traits::Signed;

use super::DivergenceError;
use crate::game::{reflect, FiringSequence};
use crate::gcm::GcmGraph;
use crate::position::Position;
use crate::rational::Rational;

/// The positions u + k·v for integers k ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricPosition {
    pub intercept: Vec<Rational>,
    pub slope: Vec<Rational>,
}

impl ParametricPosition {
    pub fn new(intercept: Vec<Rational>, slope: Vec<Rational>) -> Self {
        Self { intercept, slope }
    }

    pub fn at(&self, k: i64) -> Position {
        let k = Rational::from_integer(k.into());
        Position::new(
            self.intercept
                .iter()
                .zip(&self.slope)
                .map(|(u, v)| u + &k * v)
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricLoopCertificate {
    pub start: Position,
    pub prefix: FiringSequence,
    pub family: ParametricPosition,
    pub cycle: FiringSequence,
    pub repeats: usize,
}

/// One symbolic firing: node `node` held the value αk + β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineStep {
    pub node: usize,
    pub alpha: Rational,
    pub beta: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricReport {
    pub steps: Vec<AffineStep>,
}

pub fn verify_parametric(
    g: &GcmGraph,
    cert: &ParametricLoopCertificate,
) -> Result<ParametricReport, DivergenceError> {
    let n = g.n();
    let fam = &cert.family;
    if cert.start.len() != n
        || fam.intercept.len() != n
        || fam.slope.len() != n
        || cert.repeats == 0
    {
        return Err(DivergenceError::DimensionMismatch);
    }

    let mut current = cert.start.values().to_vec();
    for (k, &s) in cert.prefix.iter().enumerate() {
        if s == 0 || s > n || !current[s - 1].is_positive() {
            return Err(DivergenceError::PrefixIllegal { step: k + 1 });
        }
        reflect(g, &mut current, s);
    }
    if let Some(c) = (0..n).find(|&c| current[c] != fam.intercept[c]) {
        return Err(DivergenceError::LandingMismatch { coordinate: c + 1 });
    }

    let mut u = fam.intercept.clone();
    let mut v = fam.slope.clone();
    let mut steps = Vec::with_capacity(cert.cycle.len() * cert.repeats);
    for (k, &s) in cert
        .cycle
        .iter()
        .cycle()
        .take(cert.cycle.len() * cert.repeats)
        .enumerate()
    {
        if s == 0 || s > n {
            return Err(DivergenceError::IndexOutOfRange { index: s, nodes: n });
        }
        let (alpha, beta) = (v[s - 1].clone(), u[s - 1].clone());
        if alpha.is_negative() || !beta.is_positive() {
            return Err(DivergenceError::LoopIllegal {
                step: k + 1,
                alpha,
                beta,
            });
        }
        reflect(g, &mut u, s);
        reflect(g, &mut v, s);
        steps.push(AffineStep {
            node: s,
            alpha,
            beta,
        });
    }

    for c in 0..n {
        if u[c] != &fam.intercept[c] + &fam.slope[c] || v[c] != fam.slope[c] {
            return Err(DivergenceError::FamilyMismatch { coordinate: c + 1 });
        }
    }
    Ok(ParametricReport { steps })
}

impl ParametricLoopCertificate {
    /// True when some coordinate grows without bound along the family.
    pub fn grows(&self) -> bool {
        self.family.slope.iter().any(Signed::is_positive)
    }
}
