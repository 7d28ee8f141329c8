//! Versioned JSON form of certificates. Rationals are strings ("p" or "p/q")
//! and witnesses map constraint indices to weights.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    DivergenceCertificate, DivergenceError, InvariantRegionCertificate, KappaCertificate,
    KappaEntry, ParametricLoopCertificate, ParametricPosition, Witness,
};
use crate::catalog::{InadmissibleFamilyId, TriParams, TriVariant};
use crate::divergence::linear::Constraint;
use crate::position::Position;
use crate::rational::{format_rational, parse_rational, Rational};

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Envelope {
    version: u32,
    family: String,
    omega: usize,
    #[serde(flatten)]
    body: Body,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Body {
    Parametric {
        start: Vec<String>,
        prefix: Vec<usize>,
        u: Vec<String>,
        v: Vec<String>,
        cycle: Vec<usize>,
        repeats: usize,
    },
    Region {
        start: Vec<String>,
        prefix: Vec<usize>,
        region: Vec<ConstraintJson>,
        cycle: Vec<usize>,
        step_witnesses: Vec<BTreeMap<String, String>>,
        closure_witnesses: Vec<BTreeMap<String, String>>,
    },
    Kappa {
        start: Vec<String>,
        prefix: Vec<usize>,
        variant: u8,
        p1: i64,
        q1: i64,
        p2: i64,
        q2: i64,
        kappa: Vec<String>,
        q: String,
        q1_coeff: String,
        q2_coeff: String,
    },
}

#[derive(Serialize, Deserialize)]
struct ConstraintJson {
    coeffs: Vec<String>,
    strict: bool,
}

fn out_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

// Keys are strings because a flattened enum cannot read integer map keys.
fn out_witness(w: &Witness) -> BTreeMap<String, String> {
    w.iter()
        .map(|(k, x)| (k.to_string(), format_rational(x)))
        .collect()
}

fn bad(msg: impl Into<String>) -> DivergenceError {
    DivergenceError::Json(msg.into())
}

fn in_rat(s: &str) -> Result<Rational, DivergenceError> {
    parse_rational(s).ok_or_else(|| bad(format!("not a rational: {s}")))
}

fn in_vec(v: &[String]) -> Result<Vec<Rational>, DivergenceError> {
    v.iter().map(|s| in_rat(s)).collect()
}

fn in_witness(w: &BTreeMap<String, String>) -> Result<Witness, DivergenceError> {
    w.iter()
        .map(|(k, s)| {
            let k = k
                .parse::<usize>()
                .map_err(|_| bad(format!("bad constraint index {k}")))?;
            Ok((k, in_rat(s)?))
        })
        .collect()
}

pub fn certificate_to_json(
    id: InadmissibleFamilyId,
    omega: usize,
    cert: &DivergenceCertificate,
) -> String {
    let body = match cert {
        DivergenceCertificate::Parametric(c) => Body::Parametric {
            start: out_vec(c.start.values()),
            prefix: c.prefix.clone(),
            u: out_vec(&c.family.intercept),
            v: out_vec(&c.family.slope),
            cycle: c.cycle.clone(),
            repeats: c.repeats,
        },
        DivergenceCertificate::Region(c) => Body::Region {
            start: out_vec(c.start.values()),
            prefix: c.prefix.clone(),
            region: c
                .region
                .iter()
                .map(|k| ConstraintJson {
                    coeffs: out_vec(&k.coeffs),
                    strict: k.strict,
                })
                .collect(),
            cycle: c.cycle.clone(),
            step_witnesses: c.step_witnesses.iter().map(out_witness).collect(),
            closure_witnesses: c.closure_witnesses.iter().map(out_witness).collect(),
        },
        DivergenceCertificate::Kappa(e) => {
            let c = &e.certificate;
            Body::Kappa {
                start: out_vec(e.start.values()),
                prefix: e.prefix.clone(),
                variant: c.variant.index(),
                p1: c.params.p1,
                q1: c.params.q1,
                p2: c.params.p2,
                q2: c.params.q2,
                kappa: out_vec(&c.kappa_coeffs),
                q: format_rational(&c.q),
                q1_coeff: format_rational(&c.q1),
                q2_coeff: format_rational(&c.q2),
            }
        }
    };
    let env = Envelope {
        version: CERTIFICATE_VERSION,
        family: id.to_string(),
        omega,
        body,
    };
    serde_json::to_string_pretty(&env).expect("certificate serializes")
}

pub fn certificate_from_json(
    text: &str,
) -> Result<(InadmissibleFamilyId, usize, DivergenceCertificate), DivergenceError> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if env.version != CERTIFICATE_VERSION {
        return Err(bad(format!("unsupported version {}", env.version)));
    }
    let id: InadmissibleFamilyId = env.family.parse()?;
    let cert = match env.body {
        Body::Parametric {
            start,
            prefix,
            u,
            v,
            cycle,
            repeats,
        } => DivergenceCertificate::Parametric(ParametricLoopCertificate {
            start: Position::new(in_vec(&start)?),
            prefix,
            family: ParametricPosition::new(in_vec(&u)?, in_vec(&v)?),
            cycle,
            repeats,
        }),
        Body::Region {
            start,
            prefix,
            region,
            cycle,
            step_witnesses,
            closure_witnesses,
        } => DivergenceCertificate::Region(InvariantRegionCertificate {
            region: region
                .iter()
                .map(|k| Ok(Constraint::new(in_vec(&k.coeffs)?, k.strict)))
                .collect::<Result<_, DivergenceError>>()?,
            start: Position::new(in_vec(&start)?),
            prefix,
            cycle,
            step_witnesses: step_witnesses
                .iter()
                .map(in_witness)
                .collect::<Result<_, _>>()?,
            closure_witnesses: closure_witnesses
                .iter()
                .map(in_witness)
                .collect::<Result<_, _>>()?,
        }),
        Body::Kappa {
            start,
            prefix,
            variant,
            p1,
            q1,
            p2,
            q2,
            kappa,
            q,
            q1_coeff,
            q2_coeff,
        } => {
            let variant = TriVariant::from_index(variant)
                .ok_or_else(|| bad(format!("no triangle variant {variant}")))?;
            DivergenceCertificate::Kappa(KappaEntry {
                certificate: KappaCertificate {
                    variant,
                    params: TriParams { p1, q1, p2, q2 },
                    kappa_coeffs: in_vec(&kappa)?,
                    q: in_rat(&q)?,
                    q1: in_rat(&q1_coeff)?,
                    q2: in_rat(&q2_coeff)?,
                },
                start: Position::new(in_vec(&start)?),
                prefix,
            })
        }
    };
    Ok((id, env.omega, cert))
}
