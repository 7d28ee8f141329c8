use num_traits::{One, Signed, Zero};

use super::linear::{combine, find_witness, has_strict_weight, Constraint, LinearForm, Witness};
use super::{DivergenceError, WitnessTarget};
use crate::game::{reflect, FiringSequence};
use crate::gcm::GcmGraph;
use crate::position::Position;
use crate::rational::Rational;

/// A cycle that maps a polyhedral region into itself, with a witness for
/// every firing and for every region constraint after the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRegionCertificate {
    pub region: Vec<Constraint>,
    pub start: Position,
    pub prefix: FiringSequence,
    pub cycle: FiringSequence,
    pub step_witnesses: Vec<Witness>,
    pub closure_witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub landing: Position,
    /// Value of each node after the cycle, as a form in the values before it.
    pub output_forms: Vec<LinearForm>,
    /// The form fired at each step of the cycle.
    pub fired_forms: Vec<LinearForm>,
}

/// Rows are node values after firing `cycle` from a generic position.
pub fn push_forms(g: &GcmGraph, cycle: &[usize]) -> (Vec<LinearForm>, Vec<LinearForm>) {
    let n = g.n();
    // columns[k] holds the coefficient of original coordinate k in every node value
    let mut columns: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    if j == k {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let row = |columns: &[Vec<Rational>], j: usize| -> LinearForm {
        columns.iter().map(|c| c[j].clone()).collect()
    };
    let mut fired = Vec::with_capacity(cycle.len());
    for &s in cycle {
        fired.push(row(&columns, s - 1));
        for c in columns.iter_mut() {
            reflect(g, c, s);
        }
    }
    let output = (0..n).map(|j| row(&columns, j)).collect();
    (output, fired)
}

/// The form c(L(λ)) for constraint coefficients c and output forms L.
fn compose(c: &[Rational], output: &[LinearForm]) -> LinearForm {
    let n = output.len();
    (0..n)
        .map(|k| {
            c.iter()
                .zip(output)
                .fold(Rational::zero(), |s, (cj, l)| s + cj * &l[k])
        })
        .collect()
}

/// The closure targets: each region constraint composed with the cycle's
/// output, paired with whether it must be strict.
fn closure_targets(region: &[Constraint], output: &[LinearForm]) -> Vec<(LinearForm, bool)> {
    region
        .iter()
        .map(|c| (compose(&c.coeffs, output), c.strict))
        .collect()
}

/// Builds a certificate by searching for every witness. `None` if some
/// witness does not exist among basic combinations.
pub fn build_region_certificate(
    g: &GcmGraph,
    region: Vec<Constraint>,
    start: Position,
    prefix: FiringSequence,
    cycle: FiringSequence,
) -> Option<InvariantRegionCertificate> {
    let (output, fired) = push_forms(g, &cycle);
    let step_witnesses = fired
        .iter()
        .map(|f| find_witness(&region, f, true))
        .collect::<Option<Vec<_>>>()?;
    let closure_witnesses = closure_targets(&region, &output)
        .iter()
        .map(|(t, strict)| find_witness(&region, t, *strict))
        .collect::<Option<Vec<_>>>()?;
    Some(InvariantRegionCertificate {
        region,
        start,
        prefix,
        cycle,
        step_witnesses,
        closure_witnesses,
    })
}

fn check_witness(
    region: &[Constraint],
    witness: &Witness,
    target: &[Rational],
    strict: bool,
    at: WitnessTarget,
) -> Result<(), DivergenceError> {
    let combination = combine(region, witness, target.len());
    let bad_index = witness.keys().any(|&k| k >= region.len());
    if bad_index || witness.values().any(Signed::is_negative) || combination != target {
        return Err(DivergenceError::WitnessMismatch {
            at,
            expected: target.to_vec(),
            combination,
        });
    }
    if strict && !has_strict_weight(region, witness) {
        return Err(DivergenceError::NonStrictWitness { at });
    }
    Ok(())
}

pub fn verify_invariant_region(
    g: &GcmGraph,
    cert: &InvariantRegionCertificate,
) -> Result<RegionReport, DivergenceError> {
    let n = g.n();
    let dims_ok = cert.start.len() == n
        && cert.region.iter().all(|c| c.coeffs.len() == n)
        && cert.step_witnesses.len() == cert.cycle.len()
        && cert.closure_witnesses.len() == cert.region.len()
        && !cert.cycle.is_empty();
    if !dims_ok {
        return Err(DivergenceError::DimensionMismatch);
    }
    if let Some(&s) = cert
        .prefix
        .iter()
        .chain(&cert.cycle)
        .find(|&&s| s == 0 || s > n)
    {
        return Err(DivergenceError::IndexOutOfRange { index: s, nodes: n });
    }

    let mut current = cert.start.values().to_vec();
    for (k, &s) in cert.prefix.iter().enumerate() {
        if !current[s - 1].is_positive() {
            return Err(DivergenceError::PrefixIllegal { step: k + 1 });
        }
        reflect(g, &mut current, s);
    }
    if let Some(k) = cert.region.iter().position(|c| !c.holds(&current)) {
        return Err(DivergenceError::LandingOutsideRegion { constraint: k + 1 });
    }

    let (output, fired) = push_forms(g, &cert.cycle);
    for (k, (form, w)) in fired.iter().zip(&cert.step_witnesses).enumerate() {
        check_witness(&cert.region, w, form, true, WitnessTarget::Step(k + 1))?;
    }
    for (k, ((form, strict), w)) in closure_targets(&cert.region, &output)
        .iter()
        .zip(&cert.closure_witnesses)
        .enumerate()
    {
        check_witness(
            &cert.region,
            w,
            form,
            *strict,
            WitnessTarget::Closure(k + 1),
        )?;
    }
    Ok(RegionReport {
        landing: Position::new(current),
        output_forms: output,
        fired_forms: fired,
    })
}
