//! The parametric triangles, whose rounds have value-dependent length and
//! so are checked against closed forms on exact samples.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DivergenceError;
use crate::catalog::{build_inadmissible, InadmissibleFamilyId, TriParams, TriVariant};
use crate::game::reflect;
use crate::gcm::GcmGraph;
use crate::rational::{frac, int, Rational};

/// Firings allowed on the two right-hand nodes within one round.
pub const ROUND_BOUND: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaCertificate {
    pub variant: TriVariant,
    pub params: TriParams,
    /// κ = kappa_coeffs · (a, b, c).
    pub kappa_coeffs: Vec<Rational>,
    pub q: Rational,
    pub q1: Rational,
    pub q2: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaReport {
    pub samples: usize,
    /// Longest run of right-hand firings seen in one round.
    pub longest_round: usize,
}

/// Q, Q1, Q2 together with the quantities whose signs prove Q > 0, Q1 ≥ 0, Q2 ≥ 0.
fn q_terms(v: TriVariant, p: &TriParams) -> (Rational, Rational, Rational, Vec<Rational>) {
    let (p1, q1, p2, q2) = (int(p.p1), int(p.q1), int(p.p2), int(p.q2));
    let inv1 = frac(1, p.q1);
    let inv2 = frac(1, p.q2);
    let one = int(1);
    match v {
        TriVariant::One => {
            let x = &p2 - &inv2;
            let y = &p1 - &inv1;
            let z = &p1 * &q1 + &p2 * &q2 - &one;
            let w1 = &p1 * &q1 - &one;
            let w2 = &p2 * &q2 - &one;
            let q = &q1 * &x + &q2 * &y + &z;
            let qa = &inv2 * (&q1 * &x + &w1);
            let qb = &inv1 * (&q2 * &y + &w2);
            (q, qa, qb, vec![x, y, z, w1, w2])
        }
        TriVariant::Two | TriVariant::Three => {
            let (m2, m1, c) = if v == TriVariant::Two {
                (2, 1, 2)
            } else {
                (6, 2, 4)
            };
            let x = int(m2) * &p2 - &inv1;
            let y = int(m1) * &p1 - &inv2;
            let z = int(c) * (&p1 * &q1 + &p2 * &q2) - &one;
            let w1 = int(c) * &p2 * &q2 - &one;
            let w2 = int(c) * &p1 * &q1 - &one;
            let q = &q1 * &x + &q2 * &y + &z;
            let qa = &inv1 * (&q2 * &y + &w1);
            let qb = &inv2 * (&q1 * &x + &w2);
            (q, qa, qb, vec![x, y, z, w1, w2])
        }
    }
}

fn kappa_coefficients(v: TriVariant, p: &TriParams) -> Vec<Rational> {
    let (p1, p2) = (int(p.p1), int(p.p2));
    let inv1 = frac(1, p.q1);
    let inv2 = frac(1, p.q2);
    let (ka, kb) = match v {
        TriVariant::One => (&p1 + &p2 - &inv2, &p1 + &p2 - &inv1),
        TriVariant::Two => (int(2) * (&p1 + &p2) - &inv1, &p1 + int(2) * &p2 - &inv2),
        TriVariant::Three => (
            int(4) * &p1 + int(6) * &p2 - &inv1,
            int(2) * &p1 + int(4) * &p2 - &inv2,
        ),
    };
    vec![ka, kb, int(1)]
}

pub fn build_kappa_certificate(
    variant: TriVariant,
    params: TriParams,
) -> Result<KappaCertificate, DivergenceError> {
    InadmissibleFamilyId::Tri(variant, params)
        .validate()
        .map_err(|e| DivergenceError::BadParameters(e.to_string()))?;
    let (q, q1, q2, parts) = q_terms(variant, &params);
    if parts.iter().any(Signed::is_negative)
        || !q.is_positive()
        || q1.is_negative()
        || q2.is_negative()
    {
        return Err(DivergenceError::NonpositiveQ { q, q1, q2 });
    }
    Ok(KappaCertificate {
        variant,
        kappa_coeffs: kappa_coefficients(variant, &params),
        params,
        q,
        q1,
        q2,
    })
}

impl KappaCertificate {
    pub fn kappa(&self, x: &[Rational]) -> Rational {
        self.kappa_coeffs
            .iter()
            .zip(x)
            .fold(Rational::zero(), |s, (k, v)| s + k * v)
    }

    /// a ≥ 0, b ≥ 0, c ≤ 0 and κ > 0.
    pub fn in_region(&self, x: &[Rational]) -> bool {
        !x[0].is_negative()
            && !x[1].is_negative()
            && !x[2].is_positive()
            && self.kappa(x).is_positive()
    }

    /// The position predicted after one round from (a, b, c).
    pub fn closed_form(&self, x: &[Rational]) -> Vec<Rational> {
        let (a, b) = (&x[0], &x[1]);
        let k = self.kappa(x);
        let (q1, q2) = (int(self.params.q1), int(self.params.q2));
        let (r1, r2) = (frac(1, self.params.q1), frac(1, self.params.q2));
        match self.variant {
            TriVariant::One => {
                let a1 = &q1 * (&k + &r2 * a);
                let b1 = &q2 * (&k + &r1 * b);
                let c1 = -&k - &r2 * a - &r1 * b;
                vec![a1, b1, c1]
            }
            _ => {
                let a1 = &q1 * (&k + &r2 * b);
                let b1 = &q2 * (&k + &r1 * a);
                let c1 = -&k - &r1 * a - &r2 * b;
                vec![a1, b1, c1]
            }
        }
    }
}

/// One round: fire node 1 or node 2 while either is positive, then node 3.
/// Returns the new position and the number of right-hand firings; `sample`
/// labels errors.
pub fn play_round(
    g: &GcmGraph,
    x: &[Rational],
    sample: usize,
) -> Result<(Vec<Rational>, usize), DivergenceError> {
    let mut cur = x.to_vec();
    let mut count = 0;
    loop {
        let next = if cur[0].is_positive() {
            1
        } else if cur[1].is_positive() {
            2
        } else {
            break;
        };
        if count == ROUND_BOUND {
            return Err(DivergenceError::RoundBound { sample });
        }
        reflect(g, &mut cur, next);
        count += 1;
    }
    if !cur[2].is_positive() {
        return Err(DivergenceError::ClosedFormMismatch { sample });
    }
    reflect(g, &mut cur, 3);
    Ok((cur, count))
}

/// Plays one round from `x` and checks the closed forms, the region and the
/// κ recurrence.
pub fn check_round(
    g: &GcmGraph,
    cert: &KappaCertificate,
    x: &[Rational],
    sample: usize,
) -> Result<(Vec<Rational>, usize), DivergenceError> {
    let (next, count) = play_round(g, x, sample)?;
    if next != cert.closed_form(x) {
        return Err(DivergenceError::ClosedFormMismatch { sample });
    }
    if !cert.in_region(&next) {
        return Err(DivergenceError::RegionEscape { sample });
    }
    let expected = &cert.q * cert.kappa(x) + &cert.q1 * &x[0] + &cert.q2 * &x[1];
    if cert.kappa(&next) != expected {
        return Err(DivergenceError::ClosedFormMismatch { sample });
    }
    Ok((next, count))
}

/// A random point of the region: a, b with numerators 0..=50 and
/// denominators 1..=9, then c between -(κ-part of a, b) and 0.
fn sample_point<R: Rng>(cert: &KappaCertificate, rng: &mut R) -> Vec<Rational> {
    loop {
        let a = frac(rng.gen_range(0..=50), rng.gen_range(1..=9));
        let b = frac(rng.gen_range(0..=50), rng.gen_range(1..=9));
        let head = &cert.kappa_coeffs[0] * &a + &cert.kappa_coeffs[1] * &b;
        let c = -(&head * frac(rng.gen_range(0..=99), 100));
        let x = vec![a, b, c];
        if cert.in_region(&x) {
            return x;
        }
    }
}

pub fn verify_kappa(
    g: &GcmGraph,
    cert: &KappaCertificate,
    samples: usize,
    seed: u64,
) -> Result<KappaReport, DivergenceError> {
    let expected = build_inadmissible(InadmissibleFamilyId::Tri(cert.variant, cert.params))
        .map_err(|e| DivergenceError::BadParameters(e.to_string()))?;
    if g != &expected {
        return Err(DivergenceError::GraphMismatch);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut longest = 0;
    for sample in 1..=samples {
        let x = sample_point(cert, &mut rng);
        let (_, count) = check_round(g, cert, &x, sample)?;
        longest = longest.max(count);
    }
    Ok(KappaReport {
        samples,
        longest_round: longest,
    })
}
