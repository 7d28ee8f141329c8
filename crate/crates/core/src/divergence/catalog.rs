//! The certificate for every (family, fundamental position) pair. Entries
//! obtained by a graph symmetry are generated from their source entry and
//! the relabeling is checked against the graph.

use super::data::{self, ParamDataRef};
use super::linear::Constraint;
use super::region::build_region_certificate;
use super::{build_kappa_certificate, DivergenceCertificate, DivergenceError, KappaEntry};
use super::{InvariantRegionCertificate, ParametricLoopCertificate, ParametricPosition};
use crate::catalog::{build_inadmissible, InadmissibleFamilyId, NodeRelabeling};
use crate::game::FiringSequence;
use crate::gcm::GcmGraph;
use crate::position::Position;
use crate::rational::{int, ints, Rational};

use InadmissibleFamilyId as Id;

fn up(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn down(a: usize, b: usize) -> Vec<usize> {
    if a < b {
        Vec::new()
    } else {
        (b..=a).rev().collect()
    }
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.concat()
}

fn twice(s: Vec<usize>) -> Vec<usize> {
    [s.as_slice(), s.as_slice()].concat()
}

fn sparse(n: usize, entries: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![int(0); n];
    for &(k, x) in entries {
        v[k - 1] = int(x);
    }
    v
}

/// Loop certificate from ω_i with no prefix: u = ω_i.
fn simple(n: usize, i: usize, slope: Vec<Rational>, cycle: Vec<usize>) -> DivergenceCertificate {
    let start = Position::fundamental(n, i);
    DivergenceCertificate::Parametric(ParametricLoopCertificate {
        family: ParametricPosition::new(start.values().to_vec(), slope),
        start,
        prefix: Vec::new(),
        cycle,
        repeats: 1,
    })
}

fn from_data(n: usize, i: usize, d: ParamDataRef) -> DivergenceCertificate {
    DivergenceCertificate::Parametric(ParametricLoopCertificate {
        start: Position::fundamental(n, i),
        prefix: d.prefix.to_vec(),
        family: ParametricPosition::new(ints(d.landing), ints(d.slope)),
        cycle: d.cycle.to_vec(),
        repeats: d.repeats,
    })
}

enum Source {
    Direct(DivergenceCertificate),
    /// The image of the certificate for ω_base under a graph symmetry.
    Image {
        base: usize,
        sigma: Vec<usize>,
    },
}

fn swap12(n: usize) -> Vec<usize> {
    let mut s: Vec<usize> = (1..=n).collect();
    s.swap(0, 1);
    s
}

fn reversal(n: usize) -> Vec<usize> {
    (1..=n).rev().collect()
}

fn transpositions(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut s: Vec<usize> = (1..=n).collect();
    for &(a, b) in pairs {
        s.swap(a - 1, b - 1);
    }
    s
}

fn source(id: Id, g: &GcmGraph, i: usize) -> Result<Source, DivergenceError> {
    use Source::{Direct, Image};
    let n = g.n();
    let src = match id {
        Id::ATilde(_) if i == 1 => Direct(simple(
            n,
            1,
            sparse(n, &[(1, 2), (2, -1), (n, -1)]),
            cat(&[&up(1, n), &down(n - 1, 2)]),
        )),
        Id::ATilde(_) => Image {
            base: 1,
            sigma: (1..=n).map(|j| (j - 1 + i - 1) % n + 1).collect(),
        },

        Id::BTildeFork(_) | Id::CTildeFork(_) if i == 2 => Image {
            base: 1,
            sigma: swap12(n),
        },
        Id::BTildeFork(4) if i == 1 => {
            let d = data::ParamDataRef {
                prefix: &[1, 3, 2, 4, 3],
                landing: &[2, 1, -2, 2],
                slope: &[1, 1, -2, 2],
                cycle: &[1, 2, 4, 3, 1, 2, 4, 3],
                repeats: 1,
            };
            Direct(from_data(n, 1, d))
        }
        Id::BTildeFork(_) | Id::CTildeFork(_) => Direct(fork_entry(id, n, i)),

        Id::BTildePath(3) => match i {
            1 => Direct(simple(3, 1, ints(&[2, -1, 0]), vec![1, 2, 3, 2])),
            2 => Direct(simple(3, 2, ints(&[-4, 2, 0]), vec![2, 3, 2, 1])),
            _ => Image {
                base: 1,
                sigma: reversal(3),
            },
        },
        Id::BTildePath(_) | Id::CTildeA(_) if i == n => Image {
            base: 1,
            sigma: reversal(n),
        },
        Id::BTildePath(_) | Id::CTildeA(_) | Id::CTildeB(_) => Direct(path_entry(id, n, i)),

        Id::DTildeStar => match i {
            1 => Direct(from_data(
                5,
                1,
                data::ParamDataRef {
                    prefix: &[1, 3, 2, 4, 5, 3],
                    landing: &[2, 1, -2, 1, 1],
                    slope: &[1, 1, -2, 1, 1],
                    cycle: &[1, 2, 4, 5, 3, 1, 2, 4, 5, 3],
                    repeats: 1,
                },
            )),
            3 => Direct(simple(
                5,
                3,
                ints(&[-1, -1, 2, -1, -1]),
                vec![3, 1, 2, 4, 5],
            )),
            2 => Image {
                base: 1,
                sigma: swap12(5),
            },
            4 => Image {
                base: 1,
                sigma: transpositions(5, &[(1, 4), (2, 5)]),
            },
            _ => Image {
                base: 1,
                sigma: transpositions(5, &[(1, 5), (2, 4)]),
            },
        },
        Id::DTilde(_) => d_tilde_entry(n, i),

        Id::ETilde7Node => match i {
            1 => Direct(from_data(7, 1, data::E7_W1)),
            4 => Direct(from_data(7, 4, data::E7_W4)),
            5 => Direct(from_data(7, 5, data::E7_W5)),
            2 => Image {
                base: 1,
                sigma: transpositions(7, &[(1, 2), (3, 4)]),
            },
            3 => Image {
                base: 4,
                sigma: transpositions(7, &[(1, 2), (3, 4)]),
            },
            7 => Image {
                base: 1,
                sigma: transpositions(7, &[(1, 7), (4, 6)]),
            },
            _ => Image {
                base: 4,
                sigma: transpositions(7, &[(1, 7), (4, 6)]),
            },
        },
        Id::ETilde8Node => {
            let table = [
                data::E8_W1,
                data::E8_W2,
                data::E8_W3,
                data::E8_W4,
                data::E8_W5,
            ];
            if i <= 5 {
                Direct(from_data(8, i, table[i - 1]))
            } else {
                let sigma = transpositions(8, &[(1, 8), (3, 7), (4, 6)]);
                Image {
                    base: sigma[i - 1],
                    sigma,
                }
            }
        }
        Id::ETilde9Node => {
            let table = [
                data::E9_W1,
                data::E9_W2,
                data::E9_W3,
                data::E9_W4,
                data::E9_W5,
                data::E9_W6,
                data::E9_W7,
                data::E9_W8,
                data::E9_W9,
            ];
            Direct(from_data(9, i, table[i - 1]))
        }
        Id::FTildeA => Direct(from_data(
            5,
            i,
            [
                data::FA_W1,
                data::FA_W2,
                data::FA_W3,
                data::FA_W4,
                data::FA_W5,
            ][i - 1],
        )),
        Id::FTildeB => Direct(from_data(
            5,
            i,
            [
                data::FB_W1,
                data::FB_W2,
                data::FB_W3,
                data::FB_W4,
                data::FB_W5,
            ][i - 1],
        )),

        Id::GTilde(k) => Direct(g_tilde_entry(g, k, i)?),
        Id::Sq(k) => Direct(cycle_entry(g, square_region(k), square_prefix(k, i), i)?),
        Id::Pent1 => {
            let region = vec![
                Constraint::from_ints(&[0, 1, 0, 0, 0], false),
                Constraint::from_ints(&[0, 0, 1, 0, 0], false),
                Constraint::from_ints(&[0, 0, 0, 1, 0], false),
                Constraint::from_ints(&[0, 0, 0, 0, -1], false),
                Constraint::from_ints(&[1, 0, 0, 0, 1], true),
            ];
            let prefix = match i {
                1 => vec![],
                2 => up(2, 5),
                3 => cat(&[&[3, 4, 5], &up(1, 5)]),
                4 => cat(&[&[4, 5], &up(1, 5)]),
                _ => cat(&[&[5], &up(1, 5)]),
            };
            Direct(cycle_entry(g, region, prefix, i)?)
        }
        Id::Tri(v, p) => {
            let certificate = build_kappa_certificate(v, p)?;
            let prefix = if i == 3 { vec![3] } else { vec![] };
            Direct(DivergenceCertificate::Kappa(KappaEntry {
                certificate,
                start: Position::fundamental(3, i),
                prefix,
            }))
        }
    };
    Ok(src)
}

/// B̃ and C̃ with a fork of nodes 1 and 2 at node 3 (ω_1, ω_3, ..., ω_n).
fn fork_entry(id: Id, n: usize, i: usize) -> DivergenceCertificate {
    let tail = |i: usize| cat(&[&up(i, n), &down(n - 1, 3), &[2, 1], &up(3, i - 1)]);
    match i {
        1 => simple(
            n,
            1,
            sparse(n, &[(1, 2), (2, -2)]),
            twice(cat(&[&[1], &up(3, n), &down(n - 1, 3), &[2]])),
        ),
        3 => simple(n, 3, sparse(n, &[(1, -2), (2, -2), (3, 2)]), tail(3)),
        _ if i == n && matches!(id, Id::BTildeFork(_)) => {
            simple(n, n, sparse(n, &[(n - 1, -1), (n, 2)]), tail(n))
        }
        _ => simple(n, i, sparse(n, &[(i - 1, -2), (i, 2)]), tail(i)),
    }
}

/// B̃, C̃ drawn as paths with a double edge at each end.
fn path_entry(id: Id, n: usize, i: usize) -> DivergenceCertificate {
    let middle = |i: usize| cat(&[&down(i, 1), &up(2, n), &down(n - 1, i + 1)]);
    match (id, i) {
        (Id::CTildeA(_), 1) => simple(
            n,
            1,
            sparse(n, &[(1, 2), (2, -2)]),
            cat(&[&up(1, n), &down(n - 1, 2)]),
        ),
        (_, 1) => simple(
            n,
            1,
            sparse(n, &[(1, 2), (2, -1)]),
            cat(&[&up(1, n), &down(n - 1, 2)]),
        ),
        (Id::BTildePath(_), _) if i == n - 1 => {
            simple(n, i, sparse(n, &[(n - 1, 2), (n, -4)]), middle(i))
        }
        (Id::CTildeB(_), _) if i == n => simple(
            n,
            n,
            sparse(n, &[(n - 1, -2), (n, 2)]),
            cat(&[&down(n, 1), &up(2, n - 1)]),
        ),
        _ => simple(n, i, sparse(n, &[(i, 2), (i + 1, -2)]), middle(i)),
    }
}

fn d_tilde_entry(n: usize, i: usize) -> Source {
    let core = |from: usize| cat(&[&up(from, n - 2), &[n - 1, n], &down(n - 2, 3)]);
    match i {
        1 => Source::Direct(simple(
            n,
            1,
            sparse(n, &[(1, 2), (2, -2)]),
            twice(cat(&[&[1], &core(3), &[2]])),
        )),
        2 => Source::Image {
            base: 1,
            sigma: swap12(n),
        },
        3 => Source::Direct(simple(
            n,
            3,
            sparse(n, &[(1, -2), (2, -2), (3, 2)]),
            cat(&[&core(3), &[2, 1]]),
        )),
        _ if i >= n - 2 => Source::Image {
            base: n + 1 - i,
            sigma: reversal(n),
        },
        _ => {
            let cycle = cat(&[
                &up(i, n - 2),
                &[n - 1, n],
                &down(n - 2, i + 1),
                &down(i - 1, 3),
                &[2, 1],
                &up(3, i - 1),
            ]);
            Source::Direct(simple(
                n,
                i,
                sparse(n, &[(i - 1, -1), (i, 2), (i + 1, -1)]),
                cycle,
            ))
        }
    }
}

fn g_tilde_entry(g: &GcmGraph, k: u8, i: usize) -> Result<DivergenceCertificate, DivergenceError> {
    let c = Constraint::from_ints;
    let short = vec![3, 2, 1, 2, 1, 2];
    let long = vec![1, 2, 1, 2, 1, 3, 2, 3];
    let (region, cycle, prefix) = match k {
        1 | 4 => {
            let last = if k == 1 { [1, 2, 1] } else { [3, 2, 1] };
            let prefix = match i {
                1 => vec![1, 2, 1, 2, 1],
                2 => vec![2, 1, 2, 1, 2],
                _ => vec![],
            };
            (
                vec![c(&[-1, 0, 0], false), c(&[0, -1, 0], false), c(&last, true)],
                short,
                prefix,
            )
        }
        _ => {
            let last: [i64; 3] = match k {
                2 | 3 => [1, 1, 1],
                5 => [2, 4, 1],
                _ => [3, 6, 1],
            };
            let region = vec![
                c(&[0, -1, 0], false),
                c(&[0, 0, -1], false),
                c(&[1, 3, 0], true),
                c(&last, true),
            ];
            let (cycle, prefix) = if k == 2 || k == 5 {
                let prefix = match i {
                    2 => vec![2, 3, 2],
                    3 => vec![3, 2, 3],
                    _ => vec![],
                };
                (long, prefix)
            } else {
                let prefix = match i {
                    2 => vec![2, 3, 2, 3, 2],
                    3 => vec![3, 2, 3, 2, 3],
                    _ => vec![],
                };
                (cat(&[&long, &[2, 3]]), prefix)
            };
            (region, cycle, prefix)
        }
    };
    region_entry(g, region, prefix, cycle, i)
}

fn square_region(k: u8) -> Vec<Constraint> {
    let c = Constraint::from_ints;
    match k {
        1 => vec![
            c(&[0, 1, 0, 0], false),
            c(&[0, 0, 1, 0], false),
            c(&[0, 0, 0, -1], false),
            c(&[1, 0, 0, 1], true),
        ],
        _ => {
            let last = if k == 2 { [3, 1, 1, 2] } else { [3, 1, 1, 1] };
            vec![
                c(&[1, 0, 0, 0], true),
                c(&[0, 1, 0, 0], false),
                c(&[0, 0, 1, 0], false),
                c(&[0, 0, 0, -1], false),
                c(&last, true),
            ]
        }
    }
}

fn square_prefix(k: u8, i: usize) -> FiringSequence {
    match (k, i) {
        (_, 1) => vec![],
        (_, 2) => vec![2, 3, 4],
        (1, 3) => vec![3, 4, 1, 2, 3, 4],
        (1, _) => vec![4, 1, 2, 3, 4],
        (_, 3) => vec![3, 4],
        _ => vec![4],
    }
}

/// Region certificate whose cycle fires every node of a cycle graph once, in order.
fn cycle_entry(
    g: &GcmGraph,
    region: Vec<Constraint>,
    prefix: FiringSequence,
    i: usize,
) -> Result<DivergenceCertificate, DivergenceError> {
    region_entry(g, region, prefix, up(1, g.n()), i)
}

fn region_entry(
    g: &GcmGraph,
    region: Vec<Constraint>,
    prefix: FiringSequence,
    cycle: FiringSequence,
    i: usize,
) -> Result<DivergenceCertificate, DivergenceError> {
    let start = Position::fundamental(g.n(), i);
    match build_region_certificate(
        g,
        region.clone(),
        start.clone(),
        prefix.clone(),
        cycle.clone(),
    ) {
        Some(c) => Ok(DivergenceCertificate::Region(c)),
        // Keep the certificate with empty witnesses so that the verifier
        // reports the first missing one.
        None => Ok(DivergenceCertificate::Region(InvariantRegionCertificate {
            step_witnesses: vec![Default::default(); cycle.len()],
            closure_witnesses: vec![Default::default(); region.len()],
            region,
            start,
            prefix,
            cycle,
        })),
    }
}

/// Relabels every position, sequence and form of a certificate by σ.
fn relabel(cert: DivergenceCertificate, sigma: &NodeRelabeling) -> DivergenceCertificate {
    let move_vec = |v: &[Rational]| {
        let mut out = v.to_vec();
        for (j, x) in v.iter().enumerate() {
            out[sigma.apply(j + 1) - 1] = x.clone();
        }
        out
    };
    let move_seq = |s: &[usize]| s.iter().map(|&x| sigma.apply(x)).collect::<Vec<_>>();
    match cert {
        DivergenceCertificate::Parametric(c) => {
            DivergenceCertificate::Parametric(ParametricLoopCertificate {
                start: Position::new(move_vec(c.start.values())),
                prefix: move_seq(&c.prefix),
                family: ParametricPosition::new(
                    move_vec(&c.family.intercept),
                    move_vec(&c.family.slope),
                ),
                cycle: move_seq(&c.cycle),
                repeats: c.repeats,
            })
        }
        DivergenceCertificate::Region(c) => {
            DivergenceCertificate::Region(InvariantRegionCertificate {
                region: c
                    .region
                    .iter()
                    .map(|k| Constraint::new(move_vec(&k.coeffs), k.strict))
                    .collect(),
                start: Position::new(move_vec(c.start.values())),
                prefix: move_seq(&c.prefix),
                cycle: move_seq(&c.cycle),
                step_witnesses: c.step_witnesses,
                closure_witnesses: c.closure_witnesses,
            })
        }
        DivergenceCertificate::Kappa(k) => DivergenceCertificate::Kappa(k),
    }
}

/// The certificate for the fundamental position ω_i of a catalog graph.
pub fn certificate_catalog(
    id: InadmissibleFamilyId,
    i: usize,
) -> Result<DivergenceCertificate, DivergenceError> {
    let id = id.validate()?;
    let g = build_inadmissible(id)?;
    if i == 0 || i > g.n() {
        return Err(DivergenceError::IndexOutOfRange {
            index: i,
            nodes: g.n(),
        });
    }
    match source(id, &g, i)? {
        Source::Direct(c) => Ok(c),
        Source::Image { base, sigma } => {
            let sigma = NodeRelabeling::new(sigma).expect("catalog symmetries are permutations");
            assert!(
                sigma.preserves(&g, &g),
                "catalog symmetry {sigma} is not an automorphism of {id}"
            );
            assert_eq!(
                sigma.apply(base),
                i,
                "catalog symmetry {sigma} does not send {base} to {i}"
            );
            Ok(relabel(certificate_catalog(id, base)?, &sigma))
        }
    }
}
