use numgame_core::divergence::*;
use numgame_core::rational::{frac, int, ints};
use numgame_core::*;

use InadmissibleFamilyId as Id;

fn graph(id: Id) -> GcmGraph {
    build_inadmissible(id).unwrap()
}

fn parametric(id: Id, omega: usize) -> ParametricLoopCertificate {
    match certificate_catalog(id, omega).unwrap() {
        DivergenceCertificate::Parametric(c) => c,
        other => panic!("{id} omega{omega} is {}", other.kind()),
    }
}

fn region(id: Id, omega: usize) -> InvariantRegionCertificate {
    match certificate_catalog(id, omega).unwrap() {
        DivergenceCertificate::Region(c) => c,
        other => panic!("{id} omega{omega} is {}", other.kind()),
    }
}

fn tri(v: TriVariant, p1: i64, q1: i64, p2: i64, q2: i64) -> (TriVariant, TriParams) {
    (v, TriParams { p1, q1, p2, q2 })
}

#[test]
fn a_tilde_cycle_family() {
    for n in 3..=7 {
        let c = parametric(Id::ATilde(n), 1);
        assert!(c.prefix.is_empty());
        assert_eq!(c.repeats, 1);
        let mut want_cycle: Vec<usize> = (1..=n).collect();
        want_cycle.extend((2..n).rev());
        assert_eq!(c.cycle, want_cycle);
        let mut u = vec![int(0); n];
        let mut v = vec![int(0); n];
        u[0] = int(1);
        v[0] = int(2);
        v[1] = int(-1);
        v[n - 1] = int(-1);
        assert_eq!(c.family, ParametricPosition::new(u, v));
    }
}

#[test]
fn a_tilde_three_steps() {
    let c = parametric(Id::ATilde(3), 1);
    let report = verify_parametric(&graph(Id::ATilde(3)), &c).unwrap();
    let forms: Vec<(i64, i64)> = report
        .steps
        .iter()
        .map(|s| {
            (
                s.alpha.to_integer().try_into().unwrap(),
                s.beta.to_integer().try_into().unwrap(),
            )
        })
        .collect();
    assert_eq!(forms, vec![(2, 1), (1, 1), (2, 2), (1, 1)]);
    for s in &report.steps {
        assert!(s.alpha >= int(0) && s.beta > int(0));
    }
}

#[test]
fn broken_certificate_reports_the_failing_form() {
    let g = graph(Id::ATilde(3));
    let broken = ParametricLoopCertificate {
        start: Position::from_ints(&[0, 0, 0]),
        prefix: vec![],
        family: ParametricPosition::new(ints(&[0, 0, 0]), ints(&[1, -1, 0])),
        cycle: vec![2],
        repeats: 1,
    };
    assert_eq!(
        verify_parametric(&g, &broken),
        Err(DivergenceError::LoopIllegal {
            step: 1,
            alpha: int(-1),
            beta: int(0)
        })
    );
}

#[test]
fn family_mismatch_is_caught() {
    let g = graph(Id::ATilde(3));
    let mut c = parametric(Id::ATilde(3), 1);
    c.family.slope[2] = int(-2);
    assert!(matches!(
        verify_parametric(&g, &c),
        Err(DivergenceError::FamilyMismatch { .. } | DivergenceError::LoopIllegal { .. })
    ));
    let mut c = parametric(Id::BTildeFork(4), 1);
    c.prefix.swap(0, 1);
    assert_eq!(
        verify_parametric(&graph(Id::BTildeFork(4)), &c),
        Err(DivergenceError::PrefixIllegal { step: 1 })
    );
}

#[test]
fn c_tilde_a_three() {
    let c = parametric(Id::CTildeA(3), 1);
    assert_eq!(
        c.family,
        ParametricPosition::new(ints(&[1, 0, 0]), ints(&[2, -2, 0]))
    );
    assert_eq!(c.cycle, vec![1, 2, 3, 2]);
    verify_parametric(&graph(Id::CTildeA(3)), &c).unwrap();
    assert_eq!(c.family.at(1), Position::from_ints(&[3, -2, 0]));
}

#[test]
fn b_tilde_fork_four() {
    let c = parametric(Id::BTildeFork(4), 1);
    assert_eq!(c.prefix, vec![1, 3, 2, 4, 3]);
    assert_eq!(
        c.family,
        ParametricPosition::new(ints(&[2, 1, -2, 2]), ints(&[1, 1, -2, 2]))
    );
    assert_eq!(c.cycle, vec![1, 2, 4, 3, 1, 2, 4, 3]);
    assert_eq!(c.repeats, 1);
    verify_parametric(&graph(Id::BTildeFork(4)), &c).unwrap();
}

#[test]
fn e_tilde_nine_omega_five() {
    let c = parametric(Id::ETilde9Node, 5);
    assert_eq!(c.prefix.len(), 20);
    assert_eq!(c.cycle.len(), 19);
    assert_eq!(c.repeats, 6);
    assert_eq!(
        c.family,
        ParametricPosition::new(
            ints(&[0, 3, 0, 0, 0, -1, 0, 0, 0]),
            ints(&[0, 15, 0, -5, 0, 0, -5, 0, 0])
        )
    );
    verify_parametric(&graph(Id::ETilde9Node), &c).unwrap();
}

#[test]
fn d_tilde_star_and_f_tilde_families() {
    let c = parametric(Id::DTildeStar, 3);
    assert_eq!(
        c.family,
        ParametricPosition::new(ints(&[0, 0, 1, 0, 0]), ints(&[-1, -1, 2, -1, -1]))
    );
    let c = parametric(Id::FTildeA, 2);
    assert_eq!(
        c.family,
        ParametricPosition::new(ints(&[0, 1, 0, 0, 0]), ints(&[-2, 4, -2, -2, -2]))
    );
}

#[test]
fn g_tilde_one_output_forms() {
    let c = region(Id::GTilde(1), 3);
    assert_eq!(c.cycle, vec![3, 2, 1, 2, 1, 2]);
    assert_eq!(
        c.region,
        vec![
            Constraint::from_ints(&[-1, 0, 0], false),
            Constraint::from_ints(&[0, -1, 0], false),
            Constraint::from_ints(&[1, 2, 1], true)
        ]
    );
    let report = verify_invariant_region(&graph(Id::GTilde(1)), &c).unwrap();
    assert_eq!(
        report.output_forms,
        vec![ints(&[1, 0, 0]), ints(&[-1, -1, -1]), ints(&[2, 4, 3])]
    );
}

#[test]
fn g_tilde_one_omega_two_landing() {
    let c = region(Id::GTilde(1), 2);
    assert_eq!(c.prefix, vec![2, 1, 2, 1, 2]);
    let report = verify_invariant_region(&graph(Id::GTilde(1)), &c).unwrap();
    assert_eq!(report.landing, Position::from_ints(&[0, -1, 4]));
}

#[test]
fn g_tilde_two_closure_identity() {
    let g = graph(Id::GTilde(2));
    let c = region(Id::GTilde(2), 1);
    let (output, _) = push_forms(&g, &c.cycle);
    let sum: Vec<Rational> = (0..3)
        .map(|k| &output[0][k] + &output[1][k] + &output[2][k])
        .collect();
    // 5(a+b+c) + 2(a+2b) + 2(a+3b)
    assert_eq!(sum, ints(&[9, 15, 5]));
    verify_invariant_region(&g, &c).unwrap();
}

#[test]
fn square_one_output_forms() {
    let c = region(Id::Sq(1), 1);
    assert_eq!(c.cycle, vec![1, 2, 3, 4]);
    let report = verify_invariant_region(&graph(Id::Sq(1)), &c).unwrap();
    assert_eq!(report.output_forms[0], ints(&[4, 2, 1, 1]));
    assert_eq!(report.output_forms[3], ints(&[-3, -1, -1, -1]));
}

#[test]
fn tampered_witnesses_are_rejected() {
    let g = graph(Id::GTilde(1));
    let good = region(Id::GTilde(1), 3);

    let mut c = good.clone();
    let w = c.step_witnesses[0].values_mut().next().unwrap();
    *w += int(1);
    assert!(matches!(
        verify_invariant_region(&g, &c),
        Err(DivergenceError::WitnessMismatch {
            at: WitnessTarget::Step(1),
            ..
        })
    ));

    let mut c = good.clone();
    for k in &mut c.region {
        k.strict = false;
    }
    assert!(matches!(
        verify_invariant_region(&g, &c),
        Err(DivergenceError::NonStrictWitness { .. })
    ));

    let mut c = good;
    c.start = Position::from_ints(&[0, 1, 0]);
    assert!(verify_invariant_region(&g, &c).is_err());
}

#[test]
fn witness_search_is_exact() {
    let region = vec![
        Constraint::from_ints(&[1, 0], false),
        Constraint::from_ints(&[0, 1], true),
    ];
    let target = ints(&[3, 2]);
    let w = find_witness(&region, &target, true).unwrap();
    assert_eq!(combine(&region, &w, 2), target);
    assert!(find_witness(&region, &ints(&[1, 0]), true).is_none());
    assert!(find_witness(&region, &ints(&[-1, 0]), false).is_none());
    let halves = vec![frac(1, 2), frac(3, 4)];
    assert_eq!(
        combine(&region, &find_witness(&region, &halves, true).unwrap(), 2),
        halves
    );
}

#[test]
fn kappa_unit_triangle() {
    let (v, p) = tri(TriVariant::One, 1, 1, 1, 1);
    let k = build_kappa_certificate(v, p).unwrap();
    assert_eq!(k.kappa_coeffs, ints(&[1, 1, 1]));
    assert_eq!(
        (k.q.clone(), k.q1.clone(), k.q2.clone()),
        (int(1), int(0), int(0))
    );
    verify_kappa(&graph(Id::Tri(v, p)), &k, 100, 1).unwrap();
}

#[test]
fn kappa_two_one_one_one() {
    let (v, p) = tri(TriVariant::One, 2, 1, 1, 1);
    let k = build_kappa_certificate(v, p).unwrap();
    assert_eq!(k.kappa_coeffs, ints(&[2, 2, 1]));
    assert_eq!(
        (k.q.clone(), k.q1.clone(), k.q2.clone()),
        (int(3), int(1), int(1))
    );
}

#[test]
fn kappa_omega_three_prefix() {
    for (v, p) in [
        tri(TriVariant::One, 1, 1, 1, 1),
        tri(TriVariant::One, 2, 3, 1, 2),
        tri(TriVariant::One, 3, 2, 2, 3),
    ] {
        let id = Id::Tri(v, p);
        let g = graph(id);
        let k = build_kappa_certificate(v, p).unwrap();
        let entry = match certificate_catalog(id, 3).unwrap() {
            DivergenceCertificate::Kappa(e) => e,
            other => panic!("{}", other.kind()),
        };
        assert_eq!(entry.prefix, vec![3]);
        let landed = play_sequence(&g, &Position::fundamental(3, 3), &entry.prefix).unwrap();
        let x = landed.last_position().values().to_vec();
        assert_eq!(x, ints(&[p.q1, p.q2, -1]));
        assert_eq!(k.kappa(&x), k.q);
    }
}

#[test]
fn kappa_rounds_follow_closed_forms() {
    let (v, p) = tri(TriVariant::Two, 1, 2, 3, 1);
    let g = graph(Id::Tri(v, p));
    let k = build_kappa_certificate(v, p).unwrap();
    let mut x = ints(&[1, 0, 0]);
    for round in 0..5 {
        let (next, _) = play_round(&g, &x, round).unwrap();
        assert_eq!(next, k.closed_form(&x));
        assert!(k.in_region(&next));
        assert_eq!(
            k.kappa(&next),
            &k.q * k.kappa(&x) + &k.q1 * &x[0] + &k.q2 * &x[1]
        );
        x = next;
    }
}

#[test]
fn kappa_rejects_wrong_graph() {
    let (v, p) = tri(TriVariant::One, 1, 1, 1, 1);
    let k = build_kappa_certificate(v, p).unwrap();
    let other = graph(Id::Tri(
        TriVariant::One,
        TriParams {
            p1: 2,
            q1: 1,
            p2: 1,
            q2: 1,
        },
    ));
    assert_eq!(
        verify_kappa(&other, &k, 5, 0),
        Err(DivergenceError::GraphMismatch)
    );
    assert!(matches!(
        build_kappa_certificate(
            TriVariant::Three,
            TriParams {
                p1: 1,
                q1: 2,
                p2: 1,
                q2: 3
            }
        ),
        Err(DivergenceError::BadParameters(_))
    ));
}

#[test]
fn catalog_lookup_errors() {
    assert_eq!(
        certificate_catalog(Id::ATilde(4), 5),
        Err(DivergenceError::IndexOutOfRange { index: 5, nodes: 4 })
    );
    assert!(certificate_catalog(Id::ATilde(4), 0).is_err());
    assert!(matches!(
        certificate_catalog(Id::ATilde(2), 1),
        Err(DivergenceError::BadParameters(_))
    ));
}

#[test]
fn verify_all_examples() {
    for (id, total) in [(Id::ATilde(5), 5), (Id::DTildeStar, 5), (Id::FTildeA, 5)] {
        let r = verify_all(id).unwrap();
        assert!(r.passed(), "{id}");
        assert_eq!((r.verified(), r.total()), (total, total));
    }
}

#[test]
fn e_tilde_nine_omega_eight_keeps_its_long_prefix() {
    let c = certificate_catalog(Id::ETilde9Node, 8).unwrap();
    assert_eq!(c.prefix().len(), 49);
    assert_eq!(&c.prefix()[..7], &[8, 7, 6, 5, 4, 3, 1]);
    verify_certificate(&graph(Id::ETilde9Node), &c).unwrap();
}

#[test]
fn certificates_round_trip_through_json() {
    let mut ids = InadmissibleFamilyId::minimal_instances();
    ids.push(Id::Tri(
        TriVariant::Three,
        TriParams {
            p1: 3,
            q1: 1,
            p2: 1,
            q2: 3,
        },
    ));
    for id in ids {
        for omega in 1..=id.node_count() {
            let cert = certificate_catalog(id, omega).unwrap();
            let text = certificate_to_json(id, omega, &cert);
            let (id2, omega2, back) = certificate_from_json(&text).unwrap();
            assert_eq!((id2, omega2), (id, omega));
            assert_eq!(back, cert, "{id} omega{omega}");
        }
    }
}

#[test]
fn json_rejects_bad_input() {
    let cert = certificate_catalog(Id::ATilde(3), 1).unwrap();
    let text = certificate_to_json(Id::ATilde(3), 1, &cert);
    let newer = text.replacen("\"version\": 1", "\"version\": 2", 1);
    assert!(matches!(
        certificate_from_json(&newer),
        Err(DivergenceError::Json(_))
    ));
    let garbled = text.replacen("\"1\"", "\"one\"", 1);
    assert!(matches!(
        certificate_from_json(&garbled),
        Err(DivergenceError::Json(_))
    ));
    assert!(certificate_from_json("{}").is_err());
}

#[test]
fn unrolled_sequences_stay_legal() {
    for id in [
        Id::ATilde(4),
        Id::GTilde(3),
        Id::Sq(2),
        Id::Tri(
            TriVariant::One,
            TriParams {
                p1: 1,
                q1: 2,
                p2: 2,
                q2: 1,
            },
        ),
    ] {
        let g = graph(id);
        for omega in 1..=id.node_count() {
            let cert = certificate_catalog(id, omega).unwrap();
            let Some(seq) = cert.unrolled(4) else {
                assert_eq!(cert.kind(), "kappa");
                continue;
            };
            let t = play_sequence(&g, cert.start(), &seq).unwrap();
            assert_eq!(
                t.outcome,
                GameOutcome::Partial { steps: seq.len() },
                "{id} omega{omega}"
            );
        }
    }
}
