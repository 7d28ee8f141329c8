use numgame_core::rational::int;
use numgame_core::strategies::*;
use numgame_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn t(f: Family, n: usize) -> DynkinType {
    DynkinType::new(f, n).unwrap()
}

fn sym(vals: &[i64]) -> Position {
    Position::from_ints(vals)
}

#[test]
fn lemma21_examples() {
    assert_eq!(lemma21_sequence(t(Family::A, 3)).unwrap(), vec![3, 2, 3]);
    assert_eq!(lemma21_sequence(t(Family::B, 3)).unwrap(), vec![3, 2, 3, 2]);
    assert_eq!(
        lemma21_sequence(t(Family::D, 4)).unwrap(),
        vec![3, 4, 2, 3, 4, 2]
    );
    assert!(lemma21_sequence(t(Family::A, 1)).is_err());
    assert!(lemma21_sequence(t(Family::E, 6)).is_err());

    let (a, b, c) = (5, 7, 11);
    let a3 = play_sequence(&build_finite(t(Family::A, 3)), &sym(&[a, b, c]), &[3, 2, 3]).unwrap();
    assert_eq!(a3.last_position(), &sym(&[a + b + c, -c, -b]));
    let b3 = play_sequence(
        &build_finite(t(Family::B, 3)),
        &sym(&[a, b, c]),
        &[3, 2, 3, 2],
    )
    .unwrap();
    assert_eq!(b3.last_position(), &sym(&[a + 2 * b + c, -b, -c]));
}

#[test]
fn lemma22_examples() {
    let a3 = lemma22_sequence(t(Family::A, 3)).unwrap();
    assert_eq!(a3.sequence, vec![3, 2, 3, 1, 2, 3]);
    assert_eq!(a3.expected_length, 6);
    assert_eq!(
        a3.terminal_rule.apply(&[int(1), int(2), int(3)]),
        vec![int(-3), int(-2), int(-1)]
    );

    let b2 = lemma22_sequence(t(Family::B, 2)).unwrap();
    assert_eq!(b2.sequence, vec![2, 1, 2, 1]);
    let played =
        play_sequence(&build_finite(t(Family::B, 2)), &sym(&[1, 1]), &b2.sequence).unwrap();
    assert_eq!(played.last_position(), &sym(&[-1, -1]));

    let d4 = lemma22_sequence(t(Family::D, 4)).unwrap();
    assert_eq!(d4.sequence, vec![3, 4, 2, 3, 4, 2, 1, 2, 3, 4, 2, 1]);
    assert_eq!(d4.expected_length, 12);
    let played = play_sequence(
        &build_finite(t(Family::D, 4)),
        &sym(&[2, 3, 5, 7]),
        &d4.sequence,
    )
    .unwrap();
    assert_eq!(
        played.outcome,
        GameOutcome::Converged {
            terminal: sym(&[-2, -3, -5, -7]),
            steps: 12
        }
    );
}

#[test]
fn odd_d_swaps_the_last_two() {
    let d5 = lemma22_sequence(t(Family::D, 5)).unwrap();
    let g = build_finite(t(Family::D, 5));
    let start = sym(&[1, 2, 3, 4, 5]);
    let played = play_sequence(&g, &start, &d5.sequence).unwrap();
    assert_eq!(played.last_position(), &sym(&[-1, -2, -3, -5, -4]));
    let greedy = run_outcome(&g, &start, &Strategy::GreedyMin, 1000);
    assert_eq!(
        greedy,
        GameOutcome::Converged {
            terminal: sym(&[-1, -2, -3, -5, -4]),
            steps: 20
        }
    );
}

#[test]
fn exceptional_examples() {
    assert_eq!(
        exceptional_sequence(t(Family::G, 2)).unwrap().sequence,
        vec![1, 2, 1, 2, 1, 2]
    );
    let f4 = exceptional_sequence(t(Family::F, 4)).unwrap();
    assert_eq!(f4.sequence.len(), 24);
    assert_eq!(&f4.sequence[..7], &[1, 2, 3, 4, 3, 2, 1]);
    let e7 = exceptional_sequence(t(Family::E, 7)).unwrap().sequence;
    let e8 = exceptional_sequence(t(Family::E, 8)).unwrap().sequence;
    assert_eq!((e7.len(), e8.len()), (63, 120));
    assert_eq!(&e8[..63], &e7[..]);
    assert_eq!(
        exceptional_sequence(t(Family::E, 6))
            .unwrap()
            .sequence
            .len(),
        36
    );
    assert!(exceptional_sequence(t(Family::A, 4)).is_err());
}

#[test]
fn e6_terminal_is_permuted() {
    let plan = exceptional_sequence(t(Family::E, 6)).unwrap();
    let played = play_sequence(
        &build_finite(t(Family::E, 6)),
        &sym(&[1, 2, 3, 4, 5, 6]),
        &plan.sequence,
    )
    .unwrap();
    assert_eq!(played.last_position(), &sym(&[-6, -2, -5, -4, -3, -1]));
}

#[test]
fn expected_length_examples() {
    assert_eq!(expected_length(t(Family::A, 4)), 10);
    assert_eq!(expected_length(t(Family::B, 5)), 25);
    assert_eq!(expected_length(t(Family::C, 5)), 25);
    assert_eq!(expected_length(t(Family::D, 6)), 30);
    assert_eq!(expected_length(t(Family::E, 8)), 120);
}

#[test]
fn plans_are_legal_and_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for ty in DynkinType::all_up_to(10) {
        let g = build_finite(ty);
        let plan = convergent_plan(ty);
        assert_eq!(plan.sequence.len(), plan.expected_length, "{ty}");
        for _ in 0..50 {
            let start = random_strongly_dominant(&mut rng, ty.rank);
            let played = play_sequence(&g, &start, &plan.sequence).unwrap();
            let want = Position::new(plan.terminal_rule.apply(start.values()));
            assert_eq!(
                played.outcome,
                GameOutcome::Converged {
                    terminal: want,
                    steps: expected_length(ty)
                },
                "{ty}"
            );
        }
    }
}

#[test]
fn block_sequences_reach_their_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for ty in DynkinType::all_up_to(10) {
        let Ok(seq) = lemma21_sequence(ty) else {
            continue;
        };
        let g = build_finite(ty);
        for _ in 0..10 {
            let start = random_strongly_dominant(&mut rng, ty.rank);
            let played = play_sequence(&g, &start, &seq).unwrap();
            let want = TerminalRule::BlockForm(ty).apply(start.values());
            assert_eq!(played.last_position().values(), &want[..], "{ty}");
        }
    }
}

#[test]
fn block_sequence_is_a_prefix_of_the_full_plan() {
    for ty in DynkinType::all_up_to(10) {
        let Ok(partial) = lemma21_sequence(ty) else {
            continue;
        };
        let full = lemma22_sequence(ty).unwrap().sequence;
        assert_eq!(&full[..partial.len()], &partial[..], "{ty}");
        assert_eq!(&full[partial.len()..], &block(ty, 1)[..], "{ty}");
    }
}

#[test]
fn probe_examples() {
    let b2 = build_finite(t(Family::B, 2));
    let r = strong_convergence_probe(&b2, &sym(&[2, 3]), 5, 1, 100);
    assert!(r.all_agree());
    assert_eq!(r.runs.len(), 7);
    assert_eq!(
        r.runs[0].1,
        GameOutcome::Converged {
            terminal: sym(&[-2, -3]),
            steps: 4
        }
    );

    let single = build_finite(t(Family::A, 1));
    let r = strong_convergence_probe(&single, &sym(&[5]), 3, 1, 100);
    assert!(r.all_agree());
    assert_eq!(
        r.runs[0].1,
        GameOutcome::Converged {
            terminal: sym(&[-5]),
            steps: 1
        }
    );

    let f4 = build_finite(t(Family::F, 4));
    let r = strong_convergence_probe(&f4, &sym(&[1, 2, 3, 4]), 10, 9, 1000);
    assert!(r.all_agree());
    assert_eq!(
        r.runs[0].1,
        GameOutcome::Converged {
            terminal: sym(&[-1, -2, -3, -4]),
            steps: 24
        }
    );
}

#[test]
fn probe_reports_disagreement_in_kind() {
    let cycle = build_inadmissible(InadmissibleFamilyId::ATilde(3)).unwrap();
    let r = strong_convergence_probe(&cycle, &Position::fundamental(3, 1), 4, 2, 200);
    assert!(r.kinds_agree);
    assert!(r.runs.iter().all(|(_, o)| o.is_exhausted()));
}

#[test]
fn fundamental_positions_converge() {
    for ty in DynkinType::all_up_to(10) {
        let g = build_finite(ty);
        for i in 1..=ty.rank {
            let o = run_outcome(
                &g,
                &Position::fundamental(ty.rank, i),
                &Strategy::GreedyMin,
                10_000,
            );
            assert!(o.is_converged(), "{ty} omega{i}");
        }
    }
}

#[test]
fn random_samplers_respect_their_ranges() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..200 {
        let p = random_strongly_dominant(&mut rng, 4);
        assert!(p.is_strongly_dominant());
        assert!(p
            .values()
            .iter()
            .all(|x| *x <= int(100) && *x.denom() <= 10.into()));
        let d = random_dominant(&mut rng, 4);
        assert!(d.is_dominant() && d.is_nonzero());
    }
}
