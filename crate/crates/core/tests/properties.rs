use numgame_core::divergence::*;
use numgame_core::rational::frac;
use numgame_core::strategies::random_dominant;
use numgame_core::{
    build_finite, build_inadmissible, fire, firing_map, legal_moves, play_sequence, run_game,
    run_outcome, DivergenceCertificate, DynkinType, GcmGraph, InadmissibleFamilyId, Position,
    Rational, Strategy as Play,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random GCM graph on 1..=6 nodes with amplitudes up to 3.
fn arb_graph() -> impl Strategy<Value = GcmGraph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec((any::<bool>(), 1i64..=3, 1i64..=3), pairs).prop_map(
            move |spec| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 1..=n {
                    for j in i + 1..=n {
                        let (on, p, q) = spec[k];
                        k += 1;
                        if on {
                            edges.push((i, j, p, q));
                        }
                    }
                }
                GcmGraph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn arb_case() -> impl Strategy<Value = (GcmGraph, Position, u64)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(arb_rational(), n).prop_map(Position::new),
            any::<u64>(),
        )
    })
}

fn apply(map: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    map.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(Rational::from_integer(0.into()), |s, (a, b)| s + a * b)
        })
        .collect()
}

proptest! {
    #[test]
    fn firing_map_is_an_involution((g, _, seed) in arb_case()) {
        let i = (seed as usize % g.n()) + 1;
        let f = firing_map(&g, i);
        let n = g.n();
        for k in 0..n {
            let e: Vec<Rational> = (0..n).map(|j| frac((j == k) as i64, 1)).collect();
            prop_assert_eq!(apply(&f, &apply(&f, &e)), e);
        }
    }

    #[test]
    fn fire_agrees_with_the_map((g, p, _) in arb_case()) {
        for i in legal_moves(&g, &p) {
            let fired = fire(&g, &p, i).unwrap();
            prop_assert_eq!(fired.values(), &apply(&firing_map(&g, i), p.values())[..]);
        }
    }

    #[test]
    fn firing_is_local((g, p, _) in arb_case()) {
        for i in legal_moves(&g, &p) {
            let fired = fire(&g, &p, i).unwrap();
            for j in 1..=g.n() {
                if j != i && g.m(i, j) == 0 {
                    prop_assert_eq!(fired.at(j), p.at(j));
                }
            }
            prop_assert_eq!(fired.at(i), &-p.at(i));
        }
    }

    #[test]
    fn legal_sequences_scale((g, p, seed) in arb_case(), r in (1i64..=9, 1i64..=9)) {
        let walk = run_game(&g, &p, &Play::RandomSeeded(seed), 25).fired();
        let r = frac(r.0, r.1);
        let base = play_sequence(&g, &p, &walk).unwrap();
        let scaled = play_sequence(&g, &p.scaled(&r), &walk).unwrap();
        prop_assert_eq!(scaled.last_position(), &base.last_position().scaled(&r));
    }

    #[test]
    fn replay_is_bit_exact((g, p, seed) in arb_case()) {
        let t = run_game(&g, &p, &Play::RandomSeeded(seed), 40);
        let again = play_sequence(&g, &p, &t.fired()).unwrap();
        for (a, b) in t.steps.iter().zip(&again.steps) {
            prop_assert_eq!(a, b);
        }
        prop_assert_eq!(again.last_position(), t.last_position());
    }

    #[test]
    fn legal_moves_are_the_positive_nodes((g, p, _) in arb_case()) {
        let moves = legal_moves(&g, &p);
        let want: Vec<usize> = (1..=g.n()).filter(|&i| *p.at(i) > frac(0, 1)).collect();
        prop_assert_eq!(moves, want);
    }
}

#[test]
fn lower_starts_still_converge() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let types = DynkinType::all_up_to(6);
    for _ in 0..100 {
        let ty = types[rng.gen_range(0..types.len())];
        let g = build_finite(ty);
        let hi = random_dominant(&mut rng, ty.rank);
        assert!(run_outcome(&g, &hi, &Play::GreedyMin, 10_000).is_converged());
        let lo = Position::new(
            hi.values()
                .iter()
                .map(|x| x - frac(rng.gen_range(0..50), rng.gen_range(1..=5)))
                .collect(),
        );
        assert!(
            run_outcome(&g, &lo, &Play::GreedyMin, 10_000).is_converged(),
            "{ty}"
        );
    }
}

fn parametric_catalog() -> Vec<(InadmissibleFamilyId, usize, ParametricLoopCertificate)> {
    let mut out = Vec::new();
    for id in InadmissibleFamilyId::minimal_instances() {
        for omega in 1..=id.node_count() {
            if let DivergenceCertificate::Parametric(c) = certificate_catalog(id, omega).unwrap() {
                out.push((id, omega, c));
            }
        }
    }
    out
}

#[test]
fn affine_legality_matches_numeric_replay() {
    for (id, omega, c) in parametric_catalog() {
        let g = build_inadmissible(id).unwrap();
        verify_parametric(&g, &c).unwrap();
        let rounds: Vec<usize> = std::iter::repeat_n(c.cycle.clone(), c.repeats)
            .flatten()
            .collect();
        for k in 0..=20 {
            let t = play_sequence(&g, &c.family.at(k), &rounds)
                .unwrap_or_else(|e| panic!("{id} omega{omega} k={k}: {e}"));
            assert_eq!(
                t.last_position(),
                &c.family.at(k + 1),
                "{id} omega{omega} k={k}"
            );
        }
    }
}

#[test]
fn certified_families_grow() {
    for (id, omega, c) in parametric_catalog() {
        assert!(c.grows(), "{id} omega{omega}");
    }
}

#[test]
fn witnesses_reproduce_their_targets() {
    for id in InadmissibleFamilyId::minimal_instances() {
        let g = build_inadmissible(id).unwrap();
        for omega in 1..=id.node_count() {
            let DivergenceCertificate::Region(c) = certificate_catalog(id, omega).unwrap() else {
                continue;
            };
            let (output, fired) = push_forms(&g, &c.cycle);
            for (w, target) in c.step_witnesses.iter().zip(&fired) {
                assert_eq!(&combine(&c.region, w, g.n()), target, "{id} omega{omega}");
                assert!(w.values().all(|x| *x >= frac(0, 1)));
            }
            for (w, k) in c.closure_witnesses.iter().zip(&c.region) {
                let target: Vec<Rational> = (0..g.n())
                    .map(|col| {
                        k.coeffs
                            .iter()
                            .zip(&output)
                            .fold(frac(0, 1), |s, (a, row)| s + a * &row[col])
                    })
                    .collect();
                assert_eq!(combine(&c.region, w, g.n()), target, "{id} omega{omega}");
            }
        }
    }
}
