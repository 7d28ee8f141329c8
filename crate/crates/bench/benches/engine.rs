use criterion::{black_box, criterion_group, criterion_main, Criterion};
use numgame_core::divergence::{build_region_certificate, certificate_catalog, verify_certificate};
use numgame_core::strategies::strong_convergence_probe;
use numgame_core::{
    build_finite, build_inadmissible, classify_finite, run_game, run_outcome, verify_all,
    DivergenceCertificate, DynkinType, Family, InadmissibleFamilyId, Position, Strategy,
};

fn games(c: &mut Criterion) {
    let e8 = build_finite(DynkinType::new(Family::E, 8).unwrap());
    let start = Position::from_ints(&[3, 1, 4, 1, 5, 9, 2, 6]);
    c.bench_function("E8 greedy-min game", |b| {
        b.iter(|| run_game(&e8, black_box(&start), &Strategy::GreedyMin, 1000))
    });
    c.bench_function("E8 probe, 20 trials", |b| {
        b.iter(|| strong_convergence_probe(&e8, black_box(&start), 20, 7, 1000))
    });

    let sq = build_inadmissible(InadmissibleFamilyId::Sq(3)).unwrap();
    let omega = Position::fundamental(4, 1);
    c.bench_function("Sq3 divergent game, 10^4 firings", |b| {
        b.iter(|| run_outcome(&sq, black_box(&omega), &Strategy::GreedyMin, 10_000))
    });
}

fn certificates(c: &mut Criterion) {
    c.bench_function("verify_all Etilde9node", |b| {
        b.iter(|| verify_all(black_box(InadmissibleFamilyId::ETilde9Node)))
    });

    let id = InadmissibleFamilyId::GTilde(6);
    let g = build_inadmissible(id).unwrap();
    let cert = certificate_catalog(id, 1).unwrap();
    c.bench_function("verify Gtilde6 region", |b| {
        b.iter(|| verify_certificate(&g, black_box(&cert)))
    });
    if let DivergenceCertificate::Region(r) = cert {
        c.bench_function("build Gtilde6 witnesses", |b| {
            b.iter(|| {
                build_region_certificate(
                    &g,
                    r.region.clone(),
                    r.start.clone(),
                    r.prefix.clone(),
                    r.cycle.clone(),
                )
            })
        });
    }
}

fn classification(c: &mut Criterion) {
    let d12 = build_finite(DynkinType::new(Family::D, 12).unwrap());
    c.bench_function("classify D12", |b| {
        b.iter(|| classify_finite(black_box(&d12)))
    });
}

criterion_group!(benches, games, certificates, classification);
criterion_main!(benches);
