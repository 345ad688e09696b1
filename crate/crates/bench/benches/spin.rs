use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use weylspin::carter::sample_elliptic;
use weylspin::oracles::chevalley::{AdjointGroup, StructureConstants};
use weylspin::{
    enumerate_elliptic_classes, spin_signature, Budget, RootSystem, Strategy, TitsElement,
    WeylElement,
};
use weylspin_bench::{elliptic_elements, ty};

fn signatures(c: &mut Criterion) {
    let mut g = c.benchmark_group("spin_signature");
    for name in ["F4", "E6", "E7", "E8", "D8", "B9"] {
        let elements = elliptic_elements(ty(name), 64, 1);
        g.bench_function(name, |b| {
            b.iter(|| {
                for w in &elements {
                    black_box(spin_signature(w).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn tits_words(c: &mut Criterion) {
    let e8 = ty("E8");
    let w0 = WeylElement::longest(e8);
    let word = w0.reduced_word().letters;
    c.bench_function("tits/E8 longest element from word", |b| {
        b.iter(|| black_box(TitsElement::from_word(e8, &word).unwrap()))
    });
    c.bench_function("weyl/E8 reduced word of w0", |b| {
        b.iter(|| black_box(w0.reduced_word()))
    });
}

fn classes(c: &mut Criterion) {
    let mut g = c.benchmark_group("classes");
    g.sample_size(10);
    let budget = Budget::default();
    for (name, strategy) in [
        ("F4", Strategy::Exhaustive),
        ("E6", Strategy::Exhaustive),
        ("B9", Strategy::Diagram),
    ] {
        g.bench_function(format!("{name} {strategy}"), |b| {
            b.iter(|| {
                black_box(enumerate_elliptic_classes(ty(name), strategy, &budget, 0).unwrap())
            })
        });
    }
    let small = Budget {
        samples: 2_000,
        ..Budget::default()
    };
    g.bench_function("E8 sampling 2000", |b| {
        b.iter(|| black_box(sample_elliptic(ty("E8"), &small, 0).unwrap()))
    });
    g.finish();
}

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracles");
    g.sample_size(10);
    let e8 = RootSystem::build(ty("E8"));
    g.bench_function("E8 structure constants", |b| {
        b.iter(|| black_box(StructureConstants::compute(&e8).unwrap()))
    });
    let e6 = RootSystem::build(ty("E6"));
    g.bench_function("E6 adjoint group", |b| {
        b.iter(|| black_box(AdjointGroup::new(&e6).unwrap()))
    });
    let group = AdjointGroup::new(&e6).unwrap();
    let elements = elliptic_elements(ty("E6"), 8, 2);
    g.bench_function("E6 adjoint image of Tits lifts", |b| {
        b.iter_batched(
            || elements.clone(),
            |ws| {
                for w in ws {
                    black_box(group.tits_image(&TitsElement::lift(w)));
                }
            },
            BatchSize::SmallInput,
        )
    });
    g.finish();
}

criterion_group!(benches, signatures, tits_words, classes, oracles);
criterion_main!(benches);
