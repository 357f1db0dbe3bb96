use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use regmap_core::hyperbolic_metrics::mirror_length;
use regmap_core::lattice_tori::{toroidal_patterns, ToroidalMapId, TorusFamily, TorusVariant};
use regmap_core::surface_families::{fermat, hurwitz};
use regmap_core::{
    build_flag_complex, mirror_census, verify_against_patterns, Link, MapType, DEFAULT_BUDGET,
};

fn tracing(c: &mut Criterion) {
    let klein = hurwitz(3).expect("K >= 1");
    let ext = klein.extended();
    c.bench_function("flag complex klein", |b| {
        b.iter(|| {
            build_flag_complex(black_box(&ext), klein.map_type, DEFAULT_BUDGET).expect("finite")
        })
    });
    let complex = build_flag_complex(&ext, klein.map_type, DEFAULT_BUDGET).expect("finite");
    c.bench_function("mirror census klein", |b| {
        b.iter(|| mirror_census(black_box(&complex)).expect("census"))
    });
    let f = fermat(5).expect("n >= 2");
    c.bench_function("verify fermat 5", |b| {
        b.iter(|| {
            verify_against_patterns(black_box(&f.presentation), f.map_type, DEFAULT_BUDGET)
                .expect("traced")
        })
    });
}

fn closed_forms(c: &mut Criterion) {
    let id = ToroidalMapId::new(TorusFamily::Square, TorusVariant::BB, 1000).expect("b >= 1");
    c.bench_function("square torus b=1000", |b| {
        b.iter(|| toroidal_patterns(black_box(id)).expect("torus"))
    });
    let t = MapType::new(3, 7).expect("valid type");
    c.bench_function("mirror length {3,7}", |b| {
        b.iter(|| mirror_length(black_box(Link::L010212), 3, t).expect("hyperbolic"))
    });
}

criterion_group!(benches, tracing, closed_forms);
criterion_main!(benches);
