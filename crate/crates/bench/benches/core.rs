use std::hint::black_box;

use clipnoise::codec::{compress_image, encode_symbols};
use clipnoise::prob::{clipped_gaussian_pmf, legall_band_pmfs, NoiseSpec};
use clipnoise::signal::{synthesize, SynthesisSpec};
use clipnoise::transform::{dwt2d, SymbolRange};
use clipnoise::{Method, Wavelet};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn noisy(sigma: f64) -> clipnoise::Image {
    let noise = NoiseSpec::new(sigma, 128, 8).unwrap();
    synthesize(&SynthesisSpec::new(512, 512, noise, 1).unwrap())
}

fn bench_range_coder(c: &mut Criterion) {
    let img = noisy(8.0);
    let values = img.to_i32();
    let mut g = c.benchmark_group("range_coder");
    g.throughput(Throughput::Elements(values.len() as u64));
    g.bench_function("encode_512x512_sigma8", |b| {
        b.iter(|| encode_symbols(black_box(&values), SymbolRange::new(0, 255)).unwrap())
    });
    g.finish();
}

fn bench_dwt2d(c: &mut Criterion) {
    let img = noisy(8.0);
    let mut g = c.benchmark_group("dwt2d_512x512_4_levels");
    for wavelet in [Wavelet::Haar, Wavelet::LeGall] {
        g.bench_function(format!("{wavelet:?}"), |b| {
            b.iter(|| dwt2d(black_box(&img), wavelet, 4).unwrap())
        });
    }
    g.finish();
}

fn bench_compress(c: &mut Criterion) {
    let img = noisy(30.0);
    let mut g = c.benchmark_group("compress_image_512x512");
    g.sample_size(20);
    for m in Method::ALL {
        g.bench_function(m.name(), |b| {
            b.iter(|| compress_image(black_box(&img), m, 4).unwrap())
        });
    }
    g.finish();
}

fn bench_legall_pmfs(c: &mut Criterion) {
    let mut g = c.benchmark_group("legall_band_pmfs");
    g.sample_size(10);
    for sigma in [8.0, 100.0, 1000.0] {
        let src = clipped_gaussian_pmf(&NoiseSpec::new(sigma, 128, 8).unwrap());
        g.bench_with_input(BenchmarkId::from_parameter(sigma), &src, |b, src| {
            b.iter(|| legall_band_pmfs(black_box(src)))
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    bench_range_coder,
    bench_dwt2d,
    bench_compress,
    bench_legall_pmfs
);
criterion_main!(benches);
