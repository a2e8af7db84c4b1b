use clipnoise::codec::{compress_image, decompress, Bitstream};
use clipnoise::prob::{
    clipped_gaussian_pmf, method_entropy, pmf_entropy, predictive_residual_pmf, NoiseSpec,
};
use clipnoise::signal::{empirical_entropy, synthesize, SynthesisSpec};
use clipnoise::transform::predict_raster;
use clipnoise::{Image, Method};

fn noisy(sigma: f64, seed: u64) -> Image {
    let noise = NoiseSpec::new(sigma, 128, 8).unwrap();
    synthesize(&SynthesisSpec::new(512, 512, noise, seed).unwrap())
}

#[test]
fn predictive_costs_half_a_bit_more_at_sigma_8() {
    let img = noisy(8.0, 1);
    let n = img.len() as f64;
    let direct = compress_image(&img, Method::Direct, 0).unwrap().len() as f64;
    let pred = compress_image(&img, Method::Predictive, 0).unwrap().len() as f64;
    let expected = 0.5 * n / 8.0;
    assert!(
        ((pred - direct) - expected).abs() <= 0.1 * expected,
        "difference {} vs {expected}",
        pred - direct
    );
}

#[test]
fn sizes_track_model_entropy_at_sigma_8() {
    let img = noisy(8.0, 2);
    let spec = NoiseSpec::new(8.0, 128, 8).unwrap();
    let n = img.len() as f64;
    for m in Method::ALL {
        let bs = compress_image(&img, m, 4).unwrap();
        let predicted = (n * method_entropy(m, &spec) / 8.0).ceil() + 64.0;
        let err = (bs.len() as f64 - predicted).abs() / predicted;
        assert!(err <= 0.05, "{m}: {} vs {predicted}", bs.len());
        assert_eq!(decompress(&bs).unwrap(), img);
    }
}

#[test]
fn residual_statistics_match_exact_pmf() {
    let img = noisy(8.0, 3);
    let res = predict_raster(&img);
    let c = res.coeffs();
    // skip the first column, whose prediction comes from the row above and
    // so shares no sample with the left neighbour
    let values: Vec<i32> = c
        .chunks(img.width())
        .flat_map(|row| row[1..].iter().copied())
        .collect();
    let n = values.len() as f64;
    let mean = values.iter().map(|&v| v as f64).sum::<f64>() / n;
    let var = values
        .iter()
        .map(|&v| (v as f64 - mean).powi(2))
        .sum::<f64>()
        / (n - 1.0);
    let src = clipped_gaussian_pmf(&NoiseSpec::new(8.0, 128, 8).unwrap());
    let exact = predictive_residual_pmf(&src);
    assert!(
        (var / exact.variance() - 1.0).abs() < 0.02,
        "{var} vs {}",
        exact.variance()
    );
    assert!((var / 128.0 - 1.0).abs() < 0.03);
    assert!((empirical_entropy(&values) - pmf_entropy(&exact)).abs() < 0.05);
}

#[test]
fn serialized_streams_survive_a_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let img = noisy(20.0, 4);
    for m in Method::ALL {
        let path = dir.path().join(format!("{m}.cnl"));
        std::fs::write(&path, compress_image(&img, m, 3).unwrap().to_bytes()).unwrap();
        let bs = Bitstream::from_bytes(&std::fs::read(&path).unwrap()).unwrap();
        assert_eq!(decompress(&bs).unwrap(), img, "{m}");
    }
}

#[test]
fn entropy_is_symmetric_under_level_mirroring() {
    // x -> 2^b - 1 - x maps the floors of the wavelet low bands to ceilings,
    // so only the methods without them are exactly symmetric
    for sigma in [3.0, 40.0, 300.0] {
        for mu in [0, 17, 100] {
            let a = NoiseSpec::new(sigma, mu, 8).unwrap();
            let b = NoiseSpec::new(sigma, 255 - mu, 8).unwrap();
            for m in [Method::Direct, Method::Predictive] {
                let (ha, hb) = (method_entropy(m, &a), method_entropy(m, &b));
                assert!(
                    (ha - hb).abs() < 1e-9,
                    "{m} sigma={sigma} mu={mu}: {ha} vs {hb}"
                );
            }
        }
    }
}
