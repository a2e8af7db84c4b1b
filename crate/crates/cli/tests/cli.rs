use std::path::Path;
use std::process::{Command, Output};

use clipnoise::signal::{to_pgm_bytes, write_pgm};
use clipnoise::Image;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn clipnoise(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clipnoise"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "exit {:?}: {}",
        o.status.code(),
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn theory_sweep_defaults() {
    let a = stdout(&clipnoise(&["sweep"]));
    assert!(a.starts_with("sigma,method,entropy_bits,predicted_bytes,actual_bytes\n"));
    let r = rows(&a);
    assert_eq!(r.len(), 240);
    assert!(r.iter().all(|row| row.len() == 5 && row[4].is_empty()));
    assert_eq!(r[0][1], "direct");
    assert_eq!(r[3][1], "legall");
    // no randomness in theory mode
    assert_eq!(a, stdout(&clipnoise(&["sweep"])));
}

#[test]
fn theory_sweep_to_file_with_method_subset() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let o = clipnoise(&[
        "sweep",
        "--points",
        "7",
        "--methods",
        "legall,direct",
        "--out",
        path_str(&out),
    ]);
    assert!(stdout(&o).is_empty());
    let r = rows(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(r.len(), 14);
    assert_eq!((r[0][1].as_str(), r[1][1].as_str()), ("direct", "legall"));
}

#[test]
fn simulate_is_reproducible_per_seed() {
    let args = [
        "sweep", "--mode", "simulate", "--width", "64", "--height", "48", "--levels", "3",
        "--points", "5", "--seed", "9",
    ];
    let a = stdout(&clipnoise(&args));
    assert_eq!(a, stdout(&clipnoise(&args)));
    let r = rows(&a);
    assert_eq!(r.len(), 20);
    assert!(r.iter().all(|row| row[4].parse::<u64>().unwrap() >= 64));
    let mut other = args.to_vec();
    other[args.len() - 1] = "10";
    assert_ne!(a, stdout(&clipnoise(&other)));
}

#[test]
fn simulate_direct_size_matches_prediction_at_sigma_8() {
    let o = clipnoise(&[
        "sweep",
        "--mode",
        "simulate",
        "--sigma-min",
        "8",
        "--sigma-max",
        "9",
        "--points",
        "2",
        "--methods",
        "direct",
    ]);
    let r = rows(&stdout(&o));
    let (predicted, actual): (f64, f64) = (r[0][3].parse().unwrap(), r[0][4].parse().unwrap());
    assert!(
        (actual - predicted).abs() / predicted <= 0.05,
        "{actual} vs {predicted}"
    );
}

#[test]
fn simulate_direct_curve_has_a_single_hump() {
    let o = clipnoise(&[
        "sweep",
        "--mode",
        "simulate",
        "--sigma-max",
        "1000",
        "--points",
        "16",
        "--methods",
        "direct",
    ]);
    let sizes: Vec<u64> = rows(&stdout(&o))
        .iter()
        .map(|r| r[4].parse().unwrap())
        .collect();
    assert_eq!(sizes[0], *sizes.iter().min().unwrap());
    let peak = sizes.iter().enumerate().max_by_key(|(_, &s)| s).unwrap().0;
    assert!(0 < peak && peak < sizes.len() - 1);
    assert!(sizes[..=peak].windows(2).all(|w| w[0] <= w[1]), "{sizes:?}");
    assert!(sizes[peak..].windows(2).all(|w| w[0] >= w[1]), "{sizes:?}");
}

#[test]
fn simulate_on_an_input_image() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ramp.pgm");
    let s = (0..40 * 30).map(|i| (i % 40 * 6) as u16).collect();
    write_pgm(&Image::new(40, 30, 8, s).unwrap(), &input).unwrap();
    let o = clipnoise(&[
        "sweep",
        "--mode",
        "simulate",
        "--input",
        path_str(&input),
        "--levels",
        "2",
        "--points",
        "3",
        "--sigma-min",
        "0.5",
        "--sigma-max",
        "50",
    ]);
    let r = rows(&stdout(&o));
    assert_eq!(r.len(), 12);
    for row in &r {
        let h: f64 = row[2].parse().unwrap();
        assert!(h > 0.0 && h <= 9.0);
    }
}

#[test]
fn compress_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (bd, method, levels) in [
        (8, "direct", "1"),
        (8, "predictive", "1"),
        (12, "haar", "3"),
        (16, "legall", "2"),
    ] {
        let max = (1u32 << bd) - 1;
        let s = (0..37 * 21)
            .map(|_| rng.random_range(0..=max) as u16)
            .collect();
        let img = Image::new(37, 21, bd, s).unwrap();
        let pgm = dir.path().join("in.pgm");
        let cnl = dir.path().join("x.cnl");
        let back = dir.path().join("out.pgm");
        write_pgm(&img, &pgm).unwrap();

        let out = stdout(&clipnoise(&[
            "compress",
            path_str(&pgm),
            path_str(&cnl),
            "--method",
            method,
            "--levels",
            levels,
        ]));
        assert!(
            out.contains(&format!("original {} bytes", to_pgm_bytes(&img).len())),
            "{out}"
        );
        stdout(&clipnoise(&["decompress", path_str(&cnl), path_str(&back)]));
        assert_eq!(
            std::fs::read(&pgm).unwrap(),
            std::fs::read(&back).unwrap(),
            "{method}"
        );
    }
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let pgm = dir.path().join("a.pgm");
    write_pgm(&Image::constant(4, 4, 8, 3).unwrap(), &pgm).unwrap();
    let out = dir.path().join("a.cnl");
    let code = |args: &[&str]| clipnoise(args).status.code();

    assert_eq!(
        code(&[
            "compress",
            path_str(&pgm),
            path_str(&out),
            "--method",
            "jpeg"
        ]),
        Some(2)
    );
    assert_eq!(code(&["sweep", "--points", "1"]), Some(2));
    assert_eq!(
        code(&["sweep", "--sigma-min", "3", "--sigma-max", "2"]),
        Some(2)
    );
    assert_eq!(code(&["sweep", "--input", path_str(&pgm)]), Some(2));
    assert_eq!(
        code(&[
            "sweep",
            "--mode",
            "simulate",
            "--input",
            path_str(&pgm),
            "--mu",
            "3"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["sweep", "--mode", "simulate", "--width", "8", "--height", "8"]),
        Some(2)
    );
    assert_eq!(code(&["frobnicate"]), Some(2));

    let missing = dir.path().join("missing.pgm");
    assert_eq!(
        code(&["compress", path_str(&missing), path_str(&out)]),
        Some(1)
    );
    assert_eq!(
        code(&["decompress", path_str(&pgm), path_str(&out)]),
        Some(1)
    );
    assert_eq!(
        code(&["sweep", "--mode", "simulate", "--input", path_str(&missing)]),
        Some(1)
    );
    let o = clipnoise(&[
        "sweep",
        "--out",
        path_str(&dir.path().join("no/such/dir.csv")),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}
