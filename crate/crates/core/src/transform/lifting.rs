//! One-dimensional integer lifting for the Haar (S-transform) and LeGall 5/3
//! wavelets.
//!
//! Samples at even positions (0-based) feed the low band and samples at odd
//! positions the high band, so a signal of length `n` splits into `⌈n/2⌉`
//! low and `⌊n/2⌋` high coefficients.

use crate::Wavelet;

/// `hp = b − a`, `lp = a + ⌊hp / 2⌋ = ⌊(a + b) / 2⌋` for each pair `(a, b)`.
/// A trailing unpaired sample is copied into the low band.
pub fn haar_forward(signal: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let pairs = signal.chunks_exact(2);
    let tail = pairs.remainder().first().copied();
    let (mut lp, hp): (Vec<i32>, Vec<i32>) = pairs
        .map(|p| {
            let d = p[1] - p[0];
            (p[0] + (d >> 1), d)
        })
        .unzip();
    lp.extend(tail);
    (lp, hp)
}

pub fn haar_inverse(lp: &[i32], hp: &[i32]) -> Vec<i32> {
    assert!(
        lp.len() == hp.len() || lp.len() == hp.len() + 1,
        "band lengths {} / {} do not come from one signal",
        lp.len(),
        hp.len()
    );
    let mut out = Vec::with_capacity(lp.len() + hp.len());
    for (&l, &d) in lp.iter().zip(hp) {
        let a = l - (d >> 1);
        out.push(a);
        out.push(a + d);
    }
    if lp.len() > hp.len() {
        out.push(lp[lp.len() - 1]);
    }
    out
}

/// LeGall 5/3 lifting with whole-sample symmetric extension:
///
/// ```text
/// hp[k] = x[2k+1] − ⌊(x[2k] + x[2k+2]) / 2⌋
/// lp[k] = x[2k]   + ⌊(hp[k−1] + hp[k]) / 4⌋
/// ```
///
/// A length-1 signal passes through as a single low coefficient.
pub fn legall_forward(signal: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let n = signal.len();
    if n < 2 {
        return (signal.to_vec(), Vec::new());
    }
    let x = signal;
    let n_hp = n / 2;
    let n_lp = n - n_hp;
    let even = |i: usize| if i < n { x[i] } else { x[n - 2] };
    let hp: Vec<i32> = (0..n_hp)
        .map(|k| x[2 * k + 1] - ((x[2 * k] + even(2 * k + 2)) >> 1))
        .collect();
    let lp = (0..n_lp)
        .map(|k| x[2 * k] + ((hp_at(&hp, k as isize - 1) + hp_at(&hp, k as isize)) >> 2))
        .collect();
    (lp, hp)
}

pub fn legall_inverse(lp: &[i32], hp: &[i32]) -> Vec<i32> {
    assert!(
        lp.len() == hp.len() || lp.len() == hp.len() + 1,
        "band lengths {} / {} do not come from one signal",
        lp.len(),
        hp.len()
    );
    let n = lp.len() + hp.len();
    if n < 2 {
        return lp.to_vec();
    }
    let mut x = vec![0; n];
    for (k, &l) in lp.iter().enumerate() {
        x[2 * k] = l - ((hp_at(hp, k as isize - 1) + hp_at(hp, k as isize)) >> 2);
    }
    for (k, &d) in hp.iter().enumerate() {
        let right = if 2 * k + 2 < n {
            x[2 * k + 2]
        } else {
            x[n - 2]
        };
        x[2 * k + 1] = d + ((x[2 * k] + right) >> 1);
    }
    x
}

/// Detail coefficient with symmetric extension at both ends.
fn hp_at(hp: &[i32], k: isize) -> i32 {
    if k < 0 {
        hp[0]
    } else {
        hp[(k as usize).min(hp.len() - 1)]
    }
}

pub fn forward(wavelet: Wavelet, signal: &[i32]) -> (Vec<i32>, Vec<i32>) {
    match wavelet {
        Wavelet::Haar => haar_forward(signal),
        Wavelet::LeGall => legall_forward(signal),
    }
}

pub fn inverse(wavelet: Wavelet, lp: &[i32], hp: &[i32]) -> Vec<i32> {
    match wavelet {
        Wavelet::Haar => haar_inverse(lp, hp),
        Wavelet::LeGall => legall_inverse(lp, hp),
    }
}
