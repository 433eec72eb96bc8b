//! Complex Morlet band-pass filtering, amplitude envelopes and decimation.
//!
//! These are used both to preprocess recordings and inside the simulators.
//! The kernel is a complex sinusoid under a Gaussian envelope, truncated at
//! ±4σ and scaled so a unit real cosine at the center frequency comes out
//! with envelope 1.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tensor::{PairedDataset, Tensor};

/// Complex Morlet band-pass kernel.
#[derive(Debug, Clone)]
pub struct MorletKernel {
    pub f0_hz: f64,
    pub bandwidth_ms: f64,
    pub sample_rate_hz: f64,
    /// Odd-length symmetric-support taps.
    pub taps: Vec<Complex<f64>>,
}

impl MorletKernel {
    pub fn half_width(&self) -> usize {
        (self.taps.len() - 1) / 2
    }

    /// Magnitude response to a unit real cosine at frequency `f_hz`.
    pub fn gain(&self, f_hz: f64) -> f64 {
        let h_pos = self.transfer(f_hz);
        let h_neg = self.transfer(-f_hz);
        0.5 * (h_pos + h_neg).norm()
    }

    /// Discrete-time transfer function H(f) = Σ taps[m]·exp(-i2πfm/fs).
    fn transfer(&self, f_hz: f64) -> Complex<f64> {
        let half = self.half_width() as isize;
        let w = 2.0 * std::f64::consts::PI * f_hz / self.sample_rate_hz;
        let mut acc = Complex::new(0.0, 0.0);
        for (i, tap) in self.taps.iter().enumerate() {
            let m = i as isize - half;
            acc += tap * Complex::from_polar(1.0, -w * m as f64);
        }
        acc
    }
}

/// Builds a complex Morlet kernel truncated at ±4σ with unit gain at `f0_hz`.
pub fn morlet_kernel(f0_hz: f64, bandwidth_ms: f64, sample_rate_hz: f64) -> Result<MorletKernel> {
    if !(f0_hz > 0.0) || !(bandwidth_ms > 0.0) || !(sample_rate_hz > 0.0) {
        return Err(Error::Param(
            "f0, bandwidth and sample rate must be positive".into(),
        ));
    }
    if f0_hz >= sample_rate_hz / 2.0 {
        return Err(Error::Param(format!(
            "f0 = {f0_hz} Hz is at or above Nyquist ({} Hz)",
            sample_rate_hz / 2.0
        )));
    }
    let sigma_s = bandwidth_ms / 1000.0;
    let half = (4.0 * sigma_s * sample_rate_hz).ceil() as usize;
    let omega = 2.0 * std::f64::consts::PI * f0_hz / sample_rate_hz;
    let mut taps = Vec::with_capacity(2 * half + 1);
    for m in -(half as isize)..=(half as isize) {
        let t = m as f64 / sample_rate_hz;
        let env = (-t * t / (2.0 * sigma_s * sigma_s)).exp();
        taps.push(Complex::from_polar(env, omega * m as f64));
    }
    let mut kernel = MorletKernel {
        f0_hz,
        bandwidth_ms,
        sample_rate_hz,
        taps,
    };
    let g = kernel.gain(f0_hz);
    if !(g > 0.0) {
        return Err(Error::Numerical("degenerate kernel gain".into()));
    }
    for tap in kernel.taps.iter_mut() {
        *tap /= g;
    }
    Ok(kernel)
}

fn reflect(idx: isize, len: usize) -> usize {
    // Symmetric reflection without repeating the edge sample: x[-k] = x[k].
    let len = len as isize;
    let mut i = idx;
    loop {
        if i < 0 {
            i = -i;
        } else if i >= len {
            i = 2 * len - 2 - i;
        } else {
            return i as usize;
        }
    }
}

/// Convolves a real series with the kernel, reflect-padded, same length.
pub fn filter_analytic(series: &[f64], kernel: &MorletKernel) -> Result<Vec<Complex<f64>>> {
    if series.len() < kernel.taps.len() {
        return Err(Error::Length(format!(
            "series length {} shorter than kernel length {}",
            series.len(),
            kernel.taps.len()
        )));
    }
    Ok((0..series.len())
        .map(|t| filter_at(series, kernel, t))
        .collect())
}

/// Single output sample of the reflect-padded convolution.
fn filter_at(series: &[f64], kernel: &MorletKernel, t: usize) -> Complex<f64> {
    let half = kernel.half_width() as isize;
    let n = series.len();
    let mut acc = Complex::new(0.0, 0.0);
    for (i, tap) in kernel.taps.iter().enumerate() {
        let m = i as isize - half;
        let x = series[reflect(t as isize - m, n)];
        acc += tap * x;
    }
    acc
}

/// Elementwise modulus.
pub fn amplitude_envelope(z: &[Complex<f64>]) -> Vec<f64> {
    z.iter().map(|v| v.norm()).collect()
}

/// Keeps indices 0, factor, 2·factor, ...
pub fn decimate<T: Clone>(series: &[T], factor: usize) -> Result<Vec<T>> {
    if factor == 0 {
        return Err(Error::Param("decimation factor must be >= 1".into()));
    }
    Ok(series.iter().step_by(factor).cloned().collect())
}

/// Normalized autocorrelation (lag 0 = 1) of the kernel's amplitude
/// response, evaluated at a stride of `step` raw samples per lag.
pub fn kernel_autocorrelation(kernel: &MorletKernel, max_lag: usize, step: usize) -> Vec<f64> {
    let mags: Vec<f64> = kernel.taps.iter().map(|t| t.norm()).collect();
    let norm: f64 = mags.iter().map(|m| m * m).sum();
    (0..=max_lag)
        .map(|lag| {
            let shift = lag * step;
            if shift >= mags.len() {
                return 0.0;
            }
            let dot: f64 = mags[shift..]
                .iter()
                .zip(&mags[..mags.len() - shift])
                .map(|(a, b)| a * b)
                .sum();
            dot / norm
        })
        .collect()
}

/// Filtered amplitude envelope evaluated only at the kept decimation
/// indices. Values agree exactly with
/// `decimate(amplitude_envelope(filter_analytic(..)))`.
pub fn band_envelope_decimated(
    series: &[f64],
    kernel: &MorletKernel,
    factor: usize,
) -> Result<Vec<f64>> {
    if factor == 0 {
        return Err(Error::Param("decimation factor must be >= 1".into()));
    }
    if series.len() < kernel.taps.len() {
        return Err(Error::Length(format!(
            "series length {} shorter than kernel length {}",
            series.len(),
            kernel.taps.len()
        )));
    }
    Ok((0..series.len())
        .step_by(factor)
        .map(|t| filter_at(series, kernel, t).norm())
        .collect())
}

/// As `band_envelope_decimated` but keeps the complex analytic values.
pub fn analytic_decimated(
    series: &[f64],
    kernel: &MorletKernel,
    factor: usize,
) -> Result<Vec<Complex<f64>>> {
    if factor == 0 {
        return Err(Error::Param("decimation factor must be >= 1".into()));
    }
    if series.len() < kernel.taps.len() {
        return Err(Error::Length("series shorter than kernel".into()));
    }
    Ok((0..series.len())
        .step_by(factor)
        .map(|t| filter_at(series, kernel, t))
        .collect())
}

/// Full preprocessing pipeline: band-pass filter each channel, take the
/// amplitude envelope, decimate. Output sample rate is `fs / factor`.
pub fn preprocess(
    data: &PairedDataset,
    f0_hz: f64,
    bandwidth_ms: f64,
    factor: usize,
) -> Result<PairedDataset> {
    let kernel = morlet_kernel(f0_hz, bandwidth_ms, data.sample_rate_hz)?;
    let n = data.n_trials();
    let t_raw = data.n_times();
    let t_out = t_raw.div_ceil(factor);
    let mut regions = Vec::with_capacity(2);
    for k in 0..2 {
        let d = data.channels()[k];
        let rows: Vec<Vec<f64>> = (0..n * d)
            .into_par_iter()
            .map(|idx| {
                let (trial, ch) = (idx / d, idx % d);
                let series = data.channel_series(k, trial, ch);
                band_envelope_decimated(&series, &kernel, factor)
            })
            .collect::<Result<_>>()?;
        let mut out = vec![0f64; n * t_out * d];
        for (idx, row) in rows.iter().enumerate() {
            let (trial, ch) = (idx / d, idx % d);
            for (t, &v) in row.iter().enumerate() {
                out[(trial * t_out + t) * d + ch] = v;
            }
        }
        regions.push(Tensor::new(vec![n, t_out, d], out)?);
    }
    let region2 = regions.pop().expect("two regions");
    let region1 = regions.pop().expect("two regions");
    PairedDataset::new(region1, region2, data.sample_rate_hz / factor as f64)
}

/// Complex analytic projections of every channel at the decimated grid,
/// as flat row-major `[N, T_out, d]` buffers per region.
pub fn preprocess_analytic(
    data: &PairedDataset,
    f0_hz: f64,
    bandwidth_ms: f64,
    factor: usize,
) -> Result<[Vec<Complex<f64>>; 2]> {
    let kernel = morlet_kernel(f0_hz, bandwidth_ms, data.sample_rate_hz)?;
    let n = data.n_trials();
    let t_raw = data.n_times();
    let t_out = t_raw.div_ceil(factor);
    let mut out: [Vec<Complex<f64>>; 2] = [Vec::new(), Vec::new()];
    for k in 0..2 {
        let d = data.channels()[k];
        let rows: Vec<Vec<Complex<f64>>> = (0..n * d)
            .into_par_iter()
            .map(|idx| {
                let (trial, ch) = (idx / d, idx % d);
                let series = data.channel_series(k, trial, ch);
                analytic_decimated(&series, &kernel, factor)
            })
            .collect::<Result<_>>()?;
        let mut buf = vec![Complex::new(0.0, 0.0); n * t_out * d];
        for (idx, row) in rows.iter().enumerate() {
            let (trial, ch) = (idx / d, idx % d);
            for (t, &v) in row.iter().enumerate() {
                buf[(trial * t_out + t) * d + ch] = v;
            }
        }
        out[k] = buf;
    }
    Ok(out)
}
